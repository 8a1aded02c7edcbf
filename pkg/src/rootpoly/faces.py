"""Combinatorial face criteria for root polytopes of a DAG.

Two questions are decided for a spanning subgraph H of G:

* does conv{0, e_i - e_j : (i,j) in H} cut out a face of the polytope of G
  (the "origin" question) -- answered by looplessness and acyclicity of the
  contracted multigraph; and
* does conv{e_i - e_j : (i,j) in H} cut out a face (the "no origin"
  question) -- answered by path consistency plus an integer cycle condition
  on the contracted multigraph ("admissibility").

Negative answers come with small checkable witnesses used by the CLI.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import (
    ComponentStructure,
    Digraph,
    Edge,
    GraphLike,
    NotAlternatingError,
    Subgraph,
    is_alternating,
    undirected_components,
)


@dataclass(frozen=True)
class HCompEdge:
    """One edge of the contracted multigraph.

    ``source``/``target`` are component ids of H's undirected components;
    ``label`` is the index in E(G) of the underlying edge of E(G)\\E(H), and
    ``g_edge`` its endpoints.
    """

    source: int
    target: int
    label: int
    g_edge: Edge


@dataclass(frozen=True)
class HComp:
    """The multigraph obtained by contracting each undirected component of H.

    Carries one labelled edge per element of E(G)\\E(H); loops and parallel
    edges are permitted.
    """

    components: ComponentStructure
    edges: tuple[HCompEdge, ...]

    @property
    def vertex_count(self) -> int:
        return self.components.count


@dataclass(frozen=True)
class WeightFunction:
    """Integer vertex weights of a path-consistent graph, indexed by vertex.

    Along every subgraph edge (i,j) the weight steps up by one, and on each
    undirected component the minimum is 0, attained exactly at the weight
    sources.
    """

    values: tuple[int, ...]

    def __getitem__(self, v: int) -> int:
        return self.values[v - 1]


@dataclass(frozen=True)
class FaceDescriptor:
    """A face of the polytope of G: a subgraph plus an origin flag.

    Every face has exactly one such encoding, with the subgraph spanned by
    the non-origin vertices present in the face.
    """

    subgraph: Subgraph
    contains_origin: bool


# --- obstruction witnesses ---------------------------------------------------


@dataclass(frozen=True)
class LoopObstruction:
    """A G-edge joining two vertices of the same component of H: a loop in the contraction."""

    edge: Edge


@dataclass(frozen=True)
class CycleObstruction:
    """G-edges labelling a directed cycle of the contracted multigraph."""

    edges: tuple[Edge, ...]


@dataclass(frozen=True)
class ConflictObstruction:
    """A vertex receiving two different weight labels, so H is not path consistent."""

    vertex: int
    existing: int
    implied: int
    edge: Edge


@dataclass(frozen=True)
class InadmissibleCycleObstruction:
    """A directed cycle of the contraction whose total weight decrease is <= -length."""

    edges: tuple[Edge, ...]
    total: int

    @property
    def length(self) -> int:
        return len(self.edges)


TildeObstruction = LoopObstruction | CycleObstruction
QObstruction = ConflictObstruction | InadmissibleCycleObstruction


# --- contraction -------------------------------------------------------------


def build_hcomp(g: Digraph, h: Subgraph) -> HComp:
    """Contract each undirected component of H; label leftover G-edges."""
    comps = undirected_components(h)
    edges = []
    for i, (u, v) in enumerate(g.edges):
        if i in h.mask:
            continue
        edges.append(HCompEdge(comps.component(u), comps.component(v), i, (u, v)))
    return HComp(comps, tuple(edges))


def _find_loop(hc: HComp) -> HCompEdge | None:
    for e in hc.edges:
        if e.source == e.target:
            return e
    return None


def _is_acyclic(hc: HComp) -> bool:
    k = hc.vertex_count
    indeg = [0] * k
    succ: list[list[int]] = [[] for _ in range(k)]
    for e in hc.edges:
        indeg[e.target] += 1
        succ[e.source].append(e.target)
    queue = deque(v for v in range(k) if indeg[v] == 0)
    seen = 0
    while queue:
        v = queue.popleft()
        seen += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == k


def _find_directed_cycle(hc: HComp) -> list[HCompEdge] | None:
    """First directed cycle of the multigraph in DFS order, loops included."""
    loop = _find_loop(hc)
    if loop is not None:
        return [loop]
    k = hc.vertex_count
    adj: list[list[int]] = [[] for _ in range(k)]
    for idx, e in enumerate(hc.edges):
        adj[e.source].append(idx)
    color = [0] * k  # 0 unvisited, 1 on stack, 2 done
    entered_by: dict[int, int] = {}
    for root in range(k):
        if color[root]:
            continue
        color[root] = 1
        stack: list[tuple[int, int]] = [(root, 0)]
        while stack:
            v, ptr = stack[-1]
            if ptr < len(adj[v]):
                stack[-1] = (v, ptr + 1)
                idx = adj[v][ptr]
                t = hc.edges[idx].target
                if color[t] == 0:
                    color[t] = 1
                    entered_by[t] = idx
                    stack.append((t, 0))
                elif color[t] == 1:
                    cycle = [idx]
                    x = v
                    while x != t:
                        pe = entered_by[x]
                        cycle.append(pe)
                        x = hc.edges[pe].source
                    cycle.reverse()
                    return [hc.edges[i] for i in cycle]
            else:
                color[v] = 2
                stack.pop()
    return None


# --- the origin question -----------------------------------------------------


def is_tilde_face(g: Digraph, h: Subgraph) -> bool:
    """True iff the origin-containing subpolytope of H is a face: contraction loopless and acyclic."""
    hc = build_hcomp(g, h)
    return _find_loop(hc) is None and _is_acyclic(hc)


def tilde_obstruction(g: Digraph, h: Subgraph) -> TildeObstruction | None:
    """A loop or directed cycle of the contraction, or None when H passes."""
    hc = build_hcomp(g, h)
    loop = _find_loop(hc)
    if loop is not None:
        return LoopObstruction(loop.g_edge)
    cycle = _find_directed_cycle(hc)
    if cycle is not None:
        return CycleObstruction(tuple(e.g_edge for e in cycle))
    return None


def loopless_partition(g: Digraph, h: Subgraph) -> tuple[frozenset[int], ...] | None:
    """The vertex partition realising H as a disjoint union of induced subgraphs, if any.

    Present exactly when the contraction is loopless; the parts are the
    undirected components of H.
    """
    comps = undirected_components(h)
    for i, (u, v) in enumerate(g.edges):
        if i not in h.mask and comps.component(u) == comps.component(v):
            return None
    return tuple(frozenset(part) for part in comps.members)


# --- path consistency and weights ---------------------------------------------


def _label_vertices(h: GraphLike) -> tuple[list[int], ConflictObstruction | None]:
    """Breadth-first weight labelling; reports the first revisit conflict."""
    n = h.n
    adj: list[list[tuple[int, int, Edge]]] = [[] for _ in range(n + 1)]
    for u, v in h.edges:
        adj[u].append((v, 1, (u, v)))
        adj[v].append((u, -1, (u, v)))
    w = [0] * (n + 1)
    seen = [False] * (n + 1)
    for s in range(1, n + 1):
        if seen[s]:
            continue
        seen[s] = True
        w[s] = 0
        queue = deque([s])
        members = [s]
        while queue:
            v = queue.popleft()
            for x, step, edge in adj[v]:
                implied = w[v] + step
                if not seen[x]:
                    seen[x] = True
                    w[x] = implied
                    members.append(x)
                    queue.append(x)
                elif w[x] != implied:
                    return w, ConflictObstruction(x, w[x], implied, edge)
        base = min(w[v] for v in members)
        if base:
            for v in members:
                w[v] -= base
    return w, None


def path_consistency(h: GraphLike) -> WeightFunction | None:
    """The weight function of H, normalised to 0 at weight sources, or None.

    H is path consistent exactly when the breadth-first labelling that steps
    +1 along each edge and -1 against it never revisits a vertex with a
    different value.
    """
    w, conflict = _label_vertices(h)
    if conflict is not None:
        return None
    return WeightFunction(tuple(w[1:]))


def path_conflict(h: GraphLike) -> ConflictObstruction | None:
    """The first labelling conflict, or None when H is path consistent."""
    _, conflict = _label_vertices(h)
    return conflict


def weight_decrease(w: WeightFunction, e: HCompEdge) -> int:
    """Weight drop along the G-edge labelling a contracted edge: w(source) - w(target)."""
    u, v = e.g_edge
    return w[u] - w[v]


# --- admissibility -----------------------------------------------------------
#
# Admissibility asks every directed cycle C of the contraction to satisfy
# sum of weight decreases > -|C|, i.e. the weighting wd(e) + 1 has no cycle
# of total <= 0.  Cycle totals are integers, so after scaling by (m + 1) and
# subtracting 1 per edge the bad cycles are exactly the negative ones, which
# Bellman-Ford finds with integer arithmetic.


def _scaled_weights(hc: HComp, w: WeightFunction) -> list[int]:
    m1 = len(hc.edges) + 1
    return [(weight_decrease(w, e) + 1) * m1 - 1 for e in hc.edges]


def _bellman_ford(hc: HComp, weights: list[int]) -> tuple[list[int], list[HCompEdge] | None]:
    """Shortest-walk potentials from a virtual zero-weight source to every vertex.

    Returns (potentials, negative_cycle); the potentials are in units of
    1/(m+1) and only meaningful when no negative cycle exists.
    """
    k = hc.vertex_count
    dist = [0] * k
    pred: list[int | None] = [None] * k
    for _ in range(k):
        changed = False
        for idx, e in enumerate(hc.edges):
            nd = dist[e.source] + weights[idx]
            if nd < dist[e.target]:
                dist[e.target] = nd
                pred[e.target] = idx
                changed = True
        if not changed:
            return dist, None
    for idx, e in enumerate(hc.edges):
        if dist[e.source] + weights[idx] < dist[e.target]:
            pred[e.target] = idx
            # Walk the predecessor chain; within k+1 steps it must revisit.
            order: list[int] = []
            position: dict[int, int] = {}
            x = e.target
            while x not in position:
                position[x] = len(order)
                order.append(x)
                back = pred[x]
                if back is None:
                    raise AssertionError("predecessor chain broke before reaching a cycle")
                x = hc.edges[back].source
            cycle_vertices = order[position[x]:]
            cycle = [pred[v] for v in cycle_vertices]
            cycle_edges = [hc.edges[i] for i in reversed(cycle)]  # type: ignore[index]
            return dist, cycle_edges
    return dist, None


def is_admissible(g: Digraph, h: Subgraph, w: WeightFunction) -> bool:
    """True iff every directed cycle of the contraction has weight-decrease total > -length."""
    hc = build_hcomp(g, h)
    _, bad = _bellman_ford(hc, _scaled_weights(hc, w))
    return bad is None


def admissibility_obstruction(g: Digraph, h: Subgraph, w: WeightFunction) -> InadmissibleCycleObstruction | None:
    """A violating directed cycle with its weight-decrease total, or None."""
    hc = build_hcomp(g, h)
    _, bad = _bellman_ford(hc, _scaled_weights(hc, w))
    if bad is None:
        return None
    total = sum(weight_decrease(w, e) for e in bad)
    if total > -len(bad):
        raise AssertionError("extracted cycle does not violate admissibility")
    return InadmissibleCycleObstruction(tuple(e.g_edge for e in bad), total)


# --- the no-origin question ----------------------------------------------------


def is_q_face(g: Digraph, h: Subgraph) -> bool:
    """True iff the origin-free subpolytope of H is a face: H path consistent and admissible.

    The empty subgraph encodes the empty face and answers True.
    """
    w = path_consistency(h)
    if w is None:
        return False
    return is_admissible(g, h, w)


def q_obstruction(g: Digraph, h: Subgraph) -> QObstruction | None:
    """A path-consistency conflict or an inadmissible cycle, or None when H passes."""
    w, conflict = _label_vertices(h)
    if conflict is not None:
        return conflict
    return admissibility_obstruction(g, h, WeightFunction(tuple(w[1:])))


# --- dimensions ----------------------------------------------------------------


def tilde_dimension(h: GraphLike) -> int:
    """Dimension n - r of the origin-containing polytope, r = undirected components."""
    return h.n - undirected_components(h).count


def q_dimension_alternating(h: GraphLike) -> int:
    """Dimension n - r - 1 of the origin-free polytope of an alternating graph."""
    if not is_alternating(h):
        raise NotAlternatingError("dimension formula requires an alternating graph")
    return h.n - undirected_components(h).count - 1
