"""Directed acyclic graphs on vertices 1..n, spanning subgraphs, and the edge-list file format.

All types are immutable after construction and safe to share across workers.
Edge identity is positional: a subgraph is a subset of the parent's edge
indices, which keeps certificates and JSON output stable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Invalid graph input."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


class DirectedCycleError(GraphError):
    pass


class EdgeNotInParentError(GraphError):
    pass


class NotAlternatingError(GraphError):
    pass


class OverlappingPartsError(GraphError):
    pass


Edge = tuple[int, int]


def _check_acyclic(n: int, edges: Sequence[Edge]) -> None:
    indeg = [0] * (n + 1)
    succ: list[list[int]] = [[] for _ in range(n + 1)]
    for u, v in edges:
        indeg[v] += 1
        succ[u].append(v)
    queue = deque(v for v in range(1, n + 1) if indeg[v] == 0)
    seen = 0
    while queue:
        v = queue.popleft()
        seen += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if seen != n:
        raise DirectedCycleError(f"edge list contains a directed cycle among {n - seen} vertices")


@dataclass(frozen=True)
class Digraph:
    """A loop-free directed acyclic graph with vertex set {1, ..., n} and an ordered edge list.

    Any acyclic labeling is accepted; edges need not be oriented from a
    smaller to a larger vertex.
    """

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise VertexRangeError(f"vertex count must be positive, got {self.n}")
        seen: set[Edge] = set()
        for u, v in self.edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise VertexRangeError(f"edge ({u}, {v}) leaves the vertex range 1..{self.n}")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if (u, v) in seen:
                raise DuplicateEdgeError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
        _check_acyclic(self.n, self.edges)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def subgraph(self, edges: Iterable[Edge]) -> "Subgraph":
        """Subgraph from explicit edges, each of which must exist in this graph."""
        mask = set()
        for e in edges:
            e = (int(e[0]), int(e[1]))
            idx = self.edge_index.get(e)
            if idx is None:
                raise EdgeNotInParentError(f"edge {e} is not an edge of the parent graph")
            if idx in mask:
                raise DuplicateEdgeError(f"duplicate edge {e}")
            mask.add(idx)
        return Subgraph(self, frozenset(mask))

    def full_subgraph(self) -> "Subgraph":
        return Subgraph(self, frozenset(range(len(self.edges))))

    def empty_subgraph(self) -> "Subgraph":
        return Subgraph(self, frozenset())


def validate(n: int, edge_list: Iterable[Sequence[int]]) -> Digraph:
    """Validate raw input and return a Digraph.

    Raises SelfLoopError, DuplicateEdgeError, VertexRangeError or
    DirectedCycleError on bad input.
    """
    return Digraph(int(n), tuple((int(u), int(v)) for u, v in edge_list))


@dataclass(frozen=True)
class Subgraph:
    """A spanning subgraph of a parent Digraph, encoded as a set of parent edge indices.

    The vertex set is always the parent's full vertex set.
    """

    parent: Digraph
    mask: frozenset[int]

    def __post_init__(self) -> None:
        m = len(self.parent.edges)
        for i in self.mask:
            if not (0 <= i < m):
                raise EdgeNotInParentError(f"edge index {i} out of range for parent with {m} edges")

    @property
    def n(self) -> int:
        return self.parent.n

    @cached_property
    def indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.mask))

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(self.parent.edges[i] for i in self.indices)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def is_full(self) -> bool:
        return len(self.mask) == len(self.parent.edges)

    def complement_indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(len(self.parent.edges)) if i not in self.mask)


GraphLike = Digraph | Subgraph


@dataclass(frozen=True)
class ComponentStructure:
    """Connected components of an underlying undirected graph.

    Component ids are 0..count-1, ordered by smallest member vertex.
    """

    component_of: tuple[int, ...]
    count: int

    def component(self, v: int) -> int:
        return self.component_of[v - 1]

    @cached_property
    def members(self) -> tuple[tuple[int, ...], ...]:
        groups: list[list[int]] = [[] for _ in range(self.count)]
        for v, c in enumerate(self.component_of, start=1):
            groups[c].append(v)
        return tuple(tuple(g) for g in groups)


def undirected_components(g: GraphLike) -> ComponentStructure:
    """Components of the underlying undirected graph; isolated vertices are singletons."""
    n = g.n
    adj: list[list[int]] = [[] for _ in range(n + 1)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    comp = [-1] * (n + 1)
    count = 0
    for s in range(1, n + 1):
        if comp[s] >= 0:
            continue
        comp[s] = count
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if comp[w] < 0:
                    comp[w] = count
                    queue.append(w)
        count += 1
    return ComponentStructure(tuple(comp[1:]), count)


def is_alternating(g: GraphLike) -> bool:
    """True iff no vertex is both the sink of one edge and the source of another."""
    has_in = [False] * (g.n + 1)
    has_out = [False] * (g.n + 1)
    for u, v in g.edges:
        has_out[u] = True
        has_in[v] = True
    return not any(has_in[v] and has_out[v] for v in range(1, g.n + 1))


def bipartition(g: GraphLike) -> tuple[frozenset[int], frozenset[int]]:
    """Split the vertices of an alternating graph into all-source and all-sink parts.

    Every edge runs from L to R.  Isolated vertices are assigned to L, a
    convention the characterizations never depend on.
    """
    if not is_alternating(g):
        raise NotAlternatingError("graph is not alternating")
    has_in = [False] * (g.n + 1)
    for _, v in g.edges:
        has_in[v] = True
    left = frozenset(v for v in range(1, g.n + 1) if not has_in[v])
    right = frozenset(v for v in range(1, g.n + 1) if has_in[v])
    return left, right


def is_transitively_closed(g: GraphLike) -> bool:
    """True iff (i,j) and (j,k) being edges forces (i,k) to be an edge."""
    edge_set = g.edge_set
    out_of: dict[int, list[int]] = {}
    for u, v in g.edges:
        out_of.setdefault(u, []).append(v)
    for i, j in g.edges:
        for k in out_of.get(j, ()):
            if (i, k) not in edge_set:
                return False
    return True


def complete_graph(n: int) -> Digraph:
    """K_n: every edge (i, j) with i < j, in lexicographic order."""
    return Digraph(n, tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))


def induced(g: Digraph, vertices: Iterable[int]) -> Subgraph:
    """Subgraph on the parent's edges with both endpoints inside the given set."""
    s = set(vertices)
    return Subgraph(g, frozenset(i for i, (u, v) in enumerate(g.edges) if u in s and v in s))


def alternating_induced(g: Digraph, left: Iterable[int], right: Iterable[int]) -> Subgraph:
    """Subgraph G_{L,R}: the parent's edges with source in L and target in R."""
    ls, rs = set(left), set(right)
    if ls & rs:
        raise OverlappingPartsError(f"parts overlap in {sorted(ls & rs)}")
    return Subgraph(g, frozenset(i for i, (u, v) in enumerate(g.edges) if u in ls and v in rs))


# --- edge-list file format -------------------------------------------------
#
# First line "n m", then m lines "u v" (1-indexed).  Subgraph files use the
# same format and may only list edges of the parent.


def format_edge_list(g: GraphLike) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def _parse_lines(text: str) -> tuple[int, list[Edge]]:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows:
        raise GraphError("empty edge-list input")
    header = rows[0]
    if len(header) != 2:
        raise GraphError(f"expected header 'n m', got {' '.join(header)!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise GraphError(f"bad header {' '.join(header)!r}") from exc
    if len(rows) - 1 != m:
        raise GraphError(f"header declares {m} edges but {len(rows) - 1} follow")
    edges = []
    for row in rows[1:]:
        if len(row) != 2:
            raise GraphError(f"bad edge line {' '.join(row)!r}")
        try:
            edges.append((int(row[0]), int(row[1])))
        except ValueError as exc:
            raise GraphError(f"bad edge line {' '.join(row)!r}") from exc
    return n, edges


def parse_digraph(text: str) -> Digraph:
    n, edges = _parse_lines(text)
    return validate(n, edges)


def parse_subgraph(text: str, parent: Digraph) -> Subgraph:
    n, edges = _parse_lines(text)
    if n != parent.n:
        raise GraphError(f"subgraph has {n} vertices but the parent has {parent.n}")
    return parent.subgraph(edges)


def load_digraph(path) -> Digraph:
    with open(path, "r", encoding="ascii") as fh:
        return parse_digraph(fh.read())


def load_subgraph(path, parent: Digraph) -> Subgraph:
    with open(path, "r", encoding="ascii") as fh:
        return parse_subgraph(fh.read(), parent)


def save_edge_list(g: GraphLike, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_edge_list(g))
