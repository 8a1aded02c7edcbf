"""Exact rational supporting-hyperplane certificates for positive face decisions.

A certificate is a coefficient vector c (one rational per vertex) together
with a right-hand side c0.  For a face containing the origin the emitted
hyperplane has c0 = 0 with c constant on components of H and strictly
decreasing along every leftover edge of G; for a face avoiding the origin
it has c0 = -1 with c stepping down by exactly one along edges of H and by
strictly less than one along the rest.  Verification is a direct exact
transcription of those conditions and accepts any valid alternative.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction

from .faces import (
    HComp,
    WeightFunction,
    build_hcomp,
    is_tilde_face,
    path_consistency,
    _bellman_ford,
    _scaled_weights,
)
from .graphs import Digraph, Subgraph


class NotAFaceError(ValueError):
    """Asked to certify a subgraph that fails the face criterion."""


class NotAdmissibleError(RuntimeError):
    """Internal consistency failure: a negative cycle despite an admissible input."""


def format_rational(x: Fraction) -> str:
    """Lowest-terms string with the sign on the numerator, e.g. "-1/3" or "2"."""
    return str(x)


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


@dataclass(frozen=True)
class Certificate:
    """Hyperplane coefficients c_1..c_n and right-hand side c0, all exact rationals."""

    c: tuple[Fraction, ...]
    c0: Fraction

    def to_json_dict(self) -> dict:
        return {"c": [format_rational(x) for x in self.c], "c0": format_rational(self.c0)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Certificate":
        return cls(tuple(parse_rational(x) for x in data["c"]), parse_rational(data["c0"]))


@dataclass(frozen=True)
class ShiftVector:
    """Per-component correction making every leftover edge inequality strict.

    Satisfies wd(e) + d[source] - d[target] > -1 for every edge of the
    contracted multigraph, checked exactly.
    """

    d: tuple[Fraction, ...]


def _sink_first_extension(hc: HComp) -> list[int]:
    """Labels 1..k with label(source) > label(target) along every contracted edge.

    Kahn's algorithm from the sinks up, ties broken by smallest component id.
    """
    k = hc.vertex_count
    outdeg = [0] * k
    sources_of: list[list[int]] = [[] for _ in range(k)]
    for e in hc.edges:
        outdeg[e.source] += 1
        sources_of[e.target].append(e.source)
    ready = [v for v in range(k) if outdeg[v] == 0]
    heapq.heapify(ready)
    label = [0] * k
    assigned = 0
    while ready:
        v = heapq.heappop(ready)
        assigned += 1
        label[v] = assigned
        for u in sources_of[v]:
            outdeg[u] -= 1
            if outdeg[u] == 0:
                heapq.heappush(ready, u)
    if assigned != k:
        raise NotAFaceError("contracted multigraph has a directed cycle")
    return label


def tilde_certificate(g: Digraph, h: Subgraph) -> Certificate:
    """Certificate for a face containing the origin; raises NotAFaceError otherwise.

    Coefficients come from a deterministic linear extension of the
    contracted multigraph; the full graph gets the all-ones vector.
    """
    if not is_tilde_face(g, h):
        raise NotAFaceError("subgraph does not define a face containing the origin")
    if h.is_full():
        return Certificate(tuple(Fraction(1) for _ in range(g.n)), Fraction(0))
    hc = build_hcomp(g, h)
    label = _sink_first_extension(hc)
    comp = hc.components.component
    return Certificate(tuple(Fraction(label[comp(v)]) for v in range(1, g.n + 1)), Fraction(0))


def solve_shift_vector(hc: HComp, w: WeightFunction) -> ShiftVector:
    """Shortest-path potentials satisfying the strict shift inequalities.

    Runs Bellman-Ford from a virtual zero-weight source over the edge
    weights wd(e) + 1 - 1/(m+1); admissibility guarantees no negative
    cycle, and the potentials leave slack at least 1/(m+1) on every edge.
    """
    dist, bad = _bellman_ford(hc, _scaled_weights(hc, w))
    if bad is not None:
        raise NotAdmissibleError("negative cycle found while solving the shift system")
    m1 = len(hc.edges) + 1
    return ShiftVector(tuple(Fraction(v, m1) for v in dist))


def q_certificate(g: Digraph, h: Subgraph) -> Certificate:
    """Certificate for a face avoiding the origin; raises NotAFaceError otherwise.

    Coefficients are the vertex weights shifted per component, with
    right-hand side -1.  The empty subgraph is accepted and certifies the
    empty face.
    """
    w = path_consistency(h)
    if w is None:
        raise NotAFaceError("subgraph is not path consistent")
    hc = build_hcomp(g, h)
    try:
        shift = solve_shift_vector(hc, w)
    except NotAdmissibleError as exc:
        raise NotAFaceError("subgraph is not admissible") from exc
    comp = hc.components.component
    c = tuple(Fraction(w[v]) + shift.d[comp(v)] for v in range(1, g.n + 1))
    return Certificate(c, Fraction(-1))


def verify_certificate(g: Digraph, h: Subgraph, cert: Certificate, contains_origin: bool) -> bool:
    """Exact check of the supporting-hyperplane conditions for the claimed face."""
    if len(cert.c) != g.n:
        return False
    c, c0 = cert.c, cert.c0
    if contains_origin:
        if c0 != 0:
            return False
        for i, (u, v) in enumerate(g.edges):
            if i in h.mask:
                if c[u - 1] != c[v - 1]:
                    return False
            elif c[u - 1] <= c[v - 1]:
                return False
        return True
    if c0 >= 0:
        return False
    for i, (u, v) in enumerate(g.edges):
        if i in h.mask:
            if c[u - 1] != c[v - 1] + c0:
                return False
        elif c[u - 1] <= c[v - 1] + c0:
            return False
    return True
