"""Cross-verification of the combinatorial face criteria against the hull oracle.

For a given ambient graph, every spanning subgraph is tested twice (with and
without the origin) through both routes; any disagreement is reported with a
minimal reproducer.  Positive decisions additionally have their emitted
certificates verified.  Ambient graphs come either from the caller, from
exhaustive enumeration of labeled DAGs, or from a seeded random generator.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from multiprocessing import Pool

from .certificates import q_certificate, tilde_certificate, verify_certificate
from .faces import is_q_face, is_tilde_face
from .graphs import Digraph, DirectedCycleError, Edge, Subgraph
from .hull import FaceLattice, descriptor_indices, enumerate_faces_bruteforce


@dataclass(frozen=True)
class Disagreement:
    n: int
    graph_edges: tuple[Edge, ...]
    subgraph_edges: tuple[Edge, ...]
    contains_origin: bool
    combinatorial: bool
    bruteforce: bool


@dataclass
class CheckReport:
    graphs: int = 0
    checks: int = 0
    certificates: int = 0
    disagreements: list[Disagreement] = field(default_factory=list)
    certificate_failures: list[Disagreement] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements and not self.certificate_failures

    def merge(self, other: "CheckReport") -> None:
        self.graphs += other.graphs
        self.checks += other.checks
        self.certificates += other.certificates
        self.disagreements.extend(other.disagreements)
        self.certificate_failures.extend(other.certificate_failures)


def check_graph(g: Digraph, lattice: FaceLattice | None = None) -> CheckReport:
    """Exhaustively compare both face predicates with the hull oracle on one graph."""
    if lattice is None:
        lattice = enumerate_faces_bruteforce(g)
    report = CheckReport(graphs=1)
    m = len(g.edges)
    for mask in range(1 << m):
        h = Subgraph(g, frozenset(i for i in range(m) if mask >> i & 1))
        for contains_origin in (True, False):
            expected = lattice.is_face(descriptor_indices(h, contains_origin))
            got = is_tilde_face(g, h) if contains_origin else is_q_face(g, h)
            report.checks += 1
            if got != expected:
                report.disagreements.append(
                    Disagreement(g.n, g.edges, h.edges, contains_origin, got, expected)
                )
                continue
            if got:
                cert = tilde_certificate(g, h) if contains_origin else q_certificate(g, h)
                report.certificates += 1
                if not verify_certificate(g, h, cert, contains_origin):
                    report.certificate_failures.append(
                        Disagreement(g.n, g.edges, h.edges, contains_origin, got, expected)
                    )
    return report


def check_graphs(graphs: list[Digraph], jobs: int = 1) -> CheckReport:
    """Run check_graph over many ambient graphs, optionally on a worker pool."""
    total = CheckReport()
    if jobs <= 1 or len(graphs) < 2:
        for g in graphs:
            total.merge(check_graph(g))
    else:
        chunk = max(1, len(graphs) // (jobs * 8))
        with Pool(jobs) as pool:
            for rep in pool.imap(check_graph, graphs, chunksize=chunk):
                total.merge(rep)
    return total


def all_dags(n: int) -> list[Digraph]:
    """Every labeled DAG on n vertices (1, 3, 25, 543, ... for n = 1, 2, 3, 4)."""
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    out = []
    for mask in range(1 << len(pairs)):
        edges = tuple(pairs[i] for i in range(len(pairs)) if mask >> i & 1)
        try:
            out.append(Digraph(n, edges))
        except DirectedCycleError:
            continue
    return out


def random_dag(rng: random.Random, n: int, max_edges: int | None = None) -> Digraph:
    """A random labeled DAG: random topological order, then a fair coin per pair.

    When an edge cap is given, draws are rejected until they fit.
    """
    while True:
        order = list(range(1, n + 1))
        rng.shuffle(order)
        edges = []
        for i in range(n):
            for j in range(i + 1, n):
                if rng.getrandbits(1):
                    edges.append((order[i], order[j]))
        if max_edges is None or len(edges) <= max_edges:
            return Digraph(n, tuple(edges))


def random_dags(seed: int, n: int, count: int, max_edges: int | None = None) -> list[Digraph]:
    rng = random.Random(seed)
    return [random_dag(rng, n, max_edges) for _ in range(count)]
