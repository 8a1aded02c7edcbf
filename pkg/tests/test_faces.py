import random

import pytest
from hypothesis import given, settings, strategies as st

from rootpoly.faces import (
    ConflictObstruction,
    CycleObstruction,
    InadmissibleCycleObstruction,
    LoopObstruction,
    WeightFunction,
    build_hcomp,
    is_admissible,
    is_q_face,
    is_tilde_face,
    loopless_partition,
    path_consistency,
    q_dimension_alternating,
    q_obstruction,
    tilde_dimension,
    tilde_obstruction,
    weight_decrease,
)
from rootpoly.graphs import (
    Digraph,
    NotAlternatingError,
    Subgraph,
    is_alternating,
    undirected_components,
    validate,
)


def all_subgraphs(g):
    m = len(g.edges)
    for mask in range(1 << m):
        yield Subgraph(g, frozenset(i for i in range(m) if mask >> i & 1))


class TestHComp:
    def test_k3_path_contracts_to_loop(self, k3):
        h = k3.subgraph([(1, 2), (2, 3)])
        hc = build_hcomp(k3, h)
        assert hc.vertex_count == 1
        assert len(hc.edges) == 1
        e = hc.edges[0]
        assert e.source == e.target == 0 and e.g_edge == (1, 3)

    def test_square_pyramid_diagonal(self, square_graph):
        h = square_graph.subgraph([(1, 3), (2, 4)])
        hc = build_hcomp(square_graph, h)
        assert hc.vertex_count == 2
        comp = hc.components.component
        assert comp(1) == comp(3) == 0 and comp(2) == comp(4) == 1
        arcs = {(e.source, e.target, e.g_edge) for e in hc.edges}
        assert arcs == {(0, 1, (1, 4)), (1, 0, (2, 3))}

    def test_full_subgraph_contracts_to_edgeless(self, k4):
        hc = build_hcomp(k4, k4.full_subgraph())
        assert hc.edges == ()
        assert hc.vertex_count == 1

    def test_labels_biject_onto_leftover_edges(self, k4):
        h = k4.subgraph([(1, 2), (3, 4)])
        hc = build_hcomp(k4, h)
        assert sorted(e.label for e in hc.edges) == sorted(set(range(6)) - set(h.mask))


class TestTildeFace:
    def test_single_edge_of_triangle(self, k3):
        assert is_tilde_face(k3, k3.subgraph([(1, 2)]))

    def test_diagonal_of_rhombus(self, k3):
        assert not is_tilde_face(k3, k3.subgraph([(1, 3)]))

    def test_whole_graph(self, square_graph):
        assert is_tilde_face(square_graph, square_graph.full_subgraph())

    def test_empty_subgraph_of_complete(self, k4):
        assert is_tilde_face(k4, k4.empty_subgraph())

    @given(st.data())
    @settings(max_examples=40)
    def test_full_and_empty_always_faces(self, data):
        n = data.draw(st.integers(1, 5))
        order = data.draw(st.permutations(list(range(1, n + 1))))
        pairs = [(order[i], order[j]) for i in range(n) for j in range(i + 1, n)]
        picks = data.draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
        g = Digraph(n, tuple(e for e, k in zip(pairs, picks) if k))
        assert is_tilde_face(g, g.full_subgraph())
        assert is_tilde_face(g, g.empty_subgraph())

    def test_obstruction_agrees_with_predicate(self, k3, square_graph):
        for g in (k3, square_graph):
            for h in all_subgraphs(g):
                assert (tilde_obstruction(g, h) is None) == is_tilde_face(g, h)

    def test_loop_obstruction(self, k3):
        obs = tilde_obstruction(k3, k3.subgraph([(1, 2), (2, 3)]))
        assert isinstance(obs, LoopObstruction)
        assert obs.edge == (1, 3)

    def test_cycle_obstruction(self, k3):
        obs = tilde_obstruction(k3, k3.subgraph([(1, 3)]))
        assert isinstance(obs, CycleObstruction)
        assert set(obs.edges) == {(1, 2), (2, 3)}

    def test_obstructions_are_checkable(self, k3, k4, square_graph):
        # A loop witness joins two vertices of one component; a cycle witness
        # walks the components cyclically.  Both use only leftover edges.
        for g in (k3, k4, square_graph):
            for h in all_subgraphs(g):
                obs = tilde_obstruction(g, h)
                if obs is None:
                    continue
                comps = undirected_components(h)
                if isinstance(obs, LoopObstruction):
                    u, v = obs.edge
                    assert obs.edge in g.edge_set and obs.edge not in h.edge_set
                    assert comps.component(u) == comps.component(v)
                else:
                    arcs = [(comps.component(u), comps.component(v)) for u, v in obs.edges]
                    for (_, b), (c, _) in zip(arcs, arcs[1:] + arcs[:1]):
                        assert b == c
                    assert all(e in g.edge_set and e not in h.edge_set for e in obs.edges)


class TestLooplessPartition:
    def test_matching_in_k4(self, k4):
        parts = loopless_partition(k4, k4.subgraph([(1, 2), (3, 4)]))
        assert parts == (frozenset({1, 2}), frozenset({3, 4}))

    def test_path_in_k3_has_loop(self, k3):
        assert loopless_partition(k3, k3.subgraph([(1, 2), (2, 3)])) is None

    def test_full_subgraph_gives_components(self, square_graph):
        parts = loopless_partition(square_graph, square_graph.full_subgraph())
        assert parts == (frozenset({1, 2, 3, 4}),)

    def test_agrees_with_loop_scan(self, k4):
        for h in all_subgraphs(k4):
            hc = build_hcomp(k4, h)
            has_loop = any(e.source == e.target for e in hc.edges)
            assert (loopless_partition(k4, h) is None) == has_loop


class TestPathConsistency:
    def test_triangle_not_consistent(self, k3):
        assert path_consistency(k3) is None

    def test_crossing_matching(self):
        h = validate(4, [(1, 3), (2, 4)])
        w = path_consistency(h)
        assert w.values == (0, 0, 1, 1)

    def test_alternating_graphs_are_consistent(self, square_graph):
        w = path_consistency(square_graph)
        assert w is not None
        assert all(w[v] == 0 for v in (1, 2)) and all(w[v] == 1 for v in (3, 4))

    def test_weight_steps_up_along_edges(self, k4):
        for h in all_subgraphs(k4):
            w = path_consistency(h)
            if w is None:
                continue
            for u, v in h.edges:
                assert w[u] + 1 == w[v]
            for part in undirected_components(h).members:
                assert min(w[v] for v in part) == 0

    def test_longer_chain(self):
        h = validate(5, [(1, 2), (2, 3), (3, 4), (4, 5)])
        assert path_consistency(h).values == (0, 1, 2, 3, 4)

    def test_backward_labelled_edge(self):
        h = validate(3, [(3, 1), (1, 2)])
        assert path_consistency(h).values == (1, 2, 0)


class TestWeightDecrease:
    def test_square_pyramid_example(self, square_graph):
        h = square_graph.subgraph([(1, 3), (2, 4)])
        w = path_consistency(h)
        hc = build_hcomp(square_graph, h)
        by_edge = {e.g_edge: weight_decrease(w, e) for e in hc.edges}
        assert by_edge == {(1, 4): -1, (2, 3): -1}

    def test_skipped_chain_loop(self, k3):
        h = k3.subgraph([(1, 2), (2, 3)])
        w = WeightFunction((0, 1, 2))
        hc = build_hcomp(k3, h)
        (loop,) = hc.edges
        assert weight_decrease(w, loop) == -2

    def test_weight_sources_give_zero(self, k4):
        h = k4.subgraph([(1, 2), (3, 4)])
        w = path_consistency(h)
        hc = build_hcomp(k4, h)
        e13 = next(e for e in hc.edges if e.g_edge == (1, 3))
        assert weight_decrease(w, e13) == 0


class TestAdmissibility:
    def test_square_pyramid_diagonal_inadmissible(self, square_graph):
        h = square_graph.subgraph([(1, 3), (2, 4)])
        w = path_consistency(h)
        assert not is_admissible(square_graph, h, w)

    def test_k3_single_skew_edge_admissible(self, k3):
        h = k3.subgraph([(1, 3)])
        w = path_consistency(h)
        assert is_admissible(k3, h, w)

    def test_acyclic_contraction_vacuous(self, k3):
        h = k3.subgraph([(1, 2)])
        w = path_consistency(h)
        assert is_admissible(k3, h, w)

    def test_shift_invariance(self, k4, square_graph):
        # Shifting the weights by a per-component constant never changes the
        # verdict: each component enters a cycle equally as source and target.
        rng = random.Random(7)
        for g in (k4, square_graph):
            for h in all_subgraphs(g):
                w = path_consistency(h)
                if w is None:
                    continue
                comps = undirected_components(h)
                base = is_admissible(g, h, w)
                for _ in range(3):
                    shifts = [rng.randint(-5, 5) for _ in range(comps.count)]
                    shifted = WeightFunction(
                        tuple(w[v] + shifts[comps.component(v)] for v in range(1, g.n + 1))
                    )
                    assert is_admissible(g, h, shifted) == base


class TestQFace:
    def test_triangle_is_not_a_face_of_its_own_hull(self, k3):
        assert not is_q_face(k3, k3.full_subgraph())

    def test_ggp_pair_in_k4(self, k4):
        assert is_q_face(k4, k4.subgraph([(1, 2), (3, 4)]))
        assert is_q_face(k4, k4.subgraph([(1, 2), (1, 4), (3, 4)]))

    def test_square_is_a_face_of_the_pyramid(self, square_graph):
        assert is_q_face(square_graph, square_graph.full_subgraph())

    def test_empty_subgraph_is_the_empty_face(self, k3):
        assert is_q_face(k3, k3.empty_subgraph())

    def test_obstruction_agrees_with_predicate(self, k3, k4, square_graph):
        for g in (k3, k4, square_graph):
            for h in all_subgraphs(g):
                assert (q_obstruction(g, h) is None) == is_q_face(g, h)

    def test_conflict_obstruction_for_triangle(self, k3):
        obs = q_obstruction(k3, k3.full_subgraph())
        assert isinstance(obs, ConflictObstruction)
        assert obs.vertex == 3
        assert obs.existing != obs.implied

    def test_cycle_obstruction_for_diagonal(self, square_graph):
        obs = q_obstruction(square_graph, square_graph.subgraph([(1, 3), (2, 4)]))
        assert isinstance(obs, InadmissibleCycleObstruction)
        assert set(obs.edges) == {(1, 4), (2, 3)}
        assert obs.total == -2 and obs.length == 2

    def test_cycle_obstructions_violate_the_bound(self, k4, square_graph):
        # Each reported cycle must be independently checkable.
        for g in (k4, square_graph):
            for h in all_subgraphs(g):
                obs = q_obstruction(g, h)
                if isinstance(obs, InadmissibleCycleObstruction):
                    w = path_consistency(h)
                    total = sum(w[u] - w[v] for u, v in obs.edges)
                    assert total == obs.total
                    assert total <= -obs.length

    def test_obstructions_on_random_graphs(self):
        from rootpoly.crosscheck import random_dags

        witnesses = 0
        for g in random_dags(4242, 7, 8, max_edges=9):
            for h in all_subgraphs(g):
                qo = q_obstruction(g, h)
                assert (tilde_obstruction(g, h) is None) == is_tilde_face(g, h)
                assert (qo is None) == is_q_face(g, h)
                if isinstance(qo, InadmissibleCycleObstruction):
                    witnesses += 1
                    w = path_consistency(h)
                    total = sum(w[u] - w[v] for u, v in qo.edges)
                    assert total == qo.total and total <= -qo.length
        assert witnesses > 0

    def test_transitively_closed_forces_alternating(self, k4):
        for h in all_subgraphs(k4):
            if is_q_face(k4, h):
                assert is_alternating(h)

    def test_relabeling_invariance(self):
        # The criteria are orientation-intrinsic: permuting vertex labels
        # never changes either answer.
        from rootpoly.crosscheck import random_dags

        rng = random.Random(31)
        for g in random_dags(31, 5, 6, max_edges=8):
            perm = list(range(1, g.n + 1))
            rng.shuffle(perm)
            relabel = {v: perm[v - 1] for v in range(1, g.n + 1)}
            g2 = Digraph(g.n, tuple((relabel[u], relabel[v]) for u, v in g.edges))
            for h in all_subgraphs(g):
                h2 = g2.subgraph([(relabel[u], relabel[v]) for u, v in h.edges])
                assert is_tilde_face(g, h) == is_tilde_face(g2, h2)
                assert is_q_face(g, h) == is_q_face(g2, h2)

    def test_edge_reversal_invariance(self):
        # Negating every point maps the polytope onto the reversed graph's
        # polytope, so faces correspond exactly.
        from rootpoly.crosscheck import random_dags

        for g in random_dags(37, 5, 6, max_edges=8):
            g2 = Digraph(g.n, tuple((v, u) for u, v in g.edges))
            for h in all_subgraphs(g):
                h2 = Subgraph(g2, h.mask)
                assert is_tilde_face(g, h) == is_tilde_face(g2, h2)
                assert is_q_face(g, h) == is_q_face(g2, h2)


class TestDimensions:
    def test_rhombus(self, k3):
        assert tilde_dimension(k3) == 2

    def test_square_face(self, square_graph):
        assert q_dimension_alternating(square_graph) == 2

    def test_edgeless_origin(self):
        assert tilde_dimension(validate(3, [])) == 0

    def test_non_alternating_rejected(self, k3):
        with pytest.raises(NotAlternatingError):
            q_dimension_alternating(k3)
