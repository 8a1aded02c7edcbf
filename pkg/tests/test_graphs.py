import pytest
from hypothesis import given, strategies as st

from rootpoly.graphs import (
    Digraph,
    DirectedCycleError,
    DuplicateEdgeError,
    EdgeNotInParentError,
    GraphError,
    NotAlternatingError,
    OverlappingPartsError,
    SelfLoopError,
    VertexRangeError,
    alternating_induced,
    bipartition,
    complete_graph,
    format_edge_list,
    induced,
    is_alternating,
    is_transitively_closed,
    parse_digraph,
    parse_subgraph,
    undirected_components,
    validate,
)


@st.composite
def dags(draw, max_n=6, p_skip=False):
    n = draw(st.integers(min_value=1, max_value=max_n))
    order = draw(st.permutations(list(range(1, n + 1))))
    pairs = [(order[i], order[j]) for i in range(n) for j in range(i + 1, n)]
    picks = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Digraph(n, tuple(e for e, keep in zip(pairs, picks) if keep))


class TestValidate:
    def test_triangle(self):
        g = validate(3, [(1, 2), (1, 3), (2, 3)])
        assert g.n == 3 and g.edges == ((1, 2), (1, 3), (2, 3))

    def test_two_cycle_rejected(self):
        with pytest.raises(DirectedCycleError):
            validate(2, [(1, 2), (2, 1)])

    def test_square_pyramid_graph_valid(self):
        g = validate(4, [(1, 3), (1, 4), (2, 3), (2, 4)])
        assert len(g.edges) == 4

    def test_longer_cycle_rejected(self):
        with pytest.raises(DirectedCycleError):
            validate(3, [(1, 2), (2, 3), (3, 1)])

    def test_self_loop(self):
        with pytest.raises(SelfLoopError):
            validate(2, [(1, 1)])

    def test_duplicate_edge(self):
        with pytest.raises(DuplicateEdgeError):
            validate(3, [(1, 2), (1, 2)])

    def test_vertex_out_of_range(self):
        with pytest.raises(VertexRangeError):
            validate(2, [(1, 3)])
        with pytest.raises(VertexRangeError):
            validate(2, [(0, 1)])

    def test_nonpositive_vertex_count(self):
        with pytest.raises(VertexRangeError):
            validate(0, [])

    def test_arbitrary_acyclic_labeling_accepted(self):
        g = validate(3, [(3, 1), (3, 2), (1, 2)])
        assert len(g.edges) == 3


class TestSerialization:
    def test_round_trip_triangle(self, k3):
        assert parse_digraph(format_edge_list(k3)) == k3

    def test_subgraph_round_trip(self, k3):
        h = k3.subgraph([(1, 2), (2, 3)])
        assert parse_subgraph(format_edge_list(h), k3) == h

    def test_subgraph_vertex_count_must_match(self, k3):
        with pytest.raises(GraphError):
            parse_subgraph("2 1\n1 2\n", k3)

    def test_edge_not_in_parent(self, k3):
        with pytest.raises(EdgeNotInParentError):
            parse_subgraph("3 1\n2 1\n", k3)

    def test_bad_header(self):
        with pytest.raises(GraphError):
            parse_digraph("3\n")
        with pytest.raises(GraphError):
            parse_digraph("3 2\n1 2\n")

    @given(dags())
    def test_round_trip_random(self, g):
        assert parse_digraph(format_edge_list(g)) == g


class TestComponents:
    def test_two_matching_edges(self):
        g = validate(4, [(1, 2), (3, 4)])
        c = undirected_components(g)
        assert c.count == 2
        assert c.members == ((1, 2), (3, 4))

    def test_edgeless(self):
        c = undirected_components(validate(3, []))
        assert c.count == 3

    def test_crossing_matching(self):
        c = undirected_components(validate(4, [(1, 3), (2, 4)]))
        assert c.count == 2
        assert c.members == ((1, 3), (2, 4))

    def test_ids_deterministic(self):
        c = undirected_components(validate(5, [(4, 5), (1, 2)]))
        assert c.component(1) == 0 and c.component(4) == 2 and c.component(3) == 1

    @given(dags())
    def test_reversing_edges_preserves_components(self, g):
        rev = Digraph(g.n, tuple((v, u) for u, v in g.edges))
        assert undirected_components(g) == undirected_components(rev)


class TestAlternating:
    def test_square_graph(self, square_graph):
        assert is_alternating(square_graph)

    def test_triangle_not(self, k3):
        assert not is_alternating(k3)

    def test_empty(self):
        assert is_alternating(validate(3, []))

    def test_bipartition_two_sources(self):
        g = validate(3, [(1, 3), (2, 3)])
        assert bipartition(g) == (frozenset({1, 2}), frozenset({3}))

    def test_bipartition_square(self, square_graph):
        assert bipartition(square_graph) == (frozenset({1, 2}), frozenset({3, 4}))

    def test_bipartition_triangle_raises(self, k3):
        with pytest.raises(NotAlternatingError):
            bipartition(k3)

    def test_isolated_vertices_go_left(self):
        g = validate(4, [(2, 3)])
        left, right = bipartition(g)
        assert 1 in left and 4 in left

    @given(dags())
    def test_bipartition_edges_run_left_to_right(self, g):
        if not is_alternating(g):
            return
        left, right = bipartition(g)
        assert left | right == set(range(1, g.n + 1))
        assert not (left & right)
        for u, v in g.edges:
            assert u in left and v in right


class TestTransitivelyClosed:
    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_complete_graphs(self, n):
        assert is_transitively_closed(complete_graph(n))

    def test_path_not_closed(self):
        assert not is_transitively_closed(validate(3, [(1, 2), (2, 3)]))

    def test_alternating_vacuously_closed(self, square_graph):
        assert is_transitively_closed(square_graph)


class TestInduced:
    def test_alternating_induced_k5(self):
        h = alternating_induced(complete_graph(5), {1, 3}, {2, 5})
        assert h.edge_set == {(1, 2), (1, 5), (3, 5)}

    def test_alternating_induced_k4(self):
        h = alternating_induced(complete_graph(4), {1, 3}, {2, 4})
        assert h.edge_set == {(1, 2), (1, 4), (3, 4)}

    def test_empty_left_part(self, k4):
        assert alternating_induced(k4, set(), {1, 2}).edge_set == frozenset()

    def test_overlap_rejected(self, k4):
        with pytest.raises(OverlappingPartsError):
            alternating_induced(k4, {1, 2}, {2, 3})

    @given(dags(), st.sets(st.integers(1, 6)), st.sets(st.integers(1, 6)))
    def test_alternating_induced_is_alternating(self, g, left, right):
        left = {v for v in left if v <= g.n}
        right = {v for v in right if v <= g.n} - left
        assert is_alternating(alternating_induced(g, left, right))

    def test_induced_on_subset(self, k4):
        assert induced(k4, {1, 2, 4}).edge_set == {(1, 2), (1, 4), (2, 4)}

    def test_complete_graph_edge_order(self):
        assert complete_graph(3).edges == ((1, 2), (1, 3), (2, 3))
