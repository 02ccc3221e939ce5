import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from distspec.enumeration import all_connected_graphs, is_isomorphic
from distspec.families import broom, complete, complete_bipartite, cycle, path, star
from distspec.graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    add_edge,
    bipartition,
    complement,
    degree_summary,
    delete_edge,
    diameter,
    distance_matrix,
    eccentricities,
    from_edges,
    is_connected,
    is_regular,
    is_semiregular,
    is_triangle_and_quadrangle_free,
    wiener,
    zagreb_m1,
)

from oracles import floyd_warshall, has_odd_cycle


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, b in zip(pairs, bits) if b])


def connected_graphs(max_n=7):
    return [g for n in range(1, max_n + 1) for g in all_connected_graphs(n)]


class TestConstruction:
    def test_k2(self):
        g = from_edges(2, [(0, 1)])
        assert g.n == 2 and g.m == 1 and g.has_edge(1, 0)

    def test_path(self):
        g = from_edges(4, [(0, 1), (1, 2), (2, 3)])
        assert g == path(4)

    def test_duplicates_collapse(self):
        assert from_edges(4, [(0, 1), (0, 1), (1, 0)]).m == 1

    def test_self_loop_rejected(self):
        with pytest.raises(GraphError, match=r"\(2, 2\)"):
            from_edges(3, [(0, 1), (2, 2)])

    def test_out_of_range_rejected(self):
        with pytest.raises(GraphError, match="outside"):
            from_edges(3, [(0, 3)])

    def test_asymmetric_masks_rejected(self):
        with pytest.raises(GraphError):
            Graph(2, [0b10, 0])


class TestConnectivity:
    @pytest.mark.parametrize(
        "g, expected",
        [(complete(4), True), (Graph(2, [0, 0]), False), (path(7), True), (Graph(1, [0]), True)],
    )
    def test_is_connected(self, g, expected):
        assert is_connected(g) is expected

    def test_disconnected_distance_names_pair(self):
        g = from_edges(4, [(0, 1), (2, 3)])
        with pytest.raises(DisconnectedGraphError) as err:
            distance_matrix(g)
        assert err.value.pair == (0, 2)


class TestDistances:
    def test_p3(self):
        assert distance_matrix(path(3)).d.tolist() == [[0, 1, 2], [1, 0, 1], [2, 1, 0]]

    def test_complete(self):
        d = distance_matrix(complete(6)).d
        assert (d == 1 - np.eye(6, dtype=int)).all()

    def test_p4_row_sums(self):
        assert distance_matrix(path(4)).row_sums.tolist() == [6, 4, 4, 6]

    @pytest.mark.parametrize("g, d", [(complete(5), 1), (path(4), 3), (cycle(5), 2)])
    def test_diameter(self, g, d):
        assert diameter(g) == d

    def test_c5_eccentricities(self):
        assert eccentricities(cycle(5)) == (2,) * 5

    def test_invariants_exhaustive(self):
        for g in connected_graphs(7):
            d = g.distances.d
            assert (np.diag(d) == 0).all()
            assert (d == d.T).all()
            assert ((d == 1) == (g.adjacency == 1)).all()
            assert (d[:, :, None] <= d[:, None, :] + d[None, :, :].transpose(0, 2, 1)).all()
            assert (d == floyd_warshall(g.n, list(g.edges()))).all()
            assert 2 * wiener(g) == int(g.distances.row_sums.sum())

    @settings(max_examples=40, deadline=None)
    @given(st.integers(2, 60), st.integers(0, 10**6))
    def test_random_graphs_match_floyd_warshall(self, n, seed):
        from distspec.families import random_connected

        g = random_connected(n, min(1.0, 3.0 / n + 0.05), seed=seed)
        d = g.distances.d
        assert (d == floyd_warshall(n, list(g.edges()))).all()
        for i in range(n):
            assert (d[i][:, None] <= d[i][None, :] + d).all()

    def test_diameter_two_identity(self):
        for g in connected_graphs(7):
            d = g.distances.d
            identity = 2 * np.ones_like(d) - 2 * np.eye(g.n, dtype=int) - g.adjacency
            small = bool((d <= 2).all())
            assert small == (diameter(g) <= 2)
            assert small == bool((d == identity).all())


class TestDegrees:
    def test_regular(self):
        ds = degree_summary(complete(4))
        assert (ds.max1, ds.max2, ds.min1, ds.min2) == (3, 3, 3, 3)

    def test_star(self):
        ds = degree_summary(star(4))
        assert (ds.max1, ds.max2, ds.min1, ds.min2) == (3, 1, 1, 1)

    def test_broom(self):
        ds = degree_summary(broom(6, 3))
        assert (ds.max1, ds.max2) == (3, 2)

    def test_single_vertex_rejected(self):
        with pytest.raises(GraphError):
            degree_summary(Graph(1, [0]))


class TestBipartition:
    def test_even_cycle(self):
        bp = bipartition(cycle(6))
        assert (bp.p, bp.q) == (3, 3) and bp.side[0] == 0

    def test_odd_cycle(self):
        assert bipartition(cycle(5)) is None

    def test_k23(self):
        bp = bipartition(complete_bipartite(2, 3))
        assert (bp.p, bp.q, bp.max_a, bp.min_a, bp.max_b, bp.min_b) == (2, 3, 3, 3, 2, 2)

    def test_against_brute_force_colouring(self):
        for g in connected_graphs(7):
            if g.n < 2:
                continue
            assert (bipartition(g) is None) == has_odd_cycle(g.n, list(g.edges()))

    def test_every_edge_crosses(self):
        for g in connected_graphs(7):
            bp = g.bipartition if g.n >= 2 else None
            if bp is None:
                continue
            assert all(bp.side[u] != bp.side[v] for u, v in g.edges())
            assert 1 <= bp.min_a <= bp.max_a <= bp.q and 1 <= bp.min_b <= bp.max_b <= bp.p


class TestRegularity:
    def test_c5(self):
        assert is_regular(cycle(5))

    def test_k23(self):
        g = complete_bipartite(2, 3)
        assert is_semiregular(g) and not is_regular(g)

    def test_p4(self):
        assert not is_regular(path(4)) and not is_semiregular(path(4))


class TestIndices:
    def test_wiener(self):
        assert wiener(complete(7)) == 21
        assert wiener(path(3)) == 4
        assert wiener(path(4)) == 10

    @pytest.mark.parametrize("g, m1", [(complete(4), 36), (path(4), 10), (cycle(5), 20)])
    def test_zagreb(self, g, m1):
        assert zagreb_m1(g) == m1


class TestGirth:
    @pytest.mark.parametrize(
        "g, expected",
        [(cycle(5), True), (cycle(4), False), (cycle(3), False), (broom(7, 3), True), (path(2), True)],
    )
    def test_examples(self, g, expected):
        assert is_triangle_and_quadrangle_free(g) is expected

    def test_matches_short_cycle_search(self):
        for g in connected_graphs(7):
            a = g.adjacency
            a2 = a @ a
            has_triangle = bool((a2 * a).any())
            has_quad = any(a2[i, j] >= 2 for i in range(g.n) for j in range(g.n) if i != j)
            assert is_triangle_and_quadrangle_free(g) == (not has_triangle and not has_quad)


class TestComplementAndEdits:
    def test_complete_to_empty(self):
        assert complement(complete(5)).m == 0

    def test_c5_self_complementary(self):
        assert is_isomorphic(complement(cycle(5)), cycle(5))

    def test_c4(self):
        assert sorted(complement(cycle(4)).edges()) == [(0, 2), (1, 3)]

    @settings(max_examples=100, deadline=None)
    @given(graphs())
    def test_involution_and_edge_count(self, g):
        h = complement(g)
        assert complement(h) == g
        assert g.m + h.m == g.n * (g.n - 1) // 2

    def test_delete_edge(self):
        assert delete_edge(complete(3), 0, 1) == Graph.from_edges(3, [(0, 2), (1, 2)])

    def test_add_edge(self):
        assert add_edge(path(3), 0, 2) == complete(3)

    def test_delete_disconnects(self):
        g = path(3)
        h = delete_edge(g, 0, 1)
        assert not h.connected and g.connected and g.m == 2

    def test_preconditions(self):
        with pytest.raises(GraphError):
            delete_edge(path(3), 0, 2)
        with pytest.raises(GraphError):
            add_edge(path(3), 0, 1)
        with pytest.raises(GraphError):
            add_edge(path(3), 1, 1)
