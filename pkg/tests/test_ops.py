import pytest
from hypothesis import given
import hypothesis.strategies as st

from conftest import graphs
from superdom import (
    Graph,
    bouquet,
    chain,
    complete_graph,
    contract_clique,
    disjoint_union,
    friendship_graph,
    gamma_sp,
    is_isomorphic,
    odot,
    path_graph,
    cycle_graph,
    star_graph,
)


class TestOdot:
    @pytest.mark.parametrize("k", range(1, 6))
    def test_friendship_center_becomes_star(self, k):
        assert is_isomorphic(odot(friendship_graph(k), 0), star_graph(2 * k))

    def test_pendant_is_identity(self):
        g = path_graph(3)
        assert odot(g, 0) == g

    def test_triangle_becomes_path(self):
        assert is_isomorphic(odot(complete_graph(3), 1), path_graph(3))

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            odot(path_graph(3), 5)

    @given(graphs(), st.data())
    def test_vertex_count_and_edge_drop(self, g, data):
        v = data.draw(st.integers(min_value=0, max_value=g.n - 1))
        inside = sum(
            1 for a, b in g.edges() if (g.adj[v] >> a) & 1 and (g.adj[v] >> b) & 1
        )
        cleared = odot(g, v)
        assert cleared.n == g.n
        assert cleared.m == g.m - inside
        # edges at v survive
        assert cleared.adj[v] == g.adj[v]

    @given(graphs(), st.data())
    def test_idempotent(self, g, data):
        v = data.draw(st.integers(min_value=0, max_value=g.n - 1))
        once = odot(g, v)
        assert odot(once, v) == once


class TestContract:
    def test_path_middle(self):
        assert is_isomorphic(contract_clique(path_graph(3), 1), complete_graph(2))

    def test_cycle4(self):
        assert is_isomorphic(contract_clique(cycle_graph(4), 0), complete_graph(3))

    def test_star_center(self):
        assert is_isomorphic(contract_clique(star_graph(3), 0), complete_graph(3))

    def test_pendant_degenerates_to_deletion(self):
        g = path_graph(4)
        assert contract_clique(g, 3) == path_graph(3)

    @given(graphs(min_n=2), st.data())
    def test_vertex_count(self, g, data):
        v = data.draw(st.integers(min_value=0, max_value=g.n - 1))
        assert contract_clique(g, v).n == g.n - 1

    def test_neighbors_form_clique(self):
        g = star_graph(5)
        h = contract_clique(g, 0)
        assert h == complete_graph(5)


class TestUnion:
    def test_two_singletons(self):
        res = disjoint_union(Graph(1), Graph(1))
        assert res.graph == Graph(2)
        assert res.vertex_maps == ((0,), (1,))
        assert res.merged == ()

    def test_counts_and_components(self):
        res = disjoint_union(path_graph(3), cycle_graph(3))
        assert res.graph.n == 6 and res.graph.m == 5
        assert len(res.graph.components()) == 2

    def test_additivity_example(self):
        res = disjoint_union(path_graph(3), path_graph(3))
        assert gamma_sp(res.graph).value == 4


class TestChain:
    def test_two_paths_make_star(self):
        res = chain([(path_graph(3), 1, 1), (path_graph(3), 1, 1)])
        assert is_isomorphic(res.graph, star_graph(4))
        assert res.graph.n == 5
        assert len(res.merged) == 1

    def test_friendship_chain(self):
        res = chain([(friendship_graph(4), 0, 0), (friendship_graph(5), 0, 0)])
        assert res.graph.n == 19
        assert is_isomorphic(res.graph, friendship_graph(9), max_n=19)

    def test_single_part_identity(self):
        g = cycle_graph(5)
        res = chain([(g, 0, 3)])
        assert res.graph == g
        assert res.vertex_maps == (tuple(range(5)),)
        assert res.merged == ()

    def test_merged_indices_consistent(self):
        parts = [(path_graph(3), 0, 2), (cycle_graph(4), 1, 3), (path_graph(2), 0, 1)]
        res = chain(parts)
        assert res.graph.n == 3 + 4 + 2 - 2
        for i in range(len(parts) - 1):
            y = parts[i][2]
            x = parts[i + 1][1]
            assert res.vertex_maps[i][y] == res.vertex_maps[i + 1][x] == res.merged[i]

    def test_coincident_attach_vertices_allowed(self):
        res = chain([(path_graph(2), 1, 1), (path_graph(2), 0, 0), (path_graph(2), 1, 1)])
        assert res.graph.n == 2 + 1 + 1

    def test_attach_index_error(self):
        with pytest.raises(IndexError):
            chain([(path_graph(3), 0, 7)])

    def test_empty_spec_rejected(self):
        with pytest.raises(ValueError):
            chain([])

    @given(st.lists(graphs(min_n=1, max_n=5), min_size=1, max_size=4), st.data())
    def test_order_formula(self, parts, data):
        spec = []
        for g in parts:
            x = data.draw(st.integers(min_value=0, max_value=g.n - 1))
            y = data.draw(st.integers(min_value=0, max_value=g.n - 1))
            spec.append((g, x, y))
        res = chain(spec)
        assert res.graph.n == sum(g.n for g in parts) - (len(parts) - 1)


class TestBouquet:
    def test_friendship_copies(self):
        res = bouquet([(friendship_graph(2), 0), (friendship_graph(2), 0)])
        assert is_isomorphic(res.graph, friendship_graph(4))

    def test_edges_make_star(self):
        res = bouquet([(path_graph(2), 0)] * 4)
        assert is_isomorphic(res.graph, star_graph(4))

    def test_two_part_bouquet_equals_chain(self):
        g1, g2 = cycle_graph(4), path_graph(3)
        b = bouquet([(g1, 2), (g2, 1)])
        c = chain([(g1, 0, 2), (g2, 1, 0)])
        assert b.graph == c.graph

    def test_merged_single_hub(self):
        res = bouquet([(path_graph(3), 2), (cycle_graph(3), 0), (path_graph(2), 1)])
        assert res.merged == (2,)
        for i, (_, x) in enumerate([(path_graph(3), 2), (cycle_graph(3), 0), (path_graph(2), 1)]):
            assert res.vertex_maps[i][x] == 2

    @given(st.lists(graphs(min_n=1, max_n=5), min_size=1, max_size=4), st.data())
    def test_order_formula(self, parts, data):
        spec = [(g, data.draw(st.integers(min_value=0, max_value=g.n - 1))) for g in parts]
        res = bouquet(spec)
        assert res.graph.n == sum(g.n for g in parts) - (len(parts) - 1)
