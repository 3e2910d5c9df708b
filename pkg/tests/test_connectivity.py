import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from kappalab.connectivity import (
    FaultSet,
    Shape,
    common_neighbors,
    components,
    count_components,
    is_independent,
    neighborhood,
    vertex_connectivity,
)
from kappalab.graphs import BitGraph, decompose
from kappalab.perms import Perm

from .oracles import (
    adjacency_dict,
    oracle_components,
    oracle_shape,
    random_connected_graph,
)


def vids(G, *texts):
    return [G.vertex_id(Perm.from_text(t)) for t in texts]


def complete_graph(n):
    return BitGraph.from_edges(n, itertools.combinations(range(n), 2))


AG4_FOUR_CYCLE_FAULT = ("1234", "2143", "3412", "4321")


class TestComponents:
    def test_empty_fault_one_component(self, ag4):
        report = components(ag4, ())
        assert report.count == 1
        assert report.sizes() == (12,)

    def test_ag4_two_four_cycles(self, ag4):
        report = components(ag4, vids(ag4, *AG4_FOUR_CYCLE_FAULT))
        assert report.count == 2
        assert report.shapes == (Shape.FOUR_CYCLE, Shape.FOUR_CYCLE)

    def test_ag4_four_cycle_and_two_path(self, ag4):
        report = components(ag4, vids(ag4, *AG4_FOUR_CYCLE_FAULT, "2314"))
        assert report.count == 2
        assert report.shapes == (Shape.FOUR_CYCLE, Shape.TWO_PATH)

    def test_ordering_size_desc_then_min_id(self, ag4):
        report = components(ag4, vids(ag4, *AG4_FOUR_CYCLE_FAULT))
        sizes = report.sizes()
        assert sizes == tuple(sorted(sizes, reverse=True))
        assert report.components[0][0] < report.components[1][0]

    @given(st.data())
    @settings(max_examples=60, deadline=None)
    def test_matches_oracle_on_random_faults(self, ag4, data):
        k = data.draw(st.integers(0, 8))
        F = data.draw(st.sets(st.integers(0, 11), min_size=k, max_size=k))
        report = components(ag4, F)
        oracle = oracle_components(adjacency_dict(ag4), F)
        assert set(map(frozenset, report.components)) == set(oracle)
        assert sum(report.sizes()) + len(F) == ag4.vertex_count

    def test_accepts_fault_set_objects(self, ag4):
        fs = FaultSet.of(vids(ag4, *AG4_FOUR_CYCLE_FAULT))
        assert components(ag4, fs).count == 2

    def test_rejects_out_of_range_ids(self, ag4):
        with pytest.raises(ValueError):
            components(ag4, [99])


class TestShapes:
    @given(st.data())
    @settings(max_examples=60, deadline=None)
    def test_classification_matches_census_oracle(self, s4, data):
        F = data.draw(st.sets(st.integers(0, 23), min_size=8, max_size=16))
        report = components(s4, F)
        adj = adjacency_dict(s4)
        for comp, shape in zip(report.components, report.shapes):
            if len(comp) <= 4:
                assert shape.value == oracle_shape(adj, comp)

    def test_triangle_plus_pendant_is_not_a_four_cycle(self):
        G = BitGraph.from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
        report = components(G, ())
        assert report.shapes == (Shape.OTHER,)


class TestNeighborhood:
    def test_empty(self, ag4):
        assert neighborhood(ag4, ()) == frozenset()

    def test_ag4_independent_triple_has_eight_neighbors(self, ag4):
        S = vids(ag4, "1234", "4321", "3412")
        assert len(neighborhood(ag4, S)) == 8

    def test_ag5_identity_degree(self, ag5):
        assert len(neighborhood(ag5, vids(ag5, "12345"))) == 6

    def test_excludes_the_set_itself(self, ag4):
        S = vids(ag4, "1234", "2314")  # adjacent pair
        assert neighborhood(ag4, S).isdisjoint(S)

    @given(st.data())
    @settings(max_examples=40, deadline=None)
    def test_union_bound(self, ag5, data):
        S1 = data.draw(st.sets(st.integers(0, 59), max_size=5))
        S2 = data.draw(st.sets(st.integers(0, 59), max_size=5))
        lhs = neighborhood(ag5, S1 | S2)
        rhs = neighborhood(ag5, S1) | neighborhood(ag5, S2) | S1 | S2
        assert lhs <= rhs


class TestCommonNeighbors:
    def test_paper_pair_ag5(self, ag5):
        u, v = vids(ag5, "14235", "32415")
        expected = set(vids(ag5, "43215", "21435"))
        assert common_neighbors(ag5, u, v) == expected

    def test_cap_of_two_exhaustive(self, ag4, ag5):
        for G in (ag4, ag5):
            for u in range(G.vertex_count):
                for v in range(u + 1, G.vertex_count):
                    if not G.has_edge(u, v):
                        assert len(common_neighbors(G, u, v)) <= 2

    def test_distance_three_pairs_share_nothing(self, s4):
        # BFS distances recomputed here independently of the graphs module
        for u in range(s4.vertex_count):
            dist = {u: 0}
            frontier = [u]
            while frontier:
                nxt = []
                for a in frontier:
                    for b in s4.neighbors[a]:
                        if b not in dist:
                            dist[b] = dist[a] + 1
                            nxt.append(b)
                frontier = nxt
            for v in range(s4.vertex_count):
                if v != u and dist[v] >= 3:
                    assert common_neighbors(s4, u, v) == frozenset()

    def test_rejects_equal_vertices(self, ag4):
        with pytest.raises(ValueError):
            common_neighbors(ag4, 3, 3)


class TestIsIndependent:
    def test_known_independent_set(self, ag4):
        assert is_independent(ag4, vids(ag4, "1234", "4321", "3412"))

    def test_singleton(self, ag4):
        assert is_independent(ag4, [5])

    def test_edge_endpoints(self, ag4):
        u = 0
        v = ag4.neighbors[0][0]
        assert not is_independent(ag4, [u, v])


class TestVertexConnectivity:
    def test_ag4(self, ag4):
        assert vertex_connectivity(ag4) == 4

    def test_ag5(self, ag5):
        assert vertex_connectivity(ag5) == 6

    def test_ag6(self, ag6):
        assert vertex_connectivity(ag6) == 8

    def test_s4(self, s4):
        assert vertex_connectivity(s4) == 5

    def test_s5(self, s5):
        assert vertex_connectivity(s5) == 7

    def test_complete_graph_convention(self):
        assert vertex_connectivity(complete_graph(5)) == 4

    def test_cycle(self):
        G = BitGraph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
        assert vertex_connectivity(G) == 2

    def test_path_has_cut_vertex(self):
        G = BitGraph.from_edges(5, [(i, i + 1) for i in range(4)])
        assert vertex_connectivity(G) == 1

    def test_matches_deletion_oracle_on_random_graphs(self):
        # oracle: smallest vertex subset whose removal disconnects the graph
        rng = random.Random(20260810)
        for _ in range(8):
            n, edges = random_connected_graph(rng, max_vertices=9)
            G = BitGraph.from_edges(n, edges)
            adj = adjacency_dict(G)
            brute = None
            for k in range(n - 1):
                if any(
                    len(oracle_components(adj, F)) >= 2
                    for F in itertools.combinations(range(n), k)
                ):
                    brute = k
                    break
            assert brute is not None
            assert vertex_connectivity(G) == brute


class TestFaultSet:
    def test_split_matches_decomposition(self, ag4):
        fs = FaultSet.of(range(7))
        split = fs.by_last_symbol(ag4)
        parts = decompose(ag4).parts
        for i, members in split.items():
            assert members == fs.members & set(parts[i])
        assert frozenset().union(*split.values()) == fs.members


class TestCountComponents:
    def test_early_exit_lower_bounds_true_count(self, ag4):
        F = vids(ag4, *AG4_FOUR_CYCLE_FAULT)
        alive = ag4.full_mask
        for v in F:
            alive &= ~(1 << v)
        assert count_components(ag4.adj_masks, alive) == 2
        assert count_components(ag4.adj_masks, alive, stop_at=2) == 2
        assert count_components(ag4.adj_masks, alive, stop_at=1) == 1


class TestEveryBuiltGraphConnected:
    @pytest.mark.parametrize("n", range(3, 8))
    def test_ag_connected(self, n):
        from kappalab.graphs import build_ag

        G = build_ag(n)
        assert components(G, ()).count == 1

    @pytest.mark.parametrize("n", range(3, 7))
    def test_splitstar_connected(self, n):
        from kappalab.graphs import build_splitstar

        G = build_splitstar(n)
        assert components(G, ()).count == 1


class TestReportJson:
    def test_component_report_schema(self, ag4):
        report = components(ag4, vids(ag4, *AG4_FOUR_CYCLE_FAULT))
        data = report.to_json_dict(ag4)
        assert set(data) == {"fault", "count", "components"}
        assert data["count"] == 2
        assert data["components"][0]["shape"] == "4-cycle"
        assert data["components"][0]["vertices"][0].isdigit()
        assert sorted(data["fault"]) == data["fault"]
