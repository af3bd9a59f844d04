"""
小规模精确求解测试：限制增长串、划分维数与度量维数
"""

import networkx as nx
import pytest

import src.resolving.exact as exact_solver
from src.chains import build_even_chain_cycle
from src.graph import build_graph, distance_matrix
from src.resolving import (
    LowerBoundReason,
    Partition,
    is_resolving_partition,
    is_resolving_set,
    metric_dimension_exact,
    minimum_resolving_set,
    partition_dimension_exact,
    restricted_growth_strings,
)
from src.shared.exceptions import DisconnectedGraphError, SizeGateError, ValidationError
from src.verification import from_networkx
from tests.graphs import complete_graph, cycle_graph, path_graph, star_graph


class TestRestrictedGrowthStrings:

    @pytest.mark.parametrize("n, k, count", [
        (1, 1, 1),
        (4, 2, 7),
        (5, 3, 25),
        (6, 3, 90),
        (5, 5, 1),
        (7, 4, 350),
    ])
    def test_stirling_counts(self, n, k, count):
        assert sum(1 for _ in restricted_growth_strings(n, k)) == count

    def test_lexicographic_order(self):
        strings = list(restricted_growth_strings(4, 2))
        assert strings == sorted(strings)
        assert strings[0] == (0, 0, 0, 1)
        assert strings[-1] == (0, 1, 1, 1)

    def test_growth_rule(self):
        for rgs in restricted_growth_strings(6, 3):
            top = 0
            assert rgs[0] == 0
            for a in rgs[1:]:
                assert a <= top + 1
                top = max(top, a)
            assert top == 2

    @pytest.mark.parametrize("n, k", [(0, 1), (3, 0), (3, 4)])
    def test_empty_ranges(self, n, k):
        assert list(restricted_growth_strings(n, k)) == []


class TestPartitionDimension:

    @pytest.mark.parametrize("n", range(2, 11))
    def test_paths(self, n):
        cert = partition_dimension_exact(path_graph(n))
        assert cert.value == 2
        assert cert.lower_bound_reason is LowerBoundReason.EXHAUSTIVE_NO_K

    @pytest.mark.parametrize("n", range(3, 11))
    def test_cycles(self, n):
        assert partition_dimension_exact(cycle_graph(n)).value == 3

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_complete_graphs(self, n):
        assert partition_dimension_exact(complete_graph(n)).value == n

    def test_witness_resolves(self):
        g = from_networkx(nx.petersen_graph())
        cert = partition_dimension_exact(g)
        assert is_resolving_partition(distance_matrix(g), cert.witness)

    def test_first_witness_is_lexicographic(self):
        cert = partition_dimension_exact(path_graph(3))
        assert cert.witness.blocks == ((0, 1), (2,))

    @pytest.mark.parametrize("graph", [cycle_graph(7), build_even_chain_cycle([4, 4]).graph, star_graph(5)])
    def test_matches_one_at_a_time_scan(self, graph):
        dm = distance_matrix(graph)
        expected = None
        for k in range(1, graph.vertex_count + 1):
            expected = next((Partition.from_labels(s) for s in restricted_growth_strings(graph.vertex_count, k)
                             if is_resolving_partition(dm, Partition.from_labels(s))), None)
            if expected is not None:
                break
        cert = partition_dimension_exact(graph, dm)
        assert cert.value == k
        assert cert.witness.blocks == expected.blocks

    def test_chunk_boundaries(self, monkeypatch):
        g = build_even_chain_cycle([4, 4]).graph
        whole = partition_dimension_exact(g)
        monkeypatch.setattr(exact_solver, 'BATCH_SIZE', 3)
        chunked = partition_dimension_exact(g)
        assert chunked.value == whole.value == 3
        assert chunked.witness.blocks == whole.witness.blocks

    def test_k_max_two_refutes_chain(self):
        assert partition_dimension_exact(build_even_chain_cycle([6, 6]).graph, k_max=2) is None

    def test_k_max_cuts_search(self):
        assert partition_dimension_exact(cycle_graph(5), k_max=2) is None
        with pytest.raises(ValidationError):
            partition_dimension_exact(cycle_graph(5), k_max=0)

    def test_small_chain_cycles(self, even_small, odd_small):
        assert partition_dimension_exact(even_small.graph).value == 3
        assert partition_dimension_exact(odd_small.graph).value == 3

    @pytest.mark.slow
    def test_middle_c4_chain(self):
        cc = build_even_chain_cycle([4, 4, 4])
        assert partition_dimension_exact(cc.graph, k_max=3).value == 3

    def test_gates(self):
        with pytest.raises(SizeGateError):
            partition_dimension_exact(path_graph(6), max_vertices=5)
        with pytest.raises(ValidationError):
            partition_dimension_exact(build_graph(1, []))
        with pytest.raises(DisconnectedGraphError):
            partition_dimension_exact(build_graph(4, [(0, 1), (2, 3)]))


class TestMetricDimension:

    @pytest.mark.parametrize("g, expected", [
        (path_graph(5), 1),
        (cycle_graph(6), 2),
        (cycle_graph(7), 2),
        (complete_graph(4), 3),
        (star_graph(4), 3),
    ])
    def test_known_values(self, g, expected):
        assert metric_dimension_exact(g) == expected

    def test_first_minimum_set(self):
        assert minimum_resolving_set(path_graph(4)) == [0]
        assert minimum_resolving_set(cycle_graph(6)) == [0, 1]

    def test_petersen(self):
        g = from_networkx(nx.petersen_graph())
        landmarks = minimum_resolving_set(g)
        assert len(landmarks) == 3
        assert is_resolving_set(distance_matrix(g), landmarks)

    def test_gate(self):
        with pytest.raises(SizeGateError):
            metric_dimension_exact(cycle_graph(8), max_vertices=7)
