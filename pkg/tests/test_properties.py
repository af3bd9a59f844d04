"""
随机小图上的性质测试，networkx 作为参照
"""

import networkx as nx
import pytest

try:
    from hypothesis import HealthCheck, given, settings
    from hypothesis import strategies as st
except ModuleNotFoundError:  # pragma: no cover
    pytest.skip("hypothesis not installed", allow_module_level=True)

from src.chains import Parity, build_even_chain_cycle, build_odd_chain_cycle
from src.graph import Graph, build_graph, distance_matrix, is_path_graph
from src.resolving import is_resolving_partition, metric_dimension_exact, partition_dimension_exact
from src.strong import (
    SdimRoute,
    constructed_cover,
    diameter_pairs,
    independence_number_exact,
    is_maximally_distant,
    is_vertex_cover,
    min_vertex_cover,
    mmd_pairs,
    predicted_srg,
    sdim_formula,
    strong_metric_dimension,
    strong_resolving_graph,
)

pytestmark = pytest.mark.slow

# 日志还原夹具是 autouse 的函数级夹具，与生成的样例无关
FEW = settings(max_examples=30, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])


def to_networkx(g: Graph) -> nx.Graph:
    nxg = nx.Graph()
    nxg.add_nodes_from(g.vertices())
    nxg.add_edges_from(g.edges)
    return nxg


@st.composite
def connected_graphs(draw: st.DrawFn, min_vertices: int = 2, max_vertices: int = 7) -> Graph:
    """随机生成树再补若干条边"""
    n = draw(st.integers(min_value=min_vertices, max_value=max_vertices))
    edges = [(draw(st.integers(min_value=0, max_value=v - 1)), v) for v in range(1, n)]
    for u in range(n):
        for v in range(u + 1, n):
            if draw(st.booleans()) and draw(st.booleans()):
                edges.append((u, v))
    return build_graph(n, edges)


@st.composite
def any_graphs(draw: st.DrawFn, max_vertices: int = 9) -> Graph:
    n = draw(st.integers(min_value=0, max_value=max_vertices))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return build_graph(n, [p for p in pairs if draw(st.booleans())])


@FEW
@given(connected_graphs())
def test_distances_match_networkx(g):
    dm = distance_matrix(g)
    expected = dict(nx.all_pairs_shortest_path_length(to_networkx(g)))
    assert all(dm[u, v] == expected[u][v] for u in g.vertices() for v in g.vertices())


@FEW
@given(connected_graphs())
def test_mmd_pairs_are_mutual(g):
    dm = distance_matrix(g)
    pairs = mmd_pairs(dm, g)
    for u, v in pairs:
        assert is_maximally_distant(dm, g, u, v)
        assert is_maximally_distant(dm, g, v, u)
    assert set(diameter_pairs(g, dm)) <= set(pairs)


@FEW
@given(connected_graphs(max_vertices=8))
def test_strong_dimension_routes_agree(g):
    dm = distance_matrix(g)
    cover = strong_metric_dimension(g, SdimRoute.COVER_OF_SRG, dm)
    brute = strong_metric_dimension(g, SdimRoute.BRUTE_FORCE, dm)
    assert cover.value == brute.value


@FEW
@given(any_graphs())
def test_cover_and_independence_are_complementary(g):
    cover = min_vertex_cover(g)
    assert is_vertex_cover(g, cover.cover)
    beta = nx.max_weight_clique(nx.complement(to_networkx(g)), weight=None)[1] if g.vertex_count else 0
    assert independence_number_exact(g) == beta
    assert cover.size + beta == g.vertex_count


@FEW
@given(connected_graphs(max_vertices=6))
def test_partition_dimension_bounds(g):
    dm = distance_matrix(g)
    cert = partition_dimension_exact(g, dm)
    assert is_resolving_partition(dm, cert.witness)
    assert cert.value <= metric_dimension_exact(g, dm) + 1
    assert (cert.value == 2) == is_path_graph(g)


@FEW
@given(st.lists(st.sampled_from([4, 6, 8]), min_size=2, max_size=3))
def test_even_chain_cycles(lengths):
    cc = build_even_chain_cycle(lengths)
    srg = strong_resolving_graph(cc.graph)
    srg.predicted = predicted_srg(cc)
    assert srg.diff_empty
    assert set(cc.cut_vertices) <= set(srg.isolated_vertices())
    assert min_vertex_cover(srg.graph).size == sdim_formula(Parity.EVEN, lengths)
    assert constructed_cover(cc, srg).size == sdim_formula(Parity.EVEN, lengths)


@FEW
@given(st.lists(st.sampled_from([5, 7]), min_size=2, max_size=3))
def test_odd_chain_cycles(lengths):
    cc = build_odd_chain_cycle(lengths)
    srg = strong_resolving_graph(cc.graph)
    srg.predicted = predicted_srg(cc)
    assert srg.diff_empty
    assert min_vertex_cover(srg.graph).size == sdim_formula(Parity.ODD, lengths)
    assert constructed_cover(cc, srg).size == sdim_formula(Parity.ODD, lengths)
