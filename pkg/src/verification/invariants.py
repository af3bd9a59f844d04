"""
单实例不变量报告

链环：构造划分、路证书、可选的精确 pd、G_SR 差异、粘合点孤立、覆盖/公式/穷举一致性、公式核对账本。
一般图：按请求的方法计算 pd、dim、sdim。
"""

from typing import Optional

from src.chains import ChainCycle, Instance, Parity, instance_name, labeled_of
from src.graph import diameter, distance_matrix, is_path_graph
from src.resolving import (
    claimed_representations,
    metric_dimension_exact,
    partition_dimension_chain,
    partition_dimension_exact,
)
from src.shared.exceptions import (
    CoverVerificationError,
    HypothesisViolationError,
    ValidationError,
    WitnessNotResolvingError,
)
from src.shared.settings import ChainDimSettings
from src.shared.utils.logger import get_logger
from src.strong import (
    SdimRoute,
    constructed_cover,
    cross_cycle_pairs,
    cut_vertex_exclusion,
    diameter_pairs,
    literal_range_uncovered,
    min_vertex_cover,
    path_edges,
    predicted_mmd_paths,
    predicted_srg,
    sdim_formula,
    strong_metric_dimension,
    strong_resolving_graph,
)
from .schema import InvariantReport

logger = get_logger(__name__)


def _label_pairs(cc: ChainCycle, edges):
    return sorted(sorted((cc.position_label(u), cc.position_label(v))) for u, v in edges)


def instance_report(cc: ChainCycle, settings: Optional[ChainDimSettings] = None) -> InvariantReport:
    """对一个链环运行全部定理级检查；公式账本的不一致不计为失败"""
    settings = settings or ChainDimSettings()
    limits = settings.limits
    g = cc.graph
    n = g.vertex_count
    dm = distance_matrix(g)
    report = InvariantReport(instance=cc.spec, vertex_count=n, edge_count=g.edge_count, diameter=diameter(g, dm))

    # 划分维数
    try:
        cert = partition_dimension_chain(cc, dm)
        report.values['pd'] = cert.value
        report.certificates['pd'] = cert.to_dict(cc.position_label)
        report.record('witness_resolving', True)
    except WitnessNotResolvingError as e:
        report.certificates['witness_collision'] = e.details.get('pair')
        report.record('witness_resolving', False, e.message)
    report.record('not_a_path', not is_path_graph(g), "chain cycle recognised as a path")

    if n <= limits.pd_exact_max_vertices:
        # 见证已验证时 pd <= 3，只需穷举排除 k <= 2
        witnessed = 'pd' in report.values
        exact = partition_dimension_exact(g, dm, k_max=2 if witnessed else 3,
                                          max_vertices=limits.pd_exact_max_vertices)
        if exact is not None:
            pd_exact = exact.value
        else:
            pd_exact = 3 if witnessed else None
        report.values['pd_exact'] = pd_exact
        report.certificates['pd_exact_search'] = 'refute_k2' if witnessed else 'search_k3'
        report.record('pd_exact_is_3', pd_exact == 3,
                      f"exhaustive pd is {pd_exact if pd_exact is not None else '> 3'}")

    # 强分辨图
    srg = strong_resolving_graph(g, dm, instance=cc.spec)
    try:
        srg.predicted = predicted_srg(cc)
    except HypothesisViolationError as e:
        report.srg['prediction_skipped'] = e.message
    if srg.predicted is not None:
        report.srg.update({
            'missing': _label_pairs(cc, srg.missing),
            'extra': _label_pairs(cc, srg.extra),
            'dropped_literal': _label_pairs(cc, srg.predicted.dropped_literal),
        })
        report.record('srg_matches_prediction', srg.diff_empty,
                      f"SRG diff: {len(srg.missing)} missing, {len(srg.extra)} extra")
    offenders = cut_vertex_exclusion(cc, srg)
    report.record('cut_vertices_isolated', not offenders,
                  f"cut vertices with MMD partners: {[cc.position_label(x) for x in offenders]}")

    cross = cross_cycle_pairs(cc, sorted(srg.computed_edges))
    if cc.parity is Parity.EVEN:
        diametral = set(diameter_pairs(g, dm))
        report.record('cross_edge_diametral', len(cross) == 1 and cross[0] in diametral,
                      f"cross-cycle MMD pairs: {_label_pairs(cc, cross)}")
    elif srg.predicted is not None:
        within = srg.computed_edges - set(cross)
        paths = predicted_mmd_paths(cc)
        union = set().union(*(path_edges(p) for p in paths.values()))
        report.record('mmd_paths_exact', union == within, "within-cycle MMD pairs differ from the path structures")
        report.srg['literal_range_uncovered'] = _label_pairs(cc, literal_range_uncovered(cc, srg))

    # 强度量维数
    cover = min_vertex_cover(srg.graph)
    report.values['sdim_cover'] = cover.size
    report.certificates['cover'] = cover.to_dict(cc.position_label)
    agreeing = [cover.size]
    try:
        formula = sdim_formula(cc.parity, cc.cycle_lengths)
        constructed = constructed_cover(cc, srg)
        report.values['sdim_formula'] = formula
        report.values['constructed_cover_size'] = constructed.size
        agreeing += [formula, constructed.size]
        report.record('constructed_cover_valid', True)
    except CoverVerificationError as e:
        report.record('constructed_cover_valid', False, e.message)
    except HypothesisViolationError as e:
        report.srg['formula_skipped'] = e.message
    if n <= limits.sdim_brute_max_vertices:
        brute = strong_metric_dimension(g, SdimRoute.BRUTE_FORCE, dm, limits.sdim_brute_max_vertices)
        report.values['sdim_brute'] = brute.value
        agreeing.append(brute.value)
    report.record('sdim_agreement', len(set(agreeing)) == 1, f"sdim routes disagree: {agreeing}")

    ledger = claimed_representations(cc, dm)
    report.ledger = {
        'counts': ledger.counts(),
        'mismatches': [m.to_dict() for m in ledger.mismatches],
        'uncovered': ledger.uncovered,
        'out_of_range': len(ledger.out_of_range),
    }

    logger.info("instance checked", instance=cc.spec, passed=report.passed, failures=len(report.failures))
    return report


def invariants_report(
    instance: Instance,
    pd_method: str = "chain",
    sdim_method: SdimRoute = SdimRoute.COVER_OF_SRG,
    settings: Optional[ChainDimSettings] = None,
    with_dim: bool = False
) -> InvariantReport:
    """
    按请求的方法计算单个实例的 pd 与 sdim

    Raises:
        ValidationError: 方法不适用于该实例
        SizeGateError: 穷举超出规模限制
        HypothesisViolationError / WitnessNotResolvingError: 链环专用方法失败
    """
    settings = settings or ChainDimSettings()
    limits = settings.limits
    lg = labeled_of(instance)
    g = lg.graph
    is_chain = isinstance(instance, ChainCycle)
    label_fn = instance.position_label if is_chain else lg.label
    dm = distance_matrix(g)
    report = InvariantReport(instance=instance_name(instance), vertex_count=g.vertex_count,
                             edge_count=g.edge_count, diameter=diameter(g, dm))

    if pd_method == "chain":
        if not is_chain:
            raise ValidationError("--pd-method chain needs an even: or odd: chain cycle", field="pd_method")
        cert = partition_dimension_chain(instance, dm)
    elif pd_method == "exact":
        cert = partition_dimension_exact(g, dm, max_vertices=limits.pd_exact_max_vertices)
    else:
        raise ValidationError(f"unknown pd method {pd_method!r}", field="pd_method", value=pd_method)
    report.values['pd'] = cert.value
    report.certificates['pd'] = cert.to_dict(label_fn)

    if with_dim:
        report.values['dim'] = metric_dimension_exact(g, dm, limits.md_exact_max_vertices)

    if sdim_method is SdimRoute.CLOSED_FORM:
        if not is_chain:
            raise ValidationError("--sdim-method formula needs an even: or odd: chain cycle", field="sdim_method")
        report.values['sdim'] = sdim_formula(instance.parity, instance.cycle_lengths)
        report.certificates['sdim'] = constructed_cover(instance).to_dict(label_fn)
    else:
        result = strong_metric_dimension(g, sdim_method, dm, limits.sdim_brute_max_vertices)
        report.values['sdim'] = result.value
        report.certificates['sdim'] = result.to_dict(label_fn)
    report.certificates['sdim_route'] = sdim_method.value
    return report
