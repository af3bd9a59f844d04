"""
实例描述字符串
"even:8,10,8" / "odd:5,7,5" / "cycle:6" / "file:<边表路径>"
"""

from typing import Union

from src.graph import read_edge_list
from src.shared.exceptions import ChainSpecError, ValidationError
from src.shared.utils.file_utils import read_file
from src.shared.utils.validators import parse_int_list
from .chain_cycle import ChainCycle, build_even_chain_cycle, build_odd_chain_cycle
from .labeled import LabeledGraph, build_cycle

Instance = Union[ChainCycle, LabeledGraph]

SPEC_KINDS = ('even', 'odd', 'cycle', 'file')


def parse_chain_spec(text: str) -> Instance:
    """
    解析实例描述并构造图

    Raises:
        ChainSpecError: 无法解析
        ParityError / GraphConstructionError: 构造器拒绝
    """
    kind, sep, body = (text or "").strip().partition(':')
    kind = kind.lower()
    if not sep or kind not in SPEC_KINDS or not body.strip():
        raise ChainSpecError(
            f"cannot parse instance {text!r}; expected one of even:<n,...>, odd:<n,...>, cycle:<n>, file:<path>",
            spec=text,
        )

    if kind == 'file':
        try:
            g = read_edge_list(read_file(body.strip()))
        except FileNotFoundError as e:
            raise ChainSpecError(str(e), spec=text) from e
        return LabeledGraph.from_graph(g)

    try:
        lengths = parse_int_list(body, field_name=kind)
    except ValidationError as e:
        raise ChainSpecError(e.message, spec=text) from e

    if kind == 'cycle':
        if len(lengths) != 1:
            raise ChainSpecError("cycle takes exactly one length", spec=text)
        return build_cycle(lengths[0])
    if kind == 'even':
        return build_even_chain_cycle(lengths)
    return build_odd_chain_cycle(lengths)


def instance_name(instance: Instance) -> str:
    if isinstance(instance, ChainCycle):
        return instance.spec
    return f"graph:{instance.vertex_count},{instance.graph.edge_count}"


def labeled_of(instance: Instance) -> LabeledGraph:
    return instance.lg if isinstance(instance, ChainCycle) else instance
