"""
统一验证器
提供命令行参数与配置值的验证功能，失败时抛出 ValidationError
"""

import re
from typing import Any, Dict, Iterable, List, Optional, Sequence

from ..exceptions import ValidationError

_INT_LIST_PATTERN = re.compile(r"^\s*\d+(\s*,\s*\d+)*\s*$")


def validate_input(value: Any, rules: Dict[str, Any], field_name: str = "input") -> bool:
    """
    验证单个值是否符合规则

    Args:
        value: 要验证的值
        rules: 规则字典，支持 type/min/max/min_length/max_length/enum/pattern
        field_name: 字段名称，用于错误消息

    Returns:
        bool: 验证是否通过

    Raises:
        ValidationError: 验证失败时抛出
    """
    expected_type = rules.get('type')
    if expected_type and not isinstance(value, expected_type):
        raise ValidationError(f"{field_name} must be of type {expected_type.__name__}", field=field_name, value=value)

    enum_values = rules.get('enum')
    if enum_values and value not in enum_values:
        raise ValidationError(f"{field_name} must be one of {list(enum_values)}", field=field_name, value=value)

    if isinstance(value, (int, float)) and not isinstance(value, bool):
        min_val = rules.get('min')
        max_val = rules.get('max')
        if min_val is not None and value < min_val:
            raise ValidationError(f"{field_name} must be >= {min_val}", field=field_name, value=value)
        if max_val is not None and value > max_val:
            raise ValidationError(f"{field_name} must be <= {max_val}", field=field_name, value=value)

    if isinstance(value, (str, list, tuple)):
        min_len = rules.get('min_length')
        max_len = rules.get('max_length')
        if min_len is not None and len(value) < min_len:
            raise ValidationError(f"{field_name} needs at least {min_len} items", field=field_name)
        if max_len is not None and len(value) > max_len:
            raise ValidationError(f"{field_name} allows at most {max_len} items", field=field_name)

    pattern = rules.get('pattern')
    if isinstance(value, str) and pattern and not re.match(pattern, value):
        raise ValidationError(f"{field_name} has invalid format", field=field_name, value=value)

    item_rules = rules.get('items')
    if isinstance(value, (list, tuple)) and item_rules:
        for i, item in enumerate(value):
            validate_input(item, item_rules, f"{field_name}[{i}]")

    return True


def parse_int_list(text: str, field_name: str = "values") -> List[int]:
    """解析 "4,6,8" 形式的整数列表"""
    if not _INT_LIST_PATTERN.match(text or ""):
        raise ValidationError(f"{field_name} must be a comma-separated list of integers", field=field_name, value=text)
    return [int(part) for part in text.split(',')]


def validate_vertex_ids(ids: Iterable[int], vertex_count: int, field_name: str = "vertices") -> List[int]:
    """检查顶点编号均在 [0, vertex_count) 内"""
    ids = list(ids)
    for v in ids:
        validate_input(v, {'type': int, 'min': 0, 'max': vertex_count - 1}, field_name)
    return ids


def require_non_empty(items: Sequence[Any], field_name: str, message: Optional[str] = None) -> None:
    """空集合视为非法输入"""
    if len(items) == 0:
        raise ValidationError(message or f"{field_name} must not be empty", field=field_name)
