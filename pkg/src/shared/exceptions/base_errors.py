"""
异常基类
每个异常带错误代码、详情字典和命令行退出码
"""

from typing import Any, Dict, Optional


def _plain(value: Any) -> Any:
    # 元组转列表，保证 details 可直接写成 JSON
    return list(value) if isinstance(value, tuple) else value


class BaseError(Exception):
    """
    基础异常类

    子类通过 default_code 声明错误代码；构造时额外的关键字参数
    （值不为 None 的）并入 details。
    """

    default_code: Optional[str] = None
    # 命令行退出码：2 表示用法/解析/规模限制错误
    exit_code: int = 2

    def __init__(
        self,
        message: str,
        code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
        **context: Any
    ):
        self.message = message
        self.code = code or self.default_code
        self.details = dict(details or {})
        self.details.update({k: _plain(v) for k, v in context.items() if v is not None})
        super().__init__(self.message)

    def __str__(self) -> str:
        if self.code:
            return f"[{self.code}] {self.message}"
        return self.message

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典格式"""
        return {
            'error': type(self).__name__,
            'message': self.message,
            'code': self.code,
            'details': self.details,
            'exit_code': self.exit_code,
        }


class ConfigError(BaseError):
    """配置文件或环境变量覆盖不合法；上下文键 config_key、config_file"""

    default_code = "CONFIG_ERROR"


class ValidationError(BaseError):
    """输入验证异常（非法划分、空地标集、非法范围等）；上下文键 field、value"""

    default_code = "VALIDATION_ERROR"
