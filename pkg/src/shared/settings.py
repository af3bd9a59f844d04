"""
运行配置模型
把 SystemConfig 的 limits / verification / output 段校验为类型化对象
"""

from typing import Any, Dict, Optional

from pydantic import BaseModel, Field, ValidationError as PydanticValidationError

from .exceptions import ConfigError


class LimitsSettings(BaseModel):
    """穷举求解器的顶点数上限"""
    pd_exact_max_vertices: int = Field(16, ge=1)
    md_exact_max_vertices: int = Field(16, ge=1)
    sdim_brute_max_vertices: int = Field(12, ge=1)


class VerificationSettings(BaseModel):
    """定理扫描与随机语料参数"""
    seed: int = 20200630
    workers: int = Field(1, ge=1)
    random_corpus_size: int = Field(200, ge=0)
    random_min_vertices: int = Field(2, ge=1)
    random_max_vertices: int = Field(9, ge=1)
    random_edge_probability: float = Field(0.35, gt=0.0, le=1.0)
    pd_bound_max_vertices: int = Field(10, ge=1)


class OutputSettings(BaseModel):
    indent: Optional[int] = Field(2, ge=0)


class ChainDimSettings(BaseModel):
    """一次运行的完整配置；命令行参数通过 model_copy(update=...) 覆盖"""
    limits: LimitsSettings = Field(default_factory=LimitsSettings)
    verification: VerificationSettings = Field(default_factory=VerificationSettings)
    output: OutputSettings = Field(default_factory=OutputSettings)

    @classmethod
    def from_mapping(cls, data: Dict[str, Any]) -> 'ChainDimSettings':
        """从配置字典创建，校验失败转换为 ConfigError"""
        try:
            return cls.model_validate({
                'limits': data.get('limits') or {},
                'verification': data.get('verification') or {},
                'output': data.get('output') or {},
            })
        except PydanticValidationError as e:
            raise ConfigError(f"invalid configuration: {e.errors()[0]['msg']}",
                              details={'errors': [err['msg'] for err in e.errors()]}) from e

    def with_limits(self, **overrides: int) -> 'ChainDimSettings':
        limits = self.limits.model_copy(update={k: v for k, v in overrides.items() if v is not None})
        return self.model_copy(update={'limits': limits})

    def with_verification(self, **overrides: Any) -> 'ChainDimSettings':
        verification = self.verification.model_copy(update={k: v for k, v in overrides.items() if v is not None})
        return self.model_copy(update={'verification': verification})


def load_settings() -> ChainDimSettings:
    """读取全局 SystemConfig"""
    from configs import config

    return ChainDimSettings.from_mapping({
        'limits': config.get_limits_config(),
        'verification': config.get_verification_config(),
        'output': config.get_output_config(),
    })
