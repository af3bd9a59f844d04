"""
系统配置模块
default_config.yaml 为底，config.yaml 覆盖，最后是 .env 与环境变量
"""

import os
from pathlib import Path
from typing import Any, Dict

import yaml
from dotenv import load_dotenv

_CONFIG_DIR = Path(__file__).parent


def _read_yaml(path: Path) -> Dict[str, Any]:
    if not path.exists():
        return {}
    with open(path, 'r', encoding='utf-8') as f:
        return yaml.safe_load(f) or {}


def _deep_merge(base: Dict[str, Any], update: Dict[str, Any]) -> Dict[str, Any]:
    for key, value in update.items():
        if isinstance(base.get(key), dict) and isinstance(value, dict):
            _deep_merge(base[key], value)
        else:
            base[key] = value
    return base


def _parse_scalar(raw: str) -> Any:
    """环境变量值按 YAML 标量解析：9 -> int，0.5 -> float，true -> bool"""
    try:
        value = yaml.safe_load(raw)
    except yaml.YAMLError:
        return raw
    return raw if isinstance(value, (dict, list)) or value is None else value


class SystemConfig:
    """系统配置管理器（进程内单例）"""

    _instance = None
    _config_data: Dict[str, Any] = {}

    # 环境变量格式: CONFIG_<SECTION>__<KEY>，例如 CONFIG_LIMITS__PD_EXACT_MAX_VERTICES
    ENV_PREFIX = 'CONFIG_'
    ENV_SEPARATOR = '__'

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._load_config()
        return cls._instance

    @classmethod
    def _load_config(cls):
        data = _read_yaml(_CONFIG_DIR / "default_config.yaml")
        _deep_merge(data, _read_yaml(_CONFIG_DIR / "config.yaml"))
        load_dotenv(override=False)
        for key, raw in os.environ.items():
            if key.startswith(cls.ENV_PREFIX) and cls.ENV_SEPARATOR in key:
                path = key[len(cls.ENV_PREFIX):].lower().split(cls.ENV_SEPARATOR)
                cls._set_path(data, path, _parse_scalar(raw))
        cls._config_data = data

    @staticmethod
    def _set_path(data: Dict[str, Any], path, value: Any):
        *parents, leaf = path
        for key in parents:
            if not isinstance(data.get(key), dict):
                data[key] = {}
            data = data[key]
        data[leaf] = value

    def get(self, key: str, default: Any = None) -> Any:
        """获取配置值，key 为点分路径"""
        value = self._config_data
        for k in key.split('.'):
            if not isinstance(value, dict) or k not in value:
                return default
            value = value[k]
        return value

    def get_logging_config(self) -> Dict[str, Any]:
        return self.get('logging', {})

    def get_limits_config(self) -> Dict[str, Any]:
        """穷举求解器规模限制"""
        return self.get('limits', {})

    def get_verification_config(self) -> Dict[str, Any]:
        """定理扫描与随机语料"""
        return self.get('verification', {})

    def get_output_config(self) -> Dict[str, Any]:
        return self.get('output', {})

    def reload(self):
        """重新读取文件与环境变量"""
        self._load_config()

    def validate(self) -> bool:
        """
        Raises:
            ValueError: 规模限制不是正整数，或 workers < 1
        """
        limits = self.get_limits_config()
        for key in ('pd_exact_max_vertices', 'md_exact_max_vertices', 'sdim_brute_max_vertices'):
            if not isinstance(limits.get(key), int) or limits[key] < 1:
                raise ValueError(f"limits.{key} 必须是正整数")
        if int(self.get('verification.workers', 1)) < 1:
            raise ValueError("verification.workers 必须 >= 1")
        return True


# 全局配置实例
config = SystemConfig()

__all__ = ['SystemConfig', 'config']
