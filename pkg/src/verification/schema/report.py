"""
校验报告模型
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, model_validator


class InvariantReport(BaseModel):
    """单个实例的不变量与定理级检查；passed 为全部检查的合取"""
    instance: str
    vertex_count: int
    edge_count: int
    diameter: Optional[int] = None
    values: Dict[str, Optional[int]] = Field(default_factory=dict)
    checks: Dict[str, bool] = Field(default_factory=dict)
    failures: List[str] = Field(default_factory=list)
    certificates: Dict[str, Any] = Field(default_factory=dict)
    srg: Dict[str, Any] = Field(default_factory=dict)
    ledger: Optional[Dict[str, Any]] = None

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def record(self, name: str, ok: bool, failure: Optional[str] = None) -> None:
        self.checks[name] = bool(ok)
        if not ok:
            self.failures.append(failure or name)

    def to_dict(self) -> Dict[str, Any]:
        data = self.model_dump(exclude_none=True)
        data['passed'] = self.passed
        return data


class VerificationRun(BaseModel):
    """一次定理扫描"""
    family: str
    ns: List[int]
    ms: List[int]
    seed: int
    instances: List[InvariantReport] = Field(default_factory=list)
    summary: Dict[str, int] = Field(default_factory=dict)

    @model_validator(mode='after')
    def _summarise(self) -> 'VerificationRun':
        names = [r.instance for r in self.instances]
        if len(set(names)) != len(names):
            raise ValueError("every instance must appear exactly once")
        passed = sum(1 for r in self.instances if r.passed)
        self.summary = {'total': len(names), 'passed': passed, 'failed': len(names) - passed}
        return self

    @property
    def passed(self) -> bool:
        return self.summary.get('failed', 0) == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            'family': self.family,
            'ns': self.ns,
            'ms': self.ms,
            'seed': self.seed,
            'summary': self.summary,
            'passed': self.passed,
            'instances': [r.to_dict() for r in self.instances],
        }

    def human_summary(self) -> str:
        lines = [f"{self.family} sweep: {self.summary['passed']}/{self.summary['total']} instances passed"]
        for r in self.instances:
            if not r.passed:
                lines.append(f"  FAIL {r.instance}: {'; '.join(r.failures)}")
        return "\n".join(lines) + "\n"


class RandomCheck(BaseModel):
    graph: str
    vertex_count: int
    sdim_brute: int
    alpha: int
    beta: int
    pd: Optional[int] = None
    dim: Optional[int] = None
    failures: List[str] = Field(default_factory=list)


class RandomSuiteReport(BaseModel):
    """随机连通图语料上的路径一致性、α + β = n、pd <= dim + 1"""
    seed: int
    size: int
    results: List[RandomCheck] = Field(default_factory=list)

    @property
    def failures(self) -> List[RandomCheck]:
        return [r for r in self.results if r.failures]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        return {
            'seed': self.seed,
            'size': self.size,
            'checked': len(self.results),
            'passed': self.passed,
            'failures': [r.model_dump(exclude_none=True) for r in self.failures],
        }
