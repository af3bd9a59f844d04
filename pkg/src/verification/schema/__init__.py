from .report import InvariantReport, RandomCheck, RandomSuiteReport, VerificationRun

__all__ = ['InvariantReport', 'RandomCheck', 'RandomSuiteReport', 'VerificationRun']
