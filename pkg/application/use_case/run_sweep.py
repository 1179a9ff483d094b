import random
from typing import Any, Dict, List

from domain.entity.certificate import ExpectedSign
from domain.entity.verdict import Conclusion
from domain.exception.errors import RangeError
from domain.service.classify_service import ClassifyService
from domain.service.git_service import GitService
from domain.service.henon_service import HenonService
from domain.value_object.weight_vector import WeightVector
from infrastructure.monitoring.logging import StructuredLogger
from infrastructure.monitoring.metrics import metrics_collector
from infrastructure.monitoring.tracing import trace_span

SWEEPS = ("theorem", "corollary")


class RunSweepUseCase:
    """Проверка утверждений на сериях случайных отображений Хенона с фиксированным seed"""

    def __init__(self, henon_service: HenonService, git_service: GitService, classify_service: ClassifyService):
        self.henon_service = henon_service
        self.git_service = git_service
        self.classify_service = classify_service
        self.logger = StructuredLogger('run_sweep_uc')

    @trace_span("use_case.sweep")
    def run(self, kind: str, rng: random.Random, count: int, max_N: int = 5, max_d: int = 4) -> Dict[str, Any]:
        if kind not in SWEEPS:
            raise RangeError(f"unknown sweep {kind!r}, expected one of {', '.join(SWEEPS)}")
        if count < 1:
            raise RangeError(f"count must be positive, got {count}")
        if kind == "theorem":
            return self.theorem_sweep(rng, count, max_N, max_d)
        return self.corollary_sweep(rng, count)

    def theorem_sweep(self, rng: random.Random, per_cell: int, max_N: int, max_d: int) -> Dict[str, Any]:
        """Блочный сертификат даёт mu > 0 для всех (N, k, d), кроме d = k = 2"""
        cells: List[Dict[str, Any]] = []
        failures = 0
        for N in range(2, max_N + 1):
            for k in range(2, N + 1):
                for d in range(2, max_d + 1):
                    if d == 2 and k == 2:
                        continue
                    weights = self.git_service.block_certificate(N, k, d)
                    mus = []
                    for _ in range(per_cell):
                        spec = self.henon_service.random_spec(rng, N, k, d)
                        certificate = self.git_service.verify_certificate(
                            self.henon_service.homogenize_map(spec), weights, ExpectedSign.POSITIVE)
                        mus.append(certificate.mu)
                        outcome = "verified" if certificate.verified else "failed"
                        metrics_collector.record_sweep_instance("theorem", outcome)
                        failures += not certificate.verified
                    cells.append({'N': N, 'k': k, 'd': d, 'weights': weights.to_list(), 'mu': mus})
        self.logger.info("Theorem sweep finished", extra={'cells': len(cells), 'failures': failures})
        return {'sweep': 'theorem', 'per_cell': per_cell, 'cells': cells, 'failures': failures,
                'passed': failures == 0}

    def corollary_sweep(self, rng: random.Random, count: int) -> Dict[str, Any]:
        """Случайные квадратичные отображения Хенона плоскости полустабильны, mu(1,0,-1) = 0"""
        witness = WeightVector.of(1, 0, -1)
        instances = []
        failures = 0
        for _ in range(count):
            spec = self.henon_service.random_quadratic_plane(rng)
            m = self.henon_service.homogenize_map(spec)
            verdict = self.classify_service.rat22_verdict(m)
            mu = self.git_service.mu(m, witness)
            passed = verdict.conclusion is Conclusion.SEMISTABLE and mu == 0
            metrics_collector.record_sweep_instance("corollary", "verified" if passed else "failed")
            failures += not passed
            instances.append({'spec': spec.to_text(), 'conclusion': verdict.conclusion.value,
                              'branch': verdict.branch.value, 'mu': mu})
        self.logger.info("Corollary sweep finished", extra={'instances': count, 'failures': failures})
        return {'sweep': 'corollary', 'instances': instances, 'failures': failures, 'passed': failures == 0}
