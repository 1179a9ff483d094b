from typing import Any, Dict

from domain.entity.certificate import ExpectedSign
from domain.entity.henon_spec import HenonSpec
from domain.service.git_service import GitService
from domain.service.henon_service import HenonService
from infrastructure.monitoring.logging import StructuredLogger
from infrastructure.monitoring.tracing import trace_span


class BuildHenonUseCase:
    """Построение гомогенизированного отображения Хенона, его обратного и таблиц показателей"""

    def __init__(self, henon_service: HenonService, git_service: GitService):
        self.henon_service = henon_service
        self.git_service = git_service
        self.logger = StructuredLogger('build_henon_uc')

    @trace_span("use_case.henon_build")
    def build(self, spec: HenonSpec, with_verdict: bool = False) -> Dict[str, Any]:
        names = spec.names()
        homogenized = self.henon_service.homogenize_map(spec)
        result: Dict[str, Any] = {
            'spec': spec.to_dict(),
            'affine': [c.format(names) for c in self.henon_service.build_affine(spec)],
            'inverse': [c.format(names) for c in self.henon_service.inverse_affine(spec)],
            'inverse_verified': self.henon_service.verify_inverse(spec),
            'map': homogenized.to_dict(),
            'map_text': homogenized.to_text(),
        }
        if with_verdict:
            result['verdict'] = self.verdict(spec)
        return result

    def verdict(self, spec: HenonSpec) -> Dict[str, Any]:
        """Ожидаемый вердикт GIT с проверенным блочным сертификатом"""
        expected = self.git_service.expected_verdict(spec.N, spec.k, spec.d)
        parameters = self.git_service.certificate_parameters(spec.N, spec.k, spec.d)
        weights = self.git_service.henon_block_weights(spec.N, spec.k, *parameters)
        sign = ExpectedSign.parse(expected['certificate_sign'])
        certificate = self.git_service.require_certificate(self.henon_service.homogenize_map(spec), weights, sign)
        return {**expected, 'parameters': dict(zip(("r", "s", "t"), parameters)),
                'certificate': certificate.to_dict()}

    @trace_span("use_case.table")
    def table(self, N: int, k: int, d: int) -> Dict[str, Any]:
        table = self.git_service.generic_table(N, k, d)
        parameters = self.git_service.certificate_parameters(N, k, d)
        names = [f"x{i + 1}" for i in range(N + 1)]
        return {**table.to_dict(names, parameters), 'minimum': int(table.minimum(parameters)),
                'expected': self.git_service.expected_verdict(N, k, d)}

    @trace_span("use_case.table2")
    def table2(self) -> Dict[str, Any]:
        return self.git_service.table2().to_dict(["x", "y", "z"])
