from typing import Any, Dict, Optional

from domain.entity.certificate import ExpectedSign
from domain.entity.proj_map import ProjMap
from domain.service.git_service import GitService
from domain.value_object.weight_vector import WeightVector
from infrastructure.monitoring.logging import StructuredLogger
from infrastructure.monitoring.tracing import trace_span


class AnalyzeStabilityUseCase:
    """mu для заданного веса и поиск дестабилизирующей диагональной 1-PS"""

    def __init__(self, git_service: GitService):
        self.git_service = git_service
        self.logger = StructuredLogger('analyze_stability_uc')

    @trace_span("use_case.mu")
    def mu(self, m: ProjMap, weights: WeightVector, expect: Optional[ExpectedSign] = None) -> Dict[str, Any]:
        exponents = self.git_service.mu_multiset(m, weights)
        self.logger.metric("support_size", m.support_size())
        result: Dict[str, Any] = {
            'map': m.to_dict(),
            'weights': weights.to_list(),
            'mu': min(exponents),
            'exponents': sorted(exponents),
        }
        if expect is not None:
            certificate = self.git_service.verify_certificate(m, weights, expect)
            result['certificate'] = certificate.to_dict()
            result['passed'] = certificate.verified
        return result

    @trace_span("use_case.destab")
    def destab(self, m: ProjMap, strict: bool) -> Dict[str, Any]:
        certificate = self.git_service.find_destabilizing_diag(m, strict)
        mode = "strict" if strict else "nonstrict"
        if certificate is None:
            self.logger.info("No diagonal destabilizing weight", extra={'mode': mode, 'map': m.format()})
            return {'map': m.to_dict(), 'mode': mode, 'found': False, 'certificate': None}
        return {'map': m.to_dict(), 'mode': mode, 'found': True, 'certificate': certificate.to_dict()}
