import random
from typing import Any, Dict, Optional, Sequence

from domain.entity.henon_spec import HenonSpec
from domain.entity.proj_map import ProjMap
from domain.service.classify_service import ClassifyService
from domain.value_object.projective import LineP2
from infrastructure.monitoring.logging import StructuredLogger
from infrastructure.monitoring.tracing import trace_span


class ClassifyQuadraticUseCase:

    def __init__(self, classify_service: ClassifyService):
        self.classify_service = classify_service
        self.logger = StructuredLogger('classify_quadratic_uc')

    @trace_span("use_case.classify22")
    def classify(self, m: ProjMap) -> Dict[str, Any]:
        verdict = self.classify_service.rat22_verdict(m)
        return {'map': m.to_dict(), **verdict.to_dict()}

    @trace_span("use_case.audit_henon22")
    def audit(self, spec: HenonSpec, rng: random.Random,
              lines: Optional[Sequence[LineP2]] = None, samples: int = 5) -> Dict[str, Any]:
        report = self.classify_service.henon_line_audit(spec, rng=rng, lines=lines, samples=samples)
        if not report.passed:
            self.logger.warning("Line audit found mismatches", extra={'summary': report.summary()})
        return {'spec': spec.to_dict(), **report.to_dict()}
