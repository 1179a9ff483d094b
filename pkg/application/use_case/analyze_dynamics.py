from typing import Any, Dict

from domain.entity.proj_map import ProjMap
from domain.service.rational_map_service import RationalMapService
from domain.value_object.projective import LineP2, format_point
from infrastructure.monitoring.logging import StructuredLogger
from infrastructure.monitoring.tracing import trace_span


class AnalyzeDynamicsUseCase:
    """Степени итераций, морфизмы и образы прямых"""

    def __init__(self, rational_maps: RationalMapService):
        self.rational_maps = rational_maps
        self.logger = StructuredLogger('analyze_dynamics_uc')

    @trace_span("use_case.iterate")
    def iterate(self, m: ProjMap, n: int) -> Dict[str, Any]:
        iterates = self.rational_maps.iterates(m, n)
        degrees = [f.d for f in iterates]
        result: Dict[str, Any] = {
            'map': m.to_dict(),
            'n': n,
            'degrees': degrees,
            'algebraically_stable_upto_n': all(deg == degrees[0] ** (i + 1) for i, deg in enumerate(degrees)),
            'dominant': self.rational_maps.is_dominant(iterates[0]),
        }
        if m.N == 2:
            normalized = iterates[0]
            result['morphism'] = self.rational_maps.is_morphism_p2(normalized)
            if not result['morphism']:
                result['rational_common_zeros'] = [
                    format_point(p) for p in self.rational_maps.common_zeros_p2(normalized)]
        return result

    @trace_span("use_case.line_image")
    def line_image(self, m: ProjMap, line: LineP2) -> Dict[str, Any]:
        image = self.rational_maps.line_image(self.rational_maps.normalize(m), line)
        return {'map': m.to_dict(), 'line': line.format(), 'image': image.to_dict()}
