from abc import abstractmethod
from fractions import Fraction
from typing import List, Optional, Sequence

from domain.exception.errors import StructuralError, VerificationError
from domain.interfaces.cone_solver import ConeSolverInterface, Inequality
from infrastructure.monitoring.logging import StructuredLogger
from infrastructure.monitoring.metrics import metrics_collector


class BaseConeSolver(ConeSolverInterface):
    def __init__(self, name: str):
        self.name = name
        self.logger = StructuredLogger(f"{name}_solver")
        self.peak_inequalities = 0

    def find_point(self, inequalities: Sequence[Inequality], dimension: int) -> Optional[List[Fraction]]:
        """Решить систему и проверить ответ подстановкой"""
        system = [self._coerce(row, dimension) for row in inequalities]
        self.peak_inequalities = len(system)
        point = self._solve(system, dimension)
        metrics_collector.record_cone_solve(self.name, point is not None, self.peak_inequalities)
        self.logger.metric("cone_peak_inequalities", self.peak_inequalities,
                           {'feasible': str(point is not None), 'dimension': str(dimension)})
        if point is not None:
            for coefficients, rhs in system:
                if sum(c * v for c, v in zip(coefficients, point)) < rhs:
                    raise VerificationError(f"{self.name} returned a point violating an inequality",
                                            point=[str(v) for v in point])
        return point

    @abstractmethod
    def _solve(self, system: List[Inequality], dimension: int) -> Optional[List[Fraction]]:
        pass

    @staticmethod
    def _coerce(row: Inequality, dimension: int) -> Inequality:
        coefficients, rhs = row
        if len(coefficients) != dimension:
            raise StructuralError(f"inequality has {len(coefficients)} coefficients, expected {dimension}")
        return tuple(Fraction(c) for c in coefficients), Fraction(rhs)
