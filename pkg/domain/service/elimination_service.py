from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import List, Sequence, Tuple

from domain.entity.poly import Poly
from domain.entity.verdict import ResidualContent, ResidualStatus
from domain.exception.errors import DegenerateMapError
from domain.service.poly_algebra_service import PolyAlgebraService
from domain.value_object.projective import Point, normalize_point
from infrastructure.monitoring.logging import StructuredLogger

X, Y, Z = 0, 1, 2


@dataclass
class ProjectiveSolution:
    """Рациональные общие нули однородной системы в P^2 и описание остатка"""
    points: List[Point] = field(default_factory=list)
    residuals: List[ResidualContent] = field(default_factory=list)

    def add_point(self, point: Sequence):
        normalized = normalize_point(point)
        if normalized not in self.points:
            self.points.append(normalized)


class EliminationService:
    """Решение систем однородных уравнений в P^2 по картам: исключение результантами и обратная подстановка"""

    def __init__(self, algebra: PolyAlgebraService):
        self.algebra = algebra
        self.logger = StructuredLogger("elimination_service")

    def solve_p2(self, equations: Sequence[Poly]) -> ProjectiveSolution:
        """Все рациональные общие нули форм от (x, y, z).

        Карты: z = 1 (аффинная плоскость), затем точки (u : 1 : 0), затем (1 : 0 : 0).
        """
        equations = [e for e in equations if not e.is_zero()]
        if not equations:
            raise DegenerateMapError("every equation vanishes identically")
        solution = ProjectiveSolution()
        self._solve_affine_chart(equations, solution)
        self._solve_line_at_infinity(equations, solution)
        if all(e.evaluate([1, 0, 0]) == 0 for e in equations):
            solution.add_point((1, 0, 0))
        self.logger.metric("p2_rational_solutions", len(solution.points),
                           {'residuals': str(len(solution.residuals))})
        return solution

    # --- карта z = 1 ----------------------------------------------------

    def _solve_affine_chart(self, equations: Sequence[Poly], solution: ProjectiveSolution):
        affine = [e.substitute(Z, 1) for e in equations]
        affine = [a for a in affine if not a.is_zero()]
        if any(a.is_constant() for a in affine):
            return
        common = self.algebra.gcd_many(affine)
        if not common.is_constant():
            solution.residuals.append(ResidualContent(
                chart="z=1 curve", polynomial=common, degree=int(common.degree()),
                status=ResidualStatus.CONFIRMED))
            affine = [self.algebra.exact_divide(a, common) for a in affine]
            if any(a.is_constant() for a in affine):
                return

        _, x_residual, x_confirmed = self._eliminate_and_backsolve(affine, keep=X, drop=Y, solution=solution)
        _, y_residual, y_confirmed = self._eliminate_and_backsolve(affine, keep=Y, drop=X, solution=solution)

        # остаток по x без x-координат уже подтверждённых решений (рациональный y, иррациональный x)
        x_residual = self._strip(x_residual, y_confirmed)
        y_residual = self._strip(y_residual, x_confirmed)
        if not x_residual.is_constant() and not y_residual.is_constant():
            for residual in (x_residual, y_residual):
                solution.residuals.append(ResidualContent(
                    chart="z=1 elimination", polynomial=residual, degree=int(residual.degree()),
                    status=ResidualStatus.POSSIBLE))

    def _eliminate_and_backsolve(self, affine: Sequence[Poly], keep: int, drop: int,
                                 solution: ProjectiveSolution) -> Tuple[List[Fraction], Poly, List[Poly]]:
        """Исключить переменную drop, найти рациональные значения keep и достроить точки"""
        eliminant = self.eliminant(affine, drop)
        report = self.algebra.rational_roots(eliminant)
        confirmed: List[Poly] = []
        for value in report.distinct_roots():
            restricted = [a.substitute(keep, value) for a in affine]
            restricted = [r for r in restricted if not r.is_zero()]
            if not restricted:
                continue
            if any(r.is_constant() for r in restricted):
                continue
            fiber = self.algebra.gcd_many(restricted)
            roots = self.algebra.rational_roots(fiber)
            for other in roots.distinct_roots():
                point = [Fraction(0)] * 3
                point[keep] = value
                point[drop] = other
                point[Z] = Fraction(1)
                if all(a.evaluate(point) == 0 for a in affine):
                    solution.add_point(point)
            if not roots.residual.is_constant():
                solution.residuals.append(ResidualContent(
                    chart=f"z=1, {'xyz'[keep]}={value}", polynomial=roots.residual,
                    degree=int(roots.residual.degree()), status=ResidualStatus.CONFIRMED))
                confirmed.append(roots.residual)
        return report.distinct_roots(), self.algebra.squarefree_part(report.residual), confirmed

    def eliminant(self, polys: Sequence[Poly], drop: int) -> Poly:
        """Многочлен без переменной drop, обращающийся в нуль на проекции общих нулей"""
        free = [p for p in polys if p.degree_in(drop) <= 0]
        involved = sorted((p for p in polys if p.degree_in(drop) > 0), key=len)
        candidates: List[Poly] = list(free)
        for p, q in combinations(involved, 2):
            resultant = self.algebra.resultant(p, q, drop)
            if not resultant.is_zero():
                candidates.append(resultant)
        if not candidates and len(involved) >= 2:
            # все пары имеют общий множитель: линейные комбинации
            for weight in range(2, 2 + len(involved) + 3):
                combined = Poly.zero(involved[0].num_vars)
                for i, p in enumerate(involved[1:]):
                    combined = combined + p.scale(weight ** i)
                resultant = self.algebra.resultant(involved[0], combined, drop)
                if not resultant.is_zero():
                    candidates.append(resultant)
                    break
        if not candidates:
            raise DegenerateMapError("elimination produced only zero resultants")
        return self.algebra.gcd_many(candidates)

    def _strip(self, residual: Poly, known: Sequence[Poly]) -> Poly:
        if residual.is_constant():
            return residual
        for factor in known:
            if factor.variables_used() != residual.variables_used():
                continue
            while True:
                common = self.algebra.gcd(residual, factor)
                if common.is_constant():
                    break
                residual = self.algebra.exact_divide(residual, common)
        return residual

    # --- бесконечно удалённая прямая -----------------------------------------

    def _solve_line_at_infinity(self, equations: Sequence[Poly], solution: ProjectiveSolution):
        restricted = [e.substitute(Y, 1).substitute(Z, 0) for e in equations]
        restricted = [r for r in restricted if not r.is_zero()]
        if not restricted:
            solution.residuals.append(ResidualContent(
                chart="z=0", polynomial=Poly.variable(3, Z), degree=1, status=ResidualStatus.CONFIRMED))
            return
        if any(r.is_constant() for r in restricted):
            return
        common = self.algebra.gcd_many(restricted)
        roots = self.algebra.rational_roots(common)
        for u in roots.distinct_roots():
            solution.add_point((u, 1, 0))
        if not roots.residual.is_constant():
            solution.residuals.append(ResidualContent(
                chart="z=0, y=1", polynomial=roots.residual, degree=int(roots.residual.degree()),
                status=ResidualStatus.CONFIRMED))
