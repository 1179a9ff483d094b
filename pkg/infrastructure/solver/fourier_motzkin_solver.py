import math
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Tuple

from config.settings import config
from domain.exception.errors import UnsupportedError
from domain.interfaces.cone_solver import Inequality
from infrastructure.solver.base_cone_solver import BaseConeSolver

# (coefficients, rhs, номера исходных неравенств)
Row = Tuple[Tuple[Fraction, ...], Fraction, FrozenSet[int]]


class FourierMotzkinSolver(BaseConeSolver):
    """Исключение Фурье-Моцкина с правилом Черникова и обратной подстановкой"""

    def __init__(self, max_inequalities: Optional[int] = None):
        super().__init__("fourier_motzkin")
        self.max_inequalities = max_inequalities or config.analysis.fm_max_inequalities

    def _solve(self, system: List[Inequality], dimension: int) -> Optional[List[Fraction]]:
        rows = self._reduce([(c, r, frozenset([i])) for i, (c, r) in enumerate(system)])
        if rows is None:
            return None

        stages: List[List[Row]] = []
        for step, var in enumerate(reversed(range(dimension))):
            stages.append(rows)
            positive, negative, combined = [], [], []
            for row in rows:
                a = row[0][var]
                if a > 0:
                    positive.append(row)
                elif a < 0:
                    negative.append(row)
                else:
                    combined.append(row)
            for p_coeffs, p_rhs, p_origin in positive:
                for n_coeffs, n_rhs, n_origin in negative:
                    origin = p_origin | n_origin
                    # правило Черникова: после step+1 исключений не больше step+2 исходных
                    if len(origin) > step + 2:
                        continue
                    a, b = p_coeffs[var], -n_coeffs[var]
                    coeffs = tuple(b * p + a * n for p, n in zip(p_coeffs, n_coeffs))
                    combined.append((coeffs, b * p_rhs + a * n_rhs, origin))
            rows = self._reduce(combined)
            if rows is None:
                self.logger.debug("System infeasible", extra={'eliminated': step + 1})
                return None
            self.peak_inequalities = max(self.peak_inequalities, len(rows))
            if len(rows) > self.max_inequalities:
                raise UnsupportedError(
                    f"Fourier-Motzkin produced {len(rows)} inequalities, limit is {self.max_inequalities}",
                    limit=self.max_inequalities)

        point = [Fraction(0)] * dimension
        for var, stage in zip(range(dimension), reversed(stages)):
            lower: Optional[Fraction] = None
            upper: Optional[Fraction] = None
            for coeffs, rhs, _ in stage:
                a = coeffs[var]
                if not a:
                    continue
                bound = (rhs - sum(c * point[j] for j, c in enumerate(coeffs[:var]))) / a
                if a > 0:
                    lower = bound if lower is None else max(lower, bound)
                else:
                    upper = bound if upper is None else min(upper, bound)
            point[var] = self._choose(lower, upper)
        return point

    @staticmethod
    def _choose(lower: Optional[Fraction], upper: Optional[Fraction]) -> Fraction:
        if lower is not None and upper is not None:
            return lower if lower == upper else (lower + upper) / 2
        if lower is not None:
            return lower if lower > 0 else Fraction(0)
        if upper is not None:
            return upper if upper < 0 else Fraction(0)
        return Fraction(0)

    @staticmethod
    def _reduce(rows: List[Row]) -> Optional[List[Row]]:
        """Нормировать строки и убрать доминируемые дубликаты, None при противоречии

        Строка с теми же коэффициентами отбрасывается, только если другая строка не слабее
        по правой части и выведена из подмножества её исходных неравенств. Иначе правило
        Черникова отсекло бы комбинации, которые ещё нужны.
        """
        kept: Dict[Tuple[Fraction, ...], List[Row]] = {}
        for coeffs, rhs, origin in rows:
            if not any(coeffs):
                if rhs > 0:
                    return None
                continue
            scale = Fraction(math.lcm(*(c.denominator for c in coeffs)))
            numerators = [int(c * scale) for c in coeffs]
            scale /= math.gcd(*numerators)
            coeffs = tuple(c * scale for c in coeffs)
            rhs = rhs * scale
            group = kept.setdefault(coeffs, [])
            if any(other_rhs >= rhs and other_origin <= origin for _, other_rhs, other_origin in group):
                continue
            group[:] = [row for row in group if not (rhs >= row[1] and origin <= row[2])]
            group.append((coeffs, rhs, origin))
        return [row for key in sorted(kept) for row in sorted(kept[key], key=lambda r: (-r[1], sorted(r[2])))]
