from dataclasses import dataclass
from fractions import Fraction
from typing import List

from domain.entity.poly import Poly


@dataclass(frozen=True)
class RootReport:
    """Рациональные корни с кратностью и остаток без рациональных корней"""
    roots: List[Fraction]
    residual: Poly

    @property
    def residual_degree(self) -> int:
        degree = self.residual.degree()
        return 0 if self.residual.is_zero() else int(degree)

    def distinct_roots(self) -> List[Fraction]:
        return sorted(set(self.roots))
