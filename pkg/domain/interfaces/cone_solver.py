from abc import ABC, abstractmethod
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

# coefficients . x >= rhs
Inequality = Tuple[Tuple[Fraction, ...], Fraction]


class ConeSolverInterface(ABC):
    """Точная проверка совместности системы линейных неравенств над Q"""

    name: str = "abstract"

    @abstractmethod
    def find_point(self, inequalities: Sequence[Inequality], dimension: int) -> Optional[List[Fraction]]:
        """Рациональная точка, удовлетворяющая всем неравенствам, или None"""
        pass
