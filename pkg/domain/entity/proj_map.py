from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from domain.entity.poly import Monomial, Poly, default_names
from domain.exception.errors import DegenerateMapError, StructuralError, ValidationError


@dataclass(frozen=True)
class ProjMap:
    """Рациональное отображение P^N -> P^N степени d: N+1 однородных координат"""
    N: int
    d: int
    coords: Tuple[Poly, ...]

    def __post_init__(self):
        coords = tuple(self.coords)
        object.__setattr__(self, 'coords', coords)
        if self.N < 1:
            raise ValidationError(f"N must be at least 1, got {self.N}")
        if self.d < 1:
            raise ValidationError(f"d must be at least 1, got {self.d}")
        if len(coords) != self.N + 1:
            raise StructuralError(f"a self-map of P^{self.N} needs {self.N + 1} coordinates, got {len(coords)}")
        for j, c in enumerate(coords):
            if c.num_vars != self.N + 1:
                raise StructuralError(
                    f"coordinate {j + 1} lives in {c.num_vars} variables, expected {self.N + 1}")
            if c.is_zero():
                continue
            if not c.is_homogeneous():
                raise ValidationError(f"coordinate {j + 1} is not homogeneous: {c}", coordinate=j + 1)
            if c.degree() != self.d:
                raise ValidationError(
                    f"coordinate {j + 1} has degree {c.degree()}, expected {self.d}", coordinate=j + 1)
        if all(c.is_zero() for c in coords):
            raise DegenerateMapError("all coordinates are zero")

    @classmethod
    def from_coords(cls, coords: Sequence[Poly]) -> 'ProjMap':
        """Размерность и степень берутся из самих координат"""
        coords = tuple(coords)
        nonzero = [c for c in coords if not c.is_zero()]
        if not nonzero:
            raise DegenerateMapError("all coordinates are zero")
        return cls(N=len(coords) - 1, d=int(nonzero[0].degree()), coords=coords)

    @property
    def num_vars(self) -> int:
        return self.N + 1

    def support(self) -> Iterator[Tuple[int, Monomial]]:
        """Пары (координата, моном) с ненулевым коэффициентом"""
        for j, c in enumerate(self.coords):
            for monomial in c.monomials():
                yield j, monomial

    def support_size(self) -> int:
        return sum(len(c) for c in self.coords)

    def names(self) -> List[str]:
        return default_names(self.num_vars)

    def format(self, names: Optional[Sequence[str]] = None) -> str:
        names = names or self.names()
        return "[" + " : ".join(c.format(names) for c in self.coords) + "]"

    def to_text(self) -> str:
        """Запись в грамматике файлов отображений"""
        names = self.names()
        return f"map N={self.N} d={self.d} vars=({','.join(names)}): {self.format(names)}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            'N': self.N,
            'd': self.d,
            'vars': self.names(),
            'coords': [c.format(self.names()) for c in self.coords],
        }

    def __str__(self) -> str:
        return self.format()
