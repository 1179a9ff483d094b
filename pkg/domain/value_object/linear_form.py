from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Sequence, Tuple

from domain.exception.errors import StructuralError


@dataclass(frozen=True)
class LinearForm:
    """Целочисленная линейная форма от именованных параметров (r, s, t)"""
    coefficients: Tuple[int, ...]
    names: Tuple[str, ...] = ("r", "s", "t")

    def __post_init__(self):
        object.__setattr__(self, 'coefficients', tuple(int(c) for c in self.coefficients))
        object.__setattr__(self, 'names', tuple(self.names))
        if len(self.coefficients) != len(self.names):
            raise StructuralError(
                f"{len(self.coefficients)} coefficients for {len(self.names)} parameters")

    def evaluate(self, values: Sequence) -> Fraction:
        if len(values) != len(self.coefficients):
            raise StructuralError(f"expected {len(self.coefficients)} values, got {len(values)}")
        return sum((c * Fraction(v) for c, v in zip(self.coefficients, values)), Fraction(0))

    def as_dict(self) -> Dict[str, int]:
        return {name: c for name, c in zip(self.names, self.coefficients) if c}

    def format(self) -> str:
        pieces = []
        for name, c in zip(self.names, self.coefficients):
            if not c:
                continue
            body = name if abs(c) == 1 else f"{abs(c)}{name}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces) if pieces else "0"

    def __str__(self) -> str:
        return self.format()
