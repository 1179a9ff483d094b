import math
from dataclasses import dataclass
from functools import reduce
from typing import Sequence, Tuple

from domain.exception.errors import StructuralError, ValidationError


@dataclass(frozen=True)
class WeightVector:
    """Диагональная 1-PS: целые веса с нулевой суммой, не все нулевые"""
    weights: Tuple[int, ...]

    def __post_init__(self):
        weights = tuple(self.weights)
        if any(isinstance(w, bool) or int(w) != w for w in weights):
            raise ValidationError(f"weights must be integers: {weights}")
        weights = tuple(int(w) for w in weights)
        object.__setattr__(self, 'weights', weights)
        if len(weights) < 2:
            raise ValidationError("a weight vector needs at least two entries")
        if sum(weights) != 0:
            raise ValidationError(f"weights must sum to 0, got sum {sum(weights)} for {weights}")
        if not any(weights):
            raise ValidationError("the trivial weight vector is not a 1-PS")

    @classmethod
    def of(cls, *weights: int) -> 'WeightVector':
        return cls(tuple(weights))

    def __len__(self) -> int:
        return len(self.weights)

    def __getitem__(self, index: int) -> int:
        return self.weights[index]

    def __iter__(self):
        return iter(self.weights)

    def scaled(self, factor: int) -> 'WeightVector':
        if factor <= 0:
            raise ValidationError("only positive multiples of a 1-PS are 1-PS of the same ray")
        return WeightVector(tuple(factor * w for w in self.weights))

    def permuted(self, permutation: Sequence[int]) -> 'WeightVector':
        """Веса после перестановки координат: новая координата permutation[i] получает вес i"""
        if sorted(permutation) != list(range(len(self.weights))):
            raise StructuralError(f"not a permutation of {len(self.weights)} indices: {permutation}")
        result = [0] * len(self.weights)
        for i, target in enumerate(permutation):
            result[target] = self.weights[i]
        return WeightVector(tuple(result))

    def primitive(self) -> 'WeightVector':
        divisor = reduce(math.gcd, self.weights)
        return WeightVector(tuple(w // divisor for w in self.weights))

    def to_list(self):
        return list(self.weights)

    def __str__(self) -> str:
        return ",".join(str(w) for w in self.weights)


@dataclass(frozen=True)
class ExponentFunctional:
    """Линейный функционал w -> w_j - <i, w> для пары (j, i)"""
    covector: Tuple[int, ...]

    @classmethod
    def from_pair(cls, coordinate: int, monomial: Sequence[int]) -> 'ExponentFunctional':
        if not 0 <= coordinate < len(monomial):
            raise StructuralError(f"coordinate {coordinate} out of range for {len(monomial)} variables")
        covector = [-e for e in monomial]
        covector[coordinate] += 1
        return cls(tuple(covector))

    def value(self, weights: Sequence[int]) -> int:
        if len(weights) != len(self.covector):
            raise StructuralError(
                f"weight vector has length {len(weights)}, functional expects {len(self.covector)}")
        return sum(c * w for c, w in zip(self.covector, weights))
