from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from domain.entity.poly import Monomial
from domain.value_object.linear_form import LinearForm
from domain.value_object.weight_vector import WeightVector


class CertificateKind(Enum):
    STRICTLY_DESTABILIZING = "strictly-destabilizing"  # mu > 0
    NON_STABLE_WITNESS = "non-stable-witness"  # mu >= 0


class ExpectedSign(Enum):
    POSITIVE = ">0"
    NONNEGATIVE = ">=0"

    def holds(self, value: int) -> bool:
        return value > 0 if self is ExpectedSign.POSITIVE else value >= 0

    @classmethod
    def parse(cls, text: str) -> 'ExpectedSign':
        for sign in cls:
            if sign.value == text.strip():
                return sign
        raise ValueError(f"unknown sign {text!r}, expected '>0' or '>=0'")


@dataclass(frozen=True)
class MuCertificate:
    """Вес 1-PS вместе с пересчитанным значением mu"""
    weights: WeightVector
    mu: int
    support_size: int
    expected: Optional[ExpectedSign] = None
    verified: bool = True

    @property
    def kind(self) -> Optional[CertificateKind]:
        if self.mu > 0:
            return CertificateKind.STRICTLY_DESTABILIZING
        if self.mu == 0:
            return CertificateKind.NON_STABLE_WITNESS
        return None

    def to_dict(self) -> Dict[str, Any]:
        data = {
            'weights': self.weights.to_list(),
            'mu': self.mu,
            'kind': self.kind.value if self.kind else None,
            'support_size': self.support_size,
            'verified': self.verified,
        }
        if self.expected is not None:
            data['expected'] = self.expected.value
        return data


@dataclass(frozen=True)
class ExponentRow:
    """Строка таблицы показателей: координата, моном и линейная форма"""
    label: str
    coordinate: int  # 1-based
    monomial: Monomial
    form: LinearForm
    m: Optional[int] = None  # степень по x_k..x_N для строки IV

    def to_dict(self, names: Sequence[str]) -> Dict[str, Any]:
        factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, self.monomial) if e]
        data = {
            'row': self.label,
            'coordinate': self.coordinate,
            'monomial': "*".join(factors) or "1",
            'form': self.form.format(),
        }
        if self.m is not None:
            data['m'] = self.m
        return data


@dataclass(frozen=True)
class SymbolicExponentTable:
    """Показатели alpha как линейные формы от параметров блочной 1-PS"""
    N: int
    d: int
    rows: Tuple[ExponentRow, ...] = field(default_factory=tuple)
    k: Optional[int] = None

    def labels(self) -> List[str]:
        def order(label: str):
            return (_ROMAN.index(label) if label in _ROMAN else len(_ROMAN), label)

        return sorted({row.label for row in self.rows}, key=order)

    def rows_with_label(self, label: str) -> List[ExponentRow]:
        return [row for row in self.rows if row.label == label]

    def evaluate(self, parameters: Sequence[int]) -> List[Tuple[ExponentRow, Fraction]]:
        return [(row, row.form.evaluate(parameters)) for row in self.rows]

    def minimum(self, parameters: Sequence[int]) -> Fraction:
        return min(value for _, value in self.evaluate(parameters))

    def to_dict(self, names: Sequence[str], parameters: Optional[Sequence[int]] = None) -> Dict[str, Any]:
        rows = []
        for row in self.rows:
            entry = row.to_dict(names)
            if parameters is not None:
                entry['value'] = int(row.form.evaluate(parameters))
            rows.append(entry)
        data = {'N': self.N, 'k': self.k, 'd': self.d, 'rows': rows}
        if parameters is not None:
            data['parameters'] = dict(zip(self.rows[0].form.names, parameters)) if self.rows else {}
        return data


_ROMAN = ["I", "II", "III", "IV", "V", "VI"]
