from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from domain.entity.poly import Poly
from domain.value_object.projective import LineP2, PlaneCurveImage, Point


class Branch(Enum):
    FIBERED = "fibered"  # (a)
    DEGREE_DROP = "degree-drop"  # (b)
    BOTH = "both"
    NEITHER = "neither"

    @classmethod
    def from_flags(cls, fibered: bool, degree_drop: bool) -> 'Branch':
        if fibered and degree_drop:
            return cls.BOTH
        if fibered:
            return cls.FIBERED
        if degree_drop:
            return cls.DEGREE_DROP
        return cls.NEITHER


class Conclusion(Enum):
    SEMISTABLE = "semistable"
    UNKNOWN = "unknown"


class ResidualStatus(Enum):
    CONFIRMED = "confirmed"  # решения вне Q точно существуют
    POSSIBLE = "possible"  # остаток исключения, может быть посторонним


@dataclass(frozen=True)
class ResidualContent:
    """Нерациональная часть множества решений: только степень и минимальный многочлен"""
    chart: str
    polynomial: Poly
    degree: int
    status: ResidualStatus

    def to_dict(self) -> Dict[str, Any]:
        return {
            'chart': self.chart,
            'polynomial': self.polynomial.format(),
            'degree': self.degree,
            'status': self.status.value,
        }


@dataclass(frozen=True)
class CenterReport:
    """Результат fibering_centers: рациональные центры и нерешённый остаток"""
    centers: Tuple[Point, ...]
    residuals: Tuple[ResidualContent, ...] = ()

    @property
    def resolved(self) -> bool:
        return not self.residuals

    def to_dict(self) -> Dict[str, Any]:
        return {
            'centers': [[str(c) for c in p] for p in self.centers],
            'unresolved': [r.to_dict() for r in self.residuals],
        }


@dataclass(frozen=True)
class FiberingWitness:
    """Линейная проекция pi = [L1 : L2] с центром center и отображение G прямой P^1"""
    center: Point
    pi: Tuple[Tuple[Fraction, Fraction, Fraction], Tuple[Fraction, Fraction, Fraction]]
    G: Tuple[Poly, Poly]
    g_degree_drops: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            'center': [str(c) for c in self.center],
            'pi': [[str(c) for c in row] for row in self.pi],
            'G': [g.format(["v", "w"]) for g in self.G],
            'G_degree_drops': self.g_degree_drops,
        }


@dataclass(frozen=True)
class DegreeDrop:
    deg_F2: int
    drops: bool

    def to_dict(self) -> Dict[str, Any]:
        return {'deg_F2': self.deg_F2, 'drop': self.drops}


@dataclass(frozen=True)
class Rat22Verdict:
    """Итог классификации квадратичного доминантного отображения P^2; значения "unstable" нет"""
    branch: Branch
    conclusion: Conclusion
    centers: CenterReport
    witnesses: Tuple[FiberingWitness, ...]
    degree_drop: DegreeDrop

    def __post_init__(self):
        must_be_semistable = self.branch is Branch.NEITHER and self.centers.resolved
        if (self.conclusion is Conclusion.SEMISTABLE) != must_be_semistable:
            raise ValueError(f"conclusion {self.conclusion.value} contradicts branch {self.branch.value}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            'branch': self.branch.value,
            'semistable_conclusion': self.conclusion.value,
            'centers': self.centers.to_dict()['centers'],
            'deg_F2': self.degree_drop.deg_F2,
            'evidence': {
                'fibering': [w.to_dict() for w in self.witnesses],
                'unresolved': self.centers.to_dict()['unresolved'],
                'degree_drop': self.degree_drop.to_dict(),
            },
        }


@dataclass(frozen=True)
class LineCheck:
    """Одна проверка трихотомии образов прямых"""
    line_class: str
    line: LineP2
    expected: str
    image: PlaneCurveImage
    passed: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            'class': self.line_class,
            'line': self.line.format(),
            'expected': self.expected,
            'image': self.image.to_dict(),
            'passed': self.passed,
        }


@dataclass
class AuditReport:
    checks: List[LineCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'passed': self.passed,
            'checks': [check.to_dict() for check in self.checks],
        }

    def summary(self) -> Optional[str]:
        failed = [c for c in self.checks if not c.passed]
        if not failed:
            return None
        return "; ".join(f"{c.line_class} {c.line.format()}: expected {c.expected}" for c in failed)

