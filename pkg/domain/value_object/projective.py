from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional, Sequence, Tuple

from domain.entity.poly import Poly
from domain.exception.errors import ValidationError

Point = Tuple[Fraction, ...]


def normalize_point(coordinates: Sequence) -> Point:
    """Представитель точки проективного пространства: первая ненулевая координата равна 1"""
    values = [Fraction(c) for c in coordinates]
    pivot = next((v for v in values if v), None)
    if pivot is None:
        raise ValidationError("the zero vector is not a projective point")
    return tuple(v / pivot for v in values)


def format_point(point: Sequence[Fraction]) -> str:
    return "[" + " : ".join(str(c) for c in point) + "]"


@dataclass(frozen=True)
class LineP2:
    """Прямая ux + vy + wz = 0 в P^2"""
    coefficients: Point

    def __post_init__(self):
        if len(self.coefficients) != 3:
            raise ValidationError("a line in P^2 has three coefficients")
        object.__setattr__(self, 'coefficients', normalize_point(self.coefficients))

    @classmethod
    def of(cls, u, v, w) -> 'LineP2':
        return cls((u, v, w))

    @classmethod
    def from_linear_form(cls, form: Poly) -> 'LineP2':
        if form.num_vars != 3 or not form.is_homogeneous() or form.degree() != 1:
            raise ValidationError(f"a line needs a nonzero linear form in 3 variables, got {form}")
        return cls(tuple(form.coefficient(tuple(1 if j == i else 0 for j in range(3))) for i in range(3)))

    def as_poly(self) -> Poly:
        return Poly.linear_form(self.coefficients)

    def contains(self, point: Sequence) -> bool:
        return sum(c * Fraction(p) for c, p in zip(self.coefficients, point)) == 0

    def spanning_points(self) -> Tuple[Point, Point]:
        """Две точки, порождающие прямую"""
        pivot = next(i for i, c in enumerate(self.coefficients) if c)
        points = []
        for j in range(3):
            if j == pivot:
                continue
            point = [Fraction(0)] * 3
            point[j] = Fraction(1)
            point[pivot] = -self.coefficients[j] / self.coefficients[pivot]
            points.append(tuple(point))
        return points[0], points[1]

    def format(self, names: Sequence[str] = ("x", "y", "z")) -> str:
        return f"{{{self.as_poly().format(names)} = 0}}"

    def to_list(self):
        return [str(c) for c in self.coefficients]

    def __str__(self) -> str:
        return self.format()


class ImageKind(Enum):
    POINT = "point"
    LINE = "line"
    IRREDUCIBLE_CONIC = "irreducible-conic"
    REDUCIBLE_OR_DEGENERATE = "reducible-or-degenerate"


@dataclass(frozen=True)
class PlaneCurveImage:
    """Замыкание образа прямой при отображении P^2"""
    kind: ImageKind
    equation: Optional[Poly] = None
    point: Optional[Point] = None
    parametrization_degree: int = 0
    conic_rank: Optional[int] = None

    def __post_init__(self):
        if self.kind is ImageKind.POINT and self.point is None:
            raise ValidationError("a point image needs its coordinates")
        if self.kind is ImageKind.LINE and (self.equation is None or self.equation.degree() != 1):
            raise ValidationError("a line image needs a linear equation")
        if self.kind is ImageKind.IRREDUCIBLE_CONIC and (self.equation is None or self.equation.degree() != 2):
            raise ValidationError("a conic image needs a quadratic equation")

    @property
    def line(self) -> Optional[LineP2]:
        if self.kind is not ImageKind.LINE:
            return None
        return LineP2.from_linear_form(self.equation)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {'kind': self.kind.value, 'parametrization_degree': self.parametrization_degree}
        if self.point is not None:
            data['point'] = [str(c) for c in self.point]
        if self.equation is not None:
            data['equation'] = self.equation.format()
        if self.conic_rank is not None:
            data['conic_rank'] = self.conic_rank
        return data
