import math
from fractions import Fraction
from typing import List, Optional, Sequence

from domain.entity.poly import Poly, monomials_of_degree
from domain.entity.proj_map import ProjMap
from domain.exception.errors import DegenerateMapError, UnsupportedError, ValidationError
from domain.service.elimination_service import EliminationService
from domain.service.linear_algebra_service import LinearAlgebraService
from domain.service.poly_algebra_service import PolyAlgebraService
from domain.value_object.projective import (
    ImageKind, LineP2, PlaneCurveImage, Point, normalize_point,
)
from infrastructure.monitoring.logging import StructuredLogger


class RationalMapService:
    """Рациональные отображения P^N: нормализация, итерации, доминантность, морфизмы, образы прямых"""

    def __init__(self, algebra: PolyAlgebraService, linear: LinearAlgebraService,
                 elimination: EliminationService):
        self.algebra = algebra
        self.linear = linear
        self.elimination = elimination
        self.logger = StructuredLogger("rational_map_service")

    # --- нормализация и композиция --------------------------------------

    def normalize(self, m: ProjMap) -> ProjMap:
        """Разделить координаты на их НОД и привести общий скаляр: целые взаимно простые коэффициенты,
        положительный старший коэффициент первой ненулевой координаты"""
        common = self.algebra.gcd_many(m.coords)
        coords = [c if c.is_zero() else self.algebra.exact_divide(c, common) for c in m.coords]
        numerator = 0
        denominator = 1
        for c in coords:
            if not c.is_zero():
                content = c.content()
                numerator = math.gcd(numerator, content.numerator)
                denominator = math.lcm(denominator, content.denominator)
        factor = Fraction(numerator, denominator)
        first = next(c for c in coords if not c.is_zero())
        if first.leading_coefficient() < 0:
            factor = -factor
        coords = [c.scale(1 / factor) for c in coords]
        return ProjMap.from_coords(coords)

    def compose_maps(self, outer: ProjMap, inner: ProjMap) -> ProjMap:
        """outer ∘ inner без нормализации"""
        if outer.N != inner.N:
            raise ValidationError(f"cannot compose self-maps of P^{outer.N} and P^{inner.N}")
        coords = [c.compose(inner.coords) for c in outer.coords]
        if all(c.is_zero() for c in coords):
            raise DegenerateMapError("composition is the zero map", outer=outer.format(), inner=inner.format())
        return ProjMap(N=outer.N, d=outer.d * inner.d, coords=tuple(coords))

    def iterates(self, m: ProjMap, n: int) -> List[ProjMap]:
        """[F, F^2, ..., F^n], каждая итерация нормализована"""
        if n < 1:
            raise ValidationError(f"number of iterates must be positive, got {n}")
        base = self.normalize(m)
        result = [base]
        for _ in range(n - 1):
            result.append(self.normalize(self.compose_maps(base, result[-1])))
        return result

    def iterate_degrees(self, m: ProjMap, n: int) -> List[int]:
        degrees = [f.d for f in self.iterates(m, n)]
        self.logger.debug("Iterate degrees computed", extra={'degrees': degrees, 'map': m.format()})
        return degrees

    def is_algebraically_stable_upto(self, m: ProjMap, n: int) -> bool:
        degrees = self.iterate_degrees(m, n)
        return all(deg == degrees[0] ** (i + 1) for i, deg in enumerate(degrees))

    def conjugate(self, m: ProjMap, matrix: Sequence[Sequence]) -> ProjMap:
        """A ∘ F ∘ A^{-1} для обратимой рациональной матрицы A"""
        size = m.num_vars
        inverse = self.linear.inverse(matrix)
        forward = self.linear.to_matrix(matrix)
        if len(forward) != size:
            raise ValidationError(f"conjugating matrix must be {size}x{size}")
        substitution = [Poly.linear_form(row) for row in inverse]
        moved = [c.compose(substitution) for c in m.coords]
        coords = []
        for row in forward:
            total = Poly.zero(size)
            for a, c in zip(row, moved):
                if a:
                    total = total + c.scale(a)
            coords.append(total)
        return ProjMap(N=m.N, d=m.d, coords=tuple(coords))

    # --- доминантность и морфизмы ---------------------------------------

    def jacobian_determinant(self, m: ProjMap) -> Poly:
        return self.algebra.determinant(self.algebra.jacobian(m.coords))

    def is_dominant(self, m: ProjMap) -> bool:
        """Доминантность в характеристике 0: det J ≢ 0"""
        return not self.jacobian_determinant(m).is_zero()

    def is_morphism_p2(self, m: ProjMap) -> bool:
        """Нет общих нулей над алгебраическим замыканием, т.е. результант трёх форм не равен нулю.

        Критерий Маколея: матрица умножения форм степени d на мономы степени 2d-2
        имеет полный столбцовый ранг C(3d, 2) ровно тогда, когда общих нулей нет.
        """
        self._require_plane(m)
        self._require_coprime(m)
        degree = 3 * m.d - 2
        columns = monomials_of_degree(3, degree)
        index = {monomial: i for i, monomial in enumerate(columns)}
        rows = []
        for shift in monomials_of_degree(3, degree - m.d):
            for c in m.coords:
                if c.is_zero():
                    continue
                row = [Fraction(0)] * len(columns)
                for monomial, coefficient in c.terms.items():
                    row[index[tuple(a + b for a, b in zip(monomial, shift))]] = coefficient
                rows.append(row)
        rank = self.linear.rank(rows)
        self.logger.metric("macaulay_rank", rank, {'columns': str(len(columns))})
        return rank == len(columns)

    def common_zeros_p2(self, m: ProjMap) -> List[Point]:
        """Рациональные общие нули координат: свидетели того, что отображение не морфизм"""
        self._require_plane(m)
        return self.elimination.solve_p2(m.coords).points

    def image_of_point(self, m: ProjMap, point: Sequence) -> Optional[Point]:
        values = [c.evaluate([Fraction(v) for v in point]) for c in m.coords]
        if not any(values):
            return None
        return normalize_point(values)

    # --- прямые ----------------------------------------------------------

    @staticmethod
    def line_through_points(p: Sequence, q: Sequence) -> LineP2:
        p = [Fraction(v) for v in p]
        q = [Fraction(v) for v in q]
        cross = (p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0])
        if not any(cross):
            raise ValidationError("points coincide, no unique line")
        return LineP2(cross)

    def line_image(self, m: ProjMap, line: LineP2) -> PlaneCurveImage:
        """Замыкание образа прямой для квадратичного отображения P^2"""
        self._require_plane(m)
        if m.d != 2:
            raise UnsupportedError(f"line images are implemented for quadratic maps, got degree {m.d}")
        p, q = line.spanning_points()
        s, t = Poly.variables(2)
        parametrization = [s.scale(a) + t.scale(b) for a, b in zip(p, q)]
        forms = [c.compose(parametrization) for c in m.coords]
        if all(f.is_zero() for f in forms):
            raise DegenerateMapError("the map vanishes identically on the line", line=line.format())
        common = self.algebra.gcd_many(forms)
        forms = [f if f.is_zero() else self.algebra.exact_divide(f, common) for f in forms]
        degree = int(max(f.degree() for f in forms if not f.is_zero()))

        if degree == 0:
            return PlaneCurveImage(ImageKind.POINT, point=normalize_point([f.constant_value() for f in forms]),
                                   parametrization_degree=0)

        columns = monomials_of_degree(2, degree)
        coefficient_matrix = [[f.coefficient(c) for c in columns] for f in forms]
        span = self.linear.rank(coefficient_matrix)
        if span == 2:
            kernel = self.linear.nullspace(_transpose(coefficient_matrix), width=3)
            equation = Poly.linear_form(kernel[0]).primitive()
            return PlaneCurveImage(ImageKind.LINE, equation=equation, parametrization_degree=degree)
        if span != 3 or degree != 2:
            raise DegenerateMapError(f"unexpected image data: span {span}, degree {degree}")
        return self._implicit_conic(forms)

    def _implicit_conic(self, forms: Sequence[Poly]) -> PlaneCurveImage:
        """Коника через ядро линейной системы Q(H(s, t)) = 0"""
        quadrics = monomials_of_degree(3, 2)
        quartics = monomials_of_degree(2, 4)
        columns = []
        for monomial in quadrics:
            product = Poly.constant(2, 1)
            for f, e in zip(forms, monomial):
                if e:
                    product = product * f ** e
            columns.append([product.coefficient(c) for c in quartics])
        kernel = self.linear.nullspace(_transpose(columns), width=len(quadrics))
        if len(kernel) != 1:
            raise DegenerateMapError(f"conic implicitization has a {len(kernel)}-dimensional kernel")
        equation = Poly(3, dict(zip(quadrics, kernel[0]))).primitive()
        rank = self.linear.rank(self.conic_matrix(equation))
        kind = ImageKind.IRREDUCIBLE_CONIC if rank == 3 else ImageKind.REDUCIBLE_OR_DEGENERATE
        return PlaneCurveImage(kind, equation=equation, parametrization_degree=2, conic_rank=rank)

    @staticmethod
    def conic_matrix(conic: Poly) -> List[List[Fraction]]:
        """Симметричная матрица ax^2+by^2+cz^2+dxy+exz+fyz, умноженная на 2"""
        a = conic.coefficient((2, 0, 0))
        b = conic.coefficient((0, 2, 0))
        c = conic.coefficient((0, 0, 2))
        d = conic.coefficient((1, 1, 0))
        e = conic.coefficient((1, 0, 1))
        f = conic.coefficient((0, 1, 1))
        return [[2 * a, d, e], [d, 2 * b, f], [e, f, 2 * c]]

    # --- проверки --------------------------------------------------------

    @staticmethod
    def _require_plane(m: ProjMap):
        if m.N != 2:
            raise UnsupportedError(f"operation is defined for maps of P^2, got P^{m.N}")

    def _require_coprime(self, m: ProjMap):
        if not self.algebra.gcd_many(m.coords).is_constant():
            raise ValidationError("map is not normalized: coordinates share a common factor")


def _transpose(matrix: Sequence[Sequence]) -> List[List]:
    return [list(column) for column in zip(*matrix)]

