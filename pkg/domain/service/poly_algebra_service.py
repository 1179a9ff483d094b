from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from sympy import divisors

from domain.entity.poly import Poly, grlex_key
from domain.exception.errors import StructuralError, ValidationError
from domain.value_object.root_report import RootReport
from infrastructure.monitoring.logging import StructuredLogger

PolyMatrix = List[List[Poly]]


class PolyAlgebraService:
    """Алгоритмы над точными многочленами: деление, НОД, результанты, корни, якобиан"""

    def __init__(self):
        self.logger = StructuredLogger("poly_algebra_service")

    # --- деление ------------------------------------------------------

    def divmod(self, dividend: Poly, divisor: Poly) -> Tuple[Poly, Poly]:
        """Деление с остатком на один делитель в grlex-порядке"""
        self._check_ring(dividend, divisor)
        if divisor.is_zero():
            raise ValidationError("division by the zero polynomial")
        lead_monomial, lead_coefficient = divisor.leading_term()
        quotient = {}
        remainder = {}
        current = dividend
        while not current.is_zero():
            monomial, coefficient = current.leading_term()
            if all(a >= b for a, b in zip(monomial, lead_monomial)):
                shift = tuple(a - b for a, b in zip(monomial, lead_monomial))
                factor = coefficient / lead_coefficient
                quotient[shift] = quotient.get(shift, 0) + factor
                current = current - divisor.mul_monomial(shift, factor)
            else:
                remainder[monomial] = coefficient
                current = current - Poly.monomial(monomial, coefficient)
        return Poly(dividend.num_vars, quotient), Poly(dividend.num_vars, remainder)

    def exact_divide(self, dividend: Poly, divisor: Poly) -> Poly:
        if divisor.is_constant():
            if divisor.is_zero():
                raise ValidationError("division by the zero polynomial")
            return dividend.scale(1 / divisor.constant_value())
        quotient, remainder = self.divmod(dividend, divisor)
        if not remainder.is_zero():
            raise ValidationError(f"{divisor} does not divide {dividend}")
        return quotient

    def divides(self, divisor: Poly, dividend: Poly) -> bool:
        return self.divmod(dividend, divisor)[1].is_zero()

    # --- НОД ----------------------------------------------------------

    def gcd(self, p: Poly, q: Poly) -> Poly:
        """НОД с содержанием 1 и положительным старшим коэффициентом; gcd(p, 0) = норм. p"""
        self._check_ring(p, q)
        if p.is_zero():
            return q.primitive()
        if q.is_zero():
            return p.primitive()
        return self._gcd(p, q).primitive()

    def gcd_many(self, polys: Sequence[Poly]) -> Poly:
        nonzero = sorted((p for p in polys if not p.is_zero()), key=len)
        if not nonzero:
            if not polys:
                raise ValidationError("gcd of an empty family")
            return polys[0]
        result = nonzero[0]
        for p in nonzero[1:]:
            result = self._gcd(result, p)
            if result.is_constant():
                break
        return result.primitive()

    def _gcd(self, p: Poly, q: Poly) -> Poly:
        one = Poly.constant(p.num_vars, 1)
        if p.is_constant() or q.is_constant():
            return one
        if len(p) == 1 or len(q) == 1:
            return self._monomial_gcd(p, q)
        p_vars = set(p.variables_used())
        q_vars = set(q.variables_used())
        var = max(p_vars | q_vars)
        if var not in p_vars:
            return self._gcd(p, self._content(q, var))
        if var not in q_vars:
            return self._gcd(self._content(p, var), q)
        content_p = self._content(p, var)
        content_q = self._content(q, var)
        primitive_p = self.exact_divide(p, content_p)
        primitive_q = self.exact_divide(q, content_q)
        common = self._gcd(content_p, content_q)
        return common * self._subresultant_gcd(primitive_p, primitive_q, var)

    @staticmethod
    def _monomial_gcd(p: Poly, q: Poly) -> Poly:
        exponents = None
        for monomial in p.monomials() + q.monomials():
            exponents = list(monomial) if exponents is None else [min(a, b) for a, b in zip(exponents, monomial)]
        return Poly.monomial(exponents)

    def _content(self, p: Poly, var: int) -> Poly:
        """Содержание p как многочлена от x_var с коэффициентами в кольце остальных переменных"""
        coefficients = sorted((c for c in self._coefficients(p, var) if not c.is_zero()), key=len)
        result = coefficients[0]
        for c in coefficients[1:]:
            if result.is_constant():
                break
            result = self._gcd(result, c)
        if result.is_constant():
            return Poly.constant(p.num_vars, 1)
        return result.primitive()

    def _subresultant_gcd(self, a: Poly, b: Poly, var: int) -> Poly:
        one = Poly.constant(a.num_vars, 1)
        first = self._coefficients(a, var)
        second = self._coefficients(b, var)
        if len(first) < len(second):
            first, second = second, first
        if len(second) == 1:
            return one
        g = one
        h = one
        steps = 0
        while True:
            delta = len(first) - len(second)
            remainder = self._pseudo_remainder(first, second)
            steps += 1
            if not remainder:
                break
            if len(remainder) == 1:
                return one
            first = second
            divisor = g * h ** delta
            second = [self.exact_divide(c, divisor) for c in remainder]
            g = first[-1]
            if delta:
                h = self.exact_divide(g ** delta, h ** (delta - 1))
        self.logger.metric("subresultant_steps", steps, {'variable': str(var)})
        result = self._from_coefficients(second, var, a.num_vars)
        return self.exact_divide(result, self._content(result, var))

    def _pseudo_remainder(self, dividend: List[Poly], divisor: List[Poly]) -> List[Poly]:
        remainder = list(dividend)
        lead = divisor[-1]
        top = len(divisor) - 1
        exponent = len(dividend) - len(divisor) + 1
        while len(remainder) - 1 >= top:
            shift = len(remainder) - 1 - top
            head = remainder[-1]
            remainder = [lead * c for c in remainder]
            for i, c in enumerate(divisor):
                remainder[i + shift] = remainder[i + shift] - head * c
            remainder.pop()
            while remainder and remainder[-1].is_zero():
                remainder.pop()
            exponent -= 1
        factor = lead ** exponent
        return [factor * c for c in remainder]

    @staticmethod
    def _coefficients(p: Poly, var: int) -> List[Poly]:
        """Коэффициенты при x_var^0, x_var^1, ... как многочлены, не зависящие от x_var"""
        if p.is_zero():
            return []
        buckets = [dict() for _ in range(int(p.degree_in(var)) + 1)]
        for monomial, coefficient in p.terms.items():
            reduced = list(monomial)
            reduced[var] = 0
            buckets[monomial[var]][tuple(reduced)] = coefficient
        return [Poly(p.num_vars, bucket) for bucket in buckets]

    @staticmethod
    def _from_coefficients(coefficients: Sequence[Poly], var: int, num_vars: int) -> Poly:
        x = Poly.variable(num_vars, var)
        result = Poly.zero(num_vars)
        for power, c in enumerate(coefficients):
            result = result + c * x ** power
        return result

    # --- результанты и определители -------------------------------------

    def resultant(self, f: Poly, g: Poly, var: int) -> Poly:
        """Результант Сильвестра по переменной x_var"""
        self._check_ring(f, g)
        if f.is_zero() and g.is_zero():
            raise ValidationError("resultant of two zero polynomials is undefined")
        if f.is_zero() or g.is_zero():
            return Poly.zero(f.num_vars)
        first = self._coefficients(f, var)
        second = self._coefficients(g, var)
        m = len(first) - 1
        n = len(second) - 1
        if m == 0 and n == 0:
            return Poly.constant(f.num_vars, 1)
        if m == 0:
            return first[0] ** n
        if n == 0:
            return second[0] ** m
        zero = Poly.zero(f.num_vars)
        size = m + n
        rows: PolyMatrix = []
        for i in range(n):
            row = [zero] * size
            for k, c in enumerate(reversed(first)):
                row[i + k] = c
            rows.append(row)
        for i in range(m):
            row = [zero] * size
            for k, c in enumerate(reversed(second)):
                row[i + k] = c
            rows.append(row)
        return self.determinant(rows)

    def determinant(self, matrix: PolyMatrix) -> Poly:
        """Определитель методом Барейсса без дробей"""
        size = len(matrix)
        if size == 0 or any(len(row) != size for row in matrix):
            raise StructuralError("determinant needs a nonempty square matrix")
        num_vars = matrix[0][0].num_vars
        work = [list(row) for row in matrix]
        sign = 1
        previous = Poly.constant(num_vars, 1)
        for k in range(size - 1):
            if work[k][k].is_zero():
                pivot_row = next((i for i in range(k + 1, size) if not work[i][k].is_zero()), None)
                if pivot_row is None:
                    return Poly.zero(num_vars)
                work[k], work[pivot_row] = work[pivot_row], work[k]
                sign = -sign
            for i in range(k + 1, size):
                for j in range(k + 1, size):
                    numerator = work[k][k] * work[i][j] - work[i][k] * work[k][j]
                    work[i][j] = self.exact_divide(numerator, previous)
            previous = work[k][k]
        return work[size - 1][size - 1].scale(sign)

    def jacobian(self, coords: Sequence[Poly]) -> PolyMatrix:
        if not coords:
            raise StructuralError("jacobian of an empty family")
        num_vars = coords[0].num_vars
        if any(c.num_vars != num_vars for c in coords):
            raise StructuralError("all coordinates must share num_vars")
        return [[c.derivative(j) for j in range(num_vars)] for c in coords]

    # --- одномерные многочлены -------------------------------------------

    def squarefree_part(self, p: Poly) -> Poly:
        variables = p.variables_used()
        if len(variables) > 1:
            raise StructuralError("squarefree_part expects a univariate polynomial")
        if not variables:
            return p.primitive()
        return self.exact_divide(p, self.gcd(p, p.derivative(variables[0]))).primitive()

    def rational_roots(self, p: Poly) -> RootReport:
        """Все рациональные корни с кратностью; остаток без рациональных корней"""
        if p.is_zero():
            raise ValidationError("the zero polynomial has every number as a root")
        variables = p.variables_used()
        if len(variables) > 1:
            raise StructuralError(f"rational_roots expects a univariate polynomial, got {p}")
        if not variables:
            return RootReport([], p.primitive())
        var = variables[0]
        x = Poly.variable(p.num_vars, var)
        residual = p.primitive()
        roots: List[Fraction] = []
        while residual.constant_value() == 0:
            roots.append(Fraction(0))
            residual = self.exact_divide(residual, x)
        if residual.is_constant():
            return RootReport(roots, residual)
        squarefree = self.squarefree_part(residual)
        lead = abs(int(squarefree.coefficient(max(squarefree.monomials(), key=grlex_key))))
        tail = abs(int(squarefree.constant_value()))
        point = [Fraction(0)] * p.num_vars
        for candidate in self._candidates(tail, lead):
            point[var] = candidate
            if squarefree.evaluate(point) != 0:
                continue
            linear = x - candidate
            while True:
                quotient, remainder = self.divmod(residual, linear)
                if not remainder.is_zero():
                    break
                roots.append(candidate)
                residual = quotient
        self.logger.metric("rational_roots_found", len(roots))
        return RootReport(sorted(roots), residual.primitive())

    @staticmethod
    def _candidates(tail: int, lead: int) -> List[Fraction]:
        found = set()
        for a in divisors(tail):
            for b in divisors(lead):
                found.add(Fraction(a, b))
                found.add(Fraction(-a, b))
        return sorted(found)

    @staticmethod
    def _check_ring(p: Poly, q: Poly):
        if p.num_vars != q.num_vars:
            raise StructuralError(
                f"polynomials live in different rings: {p.num_vars} vs {q.num_vars} variables")
