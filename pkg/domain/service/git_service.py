import math
from fractions import Fraction
from functools import reduce
from typing import Dict, List, Optional, Sequence, Tuple

from domain.entity.certificate import (
    ExpectedSign, ExponentRow, MuCertificate, SymbolicExponentTable,
)
from domain.entity.henon_spec import HenonSpec
from domain.entity.poly import Monomial, Poly, monomials_of_degree
from domain.entity.proj_map import ProjMap
from domain.exception.errors import RangeError, StructuralError, ValidationError, VerificationError
from domain.interfaces.cone_solver import ConeSolverInterface, Inequality
from domain.service.henon_service import HenonService
from domain.value_object.linear_form import LinearForm
from domain.value_object.weight_vector import ExponentFunctional, WeightVector
from infrastructure.monitoring.logging import StructuredLogger

UNSTABLE = "unstable"
NOT_STABLE = "not-stable"
SEMISTABLE = "semistable"


class GitService:
    """Диагональные 1-PS, инвариант mu, блочные сертификаты и поиск дестабилизирующих весов"""

    def __init__(self, henon: HenonService, solver: ConeSolverInterface):
        self.henon = henon
        self.solver = solver
        self.logger = StructuredLogger("git_service")

    # --- показатели и mu ------------------------------------------------

    @staticmethod
    def exponent(coordinate: int, monomial: Monomial, weights: Sequence[int]) -> int:
        """w_j - <i, w>"""
        if len(monomial) != len(weights):
            raise StructuralError(f"monomial has {len(monomial)} exponents, weights have {len(weights)} entries")
        return ExponentFunctional.from_pair(coordinate, monomial).value(list(weights))

    def mu_multiset(self, m: ProjMap, w: WeightVector) -> List[int]:
        self._check_length(m, w)
        return [self.exponent(j, monomial, w.weights) for j, monomial in m.support()]

    def mu(self, m: ProjMap, w: WeightVector) -> int:
        """Минимум показателей по носителю отображения"""
        values = self.mu_multiset(m, w)
        if not values:
            raise ValidationError("map has empty support")
        return min(values)

    def conjugate_diagonal(self, m: ProjMap, w: WeightVector) -> Tuple[List[Poly], int]:
        """Координаты L ∘ f ∘ L^{-1} с alpha как последней переменной, домноженные до многочленов.

        x_i -> alpha^{W - w_i} x_i, координата j умножается на alpha^{w_j - min w}, W = max w;
        возвращает координаты и общий сдвиг показателя alpha.
        """
        self._check_length(m, w)
        n = m.num_vars
        top = max(w.weights)
        bottom = min(w.weights)
        alpha = Poly.variable(n + 1, n)
        substitution = [Poly.variable(n + 1, i) * alpha ** (top - w[i]) for i in range(n)]
        coords = [c.compose(substitution) * alpha ** (w[j] - bottom) for j, c in enumerate(m.coords)]
        return coords, m.d * top - bottom

    def conjugation_exponents(self, m: ProjMap, w: WeightVector) -> List[int]:
        """Показатели alpha, прочитанные из явного сопряжения"""
        coords, offset = self.conjugate_diagonal(m, w)
        n = m.num_vars
        return [monomial[n] - offset for c in coords for monomial in c.monomials()]

    def mu_by_conjugation(self, m: ProjMap, w: WeightVector) -> int:
        return min(self.conjugation_exponents(m, w))

    # --- блочные 1-PS -----------------------------------------------------

    @staticmethod
    def henon_block_weights(N: int, k: int, r: int, s: int, t: int) -> WeightVector:
        """(r повторено k-1 раз, -s повторено N-k+1 раз, -t) при r(k-1) - s(N-k+1) - t = 0"""
        if not 2 <= k <= N:
            raise RangeError(f"need 2 <= k <= N, got k={k}, N={N}")
        if min(r, s, t) < 0 or not any((r, s, t)):
            raise ValidationError(f"r, s, t must be nonnegative and not all zero, got ({r}, {s}, {t})")
        balance = r * (k - 1) - s * (N - k + 1) - t
        if balance:
            raise ValidationError(
                f"r(k-1) - s(N-k+1) - t must vanish, got {balance} for (r, s, t) = ({r}, {s}, {t})",
                r=r, s=s, t=t)
        return WeightVector((r,) * (k - 1) + (-s,) * (N - k + 1) + (-t,))

    @staticmethod
    def certificate_parameters(N: int, k: int, d: int) -> Tuple[int, int, int]:
        """(r, s, t): s = k-1, t = (k-1)(N+1), r = 2N+2-k; при d = k = 2 берётся (1, 0, 1)"""
        if not 2 <= k <= N:
            raise RangeError(f"need 2 <= k <= N, got k={k}, N={N}")
        if d < 2:
            raise RangeError(f"d must be at least 2, got {d}")
        if d == 2 and k == 2:
            return 1, 0, 1
        return 2 * N + 2 - k, k - 1, (k - 1) * (N + 1)

    def block_certificate(self, N: int, k: int, d: int) -> WeightVector:
        """Блочный вес из certificate_parameters: mu > 0 для любого отображения Хенона (N, k, d),
        кроме d = k = 2, где mu = 0"""
        return self.henon_block_weights(N, k, *self.certificate_parameters(N, k, d))

    @staticmethod
    def expected_verdict(N: int, k: int, d: int) -> Dict[str, str]:
        """Ожидаемое заключение для обобщённого отображения Хенона с параметрами (N, k, d)"""
        if d >= 3 or k >= 3:
            return {'verdict': UNSTABLE, 'certificate_sign': ExpectedSign.POSITIVE.value}
        if N == 2:
            return {'verdict': SEMISTABLE, 'certificate_sign': ExpectedSign.NONNEGATIVE.value}
        return {'verdict': NOT_STABLE, 'semistability': 'unknown',
                'certificate_sign': ExpectedSign.NONNEGATIVE.value}

    # --- символьные таблицы -----------------------------------------------

    def symbolic_table(self, spec: HenonSpec) -> SymbolicExponentTable:
        """Строки I-VI для каждого монома носителя гомогенизированного отображения"""
        homogenized = self.henon.homogenize_map(spec)
        rows = [self._henon_row(spec.N, spec.k, spec.d, j, monomial) for j, monomial in homogenized.support()]
        return SymbolicExponentTable(N=spec.N, k=spec.k, d=spec.d, rows=tuple(rows))

    def generic_table(self, N: int, k: int, d: int) -> SymbolicExponentTable:
        """Представители строк I-VI при (N, k, d); строка IV для всех 0 <= m <= d"""
        self.certificate_parameters(N, k, d)
        n = N + 1
        rows = []

        def unit(index: int, power: int = 1) -> List[int]:
            exponents = [0] * n
            exponents[index] += power
            return exponents

        # строки I-III: координата c несёт x_{c+1} x_{N+1}^{d-1}
        for c in range(1, N):
            monomial = unit(c)
            monomial[N] += d - 1
            rows.append(self._henon_row(N, k, d, c - 1, tuple(monomial)))
        for m in range(d + 1):
            monomial = unit(k - 1, m)
            monomial[N] += d - m
            rows.append(self._henon_row(N, k, d, N - 1, tuple(monomial)))
        wrap = unit(0)
        wrap[N] += d - 1
        rows.append(self._henon_row(N, k, d, N - 1, tuple(wrap)))
        rows.append(self._henon_row(N, k, d, N, tuple(unit(N, d))))
        order = {label: i for i, label in enumerate(["I", "II", "III", "IV", "V", "VI"])}
        rows.sort(key=lambda row: (order[row.label], row.coordinate, row.m or 0))
        return SymbolicExponentTable(N=N, k=k, d=d, rows=tuple(rows))

    @staticmethod
    def _henon_row(N: int, k: int, d: int, j: int, monomial: Monomial) -> ExponentRow:
        coordinate = j + 1
        n = N + 1
        basis_r = [1 if i < k - 1 else 0 for i in range(n)]
        basis_s = [-1 if k - 1 <= i < N else 0 for i in range(n)]
        basis_t = [-1 if i == N else 0 for i in range(n)]
        functional = ExponentFunctional.from_pair(j, monomial)
        form = LinearForm((functional.value(basis_r), functional.value(basis_s), functional.value(basis_t)))
        m = None
        if coordinate <= k - 2:
            label = "I"
        elif coordinate == k - 1:
            label = "II"
        elif coordinate == N + 1:
            label = "VI"
        else:
            shifted = [0] * n
            shifted[N] = d - 1
            if coordinate <= N - 1:
                shifted[coordinate] += 1
                special = "III"
            else:
                shifted[0] += 1
                special = "V"
            if tuple(shifted) == tuple(monomial):
                label = special
            else:
                label = "IV"
                m = sum(monomial[k - 1:N])
        return ExponentRow(label=label, coordinate=coordinate, monomial=tuple(monomial), form=form, m=m)

    def table2(self) -> SymbolicExponentTable:
        """Показатели общего квадратичного отображения P^2 при весах (r, s - r, -s)"""
        basis_r = [1, -1, 0]
        basis_s = [0, 1, -1]
        rows = []
        for j, label in enumerate("xyz"):
            for monomial in monomials_of_degree(3, 2):
                functional = ExponentFunctional.from_pair(j, monomial)
                form = LinearForm((functional.value(basis_r), functional.value(basis_s)), names=("r", "s"))
                rows.append(ExponentRow(label=label, coordinate=j + 1, monomial=monomial, form=form))
        return SymbolicExponentTable(N=2, d=2, rows=tuple(rows))

    # --- поиск и проверка сертификатов ---------------------------------------

    def find_destabilizing_diag(self, m: ProjMap, strict: bool) -> Optional[MuCertificate]:
        """Целочисленный вес со всеми показателями > 0 (strict) или >= 0 (не все веса нулевые)"""
        covectors = sorted({ExponentFunctional.from_pair(j, monomial).covector for j, monomial in m.support()})
        n = m.num_vars
        # w_n = -(w_1 + ... + w_{n-1}): переменные v = (w_1, ..., w_{n-1})
        reduced = [tuple(Fraction(c[i] - c[n - 1]) for i in range(n - 1)) for c in covectors]
        self.logger.debug("Searching diagonal 1-PS", extra={
            'strict': strict, 'functionals': len(covectors), 'solver': self.solver.name})

        if strict:
            system: List[Inequality] = [(row, Fraction(1)) for row in reduced]
            point = self.solver.find_point(system, n - 1)
            if point is None:
                return None
            return self._certificate(m, point, ExpectedSign.POSITIVE)

        candidates: List[WeightVector] = []
        base: List[Inequality] = [(row, Fraction(0)) for row in reduced]
        for u in range(n):
            for sigma in (1, -1):
                if u < n - 1:
                    selector = tuple(Fraction(int(i == u)) for i in range(n - 1))
                else:
                    selector = tuple(Fraction(-1) for _ in range(n - 1))
                pinned = base + [(selector, Fraction(sigma)),
                                 (tuple(-c for c in selector), Fraction(-sigma))]
                point = self.solver.find_point(pinned, n - 1)
                if point is not None:
                    candidates.append(self._integer_weights(point))
        if not candidates:
            return None
        best = min(candidates, key=lambda w: w.weights)
        return self._certificate_for(m, best, ExpectedSign.NONNEGATIVE)

    def verify_certificate(self, m: ProjMap, w: WeightVector, expect: ExpectedSign) -> MuCertificate:
        """Пересчитать mu; несовпадение знака даёт verified=False, а не исключение"""
        certificate = self._certificate_for(m, w, expect)
        if not certificate.verified:
            self.logger.warning("Certificate failed verification", extra={
                'weights': w.to_list(), 'mu': certificate.mu, 'expected': expect.value})
        return certificate

    def require_certificate(self, m: ProjMap, w: WeightVector, expect: ExpectedSign) -> MuCertificate:
        certificate = self.verify_certificate(m, w, expect)
        if not certificate.verified:
            raise VerificationError(
                f"mu = {certificate.mu} does not satisfy mu {expect.value} for weights {w}",
                certificate=certificate, mu=certificate.mu, weights=w.to_list())
        return certificate

    def _certificate(self, m: ProjMap, point: Sequence[Fraction], expect: ExpectedSign) -> MuCertificate:
        return self._certificate_for(m, self._integer_weights(point), expect)

    def _certificate_for(self, m: ProjMap, w: WeightVector, expect: ExpectedSign) -> MuCertificate:
        value = self.mu(m, w)
        return MuCertificate(weights=w, mu=value, support_size=m.support_size(),
                             expected=expect, verified=expect.holds(value))

    @staticmethod
    def _integer_weights(point: Sequence[Fraction]) -> WeightVector:
        values = list(point) + [-sum(point, Fraction(0))]
        scale = reduce(math.lcm, (v.denominator for v in values), 1)
        integers = [int(v * scale) for v in values]
        divisor = reduce(math.gcd, integers)
        return WeightVector(tuple(v // divisor for v in integers))

    @staticmethod
    def _check_length(m: ProjMap, w: WeightVector):
        if len(w) != m.num_vars:
            raise StructuralError(f"weight vector has {len(w)} entries, map lives in {m.num_vars} variables")
