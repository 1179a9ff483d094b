import random
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from domain.entity.henon_spec import HenonSpec
from domain.entity.poly import Poly, monomials_of_degree
from domain.entity.proj_map import ProjMap
from domain.exception.errors import RangeError, ValidationError
from domain.service.rational_map_service import RationalMapService
from infrastructure.monitoring.logging import StructuredLogger

NUMERATORS = [n for n in range(-9, 10) if n]
DENOMINATORS = [1, 2, 3, 4]


class HenonService:
    """Конструкторы обобщённых отображений Хенона, их гомогенизация и обратные"""

    def __init__(self, rational_maps: RationalMapService):
        self.rational_maps = rational_maps
        self.logger = StructuredLogger("henon_service")

    # --- аффинное отображение ---------------------------------------------

    def build_affine(self, spec: HenonSpec) -> List[Poly]:
        """Координаты f_P: k-1 растяжений, N-k сдвигов, последняя b_1 x_1 + P_{N+1}"""
        x = Poly.variables(spec.N)
        coords = []
        for c in range(1, spec.N + 1):
            if c <= spec.k - 1:
                coords.append(x[c].scale(spec.b[c]))
            elif c <= spec.N - 1:
                coords.append(x[c].scale(spec.b[c]) + spec.polynomial(c + 1))
            else:
                coords.append(x[0].scale(spec.b[0]) + spec.polynomial(spec.N + 1))
        return coords

    def homogenize_map(self, spec: HenonSpec) -> ProjMap:
        """Гомогенизация добавленной переменной x_{N+1}; последняя координата x_{N+1}^d"""
        coords = [c.homogenize(spec.d) for c in self.build_affine(spec)]
        coords.append(Poly.variable(spec.N + 1, spec.N) ** spec.d)
        return ProjMap(N=spec.N, d=spec.d, coords=tuple(coords))

    def inverse_affine(self, spec: HenonSpec) -> List[Poly]:
        """Обратное отображение обратной подстановкой: x_2..x_k, затем x_{k+1}..x_N, затем x_1"""
        y = Poly.variables(spec.N)
        zero = Poly.zero(spec.N)
        recovered: List[Optional[Poly]] = [None] * spec.N

        def known() -> List[Poly]:
            return [r if r is not None else zero for r in recovered]

        for c in range(1, spec.k):
            recovered[c] = y[c - 1].scale(1 / spec.b[c])
        for c in range(spec.k, spec.N):
            shift = spec.polynomial(c + 1).compose(known())
            recovered[c] = (y[c - 1] - shift).scale(1 / spec.b[c])
        shift = spec.polynomial(spec.N + 1).compose(known())
        recovered[0] = (y[spec.N - 1] - shift).scale(1 / spec.b[0])
        return list(recovered)

    def verify_inverse(self, spec: HenonSpec) -> bool:
        forward = self.build_affine(spec)
        backward = self.inverse_affine(spec)
        identity = Poly.variables(spec.N)
        return ([g.compose(forward) for g in backward] == identity
                and [f.compose(backward) for f in forward] == identity)

    # --- именованные семейства -------------------------------------------

    @staticmethod
    def classic(a, b, P: Poly) -> HenonSpec:
        """(x, y) -> (a y, b x + P(y)); P задан как многочлен от одной переменной"""
        if P.num_vars != 1:
            raise ValidationError("classic Henon maps take P as a polynomial in one variable")
        if P.is_zero():
            raise ValidationError("P must be nonconstant")
        degree = int(P.degree())
        return HenonSpec(N=2, k=2, d=degree, b=(Fraction(b), Fraction(a)), P={3: P.embed(2, [1])})

    @staticmethod
    def chain(b: Sequence, P: Poly) -> HenonSpec:
        """(b_2 x_2, ..., b_N x_N, b_1 x_1 + P(x_N)) при k = N"""
        N = len(b)
        if P.num_vars != 1:
            raise ValidationError("chain maps take P as a polynomial in one variable")
        return HenonSpec(N=N, k=N, d=int(P.degree()), b=tuple(b), P={N + 1: P.embed(N, [N - 1])})

    @staticmethod
    def family_fdt(d: int, t) -> ProjMap:
        """[t x^d + y z^{d-1} : x z^{d-1} + y^d : z^d]"""
        if d < 2:
            raise RangeError(f"d must be at least 2, got {d}")
        x, y, z = Poly.variables(3)
        coords = (
            (x ** d).scale(t) + y * z ** (d - 1),
            x * z ** (d - 1) + y ** d,
            z ** d,
        )
        return ProjMap(N=2, d=d, coords=coords)

    @staticmethod
    def phi_bar(P: Poly) -> ProjMap:
        """[x z : y z + P̄(x, z) : z^2] для квадратичного P(x)"""
        if P.num_vars != 1 or P.degree() != 2:
            raise ValidationError(f"phi_bar needs a quadratic polynomial in one variable, got {P}")
        x, y, z = Poly.variables(3)
        homogeneous = P.homogenize(2).embed(3, [0, 2])
        return ProjMap(N=2, d=2, coords=(x * z, y * z + homogeneous, z ** 2))

    def is_family_morphism(self, d: int, t) -> bool:
        return self.rational_maps.is_morphism_p2(self.family_fdt(d, t))

    # --- случайные спецификации ---------------------------------------------

    @staticmethod
    def random_coefficient(rng: random.Random) -> Fraction:
        return Fraction(rng.choice(NUMERATORS), rng.choice(DENOMINATORS))

    def random_spec(self, rng: random.Random, N: int, k: int, d: int) -> HenonSpec:
        """Каждый допустимый моном с вероятностью 1/2, затем один моном степени d принудительно"""
        if not 2 <= k <= N:
            raise RangeError(f"need 2 <= k <= N, got k={k}, N={N}")
        b = tuple(self.random_coefficient(rng) for _ in range(N))
        terms: Dict[int, Dict] = {}
        admissible: Dict[int, List] = {}
        for key in range(k + 1, N + 2):
            variables = list(range(k - 1, key - 1))
            admissible[key] = [m for degree in range(d + 1) for m in monomials_of_degree(N, degree, variables)]
            terms[key] = {m: self.random_coefficient(rng) for m in admissible[key] if rng.random() < 0.5}
        key = rng.choice(sorted(admissible))
        forced = rng.choice([m for m in admissible[key] if sum(m) == d])
        terms[key][forced] = self.random_coefficient(rng)
        polys = {key: Poly(N, monomials) for key, monomials in terms.items() if monomials}
        return HenonSpec(N=N, k=k, d=d, b=b, P=polys)

    def random_quadratic_plane(self, rng: random.Random) -> HenonSpec:
        """Квадратичное отображение Хенона плоскости: N = k = d = 2"""
        return self.random_spec(rng, 2, 2, 2)
