import math
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from domain.exception.errors import StructuralError, ValidationError

Monomial = Tuple[int, ...]
Scalar = Union[int, Fraction]

# Степень нулевого многочлена: никогда не целое число
DEGREE_OF_ZERO = float("-inf")


def grlex_key(monomial: Monomial) -> Tuple[int, Monomial]:
    """Ключ градуированного лексикографического порядка"""
    return sum(monomial), monomial


class Poly:
    """Разреженный многочлен от num_vars переменных над точными рациональными числами.

    Значения неизменяемы: все операции возвращают новый многочлен.
    Мономы с нулевым коэффициентом никогда не хранятся.
    """

    __slots__ = ('_num_vars', '_terms', '_hash')

    def __init__(self, num_vars: int, terms: Optional[Mapping[Monomial, Scalar]] = None):
        if num_vars < 1:
            raise ValidationError(f"num_vars must be positive, got {num_vars}")
        cleaned: Dict[Monomial, Fraction] = {}
        for monomial, coefficient in (terms or {}).items():
            monomial = tuple(monomial)
            if len(monomial) != num_vars:
                raise StructuralError(
                    f"monomial {monomial} has length {len(monomial)}, expected {num_vars}")
            if any(e < 0 for e in monomial):
                raise ValidationError(f"negative exponent in {monomial}")
            value = Fraction(coefficient)
            if value:
                cleaned[monomial] = cleaned.get(monomial, Fraction(0)) + value
                if not cleaned[monomial]:
                    del cleaned[monomial]
        self._num_vars = num_vars
        self._terms = cleaned
        self._hash = None

    # --- конструкторы -------------------------------------------------

    @classmethod
    def _raw(cls, num_vars: int, terms: Dict[Monomial, Fraction]) -> 'Poly':
        poly = cls.__new__(cls)
        poly._num_vars = num_vars
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def zero(cls, num_vars: int) -> 'Poly':
        return cls._raw(num_vars, {})

    @classmethod
    def constant(cls, num_vars: int, value: Scalar) -> 'Poly':
        value = Fraction(value)
        return cls._raw(num_vars, {(0,) * num_vars: value} if value else {})

    @classmethod
    def variable(cls, num_vars: int, index: int) -> 'Poly':
        if not 0 <= index < num_vars:
            raise StructuralError(f"variable index {index} out of range for {num_vars} variables")
        exponents = [0] * num_vars
        exponents[index] = 1
        return cls._raw(num_vars, {tuple(exponents): Fraction(1)})

    @classmethod
    def variables(cls, num_vars: int) -> List['Poly']:
        return [cls.variable(num_vars, i) for i in range(num_vars)]

    @classmethod
    def monomial(cls, exponents: Sequence[int], coefficient: Scalar = 1) -> 'Poly':
        return cls(len(exponents), {tuple(exponents): coefficient})

    @classmethod
    def linear_form(cls, coefficients: Sequence[Scalar]) -> 'Poly':
        """Линейная форма sum c_i x_i"""
        n = len(coefficients)
        return cls(n, {tuple(1 if j == i else 0 for j in range(n)): c for i, c in enumerate(coefficients)})

    # --- свойства -----------------------------------------------------

    @property
    def num_vars(self) -> int:
        return self._num_vars

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Monomial, Fraction]]:
        """Термы в убывающем grlex-порядке"""
        return sorted(self._terms.items(), key=lambda item: grlex_key(item[0]), reverse=True)

    def monomials(self) -> List[Monomial]:
        return [m for m, _ in self.items()]

    def coefficient(self, monomial: Monomial) -> Fraction:
        return self._terms.get(tuple(monomial), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def constant_value(self) -> Fraction:
        return self._terms.get((0,) * self._num_vars, Fraction(0))

    def degree(self) -> Union[int, float]:
        if not self._terms:
            return DEGREE_OF_ZERO
        return max(sum(m) for m in self._terms)

    def degree_in(self, var: int) -> Union[int, float]:
        if not self._terms:
            return DEGREE_OF_ZERO
        return max(m[var] for m in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def variables_used(self) -> Tuple[int, ...]:
        return tuple(i for i in range(self._num_vars) if any(m[i] for m in self._terms))

    def leading_term(self) -> Tuple[Monomial, Fraction]:
        if not self._terms:
            raise ValidationError("zero polynomial has no leading term")
        monomial = max(self._terms, key=grlex_key)
        return monomial, self._terms[monomial]

    def leading_coefficient(self) -> Fraction:
        return self.leading_term()[1]

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    # --- арифметика ---------------------------------------------------

    def _coerce(self, other: Union['Poly', Scalar]) -> 'Poly':
        if isinstance(other, Poly):
            if other._num_vars != self._num_vars:
                raise StructuralError(
                    f"polynomials live in different rings: {self._num_vars} vs {other._num_vars} variables")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(self._num_vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        result = dict(self._terms)
        for m, c in other._terms.items():
            value = result.get(m, 0) + c
            if value:
                result[m] = value
            else:
                result.pop(m, None)
        return Poly._raw(self._num_vars, result)

    __radd__ = __add__

    def __neg__(self) -> 'Poly':
        return Poly._raw(self._num_vars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        result: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                value = result.get(m, 0) + c1 * c2
                if value:
                    result[m] = value
                else:
                    result.pop(m, None)
        return Poly._raw(self._num_vars, result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'Poly':
        if exponent < 0:
            raise ValidationError("negative powers are not polynomials")
        result = Poly.constant(self._num_vars, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor: Scalar) -> 'Poly':
        factor = Fraction(factor)
        if not factor:
            return Poly.zero(self._num_vars)
        return Poly._raw(self._num_vars, {m: c * factor for m, c in self._terms.items()})

    def mul_monomial(self, monomial: Monomial, coefficient: Scalar = 1) -> 'Poly':
        coefficient = Fraction(coefficient)
        if not coefficient:
            return Poly.zero(self._num_vars)
        return Poly._raw(self._num_vars, {
            tuple(a + b for a, b in zip(m, monomial)): c * coefficient for m, c in self._terms.items()
        })

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self._terms == Poly.constant(self._num_vars, other)._terms
        if not isinstance(other, Poly):
            return NotImplemented
        return self._num_vars == other._num_vars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            # константа равна числу, поэтому и хеш у них общий
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash((self._num_vars, frozenset(self._terms.items())))
        return self._hash

    # --- подстановки --------------------------------------------------

    def compose(self, subs: Sequence['Poly']) -> 'Poly':
        """Подставить subs[i] вместо i-й переменной"""
        if len(subs) != self._num_vars:
            raise StructuralError(f"compose needs {self._num_vars} substitutions, got {len(subs)}")
        if not subs:
            return self
        target_vars = subs[0].num_vars
        if any(s.num_vars != target_vars for s in subs):
            raise StructuralError("substituted polynomials must share num_vars")
        powers: List[Dict[int, Poly]] = [{0: Poly.constant(target_vars, 1)} for _ in subs]

        def power(i: int, e: int) -> Poly:
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e - 1) * subs[i]
            return cache[e]

        result = Poly.zero(target_vars)
        for monomial, coefficient in self._terms.items():
            term = Poly.constant(target_vars, coefficient)
            for i, e in enumerate(monomial):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def substitute(self, var: int, value: Union['Poly', Scalar]) -> 'Poly':
        subs = Poly.variables(self._num_vars)
        subs[var] = value if isinstance(value, Poly) else Poly.constant(self._num_vars, value)
        return self.compose(subs)

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self._num_vars:
            raise StructuralError(f"point has {len(point)} coordinates, expected {self._num_vars}")
        values = [Fraction(v) for v in point]
        total = Fraction(0)
        for monomial, coefficient in self._terms.items():
            term = coefficient
            for v, e in zip(values, monomial):
                if e:
                    term *= v ** e
            total += term
        return total

    def derivative(self, var: int) -> 'Poly':
        result: Dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            if m[var]:
                lowered = list(m)
                lowered[var] -= 1
                result[tuple(lowered)] = c * m[var]
        return Poly._raw(self._num_vars, result)

    def embed(self, num_vars: int, positions: Sequence[int]) -> 'Poly':
        """Перенести в кольцо с num_vars переменными: переменная i -> positions[i]"""
        if len(positions) != self._num_vars:
            raise StructuralError("positions must list one target index per variable")
        result: Dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            exponents = [0] * num_vars
            for i, e in enumerate(m):
                exponents[positions[i]] += e
            key = tuple(exponents)
            result[key] = result.get(key, 0) + c
        return Poly(num_vars, result)

    def homogenize(self, target_deg: int) -> 'Poly':
        """Добавить последнюю переменную и дополнить каждый терм до степени target_deg"""
        if self._terms and target_deg < self.degree():
            raise ValidationError(f"target degree {target_deg} is below deg p = {self.degree()}")
        return Poly._raw(self._num_vars + 1, {
            m + (target_deg - sum(m),): c for m, c in self._terms.items()
        })

    def dehomogenize(self) -> 'Poly':
        """Положить последнюю переменную равной 1"""
        if not self.is_homogeneous():
            raise ValidationError("dehomogenize expects a homogeneous polynomial")
        if self._num_vars < 2:
            raise StructuralError("dehomogenize needs at least two variables")
        result: Dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            key = m[:-1]
            result[key] = result.get(key, 0) + c
        return Poly(self._num_vars - 1, result)

    # --- содержание ---------------------------------------------------

    def content(self) -> Fraction:
        """Положительное рациональное c, для которого p / c имеет взаимно простые целые коэффициенты"""
        if not self._terms:
            return Fraction(0)
        numerator = 0
        denominator = 1
        for c in self._terms.values():
            numerator = math.gcd(numerator, c.numerator)
            denominator = math.lcm(denominator, c.denominator)
        return Fraction(numerator, denominator)

    def primitive(self) -> 'Poly':
        """Целые взаимно простые коэффициенты и положительный старший коэффициент"""
        if not self._terms:
            return self
        factor = self.content()
        if self.leading_coefficient() < 0:
            factor = -factor
        return self.scale(1 / factor)

    def monic(self) -> 'Poly':
        return self.scale(1 / self.leading_coefficient())

    # --- печать -------------------------------------------------------

    def format(self, names: Optional[Sequence[str]] = None) -> str:
        """Каноническая запись в грамматике командной строки"""
        names = list(names) if names is not None else default_names(self._num_vars)
        if len(names) != self._num_vars:
            raise StructuralError(f"need {self._num_vars} variable names, got {len(names)}")
        if not self._terms:
            return "0"
        pieces: List[str] = []
        for monomial, coefficient in self.items():
            factors = [names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(monomial) if e]
            magnitude = abs(coefficient)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(magnitude)] + factors)
            if not pieces:
                pieces.append(body if coefficient > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coefficient > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Poly({self.format()})"

    def __str__(self) -> str:
        return self.format()


def default_names(num_vars: int) -> List[str]:
    if num_vars == 1:
        return ["x"]
    if num_vars == 2:
        return ["x", "y"]
    if num_vars == 3:
        return ["x", "y", "z"]
    return [f"x{i + 1}" for i in range(num_vars)]


def sum_polys(polys: Iterable[Poly], num_vars: int) -> Poly:
    total = Poly.zero(num_vars)
    for p in polys:
        total = total + p
    return total


def monomials_of_degree(num_vars: int, degree: int, variables: Optional[Sequence[int]] = None) -> List[Monomial]:
    """Все мономы степени degree от переменных variables (по умолчанию всех) в убывающем grlex-порядке"""
    variables = range(num_vars) if variables is None else variables
    result = []
    for combo in combinations_with_replacement(variables, degree):
        exponents = [0] * num_vars
        for i in combo:
            exponents[i] += 1
        result.append(tuple(exponents))
    return sorted(result, reverse=True)
