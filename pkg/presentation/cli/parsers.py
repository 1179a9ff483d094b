"""
Грамматики входных данных командной строки.

Многочлены: `3*x^2*y`, коэффициенты `p` или `p/q`, `*` между коэффициентом
и переменными можно опускать. Отображения:
`map N=2 d=2 vars=(x,y,z): [y*z : x*z + y^2 : z^2]` (заголовок необязателен).
Спецификации Хенона: `henon N=3 k=2 d=2 b=(1,2,3) P3=(x2^2) P4=(x2*x3)`.
Комментарии начинаются с `#`.
"""
import re
from fractions import Fraction
from tokenize import TokenError
from typing import Dict, List, Optional, Sequence, Tuple

import sympy
from sympy.parsing.sympy_parser import (
    convert_xor, implicit_multiplication, parse_expr, standard_transformations,
)

from domain.entity.henon_spec import HenonSpec
from domain.entity.poly import Poly, default_names
from domain.entity.proj_map import ProjMap
from domain.exception.errors import ParseError, StructuralError, ValidationError
from domain.value_object.projective import LineP2
from domain.value_object.weight_vector import WeightVector

TRANSFORMATIONS = standard_transformations + (implicit_multiplication, convert_xor)

POLY_CHARACTER = re.compile(r"[0-9A-Za-z_+\-*/^()\s]")
IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
RATIONAL = re.compile(r"\s*(-?\d+)(?:\s*/\s*(\d+))?\s*")
WEIGHTS = re.compile(r"\s*-?\d+(?:\s*,\s*-?\d+)*\s*")

MAP_HEADER = re.compile(
    r"\s*map\s+N\s*=\s*(?P<N>\d+)\s+d\s*=\s*(?P<d>\d+)\s+vars\s*=\s*\((?P<vars>[^)]*)\)\s*:")
SPEC_HEADER = re.compile(
    r"\s*henon\s+N\s*=\s*(?P<N>\d+)\s+k\s*=\s*(?P<k>\d+)\s+d\s*=\s*(?P<d>\d+)\s+b\s*=\s*\((?P<b>[^)]*)\)")
SPEC_PART = re.compile(r"\s*P(?P<key>\d+)\s*=\s*\(")


def position(text: str, offset: int) -> Tuple[int, int]:
    """Строка и столбец (с единицы) для смещения в тексте"""
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def blank_comments(text: str) -> str:
    """Заменить комментарии пробелами, сохранив смещения"""
    return re.sub(r"#[^\n]*", lambda m: " " * len(m.group()), text)


def _error(message: str, source: str, offset: int, **details) -> ParseError:
    line, column = position(source, offset)
    return ParseError(message, line=line, column=column, **details)


def _closing_parenthesis(text: str, start: int) -> int:
    """Индекс скобки, закрывающей открытую в text[start - 1]"""
    depth = 1
    for i in range(start, len(text)):
        if text[i] == "(":
            depth += 1
        elif text[i] == ")":
            depth -= 1
            if depth == 0:
                return i
    return -1


class PolyParser:
    """Разбор многочлена от объявленных переменных через sympy"""

    def __init__(self, names: Sequence[str]):
        self.names = list(names)
        self.symbols = {name: sympy.Symbol(name) for name in self.names}

    def parse(self, text: str, source: Optional[str] = None, offset: int = 0) -> Poly:
        source = text if source is None else source
        if not text.strip():
            raise _error("empty polynomial", source, offset)

        depth = 0
        for i, ch in enumerate(text):
            if not POLY_CHARACTER.match(ch):
                raise _error(f"unexpected character {ch!r}", source, offset + i)
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth < 0:
                    raise _error("unbalanced ')'", source, offset + i)
        if depth:
            raise _error("missing ')'", source, offset + len(text))

        for match in IDENTIFIER.finditer(text):
            if match.group() not in self.symbols:
                raise _error(f"unknown variable {match.group()!r}, declared: {', '.join(self.names)}",
                             source, offset + match.start())

        try:
            expression = parse_expr(text, local_dict=dict(self.symbols), transformations=TRANSFORMATIONS)
            polynomial = sympy.Poly(expression, *self.symbols.values(), domain="QQ")
        except sympy.PolynomialError as e:
            raise _error(f"not a polynomial: {text.strip()}", source, offset, reason=str(e))
        except (SyntaxError, TokenError, TypeError, sympy.SympifyError) as e:
            raise _error(f"malformed polynomial {text.strip()!r}", source, offset, reason=str(e))

        terms: Dict[Tuple[int, ...], Fraction] = {}
        for monomial, coefficient in polynomial.as_dict().items():
            value = sympy.Rational(coefficient)
            terms[tuple(monomial)] = Fraction(int(value.p), int(value.q))
        return Poly(len(self.names), terms)


class MapParser:
    """Разбор записи `map N= d= vars=(..): [.. : ..]` или просто `[.. : ..]`"""

    def parse(self, text: str) -> ProjMap:
        clean = blank_comments(text)
        header = MAP_HEADER.match(clean)
        if header:
            N = int(header.group('N'))
            d = int(header.group('d'))
            names = self._names(header.group('vars'), text, header.start('vars'))
            start = header.end()
        else:
            stripped = clean.lstrip()
            if stripped.startswith("map"):
                raise _error("malformed map header, expected 'map N=<int> d=<int> vars=(...):'",
                             text, len(clean) - len(stripped))
            N = d = None
            names = None
            start = 0

        opening = clean.find("[", start)
        if opening < 0 or clean[start:opening].strip():
            raise _error("expected '[' opening the coordinate list", text, start)
        closing = clean.rfind("]")
        if closing < opening:
            raise _error("missing ']' closing the coordinate list", text, len(clean))
        if clean[closing + 1:].strip():
            raise _error("unexpected text after ']'", text, closing + 1)

        pieces = self._split(clean, opening + 1, closing)
        if names is None:
            names = default_names(len(pieces))
        if N is not None and len(pieces) != N + 1:
            raise StructuralError(f"a self-map of P^{N} needs {N + 1} coordinates, got {len(pieces)}")
        if len(names) != len(pieces):
            raise StructuralError(f"{len(names)} variables declared for {len(pieces)} coordinates")

        parser = PolyParser(names)
        coords = [parser.parse(piece, text, piece_offset) for piece, piece_offset in pieces]
        if N is None:
            return ProjMap.from_coords(coords)
        return ProjMap(N=N, d=d, coords=tuple(coords))

    @staticmethod
    def _split(clean: str, start: int, end: int) -> List[Tuple[str, int]]:
        pieces = []
        cursor = start
        for i in range(start, end + 1):
            if i == end or clean[i] == ":":
                pieces.append((clean[cursor:i], cursor))
                cursor = i + 1
        return pieces

    @staticmethod
    def _names(raw: str, source: str, offset: int) -> List[str]:
        names = [n.strip() for n in raw.split(",")]
        for name in names:
            if not IDENTIFIER.fullmatch(name):
                raise _error(f"invalid variable name {name!r}", source, offset)
        if len(set(names)) != len(names):
            raise _error("variable names must be distinct", source, offset)
        return names


class SpecParser:
    """Разбор записи `henon N= k= d= b=(..) P<i>=(..) ...`"""

    def parse(self, text: str) -> HenonSpec:
        clean = blank_comments(text)
        header = SPEC_HEADER.match(clean)
        if not header:
            raise _error("expected 'henon N=<int> k=<int> d=<int> b=(...)'", text, 0)
        N = int(header.group('N'))
        b = self._rationals(header.group('b'), text, header.start('b'))
        names = [f"x{i + 1}" for i in range(N)]
        parser = PolyParser(names)

        P: Dict[int, Poly] = {}
        cursor = header.end()
        while clean[cursor:].strip():
            part = SPEC_PART.match(clean, cursor)
            if not part:
                offset = cursor + len(clean[cursor:]) - len(clean[cursor:].lstrip())
                raise _error("expected 'P<index>=(<polynomial>)'", text, offset)
            key = int(part.group('key'))
            if key in P:
                raise _error(f"P{key} given twice", text, part.start('key'))
            closing = _closing_parenthesis(clean, part.end())
            if closing < 0:
                raise _error(f"missing ')' closing P{key}", text, len(clean))
            P[key] = parser.parse(clean[part.end():closing], text, part.end())
            cursor = closing + 1

        return HenonSpec(N=N, k=int(header.group('k')), d=int(header.group('d')), b=tuple(b), P=P)

    @staticmethod
    def _rationals(raw: str, source: str, offset: int) -> List[Fraction]:
        values = []
        cursor = offset
        for item in raw.split(","):
            match = RATIONAL.fullmatch(item)
            if not match:
                raise _error(f"expected an integer or p/q, got {item.strip()!r}", source, cursor)
            denominator = int(match.group(2) or 1)
            if denominator == 0:
                raise _error("zero denominator", source, cursor)
            values.append(Fraction(int(match.group(1)), denominator))
            cursor += len(item) + 1
        return values


def is_spec_text(text: str) -> bool:
    return blank_comments(text).lstrip().startswith("henon")


def parse_line(text: str) -> LineP2:
    """`line: <линейная форма>` или `<левая часть> = <правая часть>` от x, y, z"""
    body = text.strip()
    offset = len(text) - len(text.lstrip())
    if body.startswith("line:"):
        offset += len("line:")
        body = body[len("line:"):]
    parser = PolyParser(["x", "y", "z"])
    if "=" in body:
        left, right = body.split("=", 1)
        form = parser.parse(left, text, offset) - parser.parse(right, text, offset + len(left) + 1)
    else:
        form = parser.parse(body, text, offset)
    if form.is_zero() or not form.is_homogeneous() or form.degree() != 1:
        raise ValidationError(f"a line needs a homogeneous linear form in x, y, z, got {form}")
    return LineP2.from_linear_form(form)


def parse_weights(text: str) -> WeightVector:
    """Веса через запятую: `1,0,-1`"""
    if not WEIGHTS.fullmatch(text):
        bad = next((i for i, ch in enumerate(text) if not (ch.isdigit() or ch in "-, ")), 0)
        raise _error(f"expected comma-separated integers, got {text!r}", text, bad)
    return WeightVector(tuple(int(w) for w in text.split(",")))
