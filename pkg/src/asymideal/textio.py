"""Text formats shared by the library and the command line.

Ideals are comma-separated generators. A generator is a ``+``/``-`` separated
sum of terms ``c*x1^a*x2^b`` with an optional rational coefficient ``p/q``.
Variables are ``x1 .. xn``; ``x``, ``y``, ``z`` are aliases for ``x1 .. x3``.
If every generator is a bare monomial the result is a :class:`MonomialIdeal`.
"""

from __future__ import annotations

import re
from decimal import ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction

from .monomial import MonomialIdeal, minimalize

ALIASES = {"x": 1, "y": 2, "z": 3}

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>x\d+|[xyz])|(?P<op>[+\-*^,()]))"
)


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return tokens


def _var_index(name: str, pos: int) -> int:
    if name in ALIASES:
        return ALIASES[name]
    idx = int(name[1:])
    if idx < 1:
        raise ParseError("variable indices start at 1", pos)
    return idx


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0
        self.end = len(text)

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, self.end)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect_int(self) -> int:
        kind, val, pos = self.take()
        if kind != "num" or "/" in val:
            raise ParseError("expected a nonnegative integer exponent", pos)
        return int(val)

    def term(self):
        """Returns (coefficient, {var index: exponent}, is_bare_monomial)."""
        coeff = Fraction(1)
        powers: dict[int, int] = {}
        bare = True
        while True:
            kind, val, pos = self.peek()
            if kind == "num":
                self.take()
                coeff *= Fraction(val)
                bare = False
            elif kind == "var":
                self.take()
                idx = _var_index(val, pos)
                k = 1
                if self.peek()[1] == "^":
                    self.take()
                    k = self.expect_int()
                powers[idx] = powers.get(idx, 0) + k
            else:
                raise ParseError("expected a coefficient or variable", pos)
            if self.peek()[1] == "*":
                self.take()
                continue
            break
        return coeff, powers, bare

    def generator(self):
        terms = []
        bare = True
        sign = Fraction(1)
        kind, val, pos = self.peek()
        if val in "+-" and kind == "op":
            self.take()
            sign = Fraction(-1 if val == "-" else 1)
            bare = False
        while True:
            c, powers, b = self.term()
            terms.append((sign * c, powers))
            bare = bare and b
            kind, val, pos = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                sign = Fraction(-1 if val == "-" else 1)
                bare = False
                continue
            break
        return terms, bare and len(terms) == 1

    def ideal(self):
        gens = [self.generator()]
        while True:
            kind, val, pos = self.peek()
            if kind is None:
                break
            if val != ",":
                raise ParseError("expected ',' between generators", pos)
            self.take()
            gens.append(self.generator())
        return gens


def parse_ideal(text: str, dim: int | None = None):
    """Parse ideal text into a MonomialIdeal or a PolynomialIdeal."""
    from .groebner import Polynomial, PolynomialIdeal

    if not text.strip():
        raise ParseError("empty ideal", 0)
    gens = _Parser(text).ideal()
    top = max((max(p, default=0) for terms, _ in gens for _, p in terms), default=0)
    if dim is None:
        dim = max(top, 1)
    elif top > dim:
        raise ParseError(f"variable x{top} exceeds dimension {dim}", 0)

    def exponent(powers):
        return tuple(powers.get(i + 1, 0) for i in range(dim))

    if all(bare for _, bare in gens):
        return minimalize(dim, [exponent(terms[0][1]) for terms, _ in gens])
    polys = []
    for terms, _ in gens:
        acc: dict = {}
        for c, powers in terms:
            u = exponent(powers)
            acc[u] = acc.get(u, 0) + c
        polys.append(Polynomial(dim, acc))
    return PolynomialIdeal(dim, polys)


def parse_monomial_ideal(text: str, dim: int | None = None) -> MonomialIdeal:
    ideal = parse_ideal(text, dim)
    if not isinstance(ideal, MonomialIdeal):
        raise ParseError("expected a monomial ideal", 0)
    return ideal


def parse_polynomial(text: str, dim: int | None = None):
    from .groebner import PolynomialIdeal, Polynomial

    ideal = parse_ideal(text, dim)
    if isinstance(ideal, MonomialIdeal):
        ideal = PolynomialIdeal.from_monomial_ideal(ideal)
    if len(ideal.generators) != 1:
        raise ParseError("expected a single polynomial", 0)
    p = ideal.generators[0]
    return Polynomial(p.dim, p.terms)


def _monomial_text(u) -> str:
    parts = []
    for i, k in enumerate(u):
        if k == 1:
            parts.append(f"x{i + 1}")
        elif k > 1:
            parts.append(f"x{i + 1}^{k}")
    return "*".join(parts) if parts else "1"


def format_monomial_ideal(a: MonomialIdeal) -> str:
    if a.is_zero:
        return "(0)"
    return ", ".join(_monomial_text(g) for g in sorted(a.gens, reverse=True))


def format_polynomial(f) -> str:
    from .groebner import GREVLEX

    if not f.terms:
        return "0"
    out = []
    for i, (u, c) in enumerate(f.sorted_terms(GREVLEX)):
        sign = "-" if c < 0 else "+"
        c = abs(c)
        mono = _monomial_text(u)
        if mono == "1":
            body = format_rational(c)
        elif c == 1:
            body = mono
        else:
            body = f"{format_rational(c)}*{mono}"
        if i == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not re.fullmatch(r"-?\d+(/\d+)?", text):
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(text)


_DEC = Context(prec=12, rounding=ROUND_HALF_EVEN)


def decimal12(q) -> str:
    """12 significant digits, round-half-even; presentation only."""
    q = Fraction(q)
    d = _DEC.divide(Decimal(q.numerator), Decimal(q.denominator))
    return format(d, "f") if abs(d.adjusted()) < 12 else format(d, "E")
