"""A small exact Gröbner basis engine over Q.

Enough to degenerate a polynomial ideal ``I`` to its initial monomial ideals
``in(I^m)`` and read off ``e(I) = lim e(in(I^m)) / m^n``.
"""

from __future__ import annotations

import enum
import itertools
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .monomial import Exponent, MonomialIdeal, colength, minimal_elements, divides
from .sequences import Direction, LimitEstimate

DEFAULT_WORK_LIMIT = 50_000
DEFAULT_GENERATOR_CAP = 20_000


class WorkLimitExceeded(RuntimeError):
    """Buchberger processed more S-pairs than allowed."""


class OrderKind(enum.Enum):
    LEX = "lex"
    GRLEX = "grlex"
    GREVLEX = "grevlex"


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order; ``perm[0]`` is the index of the largest variable."""

    kind: OrderKind = OrderKind.GREVLEX
    perm: tuple[int, ...] | None = None

    @classmethod
    def parse(cls, text: str, dim: int | None = None) -> "MonomialOrder":
        return cls(OrderKind(text.strip().lower()))

    def _permuted(self, u: Exponent) -> Exponent:
        if self.perm is None:
            return u
        return tuple(u[i] for i in self.perm)

    def key(self, u: Exponent):
        """Sort key; larger key means larger monomial."""
        v = self._permuted(u)
        if self.kind is OrderKind.LEX:
            return v
        if self.kind is OrderKind.GRLEX:
            return (sum(v), v)
        return (sum(v), tuple(-x for x in reversed(v)))

    def __str__(self) -> str:
        return self.kind.value if self.perm is None else f"{self.kind.value}{list(self.perm)}"


GREVLEX = MonomialOrder()


class Polynomial:
    """Sparse polynomial with ``Fraction`` coefficients; immutable by convention."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms: Mapping[Exponent, object] | None = None):
        self.dim = dim
        clean = {}
        for u, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                u = tuple(u)
                if len(u) != dim:
                    raise ValueError(f"exponent {u} does not have length {dim}")
                clean[u] = c
        self.terms: dict[Exponent, Fraction] = clean

    @classmethod
    def monomial(cls, u: Sequence[int], coeff=1) -> "Polynomial":
        return cls(len(u), {tuple(u): coeff})

    @classmethod
    def constant(cls, dim: int, c) -> "Polynomial":
        return cls(dim, {(0,) * dim: c})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.dim == other.dim and self.terms == other.terms

    def __hash__(self):
        return hash((self.dim, frozenset(self.terms.items())))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for u, c in other.terms.items():
            out[u] = out.get(u, 0) + c
        return Polynomial(self.dim, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.dim, {u: -c for u, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        out: dict[Exponent, Fraction] = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = tuple(x + y for x, y in zip(u, v))
                out[w] = out.get(w, 0) + a * b
        return Polynomial(self.dim, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        result = Polynomial.constant(self.dim, 1)
        for _ in range(k):
            result = result * self
        return result

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(self.dim, {u: a * c for u, a in self.terms.items()})

    def shift(self, v: Exponent, c=1) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(self.dim, {tuple(x + y for x, y in zip(u, v)): a * c for u, a in self.terms.items()})

    @property
    def degree(self) -> int:
        return max(sum(u) for u in self.terms) if self.terms else -1

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def leading_exponent(self, order: MonomialOrder = GREVLEX) -> Exponent:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = GREVLEX) -> Fraction:
        return self.terms[self.leading_exponent(order)]

    def monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        return self.scale(1 / self.leading_coefficient(order))

    def sorted_terms(self, order: MonomialOrder = GREVLEX) -> list[tuple[Exponent, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def __repr__(self) -> str:
        from .textio import format_polynomial

        return f"Polynomial({format_polynomial(self)!r})"

    def __str__(self) -> str:
        from .textio import format_polynomial

        return format_polynomial(self)


def lowest_degree_part(f: Polynomial) -> Polynomial:
    """Sum of the terms of ``f`` of minimal total degree."""
    if not f:
        raise ValueError("the zero polynomial has no lowest-degree form")
    d = min(sum(u) for u in f.terms)
    return Polynomial(f.dim, {u: c for u, c in f.terms.items() if sum(u) == d})


def normal_form(f: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> Polynomial:
    """Full remainder of ``f`` on division by ``basis``."""
    basis = [g for g in basis if g]
    if not basis:
        return f
    leads = [(g.leading_exponent(order), g) for g in basis]
    leads = [(u, g.scale(1 / g.terms[u])) for u, g in leads]
    p = dict(f.terms)
    rem: dict[Exponent, Fraction] = {}
    while p:
        u = max(p, key=order.key)
        c = p[u]
        for v, g in leads:
            if divides(v, u):
                shift = tuple(x - y for x, y in zip(u, v))
                for w, a in g.terms.items():
                    t = tuple(x + y for x, y in zip(w, shift))
                    val = p.get(t, 0) - c * a
                    if val:
                        p[t] = val
                    else:
                        p.pop(t, None)
                break
        else:
            rem[u] = c
            del p[u]
    return Polynomial(f.dim, rem)


def _lcm(u: Exponent, v: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(u, v))


def _spoly(f: Polynomial, g: Polynomial, uf: Exponent, ug: Exponent) -> Polynomial:
    lcm = _lcm(uf, ug)
    a = f.shift(tuple(x - y for x, y in zip(lcm, uf)), 1 / f.terms[uf])
    b = g.shift(tuple(x - y for x, y in zip(lcm, ug)), 1 / g.terms[ug])
    return a - b


def _reduce_basis(basis: list[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    basis = [g.monic(order) for g in basis if g]
    leads = [g.leading_exponent(order) for g in basis]
    keep_leads = set(minimal_elements(leads))
    kept, seen = [], set()
    for g, u in zip(basis, leads):
        if u in keep_leads and u not in seen:
            kept.append(g)
            seen.add(u)
    out = []
    for i, g in enumerate(kept):
        others = kept[:i] + kept[i + 1 :]
        lead = g.leading_exponent(order)
        tail = Polynomial(g.dim, {u: c for u, c in g.terms.items() if u != lead})
        r = normal_form(tail, others, order)
        out.append(Polynomial(g.dim, {lead: 1}) + r)
    return sorted(out, key=lambda g: order.key(g.leading_exponent(order)))


def buchberger(gens: Iterable[Polynomial], order: MonomialOrder = GREVLEX, work_limit: int | None = None) -> list[Polynomial]:
    """Reduced Gröbner basis, sorted by increasing leading monomial.

    Uses the coprime-leading-term criterion and the chain criterion; pairs are
    processed smallest-lcm first.
    """
    if work_limit is None:
        work_limit = int(os.environ.get("AI_WORK_LIMIT", DEFAULT_WORK_LIMIT))
    G = [g.monic(order) for g in gens if g]
    if not G:
        raise ValueError("cannot compute a Gröbner basis of the zero ideal")
    if any(sum(g.leading_exponent(order)) == 0 for g in G):
        return [Polynomial.constant(G[0].dim, 1)]
    leads = [g.leading_exponent(order) for g in G]
    pairs = {(i, j) for j in range(len(G)) for i in range(j)}
    processed = 0
    while pairs:
        i, j = min(pairs, key=lambda p: (order.key(_lcm(leads[p[0]], leads[p[1]])), p))
        pairs.discard((i, j))
        ui, uj = leads[i], leads[j]
        lcm = _lcm(ui, uj)
        if all(x == 0 or y == 0 for x, y in zip(ui, uj)):
            continue
        # chain criterion: some k with lead_k | lcm whose pairs with i and j are already done
        if any(
            k not in (i, j)
            and divides(leads[k], lcm)
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(G))
        ):
            continue
        processed += 1
        if processed > work_limit:
            raise WorkLimitExceeded(f"more than {work_limit} S-pairs processed")
        r = normal_form(_spoly(G[i], G[j], ui, uj), G, order)
        if r:
            r = r.monic(order)
            G.append(r)
            leads.append(r.leading_exponent(order))
            if sum(leads[-1]) == 0:
                return [Polynomial.constant(r.dim, 1)]
            new = len(G) - 1
            pairs |= {(k, new) for k in range(new)}
    return _reduce_basis(G, order)


@dataclass
class PolynomialIdeal:
    dim: int
    generators: list[Polynomial]
    _bases: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        for g in self.generators:
            if g.dim != self.dim:
                raise ValueError("generator of the wrong dimension")

    @classmethod
    def from_monomial_ideal(cls, a: MonomialIdeal) -> "PolynomialIdeal":
        return cls(a.dim, [Polynomial.monomial(g) for g in a.gens])

    def groebner_basis(self, order: MonomialOrder = GREVLEX, work_limit: int | None = None) -> list[Polynomial]:
        if order not in self._bases:
            self._bases[order] = buchberger(self.generators, order, work_limit)
        return self._bases[order]

    def contains(self, f: Polynomial, order: MonomialOrder = GREVLEX) -> bool:
        return not normal_form(f, self.groebner_basis(order), order)

    def __str__(self) -> str:
        return ", ".join(str(g) for g in self.generators)


def initial_ideal(I: PolynomialIdeal, order: MonomialOrder = GREVLEX, work_limit: int | None = None) -> MonomialIdeal:
    basis = I.groebner_basis(order, work_limit)
    return MonomialIdeal(I.dim, minimal_elements(g.leading_exponent(order) for g in basis))


def ideal_power(I: PolynomialIdeal, m: int, cap: int = DEFAULT_GENERATOR_CAP) -> PolynomialIdeal:
    """``I^m`` generated by all ``m``-fold products of generators (duplicates dropped)."""
    if m < 1:
        raise ValueError("m must be positive")
    gens = [g for g in I.generators if g]
    seen: dict[Polynomial, None] = {}
    for combo in itertools.combinations_with_replacement(range(len(gens)), m):
        if len(seen) >= cap:
            raise WorkLimitExceeded(f"I^{m} needs more than {cap} generators")
        f = Polynomial.constant(I.dim, 1)
        for k in combo:
            f = f * gens[k]
        seen.setdefault(f, None)
    return PolynomialIdeal(I.dim, list(seen))


def colength_poly(I: PolynomialIdeal, order: MonomialOrder = GREVLEX, work_limit: int | None = None) -> int:
    """``dim_K R/I``, read off the initial ideal."""
    return colength(initial_ideal(I, order, work_limit))


def samuel_multiplicity(
    I: PolynomialIdeal,
    order: MonomialOrder = GREVLEX,
    M: int = 8,
    indices: Iterable[int] | None = None,
    work_limit: int | None = None,
) -> LimitEstimate:
    """Samples ``e(in(I^m)) / m^n``; their infimum over all ``m`` equals ``e(I)``."""
    from .newton import multiplicity

    ms = sorted(set(indices)) if indices is not None else list(range(1, M + 1))
    n = I.dim
    samples = []
    initial = {}
    for m in ms:
        a = initial_ideal(ideal_power(I, m), order, work_limit)
        initial[m] = a
        samples.append((m, Fraction(multiplicity(a), m**n)))
    est = LimitEstimate(samples, min(v for _, v in samples), Direction.UPPER, meta={"order": str(order)})
    est.meta["initial_ideals"] = initial
    return est
