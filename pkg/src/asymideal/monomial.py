"""Monomial ideals in K[x_1, ..., x_n] encoded by their minimal exponent vectors.

A :class:`MonomialIdeal` is an antichain of exponent tuples under the
componentwise order. The empty antichain is the zero ideal and the single
all-zeros exponent is the unit ideal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

Exponent = tuple[int, ...]


class DimensionError(ValueError):
    """Raised when two objects live in polynomial rings of different dimension."""


class NotZeroDimensionalError(ValueError):
    """Raised when an operation needs a zero-dimensional (finite colength) ideal."""


def divides(g: Exponent, u: Exponent) -> bool:
    return all(a <= b for a, b in zip(g, u))


def _check_exponent(dim: int, u: Iterable[int]) -> Exponent:
    u = tuple(int(c) for c in u)
    if len(u) != dim:
        raise DimensionError(f"exponent {u} does not have length {dim}")
    if any(c < 0 for c in u):
        raise ValueError(f"negative exponent {u}")
    return u


def minimal_elements(points: Iterable[Exponent]) -> tuple[Exponent, ...]:
    """Return the componentwise-minimal elements of ``points``, sorted."""
    # sorting by total degree means a divisor is always seen before its multiples
    pts = sorted(set(points), key=lambda u: (sum(u), u))
    kept: list[Exponent] = []
    for u in pts:
        if not any(divides(g, u) for g in kept):
            kept.append(u)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    dim: int
    gens: tuple[Exponent, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be at least 1")

    # construction -------------------------------------------------------

    @classmethod
    def from_exponents(cls, dim: int, raw: Iterable[Iterable[int]]) -> "MonomialIdeal":
        return minimalize(dim, raw)

    @classmethod
    def zero(cls, dim: int) -> "MonomialIdeal":
        return cls(dim, ())

    @classmethod
    def unit(cls, dim: int) -> "MonomialIdeal":
        return cls(dim, ((0,) * dim,))

    @classmethod
    def maximal(cls, dim: int) -> "MonomialIdeal":
        return cls.pure_powers([1] * dim)

    @classmethod
    def pure_powers(cls, exps: Iterable[int]) -> "MonomialIdeal":
        exps = list(exps)
        n = len(exps)
        return minimalize(n, [tuple(a if j == i else 0 for j in range(n)) for i, a in enumerate(exps)])

    # predicates ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.dim,)

    def __contains__(self, u) -> bool:
        return contains_monomial(self, u)

    def __le__(self, other: "MonomialIdeal") -> bool:
        """Ideal containment ``self ⊆ other``."""
        return is_subideal(self, other)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return intersection(self, other)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_sum(self, other)

    def __pow__(self, k: int) -> "MonomialIdeal":
        return power(self, k)

    def __str__(self) -> str:
        from .textio import format_monomial_ideal

        return format_monomial_ideal(self)


def _same_dim(a: MonomialIdeal, b: MonomialIdeal) -> int:
    if a.dim != b.dim:
        raise DimensionError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return a.dim


def minimalize(dim: int, raw: Iterable[Iterable[int]]) -> MonomialIdeal:
    pts = [_check_exponent(dim, u) for u in raw]
    return MonomialIdeal(dim, minimal_elements(pts))


def contains_monomial(a: MonomialIdeal, u: Iterable[int]) -> bool:
    u = _check_exponent(a.dim, u)
    return any(divides(g, u) for g in a.gens)


def is_subideal(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    _same_dim(a, b)
    return all(contains_monomial(b, g) for g in a.gens)


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    n = _same_dim(a, b)
    return MonomialIdeal(n, minimal_elements(a.gens + b.gens))


def product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    n = _same_dim(a, b)
    sums = (tuple(x + y for x, y in zip(g, h)) for g in a.gens for h in b.gens)
    return MonomialIdeal(n, minimal_elements(sums))


def intersection(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    n = _same_dim(a, b)
    lcms = (tuple(max(x, y) for x, y in zip(g, h)) for g in a.gens for h in b.gens)
    return MonomialIdeal(n, minimal_elements(lcms))


def _colon_monomial(a: MonomialIdeal, g: Exponent) -> MonomialIdeal:
    quot = (tuple(max(x - y, 0) for x, y in zip(h, g)) for h in a.gens)
    return MonomialIdeal(a.dim, minimal_elements(quot))


def colon(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """The ideal quotient ``(a : b)``."""
    n = _same_dim(a, b)
    if b.is_zero:
        raise ValueError("colon by the zero ideal is the whole ring only formally; refusing")
    result = MonomialIdeal.unit(n)
    for g in b.gens:
        result = intersection(result, _colon_monomial(a, g))
    return result


def power(a: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise ValueError("negative power")
    result = MonomialIdeal.unit(a.dim)
    base = a
    # square-and-multiply keeps intermediate generator sets minimal
    while k:
        if k & 1:
            result = product(result, base)
        k >>= 1
        if k:
            base = product(base, base)
    return result


def pure_power_bounds(a: MonomialIdeal) -> list[int | None]:
    """Smallest ``k`` with ``x_i^k`` in ``a`` for each variable, or None."""
    bounds: list[int | None] = [None] * a.dim
    for g in a.gens:
        support = [i for i, c in enumerate(g) if c]
        if not support:
            return [0] * a.dim
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or g[i] < bounds[i]:
                bounds[i] = g[i]
    return bounds


def is_zero_dimensional(a: MonomialIdeal) -> bool:
    return all(b is not None for b in pure_power_bounds(a))


def box_bound(a: MonomialIdeal) -> int:
    """Largest pure-power exponent ``M``; every standard monomial lies in ``[0, M)^n``."""
    bounds = pure_power_bounds(a)
    if any(b is None for b in bounds):
        raise NotZeroDimensionalError("ideal is not zero-dimensional")
    return max(bounds)


def staircase_minimum(a: MonomialIdeal, prefix: Exponent) -> int | None:
    """Smallest last coordinate ``t`` with ``prefix + (t,)`` in ``a``."""
    best = None
    for g in a.gens:
        if divides(g[:-1], prefix):
            if best is None or g[-1] < best:
                best = g[-1]
    return best


def colength(a: MonomialIdeal) -> int:
    """Number of standard monomials, i.e. ``dim_K R/a``."""
    bounds = pure_power_bounds(a)
    if any(b is None for b in bounds):
        raise NotZeroDimensionalError("colength is infinite for a non-zero-dimensional ideal")
    if a.is_unit:
        return 0
    if a.dim == 1:
        return bounds[0]
    total = 0
    for prefix in itertools.product(*(range(b) for b in bounds[:-1])):
        t = staircase_minimum(a, prefix)
        total += bounds[-1] if t is None else t
    return total


def standard_monomials(a: MonomialIdeal) -> list[Exponent]:
    bounds = pure_power_bounds(a)
    if any(b is None for b in bounds):
        raise NotZeroDimensionalError("infinitely many standard monomials")
    return [u for u in itertools.product(*(range(b) for b in bounds)) if not contains_monomial(a, u)]


def order_at_max_ideal(a: MonomialIdeal) -> int:
    """Largest ``p`` with ``a`` contained in the ``p``-th power of the maximal ideal."""
    if a.is_zero:
        raise ValueError("order of the zero ideal is infinite")
    return min(sum(g) for g in a.gens)


def upset_generators(dim: int, member, bounds: Iterable[int]) -> MonomialIdeal:
    """Minimal generators of an up-closed set of exponents.

    ``member`` must be monotone (``u`` in and ``u <= v`` imply ``v`` in) and every
    minimal element must lie in the box ``prod [0, bounds[i]]``; ``bounds[i]``
    itself must already be a member along axis ``i``.
    """
    bounds = [int(b) for b in bounds]
    found: list[Exponent] = []
    last = bounds[-1]
    for prefix in itertools.product(*(range(b + 1) for b in bounds[:-1])):
        # binary search for the first member on this vertical line
        if not member(prefix + (last,)):
            continue
        lo, hi = 0, last
        while lo < hi:
            mid = (lo + hi) // 2
            if member(prefix + (mid,)):
                hi = mid
            else:
                lo = mid + 1
        found.append(prefix + (lo,))
    return MonomialIdeal(dim, minimal_elements(found))
