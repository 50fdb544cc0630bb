"""Multiplier ideals of monomial ideals from their Newton polyhedra.

``X^u`` lies in ``I(lam * a)`` exactly when ``u + (1,...,1)`` is in the
interior of ``lam * P_a``. Asymptotic multiplier ideals of a graded sequence
are approximated along the divisibility chain ``p = 1, 2, 4, ...``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .monomial import MonomialIdeal, box_bound, ideal_sum, is_subideal, upset_generators
from .newton import NewtonPolyhedron, build_polyhedron


def _as_positive_rational(lam) -> Fraction:
    if isinstance(lam, float):
        raise TypeError("coefficients must be exact rationals, not floats")
    lam = Fraction(lam)
    if lam <= 0:
        raise ValueError("coefficient must be positive")
    return lam


def _multiplier_from_polyhedron(P: NewtonPolyhedron, lam: Fraction) -> MonomialIdeal:
    n = P.dim
    side = math.ceil(lam * P.box)

    def member(u):
        return P.interior_contains([x + 1 for x in u], lam)

    return upset_generators(n, member, [side] * n)


def multiplier_ideal(a: MonomialIdeal, lam) -> MonomialIdeal:
    """``I(lam * a)`` for a zero-dimensional monomial ideal ``a``."""
    lam = _as_positive_rational(lam)
    if a.is_unit:
        return MonomialIdeal.unit(a.dim)
    return _multiplier_from_polyhedron(build_polyhedron(a), lam)


def jumping_scan(a: MonomialIdeal, lam_max) -> list[tuple[Fraction, MonomialIdeal]]:
    """Jumping numbers of ``a`` in ``(0, lam_max]`` with the ideal starting at each.

    ``I(lam * a)`` is constant on ``[xi_k, xi_{k+1})``; a monomial ``X^u`` leaves
    the ideal exactly at ``min_f <w_f, u+e>/c_f``, so those values are the only
    candidates.
    """
    lam_max = _as_positive_rational(lam_max)
    if a.is_unit:
        return []
    P = build_polyhedron(a)
    side = math.ceil(lam_max * P.box)
    candidates = set()
    for u in itertools.product(range(side + 1), repeat=a.dim):
        v = [x + 1 for x in u]
        t = min(Fraction(sum(w_i * x for w_i, x in zip(w, v)), c) for w, c in P.facets)
        if t <= lam_max:
            candidates.add(t)
    out: list[tuple[Fraction, MonomialIdeal]] = []
    previous = MonomialIdeal.unit(a.dim)
    for t in sorted(candidates):
        ideal = _multiplier_from_polyhedron(P, t)
        if ideal != previous:
            out.append((t, ideal))
            previous = ideal
    return out


def doubling_chain(budget: int) -> list[int]:
    if budget < 1:
        raise ValueError("budget must be at least 1")
    out, p = [], 1
    while p <= budget:
        out.append(p)
        p *= 2
    return out


@dataclass
class AsymptoticResult:
    ideal: MonomialIdeal
    witness_p: int
    stabilized: bool
    chain: list[tuple[int, MonomialIdeal]] = field(default_factory=list)

    @property
    def is_chain(self) -> bool:
        """Whether the computed ideals increase along the chain, as they must for graded input."""
        return all(is_subideal(x, y) for (_, x), (_, y) in zip(self.chain, self.chain[1:]))


def asymptotic_multiplier(seq, m: int, p_budget: int = 16) -> AsymptoticResult:
    """Approximate ``I(m * ||a_.||)`` by ``I(m/p * a_p)`` for ``p = 1, 2, 4, ... <= p_budget``.

    For graded input these ideals increase with ``p``; the result is their sum
    so that non-graded families still get a well-defined answer. ``stabilized``
    only says the last two chain entries agree, not that the true maximum has
    been reached.
    """
    if m < 1:
        raise ValueError("m must be positive")
    chain = []
    for p in doubling_chain(p_budget):
        chain.append((p, multiplier_ideal(seq[p], Fraction(m, p))))
    best = chain[0][1]
    for _, ideal in chain[1:]:
        best = ideal_sum(best, ideal)
    witness = next(p for p, ideal in chain if is_subideal(best, ideal))
    stabilized = len(chain) > 1 and chain[-1][1] == chain[-2][1]
    return AsymptoticResult(best, witness, stabilized, chain)
