"""Seeded property suites over pseudo-random monomial ideals and sequences.

Each suite returns a :class:`SuiteReport`; reports are deterministic for a
given seed so they can be diffed byte for byte.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .monomial import (
    MonomialIdeal,
    colength,
    colon,
    contains_monomial,
    is_subideal,
    minimalize,
    order_at_max_ideal,
    product,
)
from .multiplier import multiplier_ideal
from .newton import build_polyhedron, complement_volume, lct, multiplicity
from .sequences import Asymptotic, GradedSequence, saturate

ROOT_DENOMINATOR = 10**12


@dataclass
class SuiteReport:
    name: str
    passed: int = 0
    failed: int = 0
    inconclusive: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, verdict: bool | None, detail: str = "") -> None:
        if verdict is None:
            self.inconclusive += 1
        elif verdict:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append(detail)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{self.name}: {status} passed={self.passed} failed={self.failed} inconclusive={self.inconclusive}"


# random inputs ---------------------------------------------------------------


def random_ideal(rng: random.Random, dim: int, max_power: int = 6, extra: int = 4) -> MonomialIdeal:
    """A zero-dimensional monomial ideal: pure powers plus a few mixed monomials."""
    powers = [rng.randint(1, max_power) for _ in range(dim)]
    gens = [tuple(p if j == i else 0 for j in range(dim)) for i, p in enumerate(powers)]
    for _ in range(rng.randint(0, extra)):
        gens.append(tuple(rng.randint(0, p - 1) if p > 1 else 0 for p in powers))
    gens = [g for g in gens if any(g)]
    return minimalize(dim, gens)


def random_sequence(rng: random.Random, dim: int = 2) -> GradedSequence:
    """Either the powers of a random ideal or a random intersection of weighted half-spaces."""
    if rng.random() < 0.5:
        return GradedSequence.powers(random_ideal(rng, dim, max_power=4, extra=2))
    k = rng.randint(1, 2)
    cons = [([rng.randint(1, 5) for _ in range(dim)], rng.randint(1, 4)) for _ in range(k)]
    return GradedSequence.halfspaces(cons)


# root comparisons ------------------------------------------------------------


def iroot(x: int, n: int) -> int:
    """``floor(x ** (1/n))`` for a nonnegative integer ``x``."""
    if x < 0:
        raise ValueError("negative radicand")
    if x < 2:
        return x
    r = 1 << ((x.bit_length() + n - 1) // n)
    while True:
        s = ((n - 1) * r + x // r ** (n - 1)) // n
        if s >= r:
            break
        r = s
    while r**n > x:
        r -= 1
    while (r + 1) ** n <= x:
        r += 1
    return r


def root_bounds(q, n: int, denominator: int = ROOT_DENOMINATOR) -> tuple[Fraction, Fraction]:
    """Rational ``lo <= q^(1/n) <= hi`` with the given denominator."""
    q = Fraction(q)
    scaled = q * denominator**n
    lo = iroot(scaled.numerator // scaled.denominator, n)
    exact = lo**n == scaled
    return Fraction(lo, denominator), Fraction(lo if exact else lo + 1, denominator)


def teissier_holds(e_ab: int, e_a: int, e_b: int, n: int) -> bool | None:
    """``e_ab^(1/n) <= e_a^(1/n) + e_b^(1/n)``; None when the bounds cannot decide."""
    lo_ab, hi_ab = root_bounds(e_ab, n)
    lo_a, hi_a = root_bounds(e_a, n)
    lo_b, hi_b = root_bounds(e_b, n)
    if hi_ab <= lo_a + lo_b:
        return True
    if lo_ab > hi_a + hi_b:
        return False
    return None


# suites ------------------------------------------------------------------------


def suite_teissier(seed: int, count: int, dims=(2, 3)) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("TEISSIER")
    for k in range(count):
        n = dims[k % len(dims)]
        a, b = random_ideal(rng, n), random_ideal(rng, n)
        ab = product(a, b)
        ea, eb, eab = multiplicity(a), multiplicity(b), multiplicity(ab)
        rep.record(teissier_holds(eab, ea, eb, n), f"e: a={a} b={b}: {eab} vs {ea}, {eb}")
        ok = 1 / lct(ab) <= 1 / lct(a) + 1 / lct(b)
        rep.record(ok, f"lct: a={a} b={b}")
    return rep


SUBADD_LAMBDAS = (Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2), Fraction(5, 3))


def suite_subadditivity(seed: int, count: int, dims=(2, 3)) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("SUBADD")
    for k in range(count):
        n = dims[k % len(dims)]
        a = random_ideal(rng, n, max_power=4, extra=3)
        b = random_ideal(rng, n, max_power=4, extra=3)
        lam = rng.choice(SUBADD_LAMBDAS)
        lhs = multiplier_ideal(product(a, b), lam)
        rhs = product(multiplier_ideal(a, lam), multiplier_ideal(b, lam))
        rep.record(is_subideal(lhs, rhs), f"a={a} b={b} lambda={lam}")
    return rep


LCBOUND_LAMBDAS = (Fraction(1), Fraction(3, 2), Fraction(2))


def suite_lct_bound(seed: int, count: int, dims=(2, 3)) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("LCBOUND")
    for k in range(count):
        n = dims[k % len(dims)]
        a = random_ideal(rng, n, max_power=5)
        c = lct(a)
        for lam in LCBOUND_LAMBDAS:
            j = multiplier_ideal(a, lam)
            if j.is_unit:
                # bound is vacuous: lam <= lct(a) must then hold
                rep.record(lam <= c, f"a={a} lambda={lam}: unit multiplier ideal above lct")
                continue
            rep.record(1 / lct(j) >= lam / c - 1, f"a={a} lambda={lam}")
    return rep


def suite_integrality(seed: int, count: int, dims=(1, 2, 3)) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("INTEGRALITY")
    for k in range(count):
        n = dims[k % len(dims)]
        a = random_ideal(rng, n)
        e = complement_volume(build_polyhedron(a)) * math.factorial(n)
        rep.record(e.denominator == 1 and e > 0, f"a={a}: n! vol(Q) = {e}")
        e = int(e)
        rep.record(e * lct(a) ** n >= n**n, f"a={a}: e={e} lct={lct(a)}")
        rep.record(e >= order_at_max_ideal(a) ** n, f"a={a}: e={e} below ord^n")
    return rep


def suite_chain(seed: int, count: int, M: int = 8, p_budget: int = 16) -> SuiteReport:
    """Finite consequences of ``e(b) <= vol(b) <= vol(a) <= e(a)`` and reverse gradedness."""
    rng = random.Random(seed)
    rep = SuiteReport("CHAIN")
    for _ in range(count):
        seq = random_sequence(rng)
        n = seq.dim
        asym = Asymptotic(seq, p_budget)
        e_a = {m: Fraction(multiplicity(seq[m]), m**n) for m in range(1, M + 1)}
        upper = min(e_a.values())
        for m in range(1, M + 1):
            a, b = seq[m], asym[m]
            tag = f"{seq.label} m={m}"
            rep.record(is_subideal(a, b), f"{tag}: a_m not in b_m")
            rep.record(colength(b) <= colength(a), f"{tag}: colength")
            e_b = Fraction(multiplicity(b), m**n)
            rep.record(e_b <= e_a[m], f"{tag}: e(b_m) > e(a_m)")
            if asym.result(m).stabilized:
                rep.record(e_b <= upper, f"{tag}: e(b_m)/m^n above an upper bound for e(a)")
            if 2 * m <= M:
                rep.record(e_a[2 * m] <= e_a[m], f"{tag}: doubling")
        for p in range(1, M):
            for q in range(1, M - p + 1):
                rep.record(is_subideal(asym[p + q], product(asym[p], asym[q])), f"{seq.label} b_{p + q} vs b_{p} b_{q}")
                if p > q:
                    rep.record(is_subideal(asym[p], asym[q]), f"{seq.label} b_{p} not in b_{q}")
    return rep


def suite_saturation(seed: int, count: int, M: int = 10, p_budget: int = 16, r_budget: int = 16) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("SATURATION")
    for _ in range(count):
        seq = random_sequence(rng)
        sat = saturate(seq, r_budget)
        asym = Asymptotic(sat, p_budget)
        ones = (1,) * seq.dim
        for m in range(1, M + 1):
            tag = f"{seq.label} m={m}"
            rep.record(is_subideal(seq[m], sat[m]), f"{tag}: a_m not in a'_m")
            c = colon(sat[m], asym[m])
            rep.record(contains_monomial(c, ones), f"{tag}: X^e not in (a'_m : b'_m)")
    return rep


SUITES = {
    "TEISSIER": suite_teissier,
    "SUBADD": suite_subadditivity,
    "LCBOUND": suite_lct_bound,
    "CHAIN": suite_chain,
    "SATURATION": suite_saturation,
    "INTEGRALITY": suite_integrality,
}


def run_suite(name: str, seed: int = 0, count: int = 20) -> SuiteReport:
    if count < 1:
        raise ValueError("count must be at least 1")
    try:
        fn = SUITES[name.upper()]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return fn(seed, count)
