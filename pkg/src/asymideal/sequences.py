"""Graded sequences of monomial ideals and finite-sample limit estimates.

The invariants of a graded sequence are limits as ``m -> infinity``. Nothing
here extrapolates: each estimate carries its raw samples together with the
one-sided bound that the relevant Fekete-type lemma guarantees.
"""

from __future__ import annotations

import enum
import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .monomial import (
    DimensionError,
    Exponent,
    MonomialIdeal,
    NotZeroDimensionalError,
    colength,
    colon,
    contains_monomial,
    ideal_sum,
    intersection,
    is_subideal,
    is_zero_dimensional,
    power,
    product,
    pure_power_bounds,
    upset_generators,
)
from .multiplier import AsymptoticResult, asymptotic_multiplier, doubling_chain
from .newton import WeightVector, build_polyhedron, lct, multiplicity, ord_weight

DEFAULT_M = 50
DEFAULT_P_BUDGET = 16
DEFAULT_R_BUDGET = 16


class GradedSequence:
    """A family ``m -> a_m`` of monomial ideals given by an oracle, with a memo cache.

    ``seq[0]`` is the unit ideal by convention. Gradedness is not assumed;
    use :func:`verify_graded_prefix` to audit it.
    """

    def __init__(self, dim: int, oracle: Callable[[int], MonomialIdeal], label: str = ""):
        self.dim = dim
        self.oracle = oracle
        self.label = label
        self._cache: dict[int, MonomialIdeal] = {}
        self._lock = threading.Lock()

    def __getitem__(self, m: int) -> MonomialIdeal:
        if m < 0:
            raise IndexError("sequence indices are nonnegative")
        if m == 0:
            return MonomialIdeal.unit(self.dim)
        cached = self._cache.get(m)
        if cached is not None:
            return cached
        ideal = self.oracle(m)
        if ideal.dim != self.dim:
            raise DimensionError(f"oracle returned an ideal of dimension {ideal.dim} at m={m}")
        with self._lock:
            return self._cache.setdefault(m, ideal)

    def __repr__(self) -> str:
        return f"GradedSequence(dim={self.dim}, label={self.label!r})"

    # constructors -------------------------------------------------------

    @classmethod
    def powers(cls, ideal: MonomialIdeal) -> "GradedSequence":
        return cls(ideal.dim, lambda m: power(ideal, m), f"powers {ideal}")

    @classmethod
    def maxpow(cls, dim: int, k: int) -> "GradedSequence":
        maximal = MonomialIdeal.maximal(dim)
        return cls(dim, lambda m: power(maximal, k * m), f"maxpow {k}")

    @classmethod
    def weighted(cls, weights: Sequence, c) -> "GradedSequence":
        """``a_m = (X^u : <w, u> >= c m)`` for positive weights ``w``."""
        return cls.halfspaces([(weights, c)])

    @classmethod
    def halfspaces(cls, constraints: Sequence[tuple[Sequence, object]]) -> "GradedSequence":
        """``a_m`` spanned by lattice points with ``<w_k, u> >= c_k m`` for every ``k``."""
        cons = [(tuple(Fraction(x) for x in w), Fraction(c)) for w, c in constraints]
        dim = len(cons[0][0])
        for w, c in cons:
            if len(w) != dim:
                raise DimensionError("weight vectors of different lengths")
            if any(x <= 0 for x in w) or c < 0:
                raise ValueError("weights must be positive and offsets nonnegative")

        def oracle(m):
            bounds = [max(math.ceil(c * m / w[i]) for w, c in cons) for i in range(dim)]

            def member(u):
                return all(sum(x * y for x, y in zip(w, u)) >= c * m for w, c in cons)

            return upset_generators(dim, member, bounds)

        if len(cons) == 1:
            w, c = cons[0]
            label = "weighted " + " ".join(str(x) for x in (*w, c))
        else:
            label = "halfspaces " + "; ".join(" ".join(str(x) for x in (*w, c)) for w, c in cons)
        return cls(dim, oracle, label)

    @classmethod
    def table(cls, ideals: Mapping[int, MonomialIdeal], label: str = "table") -> "GradedSequence":
        ideals = dict(ideals)
        dims = {a.dim for a in ideals.values()}
        if len(dims) != 1:
            raise DimensionError("table entries must share one dimension")

        def oracle(m):
            try:
                return ideals[m]
            except KeyError:
                raise IndexError(f"table has no entry for m={m}") from None

        return cls(dims.pop(), oracle, label)


class Direction(enum.Enum):
    UPPER = "upper"
    LOWER = "lower"


@dataclass
class LimitEstimate:
    """Samples of ``value_m`` and the bound they certify on the limit.

    ``UPPER``: the limit is an infimum, so ``best_bound = min(values)`` bounds it
    from above. ``LOWER``: the limit is a supremum and ``best_bound = max(values)``.
    ``direction=None`` marks an uncertified estimate such as a limsup.
    """

    samples: list[tuple[int, Fraction]]
    best_bound: Fraction
    direction: Direction | None
    claimed_limit: Fraction | None = None
    meta: dict = field(default_factory=dict)

    @property
    def values(self) -> list[Fraction]:
        return [v for _, v in self.samples]

    def envelope(self) -> list[tuple[int, Fraction]]:
        """Running min (UPPER) or max (LOWER) over the samples in index order."""
        pick = max if self.direction is Direction.LOWER else min
        out, cur = [], None
        for m, v in sorted(self.samples):
            cur = v if cur is None else pick(cur, v)
            out.append((m, cur))
        return out


def _estimate(samples, direction, **meta) -> LimitEstimate:
    if not samples:
        raise ValueError("no samples")
    values = [v for _, v in samples]
    best = min(values) if direction is Direction.UPPER else max(values)
    return LimitEstimate(list(samples), best, direction, meta=dict(meta))


def _indices(M: int, indices: Iterable[int] | None) -> list[int]:
    if indices is not None:
        return sorted(set(int(m) for m in indices))
    if M < 1:
        raise ValueError("M must be positive")
    return list(range(1, M + 1))


# audits ----------------------------------------------------------------------


@dataclass
class GradednessReport:
    M: int
    checked: int
    violations: list[tuple[int, int, Exponent]]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_graded_prefix(seq: GradedSequence, M: int) -> GradednessReport:
    """Check ``a_p a_q ⊆ a_{p+q}`` for all ``p + q <= M``; record witnesses."""
    if M < 2:
        raise ValueError("M must be at least 2")
    violations = []
    checked = 0
    for p in range(1, M):
        for q in range(p, M - p + 1):
            checked += 1
            prod = product(seq[p], seq[q])
            target = seq[p + q]
            bad = next((g for g in prod.gens if not contains_monomial(target, g)), None)
            if bad is not None:
                violations.append((p, q, bad))
    return GradednessReport(M, checked, violations)


# limits ------------------------------------------------------------------------


def _require_zero_dim(seq, m):
    a = seq[m]
    if not is_zero_dimensional(a):
        raise NotZeroDimensionalError(f"a_{m} = {a} is not zero-dimensional")
    return a


def multiplicity_limit(seq: GradedSequence, M: int = DEFAULT_M, indices=None) -> LimitEstimate:
    """Samples ``e(a_m)/m^n``; their infimum is ``e(a_.)`` for graded input."""
    n = seq.dim
    samples = [(m, Fraction(multiplicity(_require_zero_dim(seq, m)), m**n)) for m in _indices(M, indices)]
    return _estimate(samples, Direction.UPPER, invariant="multiplicity")


def volume_limsup(seq: GradedSequence, M: int = DEFAULT_M, indices=None, window: float = 0.5) -> LimitEstimate:
    """Samples ``n! len(R/a_m)/m^n``; reports the max over the trailing window."""
    n = seq.dim
    samples = [
        (m, Fraction(math.factorial(n) * colength(_require_zero_dim(seq, m)), m**n))
        for m in _indices(M, indices)
    ]
    keep = max(1, math.ceil(len(samples) * window))
    trailing = samples[-keep:]
    return LimitEstimate(
        samples,
        max(v for _, v in trailing),
        None,
        meta={"invariant": "volume", "window": f"last {keep} of {len(samples)} samples"},
    )


def lct_limit(seq: GradedSequence, M: int = DEFAULT_M, indices=None) -> LimitEstimate:
    """Samples ``m lct(a_m)``; their supremum is ``lct(a_.)``."""
    samples = [(m, m * lct(seq[m])) for m in _indices(M, indices)]
    return _estimate(samples, Direction.LOWER, invariant="lct")


def ord_limit(seq: GradedSequence, w=None, M: int = DEFAULT_M, indices=None) -> LimitEstimate:
    """Samples ``ord_w(a_m)/m``; with ``w = (1,...,1)`` the limit is the Lelong number."""
    if w is None:
        w = WeightVector.ones(seq.dim)
    samples = [(m, ord_weight(seq[m], w) / m) for m in _indices(M, indices)]
    return _estimate(samples, Direction.UPPER, invariant="ord")


class Asymptotic:
    """Memoized ``b_m`` of a sequence at a fixed ``p_budget``."""

    def __init__(self, seq: GradedSequence, p_budget: int = DEFAULT_P_BUDGET):
        self.seq = seq
        self.p_budget = p_budget
        self._results: dict[int, AsymptoticResult] = {}

    def result(self, m: int) -> AsymptoticResult:
        if m not in self._results:
            self._results[m] = asymptotic_multiplier(self.seq, m, self.p_budget)
        return self._results[m]

    def __getitem__(self, m: int) -> MonomialIdeal:
        return self.result(m).ideal

    def as_sequence(self) -> GradedSequence:
        return GradedSequence(self.seq.dim, self.__getitem__, f"b({self.seq.label})")


@dataclass
class LctBracket:
    lower: LimitEstimate
    upper: LimitEstimate | None

    @property
    def width(self) -> Fraction | None:
        if self.upper is None:
            return None
        return self.upper.best_bound - self.lower.best_bound


def lct_bracket(
    seq: GradedSequence, M: int = DEFAULT_M, p_budget: int = DEFAULT_P_BUDGET, indices=None, asym=None
) -> LctBracket:
    """Bracket ``lct(a_.) = lct(b_.)`` between ``sup m lct(a_m)`` and ``inf m lct(b_m)``.

    Indices where ``b_m`` is the unit ideal give no upper bound and are skipped.
    """
    lower = lct_limit(seq, M, indices)
    asym = asym or Asymptotic(seq, p_budget)
    samples, skipped = [], []
    for m in _indices(M, indices):
        b = asym[m]
        if b.is_unit:
            skipped.append(m)
        else:
            samples.append((m, m * lct(b)))
    upper = _estimate(samples, Direction.UPPER, invariant="lct of b", skipped=skipped) if samples else None
    return LctBracket(lower, upper)


# constructions -------------------------------------------------------------------


def saturation_step(seq: GradedSequence, m: int, r: int) -> MonomialIdeal:
    """``a'_{m,r}``: monomials whose exponent lies in ``(1/r) P_{a_{mr}}``."""
    big = seq[m * r]
    if big.is_unit:
        return MonomialIdeal.unit(seq.dim)
    P = build_polyhedron(big)
    scale = Fraction(1, r)
    bounds = [math.ceil(Fraction(b, r)) for b in pure_power_bounds(big)]
    return upset_generators(seq.dim, lambda u: P.contains(u, scale), bounds)


class SaturatedSequence(GradedSequence):
    """``a'_m``: union of ``a'_{m,r}`` over ``r = 1, 2, 4, ... <= r_budget``."""

    def __init__(self, base: GradedSequence, r_budget: int = DEFAULT_R_BUDGET):
        self.base = base
        self.r_budget = r_budget
        self.witness_r: dict[int, int] = {}
        super().__init__(base.dim, self._compute, f"saturate({base.label}, r<={r_budget})")

    def _compute(self, m: int) -> MonomialIdeal:
        best, witness = None, 1
        for r in doubling_chain(self.r_budget):
            step = saturation_step(self.base, m, r)
            grown = step if best is None else ideal_sum(best, step)
            if best is None or grown != best:
                witness = r
            best = grown
        self.witness_r[m] = witness
        return best


def saturate(seq: GradedSequence, r_budget: int = DEFAULT_R_BUDGET) -> SaturatedSequence:
    if r_budget < 1:
        raise ValueError("r_budget must be at least 1")
    return SaturatedSequence(seq, r_budget)


def colon_sequence(aseq: GradedSequence, bseq) -> GradedSequence:
    """``m -> (a_m : b_m)``; ``bseq`` may be any indexable of ideals."""
    dim = aseq.dim
    if getattr(bseq, "dim", dim) != dim:
        raise DimensionError("sequences of different dimension")
    return GradedSequence(dim, lambda m: colon(aseq[m], bseq[m]), f"({aseq.label} : {getattr(bseq, 'label', 'b')})")


class CombineOp(enum.Enum):
    PRODUCT = "product"
    INTERSECTION = "intersection"


def combine(aseq: GradedSequence, bseq: GradedSequence, op: CombineOp | str = CombineOp.PRODUCT) -> GradedSequence:
    op = CombineOp(op) if isinstance(op, str) else op
    if aseq.dim != bseq.dim:
        raise DimensionError("sequences of different dimension")
    f = product if op is CombineOp.PRODUCT else intersection
    return GradedSequence(aseq.dim, lambda m: f(aseq[m], bseq[m]), f"{op.value}({aseq.label}, {bseq.label})")


@dataclass
class PositivityCertificate:
    positive: bool
    witness_q: int | None = None

    def __str__(self) -> str:
        return f"POSITIVE({self.witness_q})" if self.positive else "UNKNOWN"


def positivity_certificate(seq: GradedSequence, m_budget: int = 8, p_budget: int = DEFAULT_P_BUDGET, asym=None):
    """Search for ``q`` with ``b_q`` proper, which forces ``a_p ⊆ m^[p/q]`` and ``e(a_.) > 0``."""
    asym = asym or Asymptotic(seq, p_budget)
    for q in range(1, m_budget + 1):
        if not asym[q].is_unit:
            return PositivityCertificate(True, q)
    return PositivityCertificate(False)


# Fekete ---------------------------------------------------------------------------


class FeketeMode(enum.Enum):
    SUBADDITIVE = "subadditive"
    SUPERADDITIVE = "superadditive"


def fekete_limit(values: Iterable[tuple[int, object]], mode: FeketeMode | str = FeketeMode.SUBADDITIVE) -> LimitEstimate:
    """Envelope of ``alpha_m / m``: inf for subadditive, sup for superadditive sequences.

    Sampled triples ``(p, q, p+q)`` are audited against the assumed inequality;
    failures are listed under ``meta['violations']`` but do not stop the estimate.
    """
    mode = FeketeMode(mode) if isinstance(mode, str) else mode
    data = {}
    for m, v in values:
        if m <= 0:
            raise ValueError("indices must be positive")
        if m in data:
            raise ValueError(f"duplicate index {m}")
        data[m] = Fraction(v)
    if not data:
        raise ValueError("empty input")
    violations = []
    keys = sorted(data)
    for i, p in enumerate(keys):
        for q in keys[i:]:
            s = p + q
            if s not in data:
                continue
            lhs, rhs = data[s], data[p] + data[q]
            if (mode is FeketeMode.SUBADDITIVE and lhs > rhs) or (mode is FeketeMode.SUPERADDITIVE and lhs < rhs):
                violations.append((p, q))
    direction = Direction.UPPER if mode is FeketeMode.SUBADDITIVE else Direction.LOWER
    est = _estimate([(m, data[m] / m) for m in keys], direction, mode=mode.value)
    est.meta["violations"] = violations
    est.meta["audit_failed"] = bool(violations)
    return est


def doubling_monotone(est: LimitEstimate) -> list[tuple[int, int]]:
    """Pairs ``(m, 2m)`` where an UPPER estimate increases; empty for graded input."""
    vals = dict(est.samples)
    return [(m, 2 * m) for m in vals if 2 * m in vals and vals[2 * m] > vals[m]]
