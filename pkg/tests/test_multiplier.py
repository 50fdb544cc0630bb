from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from asymideal import GradedSequence, MonomialIdeal, lct, minimalize, power, product
from asymideal.monomial import contains_monomial, is_subideal
from asymideal.multiplier import asymptotic_multiplier, doubling_chain, jumping_scan, multiplier_ideal
from oracles import interior_member_2d

X2Y3 = MonomialIdeal.pure_powers([2, 3])
MAX2 = MonomialIdeal.maximal(2)
LAMBDAS = [Fraction(k, 6) for k in range(1, 19)]


def zero_dim(dim=2, max_exp=5):
    powers = st.tuples(*[st.integers(1, max_exp)] * dim)
    extra = st.lists(st.tuples(*[st.integers(0, max_exp - 1)] * dim).filter(any), max_size=3)
    return st.builds(
        lambda p, e: minimalize(dim, [tuple(k if j == i else 0 for j in range(dim)) for i, k in enumerate(p)] + e),
        powers,
        extra,
    )


lambdas = st.fractions(min_value=Fraction(1, 8), max_value=3, max_denominator=12).filter(lambda q: q > 0)


def test_multiplier_examples():
    assert multiplier_ideal(X2Y3, 1) == MAX2
    assert multiplier_ideal(X2Y3, Fraction(5, 6)) == MAX2
    assert multiplier_ideal(X2Y3, Fraction(4, 6)).is_unit
    assert multiplier_ideal(MAX2, 2) == MAX2
    assert multiplier_ideal(MAX2, 3) == power(MAX2, 2)


def test_rejects_bad_coefficients():
    with pytest.raises(TypeError):
        multiplier_ideal(X2Y3, 0.5)
    with pytest.raises(ValueError):
        multiplier_ideal(X2Y3, 0)


def test_example_family():
    for m in range(1, 7):
        for p in (1, 2, 3):
            a = MonomialIdeal.pure_powers([m * p, m * p])
            assert multiplier_ideal(a, Fraction(1, p)) == power(MAX2, m - 1)


def test_jumping_scan_examples():
    jumps = jumping_scan(X2Y3, 1)
    assert jumps[0] == (Fraction(5, 6), MAX2)
    assert jumping_scan(MAX2, 2) == [(Fraction(2), MAX2)]
    assert jumping_scan(X2Y3, Fraction(1, 2)) == []


def test_asymptotic_multiplier_of_powers_is_constant_along_chain():
    seq = GradedSequence.powers(X2Y3)
    res = asymptotic_multiplier(seq, 3, 8)
    assert res.stabilized and res.witness_p == 1 and res.is_chain
    assert [p for p, _ in res.chain] == doubling_chain(8) == [1, 2, 4, 8]
    assert all(ideal == res.ideal for _, ideal in res.chain)


def test_asymptotic_multiplier_five_sevenths():
    seq = GradedSequence.weighted((5, 7), 5)
    res = asymptotic_multiplier(seq, 1, 16)
    assert res.stabilized and res.is_chain
    assert res.ideal.is_unit


def test_example_family_asymptotic():
    seq = GradedSequence(2, lambda m: MonomialIdeal.pure_powers([m, m]), "example")
    for m in range(1, 6):
        assert asymptotic_multiplier(seq, m, 8).ideal == power(MAX2, m - 1)


def test_single_entry_chain_is_not_stabilized():
    res = asymptotic_multiplier(GradedSequence.powers(X2Y3), 2, 1)
    assert not res.stabilized
    with pytest.raises(ValueError):
        asymptotic_multiplier(GradedSequence.powers(X2Y3), 0)
    with pytest.raises(ValueError):
        doubling_chain(0)


@settings(max_examples=40, deadline=None)
@given(zero_dim(), lambdas)
def test_matches_exact_segment_oracle(a, lam):
    J = multiplier_ideal(a, lam)
    side = 2 * max(max(g) for g in a.gens) * 3 + 2
    for u in [(i, j) for i in range(side) for j in range(side)]:
        assert contains_monomial(J, u) == interior_member_2d(list(a.gens), u, lam), u


@settings(max_examples=60, deadline=None)
@given(zero_dim(), lambdas, lambdas)
def test_monotone_in_lambda(a, s, t):
    lo, hi = sorted((s, t))
    assert is_subideal(multiplier_ideal(a, hi), multiplier_ideal(a, lo))


@settings(max_examples=60, deadline=None)
@given(st.one_of(zero_dim(), zero_dim(3, 3)))
def test_contains_ideal_and_unit_below_lct(a):
    assert is_subideal(a, multiplier_ideal(a, 1))
    c = lct(a)
    assert multiplier_ideal(a, c * Fraction(99, 100)).is_unit
    assert not multiplier_ideal(a, c).is_unit


@settings(max_examples=60, deadline=None)
@given(zero_dim(max_exp=4), zero_dim(max_exp=4), lambdas)
def test_subadditivity(a, b, lam):
    lhs = multiplier_ideal(product(a, b), lam)
    assert is_subideal(lhs, product(multiplier_ideal(a, lam), multiplier_ideal(b, lam)))


@settings(max_examples=40, deadline=None)
@given(st.one_of(zero_dim(), zero_dim(3, 3)))
def test_first_jump_is_lct(a):
    c = lct(a)
    assert jumping_scan(a, c + 1)[0][0] == c


@settings(max_examples=40, deadline=None)
@given(zero_dim(), st.sampled_from([1, Fraction(3, 2), 2, Fraction(5, 2)]))
def test_bound_lc(a, lam):
    J = multiplier_ideal(a, lam)
    if not J.is_unit:
        assert 1 / lct(J) >= lam / lct(a) - 1


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([(5, 7, 5), (2, 3, 4), (1, 4, 3)]), st.integers(1, 6), st.integers(1, 3), st.integers(1, 3))
def test_monotone_along_divisibility(spec, lam, p, q):
    seq = GradedSequence.weighted(spec[:2], spec[2])
    assert is_subideal(multiplier_ideal(seq[p], Fraction(lam, p)), multiplier_ideal(seq[p * q], Fraction(lam, p * q)))
