import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from asymideal import MonomialIdeal, lct, multiplicity, power
from asymideal.groebner import (
    GREVLEX,
    MonomialOrder,
    OrderKind,
    Polynomial,
    PolynomialIdeal,
    WorkLimitExceeded,
    buchberger,
    colength_poly,
    ideal_power,
    initial_ideal,
    lowest_degree_part,
    normal_form,
    samuel_multiplicity,
)
from asymideal.textio import parse_polynomial
from oracles import macaulay_colength, random_zero_dim

LEX_Y = MonomialOrder(OrderKind.LEX, (1, 0))  # lex with y > x


def P(text, dim=2):
    return parse_polynomial(text, dim)


def ideal(*texts, dim=2):
    return PolynomialIdeal(dim, [P(t, dim) for t in texts])


I = ideal("x^2 + y^2", "x*y")


def test_normal_form_examples():
    basis = [P("x^2 + y^2"), P("x*y")]
    assert not normal_form(P("x^2 + y^2"), basis)
    assert normal_form(P("y^3"), [P("y - x^2")], LEX_Y) == P("x^6")
    assert normal_form(Polynomial.constant(2, 1), basis) == Polynomial.constant(2, 1)


def test_buchberger_examples():
    assert set(buchberger(I.generators)) == {P("x^2 + y^2"), P("x*y"), P("y^3")}
    assert buchberger([P("y - x^2")], LEX_Y) == [P("y - x^2")]
    for order in (GREVLEX, MonomialOrder(OrderKind.LEX), MonomialOrder(OrderKind.GRLEX)):
        assert set(buchberger([P("x"), P("y")], order)) == {P("x"), P("y")}


def test_initial_ideal_examples():
    assert initial_ideal(I) == MonomialIdeal.from_exponents(2, [(2, 0), (1, 1), (0, 3)])
    a = MonomialIdeal.from_exponents(2, [(3, 0), (1, 2), (0, 5)])
    assert initial_ideal(PolynomialIdeal.from_monomial_ideal(a)) == a
    assert initial_ideal(ideal("y - x^2"), LEX_Y) == MonomialIdeal.from_exponents(2, [(0, 1)])


def test_ideal_power_examples():
    sq = ideal_power(I, 2)
    assert len(sq.generators) == 3
    assert set(sq.generators) == {P("x^2+y^2") ** 2, P("x^2+y^2") * P("x*y"), P("x*y") ** 2}
    a = MonomialIdeal.from_exponents(2, [(2, 0), (1, 1), (0, 3)])
    assert initial_ideal(ideal_power(PolynomialIdeal.from_monomial_ideal(a), 3)) == power(a, 3)


def test_lowest_degree_part_examples():
    assert lowest_degree_part(P("x^2 + y^3")) == P("x^2")
    assert lowest_degree_part(P("x^2 + 3*x*y")) == P("x^2 + 3*x*y")
    assert lowest_degree_part(P("3*x*y + x^3 + y^3")) == P("3*x*y")


def test_colength_examples():
    assert colength_poly(I) == 4
    assert colength_poly(PolynomialIdeal.from_monomial_ideal(MonomialIdeal.pure_powers([2, 3]))) == 6
    assert colength_poly(ideal("y - x^2", "x^3"), LEX_Y) == 3
    assert macaulay_colength([f.terms for f in I.generators]) == 4


def test_samuel_multiplicity_examples():
    est = samuel_multiplicity(I, indices=[1, 2, 4])
    values = est.values
    assert values[0] == multiplicity(initial_ideal(I)) == 5
    assert values == sorted(values, reverse=True)
    assert all(v >= 4 for v in values)
    assert set(samuel_multiplicity(ideal("x", "y"), M=3).values) == {1}
    mono = PolynomialIdeal.from_monomial_ideal(MonomialIdeal.pure_powers([2, 3]))
    assert set(samuel_multiplicity(mono, M=3).values) == {6}


def test_lct_along_doubling_chain():
    est = samuel_multiplicity(I, indices=[1, 2, 4])
    ini = est.meta["initial_ideals"]
    scaled = [m * lct(ini[m]) for m in (1, 2, 4)]
    assert scaled == sorted(scaled)


def test_work_limit(monkeypatch):
    with pytest.raises(WorkLimitExceeded):
        buchberger(I.generators, work_limit=0)
    monkeypatch.setenv("AI_WORK_LIMIT", "0")
    with pytest.raises(WorkLimitExceeded):
        buchberger(ideal("x^3 + y^2", "x*y^2 + x").generators)


def test_deterministic():
    gens = [P("x^3 - 2*x*y + 1/3"), P("x^2*y - y^2 + x")]
    first = buchberger(gens)
    for _ in range(3):
        again = buchberger(list(reversed(gens)))
        assert [f.terms for f in again] == [f.terms for f in first]


def _sympy_basis(polys, order):
    x, y = sympy.symbols("x y")
    exprs = [sum(sympy.Rational(c.numerator, c.denominator) * x**u[0] * y**u[1] for u, c in f.terms.items()) for f in polys]
    G = sympy.groebner(exprs, x, y, order=order, domain=sympy.QQ)
    out = set()
    for g in G.exprs:
        poly = sympy.Poly(g, x, y)
        out.add(frozenset((m, Fraction(int(c.p), int(c.q))) for m, c in zip(poly.monoms(), poly.coeffs())))
    return out


@pytest.mark.parametrize("seed", range(15))
@pytest.mark.parametrize("order,name", [(GREVLEX, "grevlex"), (MonomialOrder(OrderKind.LEX), "lex"), (MonomialOrder(OrderKind.GRLEX), "grlex")])
def test_matches_sympy(seed, order, name):
    rng = random.Random(seed)
    polys = [Polynomial(2, f) for f in random_zero_dim(rng, max_deg=3)]
    ours = {frozenset(f.terms.items()) for f in buchberger(polys, order)}
    assert ours == _sympy_basis(polys, name)


coeffs = st.integers(-3, 3)
small_poly = st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)), coeffs, max_size=3).map(lambda d: Polynomial(2, d))


@settings(max_examples=40, deadline=None)
@given(small_poly, small_poly, small_poly)
def test_normal_form_detects_constructed_members(h1, h2, extra):
    J = I
    member = h1 * J.generators[0] + h2 * J.generators[1]
    assert J.contains(member)
    # adding a polynomial changes membership exactly when that polynomial is outside J
    assert J.contains(member + extra) == J.contains(extra)
    assert not J.contains(Polynomial.constant(2, 1))
