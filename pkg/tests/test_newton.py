import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog
from scipy.spatial import ConvexHull

from asymideal import (
    Location,
    MonomialIdeal,
    UnitIdealError,
    WeightVector,
    build_polyhedron,
    complement_volume,
    lct,
    locate,
    minimalize,
    multiplicity,
    ord_weight,
    power,
    product,
)
from asymideal.monomial import NotZeroDimensionalError, order_at_max_ideal
from asymideal.newton import det, enumerate_facets, rank, solve
from oracles import hilbert_samuel_multiplicity, shoelace_area, staircase_polygon_2d


def zero_dim(dim, max_exp=6):
    powers = st.tuples(*[st.integers(1, max_exp)] * dim)
    extra = st.lists(st.tuples(*[st.integers(0, max_exp - 1)] * dim).filter(any), max_size=3)
    return st.builds(
        lambda p, e: minimalize(dim, [tuple(k if j == i else 0 for j in range(dim)) for i, k in enumerate(p)] + e),
        powers,
        extra,
    )


def lp_diagonal_exit(gens):
    """min mu with mu*(1..1) >= a convex combination of generators (float LP)."""
    g = np.array(gens, dtype=float)
    k, n = g.shape
    c = np.zeros(k + 1)
    c[0] = 1.0
    # g^T lam - mu * 1 <= 0
    a_ub = np.hstack([-np.ones((n, 1)), g.T])
    a_eq = np.hstack([[0.0], np.ones(k)])[None, :]
    res = linprog(c, A_ub=a_ub, b_ub=np.zeros(n), A_eq=a_eq, b_eq=[1.0], bounds=[(0, None)] * (k + 1))
    assert res.success
    return res.fun


STAIRCASE = minimalize(2, [(4, 0), (2, 1), (0, 3)])
K3 = minimalize(3, [(3, 0, 0), (0, 4, 0), (0, 0, 5), (1, 1, 1)])


def test_exact_linear_algebra():
    assert det([[2, 1], [1, 3]]) == 5
    assert rank([[1, 2, 3], [2, 4, 6], [0, 1, 1]]) == 2
    assert solve([[2, 1], [1, 3]], [3, 4]) == [1, 1]
    assert solve([[1, 1], [2, 2]], [1, 3]) is None


def test_staircase_facets():
    assert sorted(enumerate_facets(2, STAIRCASE.gens)) == [((1, 1), 3), ((1, 2), 4)]


def test_staircase_invariants():
    P = build_polyhedron(STAIRCASE)
    assert complement_volume(P) == 5
    assert multiplicity(STAIRCASE) == 10
    assert lct(STAIRCASE) == Fraction(2, 3)


def test_small_examples():
    assert multiplicity(MonomialIdeal.pure_powers([2, 3])) == 6
    assert lct(MonomialIdeal.pure_powers([2, 3])) == Fraction(5, 6)
    assert multiplicity(MonomialIdeal.maximal(3)) == 1
    assert lct(MonomialIdeal.maximal(3)) == 3
    assert multiplicity(MonomialIdeal.unit(2)) == 0


def test_three_dimensional_example_against_hilbert_samuel():
    assert multiplicity(K3) == 47 == hilbert_samuel_multiplicity(list(K3.gens), k_max=6)
    assert multiplicity(power(K3, 2)) == 8 * 47


def test_lct_unit_and_zero():
    with pytest.raises(UnitIdealError):
        lct(MonomialIdeal.unit(2))
    with pytest.raises(ValueError):
        lct(MonomialIdeal.zero(2))


def test_lct_of_non_zero_dimensional_ideal():
    # P_(xy) = (1,1) + orthant, which the diagonal enters at (1,1)
    assert lct(minimalize(2, [(1, 1)])) == 1
    with pytest.raises(NotZeroDimensionalError):
        multiplicity(minimalize(2, [(1, 1)]))


def test_locate():
    P = build_polyhedron(MonomialIdeal.pure_powers([2, 3]))
    assert locate(P, (1, 1)) is Location.OUTSIDE
    assert locate(P, (2, 0)) is Location.BOUNDARY
    assert locate(P, (1, Fraction(3, 2))) is Location.BOUNDARY
    assert locate(P, (2, 2)) is Location.INTERIOR
    assert locate(P, (1, 0), scale=Fraction(1, 2)) is Location.BOUNDARY
    assert locate(P, (1, 1), scale=Fraction(1, 2)) is Location.INTERIOR
    with pytest.raises(ValueError):
        locate(P, (1, 1), scale=0)


def test_ord_weight():
    assert ord_weight(STAIRCASE, WeightVector.ones(2)) == 3
    assert ord_weight(STAIRCASE, (5, 7)) == 17
    with pytest.raises(ValueError):
        WeightVector((0, 0))


@settings(max_examples=80, deadline=None)
@given(zero_dim(2))
def test_multiplicity_is_twice_shoelace_area(a):
    if a.is_unit:
        return
    assert multiplicity(a) == 2 * shoelace_area(staircase_polygon_2d(list(a.gens)))


@settings(max_examples=25, deadline=None)
@given(zero_dim(2, max_exp=4))
def test_multiplicity_matches_hilbert_samuel_2d(a):
    assert multiplicity(a) == hilbert_samuel_multiplicity(list(a.gens))


@settings(max_examples=8, deadline=None)
@given(zero_dim(3, max_exp=3))
def test_multiplicity_matches_hilbert_samuel_3d(a):
    assert multiplicity(a) == hilbert_samuel_multiplicity(list(a.gens), k_max=7)


@settings(max_examples=40, deadline=None)
@given(st.one_of(zero_dim(2), zero_dim(3, max_exp=4)))
def test_truncated_volume_against_float_hull(a):
    P = build_polyhedron(a)
    pts = np.array([[float(x) for x in v] for v in P.truncated_vertices])
    M = P.box
    vol_p = ConvexHull(pts).volume
    assert math.isclose(M**a.dim - vol_p, float(complement_volume(P)), rel_tol=1e-9, abs_tol=1e-9)


@settings(max_examples=60, deadline=None)
@given(st.one_of(zero_dim(2), zero_dim(3, max_exp=4)))
def test_lct_against_linear_program(a):
    assert math.isclose(float(1 / lct(a)), lp_diagonal_exit(list(a.gens)), rel_tol=1e-7)


@settings(max_examples=60, deadline=None)
@given(st.one_of(zero_dim(2), zero_dim(3, max_exp=4)), st.integers(1, 3))
def test_power_scaling(a, k):
    n = a.dim
    assert multiplicity(power(a, k)) == k**n * multiplicity(a)
    assert lct(power(a, k)) == lct(a) / k


@settings(max_examples=60, deadline=None)
@given(zero_dim(2), zero_dim(2))
def test_monotone_under_containment(a, b):
    ab = product(a, b)
    assert multiplicity(ab) >= max(multiplicity(a), multiplicity(b))
    assert lct(ab) <= min(lct(a), lct(b))


@settings(max_examples=60, deadline=None)
@given(st.one_of(zero_dim(2), zero_dim(3, max_exp=4)))
def test_classical_lower_bounds(a):
    n = a.dim
    e = multiplicity(a)
    assert e * lct(a) ** n >= n**n
    assert e >= order_at_max_ideal(a) ** n
