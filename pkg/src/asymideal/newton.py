"""Newton polyhedra of monomial ideals, computed exactly.

Everything here works over ``fractions.Fraction`` / ``int``; no floating point
enters any of the geometry. The polyhedron ``P = conv(gens) + R_+^n`` is held
as a list of facet inequalities ``<w, u> >= c`` with primitive integer normals.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .monomial import (
    Exponent,
    MonomialIdeal,
    NotZeroDimensionalError,
    box_bound,
    is_zero_dimensional,
)


class Location(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


class UnitIdealError(ValueError):
    """The log canonical threshold of the unit ideal is infinite."""


# exact linear algebra -------------------------------------------------------


def det(rows: Sequence[Sequence]) -> Fraction | int:
    """Determinant by fraction-exact Gaussian elimination."""
    m = [list(map(Fraction, r)) for r in rows]
    n = len(m)
    sign = 1
    result = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        p = m[col][col]
        result *= p
        for r in range(col + 1, n):
            f = m[r][col] / p
            if f:
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return sign * result


def rank(rows: Sequence[Sequence]) -> int:
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col] / m[r][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def solve(a: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """Solve the square system ``a x = b``; None if singular."""
    n = len(a)
    m = [list(map(Fraction, row)) + [Fraction(v)] for row, v in zip(a, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col] / m[col][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[i][n] / m[i][i] for i in range(n)]


def _normal_through(points: Sequence[Exponent]) -> list[int]:
    """Integer normal of the affine hyperplane through ``k`` points in ``R^k``.

    Cofactor expansion of the difference matrix; returns the zero vector when
    the points are affinely dependent.
    """
    k = len(points)
    if k == 1:
        return [1]
    base = points[0]
    diffs = [[p[i] - base[i] for i in range(k)] for p in points[1:]]
    normal = []
    for i in range(k):
        minor = [row[:i] + row[i + 1 :] for row in diffs]
        d = det(minor)
        normal.append(int(d) * (-1) ** i)
    return normal


def _primitive(w: Sequence[int], c: int) -> tuple[tuple[int, ...], int]:
    g = 0
    for x in (*w, c):
        g = math.gcd(g, x)
    return tuple(x // g for x in w), c // g


def affine_dimension(points: Sequence[Sequence]) -> int:
    if not points:
        return -1
    base = points[0]
    return rank([[a - b for a, b in zip(p, base)] for p in points[1:]])


# facets ---------------------------------------------------------------------


def _lower_hull_2d(points: list[Exponent]) -> list[tuple[tuple[int, int], int]]:
    """Non-coordinate facets of conv(points) + R_+^2 via a monotone chain."""
    pts = sorted(set(points))
    # the staircase of minimal points runs from top-left to bottom-right
    chain: list[Exponent] = []
    for p in pts:
        while len(chain) >= 2:
            (x1, y1), (x2, y2) = chain[-2], chain[-1]
            cross = (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1)
            if cross <= 0:
                chain.pop()
            else:
                break
        chain.append(p)
    # keep only the part of the chain that is strictly decreasing in y
    lower = [chain[0]]
    for p in chain[1:]:
        if p[1] < lower[-1][1]:
            lower.append(p)
    facets = []
    for (x1, y1), (x2, y2) in zip(lower, lower[1:]):
        w = (y1 - y2, x2 - x1)
        c = w[0] * x1 + w[1] * y1
        facets.append(_primitive(w, c))
    # unbounded facets parallel to the axes
    leftmost = min(pts, key=lambda p: (p[0], p[1]))
    bottom = min(pts, key=lambda p: (p[1], p[0]))
    if leftmost[0] > 0:
        facets.append(((1, 0), leftmost[0]))
    if bottom[1] > 0:
        facets.append(((0, 1), bottom[1]))
    return facets


def _facets_general(dim: int, points: list[Exponent]) -> list[tuple[tuple[int, ...], int]]:
    found: dict[tuple[tuple[int, ...], int], None] = {}
    for k in range(1, dim + 1):
        for support in itertools.combinations(range(dim), k):
            proj = sorted({tuple(p[i] for i in support) for p in points})
            if len(proj) < k:
                continue
            for subset in itertools.combinations(proj, k):
                w = _normal_through(subset)
                if all(x <= 0 for x in w):
                    w = [-x for x in w]
                if not all(x > 0 for x in w):
                    continue
                c = sum(a * b for a, b in zip(w, subset[0]))
                if c <= 0:
                    continue
                if any(sum(a * b for a, b in zip(w, q)) < c for q in proj):
                    continue
                full = [0] * dim
                for i, x in zip(support, w):
                    full[i] = x
                found[_primitive(full, c)] = None
    return list(found)


def enumerate_facets(dim: int, points: Sequence[Exponent]) -> list[tuple[tuple[int, ...], int]]:
    """Facets ``<w,u> >= c`` (``c > 0``) of ``conv(points) + R_+^n``.

    Coordinate facets ``u_i >= 0`` are not included.
    """
    pts = list(points)
    if dim == 1:
        return [((1,), min(p[0] for p in pts))] if min(p[0] for p in pts) > 0 else []
    if dim == 2:
        return sorted(_lower_hull_2d(pts))
    return sorted(_facets_general(dim, pts))


# polyhedron -----------------------------------------------------------------


@dataclass(frozen=True)
class NewtonPolyhedron:
    """``P_a`` in H-representation.

    ``facets`` holds the non-coordinate inequalities; coordinate facets
    ``u_i >= 0`` are implicit and always enforced.
    """

    dim: int
    generators: tuple[Exponent, ...]
    facets: tuple[tuple[tuple[int, ...], int], ...]
    box: int | None = None
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def coordinate_facets(self) -> list[tuple[tuple[int, ...], int]]:
        return [(tuple(int(i == j) for j in range(self.dim)), 0) for i in range(self.dim)]

    @property
    def all_facets(self) -> list[tuple[tuple[int, ...], int]]:
        return list(self.facets) + self.coordinate_facets

    def contains(self, point: Sequence, scale=1) -> bool:
        """Whether ``point`` lies in ``scale * P`` (closed)."""
        if any(x < 0 for x in point):
            return False
        return all(sum(a * x for a, x in zip(w, point)) >= scale * c for w, c in self.facets)

    def interior_contains(self, point: Sequence, scale=1) -> bool:
        if any(x <= 0 for x in point):
            return False
        return all(sum(a * x for a, x in zip(w, point)) > scale * c for w, c in self.facets)

    @cached_property
    def vertices(self) -> tuple[Exponent, ...]:
        """Vertices of ``P`` itself; they are always among the generators."""
        out = []
        for g in self.generators:
            tight = [w for w, c in self.all_facets if sum(a * x for a, x in zip(w, g)) == c]
            if rank(tight) == self.dim:
                out.append(g)
        return tuple(sorted(out))

    @cached_property
    def truncated_vertices(self) -> tuple[tuple[Fraction, ...], ...]:
        """Vertices of ``P ∩ [0, M]^n`` with ``M`` the box bound."""
        if self.box is None:
            raise NotZeroDimensionalError("truncation needs a zero-dimensional ideal")
        n, M = self.dim, self.box
        cons = [(tuple(w), c) for w, c in self.all_facets]
        cons += [(tuple(-int(i == j) for j in range(n)), -M) for i in range(n)]
        verts = set()
        for sub in itertools.combinations(cons, n):
            x = solve([w for w, _ in sub], [c for _, c in sub])
            if x is None:
                continue
            if all(sum(a * b for a, b in zip(w, x)) >= c for w, c in cons):
                verts.add(tuple(x))
        return tuple(sorted(verts))

    @cached_property
    def compact_facets(self) -> list[tuple[tuple[int, ...], int, tuple[Exponent, ...]]]:
        """Bounded facets with the vertices lying on them."""
        out = []
        for w, c in self.facets:
            if all(x > 0 for x in w):
                on = tuple(v for v in self.vertices if sum(a * b for a, b in zip(w, v)) == c)
                out.append((w, c, on))
        return out


def build_polyhedron(a: MonomialIdeal, require_zero_dimensional: bool = True) -> NewtonPolyhedron:
    if a.is_zero:
        raise ValueError("the zero ideal has no Newton polyhedron")
    zero_dim = is_zero_dimensional(a)
    if require_zero_dimensional and not zero_dim:
        raise NotZeroDimensionalError("Newton polyhedron requested for a non-zero-dimensional ideal")
    facets = () if a.is_unit else tuple(enumerate_facets(a.dim, a.gens))
    return NewtonPolyhedron(a.dim, a.gens, facets, box_bound(a) if zero_dim else None)


def locate(P: NewtonPolyhedron, point: Sequence, scale=1) -> Location:
    scale = Fraction(scale)
    if scale <= 0:
        raise ValueError("scale must be positive")
    point = [Fraction(x) for x in point]
    if len(point) != P.dim:
        raise ValueError("point has the wrong length")
    if P.interior_contains(point, scale):
        return Location.INTERIOR
    if P.contains(point, scale):
        return Location.BOUNDARY
    return Location.OUTSIDE


# volume ---------------------------------------------------------------------


def _triangulate_face(face: frozenset, dim: int, planes: list[frozenset], coords: dict) -> list[tuple]:
    """Pulling triangulation of a face given by its vertex set."""
    if dim == 0:
        return [tuple(face)]
    apex = min(face, key=lambda v: coords[v])
    subfaces = set()
    for plane in planes:
        sub = face & plane
        if sub and sub != face and apex not in sub and len(sub) >= dim:
            if affine_dimension([coords[v] for v in sub]) == dim - 1:
                subfaces.add(frozenset(sub))
    simplices = []
    for sub in subfaces:
        for s in _triangulate_face(sub, dim - 1, planes, coords):
            simplices.append((apex,) + s)
    return simplices


def _cone_determinants(P: NewtonPolyhedron) -> list[int]:
    """``|det|`` of every simplex ``conv(0, F_i)`` in a triangulation of ``Q``.

    ``Q`` is star-shaped about the origin and its non-coordinate boundary is
    the union of the compact facets of ``P``, so coning a triangulation of
    each compact facet from the origin triangulates ``Q``.
    """
    if "dets" in P._cache:
        return P._cache["dets"]
    coords = {i: v for i, v in enumerate(P.vertices)}
    planes = []
    for w, c in P.all_facets:
        planes.append(frozenset(i for i, v in coords.items() if sum(a * b for a, b in zip(w, v)) == c))
    dets = []
    for w, c, _ in P.compact_facets:
        face = frozenset(i for i, v in coords.items() if sum(a * b for a, b in zip(w, v)) == c)
        for simplex in _triangulate_face(face, P.dim - 1, planes, coords):
            d = det([coords[i] for i in simplex])
            dets.append(abs(int(d)))
    P._cache["dets"] = dets
    return dets


def complement_volume(P: NewtonPolyhedron) -> Fraction:
    """Exact volume of ``Q``, the closure of ``R_+^n \\ P``."""
    if P.box is None:
        raise NotZeroDimensionalError("Q is unbounded for a non-zero-dimensional ideal")
    return Fraction(sum(_cone_determinants(P)), math.factorial(P.dim))


def multiplicity(a: MonomialIdeal) -> int:
    """Hilbert-Samuel multiplicity ``e(a) = n! vol(Q)``.

    The unit ideal has multiplicity 0 (``Q`` degenerates to the origin).
    """
    if a.is_unit:
        return 0
    vol = complement_volume(build_polyhedron(a))
    e = vol * math.factorial(a.dim)
    if e.denominator != 1 or e <= 0:
        raise ArithmeticError(f"non-integral or non-positive multiplicity {e} for {a}")
    return int(e)


def diagonal_exit(a: MonomialIdeal) -> Fraction:
    """``inf{mu > 0 : mu * (1,...,1) in P_a}``, i.e. ``1/lct(a)``."""
    if a.is_zero:
        raise ValueError("lct of the zero ideal is 0; not representable")
    if a.is_unit:
        raise UnitIdealError("lct of the unit ideal is infinite")
    P = build_polyhedron(a, require_zero_dimensional=False)
    return max(Fraction(c, sum(w)) for w, c in P.facets)


def lct(a: MonomialIdeal) -> Fraction:
    """Log canonical threshold of a proper nonzero monomial ideal."""
    return 1 / diagonal_exit(a)


@dataclass(frozen=True)
class WeightVector:
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        w = tuple(Fraction(x) for x in self.weights)
        object.__setattr__(self, "weights", w)
        if any(x < 0 for x in w) or not any(x > 0 for x in w):
            raise ValueError("weights must be nonnegative and not all zero")

    @classmethod
    def ones(cls, dim: int) -> "WeightVector":
        return cls((1,) * dim)


def ord_weight(a: MonomialIdeal, w: WeightVector | Sequence) -> Fraction:
    """Monomial valuation ``min_g <w, g>`` of ``a``."""
    if not isinstance(w, WeightVector):
        w = WeightVector(tuple(w))
    if len(w.weights) != a.dim:
        raise ValueError("weight vector has the wrong length")
    if a.is_zero:
        raise ValueError("the zero ideal has infinite order")
    return min(sum((x * g for x, g in zip(w.weights, gen)), Fraction(0)) for gen in a.gens)
