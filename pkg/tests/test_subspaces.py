"""Gaussian binomials, k-subspace enumeration, projective point index."""

import itertools
import math

import pytest

from grassmd.errors import BudgetExceeded, ContextMismatch, InvalidArgs
from grassmd.gfq import field_new
from grassmd.linalg import mat
from grassmd.subspaces import (
    PointIndex,
    Subspace,
    SubspaceFamily,
    enumerate_k_subspaces,
    enumeration_budget,
    gaussian_binomial,
    gaussian_binomial_pascal,
    incidence_vector,
)


# hand-checked values; 11011 = (3^6-1)(3^6-3)/((3^2-1)(3^2-3)) = 728*726/(8*6)
PINNED_BINOMIALS = [
    (4, 2, 2, 35),
    (5, 2, 2, 155),
    (6, 2, 2, 651),
    (6, 3, 2, 1395),
    (4, 2, 3, 130),
    (6, 2, 3, 11011),
    (6, 3, 3, 33880),
    (4, 2, 4, 357),
    (4, 1, 2, 15),
    (5, 1, 3, 121),
]


@pytest.mark.parametrize("n,k,q,expected", PINNED_BINOMIALS)
def test_gaussian_binomial_pinned(n, k, q, expected):
    assert gaussian_binomial(n, k, q) == expected
    assert gaussian_binomial_pascal(n, k, q) == expected


@pytest.mark.parametrize("q", [2, 3, 4, 5, 16])
def test_product_formula_matches_pascal_recurrence(q):
    for n in range(0, 11):
        for k in range(0, n + 1):
            assert gaussian_binomial(n, k, q) == gaussian_binomial_pascal(n, k, q)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_symmetry_and_column_recurrence(q):
    for n in range(1, 10):
        for k in range(0, n + 1):
            v = gaussian_binomial(n, k, q)
            assert v == gaussian_binomial(n, n - k, q)
        for k in range(1, n):
            # the recurrence on the other index; independent of both
            # implementation paths
            assert gaussian_binomial(n, k, q) == (
                gaussian_binomial(n - 1, k, q)
                + q ** (n - k) * gaussian_binomial(n - 1, k - 1, q)
            )


def test_boundary_values_and_errors():
    assert gaussian_binomial(0, 0, 2) == 1
    assert gaussian_binomial(7, 0, 3) == 1
    assert gaussian_binomial(7, 7, 3) == 1
    for n in range(1, 8):
        assert gaussian_binomial(n, 1, 2) == 2 ** n - 1
    with pytest.raises(InvalidArgs):
        gaussian_binomial(2, 3, 2)
    with pytest.raises(InvalidArgs):
        gaussian_binomial(2, -1, 2)
    with pytest.raises(InvalidArgs):
        gaussian_binomial(4, 2, 1)


def test_binomial_count_limit_is_ordinary_binomial():
    # [n k]_q is a polynomial in q whose value at q=1 is C(n, k); recover the
    # polynomial by Lagrange interpolation at integer points and evaluate at 1
    for n, k in [(4, 2), (5, 2), (6, 3), (7, 3)]:
        deg = k * (n - k)
        xs = list(range(2, deg + 4))
        ys = [gaussian_binomial(n, k, x) for x in xs]
        # value at q=1 via exact Lagrange evaluation with Fraction-free sums
        from fractions import Fraction

        total = Fraction(0)
        for i, (xi, yi) in enumerate(zip(xs, ys)):
            term = Fraction(yi)
            for j, xj in enumerate(xs):
                if i != j:
                    term *= Fraction(1 - xj, xi - xj)
            total += term
        assert total == math.comb(n, k)


@pytest.mark.parametrize("q,n", [(2, 4), (3, 5), (4, 3)])
def test_point_count_polynomial_is_all_ones(q, n):
    # (q^n - 1)/(q - 1) = 1 + q + ... + q^(n-1): divide out exactly and check
    # every coefficient, so the value at q=1 is n
    num = [-1] + [0] * (n - 1) + [1]  # q^n - 1, constant term first
    den = [-1, 1]  # q - 1
    quot = [0] * n
    for i in range(n - 1, -1, -1):
        quot[i] = num[i + 1]
        num[i + 1] -= quot[i]
        num[i] += quot[i]
    assert all(c == 0 for c in num)  # exact division
    assert quot == [1] * n
    assert sum(quot) == n  # evaluation at q = 1
    assert sum(c * q ** i for i, c in enumerate(quot)) == gaussian_binomial(n, 1, q)


def enum_grid():
    grid = []
    for q in (2, 3, 4):
        for n in range(1, 7):
            for k in range(1, min(n, 3) + 1):
                grid.append((q, n, k))
    return grid


def test_enumeration_counts_match_binomial():
    budget = enumeration_budget()
    for q, n, k in enum_grid():
        expected = gaussian_binomial(n, k, q)
        if expected > budget:
            continue
        subs = enumerate_k_subspaces(field_new(q), n, k)
        assert len(subs) == expected, (q, n, k)


def test_enumeration_pinned_small_cases():
    ctx = field_new(2)
    lines = enumerate_k_subspaces(ctx, 2, 1)
    assert [s.basis.data for s in lines] == [((0, 1),), ((1, 0),), ((1, 1),)]
    whole = enumerate_k_subspaces(field_new(3), 2, 2)
    assert len(whole) == 1 and whole[0].dim == 2


def test_enumeration_is_sorted_and_duplicate_free():
    for q, n, k in [(2, 4, 2), (3, 4, 2), (2, 5, 3), (4, 4, 2)]:
        subs = enumerate_k_subspaces(field_new(q), n, k)
        keys = [s.key for s in subs]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys)
        for s in subs:
            assert s.dim == k and s.n == n


def test_enumeration_budget_env(monkeypatch):
    monkeypatch.setenv("GRASSMANN_BUDGET", "100")
    assert enumeration_budget() == 100
    with pytest.raises(BudgetExceeded):
        enumerate_k_subspaces(field_new(2), 6, 3)
    monkeypatch.delenv("GRASSMANN_BUDGET")
    assert enumeration_budget() == 1000000


def test_subspace_requires_rref_basis():
    ctx = field_new(2)
    with pytest.raises(InvalidArgs):
        Subspace(ctx, 3, mat(ctx, [[0, 1, 0], [1, 0, 0]]))  # pivots out of order
    with pytest.raises(InvalidArgs):
        Subspace(ctx, 3, mat(ctx, [[1, 1, 0], [0, 1, 0]]))  # unreduced pivot col


def test_from_rows_canonicalizes():
    ctx = field_new(3)
    a = Subspace.from_rows(ctx, 3, [[1, 2, 0], [0, 1, 1]])
    # rows are combinations of a's basis, so the row space is identical
    b = Subspace.from_rows(ctx, 3, [[1, 1, 2], [0, 2, 2]])
    assert a.key == b.key
    assert a.dim == 2
    # dependent rows collapse to the actual dimension
    assert Subspace.from_rows(ctx, 3, [[1, 0, 0], [2, 0, 0]]).dim == 1
    assert Subspace.from_rows(ctx, 3, [[0, 0, 0]]).dim == 0


def test_subspace_contains():
    ctx = field_new(2)
    s = Subspace.from_rows(ctx, 4, [[1, 0, 0, 0], [0, 1, 0, 0]])
    assert s.contains((1, 1, 0, 0))
    assert s.contains((0, 0, 0, 0))
    assert not s.contains((0, 0, 1, 0))


def test_family_rejects_duplicates():
    ctx = field_new(2)
    s = Subspace.from_rows(ctx, 4, [[1, 0, 0, 0], [0, 1, 0, 0]])
    t = Subspace.from_rows(ctx, 4, [[0, 1, 0, 0], [1, 1, 0, 0]])  # same space
    with pytest.raises(InvalidArgs):
        SubspaceFamily([s, t])


@pytest.mark.parametrize("q,n", [(2, 3), (2, 4), (3, 3), (4, 3)])
def test_point_index_basic(q, n):
    idx = PointIndex(field_new(q), n)
    pts = idx.points
    assert len(pts) == gaussian_binomial(n, 1, q)
    # representatives sorted by big-endian base-q encoding, first entry 1
    encs = [sum(c * q ** (n - 1 - i) for i, c in enumerate(p)) for p in pts]
    assert encs == sorted(encs)
    for p in pts:
        nz = [c for c in p if c]
        assert nz[0] == 1
    assert pts[0] == (0,) * (n - 1) + (1,)


def test_point_index_normalize_and_lookup():
    ctx = field_new(3)
    idx = PointIndex(ctx, 3)
    for p in idx.points:
        doubled = tuple(ctx.mul(2, c) for c in p)
        assert idx.normalize(doubled) == p
        assert idx.points[idx.index_of(doubled)] == p
    with pytest.raises(InvalidArgs):
        idx.normalize((0, 0, 0))


@pytest.mark.parametrize("q,n,k", [(2, 4, 2), (3, 4, 2)])
def test_incidence_vector_popcount_and_injectivity(q, n, k):
    ctx = field_new(q)
    idx = PointIndex(ctx, n)
    subs = enumerate_k_subspaces(ctx, n, k)
    points_total = gaussian_binomial(n, 1, q)
    points_per_sub = gaussian_binomial(k, 1, q)
    seen = set()
    for s in subs:
        v = incidence_vector(s, idx)
        assert len(v.bits) == points_total
        assert v.popcount == points_per_sub
        seen.add(v.bits)
    assert len(seen) == len(subs)  # distinct subspaces, distinct supports


def test_incidence_vector_context_mismatch():
    s = Subspace.from_rows(field_new(2), 4, [[1, 0, 0, 0], [0, 1, 0, 0]])
    with pytest.raises(ContextMismatch):
        incidence_vector(s, PointIndex(field_new(3), 4))
    with pytest.raises(ContextMismatch):
        incidence_vector(s, PointIndex(field_new(2), 5))
