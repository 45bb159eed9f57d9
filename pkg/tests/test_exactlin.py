from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from hopfbrace.errors import DimensionMismatch, FieldMismatch
from hopfbrace.exactlin import (GF, QQ, EchelonBuilder, Mat, Subspace, charpoly, field_from_json, rref,
                                roots_in_field, solve, tensor)

small = st.integers(-4, 4)


def mats(rows=st.integers(1, 5), cols=st.integers(1, 5)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(small, min_size=rc[1], max_size=rc[1]), min_size=rc[0], max_size=rc[0]))


# ---- scalars

def test_rationals_lowest_terms_and_format():
    assert QQ("-6/4") == Fraction(-3, 2)
    assert QQ.fmt(QQ("-6/4")) == "-3/2"
    assert QQ.fmt(QQ(-2)) == "-2"


def test_prime_field_residues():
    F = GF(7)
    assert F(-2).v == 5
    assert F.fmt(F(12)) == "5 mod 7"
    assert F.parse("5 mod 7") == F(5)
    assert F("1/3") * F(3) == F.one
    with pytest.raises(FieldMismatch):
        F.parse("1 mod 5")
    with pytest.raises(ValueError):
        GF(8)


def test_fields_do_not_mix():
    with pytest.raises(FieldMismatch):
        QQ(GF(5)(1))
    with pytest.raises(FieldMismatch):
        GF(5)(1) + GF(7)(1)


def test_field_json_round_trip():
    for F in (QQ, GF(3), GF(101)):
        assert field_from_json(F.to_json()) == F


# ---- solve

def test_solve_identity():
    sol = solve(Mat.identity(QQ, 2), [1, 0])
    assert sol.particular == (1, 0) and sol.kernel == []


def test_solve_zero_matrix():
    sol = solve(Mat.zeros(QQ, 2, 2), [0, 0])
    assert sol.particular == (0, 0)
    assert Subspace.span(QQ, 2, sol.kernel) == Subspace.full(QQ, 2)


def test_solve_rank_one():
    A = Mat.from_rows(QQ, [[2, 4], [1, 2]])
    sol = solve(A, [6, 3])
    assert sol.particular == (3, 0)
    assert Subspace.span(QQ, 2, sol.kernel) == Subspace.span(QQ, 2, [[-2, 1]])


def test_solve_inconsistent_and_mismatch():
    A = Mat.from_rows(QQ, [[1, 1], [1, 1]])
    assert solve(A, [1, 2]) is None
    with pytest.raises(DimensionMismatch):
        solve(A, [1, 2, 3])


@given(mats(), st.lists(small, min_size=5, max_size=5))
def test_solve_substitution_reproduces_rhs(rows, x):
    A = Mat.from_rows(QQ, rows)
    b = [sum(QQ(a) * QQ(v) for a, v in zip(r, x)) for r in rows]
    sol = solve(A, b)
    assert sol is not None
    assert list(A.apply(dict(enumerate(sol.particular))).get(i, 0) for i in range(len(rows))) == b
    for k in sol.kernel:
        assert not A.apply({i: c for i, c in enumerate(k) if c})
    assert len(sol.kernel) == A.ncols - A.rank()


@given(mats())
def test_rank_matches_sympy(rows):
    assert Mat.from_rows(QQ, rows).rank() == sympy.Matrix(rows).rank()


@given(mats(), st.sampled_from([2, 3, 5, 7]))
def test_rank_gfp_matches_plain_elimination(rows, p):
    assert Mat.from_rows(GF(p), rows).rank() == _rank_mod_p(rows, p)


def _rank_mod_p(rows, p):
    # plain Gaussian elimination with Python ints, independent of the library
    m = [[x % p for x in r] for r in rows]
    rank, col = 0, 0
    ncols = len(m[0])
    while rank < len(m) and col < ncols:
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[rank])]
        rank += 1
        col += 1
    return rank


# ---- subspaces

def test_subspace_examples():
    e1, e2 = Subspace.span(QQ, 2, [[1, 0]]), Subspace.span(QQ, 2, [[0, 1]])
    assert e1 + e2 == Subspace.full(QQ, 2)
    assert (e1 & e2).dim == 0
    assert e1 + e1 == e1 and e1 & e1 == e1
    U, V = Subspace.span(QQ, 3, [[1, 1, 0]]), Subspace.span(QQ, 3, [[0, 1, 1]])
    assert (U + V).dim == 2 and (U & V).dim == 0


def test_subspace_ambient_mismatch():
    with pytest.raises(DimensionMismatch):
        Subspace.zero(QQ, 2) + Subspace.zero(QQ, 3)


@given(mats(cols=st.just(4)), mats(cols=st.just(4)))
def test_dimension_formula(a, b):
    U, V = Subspace.span(QQ, 4, a), Subspace.span(QQ, 4, b)
    assert (U + V).dim + (U & V).dim == U.dim + V.dim
    assert U <= U + V and (U & V) <= U
    for v in (U & V).basis:
        assert v in U and v in V


@given(mats(cols=st.just(4)), st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=3))
def test_echelon_form_is_canonical(rows, mix):
    U = Subspace.span(QQ, 4, rows)
    # another spanning set: combinations of the first, plus the originals in reverse
    combos = [[sum(c * r[j] for c, r in zip(m, rows)) for j in range(4)] for m in mix]
    W = Subspace.span(QQ, 4, combos + rows[::-1])
    assert W.rows == U.rows and W.pivots == U.pivots
    for r, p in zip(U.rows, U.pivots):
        assert r[p] == 1
    assert list(U.pivots) == sorted(U.pivots)


def test_echelon_builder_agrees_with_span():
    rows = [{0: QQ(1), 2: QQ(1)}, {1: QQ(2)}, {0: QQ(2), 1: QQ(2), 2: QQ(2)}]
    b = EchelonBuilder(QQ, 3)
    added = [b.add(r) is not None for r in rows]
    assert added == [True, True, False]
    assert b.subspace() == Subspace.span(QQ, 3, rows)


@given(mats(st.integers(1, 6), st.integers(1, 6)), st.sampled_from([2, 3, 7]))
def test_rref_gfp_is_reduced_and_spans(rows, p):
    F = GF(p)
    sparse_rows = [{j: F(x) for j, x in enumerate(r) if x % p} for r in rows]
    out, piv = rref(sparse_rows, len(rows[0]), F)
    assert len(piv) == _rank_mod_p(rows, p)
    for r, c in zip(out, piv):
        assert r[c] == F.one
        assert all(o.get(c, F.zero) == F.zero for o in out if o is not r)
    assert Subspace.span(F, len(rows[0]), out) == Subspace.span(F, len(rows[0]), sparse_rows)


# ---- tensor

def test_tensor_identities_and_scalars():
    assert tensor(Mat.identity(QQ, 2), Mat.identity(QQ, 3)) == Mat.identity(QQ, 6)
    assert tensor(Mat.from_rows(QQ, [[3]]), Mat.from_rows(QQ, [[5]])) == Mat.from_rows(QQ, [[15]])


def test_tensor_swap_on_three_factors():
    swap = Mat.permutation(QQ, [0, 2, 1, 3])  # e_i (x) e_j -> e_j (x) e_i on k^2 (x) k^2
    f = tensor(swap, Mat.identity(QQ, 2))
    for a in range(2):
        for b in range(2):
            for c in range(2):
                assert f.col(a * 4 + b * 2 + c) == {b * 4 + a * 2 + c: 1}


@given(mats(st.integers(1, 3), st.integers(1, 3)), mats(st.integers(1, 3), st.integers(1, 3)),
       mats(st.integers(1, 2), st.integers(1, 2)))
def test_tensor_associative(a, b, c):
    f, g, h = (Mat.from_rows(QQ, m) for m in (a, b, c))
    assert tensor(tensor(f, g), h) == tensor(f, tensor(g, h))


@given(mats(st.integers(1, 3), st.integers(1, 3)), mats(st.integers(1, 3), st.integers(1, 3)))
def test_tensor_matches_kronecker(a, b):
    assert Mat.from_rows(QQ, a).tensor(Mat.from_rows(QQ, b)).rows() == \
        [[QQ(x) for x in r] for r in sympy.kronecker_product(sympy.Matrix(a), sympy.Matrix(b)).tolist()]


@given(mats(st.just(3), st.just(3)))
def test_inverse(rows):
    A = Mat.from_rows(QQ, rows)
    if A.rank() < 3:
        with pytest.raises(ZeroDivisionError):
            A.inverse()
    else:
        assert (A @ A.inverse()).is_identity()


# ---- characteristic polynomials and roots

@given(mats(st.just(3), st.just(3)))
def test_charpoly_matches_sympy(rows):
    ours = charpoly(rows, QQ)
    t = sympy.Symbol("t")
    theirs = sympy.Poly(sympy.Matrix(rows).charpoly(t).as_expr(), t).all_coeffs()
    assert [QQ(str(c)) for c in reversed(theirs)] == list(ours)


def test_roots_in_field():
    # (t - 1)(t - 2)(t^2 + 1), constant term first
    coeffs = [QQ(c) for c in (2, -3, 3, -3, 1)]
    assert roots_in_field(coeffs, QQ) == [1, 2]
    F = GF(5)  # t^2 + 1 splits mod 5 with roots 2 and 3
    assert roots_in_field([F(c) for c in (2, -3, 3, -3, 1)], F) == [F(1), F(2), F(3)]
