from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopfbrace.coalg import (Coalgebra, check_coalgebra, grouplike_coalgebra, grouplikes, is_cocommutative,
                             is_coideal, quotient_coalgebra)
from hopfbrace.corpus import sweedler
from hopfbrace.errors import DimensionMismatch, InvalidStructure, MalformedInput, NotCoideal
from hopfbrace.exactlin import GF, QQ, Mat, Subspace, tensor


def test_single_grouplike_ok():
    assert check_coalgebra(grouplike_coalgebra(["s"]))


def test_counit_violation_witness():
    C = Coalgebra(QQ, ("e1", "e2"), (((0, 1, 1),), ((1, 1, 1),)), (1, 1))
    cert = check_coalgebra(C)
    assert not cert
    assert cert.violation.axiom.startswith("counit") and cert.violation.where == (0,)


@pytest.mark.parametrize("labels", [["e"], ["1", "g"], ["a", "b", "c"]])
def test_grouplike_coalgebra(labels):
    C = grouplike_coalgebra(labels)
    assert C.dim == len(labels)
    assert check_coalgebra(C) and is_cocommutative(C)
    for i in range(C.dim):
        assert C.delta(i) == {i * C.dim + i: 1} and C.counit[i] == 1


def test_grouplike_duplicate_labels():
    with pytest.raises(MalformedInput):
        grouplike_coalgebra(["a", "a"])


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_grouplikes_inverts_construction(n):
    C = grouplike_coalgebra([f"s{i}" for i in range(n)])
    found = grouplikes(C)
    assert sorted(found) == sorted(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))


def test_sweedler_grouplikes():
    C = sweedler().base
    assert sorted(grouplikes(C)) == [(0, 1, 0, 0), (1, 0, 0, 0)]


def test_sweedler_grouplikes_over_gf3_by_exhaustion():
    C = sweedler(GF(3)).base
    assert len(grouplikes(C)) == 2


def test_grouplikes_in_a_twisted_basis():
    # group-like coalgebra on {a, b} written in the basis u = a + b, v = a - b
    C = grouplike_coalgebra(["a", "b"])
    P = Mat.from_rows(QQ, [[1, 1], [1, -1]])  # columns: u, v in the old basis
    Pi = P.inverse()
    D = tensor(Pi, Pi) @ C.comul_matrix() @ P
    deltas = [D.col(j) for j in range(2)]
    counit = [C.eps(P.col(j)) for j in range(2)]
    C2 = Coalgebra.from_deltas(QQ, ["u", "v"], deltas, counit)
    assert check_coalgebra(C2)
    assert sorted(grouplikes(C2)) == sorted([(Fraction(1, 2), Fraction(1, 2)), (Fraction(1, 2), Fraction(-1, 2))])


def test_grouplikes_rejects_invalid():
    C = Coalgebra(QQ, ("x",), (((0, 0, 1),),), (0,))
    with pytest.raises(InvalidStructure):
        grouplikes(C)


def test_coideal_examples():
    C = grouplike_coalgebra(["g", "h", "k"])
    assert is_coideal(C, Subspace.zero(QQ, 3))
    assert is_coideal(C, Subspace.span(QQ, 3, [[1, -1, 0]]))
    cert = is_coideal(C, Subspace.span(QQ, 3, [[1, 0, 0]]))
    assert not cert and "counit" in cert.violation.axiom
    with pytest.raises(DimensionMismatch):
        is_coideal(C, Subspace.zero(QQ, 2))


def test_quotient_examples():
    C = grouplike_coalgebra(["1", "g", "g^2", "g^3"])
    Q, pi = quotient_coalgebra(C, Subspace.zero(QQ, 4))
    assert Q == C and pi.is_identity()
    J = Subspace.span(QQ, 4, [[-1, 0, 1, 0], [0, -1, 0, 1]])
    Q, pi = quotient_coalgebra(C, J)
    assert Q.dim == 2 and check_coalgebra(Q) and len(grouplikes(Q)) == 2
    ker_eps = Subspace.span(QQ, 4, [[1, -1, 0, 0], [1, 0, -1, 0], [1, 0, 0, -1]])
    Q, pi = quotient_coalgebra(C, ker_eps)
    assert Q.dim == 1 and Q.delta(0) == {0: 1}
    with pytest.raises(NotCoideal):
        quotient_coalgebra(C, Subspace.span(QQ, 4, [[1, 0, 0, 0]]))


def test_cocommutativity_examples():
    assert is_cocommutative(grouplike_coalgebra(["a", "b"]))
    assert not is_cocommutative(sweedler().base)
    assert is_cocommutative(grouplike_coalgebra(["k"]))


def test_delta2_is_coassociative_choice():
    C = sweedler().base
    n = C.dim
    for i in range(n):
        right: dict = {}
        for t, c in C.delta(i).items():
            j, k = divmod(t, n)
            for u, d in C.delta(k).items():
                key = j * n * n + u
                right[key] = right.get(key, 0) + c * d
        assert {k: v for k, v in right.items() if v} == C.delta2(i)


# random coideals of group-like coalgebras: spans of differences of group-likes
@st.composite
def grouplike_differences(draw):
    n = draw(st.integers(2, 6))
    pairs = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=4))
    coeffs = draw(st.lists(st.integers(-3, 3), min_size=len(pairs), max_size=len(pairs)))
    vecs = []
    for (a, b), c in zip(pairs, coeffs):
        v = [0] * n
        v[a] += c
        v[b] -= c
        vecs.append(v)
    return n, vecs


@given(grouplike_differences())
def test_quotient_commutes_with_structure(data):
    n, vecs = data
    C = grouplike_coalgebra([f"s{i}" for i in range(n)])
    J = Subspace.span(QQ, n, vecs)
    assert is_coideal(C, J)
    Q, pi = quotient_coalgebra(C, J)
    assert Q.dim == n - J.dim
    assert check_coalgebra(Q) and is_cocommutative(Q)
    assert tensor(pi, pi) @ C.comul_matrix() == Q.comul_matrix() @ pi
    assert Q.counit_matrix() @ pi == C.counit_matrix()
    # classes of identified group-likes become the group-likes of the quotient
    images = {tuple(sorted(pi.col(i).items())) for i in range(n)}
    assert len(grouplikes(Q)) == len(images)
