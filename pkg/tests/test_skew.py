import itertools

import pytest
from hypothesis import given, strategies as st

from hopfbrace.corpus import groups, skew_braces
from hopfbrace.errors import MalformedInput, Unsupported
from hopfbrace.skew import (SkewBrace, canonical_form, check_skew_brace, direct_product, enumerate_skew_braces,
                            from_canonical, is_skew_morphism, isomorphic, opposite_skew_brace, parse_cayley_text,
                            set_ybe_map, trivial_skew_brace)

from oracles import is_skew, labelled_groups, relabel

# ---- an independent enumeration: all labelled digroups with unit 0, orbits under relabelling


def oracle_count(n):
    tables = labelled_groups(n)
    valid = {(d, e) for d in tables for e in tables if is_skew(d, e)}
    seen, orbits = set(), 0
    perms = [(0,) + r for r in itertools.permutations(range(1, n))]
    for pair in sorted(valid):
        if pair in seen:
            continue
        orbits += 1
        for p in perms:
            seen.add((relabel(pair[0], p), relabel(pair[1], p)))
    return orbits


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_enumeration_count_matches_oracle(n):
    assert len(enumerate_skew_braces(n)) == oracle_count(n)


def test_enumeration_counts_frozen():
    assert [len(enumerate_skew_braces(n)) for n in range(1, 7)] == [1, 1, 1, 4, 1, 6]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_enumerated_braces_are_valid_and_distinct(n):
    found = enumerate_skew_braces(n)
    assert all(check_skew_brace(B) for B in found)
    for A, B in itertools.combinations(found, 2):
        assert not isomorphic(A, B)


def test_enumeration_envelope():
    with pytest.raises(Unsupported):
        enumerate_skew_braces(7)
    with pytest.raises(Unsupported):
        enumerate_skew_braces(0)


@pytest.mark.parametrize("name", ["Z2", "Z3", "Z4", "Z2xZ2", "S3"])
def test_trivial_and_opposite_braces(name):
    labels, table = groups()[name]
    assert check_skew_brace(trivial_skew_brace(labels, table))
    assert check_skew_brace(opposite_skew_brace(labels, table))


def test_incompatible_law_on_z4():
    labels, z4 = groups()["Z4"]
    bad = [(d, e) for d in [z4] for e in labelled_groups(4) if not is_skew(d, e)]
    assert bad
    cert = check_skew_brace(SkewBrace(tuple(labels), bad[0][0], bad[0][1]))
    assert not cert
    a, b, c = cert.violation.where
    d, e = bad[0]
    inv = [next(x for x in range(4) if d[y][x] == 0) for y in range(4)]
    assert e[a][d[b][c]] != d[d[e[a][b]][inv[a]]][e[a][c]]


def test_not_a_group_is_reported():
    t = ((0, 1), (1, 1))
    cert = check_skew_brace(SkewBrace(("e", "x"), t, t))
    assert not cert


def test_malformed_tables():
    with pytest.raises(MalformedInput):
        SkewBrace(("e", "x"), ((0, 1),), ((0, 1), (1, 0)))
    with pytest.raises(MalformedInput):
        SkewBrace(("e", "e"), ((0, 1), (1, 0)), ((0, 1), (1, 0)))


@given(st.sampled_from(skew_braces(6)), st.data())
def test_canonical_form_isrelabelling_invariant(B, data):
    n = B.size
    p = data.draw(st.permutations(range(n)))
    C = SkewBrace(tuple(B.labels[p.index(i)] for i in range(n)), relabel(B.dot, p), relabel(B.dia, p))
    assert check_skew_brace(C)
    assert canonical_form(C) == canonical_form(B)
    assert isomorphic(B, C)
    assert is_skew_morphism(list(p), B, C)


@given(st.sampled_from(skew_braces(6)))
def test_from_canonical_round_trip(B):
    C = from_canonical(canonical_form(B), B.size)
    assert isomorphic(B, C)


def test_text_format_round_trip():
    for B in skew_braces(6):
        C = parse_cayley_text(B.to_text())
        assert canonical_form(C) == canonical_form(B)


def test_text_format_errors():
    with pytest.raises(MalformedInput):
        parse_cayley_text("dot:\ne x\nx e\n")
    with pytest.raises(MalformedInput):
        parse_cayley_text("e x\nx e\n")


def test_direct_products_are_braces():
    for A, B in itertools.product(skew_braces(4), repeat=2):
        P = direct_product(A, B)
        assert P.size == A.size * B.size and check_skew_brace(P)


# ---- set-theoretic solutions

def test_trivial_brace_gives_conjugation_solution():
    labels, table = groups()["S3"]
    B = trivial_skew_brace(labels, table)
    r = set_ybe_map(B)
    inv = B.dot_inv
    for a in range(6):
        for b in range(6):
            assert r(a, b) == (b, table[table[inv[b]][a]][b])


def test_singleton_solution_is_identity():
    B = enumerate_skew_braces(1)[0]
    assert set_ybe_map(B)(0, 0) == (0, 0)


def test_op_brace_on_z3_solution():
    labels, table = groups()["Z3"]
    assert set_ybe_map(opposite_skew_brace(labels, table)).verify()


@pytest.mark.parametrize("B", skew_braces(6), ids=lambda B: f"order{B.size}")
def test_every_enumerated_brace_gives_a_solution(B):
    r = set_ybe_map(B)
    assert r.verify()
    n = B.size
    # braid relation by brute force, independent of the kernel
    for a, b, c in itertools.product(range(n), repeat=3):
        x1, y1 = r(a, b)
        y2, z2 = r(y1, c)
        x3, y3 = r(x1, y2)
        u1, v1 = r(b, c)
        w2, u2 = r(a, u1)
        w3, v3 = r(u2, v1)
        assert (x3, y3, z2) == (w2, w3, v3)
