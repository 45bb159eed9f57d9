import itertools

import pytest
from hypothesis import given, strategies as st

from hopfbrace.brace import brace_from_hopf
from hopfbrace.coalg import grouplike_coalgebra
from hopfbrace.corpus import kG, sweedler, trivial_group_brace, skew_braces
from hopfbrace.brace import group_algebra
from hopfbrace.errors import FieldMismatch, MalformedInput, NotCocommutative
from hopfbrace.exactlin import GF
from hopfbrace.freecolim import (UNIT, Leaf, Node, brace_coproduct_defects, coproduct_2bialg_truncated,
                                 coproduct_2hopf_truncated, coproduct_brace_truncated, free2_truncated, tmul)
from hopfbrace.multihopf import MultiHopfMorphism, check_morphism, check_multibialgebra

from oracles import alternating_tree_count, reduced_trees, reduced_words

KZ2 = brace_from_hopf(kG("Z2"))


# ---- terms

leaves = st.builds(Leaf, st.integers(0, 1), st.integers(0, 2))


@st.composite
def terms(draw, depth=2):
    if depth == 0 or draw(st.booleans()):
        return draw(leaves)
    op = draw(st.integers(0, 1))
    kids = draw(st.lists(terms(depth=depth - 1), min_size=2, max_size=3))
    t = kids[0]
    for k in kids[1:]:
        t = tmul(op, t, k)
    return t


def _assoc(op, items, split):
    if len(items) == 1:
        return items[0]
    k = split % (len(items) - 1) + 1
    return tmul(op, _assoc(op, items[:k], split * 7 + 3), _assoc(op, items[k:], split * 5 + 1))


@given(st.integers(0, 1), st.lists(terms(), min_size=2, max_size=5), st.integers(0, 100), st.integers(0, 100))
def test_grafting_is_confluent(op, items, s1, s2):
    assert _assoc(op, items, s1) == _assoc(op, items, s2)


@given(st.integers(0, 1), terms())
def test_unit_is_neutral(op, t):
    assert tmul(op, UNIT, t) == t == tmul(op, t, UNIT)


@given(st.integers(0, 1), st.lists(terms(), min_size=2, max_size=4))
def test_products_are_alternating(op, items):
    t = _assoc(op, items, 0)

    def ok(x):
        if isinstance(x, Leaf):
            return True
        return len(x.children) >= 2 and all(
            isinstance(c, Leaf) or (c.op != x.op and ok(c)) for c in x.children) and x.degree == sum(
            c.degree for c in x.children)

    assert ok(t)


# ---- the free object

@pytest.mark.parametrize("ngens,d", [(1, 1), (1, 3), (1, 5), (2, 2), (2, 4), (3, 3), (4, 3)])
def test_enumeration_matches_recursive_count(ngens, d):
    C = grouplike_coalgebra([f"s{i}" for i in range(ngens)])
    F = free2_truncated([C], d, verify=False)
    census = F.census()
    assert census[0] == 1
    for k in range(1, d + 1):
        assert census[k] == alternating_tree_count(ngens, k)


def test_two_one_dimensional_summands_degree_two():
    k = grouplike_coalgebra(["e"])
    F = free2_truncated([k, k], 2)
    assert F.census() == {0: 1, 1: 2, 2: 8}


def test_degree_one_is_the_direct_sum():
    A, B = grouplike_coalgebra(["a", "b"]), sweedler().base
    F = free2_truncated([A, B], 1)
    assert F.algebra.dim == 1 + 2 + 4
    for t, C in enumerate((A, B)):
        u = F.injections[t]
        for i in range(C.dim):
            expected = {}
            n = F.algebra.dim
            for j, k, c in C.comul[i]:
                expected[next(iter(u.col(j))) * n + next(iter(u.col(k)))] = c
            assert F.algebra.base.delta(next(iter(u.col(i)))) == expected


def test_free_object_size_and_axioms():
    C = grouplike_coalgebra(["1", "g"])
    F = free2_truncated([C, C], 3)
    assert F.algebra.dim == 421
    assert F.certificate


def test_comultiplication_preserves_degree():
    F = free2_truncated([sweedler().base], 2)
    g = F.algebra.grading
    n = F.algebra.dim
    for i in range(n):
        for t in F.algebra.base.delta(i):
            assert g[t // n] == g[i] == g[t % n]


def test_free_object_is_a_bialgebra_for_noncocommutative_summands():
    assert check_multibialgebra(free2_truncated([sweedler().base], 2).algebra)


def test_degree_zero_and_mixed_fields_rejected():
    C = grouplike_coalgebra(["1"])
    with pytest.raises(MalformedInput):
        free2_truncated([C], 0)
    with pytest.raises(FieldMismatch):
        free2_truncated([C, grouplike_coalgebra(["1"], GF(3))], 2)


# ---- coproducts of 2-bialgebras

def _leaf_name(f, x):
    return f"{x}_{f}"


def test_kz2_kz2_degree_three_matches_reduced_trees():
    res = coproduct_2bialg_truncated([KZ2.carrier, KZ2.carrier], 3)
    oracle = reduced_trees([(0, "g"), (1, "g")], 3, _leaf_name)
    assert sorted(res.labels) == sorted(oracle)
    assert res.dim == 27
    assert res.census() == {0: 1, 1: 2, 2: 4, 3: 20}
    # degree of each representative is its number of leaves
    for label, deg in zip(res.labels, res.algebra.grading):
        assert label.count("g") == deg


def test_dot_only_part_is_the_free_product():
    res = coproduct_2bialg_truncated([KZ2.carrier, KZ2.carrier], 3)
    dot_only = sorted(s for s in res.labels if "<>" not in s)
    words = reduced_words([["g"], ["g"]], 3)

    def render(w):
        if not w:
            return "1"
        if len(w) == 1:
            return _leaf_name(*w[0])
        return "(" + " . ".join(_leaf_name(*x) for x in w) + ")"

    assert dot_only == sorted(render(w) for w in words)
    assert len(dot_only) == 7


def test_basis_is_grouplike():
    res = coproduct_2bialg_truncated([KZ2.carrier, KZ2.carrier], 3)
    C = res.algebra.base
    n = C.dim
    for i in range(n):
        assert C.delta(i) == {i * n + i: 1} and C.counit[i] == 1


@pytest.mark.parametrize("builder", [coproduct_2bialg_truncated, coproduct_brace_truncated])
def test_truncation_coherence(builder):
    arg = KZ2 if builder is coproduct_brace_truncated else KZ2.carrier
    low, high = builder([arg, arg], 2), builder([arg, arg], 3)
    keep = [i for i, g in enumerate(high.algebra.grading) if g <= 2]
    assert [high.representatives[i] for i in keep] == list(low.representatives)
    where = {t: i for i, t in enumerate(high.representatives)}
    for op in (0, 1):
        for a, s in enumerate(low.representatives):
            for b, t in enumerate(low.representatives):
                p = low.algebra.prod(op, a, b)
                if p is None:
                    continue
                q = high.algebra.prod(op, where[s], where[t])
                assert {low.representatives[k]: v for k, v in p.items()} == \
                    {high.representatives[k]: v for k, v in q.items()}


@pytest.mark.parametrize("d", [1, 2, 3])
def test_coproduct_with_k_is_the_other_summand(d):
    k = group_algebra(skew_braces(1)[0]).carrier
    B = trivial_group_brace("Z4").carrier
    res = coproduct_2bialg_truncated([k, B], d)
    assert res.dim == B.dim
    q = res.injections[1]
    assert q.rank() == B.dim
    assert check_morphism(MultiHopfMorphism(B, res.algebra, q), antipodes=False)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_single_summand_is_itself(d):
    B = trivial_group_brace("Z2xZ2").carrier if d < 3 else KZ2.carrier
    res = coproduct_2bialg_truncated([B], d)
    assert res.dim == B.dim and res.injections[0].rank() == B.dim


def test_injections_are_certified():
    res = coproduct_2bialg_truncated([KZ2.carrier, trivial_group_brace("Z3").carrier], 2)
    assert all(res.certificates.values())


def test_noncocommutative_2bialgebra_coproduct():
    H = brace_from_hopf(sweedler()).carrier
    res = coproduct_2bialg_truncated([H, KZ2.carrier], 2)
    assert all(res.certificates.values())


# ---- 2-Hopf and brace coproducts

def test_extended_antipodes_verify():
    res = coproduct_2hopf_truncated([KZ2.carrier, KZ2.carrier], 3)
    assert res.certificates["antipode_0"] and res.certificates["antipode_1"]
    assert res.dim == 27


def test_trivial_brace_defects_do_not_vanish():
    # g <> (h . g) and (g <> h) . g^-1 . (g <> g) differ in the 2-Hopf coproduct
    res = coproduct_2hopf_truncated([KZ2.carrier, KZ2.carrier], 3)
    defects = brace_coproduct_defects(res.algebra, res.injections, [KZ2, KZ2])
    assert len(defects) > 0
    where = {s: i for i, s in enumerate(res.labels)}
    lhs, rhs = where["(g_0 <> (g_1 . g_0))"], where["((g_0 <> g_1) . g_0)"]
    assert {lhs: 1, rhs: -1} in defects or {lhs: -1, rhs: 1} in defects


def test_trivial_kz2_brace_coproduct():
    res = coproduct_brace_truncated([KZ2, KZ2], 3)
    assert all(res.certificates.values())
    assert res.census() == {0: 1, 1: 2, 2: 4, 3: 12}
    assert res.brace is not None


def test_brace_coproduct_with_k():
    k = group_algebra(skew_braces(1)[0])
    B = group_algebra(skew_braces(4)[4])
    res = coproduct_brace_truncated([k, B], 2)
    assert res.dim == B.dim and all(res.certificates.values())


def test_single_brace_summand():
    B = group_algebra(skew_braces(4)[5])
    res = coproduct_brace_truncated([B], 2)
    assert res.dim == B.dim and res.injections[0].rank() == B.dim


def test_brace_coproduct_refuses_noncocommutative():
    with pytest.raises(NotCocommutative):
        coproduct_brace_truncated([brace_from_hopf(sweedler())], 2)


def test_report_is_deterministic():
    a = coproduct_brace_truncated([KZ2, KZ2], 2).to_json()
    b = coproduct_brace_truncated([KZ2, KZ2], 2).to_json()
    assert a == b
    assert list(itertools.chain(a["basis"])) == ["(g_0 . g_1)", "(g_1 . g_0)", "(g_0 <> g_1)", "(g_1 <> g_0)",
                                                  "g_0", "g_1", "1"]
    assert Node and UNIT
