"""Built-in test structures: small group algebras, Sweedler's algebra, canonical braces."""

from __future__ import annotations

import itertools
from functools import lru_cache

from .brace import HopfBrace, brace_from_hopf, brace_from_op, group_algebra, group_hopf
from .coalg import Coalgebra
from .exactlin import QQ, Mat
from .multihopf import MultiHopf, MultiHopfMorphism, with_solved_antipodes
from .skew import SkewBrace, enumerate_skew_braces, trivial_skew_brace


def cyclic_table(n: int):
    return tuple(tuple((a + b) % n for b in range(n)) for a in range(n))


def cyclic_labels(n: int, g: str = "g"):
    return ["1", g] + [f"{g}^{k}" for k in range(2, n)]


def product_table(t1, t2):
    n1, n2 = len(t1), len(t2)
    return tuple(tuple(t1[a // n2][b // n2] * n2 + t2[a % n2][b % n2] for b in range(n1 * n2))
                 for a in range(n1 * n2))


def s3_group():
    """S3 as permutations of {0,1,2}; r = (0 1 2), f = (1 2), elements r^i f^j."""
    def comp(p, q):  # p after q
        return tuple(p[q[i]] for i in range(3))

    e, r, f = (0, 1, 2), (1, 2, 0), (0, 2, 1)
    r2 = comp(r, r)
    elems = [e, r, r2, f, comp(r, f), comp(r2, f)]
    labels = ["e", "r", "r2", "f", "rf", "r2f"]
    idx = {p: i for i, p in enumerate(elems)}
    table = tuple(tuple(idx[comp(p, q)] for q in elems) for p in elems)
    return labels, table


def groups() -> dict[str, tuple[list[str], tuple]]:
    z2z2 = product_table(cyclic_table(2), cyclic_table(2))
    z4z2 = product_table(cyclic_table(4), cyclic_table(2))
    return {
        "Z2": (cyclic_labels(2), cyclic_table(2)),
        "Z3": (cyclic_labels(3), cyclic_table(3)),
        "Z4": (cyclic_labels(4), cyclic_table(4)),
        "Z2xZ2": (["1", "a", "b", "ab"], z2z2),
        "S3": s3_group(),
        "Z8": (cyclic_labels(8), cyclic_table(8)),
        "Z4xZ2": ([f"g^{i}h^{j}" for i in range(4) for j in range(2)], z4z2),
    }


def kG(name: str, field=QQ) -> MultiHopf:
    labels, table = groups()[name]
    return group_hopf(labels, table, field)


def sweedler(field=QQ) -> MultiHopf:
    """Sweedler's 4-dimensional Hopf algebra: g^2 = 1, x^2 = 0, xg = -gx, Delta x = x (x) 1 + g (x) x."""
    labels = ("1", "g", "x", "gx")
    comul = (
        ((0, 0, 1),),
        ((1, 1, 1),),
        ((2, 0, 1), (1, 2, 1)),
        ((3, 1, 1), (0, 3, 1)),
    )
    base = Coalgebra(field, labels, comul, (1, 1, 0, 0))
    mt = {
        (1, 1): {0: 1}, (1, 2): {3: 1}, (1, 3): {2: 1},
        (2, 1): {3: -1}, (2, 2): {}, (2, 3): {},
        (3, 1): {2: -1}, (3, 2): {}, (3, 3): {},
    }
    quads = []
    for a in range(4):
        quads.append((0, a, a, 1))
        if a:
            quads.append((a, 0, a, 1))
    for (a, b), out in mt.items():
        quads.extend((a, b, c, s) for c, s in out.items())
    H = MultiHopf(base, (1, 0, 0, 0), (quads,))
    return with_solved_antipodes(H)


def hopf_algebras(field=QQ) -> dict[str, MultiHopf]:
    out = {name: kG(name, field) for name in ("Z2", "Z4", "Z2xZ2", "S3")}
    out["H4"] = sweedler(field)
    return out


def canonical_braces(field=QQ) -> dict[str, HopfBrace]:
    """Both canonical braces (x <> y = xy and x <> y = yx) of every corpus Hopf algebra."""
    out = {}
    for name, H in hopf_algebras(field).items():
        out[f"{name}-trivial"] = brace_from_hopf(H)
        out[f"{name}-op"] = brace_from_op(H)
    return out


def kZ4_morphisms(field=QQ) -> tuple[MultiHopfMorphism, MultiHopfMorphism]:
    """Identity and the inversion automorphism g -> g^3 of the trivial brace on kZ4."""
    B = brace_from_hopf(kG("Z4", field)).carrier
    ident = MultiHopfMorphism(B, B, Mat.identity(field, 4))
    inv = MultiHopfMorphism(B, B, Mat.permutation(field, [0, 3, 2, 1]))
    return ident, inv


@lru_cache(maxsize=None)
def skew_braces(max_order: int = 6) -> tuple[SkewBrace, ...]:
    return tuple(itertools.chain.from_iterable(enumerate_skew_braces(n) for n in range(1, max_order + 1)))


def trivial_group_brace(name: str, field=QQ) -> HopfBrace:
    labels, table = groups()[name]
    return group_algebra(trivial_skew_brace(labels, table), field)
