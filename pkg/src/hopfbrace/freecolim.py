"""Degree-truncated free 2-algebras on a direct sum of coalgebras, and the
coproducts of 2-bialgebras, 2-Hopf algebras and cocommutative Hopf braces
computed inside that window.

Terms of the free 2-algebra are alternating trees: a leaf is a basis vector
of one summand; a node applies one of the two products (0 = dot, 1 = diamond)
to at least two children, none of which is a node of the same product.  The
empty product is ``UNIT``.  Degree is the number of leaves.

Working modulo all terms of degree > d keeps every computation finite.  The
comultiplication maps degree n terms into (degree n) (x) (degree n), so the
window is a subcoalgebra; products whose degrees add up to more than d are
treated as overflow and skipped by all checks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Sequence, Union

from .brace import DIA, DOT, HopfBrace, check_brace
from .coalg import Coalgebra, is_cocommutative
from .construct import IdealChainResult, ideal_closure, quotient_multihopf
from .errors import (Certificate, FieldMismatch, InvalidStructure, MalformedInput,
                     NotCocommutative, Violation)
from .exactlin import Mat, Subspace, axpy
from .multihopf import MultiHopf, MultiHopfMorphism, check_antipode, check_morphism, check_multibialgebra

OPS = ("·", "⋄")
ASCII_OPS = (".", "<>")


@dataclass(frozen=True)
class Leaf:
    summand: int
    index: int

    @property
    def degree(self) -> int:
        return 1


@dataclass(frozen=True)
class Node:
    op: int
    children: tuple
    degree: int

    @staticmethod
    def make(op: int, children: Sequence) -> "Node":
        return Node(op, tuple(children), sum(c.degree for c in children))


Term = Union[Leaf, Node]
UNIT = Node(-1, (), 0)


def term_key(t: Term) -> tuple:
    if isinstance(t, Leaf):
        return (1, 0, t.summand, t.index)
    return (t.degree, 1, t.op, tuple(term_key(c) for c in t.children))


def tmul(op: int, s: Term, t: Term) -> Term:
    """Product in the free 2-algebra: graft and flatten same-product nodes."""
    if s == UNIT:
        return t
    if t == UNIT:
        return s
    left = s.children if isinstance(s, Node) and s.op == op else (s,)
    right = t.children if isinstance(t, Node) and t.op == op else (t,)
    return Node.make(op, left + right)


def render(t: Term, names: Sequence[Sequence[str]], ascii_ops: bool = True) -> str:
    if t == UNIT:
        return "1"
    if isinstance(t, Leaf):
        return names[t.summand][t.index]
    sym = (ASCII_OPS if ascii_ops else OPS)[t.op]
    return "(" + f" {sym} ".join(render(c, names, ascii_ops) for c in t.children) + ")"


def leaf_names(summands: Sequence[Coalgebra]) -> list[list[str]]:
    """Summand basis labels, suffixed by the summand index when labels collide
    with each other or with the unit's label "1"."""
    seen: dict[str, int] = {"1": 1}
    for C in summands:
        for s in C.labels:
            seen[s] = seen.get(s, 0) + 1
    return [[s if seen[s] == 1 else f"{s}_{t}" for s in C.labels] for t, C in enumerate(summands)]


# ---------------------------------------------------------- enumeration


def enumerate_terms(gens: Sequence[Leaf], d: int) -> list[Term]:
    """All alternating unit-free trees on the given leaves with degree 1..d."""
    by_root: dict[tuple[int, int], list[Term]] = {}  # (degree, root) -> terms; root -1 = leaf

    def not_rooted(op: int, k: int) -> list[Term]:
        if k == 1:
            return list(gens)
        return by_root.get((k, 1 - op), [])

    for k in range(1, d + 1):
        if k == 1:
            by_root[(1, -1)] = list(gens)
            continue
        for op in (0, 1):
            out = []
            for parts in compositions(k):
                if len(parts) < 2:
                    continue
                for kids in itertools.product(*(not_rooted(op, p) for p in parts)):
                    out.append(Node(op, tuple(kids), k))
            by_root[(k, op)] = out
    terms = []
    for (k, root), ts in by_root.items():
        terms.extend(ts)
    return terms


@lru_cache(maxsize=None)
def compositions(k: int) -> tuple[tuple[int, ...], ...]:
    if k == 0:
        return ((),)
    out = []
    for first in range(1, k + 1):
        for rest in compositions(k - first):
            out.append((first,) + rest)
    return tuple(out)


# ------------------------------------------------------ the free object


@dataclass(frozen=True)
class TruncatedFree2Bialg:
    algebra: MultiHopf
    terms: tuple
    degree: int
    summands: tuple
    injections: tuple[Mat, ...]
    certificate: Certificate

    def index(self, t: Term) -> int:
        return self._index[t]

    @property
    def _index(self) -> dict:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {t: i for i, t in enumerate(self.terms)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def census(self) -> dict[int, int]:
        return _census(self.algebra.grading)


def _census(grading) -> dict[int, int]:
    out: dict[int, int] = {}
    for g in grading:
        out[g] = out.get(g, 0) + 1
    return dict(sorted(out.items()))


def _check_inputs(summands: Sequence, d: int) -> None:
    if d < 1:
        raise MalformedInput("the degree bound must be at least 1")
    if not summands:
        raise MalformedInput("need at least one summand")
    F = summands[0].field
    for s in summands[1:]:
        if s.field != F:
            raise FieldMismatch("summands over different fields")


def free2_truncated(summands: Sequence[Coalgebra], d: int, verify: bool = True) -> TruncatedFree2Bialg:
    """Free 2-algebra on the direct sum of the summand coalgebras, modulo degree > d.

    Basis indices are ordered by decreasing degree (UNIT last), so echelon
    pivots fall on the highest-degree terms and quotient representatives
    have the lowest possible degree.
    """
    _check_inputs(summands, d)
    F = summands[0].field
    gens = [Leaf(t, i) for t, C in enumerate(summands) for i in range(C.dim)]
    terms = sorted(enumerate_terms(gens, d), key=lambda t: (-t.degree, term_key(t))) + [UNIT]
    index = {t: i for i, t in enumerate(terms)}
    n = len(terms)
    one = F.one

    delta_memo: dict[Term, dict] = {}

    def delta(t: Term) -> dict:
        if t in delta_memo:
            return delta_memo[t]
        if t == UNIT:
            out = {(UNIT, UNIT): one}
        elif isinstance(t, Leaf):
            C = summands[t.summand]
            out = {}
            for j, k, c in C.comul[t.index]:
                out[(Leaf(t.summand, j), Leaf(t.summand, k))] = c
        else:
            out = {(UNIT, UNIT): one}
            for ch in t.children:
                nxt: dict = {}
                for (a, b), x in out.items():
                    for (c1, c2), y in delta(ch).items():
                        key = (tmul(t.op, a, c1), tmul(t.op, b, c2))
                        s = nxt.get(key, F.zero) + x * y
                        if s:
                            nxt[key] = s
                        else:
                            nxt.pop(key, None)
                out = nxt
        delta_memo[t] = out
        return out

    def eps(t: Term):
        if t == UNIT:
            return one
        if isinstance(t, Leaf):
            return summands[t.summand].counit[t.index]
        e = one
        for ch in t.children:
            e = e * eps(ch)
        return e

    comul = [[(index[a], index[b], c) for (a, b), c in delta(t).items()] for t in terms]
    counit = [eps(t) for t in terms]
    names = leaf_names(summands)
    labels = [render(t, names) for t in terms]
    base = Coalgebra(F, tuple(labels), tuple(comul), tuple(counit))
    grading = tuple(t.degree for t in terms)
    muls = []
    for op in (0, 1):
        quads = []
        for a, s in enumerate(terms):
            for b in range(n):
                t = terms[b]
                if s.degree + t.degree > d:
                    continue
                quads.append((a, b, index[tmul(op, s, t)], 1))
        muls.append(quads)
    unit = [0] * n
    unit[index[UNIT]] = 1
    alg = MultiHopf(base, tuple(unit), tuple(muls), {}, grading, d)
    injections = tuple(
        Mat(F, n, C.dim, [{index[Leaf(t, i)]: one} for i in range(C.dim)]) for t, C in enumerate(summands))
    cert = check_multibialgebra(alg) if verify else Certificate.passed()
    if not cert:
        raise AssertionError(f"free 2-algebra failed its own bialgebra check: {cert.violation}")
    return TruncatedFree2Bialg(alg, tuple(terms), d, tuple(summands), injections, cert)


# --------------------------------------------------------------- coproducts


@dataclass(frozen=True)
class CoproductResult:
    algebra: MultiHopf
    representatives: tuple
    degree: int
    injections: tuple[Mat, ...]
    chain: IdealChainResult
    free_dim: int
    certificates: dict = dc_field(default_factory=dict)
    stages: tuple = ()
    brace: HopfBrace | None = None

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def labels(self):
        return self.algebra.labels

    def census(self) -> dict[int, int]:
        return _census(self.algebra.grading)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "free_dim": self.free_dim,
            "dim": self.dim,
            "basis": list(self.labels),
            "census": {str(k): v for k, v in self.census().items()},
            "chain": self.chain.to_json(),
            "stages": list(self.stages),
            "certificates": {k: v.to_json() for k, v in sorted(self.certificates.items())},
        }


def _relations(free: TruncatedFree2Bialg, summands: Sequence[MultiHopf]) -> list[dict]:
    """Unit identifications and multiplicativity defects of the summand injections."""
    alg = free.algebra
    F = alg.field
    one = F.one
    rels = []
    for t, H in enumerate(summands):
        u = free.injections[t]
        rels.append(axpy({free.index(UNIT): one}, -one, u.apply(H.unit_vec)))
    for op in (0, 1):
        for t, H in enumerate(summands):
            u = free.injections[t]
            for a in range(H.dim):
                for b in range(H.dim):
                    prod = alg.mulv(op, u.col(a), u.col(b))
                    if prod is None:
                        continue
                    rels.append(axpy(u.apply(H.prod(op, a, b)), -one, prod))
    return [r for r in rels if r]


def _check_two_bialg(H: MultiHopf) -> None:
    if H.nmuls != 2:
        raise MalformedInput(f"summands need two multiplications, got {H.nmuls}")
    cert = check_multibialgebra(H, antipodes=False)
    if not cert:
        raise InvalidStructure(cert.violation, "2-bialgebra summand")


def _finish(free: TruncatedFree2Bialg, L: IdealChainResult, summands, stages) -> tuple:
    Q, pi = quotient_multihopf(free.algebra, L.closure)
    reps = tuple(free.terms[q] for q in L.closure.complement())
    injections = tuple(pi @ u for u in free.injections)
    certs = {"bialgebra": check_multibialgebra(Q, antipodes=False)}
    for t, (H, q) in enumerate(zip(summands, injections)):
        certs[f"injection_{t}"] = check_morphism(MultiHopfMorphism(H, Q, q), antipodes=False)
    return Q, pi, reps, injections, certs


def coproduct_2bialg_truncated(summands: Sequence[MultiHopf], d: int) -> CoproductResult:
    """Coproduct of 2-bialgebras: free 2-algebra modulo the ideal generated by
    the unit identifications and the multiplicativity defects, within degree d."""
    _check_inputs(summands, d)
    for H in summands:
        _check_two_bialg(H)
    free = free2_truncated([H.base for H in summands], d)
    rels = _relations(free, summands)
    J0 = Subspace.span(free.algebra.field, free.algebra.dim, rels)
    L = ideal_closure(free.algebra, J0)
    Q, pi, reps, inj, certs = _finish(free, L, summands, ())
    return CoproductResult(Q, reps, d, inj, L, free.algebra.dim, certs, ({"stage": "2-bialgebra", "dim": Q.dim},))


def _tree_antipode(free: TruncatedFree2Bialg, summand_antipodes: Sequence[Mat]) -> Mat:
    """Leafwise summand antipode, children reversed at every node (product kept)."""
    alg = free.algebra
    F = alg.field
    one = F.one
    memo: dict[Term, dict] = {}

    def img(t: Term) -> dict:
        if t in memo:
            return memo[t]
        if t == UNIT:
            out = {free.index(UNIT): one}
        elif isinstance(t, Leaf):
            col = summand_antipodes[t.summand].col(t.index)
            out = {free.index(Leaf(t.summand, j)): c for j, c in col.items()}
        else:
            out = {free.index(UNIT): one}
            for ch in reversed(t.children):
                out = alg.mulv(t.op, out, img(ch))
        memo[t] = out
        return out

    return Mat(F, alg.dim, alg.dim, [img(t) for t in free.terms])


def _coproduct_2hopf(summands: Sequence[MultiHopf], d: int):
    for H in summands:
        _check_two_bialg(H)
        for i in (DOT, DIA):
            if i not in H.antipodes:
                raise InvalidStructure(Violation("antipode", (i,), detail="summand lacks an antipode"), "2-Hopf summand")
    free = free2_truncated([H.base for H in summands], d)
    anti = {i: _tree_antipode(free, [H.antipodes[i] for H in summands]) for i in (DOT, DIA)}
    free = TruncatedFree2Bialg(free.algebra.with_antipodes(anti), free.terms, free.degree, free.summands,
                               free.injections, free.certificate)
    rels = _relations(free, summands)
    J0 = Subspace.span(free.algebra.field, free.algebra.dim, rels)
    L = ideal_closure(free.algebra, J0)
    Q, pi, reps, inj, certs = _finish(free, L, summands, ())
    for i in (DOT, DIA):
        c = check_antipode(Q, i)
        certs[f"antipode_{i}"] = c
        if not c:
            raise InvalidStructure(c.violation, "extended antipode (it fails the convolution equations within the truncation)")
    for t, (H, q) in enumerate(zip(summands, inj)):
        certs[f"injection_{t}"] = check_morphism(MultiHopfMorphism(H, Q, q))
    return free, L, Q, reps, inj, certs


def coproduct_2hopf_truncated(summands: Sequence[MultiHopf], d: int) -> CoproductResult:
    """Coproduct of 2-Hopf algebras within degree d, antipodes extended to trees and verified."""
    _check_inputs(summands, d)
    free, L, Q, reps, inj, certs = _coproduct_2hopf(summands, d)
    return CoproductResult(Q, reps, d, inj, L, free.algebra.dim, certs, ({"stage": "2-hopf", "dim": Q.dim},))


def brace_coproduct_defects(Q: MultiHopf, injections: Sequence[Mat], summands: Sequence[HopfBrace]) -> list[dict]:
    """Brace defects x<>(y.z) - (x1<>y).S(x2).(x3<>z) for x, y, z basis vectors
    of (possibly different) summands, evaluated in Q.  Triples whose terms
    overflow the degree bound are skipped."""
    F = Q.field
    S = Q.antipodes[DOT]
    out = []
    for t, Ht in enumerate(summands):
        qt = injections[t]
        C = Ht.base
        n = C.dim
        for x in range(n):
            d2 = [(k // (n * n), (k // n) % n, k % n, c) for k, c in C.delta2(x).items()]
            for s, Hs in enumerate(summands):
                for y in range(Hs.dim):
                    qy = injections[s].col(y)
                    for r, Hr in enumerate(summands):
                        for z in range(Hr.dim):
                            qz = injections[r].col(z)
                            yz = Q.mulv(DOT, qy, qz)
                            f = None if yz is None else Q.mulv(DIA, qt.col(x), yz)
                            if f is None:
                                continue
                            g: dict | None = {}
                            for x1, x2, x3, c in d2:
                                a = Q.mulv(DIA, qt.col(x1), qy)
                                b = None if a is None else Q.mulv(DOT, a, S.apply(qt.col(x2)))
                                w = Q.mulv(DIA, qt.col(x3), qz)
                                p = None if b is None or w is None else Q.mulv(DOT, b, w)
                                if p is None:
                                    g = None
                                    break
                                axpy(g, c, p)
                            if g is None:
                                continue
                            diff = axpy(dict(f), -F.one, g)
                            if diff:
                                out.append(diff)
    return out


def coproduct_brace_truncated(summands: Sequence[HopfBrace], d: int) -> CoproductResult:
    """Coproduct of cocommutative Hopf braces within degree d.

    Starts from the 2-Hopf coproduct, imposes the brace defects of all summand
    triples that stay inside the window, closes and takes the quotient.
    """
    _check_inputs(summands, d)
    for t, B in enumerate(summands):
        if not is_cocommutative(B.base):
            raise NotCocommutative(f"summand {t} is not cocommutative")
    carriers = [B.carrier for B in summands]
    free, L2, Q2, reps2, inj2, certs = _coproduct_2hopf(carriers, d)
    defects = brace_coproduct_defects(Q2, inj2, summands)
    J0 = Subspace.span(Q2.field, Q2.dim, defects)
    L3 = ideal_closure(Q2, J0)
    Q3, pi3 = quotient_multihopf(Q2, L3.closure)
    reps = tuple(reps2[q] for q in L3.closure.complement())
    inj = tuple(pi3 @ q for q in inj2)
    out_certs = {k: v for k, v in certs.items() if not k.startswith("injection")}
    bc = check_brace(Q3)
    out_certs["brace"] = bc
    out_certs["bialgebra"] = check_multibialgebra(Q3)
    for t, (B, q) in enumerate(zip(summands, inj)):
        out_certs[f"injection_{t}"] = check_morphism(MultiHopfMorphism(B.carrier, Q3, q))
    stages = ({"stage": "2-hopf", "dim": Q2.dim, "chain_dims": L2.dims()},
              {"stage": "brace", "dim": Q3.dim, "defects": J0.dim, "chain_dims": L3.dims()})
    return CoproductResult(Q3, reps, d, inj, L3, free.algebra.dim, out_certs, stages,
                           bc.value if bc else None)
