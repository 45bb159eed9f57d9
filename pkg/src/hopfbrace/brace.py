"""Hopf braces, the group-algebra functor and Yang-Baxter operators.

A Hopf brace is a ``MultiHopf`` with two multiplications (index 0 is the
dot product, index 1 the diamond product) and antipodes S (for 0) and T
(for 1) satisfying, for all x, y, z,

    x <> (y . z) == (x1 <> y) . S(x2) . (x3 <> z)

where x1 (x) x2 (x) x3 is the left-iterated coproduct (Delta (x) id) Delta x.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterator, Sequence

from .coalg import grouplike_coalgebra, is_cocommutative
from .errors import (Certificate, DimensionMismatch, InvalidStructure, NotCocommutative,
                     Violation)
from .exactlin import QQ, Mat, axpy, vsub
from .multihopf import (MultiHopf, MultiHopfMorphism, check_multibialgebra, check_morphism,
                        solve_antipode)
from .skew import SkewBrace, check_skew_brace

DOT, DIA = 0, 1


@dataclass(frozen=True)
class HopfBrace:
    """A two-multiplication multi-Hopf algebra that has passed ``check_brace``.

    Build one with ``certify`` (or the ``brace_from_*`` helpers); the
    constructor itself does not check anything.
    """

    carrier: MultiHopf

    @classmethod
    def certify(cls, H: MultiHopf) -> HopfBrace:
        cert = check_brace(H)
        cert.raise_for("Hopf brace")
        return cert.value

    @property
    def field(self):
        return self.carrier.field

    @property
    def dim(self) -> int:
        return self.carrier.dim

    @property
    def base(self):
        return self.carrier.base

    @property
    def labels(self):
        return self.carrier.labels

    @property
    def S(self) -> Mat:
        return self.carrier.antipodes[DOT]

    @property
    def T(self) -> Mat:
        return self.carrier.antipodes[DIA]

    def dot(self, x: dict, y: dict):
        return self.carrier.mulv(DOT, x, y)

    def dia(self, x: dict, y: dict):
        return self.carrier.mulv(DIA, x, y)

    def to_json(self) -> dict:
        return self.carrier.to_json()


def _require_two_hopf(H: MultiHopf) -> None:
    if H.nmuls != 2:
        raise DimensionMismatch(f"a Hopf brace needs exactly two multiplications, got {H.nmuls}")
    missing = [i for i in (DOT, DIA) if i not in H.antipodes]
    if missing:
        raise InvalidStructure(Violation("antipode", tuple(missing), detail="antipode not given"), "2-Hopf algebra")


def brace_defects(H: MultiHopf, triples: Iterator[tuple[int, int, int]] | None = None):
    """Yield (x, y, z, lhs - rhs) for basis triples where the compatibility fails.

    Triples needing an overflow product are skipped.
    """
    n = H.dim
    one = H.field.one
    S = H.antipodes[DOT]
    d2 = [[(t // (n * n), (t // n) % n, t % n, c) for t, c in H.base.delta2(x).items()] for x in range(n)]
    if triples is None:
        triples = ((x, y, z) for x in range(n) for y in H.partners(x) for z in H.partners(x, y))
    left_cache: dict[tuple[int, int], list | None] = {}
    for x, y, z in triples:
        yz = H.prod(DOT, y, z)
        if yz is None:
            continue
        lhs = H.mulv(DIA, {x: one}, yz)
        if lhs is None:
            continue
        key = (x, y)
        if key not in left_cache:
            parts = []
            for x1, x2, x3, c in d2[x]:
                a = H.prod(DIA, x1, y)
                if a is None:
                    parts = None
                    break
                b = H.mulv(DOT, a, S.col(x2))
                if b is None:
                    parts = None
                    break
                parts.append((b, x3, c))
            left_cache[key] = parts
        parts = left_cache[key]
        if parts is None:
            continue
        rhs: dict = {}
        ok = True
        for b, x3, c in parts:
            w = H.prod(DIA, x3, z)
            p = None if w is None else H.mulv(DOT, b, w)
            if p is None:
                ok = False
                break
            axpy(rhs, c, p)
        if not ok:
            continue
        diff = vsub(lhs, rhs)
        if diff:
            yield x, y, z, diff


def check_brace(H: MultiHopf) -> Certificate:
    """Certify the brace compatibility on every basis triple.

    On success the certificate's ``value`` is the ``HopfBrace``.  Raises
    ``InvalidStructure`` when the underlying 2-Hopf data is itself invalid.
    """
    _require_two_hopf(H)
    cert = check_multibialgebra(H)
    if not cert:
        raise InvalidStructure(cert.violation, "2-Hopf algebra")
    for x, y, z, diff in brace_defects(H):
        return Certificate.failed(Violation("brace-compatibility", (x, y, z), diff,
                                            detail=f"{H.labels[x]} <> ({H.labels[y]} . {H.labels[z]})"))
    return Certificate.passed(HopfBrace(H))


# ------------------------------------------------------ canonical braces


def _hopf_parts(H: MultiHopf) -> tuple[tuple, Mat]:
    S = H.antipodes.get(DOT)
    if S is None:
        S = solve_antipode(H, DOT)
    return H.muls[DOT], S


def brace_from_hopf(H: MultiHopf) -> HopfBrace:
    """The brace with x <> y = x . y, using multiplication 0 of H."""
    m, S = _hopf_parts(H)
    return HopfBrace.certify(MultiHopf(H.base, H.unit, (m, m), {DOT: S, DIA: S}))


def brace_from_op(H: MultiHopf) -> HopfBrace:
    """The brace with x <> y = y . x; T = S when S is involutive, else S^-1."""
    m, S = _hopf_parts(H)
    if S @ S == Mat.identity(H.field, H.dim):
        T = S
    else:
        try:
            T = S.inverse()
        except ZeroDivisionError:
            raise InvalidStructure(Violation("antipode-invertibility", (), detail="S is not invertible"),
                                   "Hopf algebra") from None
    op = tuple((b, a, c, s) for a, b, c, s in m)
    return HopfBrace.certify(MultiHopf(H.base, H.unit, (m, op), {DOT: S, DIA: T}))


# ------------------------------------------------------- group algebras


def _perm_matrix(field, perm: Sequence[int]) -> Mat:
    return Mat.permutation(field, perm)


def group_hopf(labels: Sequence[str], table, field=QQ) -> MultiHopf:
    """Group algebra kG (one multiplication) of a finite group given by its Cayley table."""
    n = len(labels)
    base = grouplike_coalgebra(labels, field)
    e = next(a for a in range(n) if all(table[a][x] == x for x in range(n)))
    inv = [next(b for b in range(n) if table[a][b] == e) for a in range(n)]
    unit = [1 if a == e else 0 for a in range(n)]
    mul = [(a, b, table[a][b], 1) for a in range(n) for b in range(n)]
    return MultiHopf(base, tuple(unit), (mul,), {0: _perm_matrix(field, inv)})


def group_algebra(B: SkewBrace, field=QQ) -> HopfBrace:
    """Linearize a skew brace: group-like basis, both Cayley tables, inversion antipodes."""
    check_skew_brace(B).raise_for("skew brace")
    n = B.size
    base = grouplike_coalgebra(B.labels, field)
    unit = [1 if a == B.unit else 0 for a in range(n)]
    dot = [(a, b, B.dot[a][b], 1) for a in range(n) for b in range(n)]
    dia = [(a, b, B.dia[a][b], 1) for a in range(n) for b in range(n)]
    anti = {DOT: _perm_matrix(field, B.dot_inv), DIA: _perm_matrix(field, B.dia_inv)}
    return HopfBrace.certify(MultiHopf(base, tuple(unit), (dot, dia), anti))


def digroup_hopf(labels: Sequence[str], dot, dia, field=QQ) -> MultiHopf:
    """Cocommutative 2-Hopf algebra on kG from two group laws with a common unit.

    No brace compatibility is required; this is the input class of ``free_brace``.
    """
    A, B = group_hopf(labels, dot, field), group_hopf(labels, dia, field)
    if A.unit != B.unit:
        raise InvalidStructure(Violation("shared unit", (), detail="the two group laws have different units"),
                               "digroup")
    return MultiHopf(A.base, A.unit, (A.muls[0], B.muls[0]), {DOT: A.antipodes[0], DIA: B.antipodes[0]})


def linearize_morphism(f: Sequence[int], A: HopfBrace, B: HopfBrace) -> MultiHopfMorphism:
    return MultiHopfMorphism(A.carrier, B.carrier, _perm_matrix_rect(A.field, f, B.dim))


def _perm_matrix_rect(field, f: Sequence[int], m: int) -> Mat:
    return Mat(field, m, len(f), [{f[a]: field.one} for a in range(len(f))])


def check_brace_morphism(f: MultiHopfMorphism) -> Certificate:
    return check_morphism(f)


# ------------------------------------------------------ Yang-Baxter operators


@dataclass(frozen=True)
class YBOperator:
    """Yang-Baxter operator of a cocommutative Hopf brace.

    ``matrix`` is the braided form c, satisfying c12 c23 c12 = c23 c12 c23;
    ``rmatrix`` is flip . c, satisfying R12 R13 R23 = R23 R13 R12.
    """

    dim: int
    matrix: Mat
    rmatrix: Mat

    def is_invertible(self) -> bool:
        return self.matrix.rank() == self.dim ** 2


def _flip(field, n: int) -> Mat:
    return Mat.permutation(field, [(t % n) * n + t // n for t in range(n * n)])


def ybe_operator(H: HopfBrace) -> YBOperator:
    """c(x (x) y) = (x1 -> y1) (x) T(x2 -> y2) <> x3 <> y3,  with x -> y = S(x1) . (x2 <> y).

    Only cocommutative braces are accepted.
    """
    C = H.carrier
    if not is_cocommutative(C.base):
        raise NotCocommutative("the Yang-Baxter operator is only produced for cocommutative Hopf braces")
    n = C.dim
    one = C.field.one
    S, T = H.S, H.T
    d1 = [[(t // n, t % n, c) for t, c in C.base.delta(x).items()] for x in range(n)]
    d2 = [[(t // (n * n), (t // n) % n, t % n, c) for t, c in C.base.delta2(x).items()] for x in range(n)]

    harp: dict[tuple[int, int], dict] = {}

    def harpoon(u: int, v: int) -> dict:
        key = (u, v)
        if key not in harp:
            acc: dict = {}
            for u1, u2, c in d1[u]:
                axpy(acc, c, C.mulv(DOT, S.col(u1), C.prod(DIA, u2, v)))
            harp[key] = acc
        return harp[key]

    cols = []
    for x in range(n):
        for y in range(n):
            acc: dict = {}
            for x1, x2, x3, a in d2[x]:
                for y1, y2, y3, b in d2[y]:
                    left = harpoon(x1, y1)
                    right = C.mulv(DIA, C.mulv(DIA, T.apply(harpoon(x2, y2)), {x3: one}), {y3: one})
                    for i, p in left.items():
                        for j, q in right.items():
                            axpy(acc, a * b * p * q, {i * n + j: one})
            cols.append(acc)
    c = Mat(C.field, n * n, n * n, cols)
    return YBOperator(n, c, _flip(C.field, n) @ c)


def _side(r: Mat) -> int:
    n = isqrt(r.nrows)
    if r.nrows != r.ncols or n * n != r.nrows:
        raise DimensionMismatch(f"{r.shape} is not a square matrix of perfect-square size")
    return n


def _apply_pair(r: Mat, v: dict, n: int, pos: str) -> dict:
    acc: dict = {}
    nn = n * n
    for idx, c in v.items():
        a, b, d = idx // nn, (idx // n) % n, idx % n
        if pos == "12":
            for t, x in r.col(a * n + b).items():
                axpy(acc, c * x, {t * n + d: 1})
        elif pos == "23":
            for t, x in r.col(b * n + d).items():
                axpy(acc, c * x, {a * nn + t: 1})
        else:
            for t, x in r.col(a * n + d).items():
                axpy(acc, c * x, {(t // n) * nn + b * n + t % n: 1})
    return acc


def check_qybe(r, form: str = "qybe") -> Certificate:
    """Exhaustive check on every basis triple.

    ``form="qybe"``: r12 r13 r23 == r23 r13 r12.
    ``form="braid"``: r12 r23 r12 == r23 r12 r23.
    A ``YBOperator`` is checked in both forms (its R-matrix and its braided matrix).
    """
    if isinstance(r, YBOperator):
        cert = check_qybe(r.rmatrix, "qybe")
        return cert if not cert else check_qybe(r.matrix, "braid")
    if form not in ("qybe", "braid"):
        raise ValueError(f"unknown form {form!r}")
    n = _side(r)
    left_ops, right_ops = (("23", "13", "12"), ("12", "13", "23")) if form == "qybe" else \
        (("12", "23", "12"), ("23", "12", "23"))
    one = r.field.one
    for idx in range(n ** 3):
        lv = {idx: one}
        for p in left_ops:
            lv = _apply_pair(r, lv, n, p)
        rv = {idx: one}
        for p in right_ops:
            rv = _apply_pair(r, rv, n, p)
        if lv != rv:
            a, b, c = idx // (n * n), (idx // n) % n, idx % n
            return Certificate.failed(Violation(form, (a, b, c), vsub(lv, rv)))
    return Certificate.passed()
