"""Coalgebras carrying an indexed family of multiplications with one shared unit.

Multiplication i is stored as quadruples (a, b, c, s) meaning
m_i(e_a (x) e_b) has coefficient s on e_c.  Antipodes are matrices kept for a
subset of the indices.

Degree-truncated objects (see ``freecolim``) carry a grading of the basis
and a bound d: a product of basis elements whose degrees add up to more
than d is *overflow*.  ``prod`` and ``mulv`` return None for it and every
checker skips any identity that would need such a product.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Mapping, Sequence

from .coalg import Coalgebra, check_coalgebra
from .errors import (Certificate, DimensionMismatch, FieldMismatch, InvalidStructure,
                     MalformedInput, NoAntipode, Violation)
from .exactlin import Mat, axpy, dense, solve_sparse, sparse, vsub

Quad = tuple[int, int, int, object]


def _normalize_quads(field, n: int, quads) -> tuple[Quad, ...]:
    acc: dict[tuple[int, int, int], object] = {}
    for a, b, c, s in quads:
        a, b, c = int(a), int(b), int(c)
        if not all(0 <= x < n for x in (a, b, c)):
            raise MalformedInput(f"multiplication index ({a},{b},{c}) out of range for dimension {n}")
        s = acc.get((a, b, c), field.zero) + field(s)
        if s:
            acc[(a, b, c)] = s
        else:
            acc.pop((a, b, c), None)
    return tuple((a, b, c, s) for (a, b, c), s in sorted(acc.items()))


@dataclass(frozen=True, eq=False)
class MultiHopf:
    base: Coalgebra
    unit: tuple
    muls: tuple[tuple[Quad, ...], ...]
    antipodes: Mapping[int, Mat] = dc_field(default_factory=dict)
    grading: tuple[int, ...] = ()
    bound: int | None = None

    def __post_init__(self):
        F = self.base.field
        n = self.base.dim
        if len(self.unit) != n:
            raise MalformedInput(f"unit has {len(self.unit)} entries, dimension is {n}")
        object.__setattr__(self, "unit", tuple(F(x) for x in self.unit))
        object.__setattr__(self, "muls", tuple(_normalize_quads(F, n, m) for m in self.muls))
        anti = {}
        for i, S in dict(self.antipodes).items():
            i = int(i)
            if not 0 <= i < len(self.muls):
                raise MalformedInput(f"antipode for missing multiplication {i}")
            if S.field != F:
                raise FieldMismatch(f"antipode {i} over {S.field!r}, coalgebra over {F!r}")
            if S.shape != (n, n):
                raise MalformedInput(f"antipode {i} has shape {S.shape}, expected {(n, n)}")
            anti[i] = S
        object.__setattr__(self, "antipodes", dict(sorted(anti.items())))
        g = tuple(int(x) for x in self.grading)
        if (self.bound is None) != (not g) or (g and len(g) != n):
            raise MalformedInput("a truncation needs both a full grading and a bound")
        object.__setattr__(self, "grading", g)

    @property
    def field(self):
        return self.base.field

    @property
    def dim(self) -> int:
        return self.base.dim

    @property
    def nmuls(self) -> int:
        return len(self.muls)

    @property
    def labels(self):
        return self.base.labels

    def __eq__(self, other):
        if not isinstance(other, MultiHopf):
            return NotImplemented
        return (self.base == other.base and self.unit == other.unit and self.muls == other.muls
                and self.antipodes == other.antipodes and self.grading == other.grading
                and self.bound == other.bound)

    def __hash__(self):
        return hash((self.base, len(self.muls)))

    def same_constants(self, other: MultiHopf) -> bool:
        return (self.base.same_constants(other.base) and self.unit == other.unit
                and self.muls == other.muls and self.antipodes == other.antipodes)

    # -- evaluation -------------------------------------------------------

    @cached_property
    def _tables(self) -> tuple[dict, ...]:
        out = []
        for m in self.muls:
            t: dict[tuple[int, int], dict] = {}
            for a, b, c, s in m:
                t.setdefault((a, b), {})[c] = s
            out.append(t)
        return tuple(out)

    @cached_property
    def unit_vec(self) -> dict:
        return sparse(self.unit)

    @property
    def truncated(self) -> bool:
        return self.bound is not None

    def maxdeg(self, v: dict) -> int:
        return max((self.grading[k] for k in v), default=0) if self.grading else 0

    @cached_property
    def _by_degree(self) -> tuple[list[int], ...]:
        top = max(self.grading, default=0)
        return tuple([a for a in range(self.dim) if self.grading[a] <= k] for k in range(top + 1))

    def within(self, k: int):
        """Basis indices of degree at most k (all of them when untruncated)."""
        if self.bound is None:
            return range(self.dim)
        if k < 0:
            return []
        return self._by_degree[min(k, len(self._by_degree) - 1)]

    def partners(self, *idx: int):
        """Basis indices b for which multiplying b onto basis elements idx stays in bounds."""
        if self.bound is None:
            return range(self.dim)
        return self.within(self.bound - sum(self.grading[a] for a in idx))

    def prod(self, i: int, a: int, b: int) -> dict | None:
        if self.bound is not None and self.grading[a] + self.grading[b] > self.bound:
            return None
        return self._tables[i].get((a, b), {})

    def mulv(self, i: int, x: dict, y: dict) -> dict | None:
        if self.bound is not None and x and y and self.maxdeg(x) + self.maxdeg(y) > self.bound:
            return None
        acc: dict = {}
        tab = self._tables[i]
        for a, s in x.items():
            for b, t in y.items():
                p = tab.get((a, b))
                if p:
                    axpy(acc, s * t, p)
        return acc

    def mul_matrix(self, i: int) -> Mat:
        n = self.dim
        cols = [dict(self._tables[i].get((a, b), {})) for a in range(n) for b in range(n)]
        return Mat(self.field, n, n * n, cols)

    def antipode(self, i: int) -> Mat:
        try:
            return self.antipodes[i]
        except KeyError:
            raise NoAntipode(i, "no antipode stored for this index") from None

    def apply_antipode(self, i: int, v: dict) -> dict:
        return self.antipode(i).apply(v)

    def with_antipodes(self, antipodes: Mapping[int, Mat]) -> MultiHopf:
        return MultiHopf(self.base, self.unit, self.muls, dict(antipodes), self.grading, self.bound)

    def to_json(self) -> dict:
        f = self.field.fmt
        out = self.base.to_json()
        out["unit"] = [f(x) for x in self.unit]
        out["muls"] = [[[a, b, c, f(s)] for a, b, c, s in m] for m in self.muls]
        if self.antipodes:
            out["antipodes"] = {str(i): S.to_json() for i, S in self.antipodes.items()}
        return out


# ---------------------------------------------------------------- checks


def _tensor_vec(x: dict, y: dict, n: int) -> dict:
    return {j * n + k: a * b for j, a in x.items() for k, b in y.items()}


def _check_antipode(H: MultiHopf, i: int, S: Mat) -> Violation | None:
    F = H.field
    n = H.dim
    u = H.unit_vec
    for a in range(n):
        target = {k: c * H.base.counit[a] for k, c in u.items()} if H.base.counit[a] else {}
        for side in ("left", "right"):
            acc: dict = {}
            skipped = False
            for t, c in H.base.delta(a).items():
                j, k = divmod(t, n)
                if side == "left":
                    p = H.mulv(i, S.col(j), {k: F.one})
                else:
                    p = H.mulv(i, {j: F.one}, S.col(k))
                if p is None:
                    skipped = True
                    break
                axpy(acc, c, p)
            if skipped:
                continue
            diff = vsub(acc, target)
            if diff:
                return Violation("antipode", (a,), diff, index=i, detail=f"{side} convolution equation")
    return None


def check_antipode(H: MultiHopf, i: int, S: Mat | None = None) -> Certificate:
    S = H.antipode(i) if S is None else S
    v = _check_antipode(H, i, S)
    return Certificate.failed(v) if v else Certificate.passed()


def check_multibialgebra(H: MultiHopf, antipodes: bool = True) -> Certificate:
    """Exhaustive exact check of every bialgebra axiom for every multiplication.

    With ``antipodes=True`` the stored antipodes are verified as well.
    Identities needing an overflow product are skipped.
    """
    C = H.base
    cert = check_coalgebra(C)
    if not cert:
        return cert
    F = H.field
    n = H.dim
    one = F.one
    u = H.unit_vec
    if not u:
        return Certificate.failed(Violation("unit", (), u, detail="unit is zero"))
    du = C.delta_vec(u)
    if du != _tensor_vec(u, u, n):
        return Certificate.failed(Violation("unit-comultiplication", (), vsub(du, _tensor_vec(u, u, n))))
    if C.eps(u) != 1:
        return Certificate.failed(Violation("unit-counit", (), C.eps(u)))
    for i in range(H.nmuls):
        for a in range(n):
            ea = {a: one}
            for side, got in (("left", H.mulv(i, u, ea)), ("right", H.mulv(i, ea, u))):
                if got is not None and got != ea:
                    return Certificate.failed(Violation("unitality", (a,), vsub(got, ea), index=i, detail=side))
        for a in range(n):
            for b in H.partners(a):
                ab = H.prod(i, a, b)
                if ab is None:
                    continue
                for c in H.partners(a, b):
                    lhs = H.mulv(i, ab, {c: one})
                    if lhs is None:
                        continue
                    bc = H.prod(i, b, c)
                    if bc is None:
                        continue
                    rhs = H.mulv(i, {a: one}, bc)
                    if rhs is None:
                        continue
                    if lhs != rhs:
                        return Certificate.failed(Violation("associativity", (a, b, c), vsub(lhs, rhs), index=i))
        for a in range(n):
            da = C.delta(a)
            for b in H.partners(a):
                ab = H.prod(i, a, b)
                if ab is None:
                    continue
                e = C.eps(ab)
                if e != C.counit[a] * C.counit[b]:
                    return Certificate.failed(Violation("counit-multiplicativity", (a, b), e - C.counit[a] * C.counit[b], index=i))
                lhs = C.delta_vec(ab)
                rhs: dict = {}
                ok = True
                for s, x in da.items():
                    a1, a2 = divmod(s, n)
                    for t, y in C.delta(b).items():
                        b1, b2 = divmod(t, n)
                        p, q = H.prod(i, a1, b1), H.prod(i, a2, b2)
                        if p is None or q is None:
                            ok = False
                            break
                        axpy(rhs, x * y, _tensor_vec(p, q, n))
                    if not ok:
                        break
                if ok and lhs != rhs:
                    return Certificate.failed(Violation("comultiplicativity", (a, b), vsub(lhs, rhs), index=i))
    if antipodes:
        for i, S in H.antipodes.items():
            v = _check_antipode(H, i, S)
            if v:
                return Certificate.failed(v)
    return Certificate.passed()


# -------------------------------------------------------------- antipodes


def _antipode_equations(H: MultiHopf, i: int, side: str):
    """Linear equations for the unknown S, variable r*n + j = coefficient of e_r in S(e_j)."""
    F = H.field
    n = H.dim
    u = H.unit_vec
    eqs = []
    for a in range(n):
        rows: dict[int, dict] = {}
        for t, c in H.base.delta(a).items():
            j, k = divmod(t, n)
            for r in range(n):
                p = H.prod(i, r, k) if side == "left" else H.prod(i, j, r)
                if p is None:
                    raise InvalidStructure(Violation("overflow", (r, k), index=i), "antipode system")
                var = r * n + j if side == "left" else r * n + k
                for out, s in p.items():
                    row = rows.setdefault(out, {})
                    val = row.get(var, F.zero) + c * s
                    if val:
                        row[var] = val
                    else:
                        row.pop(var, None)
        eps = H.base.counit[a]
        targets = {k: x * eps for k, x in u.items()} if eps else {}
        for out in sorted(set(rows) | set(targets)):
            eqs.append((rows.get(out, {}), targets.get(out, F.zero)))
    return eqs


def solve_antipode(H: MultiHopf, i: int) -> Mat:
    """The unique S with m_i(S (x) id)Delta = u eps = m_i(id (x) S)Delta.

    Both one-sided equations are imposed in a single linear system; when it
    is inconsistent, the diagnostic says whether a one-sided solution exists.
    """
    if not 0 <= i < H.nmuls:
        raise DimensionMismatch(f"no multiplication with index {i}")
    cert = check_multibialgebra(H, antipodes=False)
    if not cert:
        raise InvalidStructure(cert.violation, "multi-bialgebra")
    n = H.dim
    left = _antipode_equations(H, i, "left")
    right = _antipode_equations(H, i, "right")
    sol = solve_sparse(left + right, n * n, H.field)
    if sol is None:
        has_l = solve_sparse(left, n * n, H.field) is not None
        has_r = solve_sparse(right, n * n, H.field) is not None
        if has_l or has_r:
            diag = f"only a {'left' if has_l else 'right'}-sided convolution inverse exists" if has_l != has_r else \
                "left and right convolution inverses exist separately but differ"
        else:
            diag = "the identity has no convolution inverse on either side"
        raise NoAntipode(i, diag)
    x = sol.particular
    cols = [{r: x[r * n + j] for r in range(n) if x[r * n + j]} for j in range(n)]
    return Mat(H.field, n, n, cols)


def with_solved_antipodes(H: MultiHopf, indices: Sequence[int] | None = None) -> MultiHopf:
    idx = range(H.nmuls) if indices is None else indices
    anti = dict(H.antipodes)
    for i in idx:
        anti[i] = solve_antipode(H, i)
    return H.with_antipodes(anti)


# -------------------------------------------------------------- morphisms


@dataclass(frozen=True)
class MultiHopfMorphism:
    source: MultiHopf
    target: MultiHopf
    matrix: Mat

    def __post_init__(self):
        if self.source.field != self.target.field or self.matrix.field != self.source.field:
            raise FieldMismatch("morphism source, target and matrix must share a field")
        if self.matrix.shape != (self.target.dim, self.source.dim):
            raise DimensionMismatch(f"matrix shape {self.matrix.shape} for a map "
                                    f"of dimension {self.source.dim} -> {self.target.dim}")

    def __call__(self, v):
        return self.matrix(v)


def compose(g: MultiHopfMorphism, f: MultiHopfMorphism) -> MultiHopfMorphism:
    """g after f."""
    return MultiHopfMorphism(f.source, g.target, g.matrix @ f.matrix)


def identity_morphism(H: MultiHopf) -> MultiHopfMorphism:
    return MultiHopfMorphism(H, H, Mat.identity(H.field, H.dim))


def check_morphism(f: MultiHopfMorphism, antipodes: bool = True) -> Certificate:
    A, B, M = f.source, f.target, f.matrix
    if A.nmuls != B.nmuls:
        raise DimensionMismatch(f"source has {A.nmuls} multiplications, target {B.nmuls}")
    n, m = A.dim, B.dim
    fu = M.apply(A.unit_vec)
    if fu != B.unit_vec:
        return Certificate.failed(Violation("unit-preservation", (), vsub(fu, B.unit_vec)))
    for a in range(n):
        img = M.col(a)
        e = B.base.eps(img)
        if e != A.base.counit[a]:
            return Certificate.failed(Violation("counit-compatibility", (a,), e - A.base.counit[a]))
        lhs = B.base.delta_vec(img)
        rhs: dict = {}
        for t, c in A.base.delta(a).items():
            j, k = divmod(t, n)
            axpy(rhs, c, _tensor_vec(M.col(j), M.col(k), m))
        if lhs != rhs:
            return Certificate.failed(Violation("comultiplication-compatibility", (a,), vsub(lhs, rhs)))
    for i in range(A.nmuls):
        for a in range(n):
            for b in A.partners(a):
                ab = A.prod(i, a, b)
                if ab is None:
                    continue
                rhs = B.mulv(i, M.col(a), M.col(b))
                if rhs is None:
                    continue
                lhs = M.apply(ab)
                if lhs != rhs:
                    return Certificate.failed(Violation("multiplicativity", (a, b), vsub(lhs, rhs), index=i))
    if antipodes:
        for i in sorted(set(A.antipodes) & set(B.antipodes)):
            SA, SB = A.antipodes[i], B.antipodes[i]
            for a in range(n):
                lhs = M.apply(SA.col(a))
                rhs = SB.apply(M.col(a))
                if lhs != rhs:
                    return Certificate.failed(Violation("antipode-compatibility", (a,), vsub(lhs, rhs), index=i))
    return Certificate.passed()


# ------------------------------------------------------ opposite products


def opposite_mul(H: MultiHopf, i: int, replace: bool = False) -> MultiHopf:
    """Add (or substitute for index i) the multiplication m_i^op(a, b) = m_i(b, a).

    The antipode of the opposite multiplication is the inverse of S_i when S_i
    is stored and invertible; the result is re-verified.
    """
    cert = check_multibialgebra(H)
    if not cert:
        raise InvalidStructure(cert.violation, "multi-bialgebra")
    op = tuple((b, a, c, s) for a, b, c, s in H.muls[i])
    anti = dict(H.antipodes)
    new_anti = None
    if i in H.antipodes:
        try:
            new_anti = H.antipodes[i].inverse()
        except ZeroDivisionError:
            new_anti = None
    if replace:
        muls = H.muls[:i] + (op,) + H.muls[i + 1:]
        anti.pop(i, None)
        if new_anti is not None:
            anti[i] = new_anti
    else:
        muls = H.muls + (op,)
        if new_anti is not None:
            anti[len(H.muls)] = new_anti
    out = MultiHopf(H.base, H.unit, muls, anti, H.grading, H.bound)
    cert = check_multibialgebra(out)
    if not cert:
        raise InvalidStructure(cert.violation, "opposite multi-bialgebra")
    return out


def transport(H: MultiHopf, iso: Mat, labels: Sequence[str] | None = None) -> MultiHopf:
    """Structure transported along an invertible matrix (new = iso . old)."""
    inv = iso.inverse()
    F = H.field
    n = H.dim
    deltas = []
    for j in range(n):
        src = inv.col(j)
        d = H.base.delta_vec(src)
        acc: dict = {}
        for t, c in d.items():
            a, b = divmod(t, n)
            axpy(acc, c, _tensor_vec(iso.col(a), iso.col(b), n))
        deltas.append(acc)
    counit = [H.base.eps(inv.col(j)) for j in range(n)]
    base = Coalgebra.from_deltas(F, labels or H.labels, deltas, counit)
    muls = []
    for i in range(H.nmuls):
        quads = []
        for a in range(n):
            for b in range(n):
                p = H.mulv(i, inv.col(a), inv.col(b))
                for c, s in iso.apply(p).items():
                    quads.append((a, b, c, s))
        muls.append(quads)
    anti = {i: iso @ S @ inv for i, S in H.antipodes.items()}
    unit = dense(iso.apply(H.unit_vec), n, F)
    return MultiHopf(base, unit, tuple(muls), anti)
