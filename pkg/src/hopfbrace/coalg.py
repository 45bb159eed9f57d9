"""Coalgebras given by structure constants.

A coalgebra of dimension n stores, for each basis index i, the triples
(j, k, c) with Delta(e_i) = sum c e_j (x) e_k, plus the counit values.
Tensor indices follow the package convention j*n + k.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Sequence

from .errors import (Certificate, DimensionMismatch, InvalidStructure, MalformedInput,
                     NotCoideal, Unsupported, Violation)
from .exactlin import (GFElem, Mat, PrimeField, Subspace, axpy, charpoly, dense,
                       roots_in_field, solve_sparse, sparse)

Triple = tuple[int, int, object]


def _normalize_triples(field, n: int, triples) -> tuple[Triple, ...]:
    acc: dict[tuple[int, int], object] = {}
    for j, k, c in triples:
        j, k = int(j), int(k)
        if not (0 <= j < n and 0 <= k < n):
            raise MalformedInput(f"tensor index ({j},{k}) out of range for dimension {n}")
        c = field(c)
        s = acc.get((j, k), field.zero) + c
        if s:
            acc[(j, k)] = s
        else:
            acc.pop((j, k), None)
    return tuple((j, k, c) for (j, k), c in sorted(acc.items()))


@dataclass(frozen=True, eq=False)
class Coalgebra:
    field: object
    labels: tuple[str, ...]
    comul: tuple[tuple[Triple, ...], ...]
    counit: tuple = dc_field(default=())

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        n = len(labels)
        if len(set(labels)) != n:
            raise MalformedInput(f"duplicate basis labels in {labels}")
        if len(self.comul) != n or len(self.counit) != n:
            raise MalformedInput(f"dimension {n} but {len(self.comul)} coproducts and {len(self.counit)} counit values")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "comul", tuple(_normalize_triples(self.field, n, t) for t in self.comul))
        object.__setattr__(self, "counit", tuple(self.field(x) for x in self.counit))

    @classmethod
    def from_deltas(cls, field, labels: Sequence[str], deltas: Sequence[dict], counit: Sequence) -> Coalgebra:
        """Build from sparse coproducts indexed by j*n + k."""
        n = len(labels)
        comul = [[(t // n, t % n, c) for t, c in d.items()] for d in deltas]
        return cls(field, tuple(labels), tuple(comul), tuple(counit))

    @property
    def dim(self) -> int:
        return len(self.labels)

    def __eq__(self, other):
        if not isinstance(other, Coalgebra):
            return NotImplemented
        return (self.field == other.field and self.labels == other.labels
                and self.comul == other.comul and self.counit == other.counit)

    def __hash__(self):
        return hash((self.labels, len(self.comul)))

    def same_constants(self, other: Coalgebra) -> bool:
        """Equality of structure constants, ignoring labels."""
        return self.field == other.field and self.comul == other.comul and self.counit == other.counit

    # -- evaluation -------------------------------------------------------

    @cached_property
    def _deltas(self) -> tuple[dict, ...]:
        n = self.dim
        return tuple({j * n + k: c for j, k, c in t} for t in self.comul)

    def delta(self, i: int) -> dict:
        return self._deltas[i]

    def delta_vec(self, v: dict) -> dict:
        acc: dict = {}
        for i, c in v.items():
            axpy(acc, c, self._deltas[i])
        return acc

    @cached_property
    def _delta2(self) -> tuple[dict, ...]:
        n = self.dim
        out = []
        for t in self.comul:
            acc: dict = {}
            for j, k, c in t:
                for jk, d in self._deltas[j].items():
                    key = jk * n + k
                    s = acc.get(key, self.field.zero) + c * d
                    if s:
                        acc[key] = s
                    else:
                        acc.pop(key, None)
            out.append(acc)
        return tuple(out)

    def delta2(self, i: int) -> dict:
        """(Delta (x) id) Delta (e_i) as a sparse vector on n^3 indices."""
        return self._delta2[i]

    def eps(self, v: dict):
        s = self.field.zero
        for i, c in v.items():
            s = s + c * self.counit[i]
        return s

    def comul_matrix(self) -> Mat:
        return Mat(self.field, self.dim ** 2, self.dim, list(self._deltas))

    def counit_matrix(self) -> Mat:
        return Mat(self.field, 1, self.dim, [{0: e} if e else {} for e in self.counit])

    def to_json(self) -> dict:
        f = self.field.fmt
        return {
            "field": self.field.to_json(),
            "dim": self.dim,
            "basis": list(self.labels),
            "comul": [[i, j, k, f(c)] for i, t in enumerate(self.comul) for j, k, c in t],
            "counit": [f(x) for x in self.counit],
        }


# ----------------------------------------------------------------- checks


def check_coalgebra(C: Coalgebra) -> Certificate:
    """Exhaustive check of the counit laws, then coassociativity."""
    n = C.dim
    one = C.field.one
    for i in range(n):
        left: dict = {}
        right: dict = {}
        for j, k, c in C.comul[i]:
            axpy(left, c * C.counit[j], {k: one})
            axpy(right, c * C.counit[k], {j: one})
        for side, got in (("left", left), ("right", right)):
            diff = axpy(dict(got), -one, {i: one})
            if diff:
                return Certificate.failed(Violation("counit", (i,), diff, detail=f"{side} counit law at {C.labels[i]}"))
    for i in range(n):
        lhs = C.delta2(i)
        rhs: dict = {}
        for j, k, c in C.comul[i]:
            for t, d in C.delta(k).items():
                key = j * n * n + t
                axpy(rhs, c * d, {key: one})
        diff = axpy(dict(lhs), -one, rhs)
        if diff:
            return Certificate.failed(Violation("coassociativity", (i,), diff, detail=C.labels[i]))
    return Certificate.passed()


def is_cocommutative(C: Coalgebra) -> bool:
    for t in C.comul:
        swapped = tuple(sorted((k, j, c) for j, k, c in t))
        if swapped != t:
            return False
    return True


def grouplike_coalgebra(labels: Sequence[str], field=None) -> Coalgebra:
    from .exactlin import QQ

    field = QQ if field is None else field
    labels = [str(s) for s in labels]
    if not labels:
        raise MalformedInput("a group-like coalgebra needs at least one label")
    if len(set(labels)) != len(labels):
        raise MalformedInput(f"duplicate labels {labels}")
    n = len(labels)
    return Coalgebra(field, tuple(labels), tuple(((i, i, 1),) for i in range(n)), (1,) * n)


# ------------------------------------------------------------ coideals


def _normal_forms(C: Coalgebra, J: Subspace) -> list[dict]:
    return [J.reduce({i: C.field.one}) for i in range(C.dim)]


def _reduced_delta(C: Coalgebra, nf: list[dict], v: dict) -> dict:
    n = C.dim
    acc: dict = {}
    for t, c in C.delta_vec(v).items():
        a, b = nf[t // n], nf[t % n]
        for j, x in a.items():
            for k, y in b.items():
                axpy(acc, c * x * y, {j * n + k: C.field.one})
    return acc


def is_coideal(C: Coalgebra, J: Subspace) -> Certificate:
    """Delta(J) in J(x)C + C(x)J and eps(J) = 0, checked on the echelon basis of J."""
    if J.ambient != C.dim:
        raise DimensionMismatch(f"subspace of k^{J.ambient} in a coalgebra of dimension {C.dim}")
    nf = _normal_forms(C, J)
    for r, v in enumerate(J.rows):
        e = C.eps(v)
        if e:
            return Certificate.failed(Violation("coideal-counit", (r,), e, detail="counit nonzero on J"))
        red = _reduced_delta(C, nf, v)
        if red:
            return Certificate.failed(Violation("coideal-comultiplication", (r,), red,
                                                detail="Delta(v) has a component outside J(x)C + C(x)J"))
    return Certificate.passed()


def projection_matrix(J: Subspace) -> Mat:
    """Matrix of the quotient map onto the complement coordinates of J."""
    comp = J.complement()
    pos = {q: t for t, q in enumerate(comp)}
    cols = []
    for i in range(J.ambient):
        nf = J.reduce({i: J.field.one})
        cols.append({pos[q]: c for q, c in nf.items()})
    return Mat(J.field, len(comp), J.ambient, cols)


def quotient_coalgebra(C: Coalgebra, J: Subspace) -> tuple[Coalgebra, Mat]:
    """C/J with basis the non-pivot coordinates of J; returns (C/J, projection)."""
    cert = is_coideal(C, J)
    if not cert:
        raise NotCoideal(cert.violation)
    comp = J.complement()
    pi = projection_matrix(J)
    n, m = C.dim, len(comp)
    deltas = []
    for q in comp:
        acc: dict = {}
        for t, c in C.delta(q).items():
            a, b = pi.col(t // n), pi.col(t % n)
            for j, x in a.items():
                for k, y in b.items():
                    axpy(acc, c * x * y, {j * m + k: C.field.one})
        deltas.append(acc)
    Q = Coalgebra.from_deltas(C.field, [C.labels[q] for q in comp], deltas, [C.counit[q] for q in comp])
    return Q, pi


# ---------------------------------------------------------- group-likes


def _is_grouplike(C: Coalgebra, v: dict) -> bool:
    if C.eps(v) != 1:
        return False
    n = C.dim
    want = {}
    for j, x in v.items():
        for k, y in v.items():
            want[j * n + k] = x * y
    return C.delta_vec(v) == want


def _slice_ops(C: Coalgebra) -> list[list[dict]]:
    """Images of basis vectors under x -> (e_i^* (x) id)Delta x and (id (x) e_i^*)Delta x."""
    n = C.dim
    ops = [[{} for _ in range(n)] for _ in range(2 * n)]
    for src, t in enumerate(C.comul):
        for j, k, c in t:
            ops[j][src][k] = c
            ops[n + k][src][j] = c
    return ops


def _coords(U: Subspace, w: dict) -> list:
    """Coordinates of w in the echelon basis of U (w assumed to lie in U)."""
    return [w.get(p, U.field.zero) for p in U.pivots]


def _apply(op: list[dict], v: dict) -> dict:
    acc: dict = {}
    for i, c in v.items():
        axpy(acc, c, op[i])
    return acc


def _largest_invariant(U: Subspace, ops: list[list[dict]]) -> Subspace:
    F = U.field
    while U.dim:
        eqs: list[dict] = []
        for op in ops:
            imgs = [U.reduce(_apply(op, r)) for r in U.rows]
            rowmap: dict[int, dict] = {}
            for a, img in enumerate(imgs):
                for k, x in img.items():
                    rowmap.setdefault(k, {})[a] = x
            eqs.extend(rowmap.values())
        if not eqs:
            return U
        sol = solve_sparse([(e, F.zero) for e in eqs], U.dim, F)
        if len(sol.kernel) == U.dim:
            return U
        vecs = []
        for coef in sol.kernel:
            acc: dict = {}
            for a, c in enumerate(coef):
                axpy(acc, c, U.rows[a])
            vecs.append(acc)
        U = Subspace.span(F, U.ambient, vecs)
    return U


def _grouplikes_eigen(C: Coalgebra) -> list[dict]:
    F = C.field
    ops = _slice_ops(C)
    found: list[dict] = []

    def recurse(U: Subspace):
        U = _largest_invariant(U, ops)
        if not U.dim:
            return
        for op in ops:
            mat = [_coords(U, _apply(op, r)) for r in U.rows]  # row a = image of basis a
            rows = [[mat[b][a] for b in range(U.dim)] for a in range(U.dim)]
            scalar = all((rows[a][b] == (rows[0][0] if a == b else 0)) for a in range(U.dim) for b in range(U.dim))
            if scalar:
                continue
            for lam in roots_in_field(charpoly(rows, F), F):
                shifted = [[rows[a][b] - (lam if a == b else 0) for b in range(U.dim)] for a in range(U.dim)]
                ker = solve_sparse([(sparse(r), F.zero) for r in shifted], U.dim, F).kernel
                vecs = []
                for coef in ker:
                    acc: dict = {}
                    for a, c in enumerate(coef):
                        axpy(acc, c, U.rows[a])
                    vecs.append(acc)
                recurse(Subspace.span(F, U.ambient, vecs))
            return
        # every slice operator is scalar on U, so U has dimension at most one
        for r in U.rows:
            e = C.eps(r)
            if e:
                cand = {k: x / e for k, x in r.items()}
                if _is_grouplike(C, cand):
                    found.append(cand)

    recurse(Subspace.full(F, C.dim))
    return found


EXHAUSTIVE_LIMIT = 10 ** 6


def _grouplikes_exhaustive(C: Coalgebra) -> list[dict]:
    F = C.field
    n = C.dim
    out = []
    elems = F.elements()
    for vals in itertools.product(elems, repeat=n):
        v = sparse(vals)
        if v and _is_grouplike(C, v):
            out.append(v)
    return out


def grouplikes(C: Coalgebra) -> list[tuple]:
    """All group-like elements of C, as dense vectors in a deterministic order.

    Group-likes are common eigenvectors of the slice operators
    x -> (e_i^* (x) id)Delta x and x -> (id (x) e_i^*)Delta x, with eigenvalue
    the i-th coordinate.  Over Q the search splits the space along rational
    eigenspaces and prunes to invariant subspaces; over small prime fields it
    is a direct exhaustive search.
    """
    cert = check_coalgebra(C)
    if not cert:
        raise InvalidStructure(cert.violation, "coalgebra")
    F = C.field
    if isinstance(F, PrimeField) and F.p ** C.dim <= EXHAUSTIVE_LIMIT:
        found = _grouplikes_exhaustive(C)
    else:
        if isinstance(F, PrimeField) and F.p > EXHAUSTIVE_LIMIT:
            raise Unsupported(f"group-like search over GF({F.p}) in dimension {C.dim}")
        found = _grouplikes_eigen(C)
    vecs = [dense(v, C.dim, F) for v in found]
    return sorted(vecs, key=_vec_key)


def _vec_key(v: tuple):
    first = next((i for i, x in enumerate(v) if x), len(v))
    return (first, [int(x) if isinstance(x, GFElem) else x for x in v])
