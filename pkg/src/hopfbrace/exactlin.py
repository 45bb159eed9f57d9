"""Exact scalars, sparse vectors, matrices and subspaces over Q and GF(p).

Vectors are handled in two forms: dense tuples (public ``Vec`` values) and
sparse dicts ``{index: scalar}`` with zero entries never stored.  All
structure-constant code works with the sparse form.

Tensor index convention, used everywhere in the package: the basis vector
``e_i (x) e_j`` of ``V (x) W`` has index ``i * dim(W) + j``.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from . import kernels
from .errors import DimensionMismatch, FieldMismatch, Unsupported


# ---------------------------------------------------------------- fields


class Rationals:
    name = "Q"
    char = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, GFElem):
            raise FieldMismatch(f"cannot coerce {x!r} into Q")
        if isinstance(x, str):
            return self.parse(x)
        return Fraction(x)

    def parse(self, s: str) -> Fraction:
        s = s.strip()
        if "mod" in s:
            raise FieldMismatch(f"{s!r} is not a rational")
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"bad rational {s!r}") from e

    def fmt(self, x) -> str:
        return str(Fraction(x))

    def to_json(self):
        return "Q"

    def __repr__(self):
        return "QQ"

    def __reduce__(self):
        return "QQ"


QQ = Rationals()


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class GFElem:
    """Residue class modulo a prime, stored in [0, p)."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _other(self, o):
        if isinstance(o, GFElem):
            if o.p != self.p:
                raise FieldMismatch(f"GF({self.p}) vs GF({o.p})")
            return o.v
        if isinstance(o, int):
            return o
        if isinstance(o, Fraction):
            raise FieldMismatch(f"cannot mix {o!r} with GF({self.p})")
        return NotImplemented

    def __add__(self, o):
        w = self._other(o)
        return NotImplemented if w is NotImplemented else GFElem(self.v + w, self.p)

    __radd__ = __add__

    def __sub__(self, o):
        w = self._other(o)
        return NotImplemented if w is NotImplemented else GFElem(self.v - w, self.p)

    def __rsub__(self, o):
        w = self._other(o)
        return NotImplemented if w is NotImplemented else GFElem(w - self.v, self.p)

    def __mul__(self, o):
        w = self._other(o)
        return NotImplemented if w is NotImplemented else GFElem(self.v * w, self.p)

    __rmul__ = __mul__

    def __truediv__(self, o):
        w = self._other(o)
        if w is NotImplemented:
            return NotImplemented
        if w % self.p == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return GFElem(self.v * pow(w, -1, self.p), self.p)

    def __rtruediv__(self, o):
        w = self._other(o)
        if w is NotImplemented:
            return NotImplemented
        if self.v == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return GFElem(w * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return GFElem(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            return GFElem(pow(self.v, -1, self.p), self.p) ** (-e)
        return GFElem(pow(self.v, e, self.p), self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, o):
        if isinstance(o, GFElem):
            return self.p == o.p and self.v == o.v
        if isinstance(o, int):
            return self.v == o % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"{self.v} mod {self.p}"


class PrimeField:
    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.char = p
        self.name = f"GF({p})"
        self.zero = GFElem(0, p)
        self.one = GFElem(1, p)

    def __call__(self, x) -> GFElem:
        if isinstance(x, GFElem):
            if x.p != self.p:
                raise FieldMismatch(f"cannot coerce {x!r} into {self.name}")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in {self.name}")
            return GFElem(x.numerator * pow(x.denominator, -1, self.p), self.p)
        return GFElem(int(x), self.p)

    def parse(self, s: str) -> GFElem:
        s = s.strip()
        if "mod" in s:
            a, _, q = s.partition("mod")
            if int(q) != self.p:
                raise FieldMismatch(f"{s!r} is not in {self.name}")
            s = a.strip()
        try:
            return self(Fraction(s))
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"bad scalar {s!r} for {self.name}") from e

    def fmt(self, x) -> str:
        return f"{self(x).v} mod {self.p}"

    def elements(self):
        return [GFElem(i, self.p) for i in range(self.p)]

    def to_json(self):
        return {"GF": self.p}

    def __eq__(self, o):
        return isinstance(o, PrimeField) and o.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


Field = "Rationals | PrimeField"


def field_from_json(obj) -> Rationals | PrimeField:
    if obj == "Q":
        return QQ
    if isinstance(obj, dict) and set(obj) == {"GF"}:
        return GF(int(obj["GF"]))
    raise ValueError(f"unknown field {obj!r}")


def same_field(*fields) -> None:
    first = fields[0]
    for f in fields[1:]:
        if f != first:
            raise FieldMismatch(f"{first!r} vs {f!r}")


# ------------------------------------------------------- sparse vectors


def axpy(acc: dict, c, v: dict) -> dict:
    """acc += c * v in place, dropping zeros; returns acc."""
    if not c:
        return acc
    for k, x in v.items():
        y = acc.get(k)
        s = x * c if y is None else y + x * c
        if s:
            acc[k] = s
        elif y is not None:
            del acc[k]
    return acc


def vsub(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, x in b.items():
        y = out.get(k)
        s = -x if y is None else y - x
        if s:
            out[k] = s
        elif y is not None:
            del out[k]
    return out


def vscale(v: dict, c) -> dict:
    if not c:
        return {}
    return {k: x * c for k, x in v.items()}


def sparse(vec: Sequence) -> dict:
    return {i: x for i, x in enumerate(vec) if x}


def dense(v: dict, n: int, field) -> tuple:
    out = [field.zero] * n
    for i, x in v.items():
        out[i] = x
    return tuple(out)


# --------------------------------------------------------- elimination


def _rref_generic(rows: Iterable[dict]) -> dict[int, dict]:
    piv: dict[int, dict] = {}
    for r in rows:
        v = dict(r)
        for p in [k for k in v if k in piv]:
            c = v.get(p)
            if c:
                axpy(v, -c, piv[p])
        if not v:
            continue
        p = min(v)
        c = v[p]
        if c != 1:
            inv = 1 / c
            v = {k: x * inv for k, x in v.items()}
        for row in piv.values():
            f = row.get(p)
            if f:
                axpy(row, -f, v)
        piv[p] = v
    return piv


def _rref_gfp(rows: list[dict], ncols: int, field: PrimeField) -> dict[int, dict]:
    p = field.p
    nrows = len(rows)
    m = kernels.buf([0] * (nrows * ncols))
    for i, r in enumerate(rows):
        for j, x in r.items():
            m[i * ncols + j] = x.v
    pivots = kernels.gfp_rref(m, nrows, ncols, p)
    out = {}
    for i, c in enumerate(pivots):
        out[c] = {j: GFElem(m[i * ncols + j], p) for j in range(ncols) if m[i * ncols + j]}
    return out


def rref(rows: Iterable[dict], ncols: int, field) -> tuple[list[dict], list[int]]:
    """Reduced row echelon form of sparse rows; returns (rows, pivot columns)."""
    rows = [r for r in rows if r]
    if isinstance(field, PrimeField) and field.p < 2**31 and rows and (
            kernels.COMPILED or len(rows) * ncols <= 4096):
        piv = _rref_gfp(rows, ncols, field)
    else:
        piv = _rref_generic(rows)
    order = sorted(piv)
    return [piv[p] for p in order], order


class Solution(NamedTuple):
    particular: tuple
    kernel: list


def solve_sparse(equations: Iterable[tuple[dict, object]], nvars: int, field):
    """Solve sum_j a_j x_j = b for a list of (coefficients, b) pairs.

    Returns ``Solution`` (free variables set to zero) or None when the system
    is inconsistent.
    """
    aug = []
    for coeffs, b in equations:
        row = dict(coeffs)
        if b:
            row[nvars] = b
        if row:
            aug.append(row)
    rows, pivots = rref(aug, nvars + 1, field)
    if pivots and pivots[-1] == nvars:
        return None
    x = [field.zero] * nvars
    for r, p in zip(rows, pivots):
        x[p] = r.get(nvars, field.zero)
    pivset = set(pivots)
    kern = []
    for f in range(nvars):
        if f in pivset:
            continue
        v = [field.zero] * nvars
        v[f] = field.one
        for r, p in zip(rows, pivots):
            c = r.get(f)
            if c:
                v[p] = -c
        kern.append(tuple(v))
    return Solution(tuple(x), kern)


# ---------------------------------------------------------------- Mat


class Mat:
    """Immutable matrix stored by sparse columns (the images of basis vectors)."""

    __slots__ = ("field", "nrows", "ncols", "cols")

    def __init__(self, field, nrows: int, ncols: int, cols: Sequence[dict]):
        if len(cols) != ncols:
            raise DimensionMismatch(f"expected {ncols} columns, got {len(cols)}")
        clean = []
        for c in cols:
            d = {}
            for i, x in c.items():
                if not 0 <= i < nrows:
                    raise DimensionMismatch(f"row index {i} out of range {nrows}")
                x = field(x)
                if x:
                    d[i] = x
            clean.append(d)
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.cols = tuple(clean)

    @classmethod
    def from_rows(cls, field, rows: Sequence[Sequence], ncols: int | None = None) -> Mat:
        nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        cols = [{} for _ in range(ncols)]
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise DimensionMismatch("ragged matrix rows")
            for j, x in enumerate(row):
                if x:
                    cols[j][i] = x
        return cls(field, nrows, ncols, cols)

    @classmethod
    def identity(cls, field, n: int) -> Mat:
        return cls(field, n, n, [{i: field.one} for i in range(n)])

    @classmethod
    def zeros(cls, field, nrows: int, ncols: int) -> Mat:
        return cls(field, nrows, ncols, [{} for _ in range(ncols)])

    @classmethod
    def permutation(cls, field, perm: Sequence[int]) -> Mat:
        """Matrix sending e_j to e_perm[j]."""
        n = len(perm)
        return cls(field, n, n, [{perm[j]: field.one} for j in range(n)])

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def col(self, j: int) -> dict:
        return self.cols[j]

    def entry(self, i: int, j: int):
        return self.cols[j].get(i, self.field.zero)

    def rows(self) -> list[list]:
        out = [[self.field.zero] * self.ncols for _ in range(self.nrows)]
        for j, c in enumerate(self.cols):
            for i, x in c.items():
                out[i][j] = x
        return out

    def sparse_rows(self) -> list[dict]:
        out = [{} for _ in range(self.nrows)]
        for j, c in enumerate(self.cols):
            for i, x in c.items():
                out[i][j] = x
        return out

    def apply(self, v: dict) -> dict:
        acc: dict = {}
        for j, c in v.items():
            axpy(acc, c, self.cols[j])
        return acc

    def __call__(self, v):
        if isinstance(v, dict):
            return self.apply(v)
        if len(v) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.shape} matrix")
        return dense(self.apply(sparse(v)), self.nrows, self.field)

    def __matmul__(self, other: Mat) -> Mat:
        same_field(self.field, other.field)
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        return Mat(self.field, self.nrows, other.ncols, [self.apply(c) for c in other.cols])

    def __add__(self, other: Mat) -> Mat:
        self._check_same(other)
        return Mat(self.field, self.nrows, self.ncols,
                   [axpy(dict(a), self.field.one, b) for a, b in zip(self.cols, other.cols)])

    def __sub__(self, other: Mat) -> Mat:
        self._check_same(other)
        return Mat(self.field, self.nrows, self.ncols, [vsub(a, b) for a, b in zip(self.cols, other.cols)])

    def scale(self, c) -> Mat:
        return Mat(self.field, self.nrows, self.ncols, [vscale(a, self.field(c)) for a in self.cols])

    def _check_same(self, other):
        same_field(self.field, other.field)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and self.cols == other.cols)

    def __hash__(self):
        return hash((self.shape, tuple(tuple(sorted((i, str(x)) for i, x in c.items())) for c in self.cols)))

    def __repr__(self):
        return f"Mat({self.nrows}x{self.ncols}, {self.rows()!r})"

    def transpose(self) -> Mat:
        return Mat(self.field, self.ncols, self.nrows, self.sparse_rows())

    def tensor(self, other: Mat) -> Mat:
        return tensor(self, other)

    def is_identity(self) -> bool:
        return self.nrows == self.ncols and all(c == {j: 1} for j, c in enumerate(self.cols))

    def rank(self) -> int:
        return len(rref(self.sparse_rows(), self.ncols, self.field)[1])

    def kernel(self) -> list[tuple]:
        sol = solve_sparse([(r, self.field.zero) for r in self.sparse_rows()], self.ncols, self.field)
        return sol.kernel

    def image(self) -> Subspace:
        return Subspace.span(self.field, self.nrows, self.cols)

    def inverse(self) -> Mat:
        if self.nrows != self.ncols:
            raise DimensionMismatch("only square matrices are invertible")
        n = self.nrows
        rows = self.sparse_rows()
        aug = []
        for i, r in enumerate(rows):
            row = dict(r)
            row[n + i] = self.field.one
            aug.append(row)
        red, pivots = rref(aug, 2 * n, self.field)
        if pivots != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        inv_rows = [{j - n: x for j, x in r.items() if j >= n} for r in red[:n]]
        cols = [{} for _ in range(n)]
        for i, r in enumerate(inv_rows):
            for j, x in r.items():
                cols[j][i] = x
        return Mat(self.field, n, n, cols)

    def to_json(self) -> list[list[str]]:
        return [[self.field.fmt(x) for x in row] for row in self.rows()]


def tensor(f: Mat, g: Mat) -> Mat:
    """Kronecker product: (f (x) g)(e_i (x) e_j) = f(e_i) (x) g(e_j)."""
    same_field(f.field, g.field)
    cols = []
    for cf in f.cols:
        for cg in g.cols:
            col = {}
            for i1, a in cf.items():
                for i2, b in cg.items():
                    col[i1 * g.nrows + i2] = a * b
            cols.append(col)
    return Mat(f.field, f.nrows * g.nrows, f.ncols * g.ncols, cols)


def solve(A: Mat, b: Sequence):
    """Solve A x = b exactly.

    Returns ``Solution(particular, kernel)`` where ``kernel`` spans ker A, or
    None when b is not in the image of A.
    """
    if len(b) != A.nrows:
        raise DimensionMismatch(f"right-hand side has {len(b)} entries, matrix has {A.nrows} rows")
    bb = [A.field(x) for x in b]
    return solve_sparse(zip(A.sparse_rows(), bb), A.ncols, A.field)


# ----------------------------------------------------------- subspaces


class Subspace:
    """Subspace of k^n, held as its reduced row echelon basis."""

    __slots__ = ("field", "ambient", "rows", "pivots", "_pivset", "_pivrow")

    def __init__(self, field, ambient: int, rows: Sequence[dict], pivots: Sequence[int]):
        self.field = field
        self.ambient = ambient
        self.rows = tuple(rows)
        self.pivots = tuple(pivots)
        self._pivset = frozenset(self.pivots)
        self._pivrow = dict(zip(self.pivots, self.rows))

    @classmethod
    def span(cls, field, ambient: int, vectors: Iterable) -> Subspace:
        rows = []
        for v in vectors:
            if not isinstance(v, dict):
                if len(v) != ambient:
                    raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {ambient}")
                v = sparse([field(x) for x in v])
            elif any(not 0 <= k < ambient for k in v):
                raise DimensionMismatch(f"vector index out of range {ambient}")
            rows.append(v)
        red, piv = rref(rows, ambient, field)
        return cls(field, ambient, red, piv)

    @classmethod
    def zero(cls, field, ambient: int) -> Subspace:
        return cls(field, ambient, (), ())

    @classmethod
    def full(cls, field, ambient: int) -> Subspace:
        return cls(field, ambient, [{i: field.one} for i in range(ambient)], range(ambient))

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def basis(self) -> tuple[tuple, ...]:
        return tuple(dense(r, self.ambient, self.field) for r in self.rows)

    def complement(self) -> tuple[int, ...]:
        """Non-pivot coordinates: the canonical complement used for quotients."""
        return tuple(i for i in range(self.ambient) if i not in self._pivset)

    def reduce(self, v: dict) -> dict:
        """Normal form of v modulo the subspace, supported on the complement."""
        out = dict(v)
        # rows are fully reduced, so one pass over the pivots present suffices
        for p in [k for k in out if k in self._pivset]:
            c = out.get(p)
            if c:
                axpy(out, -c, self._pivrow[p])
        return out

    def contains(self, v) -> bool:
        if not isinstance(v, dict):
            v = sparse([self.field(x) for x in v])
        return not self.reduce(v)

    __contains__ = contains

    def _check(self, other: Subspace):
        same_field(self.field, other.field)
        if self.ambient != other.ambient:
            raise DimensionMismatch(f"ambient {self.ambient} vs {other.ambient}")

    def __add__(self, other: Subspace) -> Subspace:
        self._check(other)
        return Subspace.span(self.field, self.ambient, list(self.rows) + list(other.rows))

    def __and__(self, other: Subspace) -> Subspace:
        self._check(other)
        if not self.rows or not other.rows:
            return Subspace.zero(self.field, self.ambient)
        # x = sum a_i u_i lies in other iff sum a_i reduce_other(u_i) = 0
        images = [other.reduce(u) for u in self.rows]
        eqs = {}
        for i, img in enumerate(images):
            for k, x in img.items():
                eqs.setdefault(k, {})[i] = x
        sol = solve_sparse([(e, self.field.zero) for e in eqs.values()], len(self.rows), self.field)
        vecs = []
        for a in sol.kernel:
            acc: dict = {}
            for i, c in enumerate(a):
                axpy(acc, c, self.rows[i])
            vecs.append(acc)
        return Subspace.span(self.field, self.ambient, vecs)

    def __le__(self, other: Subspace) -> bool:
        self._check(other)
        return all(other.contains(r) for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field == other.field and self.ambient == other.ambient
                and self.pivots == other.pivots and self.rows == other.rows)

    def __hash__(self):
        return hash((self.ambient, self.pivots))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, basis={[list(b) for b in self.basis]!r})"

    def image(self, f: Mat) -> Subspace:
        return Subspace.span(f.field, f.nrows, [f.apply(r) for r in self.rows])

    def to_json(self) -> list[list[str]]:
        return [[self.field.fmt(x) for x in b] for b in self.basis]


class EchelonBuilder:
    """Incrementally grown semi-echelon basis.

    Each stored row has leading (smallest) index ``lead`` with coefficient 1
    and no two rows share a lead.  Rows are never modified after insertion,
    which closure algorithms rely on.
    """

    def __init__(self, field, ambient: int):
        self.field = field
        self.ambient = ambient
        self.rows: dict[int, dict] = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: dict) -> dict:
        out = dict(v)
        heap = [k for k in out if k in self.rows]
        heapq.heapify(heap)
        rows = self.rows
        while heap:
            k = heapq.heappop(heap)
            c = out.get(k)
            if not c:
                continue
            for j, x in rows[k].items():
                y = out.get(j)
                s = -x * c if y is None else y - x * c
                if s:
                    out[j] = s
                    if y is None and j in rows:
                        heapq.heappush(heap, j)
                elif y is not None:
                    del out[j]
        return out

    def add(self, v: dict) -> dict | None:
        """Insert v; returns the stored row, or None when v was already in the span."""
        r = self.reduce(v)
        if not r:
            return None
        lead = min(r)
        c = r[lead]
        if c != 1:
            inv = 1 / c
            r = {k: x * inv for k, x in r.items()}
        self.rows[lead] = r
        return r

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def subspace(self) -> Subspace:
        return Subspace.span(self.field, self.ambient, self.rows.values())


# ------------------------------------------------- polynomials and roots


def charpoly(rows: Sequence[Sequence], field) -> list:
    """Characteristic polynomial det(tI - M), coefficients from t^0 upward.

    Reduces to upper Hessenberg form by similarity, then uses the standard
    three-term expansion; valid over any field.
    """
    n = len(rows)
    H = [[field(x) for x in r] for r in rows]
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if H[i][j]), None)
        if piv is None:
            continue
        if piv != j + 1:
            H[piv], H[j + 1] = H[j + 1], H[piv]
            for r in H:
                r[piv], r[j + 1] = r[j + 1], r[piv]
        for k in range(j + 2, n):
            if not H[k][j]:
                continue
            u = H[k][j] / H[j + 1][j]
            H[k] = [a - u * b for a, b in zip(H[k], H[j + 1])]
            for r in H:
                r[j + 1] = r[j + 1] + u * r[k]

    def pmul_lin(p, c):  # (t - c) * p
        out = [field.zero] * (len(p) + 1)
        for i, a in enumerate(p):
            out[i + 1] = out[i + 1] + a
            out[i] = out[i] - c * a
        return out

    polys = [[field.one]]
    for k in range(1, n + 1):
        p = pmul_lin(polys[k - 1], H[k - 1][k - 1])
        prod = field.one
        for i in range(1, k):
            prod = prod * H[k - i][k - i - 1]
            coef = H[k - i - 1][k - 1] * prod
            if coef:
                q = polys[k - i - 1]
                for d, a in enumerate(q):
                    p[d] = p[d] - coef * a
        polys.append(p)
    return polys[n]


def roots_in_field(coeffs: Sequence, field) -> list:
    """Distinct roots lying in the field itself, in ascending order (Q) or residue order (GF(p))."""
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    if len(coeffs) <= 1:
        return []
    if isinstance(field, PrimeField):
        if field.p > 10**6:
            raise Unsupported(f"root finding over GF({field.p}) is outside the supported envelope")
        out = []
        for x in field.elements():
            acc = field.zero
            for a in reversed(coeffs):
                acc = acc * x + a
            if not acc:
                out.append(x)
        return out
    import sympy

    t = sympy.Symbol("t")
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)], t, domain="QQ")
    roots = poly.ground_roots()
    return sorted(Fraction(int(r.p), int(r.q)) for r in roots)
