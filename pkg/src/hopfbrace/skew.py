"""Skew braces: finite sets with two group laws sharing a unit.

Elements are indices 0..n-1; ``dot[a][b]`` and ``dia[a][b]`` are the two
products.  The compatibility checked is

    a <> (b . c) == (a <> b) . a^-1 . (a <> c)

with a^-1 the inverse for the dot law.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from . import kernels
from .errors import Certificate, MalformedInput, Unsupported, Violation

MAX_ORDER = 6


@dataclass(frozen=True)
class SkewBrace:
    labels: tuple[str, ...]
    dot: tuple[tuple[int, ...], ...]
    dia: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.labels)
        object.__setattr__(self, "labels", tuple(str(s) for s in self.labels))
        object.__setattr__(self, "dot", tuple(tuple(int(x) for x in r) for r in self.dot))
        object.__setattr__(self, "dia", tuple(tuple(int(x) for x in r) for r in self.dia))
        if len(set(self.labels)) != n:
            raise MalformedInput(f"duplicate labels {self.labels}")
        for name, t in (("dot", self.dot), ("diamond", self.dia)):
            if len(t) != n or any(len(r) != n for r in t):
                raise MalformedInput(f"{name} table is not {n}x{n}")
            if any(not 0 <= x < n for r in t for x in r):
                raise MalformedInput(f"{name} table has an entry out of range")

    @property
    def size(self) -> int:
        return len(self.labels)

    @cached_property
    def unit(self) -> int:
        """Index of the dot-identity (-1 if there is none)."""
        n = self.size
        for e in range(n):
            if all(self.dot[e][x] == x and self.dot[x][e] == x for x in range(n)):
                return e
        return -1

    @cached_property
    def dot_inv(self) -> tuple[int, ...]:
        return _inverses(self.dot, self.unit)

    @cached_property
    def dia_inv(self) -> tuple[int, ...]:
        return _inverses(self.dia, self.unit)

    def lam(self, a: int, b: int) -> int:
        """lambda_a(b) = a^-1 . (a <> b)."""
        return self.dot[self.dot_inv[a]][self.dia[a][b]]

    @cached_property
    def key(self) -> tuple:
        return canonical_form(self)

    def to_json(self) -> dict:
        return {"kind": "skewbrace", "labels": list(self.labels),
                "dot": [list(r) for r in self.dot], "diamond": [list(r) for r in self.dia]}

    @classmethod
    def from_json(cls, obj: dict) -> SkewBrace:
        try:
            return cls(tuple(obj["labels"]), tuple(map(tuple, obj["dot"])), tuple(map(tuple, obj["diamond"])))
        except (KeyError, TypeError) as e:
            raise MalformedInput(f"bad skew brace object: {e}") from e

    def to_text(self) -> str:
        out = []
        for name, t in (("dot", self.dot), ("diamond", self.dia)):
            out.append(f"{name}:")
            order = _unit_first(self.size, self.unit)
            for a in order:
                out.append(" ".join(self.labels[t[a][b]] for b in order))
        return "\n".join(out) + "\n"


def _unit_first(n: int, u: int) -> list[int]:
    if u < 0:
        return list(range(n))
    return [u] + [x for x in range(n) if x != u]


def _inverses(t, u) -> tuple[int, ...]:
    n = len(t)
    out = []
    for a in range(n):
        inv = next((b for b in range(n) if u >= 0 and t[a][b] == u and t[b][a] == u), -1)
        out.append(inv)
    return tuple(out)


def parse_cayley_text(text: str) -> SkewBrace:
    """Parse two Cayley tables given as rows of labels.

    The file has a ``dot:`` section and a ``diamond:`` section.  Each section
    lists the table rows with the unit's row first; that first row fixes the
    label order.  Blank lines and ``#`` comments are ignored.
    """
    sections: dict[str, list[list[str]]] = {}
    cur = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.endswith(":"):
            cur = line[:-1].strip().lower()
            if cur not in ("dot", "diamond"):
                raise MalformedInput(f"unknown section {cur!r}")
            sections[cur] = []
            continue
        if cur is None:
            raise MalformedInput("table row before any section header")
        sections[cur].append(line.replace(",", " ").split())
    if set(sections) != {"dot", "diamond"}:
        raise MalformedInput("need both a 'dot:' and a 'diamond:' section")
    labels = sections["dot"][0]
    n = len(labels)
    idx = {s: i for i, s in enumerate(labels)}
    if len(idx) != n:
        raise MalformedInput("duplicate labels in the first row")
    tables = []
    for name in ("dot", "diamond"):
        rows = sections[name]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise MalformedInput(f"{name} table is not {n}x{n}")
        try:
            coded = [[idx[s] for s in r] for r in rows]
        except KeyError as e:
            raise MalformedInput(f"unknown label {e.args[0]!r} in {name} table") from None
        # row i is indexed by its own leading entry (unit . x = x for the row label x)
        order = [r[0] for r in coded]
        if sorted(order) != list(range(n)):
            raise MalformedInput(f"{name} rows do not start with distinct labels")
        table = [None] * n
        for r, a in zip(coded, order):
            table[a] = r
        tables.append(tuple(tuple(r) for r in table))
    if sections["diamond"][0] != labels:
        raise MalformedInput("the first row of both tables must be the unit row in the same label order")
    return SkewBrace(tuple(labels), tables[0], tables[1])


# ------------------------------------------------------------------ checks


def _flat(t) -> object:
    return kernels.buf([x for r in t for x in r])


def _group_violation(t, name: str) -> Violation | None:
    n = len(t)
    flat = _flat(t)
    trip = kernels.assoc_violation(flat, n)
    if trip is not None:
        return Violation(f"{name}-associativity", tuple(trip))
    if not kernels.is_latin(flat, n):
        return Violation(f"{name}-latin", (), detail="some row or column is not a permutation")
    return None


def check_skew_brace(B: SkewBrace) -> Certificate:
    n = B.size
    if n == 0:
        return Certificate.failed(Violation("nonempty", ()))
    u = B.unit
    if u < 0:
        return Certificate.failed(Violation("dot-unit", (), detail="dot has no two-sided identity"))
    if any(B.dia[u][x] != x or B.dia[x][u] != x for x in range(n)):
        return Certificate.failed(Violation("shared-unit", (u,), detail="dot identity is not a diamond identity"))
    for t, name in ((B.dot, "dot"), (B.dia, "diamond")):
        v = _group_violation(t, name)
        if v:
            return Certificate.failed(v)
    trip = kernels.brace_violation(_flat(B.dot), _flat(B.dia), kernels.buf(B.dot_inv), n)
    if trip is not None:
        a, b, c = trip
        lhs = B.dia[a][B.dot[b][c]]
        rhs = B.dot[B.dot[B.dia[a][b]][B.dot_inv[a]]][B.dia[a][c]]
        return Certificate.failed(Violation("brace", tuple(trip), (B.labels[lhs], B.labels[rhs])))
    return Certificate.passed()


def trivial_skew_brace(labels: Sequence[str], table) -> SkewBrace:
    return SkewBrace(tuple(labels), table, table)


def opposite_skew_brace(labels: Sequence[str], table) -> SkewBrace:
    n = len(table)
    return SkewBrace(tuple(labels), table, tuple(tuple(table[b][a] for b in range(n)) for a in range(n)))


def direct_product(B1: SkewBrace, B2: SkewBrace) -> SkewBrace:
    """Componentwise product; element (a, b) has index a*|B2| + b."""
    n1, n2 = B1.size, B2.size
    labels = tuple(f"({x},{y})" for x in B1.labels for y in B2.labels)

    def prod(t1, t2):
        return tuple(tuple(t1[a1][b1] * n2 + t2[a2][b2]
                           for b1 in range(n1) for b2 in range(n2))
                     for a1 in range(n1) for a2 in range(n2))

    return SkewBrace(labels, prod(B1.dot, B2.dot), prod(B1.dia, B2.dia))


def is_skew_morphism(f: Sequence[int], B1: SkewBrace, B2: SkewBrace) -> bool:
    n = B1.size
    return all(f[B1.dot[a][b]] == B2.dot[f[a]][f[b]] and f[B1.dia[a][b]] == B2.dia[f[a]][f[b]]
               for a in range(n) for b in range(n))


# ------------------------------------------------------------- canonical forms


def _canon_perm_buffer(n: int, u: int):
    rest = [x for x in range(n) if x != u]
    flat = []
    count = 0
    for p in itertools.permutations(range(1, n)):
        s = [0] * n
        for src, dst in zip(rest, p):
            s[src] = dst
        flat.extend(s)
        count += 1
    return kernels.buf(flat), count


def canonical_form(B: SkewBrace) -> tuple:
    """Lexicographically least (dot, diamond) pair over relabellings sending the unit to 0."""
    n = B.size
    perms, k = _canon_perm_buffer(n, max(B.unit, 0))
    return tuple(kernels.canonical_pair(_flat(B.dot), _flat(B.dia), n, perms, k))


def _labels(n: int) -> tuple[str, ...]:
    return ("e",) + tuple(f"x{i}" for i in range(1, n))


def from_canonical(key: tuple, n: int) -> SkewBrace:
    nn = n * n
    dot = tuple(tuple(key[a * n:(a + 1) * n]) for a in range(n))
    dia = tuple(tuple(key[nn + a * n:nn + (a + 1) * n]) for a in range(n))
    return SkewBrace(_labels(n), dot, dia)


def isomorphic(B1: SkewBrace, B2: SkewBrace) -> bool:
    return B1.size == B2.size and B1.key == B2.key


# -------------------------------------------------------------- enumeration


def _group_tables(n: int) -> list[list[int]]:
    """Every group law on range(n) with identity 0, as flat tables."""
    t = [-1] * (n * n)
    for a in range(n):
        t[a] = a
        t[a * n] = a
    rows_used = [set([a]) for a in range(n)]
    cols_used = [set([b]) for b in range(n)]
    rows_used[0] = set(range(n))
    cols_used[0] = set(range(n))
    cells = [(a, b) for a in range(1, n) for b in range(1, n)]
    out = []

    def assoc_ok() -> bool:
        # only triples whose products are all already filled
        for a in range(1, n):
            for b in range(1, n):
                ab = t[a * n + b]
                if ab < 0:
                    continue
                for c in range(1, n):
                    bc = t[b * n + c]
                    if bc < 0:
                        continue
                    l, r = t[ab * n + c], t[a * n + bc]
                    if l >= 0 and r >= 0 and l != r:
                        return False
        return True

    def rec(k: int):
        if k == len(cells):
            if kernels.assoc_violation(kernels.buf(t), n) is None:
                out.append(list(t))
            return
        a, b = cells[k]
        for v in range(n):
            if v in rows_used[a] or v in cols_used[b]:
                continue
            t[a * n + b] = v
            rows_used[a].add(v)
            cols_used[b].add(v)
            if b < n - 1 or assoc_ok():
                rec(k + 1)
            rows_used[a].discard(v)
            cols_used[b].discard(v)
            t[a * n + b] = -1

    rec(0)
    return out


def groups_up_to_iso(n: int) -> list[tuple[tuple[int, ...], ...]]:
    seen = {}
    for t in _group_tables(n):
        tab = tuple(tuple(t[a * n:(a + 1) * n]) for a in range(n))
        key = canonical_form(SkewBrace(_labels(n), tab, tab))
        seen.setdefault(key[:n * n], tab)
    return [tuple(tuple(k[a * n:(a + 1) * n]) for a in range(n)) for k in sorted(seen)]


def automorphisms(table) -> list[tuple[int, ...]]:
    n = len(table)
    out = []
    for p in itertools.permutations(range(1, n)):
        s = (0,) + p
        if all(s[table[a][b]] == table[s[a]][s[b]] for a in range(n) for b in range(n)):
            out.append(s)
    return out


def enumerate_skew_braces(n: int) -> list[SkewBrace]:
    """All skew braces of order n up to isomorphism, in canonical-key order.

    For each group (G, .) the skew braces with that additive group are the
    maps lambda: G -> Aut(G) with lambda_e = id for which a <> b = a . lambda_a(b)
    is associative; each candidate is certified and reduced to its canonical form.
    """
    if not 1 <= n <= MAX_ORDER:
        raise Unsupported(f"skew brace enumeration is limited to orders 1..{MAX_ORDER}")
    keys = set()
    for dot in groups_up_to_iso(n):
        auts = automorphisms(dot)
        ident = tuple(range(n))
        for choice in itertools.product(auts, repeat=n - 1):
            lam = (ident,) + choice
            dia = tuple(tuple(dot[a][lam[a][b]] for b in range(n)) for a in range(n))
            if kernels.assoc_violation(_flat(dia), n) is not None:
                continue
            B = SkewBrace(_labels(n), dot, dia)
            if not check_skew_brace(B):
                continue
            keys.add(B.key)
    return [from_canonical(k, n) for k in sorted(keys)]


# ---------------------------------------------------- set-theoretic solutions


@dataclass(frozen=True)
class SetYBE:
    brace: SkewBrace
    lam: tuple[tuple[int, ...], ...]
    rho: tuple[tuple[int, ...], ...]

    def __call__(self, a: int, b: int) -> tuple[int, int]:
        return self.lam[a][b], self.rho[b][a]

    def tables(self):
        n = self.brace.size
        r1 = [self.lam[a][b] for a in range(n) for b in range(n)]
        r2 = [self.rho[b][a] for a in range(n) for b in range(n)]
        return r1, r2

    def verify(self) -> Certificate:
        n = self.brace.size
        r1, r2 = self.tables()
        if len(set(zip(r1, r2))) != n * n:
            return Certificate.failed(Violation("bijectivity", ()))
        trip = kernels.set_braid_violation(kernels.buf(r1), kernels.buf(r2), n)
        if trip is not None:
            return Certificate.failed(Violation("braid", tuple(trip)))
        return Certificate.passed()


def set_ybe_map(B: SkewBrace) -> SetYBE:
    """r(a, b) = (lambda_a(b), rho_b(a)) with rho_b(a) = lambda_a(b)^{<>-1} <> a <> b."""
    cert = check_skew_brace(B)
    cert.raise_for("skew brace")
    n = B.size
    lam = tuple(tuple(B.lam(a, b) for b in range(n)) for a in range(n))
    rho = tuple(tuple(B.dia[B.dia[B.dia_inv[lam[a][b]]][a]][b] for a in range(n)) for b in range(n))
    return SetYBE(B, lam, rho)
