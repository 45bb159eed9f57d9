"""Quotient constructions: ideal chains, quotient braces, coequalizers,
products of cocommutative braces and the free brace on a 2-Hopf algebra."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .brace import DIA, DOT, HopfBrace, brace_defects, check_brace
from .coalg import Coalgebra, is_coideal, is_cocommutative, projection_matrix
from .errors import (Certificate, DimensionMismatch, DoesNotFactor, InvalidStructure,
                     NotBraceIdeal, NotCocommutative, NotCoideal, Violation)
from .exactlin import EchelonBuilder, Mat, Subspace, axpy, dense, solve, tensor
from .multihopf import MultiHopf, MultiHopfMorphism, check_morphism


# ----------------------------------------------------------- ideal chains


@dataclass(frozen=True)
class PhaseStats:
    step: int
    mul: int
    dim: int
    added: int
    images: int

    def to_json(self) -> dict:
        return {"step": self.step, "mul": self.mul, "dim": self.dim, "added": self.added, "images": self.images}


@dataclass(frozen=True)
class IdealChainResult:
    closure: Subspace
    steps: tuple[Subspace, ...]
    iterations: int
    phases: tuple[PhaseStats, ...] = dc_field(default=())

    def dims(self) -> list[int]:
        return [s.dim for s in self.steps]

    def to_json(self) -> dict:
        return {"chain_dims": self.dims(), "iterations": self.iterations,
                "closure_dim": self.closure.dim, "phases": [p.to_json() for p in self.phases]}


def _close_phase(H: MultiHopf, J: Subspace, k: int) -> tuple[Subspace, int, int]:
    """Smallest subspace containing J that is a two-sided m_k ideal and S_k-stable.

    Products that overflow a truncation are skipped, so in truncated objects a
    vector is only multiplied by basis elements that keep it inside the bound.
    """
    F = H.field
    n = H.dim
    one = F.one
    S = H.antipodes.get(k)
    builder = EchelonBuilder(F, n)
    queue = []
    for r in J.rows:
        row = builder.add(r)
        if row is not None:
            queue.append(row)
    start = len(builder)
    images = 0
    while queue:
        v = queue.pop()
        cands = []
        for a in H.within(H.bound - H.maxdeg(v)) if H.truncated else range(n):
            cands.append(H.mulv(k, {a: one}, v))
            cands.append(H.mulv(k, v, {a: one}))
        if S is not None:
            cands.append(S.apply(v))
        for w in cands:
            if not w:
                continue
            images += 1
            row = builder.add(w)
            if row is not None:
                queue.append(row)
    return builder.subspace(), len(builder) - start, images


def is_hopf_ideal(H: MultiHopf, J: Subspace) -> Certificate:
    """Coideal, two-sided ideal for every multiplication, stable under every stored antipode."""
    cert = is_coideal(H.base, J)
    if not cert:
        return cert
    one = H.field.one
    for r, v in enumerate(J.rows):
        for i in range(H.nmuls):
            for a in range(H.dim):
                for side, w in (("left", H.mulv(i, {a: one}, v)), ("right", H.mulv(i, v, {a: one}))):
                    if w is not None and not J.contains(w):
                        return Certificate.failed(Violation("ideal", (r, a), w, index=i, detail=side))
        for i, S in H.antipodes.items():
            w = S.apply(v)
            if not J.contains(w):
                return Certificate.failed(Violation("antipode-stability", (r,), w, index=i))
    return Certificate.passed()


def ideal_closure(H: MultiHopf, J: Subspace) -> IdealChainResult:
    """Alternate (m_0 ideal + S) and (m_1 ideal + T) closures until nothing changes.

    Each phase output is checked to be a coideal.  ``iterations`` counts
    rounds of two phases; ``steps`` lists the chain without intermediate
    repeats, ending with the repeated final subspace.
    """
    if J.ambient != H.dim:
        raise DimensionMismatch(f"subspace of k^{J.ambient} in an algebra of dimension {H.dim}")
    if J.field != H.field:
        raise DimensionMismatch("subspace and algebra over different fields")
    cert = is_coideal(H.base, J)
    if not cert:
        raise NotCoideal(cert.violation)
    nm = max(H.nmuls, 1)
    cur = J
    steps = [J]
    stats = []
    n = 0
    while True:
        k = n % nm
        nxt, added, images = _close_phase(H, cur, k) if H.nmuls else (cur, 0, 0)
        stats.append(PhaseStats(n + 1, k, nxt.dim, added, images))
        c = is_coideal(H.base, nxt)
        if not c:
            raise AssertionError(f"phase {n + 1} produced a non-coideal: {c.violation}")
        if _stable_run(stats, nm):
            steps.append(nxt)
            break
        if nxt != cur:
            steps.append(nxt)
        cur = nxt
        n += 1
    closure = cur
    final = is_hopf_ideal(H, closure)
    if not final:
        raise AssertionError(f"closure is not a Hopf ideal: {final.violation}")
    iterations = (len(stats) + nm - 1) // nm
    return IdealChainResult(closure, tuple(steps), iterations, tuple(stats))


def _stable_run(stats: list[PhaseStats], nm: int) -> bool:
    """True once every phase type has run and the last nm - 1 phases changed nothing.

    Each phase output is closed under that phase, so the subspace is then
    closed under all of them.
    """
    if len(stats) < nm:
        return False
    return all(s.added == 0 for s in stats[len(stats) - nm + 1:])


# --------------------------------------------------------------- quotients


def quotient_multihopf(H: MultiHopf, J: Subspace, check: bool = True) -> tuple[MultiHopf, Mat]:
    """H/J on the complement basis of J, with the projection matrix."""
    if check:
        cert = is_hopf_ideal(H, J)
        if not cert:
            raise NotBraceIdeal(cert.violation)
    comp = J.complement()
    pi = projection_matrix(J)
    F = H.field
    n, m = H.dim, len(comp)
    deltas = []
    for q in comp:
        acc: dict = {}
        for t, c in H.base.delta(q).items():
            for j, x in pi.col(t // n).items():
                for k, y in pi.col(t % n).items():
                    axpy(acc, c * x * y, {j * m + k: F.one})
        deltas.append(acc)
    base = Coalgebra.from_deltas(F, [H.labels[q] for q in comp], deltas, [H.base.counit[q] for q in comp])
    muls = []
    for i in range(H.nmuls):
        quads = []
        for s, a in enumerate(comp):
            for t, b in enumerate(comp):
                p = H.prod(i, a, b)
                if p is None:
                    continue
                for c, x in pi.apply(p).items():
                    quads.append((s, t, c, x))
        muls.append(quads)
    anti = {}
    for i, S in H.antipodes.items():
        anti[i] = Mat(F, m, m, [pi.apply(S.col(q)) for q in comp])
    unit = dense(pi.apply(H.unit_vec), m, F)
    grading = tuple(H.grading[q] for q in comp) if H.truncated else ()
    Q = MultiHopf(base, unit, tuple(muls), anti, grading, H.bound)
    return Q, pi


def quotient_brace(B: HopfBrace, J: Subspace) -> tuple[HopfBrace, MultiHopfMorphism]:
    Q, pi = quotient_multihopf(B.carrier, J)
    cert = check_brace(Q)
    if not cert:
        raise AssertionError(f"quotient failed the brace check: {cert.violation}")
    proj = MultiHopfMorphism(B.carrier, Q, pi)
    mc = check_morphism(proj)
    if not mc:
        raise AssertionError(f"projection is not a morphism: {mc.violation}")
    return cert.value, proj


# -------------------------------------------------------------- coequalizers


@dataclass(frozen=True)
class CoequalizerResult:
    quotient: HopfBrace
    projection: MultiHopfMorphism
    generators: Subspace
    chain: IdealChainResult


def _require_morphism(f: MultiHopfMorphism, what: str) -> None:
    cert = check_morphism(f)
    if not cert:
        raise InvalidStructure(cert.violation, what)


def coequalizer(f: MultiHopfMorphism, g: MultiHopfMorphism) -> CoequalizerResult:
    if f.source is not g.source and not f.source.same_constants(g.source):
        raise DimensionMismatch("morphisms have different sources")
    if f.target is not g.target and not f.target.same_constants(g.target):
        raise DimensionMismatch("morphisms have different targets")
    _require_morphism(f, "morphism f")
    _require_morphism(g, "morphism g")
    B = HopfBrace.certify(f.target)
    diffs = [axpy(dict(f.matrix.col(i)), -B.field.one, g.matrix.col(i))
             for i in range(f.source.dim)]
    I0 = Subspace.span(B.field, B.dim, [d for d in diffs if d])
    chain = ideal_closure(B.carrier, I0)
    Q, proj = quotient_brace(B, chain.closure)
    if proj.matrix @ f.matrix != proj.matrix @ g.matrix:
        raise AssertionError("projection does not coequalize the pair")
    return CoequalizerResult(Q, proj, I0, chain)


def section(pi: Mat) -> Mat:
    """A right inverse of a surjective matrix (free variables set to zero)."""
    F = pi.field
    cols = []
    for t in range(pi.nrows):
        b = [F.one if i == t else F.zero for i in range(pi.nrows)]
        sol = solve(pi, b)
        if sol is None:
            raise InvalidStructure(Violation("surjectivity", (t,), detail="projection is not onto"), "projection")
        cols.append({i: x for i, x in enumerate(sol.particular) if x})
    return Mat(F, pi.ncols, pi.nrows, cols)


def factor_through(pi: MultiHopfMorphism, h: MultiHopfMorphism) -> MultiHopfMorphism:
    """The unique h' with h' . pi = h, or ``DoesNotFactor`` with a kernel witness."""
    if pi.source.dim != h.source.dim:
        raise DimensionMismatch("pi and h must share their source")
    P = pi.matrix
    if P.rank() != P.nrows:
        raise InvalidStructure(Violation("surjectivity", (), detail="pi is not onto"), "projection")
    for k in P.kernel():
        kv = {i: x for i, x in enumerate(k) if x}
        img = h.matrix.apply(kv)
        if img:
            raise DoesNotFactor(kv, img)
    hp = h.matrix @ section(P)
    if hp @ P != h.matrix:
        raise AssertionError("factorization does not reproduce h")
    out = MultiHopfMorphism(pi.target, h.target, hp)
    cert = check_morphism(out)
    if not cert:
        raise AssertionError(f"induced map is not a morphism: {cert.violation}")
    return out


# ------------------------------------------------------------------ products


@dataclass(frozen=True)
class ProductResult:
    product: HopfBrace
    p1: MultiHopfMorphism
    p2: MultiHopfMorphism


def _tensor_carrier(A: MultiHopf, B: MultiHopf) -> MultiHopf:
    F = A.field
    na, nb = A.dim, B.dim
    N = na * nb
    labels = [f"({x},{y})" for x in A.labels for y in B.labels]
    deltas = []
    for a in range(na):
        for b in range(nb):
            acc: dict = {}
            for s, x in A.base.delta(a).items():
                a1, a2 = divmod(s, na)
                for t, y in B.base.delta(b).items():
                    b1, b2 = divmod(t, nb)
                    # middle swap: (a1 a2)(b1 b2) -> (a1 b1) (x) (a2 b2)
                    axpy(acc, x * y, {(a1 * nb + b1) * N + a2 * nb + b2: F.one})
            deltas.append(acc)
    counit = [A.base.counit[a] * B.base.counit[b] for a in range(na) for b in range(nb)]
    base = Coalgebra.from_deltas(F, labels, deltas, counit)
    unit = [A.unit[a] * B.unit[b] for a in range(na) for b in range(nb)]
    muls = []
    for i in range(A.nmuls):
        quads = []
        for a1 in range(na):
            for b1 in range(nb):
                for a2 in range(na):
                    pa = A.prod(i, a1, a2)
                    for b2 in range(nb):
                        pb = B.prod(i, b1, b2)
                        for c1, x in pa.items():
                            for c2, y in pb.items():
                                quads.append((a1 * nb + b1, a2 * nb + b2, c1 * nb + c2, x * y))
        muls.append(quads)
    anti = {i: tensor(A.antipodes[i], B.antipodes[i]) for i in A.antipodes if i in B.antipodes}
    return MultiHopf(base, tuple(unit), tuple(muls), anti)


def product_cocomm(A: HopfBrace, B: HopfBrace) -> ProductResult:
    """A (x) B with componentwise structure; only for cocommutative braces."""
    for name, X in (("first", A), ("second", B)):
        if not is_cocommutative(X.base):
            raise NotCocommutative(f"the {name} factor is not cocommutative; "
                                   "the tensor product is not a product in that case")
    if A.field != B.field:
        raise DimensionMismatch("factors over different fields")
    P = HopfBrace.certify(_tensor_carrier(A.carrier, B.carrier))
    F = A.field
    na, nb = A.dim, B.dim
    p1 = Mat(F, na, na * nb, [{a: B.base.counit[b]} if B.base.counit[b] else {}
                              for a in range(na) for b in range(nb)])
    p2 = Mat(F, nb, na * nb, [{b: A.base.counit[a]} if A.base.counit[a] else {}
                              for a in range(na) for b in range(nb)])
    m1 = MultiHopfMorphism(P.carrier, A.carrier, p1)
    m2 = MultiHopfMorphism(P.carrier, B.carrier, p2)
    for m in (m1, m2):
        c = check_morphism(m)
        if not c:
            raise AssertionError(f"projection failed: {c.violation}")
    return ProductResult(P, m1, m2)


def pair_into(prod: ProductResult, f: MultiHopfMorphism, g: MultiHopfMorphism) -> MultiHopfMorphism:
    """The map c -> f(c1) (x) g(c2) into the product, certified as a morphism."""
    C = f.source
    if g.source.dim != C.dim:
        raise DimensionMismatch("f and g must share their source")
    n = C.dim
    nb = g.target.dim
    cols = []
    for c in range(n):
        acc: dict = {}
        for t, x in C.base.delta(c).items():
            c1, c2 = divmod(t, n)
            for i, y in f.matrix.col(c1).items():
                for j, z in g.matrix.col(c2).items():
                    axpy(acc, x * y * z, {i * nb + j: C.field.one})
        cols.append(acc)
    out = MultiHopfMorphism(C, prod.product.carrier, Mat(C.field, prod.product.dim, n, cols))
    cert = check_morphism(out)
    if not cert:
        raise InvalidStructure(cert.violation, "paired morphism")
    return out


# ---------------------------------------------------------------- free brace


@dataclass(frozen=True)
class FreeBraceResult:
    brace: HopfBrace
    projection: MultiHopfMorphism
    defects: Subspace
    chain: IdealChainResult


def free_brace(H: MultiHopf) -> FreeBraceResult:
    """Quotient of a cocommutative 2-Hopf algebra by the ideal generated by all
    values x <> (y . z) - (x1 <> y) . S(x2) . (x3 <> z)."""
    if H.nmuls != 2 or DOT not in H.antipodes or DIA not in H.antipodes:
        raise InvalidStructure(Violation("shape", (), detail="need two multiplications with antipodes"),
                               "2-Hopf algebra")
    if not is_cocommutative(H.base):
        raise NotCocommutative("the free brace construction needs a cocommutative input")
    from .multihopf import check_multibialgebra

    cert = check_multibialgebra(H)
    if not cert:
        raise InvalidStructure(cert.violation, "2-Hopf algebra")
    J0 = Subspace.span(H.field, H.dim, [d for _, _, _, d in brace_defects(H)])
    chain = ideal_closure(H, J0)
    Q, pi = quotient_multihopf(H, chain.closure)
    F = HopfBrace.certify(Q)
    proj = MultiHopfMorphism(H, Q, pi)
    mc = check_morphism(proj)
    if not mc:
        raise AssertionError(f"projection is not a morphism: {mc.violation}")
    return FreeBraceResult(F, proj, J0, chain)


def span_of(H: MultiHopf, vectors: Iterable[Sequence]) -> Subspace:
    return Subspace.span(H.field, H.dim, list(vectors))
