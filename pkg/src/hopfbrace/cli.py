"""Command-line front end.

Every subcommand prints one JSON report on stdout.  Exit status: 0 when the
input is certified or the construction succeeded, 1 when a mathematical
violation was found (the report carries the witness), 2 for usage or
parse errors (the report carries an ``error`` object).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .brace import HopfBrace, check_brace, check_qybe, group_algebra, ybe_operator
from .coalg import Coalgebra
from .construct import coequalizer, free_brace, ideal_closure, product_cocomm, quotient_multihopf
from .corpus import canonical_braces, kG, kZ4_morphisms, skew_braces, sweedler
from .errors import (DimensionMismatch, DoesNotFactor, FieldMismatch, HopfError, InvalidStructure,
                     MalformedInput, NoAntipode, Unsupported, Violation)
from .exactlin import Subspace
from .formats import (_parse, digest, dumps, morphism_doc, read_json, read_morphism, read_skew,
                      read_structure, structure_doc)
from .freecolim import coproduct_2bialg_truncated, coproduct_brace_truncated
from .multihopf import MultiHopf, check_multibialgebra, solve_antipode
from .skew import enumerate_skew_braces

USAGE_ERRORS = (MalformedInput, FieldMismatch, DimensionMismatch, Unsupported)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _inputs(*paths) -> dict:
    out = {}
    for p in paths:
        try:
            out[str(p)] = digest(read_json(p)) if not str(p).endswith(".txt") else digest(Path(p).read_text())
        except (MalformedInput, OSError):
            out[str(p)] = None
    return out


def _fmt(F):
    return F.fmt if F is not None else str


def _carrier(x) -> MultiHopf:
    if isinstance(x, HopfBrace):
        return x.carrier
    if isinstance(x, Coalgebra):
        raise MalformedInput("expected an algebra structure, got a coalgebra")
    return x


def _brace(x) -> HopfBrace:
    if not isinstance(x, HopfBrace):
        raise MalformedInput("expected a file of kind hopfbrace")
    return x


def _parse_span(text: str, H: MultiHopf) -> Subspace:
    try:
        vecs = json.loads(Path(text).read_text()) if Path(text).is_file() else json.loads(text)
        rows = [[H.field(x) for x in v] for v in vecs]
    except (json.JSONDecodeError, TypeError, ValueError) as e:
        raise MalformedInput(f"bad --span: {e}") from e
    if any(len(r) != H.dim for r in rows):
        raise MalformedInput(f"span vectors must have length {H.dim}")
    return Subspace.span(H.field, H.dim, rows)


# ------------------------------------------------------------- subcommands


def cmd_check(a) -> tuple[int, dict]:
    obj = read_structure(a.file)
    kind = structure_doc(obj)["kind"]
    return 0, {"kind": kind, "status": f"{kind}: ok", "dim": obj.dim}


def cmd_antipode(a):
    kind, H = _parse(read_json(a.file))
    if isinstance(H, Coalgebra):
        raise MalformedInput("a coalgebra has no multiplication")
    check_multibialgebra(H, antipodes=False).raise_for("multi-bialgebra")
    if not 0 <= a.mul < H.nmuls:
        raise MalformedInput(f"--mul {a.mul} out of range 0..{H.nmuls - 1}")
    S = solve_antipode(H, a.mul)
    return 0, {"mul": a.mul, "antipode": S.to_json(), "status": "antipode: ok"}


def cmd_brace_check(a):
    kind, H = _parse(read_json(a.file))
    H = _carrier(H)
    if H.nmuls != 2:
        raise MalformedInput("a Hopf brace needs two multiplications")
    missing = {i: solve_antipode(H, i) for i in range(2) if i not in H.antipodes}
    if missing:
        H = H.with_antipodes({**H.antipodes, **missing})
    cert = check_brace(H)
    return (0 if cert else 1), {"certificate": cert.to_json(_fmt(H.field)),
                                "status": "hopfbrace: ok" if cert else "hopfbrace: violation"}


def cmd_ybe(a):
    B = _brace(read_structure(a.file))
    r = ybe_operator(B)
    rep = {"dim": B.dim, "matrix": r.matrix.to_json(), "rmatrix": r.rmatrix.to_json()}
    code = 0
    if a.verify:
        q = check_qybe(r)
        inv = r.is_invertible()
        rep["qybe"] = q.to_json(_fmt(B.field))
        rep["invertible"] = inv
        code = 0 if (q and inv) else 1
        rep["status"] = "qybe: certified" if code == 0 else "qybe: violation"
    return code, rep


def cmd_skew(a):
    if a.file:
        B = read_skew(a.file)
        return 0, {"status": "skewbrace: ok", "brace": B.to_json()}
    if a.order is None:
        raise UsageError("skew needs --order n or a FILE")
    found = enumerate_skew_braces(a.order)
    return 0, {"order": a.order, "count": len(found), "braces": [B.to_json() for B in found]}


def cmd_group_algebra(a):
    B = read_skew(a.file)
    H = group_algebra(B)
    return 0, {"structure": structure_doc(H), "status": "hopfbrace: ok"}


def cmd_ideal_closure(a):
    H = _carrier(read_structure(a.file))
    J = _parse_span(a.span, H)
    res = ideal_closure(H, J)
    return 0, {"chain": res.to_json(), "closure": res.closure.to_json()}


def cmd_quotient(a):
    obj = read_structure(a.file)
    H = _carrier(obj)
    J = _parse_span(a.span, H)
    res = ideal_closure(H, J)
    if res.closure.dim != J.dim:
        raise InvalidStructure(
            Violation("ideal", (), detail=f"span is not closed; its closure has dimension {res.closure.dim}"), "Hopf ideal")
    Q, pi = quotient_multihopf(H, J)
    out = check_brace(Q) if isinstance(obj, HopfBrace) else None
    rep = {"structure": structure_doc(out.value if out else Q), "projection": pi.to_json(), "dim": Q.dim}
    return 0, rep


def cmd_coeq(a):
    f, g = read_morphism(a.f), read_morphism(a.g)
    res = coequalizer(f, g)
    return 0, {"dim": res.quotient.dim, "chain": res.chain.to_json(), "structure": structure_doc(res.quotient),
               "projection": res.projection.matrix.to_json(), "status": "coequalizer: ok"}


def cmd_product(a):
    A, B = _brace(read_structure(a.a)), _brace(read_structure(a.b))
    res = product_cocomm(A, B)
    return 0, {"dim": res.product.dim, "structure": structure_doc(res.product),
               "p1": res.p1.matrix.to_json(), "p2": res.p2.matrix.to_json(), "status": "product: ok"}


def cmd_free_brace(a):
    H = _carrier(read_structure(a.file))
    res = free_brace(H)
    return 0, {"dim": res.brace.dim, "defects_dim": res.defects.dim, "chain": res.chain.to_json(),
               "structure": structure_doc(res.brace), "status": "free brace: ok"}


def cmd_coproduct(a):
    objs = [read_structure(p) for p in a.files]
    if a.brace:
        res = coproduct_brace_truncated([_brace(o) for o in objs], a.degree)
    else:
        res = coproduct_2bialg_truncated([_carrier(o) for o in objs], a.degree)
    rep = res.to_json()
    ok = all(res.certificates.values())
    rep["status"] = "coproduct: ok" if ok else "coproduct: violation"
    return (0 if ok else 1), rep


def corpus_documents() -> dict[str, dict]:
    """File name -> document for the built-in corpus."""
    docs = {}
    for name, B in canonical_braces().items():
        base, kind = name.split("-")
        docs[f"k{base}-{kind}-brace.json" if base != "H4" else f"H4-{kind}-brace.json"] = structure_doc(B)
    for name in ("Z2", "Z4", "Z2xZ2", "S3"):
        docs[f"k{name}.json"] = structure_doc(kG(name))
    docs["H4.json"] = structure_doc(sweedler())
    ident, inv = kZ4_morphisms()
    docs["kZ4-id.json"] = morphism_doc(ident)
    docs["kZ4-inv.json"] = morphism_doc(inv)
    counters: dict[int, int] = {}
    for B in skew_braces(6):
        k = counters.get(B.size, 0) + 1
        counters[B.size] = k
        docs[f"skew-{B.size}-{k}.json"] = B.to_json()
    return dict(sorted(docs.items()))


def cmd_examples(a):
    docs = corpus_documents()
    if a.out:
        out = Path(a.out)
        out.mkdir(parents=True, exist_ok=True)
        for name, doc in docs.items():
            (out / name).write_text(dumps(doc))
        return 0, {"written": sorted(docs), "directory": str(out)}
    return 0, {"files": docs}


# ------------------------------------------------------------------ driver


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hopfbrace", description="Exact computations with Hopf braces.")
    p.add_argument("--timing", action="store_true", help="add wall-clock time to the report")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, *args):
        s = sub.add_parser(name)
        s.set_defaults(fn=fn)
        for arg in args:
            s.add_argument(arg)
        return s

    add("check", cmd_check, "file")
    add("antipode", cmd_antipode, "file").add_argument("--mul", type=int, default=0)
    add("brace-check", cmd_brace_check, "file")
    add("ybe", cmd_ybe, "file").add_argument("--verify", action="store_true")
    s = add("skew", cmd_skew)
    s.add_argument("file", nargs="?")
    s.add_argument("--order", type=int)
    add("group-algebra", cmd_group_algebra, "file")
    add("ideal-closure", cmd_ideal_closure, "file").add_argument("--span", required=True)
    add("quotient", cmd_quotient, "file").add_argument("--span", required=True)
    add("coeq", cmd_coeq, "f", "g")
    add("product", cmd_product, "a", "b")
    add("free-brace", cmd_free_brace, "file")
    s = add("coproduct", cmd_coproduct)
    s.add_argument("files", nargs="+")
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--brace", action="store_true")
    add("examples", cmd_examples).add_argument("--out")
    return p


def run(argv=None) -> tuple[int, dict]:
    start = time.perf_counter()
    timing = False
    try:
        args = build_parser().parse_args(argv)
        timing = args.timing
        code, rep = args.fn(args)
        rep = {"operation": args.command, **rep}
        paths = [getattr(args, k) for k in ("file", "f", "g", "a", "b") if getattr(args, k, None)]
        paths += list(getattr(args, "files", None) or [])
        if paths:
            rep["inputs"] = _inputs(*paths)
    except UsageError as e:
        code, rep = 2, {"error": {"type": "usage", "message": str(e)}}
    except USAGE_ERRORS as e:
        code, rep = 2, {"error": {"type": type(e).__name__, "message": str(e)}}
    except InvalidStructure as e:
        code, rep = 1, {"status": "violation", "error": {"type": type(e).__name__, "message": str(e),
                                                         "violation": e.violation.to_json()}}
    except NoAntipode as e:
        code, rep = 1, {"status": "violation", "error": {"type": "NoAntipode", "message": str(e),
                                                         "mul": e.index}}
    except DoesNotFactor as e:
        code, rep = 1, {"status": "violation", "error": {"type": "DoesNotFactor", "message": str(e),
                                                         "witness": {str(k): str(v) for k, v in e.witness.items()}}}
    except HopfError as e:
        code, rep = 1, {"status": "violation", "error": {"type": type(e).__name__, "message": str(e)}}
    if timing:
        rep["timing_s"] = round(time.perf_counter() - start, 6)
    return code, rep


def main(argv=None) -> int:
    code, rep = run(argv)
    sys.stdout.write(dumps(rep))
    return code


if __name__ == "__main__":
    sys.exit(main())
