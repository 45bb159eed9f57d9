"""JSON structure files and morphism files.

Every document is written with sorted keys, two-space indentation and a
trailing newline, so emit -> parse -> emit is byte-identical.  Loading
always re-verifies the declared kind; nothing in a file is trusted.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any

from .brace import DIA, DOT, HopfBrace, check_brace
from .coalg import Coalgebra, check_coalgebra
from .errors import InvalidStructure, MalformedInput, Violation
from .exactlin import Mat, field_from_json
from .multihopf import MultiHopf, MultiHopfMorphism, check_morphism, check_multibialgebra, solve_antipode
from .skew import SkewBrace, check_skew_brace, parse_cayley_text

KINDS = ("coalgebra", "multibialg", "multihopf", "hopfbrace")


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def digest(doc: Any) -> str:
    return hashlib.sha256(dumps(doc).encode()).hexdigest()[:16]


def structure_doc(obj, kind: str | None = None) -> dict:
    """Serialize a Coalgebra, MultiHopf or HopfBrace with its kind tag."""
    if isinstance(obj, HopfBrace):
        doc, k = obj.carrier.to_json(), "hopfbrace"
        obj = obj.carrier
    elif isinstance(obj, MultiHopf):
        doc = obj.to_json()
        k = "multihopf" if len(obj.antipodes) == obj.nmuls else "multibialg"
    elif isinstance(obj, Coalgebra):
        doc, k = obj.to_json(), "coalgebra"
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    if isinstance(obj, MultiHopf) and obj.truncated:
        doc["grading"] = list(obj.grading)
        doc["bound"] = obj.bound
    doc["kind"] = kind or k
    return doc


def _get(doc: dict, key: str, default=None):
    if key in doc:
        return doc[key]
    if default is not None:
        return default
    raise MalformedInput(f"missing key {key!r}")


def _parse(doc: dict):
    if not isinstance(doc, dict):
        raise MalformedInput("a structure file must hold a JSON object")
    kind = _get(doc, "kind")
    if kind not in KINDS:
        raise MalformedInput(f"unknown kind {kind!r}")
    try:
        F = field_from_json(_get(doc, "field"))
        labels = list(_get(doc, "basis"))
        n = int(_get(doc, "dim"))
        if len(labels) != n:
            raise MalformedInput(f"dim {n} but {len(labels)} basis labels")
        comul = [[] for _ in range(n)]
        for entry in _get(doc, "comul"):
            i, j, k, c = entry
            if not 0 <= int(i) < n:
                raise MalformedInput(f"comultiplication index {i} out of range")
            comul[int(i)].append((int(j), int(k), F(c)))
        base = Coalgebra(F, tuple(labels), tuple(map(tuple, comul)), tuple(F(c) for c in _get(doc, "counit")))
        if kind == "coalgebra":
            return kind, base
        muls = [[(int(a), int(b), int(c), F(s)) for a, b, c, s in m] for m in _get(doc, "muls")]
        anti = {}
        for i, rows in dict(doc.get("antipodes", {})).items():
            anti[int(i)] = Mat.from_rows(F, [[F(x) for x in r] for r in rows], n)
        H = MultiHopf(base, tuple(F(x) for x in _get(doc, "unit")), tuple(map(tuple, muls)), anti,
                      tuple(doc.get("grading", ())), doc.get("bound"))
        return kind, H
    except MalformedInput:
        raise
    except (ValueError, TypeError, KeyError, IndexError, ZeroDivisionError) as e:
        raise MalformedInput(f"bad structure file: {e}") from e


def load_structure(doc: dict):
    """Parse and re-verify; returns a Coalgebra, MultiHopf or HopfBrace.

    Raises MalformedInput on parse problems and InvalidStructure when the
    declared kind's axioms fail.  Missing antipodes of a multihopf or hopf
    brace are solved for; given ones are checked.
    """
    kind, obj = _parse(doc)
    if kind == "coalgebra":
        check_coalgebra(obj).raise_for("coalgebra")
        return obj
    if kind == "multibialg":
        check_multibialgebra(obj, antipodes=False).raise_for("multi-bialgebra")
        return obj
    if kind == "hopfbrace" and obj.nmuls != 2:
        raise InvalidStructure(Violation("shape", (obj.nmuls,), detail="a Hopf brace has two multiplications"),
                               "Hopf brace")
    check_multibialgebra(obj, antipodes=True).raise_for(kind)
    missing = {i: solve_antipode(obj, i) for i in range(obj.nmuls) if i not in obj.antipodes}
    if missing:
        obj = obj.with_antipodes({**obj.antipodes, **missing})
    if kind == "multihopf":
        return obj
    cert = check_brace(obj)
    cert.raise_for("Hopf brace")
    return cert.value


def read_structure(path: str | Path):
    return load_structure(read_json(path))


def read_json(path: str | Path):
    try:
        return json.loads(Path(path).read_text())
    except OSError as e:
        raise MalformedInput(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise MalformedInput(f"{path}: invalid JSON ({e})") from e


def morphism_doc(f: MultiHopfMorphism) -> dict:
    return {"kind": "morphism", "source": structure_doc(_as_brace_or_hopf(f.source)),
            "target": structure_doc(_as_brace_or_hopf(f.target)), "matrix": f.matrix.to_json()}


def _as_brace_or_hopf(H: MultiHopf):
    if H.nmuls == 2 and DOT in H.antipodes and DIA in H.antipodes:
        c = check_brace(H)
        if c:
            return c.value
    return H


def _carrier(x):
    return x.carrier if isinstance(x, HopfBrace) else x


def load_morphism(doc: dict, base_dir: Path | None = None) -> MultiHopfMorphism:
    """Source and target may be inline structure objects or paths relative to the file."""
    if not isinstance(doc, dict) or doc.get("kind") != "morphism":
        raise MalformedInput("expected a morphism document")

    def side(key):
        v = _get(doc, key)
        if isinstance(v, str):
            p = Path(v) if base_dir is None else base_dir / v
            return _carrier(read_structure(p))
        return _carrier(load_structure(v))

    src, tgt = side("source"), side("target")
    try:
        M = Mat.from_rows(tgt.field, [[tgt.field(x) for x in r] for r in _get(doc, "matrix")], src.dim)
    except (ValueError, TypeError) as e:
        raise MalformedInput(f"bad morphism matrix: {e}") from e
    f = MultiHopfMorphism(src, tgt, M)
    check_morphism(f).raise_for("morphism")
    return f


def read_morphism(path: str | Path) -> MultiHopfMorphism:
    return load_morphism(read_json(path), Path(path).parent)


def read_skew(path: str | Path) -> SkewBrace:
    """A skew brace file is either JSON (kind skewbrace) or the two-table text format."""
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise MalformedInput(f"cannot read {path}: {e}") from e
    if text.lstrip().startswith("{"):
        try:
            B = SkewBrace.from_json(json.loads(text))
        except json.JSONDecodeError as e:
            raise MalformedInput(f"{path}: invalid JSON ({e})") from e
    else:
        B = parse_cayley_text(text)
    check_skew_brace(B).raise_for("skew brace")
    return B
