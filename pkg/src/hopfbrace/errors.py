"""Exception types and the violation record returned by every axiom checker."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Violation:
    """A concrete counterexample to an axiom.

    ``where`` holds the basis indices (or group elements) at which the two
    sides disagree and ``witness`` the discrepancy, usually a sparse vector
    ``{index: scalar}`` or a tuple of labels.
    """

    axiom: str
    where: tuple = ()
    witness: Any = None
    index: int | None = None
    detail: str = ""

    def to_json(self, fmt=str) -> dict:
        out: dict[str, Any] = {"axiom": self.axiom, "where": [_jsonable(w, fmt) for w in self.where]}
        if self.index is not None:
            out["index"] = self.index
        if self.witness is not None:
            out["witness"] = _jsonable(self.witness, fmt)
        if self.detail:
            out["detail"] = self.detail
        return out

    def __str__(self) -> str:
        s = f"{self.axiom} fails at {self.where}"
        if self.index is not None:
            s = f"[mul {self.index}] " + s
        if self.detail:
            s += f" ({self.detail})"
        return s


def _jsonable(x, fmt):
    if isinstance(x, dict):
        return {str(k) if not isinstance(k, tuple) else ",".join(map(str, k)): _jsonable(v, fmt)
                for k, v in sorted(x.items(), key=lambda kv: str(kv[0]))}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v, fmt) for v in x]
    if isinstance(x, (int, str, bool)) or x is None:
        return x
    return fmt(x)


class HopfError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(HopfError, ValueError):
    pass


class FieldMismatch(HopfError, ValueError):
    pass


class InvalidStructure(HopfError):
    """Raised when an input fails the axioms it is required to satisfy."""

    def __init__(self, violation: Violation, what: str = "structure"):
        self.violation = violation
        super().__init__(f"invalid {what}: {violation}")


class NotCoideal(InvalidStructure):
    def __init__(self, violation: Violation):
        super().__init__(violation, "coideal")


class NotBraceIdeal(InvalidStructure):
    def __init__(self, violation: Violation):
        super().__init__(violation, "Hopf brace ideal")


class NotCocommutative(HopfError):
    pass


class NoAntipode(HopfError):
    def __init__(self, index: int, diagnostic: str = ""):
        self.index = index
        self.diagnostic = diagnostic
        super().__init__(f"no antipode for multiplication {index}" + (f": {diagnostic}" if diagnostic else ""))


class DoesNotFactor(HopfError):
    def __init__(self, witness: dict, image: dict):
        self.witness = witness
        self.image = image
        super().__init__("kernel of the projection is not contained in the kernel of the map")


class Unsupported(HopfError):
    """The requested computation lies outside the supported envelope."""


class MalformedInput(HopfError, ValueError):
    """Structurally broken input: bad indices, lengths, labels or file syntax."""


@dataclass(frozen=True)
class Certificate:
    """Outcome of an exhaustive check: ``ok`` or the first violation found."""

    ok: bool
    violation: Violation | None = None
    value: Any = None

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls, value: Any = None) -> "Certificate":
        return cls(True, None, value)

    @classmethod
    def failed(cls, v: Violation) -> "Certificate":
        return cls(False, v)

    def to_json(self, fmt=str) -> dict:
        if self.ok:
            return {"ok": True}
        return {"ok": False, "violation": self.violation.to_json(fmt)}

    def raise_for(self, what: str = "structure") -> None:
        if not self.ok:
            raise InvalidStructure(self.violation, what)
