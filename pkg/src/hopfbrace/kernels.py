"""Backend selection for the integer kernels.

The compiled extension ``hopfbrace._kernels`` is used when it was built;
otherwise, or when ``HOPFBRACE_PURE_PYTHON=1`` is set, the reference
implementation in ``_kernels_py`` is used.  Both expose the same functions
with the same results.
"""

from __future__ import annotations

import os
from array import array

from . import _kernels_py

COMPILED = False
_impl = _kernels_py

if os.environ.get("HOPFBRACE_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled  # type: ignore[attr-defined]
    except ImportError:
        pass
    else:
        _impl = _compiled
        COMPILED = True

BACKEND = "compiled" if COMPILED else "python"

assoc_violation = _impl.assoc_violation
is_latin = _impl.is_latin
brace_violation = _impl.brace_violation
canonical_pair = _impl.canonical_pair
set_braid_violation = _impl.set_braid_violation
gfp_rref = _impl.gfp_rref


def buf(values) -> array:
    """Flat int64 buffer accepted by both backends."""
    return array("q", values)
