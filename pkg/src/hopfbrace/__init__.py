"""Exact construction and verification of finite-dimensional Hopf braces."""

from .brace import (DIA, DOT, HopfBrace, YBOperator, brace_defects, brace_from_hopf, brace_from_op,
                    check_brace, check_qybe, group_algebra, group_hopf, linearize_morphism, ybe_operator)
from .coalg import (Coalgebra, check_coalgebra, grouplikes, is_cocommutative, is_coideal,
                    quotient_coalgebra)
from .construct import (coequalizer, factor_through, free_brace, ideal_closure, is_hopf_ideal,
                        product_cocomm, quotient_brace, quotient_multihopf)
from .errors import (Certificate, DimensionMismatch, DoesNotFactor, FieldMismatch, HopfError,
                     InvalidStructure, MalformedInput, NoAntipode, NotBraceIdeal, NotCocommutative,
                     NotCoideal, Unsupported, Violation)
from .exactlin import GF, QQ, Mat, Subspace, rref, solve_sparse
from .freecolim import (coproduct_2bialg_truncated, coproduct_2hopf_truncated, coproduct_brace_truncated,
                        free2_truncated)
from .multihopf import (MultiHopf, MultiHopfMorphism, check_antipode, check_morphism,
                        check_multibialgebra, solve_antipode)
from .skew import (SkewBrace, check_skew_brace, enumerate_skew_braces, isomorphic, set_ybe_map)

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "Coalgebra",
    "DIA",
    "DOT",
    "DimensionMismatch",
    "DoesNotFactor",
    "FieldMismatch",
    "GF",
    "HopfBrace",
    "HopfError",
    "InvalidStructure",
    "MalformedInput",
    "Mat",
    "MultiHopf",
    "MultiHopfMorphism",
    "NoAntipode",
    "NotBraceIdeal",
    "NotCocommutative",
    "NotCoideal",
    "QQ",
    "SkewBrace",
    "Subspace",
    "Unsupported",
    "Violation",
    "YBOperator",
    "brace_defects",
    "brace_from_hopf",
    "brace_from_op",
    "check_antipode",
    "check_brace",
    "check_coalgebra",
    "check_morphism",
    "check_multibialgebra",
    "check_qybe",
    "check_skew_brace",
    "coequalizer",
    "coproduct_2bialg_truncated",
    "coproduct_2hopf_truncated",
    "coproduct_brace_truncated",
    "enumerate_skew_braces",
    "factor_through",
    "free2_truncated",
    "free_brace",
    "group_algebra",
    "group_hopf",
    "grouplikes",
    "ideal_closure",
    "is_cocommutative",
    "is_coideal",
    "is_hopf_ideal",
    "isomorphic",
    "linearize_morphism",
    "product_cocomm",
    "quotient_brace",
    "quotient_coalgebra",
    "quotient_multihopf",
    "rref",
    "set_ybe_map",
    "solve_antipode",
    "solve_sparse",
    "ybe_operator",
]
