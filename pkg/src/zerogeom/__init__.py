"""Exact zero-location certificates for non-linear coefficient transforms."""

__version__ = "0.1.0"

from .polycore import ParseError, Poly, WeightSeq, parse_poly, parse_weights
from .rootcert import (
    ComplexRootSet,
    Verdict,
    ZeroCertificate,
    complex_roots_numeric,
    count_real_roots,
    is_in_p_plus,
    is_real_rooted,
    is_weakly_hurwitz,
    isolate_roots,
)
from .transforms import Kind, TransformSpec, apply_transform, iterate_transform, op_L

__all__ = [
    "ComplexRootSet", "Kind", "ParseError", "Poly", "TransformSpec", "Verdict", "WeightSeq",
    "ZeroCertificate", "apply_transform", "complex_roots_numeric", "count_real_roots",
    "is_in_p_plus", "is_real_rooted", "is_weakly_hurwitz", "isolate_roots", "iterate_transform",
    "op_L", "parse_poly", "parse_weights",
]
