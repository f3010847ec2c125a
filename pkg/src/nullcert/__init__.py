"""Exact Nullstellensatz certificates over finite fields and finite sets."""

from .certgen import Certificate, PolySystem, VerifyReport, certify_t1, check_containment, nonmember_indicator, verify
from .errors import NullcertError
from .fields import QQ, FieldDesc, FieldElem, arith, make_field, parse_elem, power, serialize_elem
from .finitesatz import ImageTable, build_CY, build_hatP, certify_t2, image, image_table, inverse_interpolant
from .lowerbounds import (
    LowerBoundReport,
    base_p_digits,
    demo_degree,
    demo_field_size,
    demo_interp,
    euler_no_root_check,
    interp_leading_coeff,
    lucas_nonzero,
)
from .mpoly import (
    EvalSet,
    MultiPoly,
    compose_univariate,
    evaluate,
    func_equal,
    normal_form,
    poly_arith,
    total_degree,
    zero_set,
)
from .oracle import MinDegReport, certificate_at_degree, min_degree

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "EvalSet",
    "FieldDesc",
    "FieldElem",
    "ImageTable",
    "LowerBoundReport",
    "MinDegReport",
    "MultiPoly",
    "NullcertError",
    "PolySystem",
    "QQ",
    "VerifyReport",
    "arith",
    "base_p_digits",
    "build_CY",
    "build_hatP",
    "certificate_at_degree",
    "certify_t1",
    "certify_t2",
    "check_containment",
    "compose_univariate",
    "demo_degree",
    "demo_field_size",
    "demo_interp",
    "euler_no_root_check",
    "evaluate",
    "func_equal",
    "image",
    "image_table",
    "interp_leading_coeff",
    "inverse_interpolant",
    "lucas_nonzero",
    "make_field",
    "min_degree",
    "nonmember_indicator",
    "normal_form",
    "parse_elem",
    "poly_arith",
    "power",
    "serialize_elem",
    "total_degree",
    "verify",
    "zero_set",
]
