"""Constacyclic codes over R = F_p[u]/<u^(k+1) - u>, their Gray images, and a lab
that checks structural claims about them by enumeration."""

from .codes import ConstaCodeR, LinearCodeFp, SigmaTriple
from .errors import (
    CapExceeded,
    ConstacyclicError,
    ContextMismatch,
    NotInvertible,
    ParameterError,
    PolySyntaxError,
    PreconditionError,
    SchemaError,
)
from .gf_prime import GF, FpElem, Params, validate_params
from .polyring import PolyFp, PolyR, factor_poly, parse_poly
from .ring_r import RingContext, RingElem, idempotent_report, lambda_unit, sigma, sigmas
from .theoremlab import CLAIMS, Caps, TheoremCheck, check, recheck_counterexample, run_suite

__version__ = "0.1.0"

__all__ = [
    "CLAIMS", "GF", "CapExceeded", "Caps", "ConstaCodeR", "ConstacyclicError", "ContextMismatch",
    "FpElem", "LinearCodeFp", "NotInvertible", "ParameterError", "Params", "PolyFp", "PolyR",
    "PolySyntaxError", "PreconditionError", "RingContext", "RingElem", "SchemaError", "SigmaTriple",
    "TheoremCheck", "check", "factor_poly", "idempotent_report", "lambda_unit", "parse_poly",
    "recheck_counterexample", "run_suite", "sigma", "sigmas", "validate_params",
]
