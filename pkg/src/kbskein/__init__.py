"""Exact Kauffman bracket skein computations for (2, 2p+1)-torus knots."""
from .aideal import AIdealGenerator, aideal_factors, aideal_poly, peripheral_element
from .bracket_oracle import BraidWord, braid_bracket, colored_bracket, naive_bracket
from .chebyshev import UniPoly, cheb_S, cheb_T
from .errors import (
    DivisionByZero,
    IndexOutOfRange,
    KBSkeinError,
    NonExactDivision,
    NotPolynomial,
    SizeLimit,
    UnknownSuite,
    UnsupportedCurve,
    ZeroLeadingCoefficient,
)
from .jones import KappaTable, kappa_table, to_colored_jones
from .knot_module import FreeXY, KMElement, TorusKnotParam, km_reduce, pi_element
from .laurent import GaussLaurent, LaurentPoly
from .quantum_torus import QTElement
from .torus_skein import TorusSkein, ts_embed, ts_mul
from .verify import VerifyReport, run_verify

__version__ = "0.1.0"

__all__ = [
    "AIdealGenerator", "BraidWord", "DivisionByZero", "FreeXY", "GaussLaurent", "IndexOutOfRange",
    "KBSkeinError", "KMElement", "KappaTable", "LaurentPoly", "NonExactDivision", "NotPolynomial",
    "QTElement", "SizeLimit", "TorusKnotParam", "TorusSkein", "UniPoly", "UnknownSuite",
    "UnsupportedCurve", "VerifyReport", "ZeroLeadingCoefficient", "aideal_factors", "aideal_poly",
    "braid_bracket", "cheb_S", "cheb_T", "colored_bracket", "kappa_table", "km_reduce",
    "naive_bracket", "peripheral_element", "pi_element", "run_verify", "to_colored_jones",
    "ts_embed", "ts_mul",
]
