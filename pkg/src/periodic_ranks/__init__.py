"""Ranks of periodic sequences as automatic, constant-recursive and regular sequences."""
from .automatic import (Dfao, Kernel, KernelElement, bound_B, build_dfao, funnel_basin,
                        is_minimal, kernel, muggle_report_automatic, rank_automatic,
                        witness_automatic)
from .errors import DomainError, RankError, ResourceError, UnsupportedError
from .linalg import IntMatrix, circulant, circulant_rank, companion, matrix_order, rank
from .numtheory import (IntPolynomial, additive_psi, cyclotomic, divisors, euler_phi,
                        ord_pre)
from .oracle import diff_report, enumerate_per
from .recursive import (cyclotomic_support, minimal_char_poly, muggle_report_cr, rank_cr,
                        witness_cr)
from .regular import muggle_report_regular, rank_regular
from .sequences import PeriodicSequence, make_sequence, parse_period

__version__ = "0.1.0"

__all__ = [
    "Dfao", "DomainError", "IntMatrix", "IntPolynomial", "Kernel", "KernelElement",
    "PeriodicSequence", "RankError", "ResourceError", "UnsupportedError", "additive_psi",
    "bound_B", "build_dfao", "circulant", "circulant_rank", "companion", "cyclotomic",
    "cyclotomic_support", "diff_report", "divisors", "enumerate_per", "euler_phi",
    "funnel_basin", "is_minimal", "kernel", "make_sequence", "matrix_order",
    "minimal_char_poly", "muggle_report_automatic", "muggle_report_cr",
    "muggle_report_regular", "ord_pre", "parse_period", "rank", "rank_automatic",
    "rank_cr", "rank_regular", "witness_automatic", "witness_cr",
]
