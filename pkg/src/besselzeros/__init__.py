"""Uniform asymptotic approximation of Bessel function zeros.

The zeros of J_nu, Y_nu and J'_nu (as functions of nu z) admit expansions in
inverse even powers of nu whose coefficients are elementary functions of one
leading root; this package generates those coefficients exactly, evaluates
them at configurable precision uniformly in the zero index, and verifies the
results against scaled-residual reference grids.
"""

from .airy import AiryZeroKind, a_seq, airy_eval, airy_zero
from .lgcoeffs import Family, lg_e, xi_e_odd
from .pipeline import (
    LeadingTriple,
    ZeroFamily,
    ZeroResult,
    leading_triple,
    phi_eval,
    solve_leading,
    symbolic_zero_coefficient,
    zero_expansion,
)
from .residual import reproduce_table, scaled_j, scaled_jprime
from .ring import RingElem
from .upsilon import UpsilonSet, upsilon, upsilon_set

__all__ = [
    "AiryZeroKind",
    "Family",
    "LeadingTriple",
    "RingElem",
    "UpsilonSet",
    "ZeroFamily",
    "ZeroResult",
    "a_seq",
    "airy_eval",
    "airy_zero",
    "leading_triple",
    "lg_e",
    "phi_eval",
    "reproduce_table",
    "scaled_j",
    "scaled_jprime",
    "solve_leading",
    "symbolic_zero_coefficient",
    "upsilon",
    "upsilon_set",
    "xi_e_odd",
    "zero_expansion",
]

__version__ = "0.1.0"
