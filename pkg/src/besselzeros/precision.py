"""Working-precision plumbing shared by the numeric modules.

All multiprecision values are ``mpmath`` floats created inside a local
``workdps`` block; the requested precision is always expressed in significant
decimal digits.  ``BESSELZEROS_DIGITS`` overrides the package default of 40
digits for the command-line tools.
"""

from __future__ import annotations

import os
from fractions import Fraction

from mpmath import mp, mpf

DEFAULT_DIGITS = 40
MIN_DIGITS = 15
ENV_DIGITS = "BESSELZEROS_DIGITS"

#: Guard digits added on top of any requested precision.
GUARD = 10


def default_digits() -> int:
    """Package default precision, overridable via the environment."""
    raw = os.environ.get(ENV_DIGITS)
    if raw is None:
        return DEFAULT_DIGITS
    digits = int(raw)
    if digits < MIN_DIGITS:
        raise ValueError(f"{ENV_DIGITS} must be >= {MIN_DIGITS}, got {digits}")
    return digits


def check_digits(digits: int) -> int:
    if digits < MIN_DIGITS:
        raise ValueError(f"requested precision {digits} below the minimum of {MIN_DIGITS} digits")
    return digits


def working(digits: int, extra: int = 0):
    """Context manager running mpmath at digits + extra + guard decimals."""
    return mp.workdps(check_digits(digits) + extra + GUARD)


def mpf_from_fraction(q: Fraction) -> mpf:
    """Round an exact rational to the ambient precision."""
    return mpf(q.numerator) / q.denominator


def to_string(x: mpf, digits: int) -> str:
    """Decimal string with the requested number of significant digits."""
    return mp.nstr(x, digits, strip_zeros=False)
