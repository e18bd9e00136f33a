"""Exact univariate Taylor-series helpers over the rationals.

A series is a plain list of ``Fraction`` coefficients, index = power of the
expansion variable, truncated to whatever length the caller asked for.  The
module exposes just enough machinery (product, rational power, Lagrange
reversion) to expand the turning-point neighborhood of the phase map

    phi(z) = sqrt(z^2 - 1) - arcsec(z)            (z >= 1)

and of the induced variables zeta(z), sigma(z) around z = 1, all with exact
coefficients.  Writing w = z - 1:

    phi(1 + w)   = (2 sqrt(2) / 3) w^(3/2) * A(w)
    zeta(1 + w)  = -2^(1/3) w * Q(w),   Q = A^(2/3)
    sigma(1 + w) = 2^(-1/3) * S(w),     S = (Q / (1 + w/2))^(1/2)

with A, Q, S rational power series normalized to A(0)=Q(0)=S(0)=1.  The
inverse map w(Y) with Y = w Q(w) (= |zeta| 2^(-1/3)) is obtained by series
reversion.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

Series = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def mul(a: Series, b: Series, n: int) -> Series:
    """Product truncated to n coefficients."""
    out = [_ZERO] * n
    for i, ai in enumerate(a[:n]):
        if not ai:
            continue
        for j, bj in enumerate(b[: n - i]):
            if bj:
                out[i + j] += ai * bj
    return tuple(out)


def power(a: Series, alpha: Fraction, n: int) -> Series:
    """(a(w))^alpha truncated to n coefficients; requires a[0] == 1.

    Uses the standard recurrence from a' * a^alpha = alpha^... i.e. from
    differentiating  p = a^alpha:  a p' = alpha a' p.
    """
    if not a or a[0] != 1:
        raise ValueError("power() needs a series with unit constant term")
    alpha = Fraction(alpha)
    out = [_ONE] + [_ZERO] * (n - 1)
    for k in range(1, n):
        acc = _ZERO
        for j in range(1, min(k, len(a) - 1) + 1):
            acc += (alpha * j - (k - j)) * a[j] * out[k - j]
        out[k] = acc / k
    return tuple(out)


def reciprocal(a: Series, n: int) -> Series:
    return power(a, Fraction(-1), n)


def revert(a: Series, n: int) -> Series:
    """Series reversion via Lagrange inversion.

    Given u = w * a(w) with a[0] == 1, returns b with w = sum b[k] u^k
    (b[0] = 0, b[1] = 1), truncated to n coefficients.
    """
    if not a or a[0] != 1:
        raise ValueError("revert() needs u = w * (1 + ...)")
    out = [_ZERO] * n
    inv = reciprocal(a, n)
    # b[k] = (1/k) [w^(k-1)] a(w)^(-k)
    current = (_ONE,) + (_ZERO,) * (n - 1)  # inv^0
    for k in range(1, n):
        current = mul(current, inv, n)
        out[k] = current[k - 1] / k
    return tuple(out)


def eval_mp(coeffs: Series, w):
    """Horner evaluation of a rational series at an mpmath (or Fraction) point."""
    zero = w * 0  # zero of the caller's numeric type
    acc = zero
    for c in reversed(coeffs):
        acc = acc * w + (zero + c.numerator) / c.denominator
    return acc


@lru_cache(maxsize=None)
def phase_series(n: int) -> Series:
    """A(w): phi(1+w) = (2 sqrt2 / 3) w^(3/2) A(w), exact to n coefficients.

    phi'(z) = sqrt(z^2-1)/z = sqrt(2w) (1 + w/2)^(1/2) / (1 + w); integrating
    the rational factor term by term gives A.
    """
    m = n + 1
    half = power((_ONE, Fraction(1, 2)), Fraction(1, 2), m)
    geo = power((_ONE, _ONE), Fraction(-1), m)
    integrand = mul(half, geo, m)
    return tuple(integrand[k] * Fraction(3, 2 * k + 3) for k in range(n))


@lru_cache(maxsize=None)
def zeta_series(n: int) -> Series:
    """Q(w): zeta(1+w) = -2^(1/3) w Q(w)."""
    return power(phase_series(n), Fraction(2, 3), n)


@lru_cache(maxsize=None)
def sigma_series(n: int) -> Series:
    """S(w): sigma(1+w) = 2^(-1/3) S(w)."""
    q = zeta_series(n)
    shifted = mul(q, power((_ONE, Fraction(1, 2)), Fraction(-1), n), n)
    return power(shifted, Fraction(1, 2), n)


@lru_cache(maxsize=None)
def leading_root_series(n: int) -> Series:
    """B(Y): the root of zeta(1+w) = zeta0 is w = Y * B(Y), Y = |zeta0| 2^(-1/3).

    Obtained by reverting Y = w Q(w); coefficients b[k] of w = sum b[k] Y^k
    are returned shifted so that B[j] = b[j+1] (B[0] = 1).
    """
    b = revert(zeta_series(n + 1), n + 2)
    return tuple(b[1:])
