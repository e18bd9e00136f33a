"""End-to-end computation of uniform zero approximations.

For a zero family (J, Y, or J'), order nu > 0 and index m >= 1 the pipeline

1. maps the m-th negative Airy zero to the Liouville variable,
   zeta0 = nu^(-2/3) * (a_m | b_m | a'_m);
2. solves the monotone phase equation phi(z0) = (2/3) |zeta0|^(3/2) with
   phi(z) = sqrt(z^2 - 1) - arcsec(z) for the leading root z0 in (1, oo);
3. evaluates the correction coefficients and their total z-derivatives
   (generated symbolically once per family and cached) at the triple
   (z0, sigma0, zeta0);
4. assembles the higher-order coefficients through the combinatorial
   higher-derivative chain rule, order by order, and sums the partial sums
   z_S = z0 + sum_{s<=S} c_s / nu^(2s).

Because every coefficient has a removable singularity at z0 = 1 that is
realized through cancellation of zeta-poles up to order 3s - 1, the working
precision is escalated by about (3*terms - 1) * log10(1/|zeta0|) digits
whenever zeta0 is small, so results stay accurate uniformly in m.

The same order-by-order assembly run with ring elements instead of numbers
yields the exact closed forms of the coefficients as rational functions of
(z0, sigma0, zeta0); see ``symbolic_zero_coefficient``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from mpmath import mp, mpf, mpmathify

from .airy import AiryZeroKind, airy_zero
from .lgcoeffs import Family
from .precision import GUARD, check_digits, default_digits
from .ring import SIGMA, ZVAR, RingElem, ZETA_PRIME
from .series import eval_mp, leading_root_series, phase_series, sigma_series
from .upsilon import DEFAULT_S_MAX, upsilon_set


class ZeroFamily(enum.Enum):
    J = "j"            # zeros of J_nu(nu z)
    Y = "y"            # real zeros of Y_nu(nu z)
    JPRIME = "jprime"  # zeros of J'_nu(nu z)

    @property
    def airy_kind(self) -> AiryZeroKind:
        return _AIRY_KIND[self]

    @property
    def coefficient_family(self) -> Family:
        return Family.DERIVATIVE if self is ZeroFamily.JPRIME else Family.STANDARD


_AIRY_KIND = {
    ZeroFamily.J: AiryZeroKind.A,
    ZeroFamily.Y: AiryZeroKind.B,
    ZeroFamily.JPRIME: AiryZeroKind.APRIME,
}

#: Switch to the turning-point series of phi below this z - 1.
PHI_SERIES_CUTOFF = mpf("1e-4")

#: Invert the phase series directly below this right-hand side.
SMALL_R_CUTOFF = mpf("1e-3")


# ---------------------------------------------------------------------------
# leading-order machinery
# ---------------------------------------------------------------------------


def _series_terms_for(dps: int) -> int:
    """Series length so that the neglected tail is < 10^-dps at the cutoff."""
    return max(10, dps // 4 + 8)


def _phi_ambient(z: mpf) -> mpf:
    w = z - 1
    if w < 0:
        raise ValueError(f"phase function needs z >= 1, got {z}")
    if w < PHI_SERIES_CUTOFF:
        coeffs = phase_series(_series_terms_for(mp.dps))
        return (2 * mp.sqrt(2) / 3) * w ** mpf("1.5") * eval_mp(coeffs, w)
    return mp.sqrt(z * z - 1) - mp.acos(1 / z)


def _phi_prime_ambient(z: mpf) -> mpf:
    return mp.sqrt(z * z - 1) / z


def phi_eval(z, digits: int | None = None) -> mpf:
    """phi(z) = sqrt(z^2-1) - arcsec(z) for z >= 1, cancellation-safe near 1."""
    digits = check_digits(digits if digits is not None else default_digits())
    with mp.workdps(digits + GUARD):
        return +_phi_ambient(mpmathify(z))


def solve_leading(R, digits: int | None = None) -> mpf:
    """The unique z0 in (max(R,1), R + 1 + pi/2) with phi(z0) = R  (R > 0).

    Small right-hand sides are inverted through the exact turning-point
    series of phi; larger ones are bisected into Newton's basin first.
    Either way Newton iterations with phi'(z) = sqrt(z^2-1)/z finish the job.
    """
    digits = check_digits(digits if digits is not None else default_digits())
    with mp.workdps(digits + GUARD):
        R = mpmathify(R)
        if R <= 0:
            raise ValueError(f"phase equation needs R > 0, got {R}")
        if R < SMALL_R_CUTOFF:
            y = (3 * R / (2 * mp.sqrt(2))) ** (mpf(2) / 3)
            coeffs = leading_root_series(max(12, mp.dps // 2 + 8))
            z = 1 + y * eval_mp(coeffs, y)
        else:
            lo = max(R, mpf(1))
            hi = R + 1 + mp.pi / 2
            flo = _phi_ambient(lo) - R
            for _ in range(12):
                mid = (lo + hi) / 2
                if _phi_ambient(mid) - R > 0:
                    hi = mid
                else:
                    lo = mid
            if not flo <= 0:
                raise ArithmeticError("phase bracket lost its sign change")
            z = (lo + hi) / 2
        tol = mpf(10) ** (-(mp.dps - 3))
        for _ in range(100):
            step = (_phi_ambient(z) - R) / _phi_prime_ambient(z)
            z = z - step
            if abs(step) <= tol * z:
                return +z
        raise ArithmeticError("leading-root Newton iteration did not converge")


@dataclass(frozen=True)
class LeadingTriple:
    """Numeric evaluation point (z0, zeta0, sigma0) for one (family, nu, m)."""

    family: ZeroFamily
    nu: mpf
    m: int
    z0: mpf
    zeta0: mpf
    sigma0: mpf
    digits: int

    def validate(self) -> None:
        """Consistency checks tying the three components together."""
        if not (self.z0 > 1 and self.zeta0 < 0 and self.sigma0 > 0):
            raise ArithmeticError(f"leading triple out of range: {self}")
        with mp.workdps(self.digits + GUARD):
            tol = mpf(10) ** (-(self.digits - 5))
            R = mpf(2) / 3 * (-self.zeta0) ** mpf("1.5")
            if abs(_phi_ambient(self.z0) - R) > tol * max(1, R):
                raise ArithmeticError("phase consistency check failed")
            lhs = self.sigma0**2 * (self.z0**2 - 1)
            if abs(lhs + self.zeta0) > tol * abs(self.zeta0):
                raise ArithmeticError("sigma consistency check failed")


def leading_triple(family: ZeroFamily, nu, m: int, digits: int | None = None) -> LeadingTriple:
    """Solve the leading-order zero equation for the requested family."""
    digits = check_digits(digits if digits is not None else default_digits())
    if m < 1:
        raise ValueError(f"zero index must be >= 1, got {m}")
    with mp.workdps(digits + GUARD):
        nu = mpmathify(nu)
        if nu <= 0:
            raise ValueError(f"order must be positive, got {nu}")
        alpha = airy_zero(family.airy_kind, m, digits)
        zeta0 = nu ** (-mpf(2) / 3) * alpha
        R = mpf(2) / 3 * abs(alpha) ** mpf("1.5") / nu
        z0 = solve_leading(R, digits)
        w = z0 - 1
        if w < PHI_SERIES_CUTOFF:
            sigma0 = eval_mp(sigma_series(_series_terms_for(mp.dps)), w) / mp.cbrt(2)
        else:
            sigma0 = mp.sqrt(-zeta0 / (w * (z0 + 1)))
        triple = LeadingTriple(family, +nu, m, +z0, +zeta0, +sigma0, digits)
    triple.validate()
    return triple


# ---------------------------------------------------------------------------
# combinatorial chain rule
# ---------------------------------------------------------------------------


def partition_multi_indices(s: int, max_part: int) -> list[tuple[tuple[int, ...], int]]:
    """All (q_1..q_max_part) with sum(l * q_l) = s, paired with k = sum(q_l).

    Enumeration order fixes the highest part first at 0 and counts upward,
    so e.g. s=4, max_part=3 yields (4,0,0), (2,1,0), (0,2,0), (1,0,1).
    """
    if s < 1:
        raise ValueError(f"partition target must be >= 1, got {s}")
    if not 1 <= max_part <= s:
        raise ValueError(f"max_part must be in 1..{s}, got {max_part}")
    out: list[tuple[tuple[int, ...], int]] = []

    def descend(part: int, remaining: int, suffix: tuple[int, ...]) -> None:
        if part == 1:
            out.append(((remaining,) + suffix, remaining + sum(suffix)))
            return
        for qp in range(remaining // part + 1):
            descend(part - 1, remaining - part * qp, (qp,) + suffix)

    descend(max_part, s, ())
    return out


@dataclass(frozen=True)
class DerivTable:
    """Symbolic total z-derivatives needed through expansion order s_max.

    zeta_derivs[k-1] holds the k-th derivative of zeta; ups_derivs[(j, k)]
    the k-th derivative of the order-j correction coefficient (k = 0 being
    the coefficient itself), for j >= 1, j + k <= s_max.
    """

    family: Family
    s_max: int
    zeta_derivs: tuple[RingElem, ...]
    ups_derivs: dict[tuple[int, int], RingElem]


@lru_cache(maxsize=None)
def deriv_table(family: Family, s_max: int) -> DerivTable:
    ups = upsilon_set(family, max(s_max, 1))
    zeta_derivs = [ZETA_PRIME]
    while len(zeta_derivs) < s_max:
        zeta_derivs.append(zeta_derivs[-1].diff())
    ups_derivs: dict[tuple[int, int], RingElem] = {}
    for j in range(1, s_max + 1):
        ups_derivs[(j, 0)] = ups.upsilon(j)
        for k in range(1, s_max - j + 1):
            ups_derivs[(j, k)] = ups_derivs[(j, k - 1)].diff()
    return DerivTable(family, s_max, tuple(zeta_derivs), ups_derivs)


def _chain_sum(deriv_of_order, priors, s: int, max_part: int, one):
    """sum over partitions of s (parts <= max_part) of
    deriv_of_order(k) / prod(q_l!) * prod(priors[l-1]^q_l); ``one`` is the
    multiplicative unit of the active arithmetic (mpf(1) or ring 1)."""
    total = None
    for q, k in partition_multi_indices(s, max_part):
        weight = Fraction(1)
        factor = one
        for l, ql in enumerate(q, start=1):
            if ql:
                weight /= math.factorial(ql)
                factor = factor * priors[l - 1] ** ql
        term = deriv_of_order(k) * factor
        if weight != 1:
            term = term * weight
        total = term if total is None else total + term
    return total


def zm_coefficient(s: int, triple: LeadingTriple, table: DerivTable, prior: list[mpf]) -> mpf:
    """Numeric expansion coefficient of order s given coefficients 1..s-1.

    Evaluates the symbolic derivative table at the triple and assembles the
    order-s term of the inverted zero equation; the leading division is by
    zeta'(z0) = -1/(z0 sigma0), applied as multiplication by z0 sigma0.
    """
    if len(prior) != s - 1:
        raise ValueError(f"order {s} needs exactly {s - 1} prior coefficients")
    if table.s_max < s:
        raise ValueError(f"derivative table only covers order {table.s_max}")
    point = (triple.sigma0, triple.zeta0, triple.z0)
    if triple.z0 * triple.sigma0 == 0:
        raise ArithmeticError("zeta'(z0) evaluated to zero (internal error)")

    def zeta_deriv(k: int) -> mpf:
        return table.zeta_derivs[k - 1].eval_mp(*point)

    brace = table.ups_derivs[(s, 0)].eval_mp(*point)
    if s >= 2:
        brace += _chain_sum(zeta_deriv, prior, s, s - 1, mpf(1))
    for j in range(1, s):
        ups_deriv = lambda k, jj=s - j: table.ups_derivs[(jj, k)].eval_mp(*point)
        brace += _chain_sum(ups_deriv, prior, j, j, mpf(1))
    return brace * triple.z0 * triple.sigma0


@lru_cache(maxsize=None)
def symbolic_zero_coefficient(family: Family, s: int) -> RingElem:
    """Exact closed form of the order-s coefficient in (sigma0, zeta0, z0).

    Same assembly as the numeric path but run on ring elements, with the
    leading division realized as multiplication by z * sigma.
    """
    if s < 1:
        raise ValueError(f"coefficient order must be >= 1, got {s}")
    table = deriv_table(family, s)
    prior = [symbolic_zero_coefficient(family, l) for l in range(1, s)]
    one = RingElem.constant(1)
    brace = table.ups_derivs[(s, 0)]
    if s >= 2:
        brace = brace + _chain_sum(lambda k: table.zeta_derivs[k - 1], prior, s, s - 1, one)
    for j in range(1, s):
        brace = brace + _chain_sum(
            lambda k, jj=s - j: table.ups_derivs[(jj, k)], prior, j, j, one
        )
    return brace * (ZVAR * SIGMA)


# ---------------------------------------------------------------------------
# full expansion
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ZeroResult:
    """Partial sums of the zero expansion with per-order diagnostics.

    partial_sums[S] approximates the scaled zero z_m by the first S+1 terms;
    x_values[S] = nu * partial_sums[S] approximates the plain zero.
    turning_point_gap = z0 - 1 measures proximity to the turning point, the
    regime where the derivative family loses accuracy.
    """

    family: ZeroFamily
    nu: mpf
    m: int
    terms: int
    digits: int
    leading: LeadingTriple
    coefficients: tuple[mpf, ...]
    partial_sums: tuple[mpf, ...]
    x_values: tuple[mpf, ...]
    turning_point_gap: mpf

    @property
    def z(self) -> mpf:
        return self.partial_sums[-1]

    @property
    def x(self) -> mpf:
        return self.x_values[-1]


def _pole_escalation(family: ZeroFamily, nu, m: int, terms: int) -> int:
    """Extra digits absorbing the zeta0 -> 0 cancellation of order 3s-1."""
    if terms < 1:
        return 0
    with mp.workdps(15):
        alpha = airy_zero(family.airy_kind, m, 15)
        zeta0 = abs(alpha) / mpmathify(nu) ** (mpf(2) / 3)
        if zeta0 >= 1:
            return 0
        return int(math.ceil((3 * terms - 1) * -mp.log10(zeta0))) + 5


def zero_expansion(
    family: ZeroFamily,
    nu,
    m: int,
    terms: int = 4,
    digits: int | None = None,
) -> ZeroResult:
    """Uniform asymptotic approximation of the m-th zero of the family.

    Returns every partial sum S = 0..terms; the coefficients are evaluated
    at a working precision escalated past the turning-point cancellation, so
    the requested precision refers to the returned values themselves.
    """
    digits = check_digits(digits if digits is not None else default_digits())
    if terms < 0:
        raise ValueError(f"terms must be >= 0, got {terms}")
    extra = _pole_escalation(family, nu, m, terms)
    work_digits = digits + extra
    triple = leading_triple(family, nu, m, work_digits)
    coeff_family = family.coefficient_family
    with mp.workdps(work_digits + GUARD):
        nu_mp = mpmathify(nu)
        coeffs: list[mpf] = []
        if terms:
            table = deriv_table(coeff_family, terms)
            for s in range(1, terms + 1):
                coeffs.append(zm_coefficient(s, triple, table, coeffs))
        sums = [triple.z0]
        inv_nu2 = 1 / (nu_mp * nu_mp)
        power = mpf(1)
        for c in coeffs:
            power *= inv_nu2
            sums.append(sums[-1] + c * power)
        xs = [nu_mp * value for value in sums]
        gap = triple.z0 - 1
    return ZeroResult(
        family=family,
        nu=triple.nu,
        m=m,
        terms=terms,
        digits=digits,
        leading=triple,
        coefficients=tuple(coeffs),
        partial_sums=tuple(sums),
        x_values=tuple(xs),
        turning_point_gap=gap,
    )


def max_terms() -> int:
    """Highest expansion order available without reconfiguring generation."""
    return DEFAULT_S_MAX
