"""Airy-function machinery: rational asymptotic sequences, configurable-
precision evaluation on the real axis, and the negative zeros of Ai, Bi and
Ai'.

Evaluation is hybrid.  Near the origin the Maclaurin pair

    f(x) = 1 + x^3/6 + x^6/180 + ...      g(x) = x + x^4/12 + x^7/504 + ...

is summed with working precision escalated to absorb the cancellation that
grows like exp((2/3)|x|^(3/2)); far out on the negative axis the standard
trigonometric asymptotic expansions are used instead, truncated at their
smallest term.  Results carry an absolute error below
10^-(digits+3) * max(1, |value|); if that cannot be certified after repeated
escalation a ``PrecisionError`` is raised.

Zeros are returned ordered by increasing absolute value.  Zeros of Ai' are
bisected inside an explicit bracket

    x1_m = -(1/4) {3(4m-1) pi}^(2/3) (1 + 20 / (27 ((4m-1) pi)^2))
    x2_m = -(1/4) {3 max(4m-5, 0) pi}^(2/3)

and Newton-polished; zeros of Ai are seeded by the lower bound
-t_m^(2/3) (1 + 5/(48 t_m^2)) with t_m = (3/8)(4m-1) pi, zeros of Bi by the
same map with the phase (3/8)(4m-3) pi, both Newton-polished on the exact
function.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction

from mpmath import mp, mpf, mpmathify

from .lgcoeffs import Family
from .precision import GUARD, check_digits, default_digits

#: Switch point between Maclaurin and asymptotic evaluation in double-like mode.
X_AIRY = 12.0


class PrecisionError(ArithmeticError):
    """The requested accuracy could not be certified."""


class BracketError(ArithmeticError):
    """A root bracket had equal signs at both ends (evaluation bug)."""


# ---------------------------------------------------------------------------
# rational sequences
# ---------------------------------------------------------------------------

_A_SEEDS = {Family.STANDARD: Fraction(5, 72), Family.DERIVATIVE: Fraction(-7, 72)}
_a_memo: dict[Family, list[Fraction]] = {}


def a_seq(n: int, family: Family) -> Fraction:
    """n-th element of the quadratic-recursion sequence behind the
    exponential Airy expansions: a_1 = a_2 = 5/72 (standard family) or
    -7/72 (derivative family), then

        a_{s+1} = (1/2)(s+1) a_s + (1/2) sum_{j=1}^{s-1} a_j a_{s-j}.
    """
    if n < 1:
        raise ValueError(f"sequence index must be >= 1, got {n}")
    seq = _a_memo.setdefault(family, [_A_SEEDS[family], _A_SEEDS[family]])
    while len(seq) < n:
        s = len(seq)  # a_1..a_s known, build a_{s+1}
        nxt = Fraction(s + 1, 2) * seq[s - 1]
        nxt += sum(seq[j - 1] * seq[s - j - 1] for j in range(1, s)) / 2
        seq.append(nxt)
    return seq[n - 1]


# u_k / v_k coefficients of the trigonometric asymptotic expansions.
_u_memo: list[Fraction] = [Fraction(1)]


def _u_coeff(k: int) -> Fraction:
    while len(_u_memo) <= k:
        j = len(_u_memo)
        ratio = Fraction((6 * j - 1) * (6 * j - 3) * (6 * j - 5), 216 * j * (2 * j - 1))
        _u_memo.append(_u_memo[-1] * ratio)
    return _u_memo[k]


def _v_coeff(k: int) -> Fraction:
    return _u_coeff(k) * Fraction(6 * k + 1, 1 - 6 * k)


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------


def _maclaurin_sums(x: mpf):
    """Sums f, f', g, g' of the two Maclaurin solutions, plus the largest
    term magnitude encountered (the cancellation witness)."""
    one = mpf(1)
    f_sum, fp_sum = one, mpf(0)
    g_sum, gp_sum = x, one
    max_term = max(1, abs(x))
    if x == 0:
        return f_sum, fp_sum, g_sum, gp_sum, max_term
    x3 = x * x * x
    cf = one  # x^{3k} coefficient term of f
    cg = x    # x^{3k+1} term of g
    k = 0
    eps = mpf(10) ** (-(mp.dps + 5))
    while True:
        k += 1
        cf = cf * x3 / ((3 * k) * (3 * k - 1))
        cg = cg * x3 / ((3 * k + 1) * (3 * k))
        f_sum += cf
        g_sum += cg
        fp_sum += cf * (3 * k) / x
        gp_sum += cg * (3 * k + 1) / x
        mag = max(abs(cf), abs(cg))
        if mag > max_term:
            max_term = mag
        if mag < eps * max_term:
            break
        if k > 4 * mp.dps + int(8 * abs(x) ** 1.5) + 100:
            raise PrecisionError("Maclaurin Airy series failed to converge")
    return f_sum, fp_sum, g_sum, gp_sum, max_term


def _eval_maclaurin(x: mpf, which: str, order: int, digits: int) -> mpf:
    extra = 0
    ax = abs(float(x))
    if ax > 1:
        extra = math.ceil(0.56 * ax**1.5 * 0.4343) + 10
    for _attempt in range(6):
        with mp.workdps(digits + extra + GUARD):
            xx = +x
            f, fp, g, gp, max_term = _maclaurin_sums(xx)
            c1 = mpf(3) ** (mpf(-2) / 3) / mp.gamma(mpf(2) / 3)
            c2 = mpf(3) ** (mpf(-1) / 3) / mp.gamma(mpf(1) / 3)
            if which == "ai":
                value = c1 * (fp if order else f) - c2 * (gp if order else g)
            else:
                value = mp.sqrt(3) * (c1 * (fp if order else f) + c2 * (gp if order else g))
            # absolute error ~ max_term * 10^-wp; require it below
            # 10^-(digits+5) * max(1, |value|)
            err = max_term * mpf(10) ** (-(mp.dps - 2))
            target = mpf(10) ** (-(digits + 5)) * max(mpf(1), abs(value))
        if err <= target:
            return +value
        extra += int(mp.log10(err / target)) + 8
    raise PrecisionError(f"cancellation exceeded available guard digits at x={float(x)}")


def _eval_asymptotic(x: mpf, which: str, order: int, digits: int) -> mpf:
    """Negative-axis trigonometric expansion; caller guarantees it converges
    below the target before the terms start growing."""
    with mp.workdps(digits + GUARD):
        t = -x
        chi = mpf(2) / 3 * t ** mpf("1.5")
        inv = 1 / chi
        coeff = _v_coeff if order else _u_coeff
        even = mpf(0)
        odd = mpf(0)
        eps = mpf(10) ** (-(digits + 8))
        prev = None
        k = 0
        while True:
            c = coeff(k)
            term = (mpf(c.numerator) / c.denominator) * inv**k
            if k % 4 >= 2:
                term = -term  # (-1)^(k//2) applied to u_{2j}/u_{2j+1} pairs
            if k % 2 == 0:
                even += term
            else:
                odd += term
            mag = abs(term)
            if mag < eps:
                break
            if prev is not None and mag > prev:
                raise PrecisionError("asymptotic Airy expansion cannot reach the target accuracy")
            prev = mag
            k += 1
        w = chi - mp.pi / 4
        cw, sw = mp.cos(w), mp.sin(w)
        root = mp.sqrt(mp.pi)
        if order == 0:
            amp = 1 / (root * t ** mpf("0.25"))
            if which == "ai":
                value = amp * (cw * even + sw * odd)
            else:
                value = amp * (-sw * even + cw * odd)
        else:
            amp = t ** mpf("0.25") / root
            if which == "ai":
                value = amp * (sw * even - cw * odd)
            else:
                value = amp * (cw * even + sw * odd)
        return +value


def _asymptotic_reaches(x: float, digits: int) -> bool:
    """True if the smallest asymptotic term ~ e^(-2 chi) undercuts the target."""
    if x >= -X_AIRY:
        return False
    chi = (2.0 / 3.0) * abs(x) ** 1.5
    return 2 * chi * 0.4343 >= digits + GUARD + 6


def airy_eval(x, which: str = "ai", order: int = 0, digits: int | None = None) -> mpf:
    """Ai/Bi (order 0) or Ai'/Bi' (order 1) at real x.

    Absolute error is kept below 10^-(digits+3) * max(1, |value|), so values
    near a zero stay meaningful for Newton polishing.
    """
    digits = check_digits(digits if digits is not None else default_digits())
    if which not in ("ai", "bi"):
        raise ValueError(f"unknown Airy function {which!r}")
    if order not in (0, 1):
        raise ValueError("order must be 0 or 1")
    x = mpmathify(x)
    if _asymptotic_reaches(float(x), digits):
        try:
            return _eval_asymptotic(x, which, order, digits)
        except PrecisionError:
            pass  # threshold estimate was optimistic; the series still works
    return _eval_maclaurin(x, which, order, digits)


# ---------------------------------------------------------------------------
# zeros
# ---------------------------------------------------------------------------


class AiryZeroKind(enum.Enum):
    A = "a"            # negative zeros of Ai
    B = "b"            # negative real zeros of Bi
    APRIME = "aprime"  # negative zeros of Ai'


_zero_cache: dict[tuple[AiryZeroKind, int, int], mpf] = {}


def _phase_seed(t: mpf) -> mpf:
    """Lower-bound seed -t^(2/3) (1 + 5/(48 t^2)) used for Ai and Bi zeros."""
    return -(t ** (mpf(2) / 3)) * (1 + mpf(5) / (48 * t * t))


def _newton(kind: AiryZeroKind, x0: mpf, digits: int) -> mpf:
    # evaluate 8 digits past the convergence tolerance so the residual noise
    # floor sits safely below the stopping test
    eval_digits = digits + 8
    which = "bi" if kind is AiryZeroKind.B else "ai"
    order = 1 if kind is AiryZeroKind.APRIME else 0
    x = x0
    tol = mpf(10) ** (-(digits + 5))
    for _ in range(120):
        fx = airy_eval(x, which, order, eval_digits)
        if kind is AiryZeroKind.APRIME:
            # (Ai')' = x Ai
            dfx = x * airy_eval(x, which, 0, eval_digits)
        else:
            dfx = airy_eval(x, which, 1, eval_digits)
        step = fx / dfx
        x = x - step
        if abs(step) <= tol * abs(x):
            return x
    raise ArithmeticError(f"Newton polish for {kind} zero did not converge")


def aprime_bracket(m: int) -> tuple[mpf, mpf]:
    """(x1, x2) enclosing the m-th negative zero of Ai'."""
    pi = mp.pi
    two_thirds = mpf(2) / 3
    x1 = -(mpf(1) / 4) * (3 * (4 * m - 1) * pi) ** two_thirds * (
        1 + mpf(20) / (27 * ((4 * m - 1) * pi) ** 2)
    )
    x2 = -(mpf(1) / 4) * (3 * max(4 * m - 5, 0) * pi) ** two_thirds
    return x1, x2


def airy_zero(kind: AiryZeroKind, m: int, digits: int | None = None) -> mpf:
    """m-th negative zero of Ai, Bi or Ai', ordered by increasing |x|."""
    if m < 1:
        raise ValueError(f"zero index must be >= 1, got {m}")
    digits = check_digits(digits if digits is not None else default_digits())
    key = (kind, m, digits)
    if key in _zero_cache:
        return _zero_cache[key]
    with mp.workdps(digits + GUARD):
        if kind is AiryZeroKind.APRIME:
            lo, hi = aprime_bracket(m)
            flo = airy_eval(lo, "ai", 1, digits)
            fhi = airy_eval(hi, "ai", 1, digits)
            if mp.sign(flo) == mp.sign(fhi):
                raise BracketError(f"Ai' bracket for m={m} has equal signs")
            for _ in range(40):
                if hi - lo < abs(lo) * mpf("1e-3"):
                    break
                mid = (lo + hi) / 2
                fmid = airy_eval(mid, "ai", 1, digits)
                if mp.sign(fmid) == mp.sign(flo):
                    lo, flo = mid, fmid
                else:
                    hi, fhi = mid, fmid
            root = _newton(kind, (lo + hi) / 2, digits)
        elif kind is AiryZeroKind.A:
            t = mpf(3) / 8 * (4 * m - 1) * mp.pi
            root = _newton(kind, _phase_seed(t), digits)
        else:
            t = mpf(3) / 8 * (4 * m - 3) * mp.pi
            root = _newton(kind, _phase_seed(t), digits)
        root = +root
    _zero_cache[key] = root
    return root


# ---------------------------------------------------------------------------
# optional zero-cache file
# ---------------------------------------------------------------------------


def save_zero_cache(path: str) -> int:
    """Dump every in-memory zero to a text file; returns the row count."""
    rows = []
    for (kind, m, digits), value in sorted(
        _zero_cache.items(), key=lambda kv: (kv[0][0].value, kv[0][1], kv[0][2])
    ):
        rows.append(f"{kind.value} {m} {digits} {mp.nstr(value, digits, strip_zeros=False)}")
    with open(path, "w", encoding="ascii") as fh:
        fh.write("# airy zero cache: kind m digits value\n")
        for row in rows:
            fh.write(row + "\n")
    return len(rows)


def load_zero_cache(path: str) -> int:
    """Preload zeros from a cache file; returns the number of rows loaded."""
    count = 0
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            kind_tag, m_str, digits_str, value = line.split()
            key = (AiryZeroKind(kind_tag), int(m_str), int(digits_str))
            with mp.workdps(int(digits_str) + GUARD):
                _zero_cache[key] = mpf(value)
            count += 1
    return count
