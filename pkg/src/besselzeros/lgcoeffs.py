"""Exponential-form Liouville-Green coefficient polynomials.

Two families of coefficient polynomials in beta = (1 - z^2)^(-1/2) drive the
whole symbolic layer:

* ``Family.STANDARD``   - the Bessel-function family, seeded by
  E_1(beta) = beta (5 beta^2 - 3) / 24;
* ``Family.DERIVATIVE`` - the Bessel-derivative family, seeded by
  E_1(beta) = -beta (7 beta^2 - 9) / 24.

Both satisfy the same quadratic recursion

    E_{s+1} = (1/2) b^2 (b^2-1) E_s'(b)
              + (1/2) Integral_0^b p^2 (p^2-1) sum_{j=1}^{s-1} E_j'(p) E_{s-j}'(p) dp

with the antiderivative anchored at 0, so every E_s has zero constant term,
parity equal to the parity of s, and degree at most 3s; these structural
facts are asserted as the polynomials are generated.

Only the odd-index coefficients feed the downstream expansions, and they
enter multiplied by the phase variable: ``xi_e_odd(s, family)`` returns
(2/3) zeta^(3/2) E_{2s+1}(beta) lifted into the (sigma, zeta) ring via
beta = sigma zeta^(-1/2), i.e. the monomial map beta^(2j+1) ->
sigma^(2j+1) zeta^(1-j) scaled by 2/3.
"""

from __future__ import annotations

import enum
from fractions import Fraction

from .ring import RingElem

#: Coefficient list indexed by the power of beta.
BetaPoly = list[Fraction]


class Family(enum.Enum):
    """Which downstream expansion the coefficients belong to."""

    STANDARD = "standard"      # zeros of the Bessel functions themselves
    DERIVATIVE = "derivative"  # zeros of their derivatives


class ParityError(RuntimeError):
    """A generated polynomial violated its structural parity (internal bug)."""


_SEEDS: dict[Family, BetaPoly] = {
    # beta (5 beta^2 - 3) / 24
    Family.STANDARD: [Fraction(0), Fraction(-3, 24), Fraction(0), Fraction(5, 24)],
    # -beta (7 beta^2 - 9) / 24
    Family.DERIVATIVE: [Fraction(0), Fraction(9, 24), Fraction(0), Fraction(-7, 24)],
}

class _FamilyTable:
    """Bottom-up memo of E_1..E_n and their beta-derivatives for one family."""

    def __init__(self, seed: BetaPoly):
        self.polys: list[BetaPoly] = [seed]
        self.derivs: list[BetaPoly] = [_poly_diff(seed)]

    def extend_to(self, s: int) -> None:
        while len(self.polys) < s:
            r = len(self.polys)  # E_1..E_r known; build E_{r+1}
            first = _poly_mul(_WEIGHT, self.derivs[r - 1])
            cross: BetaPoly = []
            for j in range(1, r):
                cross = _poly_add(cross, _poly_mul(self.derivs[j - 1], self.derivs[r - j - 1]))
            integral = _poly_integrate0(_poly_mul(_WEIGHT, cross))
            nxt = _poly_mul([Fraction(1, 2)], _poly_add(first, integral))
            _check_structure(r + 1, nxt)
            self.polys.append(nxt)
            self.derivs.append(_poly_diff(nxt))


_tables: dict[Family, _FamilyTable] = {}


def _poly_trim(p: BetaPoly) -> BetaPoly:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_add(a: BetaPoly, b: BetaPoly) -> BetaPoly:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _poly_trim(out)


def _poly_mul(a: BetaPoly, b: BetaPoly) -> BetaPoly:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            if cb:
                out[i + j] += ca * cb
    return _poly_trim(out)


def _poly_diff(a: BetaPoly) -> BetaPoly:
    return _poly_trim([k * c for k, c in enumerate(a)][1:])


def _poly_integrate0(a: BetaPoly) -> BetaPoly:
    """Antiderivative vanishing at 0."""
    return _poly_trim([Fraction(0)] + [c / (k + 1) for k, c in enumerate(a)])


# p^2 (p^2 - 1) as a polynomial, the weight inside the recursion integral.
_WEIGHT: BetaPoly = [Fraction(0), Fraction(0), Fraction(-1), Fraction(0), Fraction(1)]


def _check_structure(s: int, poly: BetaPoly) -> BetaPoly:
    if poly and poly[0]:
        raise ParityError(f"E_{s} has a nonzero constant term")
    for k, c in enumerate(poly):
        if c and (k - s) % 2:
            raise ParityError(f"E_{s} contains beta^{k}, breaking parity")
    if len(poly) - 1 > 3 * s:
        raise ParityError(f"E_{s} exceeds degree {3 * s}")
    return poly


def lg_e(s: int, family: Family) -> BetaPoly:
    """Coefficient polynomial E_s(beta) for the requested family (s >= 1)."""
    if s < 1:
        raise ValueError(f"coefficient order must be >= 1, got {s}")
    table = _tables.get(family)
    if table is None:
        table = _tables[family] = _FamilyTable(list(_SEEDS[family]))
    table.extend_to(s)
    return list(table.polys[s - 1])


def xi_e_odd(s: int, family: Family) -> RingElem:
    """xi * E_{2s+1} lifted into the sigma/zeta ring (s >= 0).

    Maps beta^(2j+1) -> sigma^(2j+1) zeta^(1-j) and scales by 2/3; raises if
    the source polynomial has an even-power term (would mean the structural
    parity check failed upstream).
    """
    if s < 0:
        raise ValueError(f"odd-coefficient index must be >= 0, got {s}")
    poly = lg_e(2 * s + 1, family)
    terms = {}
    for k, c in enumerate(poly):
        if not c:
            continue
        if k % 2 == 0:
            raise ParityError(f"E_{2 * s + 1} has an even beta power {k}")
        j = (k - 1) // 2
        terms[(k, 1 - j, 0)] = c * Fraction(2, 3)
    return RingElem(terms)
