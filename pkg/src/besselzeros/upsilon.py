"""Symbolic generation of the Airy-argument correction coefficients.

The argument of the single-Airy-function representation of a Bessel (or
Bessel-derivative) solution deviates from the Liouville variable zeta by a
series in the large parameter; this module generates those correction
coefficients exactly, as Laurent polynomials in (sigma, zeta).

Everything is driven by one auxiliary table and one fold:

* ``d_coeff(s, l)``  - the reciprocal-power expansion coefficients

      d_{s,0} = 1,
      d_{s,l} = -(1 / (2 l zeta)) sum_{k=1}^{l} ((6s+1)k + 2l) U_k d_{s,l-k}

  (U_k are the already-generated coefficients; s may be any integer);

* ``g_ring(s)``      - the phase-side contribution folded into the ring,

      (3 xi / (2 zeta^2)) g_s
          = sum_{k=0}^{s} (3/2) (9/4)^k a_{2k+1} d_{k,s-k}
            / ((2k+1) zeta^(3k+2))

  using xi^2 = (4/9) zeta^3 to eliminate xi; the derivative family uses its
  own sequence a-tilde.

The coefficients themselves follow the single recursion (valid from s = 0,
where the sum is empty)

    U_{s+1} = (1 / (3(s+1))) sum_{k=1}^{s} (2s+2-5k) U_k d_{-1,s-k+1}
              + (3 / (2 zeta^2)) * (xi E_{2s+1})  -  g_ring(s).

Each generated element is checked structurally: no z powers, and the zeta
pole no deeper than 3s - 1 (hard error through order 4, a warning beyond,
where the golden data no longer pins the structure).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from .airy import a_seq
from .lgcoeffs import Family, xi_e_odd
from .ring import RingElem, ZETA

#: Default highest generated order (two beyond the golden data).
DEFAULT_S_MAX = 6

#: Hard ceiling accepted from external callers (cache generation).
GENERATION_CEILING = 12

#: Abort generation if any element exceeds this many terms.
TERM_LIMIT = 10**6


class SizeLimitError(RuntimeError):
    """A generated element exceeded the term-count guardrail."""


class StructureError(RuntimeError):
    """A generated element violated a structural invariant (internal bug)."""


@dataclass
class DTable:
    """Memo of the d_{s,l} expansion coefficients; entries[(s, 0)] == 1."""

    entries: dict[tuple[int, int], RingElem] = field(default_factory=dict)


@dataclass
class UpsilonSet:
    """Correction coefficients U_1..U_s_max for one family, plus their d-table."""

    family: Family
    elems: list[RingElem] = field(default_factory=list)
    dtable: DTable = field(default_factory=DTable)

    @property
    def s_max(self) -> int:
        return len(self.elems)

    def upsilon(self, s: int) -> RingElem:
        if not 1 <= s <= self.s_max:
            raise ValueError(f"coefficient {s} not generated (have 1..{self.s_max})")
        return self.elems[s - 1]


def d_coeff(s: int, l: int, ups: UpsilonSet) -> RingElem:
    """d_{s,l} for any integer s and l >= 0, memoized on the set's table."""
    if l < 0:
        raise ValueError(f"d-table column must be >= 0, got {l}")
    if l > ups.s_max:
        raise StructureError(f"d_({s},{l}) needs coefficient {l}, have 1..{ups.s_max}")
    key = (s, l)
    table = ups.dtable.entries
    if key in table:
        return table[key]
    if l == 0:
        value = RingElem.constant(1)
    else:
        acc = RingElem()
        for k in range(1, l + 1):
            weight = (6 * s + 1) * k + 2 * l
            acc = acc + ups.elems[k - 1] * d_coeff(s, l - k, ups) * weight
        value = acc * RingElem.monomial(Fraction(-1, 2 * l), e_zeta=-1)
    table[key] = value
    return value


def g_ring(s: int, ups: UpsilonSet) -> RingElem:
    """The phase contribution (3 xi / (2 zeta^2)) g_s as a pure ring element."""
    if s < 0:
        raise ValueError(f"g index must be >= 0, got {s}")
    acc = RingElem()
    for k in range(0, s + 1):
        coeff = (
            Fraction(3, 2)
            * Fraction(9, 4) ** k
            * a_seq(2 * k + 1, ups.family)
            / (2 * k + 1)
        )
        acc = acc + d_coeff(k, s - k, ups) * RingElem.monomial(coeff, e_zeta=-(3 * k + 2))
    return acc


def _validate(elem: RingElem, s: int) -> RingElem:
    if len(elem) > TERM_LIMIT:
        raise SizeLimitError(f"coefficient {s} has {len(elem)} terms (limit {TERM_LIMIT})")
    if elem.min_exponent(2) != 0 or elem.max_exponent(2) != 0:
        raise StructureError(f"coefficient {s} contains powers of z")
    depth = elem.min_exponent(1)
    if depth < -(3 * s - 1):
        msg = f"coefficient {s} has a zeta pole of order {-depth} (> {3 * s - 1})"
        if s <= 4:
            raise StructureError(msg)
        warnings.warn(msg, RuntimeWarning, stacklevel=3)
    return elem


def _extend(ups: UpsilonSet, s_max: int) -> None:
    inv_zeta2 = RingElem.monomial(Fraction(3, 2), e_zeta=-2)
    while ups.s_max < s_max:
        s = ups.s_max  # building coefficient s+1 from 1..s
        acc = RingElem()
        for k in range(1, s + 1):
            acc = acc + ups.elems[k - 1] * d_coeff(-1, s - k + 1, ups) * (2 * s + 2 - 5 * k)
        nxt = acc * Fraction(1, 3 * (s + 1)) + inv_zeta2 * xi_e_odd(s, ups.family) - g_ring(s, ups)
        ups.elems.append(_validate(nxt, s + 1))


_sets: dict[Family, UpsilonSet] = {}


def upsilon_set(family: Family, s_max: int = DEFAULT_S_MAX) -> UpsilonSet:
    """The shared, lazily extended coefficient set for a family."""
    if not 1 <= s_max <= GENERATION_CEILING:
        raise ValueError(f"requested order {s_max} outside 1..{GENERATION_CEILING}")
    ups = _sets.get(family)
    if ups is None:
        ups = _sets[family] = UpsilonSet(family)
    _extend(ups, s_max)
    return ups


def upsilon(s: int, family: Family) -> RingElem:
    """Correction coefficient of order s (generated on demand)."""
    if s < 1:
        raise ValueError(f"coefficient order must be >= 1, got {s}")
    return upsilon_set(family, max(s, min(DEFAULT_S_MAX, GENERATION_CEILING))).upsilon(s)


def fresh_upsilon_set(family: Family, s_max: int) -> UpsilonSet:
    """Independent set built from scratch (deterministic d-table contents).

    The shared set accumulates whatever d-entries other callers touched; the
    cache writer uses this instead so serialized bytes depend only on
    (family, s_max).
    """
    if not 1 <= s_max <= GENERATION_CEILING:
        raise ValueError(f"requested order {s_max} outside 1..{GENERATION_CEILING}")
    ups = UpsilonSet(family)
    _extend(ups, s_max)
    return ups
