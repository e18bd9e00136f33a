"""Exact Laurent-polynomial arithmetic in the three variables (sigma, zeta, z).

Elements are finite sums  sum_i  c_i * sigma^a_i * zeta^b_i * z^e_i  with
exact rational coefficients (``fractions.Fraction``) and integer exponents of
either sign.  The three variables are kept algebraically free: no relation
between sigma, zeta and z is imposed, consistency is only enforced when an
element is *evaluated* at a numeric triple.

A ``RingElem`` is canonical by construction: zero coefficients are never
stored, and term order for serialization/printing is lexicographic on the
exponent triple (e_sigma, e_zeta, e_z).

Besides the plain partial-derivative structure, the module implements the
total z-derivative that treats sigma and zeta as the concrete functions of z
used throughout the zero expansions:

    zeta'(z)  = -1 / (z * sigma)
    sigma'(z) = (2 z^2 sigma^3 - 1) / (2 z zeta)

so ``diff`` maps the ring to itself exactly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from mpmath import mpf

#: Exponents of (sigma, zeta, z) - negative values allowed.
Monomial = tuple[int, int, int]

Scalar = Union[int, Fraction]


class EvaluationDomainError(ZeroDivisionError):
    """A negative-exponent variable was zero at the evaluation point."""


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational scalar, got {type(value).__name__}")


class RingElem:
    """Immutable trivariate Laurent polynomial over the rationals."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = _as_fraction(coeff)
                if coeff:
                    clean[(int(mono[0]), int(mono[1]), int(mono[2]))] = coeff
        self._terms = clean

    # -- constructors -------------------------------------------------

    @staticmethod
    def constant(value: Scalar) -> "RingElem":
        return RingElem({(0, 0, 0): _as_fraction(value)})

    @staticmethod
    def monomial(coeff: Scalar, e_sigma: int = 0, e_zeta: int = 0, e_z: int = 0) -> "RingElem":
        return RingElem({(e_sigma, e_zeta, e_z): _as_fraction(coeff)})

    # -- inspection ---------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        """Copy of the term map (monomial -> coefficient)."""
        return dict(self._terms)

    def items(self) -> Iterable[tuple[Monomial, Fraction]]:
        """Terms in canonical (lexicographic) order."""
        return sorted(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def min_exponent(self, var: int) -> int:
        """Smallest exponent of variable ``var`` (0=sigma, 1=zeta, 2=z); 0 if empty."""
        if not self._terms:
            return 0
        return min(mono[var] for mono in self._terms)

    def max_exponent(self, var: int) -> int:
        if not self._terms:
            return 0
        return max(mono[var] for mono in self._terms)

    # -- equality / hashing --------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RingElem):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == RingElem.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other: "RingElem | Scalar") -> "RingElem":
        other = _coerce(other)
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            acc = out.get(mono, _ZERO_FRAC) + coeff
            if acc:
                out[mono] = acc
            else:
                out.pop(mono, None)
        return _wrap(out)

    __radd__ = __add__

    def __neg__(self) -> "RingElem":
        return _wrap({mono: -coeff for mono, coeff in self._terms.items()})

    def __sub__(self, other: "RingElem | Scalar") -> "RingElem":
        return self + (-_coerce(other))

    def __rsub__(self, other: "RingElem | Scalar") -> "RingElem":
        return _coerce(other) + (-self)

    def __mul__(self, other: "RingElem | Scalar") -> "RingElem":
        if isinstance(other, (int, Fraction)):
            factor = _as_fraction(other)
            if not factor:
                return RingElem()
            return _wrap({mono: coeff * factor for mono, coeff in self._terms.items()})
        if not isinstance(other, RingElem):
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for (a1, b1, c1), q1 in self._terms.items():
            for (a2, b2, c2), q2 in other._terms.items():
                mono = (a1 + a2, b1 + b2, c1 + c2)
                acc = out.get(mono, _ZERO_FRAC) + q1 * q2
                if acc:
                    out[mono] = acc
                else:
                    out.pop(mono, None)
        return _wrap(out)

    __rmul__ = __mul__

    def __truediv__(self, other: "RingElem | Scalar") -> "RingElem":
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / _as_fraction(other))
        if isinstance(other, RingElem):
            if not other.is_monomial():
                raise ValueError("ring division only supports a monomial divisor")
            (mono, coeff), = other._terms.items()
            inv = RingElem.monomial(Fraction(1) / coeff, -mono[0], -mono[1], -mono[2])
            return self * inv
        return NotImplemented

    def __pow__(self, n: int) -> "RingElem":
        if not isinstance(n, int):
            raise TypeError("ring exponent must be an integer")
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative powers require a monomial base")
            (mono, coeff), = self._terms.items()
            return RingElem.monomial(coeff**n, mono[0] * n, mono[1] * n, mono[2] * n)
        result = RingElem.constant(1)
        base = self
        k = n
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- calculus -------------------------------------------------------

    def diff(self) -> "RingElem":
        """Total z-derivative with sigma(z), zeta(z) substituted via the chain rule."""
        out: dict[Monomial, Fraction] = {}

        def add(mono: Monomial, coeff: Fraction) -> None:
            acc = out.get(mono, _ZERO_FRAC) + coeff
            if acc:
                out[mono] = acc
            else:
                out.pop(mono, None)

        for (a, b, c), q in self._terms.items():
            if c:
                add((a, b, c - 1), q * c)
            if b:
                # zeta' = -sigma^-1 z^-1
                add((a - 1, b - 1, c - 1), -q * b)
            if a:
                # sigma' = sigma^3 z zeta^-1 - (1/2) sigma^-1... expanded per term:
                add((a + 2, b - 1, c + 1), q * a)
                add((a - 1, b - 1, c - 1), -Fraction(q * a, 2))
        return _wrap(out)

    # -- evaluation -----------------------------------------------------

    def eval_exact(self, sigma: Fraction, zeta: Fraction, z: Fraction) -> Fraction:
        """Exact substitution with rational inputs."""
        sigma, zeta, z = Fraction(sigma), Fraction(zeta), Fraction(z)
        self._check_poles(sigma, zeta, z)
        total = _ZERO_FRAC
        for (a, b, c), q in self._terms.items():
            total += q * sigma**a * zeta**b * z**c
        return total

    def eval_mp(self, sigma: mpf, zeta: mpf, z: mpf) -> mpf:
        """Numeric substitution at the ambient mpmath precision.

        Terms are grouped per variable power (powers computed once and
        reused), so each term carries only rounding error at the working
        precision; accuracy of the sum is working precision minus whatever
        cancellation the point itself induces.
        """
        self._check_poles(sigma, zeta, z)
        pows: tuple[dict[int, mpf], dict[int, mpf], dict[int, mpf]] = ({}, {}, {})
        bases = (sigma, zeta, z)

        def power(var: int, exp: int) -> mpf:
            cache = pows[var]
            if exp not in cache:
                cache[exp] = bases[var] ** exp
            return cache[exp]

        total = mpf(0)
        for (a, b, c), q in sorted(self._terms.items()):
            term = mpf(q.numerator) / q.denominator
            if a:
                term *= power(0, a)
            if b:
                term *= power(1, b)
            if c:
                term *= power(2, c)
            total += term
        return total

    def _check_poles(self, sigma, zeta, z) -> None:
        for var, value, name in ((0, sigma, "sigma"), (1, zeta, "zeta"), (2, z, "z")):
            if value == 0 and self.min_exponent(var) < 0:
                raise EvaluationDomainError(f"{name}=0 hits a negative exponent")

    # -- serialization ----------------------------------------------------

    def records(self) -> list[dict[str, object]]:
        """Canonically ordered list of term records with decimal-string coefficients."""
        return [
            {
                "e_sigma": mono[0],
                "e_zeta": mono[1],
                "e_z": mono[2],
                "num": str(coeff.numerator),
                "den": str(coeff.denominator),
            }
            for mono, coeff in self.items()
        ]

    @staticmethod
    def from_records(records: Iterable[Mapping[str, object]]) -> "RingElem":
        terms: dict[Monomial, Fraction] = {}
        for rec in records:
            mono = (int(rec["e_sigma"]), int(rec["e_zeta"]), int(rec["e_z"]))
            coeff = Fraction(int(rec["num"]), int(rec["den"]))
            if mono in terms:
                raise ValueError(f"duplicate monomial {mono} in serialized element")
            terms[mono] = coeff
        return RingElem(terms)

    # -- display -----------------------------------------------------------

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (a, b, c), q in self.items():
            item = str(q)
            for exp, name in ((a, "s"), (b, "t"), (c, "z")):
                if exp:
                    item += f"*{name}^{exp}"
            parts.append(item)
        return " + ".join(parts)


def _wrap(terms: dict[Monomial, Fraction]) -> RingElem:
    elem = RingElem.__new__(RingElem)
    elem._terms = terms
    return elem


def _coerce(value: "RingElem | Scalar") -> RingElem:
    if isinstance(value, RingElem):
        return value
    return RingElem.constant(value)


_ZERO_FRAC = Fraction(0)

ZERO = RingElem()
ONE = RingElem.constant(1)
SIGMA = RingElem.monomial(1, e_sigma=1)
ZETA = RingElem.monomial(1, e_zeta=1)
ZVAR = RingElem.monomial(1, e_z=1)

#: d zeta / dz expressed in the ring, used directly by the zero pipeline.
ZETA_PRIME = RingElem.monomial(-1, e_sigma=-1, e_z=-1)
