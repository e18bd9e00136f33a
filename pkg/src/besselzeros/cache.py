"""Coefficient-cache serialization.

A cache file freezes everything the symbolic layer generates for one family
up to a chosen order: the correction coefficients, the d-table they were
built through, the underlying coefficient polynomials in beta, and the
rational sequence of the Airy expansions.  Ring elements are stored as
canonically ordered term records {e_sigma, e_zeta, e_z, num, den} with
decimal-string integers, so serialization is exact and byte-deterministic
(JSON, sorted keys, fixed separators).

Loaders reject unknown format versions rather than guessing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .airy import a_seq
from .lgcoeffs import Family, lg_e
from .ring import RingElem
from .upsilon import DTable, UpsilonSet, fresh_upsilon_set

FORMAT_VERSION = 1


@dataclass
class CoefficientCache:
    format_version: int
    family: Family
    s_max: int
    upsilon: list[RingElem]
    dtable: dict[tuple[int, int], RingElem]
    lg: dict[int, list[Fraction]]
    a_values: list[Fraction]

    def upsilon_set(self) -> UpsilonSet:
        return UpsilonSet(self.family, list(self.upsilon), DTable(dict(self.dtable)))


def _fraction_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}" if q.denominator != 1 else str(q.numerator)


def _fraction_parse(text: str) -> Fraction:
    return Fraction(text)


def build_payload(family: Family, s_max: int) -> dict:
    """Serializable payload for a freshly generated coefficient set."""
    ups = fresh_upsilon_set(family, s_max)
    lg_orders = 2 * s_max - 1
    return {
        "format_version": FORMAT_VERSION,
        "family": family.value,
        "s_max": s_max,
        "upsilon": [elem.records() for elem in ups.elems],
        "dtable": [
            {"s": s, "l": l, "terms": elem.records()}
            for (s, l), elem in sorted(ups.dtable.entries.items())
        ],
        "lg": [
            {"s": s, "coeffs": [_fraction_str(c) for c in lg_e(s, family)]}
            for s in range(1, lg_orders + 1)
        ],
        "a_seq": [_fraction_str(a_seq(n, family)) for n in range(1, 2 * s_max)],
    }


def dump_cache(family: Family, s_max: int) -> bytes:
    payload = build_payload(family, s_max)
    return (json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n").encode("ascii")


def write_cache(path: str, family: Family, s_max: int) -> None:
    with open(path, "wb") as fh:
        fh.write(dump_cache(family, s_max))


def parse_cache(data: bytes | str) -> CoefficientCache:
    payload = json.loads(data)
    version = payload.get("format_version")
    if version != FORMAT_VERSION:
        raise ValueError(f"unsupported cache format version {version!r} (expected {FORMAT_VERSION})")
    family = Family(payload["family"])
    return CoefficientCache(
        format_version=version,
        family=family,
        s_max=int(payload["s_max"]),
        upsilon=[RingElem.from_records(records) for records in payload["upsilon"]],
        dtable={
            (int(entry["s"]), int(entry["l"])): RingElem.from_records(entry["terms"])
            for entry in payload["dtable"]
        },
        lg={
            int(entry["s"]): [_fraction_parse(c) for c in entry["coeffs"]]
            for entry in payload["lg"]
        },
        a_values=[_fraction_parse(text) for text in payload["a_seq"]],
    )


def read_cache(path: str) -> CoefficientCache:
    with open(path, "rb") as fh:
        return parse_cache(fh.read())
