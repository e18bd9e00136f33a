#!/usr/bin/env python3
"""Regenerate the packaged residual fixtures.

Grid cells whose argument nu * z4 exceeds the built-in series range
(X_BESSEL = 200) need reference values from an independent multiprecision
Bessel implementation; this script computes them with mpmath and writes the
two fixture files shipped in besselzeros/data/.

Each value is computed twice, at 70 and 90 working digits, and the run
aborts if the two disagree within the stored precision.

Usage:  python3 scripts/make_fixtures.py [output_dir]
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

import mpmath
from mpmath import mp, mpf

from besselzeros.pipeline import ZeroFamily, zero_expansion
from besselzeros.residual import GRID_MS, GRID_NUS, X_BESSEL

STORE_DIGITS = 50
PIPELINE_DIGITS = 60


def scaled_j_mpmath(nu, z):
    return mp.sqrt(mp.pi * nu / 2) * (z * z - 1) ** mpf("0.25") * mpmath.besselj(nu, nu * z)


def scaled_jprime_mpmath(nu, z):
    deriv = mpmath.besselj(nu, nu * z, derivative=1)
    return mp.sqrt(mp.pi * nu / 2) * z * deriv / (z * z - 1) ** mpf("0.25")


def checked(func, nu, z):
    # evaluation near a zero cancels ~|log10 value| digits, so both runs sit
    # comfortably above that before demanding STORE_DIGITS agreement
    with mp.workdps(90):
        first = func(nu, z)
    with mp.workdps(120):
        second = func(nu, z)
    if abs(first - second) > abs(second) * mpf(10) ** (-(STORE_DIGITS + 5)):
        raise RuntimeError(f"oracle unstable for nu={nu}: {first} vs {second}")
    return mp.nstr(second, STORE_DIGITS)


def out_of_range_cells(family):
    cells = []
    for nu in GRID_NUS:
        for m in GRID_MS:
            result = zero_expansion(family, nu, m, 4, PIPELINE_DIGITS)
            if result.nu * result.z > X_BESSEL:
                cells.append((nu, m, result))
    return cells


HEADER = """\
# besselzeros residual fixtures: {label}
# fields: family nu m kind digits value
# provenance: computed by scripts/make_fixtures.py with mpmath {version}
#   (besselj at 90/120 working digits, cross-checked), evaluated at the
#   fourth-order zero approximation produced by this package at
#   {pipeline} working digits.  Covers reference-grid cells with
#   nu * z4 > {cap} where the built-in ascending series is not used.
"""


def main(out_dir):
    out_dir = pathlib.Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    mp.dps = PIPELINE_DIGITS

    lines_j = []
    for nu, m, result in out_of_range_cells(ZeroFamily.J):
        value = checked(scaled_j_mpmath, result.nu, result.z)
        deriv = checked(scaled_jprime_mpmath, result.nu, result.z)
        lines_j.append(f"j {nu} {m} scaled_value {STORE_DIGITS} {value}")
        lines_j.append(f"j {nu} {m} scaled_deriv {STORE_DIGITS} {deriv}")
        print(f"j ({nu},{m}): {value}")

    # independent true-zero references used by the CLI / pipeline tests
    with mp.workdps(70):
        j11 = mpmath.findroot(lambda x: mpmath.besselj(1, x), mpf("3.8317"))
        jp11 = mpmath.findroot(lambda x: mpmath.besselj(1, x, derivative=1), mpf("1.8412"))
        y103 = mpmath.findroot(lambda x: mpmath.bessely(10, x), mpf("20.266"))
        lines_j.append(f"j 1 1 true_zero {STORE_DIGITS} {mp.nstr(j11, STORE_DIGITS)}")
        lines_j.append(f"y 10 3 true_zero {STORE_DIGITS} {mp.nstr(y103, STORE_DIGITS)}")

    lines_jp = []
    for nu, m, result in out_of_range_cells(ZeroFamily.JPRIME):
        value = checked(scaled_jprime_mpmath, result.nu, result.z)
        lines_jp.append(f"jprime {nu} {m} scaled_value {STORE_DIGITS} {value}")
        print(f"jprime ({nu},{m}): {value}")
    with mp.workdps(70):
        lines_jp.append(f"jprime 1 1 true_zero {STORE_DIGITS} {mp.nstr(jp11, STORE_DIGITS)}")

    header = HEADER.format(
        label="J grid", version=mpmath.__version__, pipeline=PIPELINE_DIGITS, cap=X_BESSEL
    )
    (out_dir / "fixtures_j.txt").write_text(header + "\n".join(lines_j) + "\n", "ascii")
    header = HEADER.format(
        label="Jprime grid", version=mpmath.__version__, pipeline=PIPELINE_DIGITS, cap=X_BESSEL
    )
    (out_dir / "fixtures_jprime.txt").write_text(header + "\n".join(lines_jp) + "\n", "ascii")
    print(f"wrote {len(lines_j)} + {len(lines_jp)} rows to {out_dir}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).parent.parent / "src/besselzeros/data")
