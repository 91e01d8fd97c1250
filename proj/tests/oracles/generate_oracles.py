#!/usr/bin/env python3
"""Regenerates tests/oracle_values.hpp from 50-digit mpmath evaluations.

The frozen table is the independent reference for the C++ unit tests; the
library itself never reads it.
"""
import pathlib

from mpmath import mp, mpc, mpf, gamma, loggamma, pi, sin, sqrt, zeta

mp.dps = 50


def chi(s):
    if s == 2:
        return -2 * pi**2
    return (2 * pi) ** s * sin(pi * s / 2) * gamma(1 - s) / pi


def dirichlet_l(s, values):
    k = len(values)
    return k ** (-s) * sum(values[a % k] * zeta(s, mpf(a) / k) for a in range(1, k + 1))


CHARACTERS = {
    5: [0, 1, -1, -1, 1],
    8: [0, 1, 0, -1, 0, -1, 0, 1],
    12: [0, 1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1],
}

LOG_GAMMA = [
    (3, 4), (0.5, 0), (1, 0), (10, 0), (0.3, 20), (25, 3), (-2.5, 0.5),
    (-0.7, -3), (0.1, 100), (1, 1000), (0.5, -700), (-10.3, 2), (15, 15),
    (0.7, 19.9), (19, 5), (0.5, 0.5), (2, -19), (-0.4, -25), (0.25, -1),
    (1.5, 60), (-1, 1000), (-30.5, 0.25),
]
ZETA = [
    (0.5, 0), (0.3, 20), (0.5, 14.134725), (2, 100), (0.1, 500), (-1, 50),
    (0.5, 1000), (0.5, 10000), (-0.5, 3), (1.5, 2), (0.9, 0.1), (0.5, 20000),
    (-1, 3000), (0.2, 7), (3, 0),
]
HURWITZ = [
    (2, 0, 0.25), (0.3, 20, 0.2), (0.5, 100, 0.75), (-0.5, 5, 0.4),
    (0.5, 1000, 1 / 12), (0.9, -30, 0.6), (1.5, 0, 0.125),
]
DIRICHLET = [
    (5, 2, 0), (5, 0.3, 2), (5, 0.5, 100), (8, 2, 0), (8, 0.5, 14),
    (12, 0.7, 50), (12, 0, 1000), (5, -0.5, 20),
]
CHI = [
    (0, 1), (0.3, 5), (0.9, 2), (0, 1000), (0.25, 10), (-1, 50), (2, 0),
    (0.5, 14), (0.75, -40), (1.5, 300), (0, 10000), (0.4, 1e-3),
]


def c(v):
    return f"{{{mp.nstr(v.real, 20, min_fixed=-30, max_fixed=30)}, {mp.nstr(v.imag, 20, min_fixed=-30, max_fixed=30)}}}"


def main():
    out = []
    out.append("// Generated by tests/oracles/generate_oracles.py (mpmath, 50 digits). Do not edit.")
    out.append("#pragma once\n\n#include <array>\n#include <complex>\n")
    out.append("namespace oracle {\n")
    out.append("struct ComplexCase {\n  std::complex<double> s;\n  std::complex<double> expected;\n};\n")
    out.append("struct HurwitzCase {\n  std::complex<double> s;\n  double a;\n  std::complex<double> expected;\n};\n")
    out.append("struct DirichletCase {\n  int k;\n  std::complex<double> s;\n  std::complex<double> expected;\n};\n")

    def table(name, rows):
        out.append(f"inline constexpr std::array<ComplexCase, {len(rows)}> {name}{{{{")
        out.extend(rows)
        out.append("}};\n")

    table("kLogGamma", [f"    {{{{{re}, {im}}}, {c(loggamma(mpc(re, im)))}}}," for re, im in LOG_GAMMA])
    table("kZeta", [f"    {{{{{re}, {im}}}, {c(zeta(mpc(re, im)))}}}," for re, im in ZETA])
    table("kChi", [f"    {{{{{re}, {im}}}, {c(chi(mpc(re, im)))}}}," for re, im in CHI])

    rows = [f"    {{{{{re}, {im}}}, {a!r}, {c(zeta(mpc(re, im), mpf(a)))}}}," for re, im, a in HURWITZ]
    out.append(f"inline constexpr std::array<HurwitzCase, {len(rows)}> kHurwitz{{{{")
    out.extend(rows)
    out.append("}};\n")

    rows = [
        f"    {{{k}, {{{re}, {im}}}, {c(dirichlet_l(mpc(re, im), CHARACTERS[k]))}}},"
        for k, re, im in DIRICHLET
    ]
    out.append(f"inline constexpr std::array<DirichletCase, {len(rows)}> kDirichlet{{{{")
    out.extend(rows)
    out.append("}};\n")

    out.append(f"inline constexpr double kZetaHalf = {mp.nstr(zeta(mpf(0.5)), 20)};")
    out.append(f"inline constexpr double kAbsChiImagAxisAt1 = {mp.nstr(abs(chi(mpc(0, 1))), 20)};")
    out.append(f"inline constexpr double kAbsChiImagAxisAt10 = {mp.nstr(abs(chi(mpc(0, 10))), 20)};")
    out.append(f"inline constexpr double kAbsGammaImagAt1 = {mp.nstr(abs(gamma(mpc(0, 1))), 20)};")
    out.append(f"inline constexpr double kAbsGammaImagAt2 = {mp.nstr(abs(gamma(mpc(0, 2))), 20)};")
    s = mpc(0, 2 * pi)
    out.append(f"inline constexpr double kSharpMarginAt2Pi = {mp.nstr(sqrt(s.imag / (2 * pi)) - abs(chi(s)), 20)};")
    out.append("\n}  // namespace oracle")
    path = pathlib.Path(__file__).resolve().parent.parent / "oracle_values.hpp"
    path.write_text("\n".join(out) + "\n")


if __name__ == "__main__":
    main()
