#!/usr/bin/env python3
"""Generate Chebyshev tables for the Riemann-Siegel correction functions C_0..C_4.

The C_k(p) are fixed combinations of derivatives of
    Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p),   0 <= p < 1.
Each C_k is expanded in Chebyshev polynomials of x = 2p - 1 and written as a
C++ include consumed by core/src/riemann_siegel.cpp.

Usage: gen_rs_coefficients.py > core/src/rs_coefficients.inc
"""
import sys

import mpmath as mp

mp.mp.dps = 60
DEGREE = 48
NODES = 96


def psi(p):
    return mp.cos(2 * mp.pi * (p * p - p - mp.mpf(1) / 16)) / mp.cos(2 * mp.pi * p)


def derivs(p, n):
    return [mp.diff(psi, p, k) for k in range(n + 1)]


def coefficients(p):
    d = derivs(p, 12)
    pi = mp.pi
    c0 = d[0]
    c1 = -d[3] / (96 * pi**2)
    c2 = d[2] / (64 * pi**2) + d[6] / (18432 * pi**4)
    c3 = -d[1] / (64 * pi**2) - d[5] / (3840 * pi**4) - d[9] / (5308416 * pi**6)
    c4 = (d[0] / (128 * pi**2) + 19 * d[4] / (24576 * pi**4)
          + 11 * d[8] / (5898240 * pi**6) + d[12] / (2038431744 * pi**8))
    return [c0, c1, c2, c3, c4]


def main():
    xs = [mp.cos(mp.pi * (k + mp.mpf(1) / 2) / NODES) for k in range(NODES)]
    values = [coefficients((x + 1) / 2) for x in xs]
    out = sys.stdout
    out.write("// Generated by tools/gen_rs_coefficients.py; do not edit.\n")
    out.write(f"inline constexpr int kRsChebDegree = {DEGREE};\n")
    out.write(f"inline constexpr double kRsCheb[5][{DEGREE + 1}] = {{\n")
    for k in range(5):
        coeffs = []
        for j in range(DEGREE + 1):
            s = mp.fsum(values[i][k] * mp.cos(j * mp.pi * (i + mp.mpf(1) / 2) / NODES)
                        for i in range(NODES))
            c = 2 * s / NODES
            if j == 0:
                c /= 2
            coeffs.append(c)
        out.write("    {")
        out.write(", ".join(mp.nstr(c, 20, min_fixed=0, max_fixed=0) for c in coeffs))
        out.write("},\n")
    out.write("};\n")


if __name__ == "__main__":
    main()
