#!/usr/bin/env python3
"""Regenerate the frozen reference constants used in the test suite.

Everything is computed with mpmath at 30 decimal digits, independently of
the package under test: J(s) by direct adaptive quadrature of the defining
integral, lambda via mpmath's zeta, beta by direct alternating summation.
Values are printed with 17 significant digits (enough to round-trip a
float64); paste them into the tests when they change.

Requires the `test` extra (mpmath).
"""

import mpmath
from mpmath import gamma, log, mp, mpf, nstr, pi, quad, sin, tan, zeta

mp.dps = 30


def j_integral(s):
    s = mpf(s)
    return quad(lambda x: x**s / sin(x), [0, pi / 2]) * 2 / pi / gamma(s + 1)


def dirichlet_lambda(s):
    return (1 - 2 ** (-mpf(s))) * zeta(s)


def dirichlet_beta(s):
    return mpmath.nsum(lambda n: (-1) ** (n - 1) / (2 * n - 1) ** mpf(s), [1, mpmath.inf])


def show(label, value):
    print(f"{label:<22} = {nstr(value, 17)}")


def main():
    show("pi", pi)
    show("sin(pi/4)", sin(pi / 4))
    show("pi^2/8", pi**2 / 8)
    show("pi/4", pi / 4)
    show("pi^3/32", pi**3 / 32)
    show("(pi/4)*sqrt(2)", pi / 4 * mpmath.sqrt(2))
    for s in (2, 3, 4, 5, 7, 9, 11, 12):
        show(f"lambda({s})", dirichlet_lambda(s))
    for s in (1, 2, 3, 5, 7, 8):
        show(f"beta({s})", dirichlet_beta(s))
    for s in (mpf("0.5"), 1, 2, 3, mpf("3.5"), 4, 5, 6, 7, 8):
        show(f"J({s})", j_integral(s))
    show("-ln(tan(1/2))/2", -log(tan(mpf("0.5"))) / 2)
    show("-ln(tan(pi/6))/2", -log(tan(pi / 6)) / 2)


if __name__ == "__main__":
    main()
