"""Structured trigonometric matrices, finite trig sums, and exact Taylor facts.

The n x n odd-frequency sine/cosine matrices with entries at angles
(2i-1)(2j-1)pi/(4n) square to (n/2) I, hence are (2/n)-scaled involutions.
Entry angles are reduced modulo 2 pi exactly on the rational multiple of pi
before any trig call, so large index products cost no accuracy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import factorial
from typing import Literal

import numpy as np

from .exact import euler_numbers
from .identities import IdentityReport

__all__ = [
    "OddGridMatrix",
    "build_matrix",
    "check_involution",
    "trig_sum_check",
    "log_tan_series",
    "csc_taylor_check",
]

Kind = Literal["sine", "cosine"]
TrigLemma = Literal["1_cos", "1_sin", "2_altcos"]


@dataclass(frozen=True)
class OddGridMatrix:
    n: int
    kind: Kind
    entries: np.ndarray

    def __post_init__(self):
        self.entries.setflags(write=False)


def build_matrix(n: int, kind: Kind) -> OddGridMatrix:
    """Symmetric n x n matrix with entry (i, j) = sin or cos of
    (2i-1)(2j-1)pi/(4n), indices 1-based."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if kind not in ("sine", "cosine"):
        raise ValueError("kind must be 'sine' or 'cosine'")
    odd = 2 * np.arange(1, n + 1, dtype=np.int64) - 1
    prod = np.outer(odd, odd) % (8 * n)  # angle numerator, period 8n <-> 2 pi
    theta = prod * (math.pi / (4 * n))
    entries = np.sin(theta) if kind == "sine" else np.cos(theta)
    return OddGridMatrix(n=n, kind=kind, entries=entries)


def check_involution(n: int, kind: Kind, tol: float | None = None) -> IdentityReport:
    """max |M^2 - (n/2) I| over all entries, by direct multiplication."""
    if tol is None:
        tol = n * 1e-13
    m = build_matrix(n, kind)
    square = m.entries @ m.entries
    target = (n / 2.0) * np.eye(n)
    diff = float(np.max(np.abs(square - target)))
    identity_id = "lemma3" if kind == "sine" else "lemma4"
    return IdentityReport(identity_id, (n,), diff, 0.0, diff, exact=False, passed=diff <= tol, tol=tol)


def trig_sum_check(lemma: TrigLemma, n: int, x: float, case: int | None = None) -> IdentityReport:
    """Direct n-term trig sum vs its closed form.

      1_cos:    sum cos((2k-1)x)          = csc(x) sin(2nx) / 2
      1_sin:    sum sin((2k-1)x)          = csc(x) sin(nx)^2
      2_altcos: sum (-1)^{k-1}cos((2k-1)x) = sec(x) sin(n(pi-2x)/2)^2

    x at a pole of the closed form (multiples of pi for the first two, odd
    multiples of pi/2 for the third) is rejected.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    k = np.arange(1, n + 1, dtype=float)
    a = (2.0 * k - 1.0) * x
    if lemma == "1_cos":
        if abs(math.sin(x)) < 1e-12:
            raise ValueError("x is at a pole of csc")
        direct = float(np.sum(np.cos(a)))
        closed = 0.5 * math.sin(2 * n * x) / math.sin(x)
        identity_id = "lemma1_cos"
    elif lemma == "1_sin":
        if abs(math.sin(x)) < 1e-12:
            raise ValueError("x is at a pole of csc")
        direct = float(np.sum(np.sin(a)))
        closed = math.sin(n * x) ** 2 / math.sin(x)
        identity_id = "lemma1_sin"
    elif lemma == "2_altcos":
        if abs(math.cos(x)) < 1e-12:
            raise ValueError("x is at a pole of sec")
        direct = float(np.sum(np.where(k % 2 == 1, 1.0, -1.0) * np.cos(a)))
        closed = math.sin(n * (math.pi - 2.0 * x) / 2.0) ** 2 / math.cos(x)
        identity_id = "lemma2"
    else:
        raise ValueError("lemma must be one of '1_cos', '1_sin', '2_altcos'")
    tol = n * 1e-13
    diff = abs(direct - closed)
    params = (n,) if case is None else (n, case)
    return IdentityReport(identity_id, params, direct, closed, diff, exact=False, passed=diff <= tol, tol=tol)


def log_tan_series(x: float, terms: int) -> float:
    """Partial sum of sum_k cos((2k-1)x)/(2k-1), which converges to
    -(1/2) ln(tan(x/2)) on (0, pi)."""
    if not 0.0 < x < math.pi:
        raise ValueError("x must lie in (0, pi)")
    if terms < 1:
        raise ValueError("terms must be >= 1")
    total = 0.0
    chunk = 1 << 20
    for start in range(1, terms + 1, chunk):
        k = np.arange(start, min(start + chunk, terms + 1), dtype=float)
        a = 2.0 * k - 1.0
        total += float(np.sum(np.cos(a * x) / a))
    return total


def csc_taylor_check(k_max: int) -> IdentityReport:
    """Even Taylor coefficients of csc at pi/2 vs the Euler numbers.

    csc(pi/2 + t) = sec(t); the reciprocal of the cosine series is computed
    locally in exact rationals, coefficient k is scaled by (2k)!, and the
    result must equal (-1)^k E_{2k} exactly for k = 0..k_max.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    from fractions import Fraction

    from .exact import PiPoly

    count = k_max + 1
    sec = [Fraction(1)] + [Fraction(0)] * k_max
    for k in range(1, count):
        sec[k] = -sum(Fraction((-1) ** j, factorial(2 * j)) * sec[k - j] for j in range(1, k + 1))
    derivatives = [sec[k] * factorial(2 * k) for k in range(count)]
    expected = [Fraction((-1) ** k * e) for k, e in enumerate(euler_numbers(count))]
    passed = derivatives == expected
    # show the first mismatch when failing, the top coefficient when passing
    idx = next((k for k in range(count) if derivatives[k] != expected[k]), k_max)
    lhs = PiPoly.term(derivatives[idx], 0)
    rhs = PiPoly.term(expected[idx], 0)
    try:
        diff = 0.0 if passed else abs(float(derivatives[idx] - expected[idx]))
    except OverflowError:
        diff = math.inf
    return IdentityReport("lemma8", (k_max,), lhs, rhs, diff, exact=True, passed=passed)
