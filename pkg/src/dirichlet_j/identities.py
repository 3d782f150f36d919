"""Machine-checked identities tying lambda/beta values to the J integrals.

Numeric checks compare independently computed sides and pass when the
discrepancy is below an explicit tolerance; exact checks are equalities of
canonical pi-polynomials and pass only on identical terms (zero tolerance).

Identity catalog (ids used in reports and by the CLI):
  thm1       lambda(2m+1) = sum_{k=1..m} (-1)^{k-1} lambda(2m-2k+2) J(2k-1)
                            + (-1)^m beta(1) J(2m)
  thm2       beta(2m)     = sum_{k=1..m} (-1)^{k-1} beta(2m-2k+1) J(2k-1)
  thm4_odd   J(2n-1) closed form vs quadrature
  thm4_even  J(2n)   closed form vs quadrature
  remark1_a  (pi/4) (pi/2)^{2m-1}/(2m-1)! as an alternating lambda sum (exact)
  remark1_b  (pi/4) (pi/2)^{2m}/(2m)! via beta(2m+1) and lambda sums (exact)
  eq_a2      sine series of order 3 vs lambda(2) x - beta(1) x^2/2
  eq_a3      sine series of order 2m+1 vs its polynomial closed form
  eq_a4      cosine series of order 2m vs its polynomial closed form
  collapse   coefficients of J(q) in the beta(2m) expansion: even q collapse
             to the zero polynomial, odd q to beta closed forms (exact)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Literal, Union

import numpy as np

from .exact import PiPoly, half_pi_power
from .jfun import j_euler_series, j_quadrature, j_closed_even, j_closed_odd, QuadratureConfig
from .special import beta_numeric, beta_odd_closed, lambda_even_closed, lambda_numeric

__all__ = [
    "IdentityReport",
    "check_theorem1",
    "check_theorem2",
    "check_theorem4",
    "check_remark1",
    "check_collapse",
    "check_fourier",
    "fourier_partial",
    "fourier_closed",
    "sine_value_poly_at_half_pi",
    "cosine_value_poly_at_half_pi",
]

_EPS = math.ulp(1.0)
Side = Union[float, PiPoly]
Kind = Literal["sine", "cosine"]
JSource = Literal["quadrature", "euler_series"]

TOL_FLOOR = 1e-10


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    params: tuple[int, ...]
    lhs: Side
    rhs: Side
    abs_diff: float
    exact: bool
    passed: bool
    tol: float = 0.0

    @property
    def rel_diff(self) -> float:
        scale = max(abs(_as_float(self.lhs)), abs(_as_float(self.rhs)))
        return self.abs_diff / scale if scale else self.abs_diff


def _as_float(side: Side) -> float:
    return side.evalf() if isinstance(side, PiPoly) else float(side)


def _exact_report(identity_id: str, params: tuple[int, ...], lhs: PiPoly, rhs: PiPoly) -> IdentityReport:
    equal = lhs == rhs
    diff = 0.0 if equal else abs((lhs - rhs).evalf())
    return IdentityReport(identity_id, params, lhs, rhs, diff, exact=True, passed=equal)


def _numeric_report(
    identity_id: str,
    params: tuple[int, ...],
    lhs: float,
    rhs: float,
    err_budget: float,
    tol: float | None,
) -> IdentityReport:
    if tol is None:
        tol = max(TOL_FLOOR, 100.0 * err_budget)
    diff = abs(lhs - rhs)
    return IdentityReport(identity_id, params, lhs, rhs, diff, exact=False, passed=diff <= tol, tol=tol)


def _j_value(q: int, source: JSource):
    if source == "euler_series":
        return j_euler_series(q, abs_tol=1e-13)
    return j_quadrature(q, QuadratureConfig(target_abs_tol=1e-13))


def check_theorem1(
    m: int,
    tol: float | None = None,
    j_source: JSource = "quadrature",
    use_proof_form: bool = True,
) -> IdentityReport:
    """lambda(2m+1) vs the alternating lambda/J combination.

    The verifier of record keeps the J(2k-1) factor inside the sum
    (`use_proof_form=True`); the variant without it is provided because it is
    numerically wrong already at m=2, and documenting that is part of the
    check suite.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    lam = lambda_numeric(2 * m + 1)
    rhs = 0.0
    err = lam.error_estimate
    for k in range(1, m + 1):
        lam_even = lambda_even_closed(m - k + 1).evalf()
        if use_proof_form:
            j = _j_value(2 * k - 1, j_source)
            rhs += (-1) ** (k - 1) * lam_even * j.value
            err += lam_even * j.error_estimate + 4.0 * _EPS * lam_even * abs(j.value)
        else:
            rhs += (-1) ** (k - 1) * lam_even
            err += 4.0 * _EPS * lam_even
    beta1 = beta_odd_closed(1).evalf()
    j_even = _j_value(2 * m, j_source)
    rhs += (-1) ** m * beta1 * j_even.value
    err += beta1 * j_even.error_estimate + 4.0 * _EPS * beta1 * abs(j_even.value)
    return _numeric_report("thm1", (m,), lam.value, rhs, err, tol)


def check_theorem2(m: int, tol: float | None = None, j_source: JSource = "quadrature") -> IdentityReport:
    """beta(2m) vs sum_{k=1..m} (-1)^{k-1} beta(2m-2k+1) J(2k-1)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    lhs = beta_numeric(2 * m)
    rhs = 0.0
    err = lhs.error_estimate
    for k in range(1, m + 1):
        bval = beta_odd_closed(m - k + 1).evalf()
        j = _j_value(2 * k - 1, j_source)
        rhs += (-1) ** (k - 1) * bval * j.value
        err += bval * j.error_estimate + 4.0 * _EPS * bval * abs(j.value)
    return _numeric_report("thm2", (m,), lhs.value, rhs, err, tol)


def check_theorem4(n: int, tol: float | None = None) -> tuple[IdentityReport, IdentityReport]:
    """Closed forms for J(2n-1) and J(2n) vs quadrature."""
    if n < 1:
        raise ValueError("n must be >= 1")
    reports = []
    for identity_id, q, closed in (
        ("thm4_odd", 2 * n - 1, j_closed_odd(n)),
        ("thm4_even", 2 * n, j_closed_even(n)),
    ):
        quad = j_quadrature(q, QuadratureConfig(target_abs_tol=1e-13))
        err = quad.error_estimate + closed.error_estimate
        reports.append(_numeric_report(identity_id, (n,), quad.value, closed.value, err, tol))
    return tuple(reports)


def sine_value_poly_at_half_pi(m: int) -> PiPoly:
    """Exact value of the order-(2m+1) sine series closed form at x = pi/2.

    Equals beta(2m+1) as a pi-polynomial.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    acc = PiPoly.zero()
    for k in range(1, m + 1):
        e = 2 * k - 1
        acc = acc + lambda_even_closed(m - k + 1) * Fraction((-1) ** (k - 1), factorial(e)) * half_pi_power(e)
    acc = acc + beta_odd_closed(1) * Fraction((-1) ** m, factorial(2 * m)) * half_pi_power(2 * m)
    return acc


def cosine_value_poly_at_half_pi(m: int) -> PiPoly:
    """Exact value of the order-2m cosine series closed form at x = pi/2.

    Collapses to the zero polynomial.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    acc = PiPoly.zero()
    for k in range(1, m + 1):
        e = 2 * k - 2
        acc = acc + lambda_even_closed(m - k + 1) * Fraction((-1) ** (k - 1), factorial(e)) * half_pi_power(e)
    acc = acc + beta_odd_closed(1) * Fraction((-1) ** m, factorial(2 * m - 1)) * half_pi_power(2 * m - 1)
    return acc


def check_remark1(m: int) -> tuple[IdentityReport, IdentityReport]:
    """Both exact closed-form identities for (pi/4)(pi/2)^j/j! at j = 2m-1, 2m."""
    if m < 1:
        raise ValueError("m must be >= 1")
    beta1 = beta_odd_closed(1)

    lhs_a = beta1 * Fraction(1, factorial(2 * m - 1)) * half_pi_power(2 * m - 1)
    rhs_a = PiPoly.zero()
    for k in range(m):
        rhs_a = rhs_a + lambda_even_closed(m - k) * Fraction((-1) ** k, factorial(2 * k)) * half_pi_power(2 * k)
    rhs_a = (-1) ** (m - 1) * rhs_a

    lhs_b = beta1 * Fraction(1, factorial(2 * m)) * half_pi_power(2 * m)
    rhs_b = beta_odd_closed(m + 1)
    for k in range(m):
        rhs_b = rhs_b - lambda_even_closed(m - k) * Fraction((-1) ** k, factorial(2 * k + 1)) * half_pi_power(
            2 * k + 1
        )
    rhs_b = (-1) ** m * rhs_b

    return (
        _exact_report("remark1_a", (m,), lhs_a, rhs_a),
        _exact_report("remark1_b", (m,), lhs_b, rhs_b),
    )


def check_collapse(m: int) -> list[IdentityReport]:
    """Exact coefficient collapse in the beta(2m) expansion over J(0..2m-1).

    Expanding beta(2m) through the divergent-companion coefficients gives,
    for each q, the coefficient of J(q):

      C_q = sum_{k : 2k-2 >= q, k <= m} (-1)^{k-1} lambda(2m-2k+2)
                (-1)^q (pi/2)^{2k-2-q} / (2k-2-q)!
            + (-1)^m beta(1) (-1)^q (pi/2)^{2m-1-q} / (2m-1-q)!

    Even q: C_q equals the cosine closed-form value at pi/2, i.e. the zero
    polynomial.  Odd q = 2k-1: C_q equals (-1)^{k-1} beta(2m-2k+1).
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    beta1 = beta_odd_closed(1)
    reports = []
    for q in range(2 * m):
        coeff = PiPoly.zero()
        for k in range((q + 3) // 2, m + 1):
            e = 2 * k - 2 - q
            coeff = coeff + lambda_even_closed(m - k + 1) * Fraction(
                (-1) ** (k - 1 + q), factorial(e)
            ) * half_pi_power(e)
        e = 2 * m - 1 - q
        coeff = coeff + beta1 * Fraction((-1) ** (m + q), factorial(e)) * half_pi_power(e)

        if q % 2 == 0:
            expected = (-1) ** (q // 2) * cosine_value_poly_at_half_pi(m - q // 2)
            passed = coeff == expected and expected.is_zero
            diff = 0.0 if passed else abs((coeff - expected).evalf())
            reports.append(
                IdentityReport("collapse", (m, q), coeff, expected, diff, exact=True, passed=passed)
            )
        else:
            k = (q + 1) // 2
            expected = (-1) ** (k - 1) * beta_odd_closed(m - k + 1)
            reports.append(_exact_report("collapse", (m, q), coeff, expected))
    return reports


def fourier_partial(kind: Kind, order: int, x: float, terms: int) -> float:
    """Partial sum of sum_k sin((2k-1)x)/(2k-1)^order (or cos in the numerator)."""
    if kind not in ("sine", "cosine"):
        raise ValueError("kind must be 'sine' or 'cosine'")
    if order < 2:
        raise ValueError("order must be >= 2")
    if terms < 1:
        raise ValueError("terms must be >= 1")
    total = 0.0
    chunk = 1 << 20
    for start in range(1, terms + 1, chunk):
        k = np.arange(start, min(start + chunk, terms + 1), dtype=float)
        a = 2.0 * k - 1.0
        num = np.sin(a * x) if kind == "sine" else np.cos(a * x)
        total += float(np.sum(num / a**order))
    return total


def fourier_closed(kind: Kind, m: int, x: float) -> float:
    """Polynomial closed form of the order-(2m+1) sine series (kind='sine')
    or order-2m cosine series (kind='cosine') on 0 <= x <= pi/2."""
    if kind not in ("sine", "cosine"):
        raise ValueError("kind must be 'sine' or 'cosine'")
    if m < 1:
        raise ValueError("m must be >= 1")
    if not 0.0 <= x <= math.pi / 2 + 4 * _EPS:
        raise ValueError("x must lie in [0, pi/2]")
    beta1 = beta_odd_closed(1).evalf()
    acc = 0.0
    if kind == "sine":
        for k in range(1, m + 1):
            lam = lambda_even_closed(m - k + 1).evalf()
            acc += lam * (-1) ** (k - 1) * x ** (2 * k - 1) / factorial(2 * k - 1)
        acc += (-1) ** m * beta1 * x ** (2 * m) / factorial(2 * m)
    else:
        for k in range(1, m + 1):
            lam = lambda_even_closed(m - k + 1).evalf()
            acc += lam * (-1) ** (k - 1) * x ** (2 * k - 2) / factorial(2 * k - 2)
        acc += (-1) ** m * beta1 * x ** (2 * m - 1) / factorial(2 * m - 1)
    return acc


def check_fourier(
    kind: Kind,
    m: int,
    x: float,
    terms: int,
    tol: float = 1e-5,
    params: tuple[int, ...] | None = None,
    identity_id: str | None = None,
) -> IdentityReport:
    """Partial sum vs polynomial closed form at a single point.

    The tolerance covers the series tail at `terms`; the default pairing of
    1e-5 with 1e6 terms is conservative for every order >= 2.
    """
    order = 2 * m + 1 if kind == "sine" else 2 * m
    lhs = fourier_partial(kind, order, x, terms)
    rhs = fourier_closed(kind, m, x)
    if identity_id is None:
        identity_id = "eq_a3" if kind == "sine" else "eq_a4"
    if params is None:
        params = (m,)
    diff = abs(lhs - rhs)
    return IdentityReport(identity_id, params, lhs, rhs, diff, exact=False, passed=diff <= tol, tol=tol)
