"""The cosecant-moment integral J(s) by four independent routes.

J(s) = (1/Gamma(s+1)) * (2/pi) * integral_0^{pi/2} x^s / sin(x) dx,
convergent for s > 0 (the integrand behaves like x^{s-1} at the origin).

Routes:
  * tanh-sinh quadrature of the defining integral (any real s > 0);
  * the Euler-number series  J(n) = sum_k (-1)^k E_{2k} (pi/2)^{n+2k} / (n+2k+1)!
    for integer n, with its slowly decaying tail completed analytically;
  * finite midpoint Riemann sums (diagnostic approximant);
  * closed forms at integer arguments assembled from beta/lambda values.

The divergent companion expansion (the same limit with cos in place of sin)
is never evaluated numerically; only its exact expansion coefficients in the
J(k) are produced, for use by the exact identity checks.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

import numpy as np

from .exact import PiPoly, euler_numbers, half_pi_power
from .special import EvalResult, beta_numeric, lambda_numeric

__all__ = [
    "QuadratureConfig",
    "ConvergenceError",
    "WExpansion",
    "j_quadrature",
    "j_euler_series",
    "j_euler_series_terms",
    "j_riemann_sum",
    "j_closed_odd",
    "j_closed_even",
    "w_expansion",
]

_EPS = math.ulp(1.0)
_HALF_PI = math.pi / 2.0


class ConvergenceError(RuntimeError):
    """Raised when an evaluator cannot meet its tolerance within its caps."""


@dataclass(frozen=True)
class QuadratureConfig:
    target_abs_tol: float = 1e-13
    max_level: int = 12

    def __post_init__(self):
        if self.target_abs_tol <= 0:
            raise ValueError("target_abs_tol must be > 0")
        if not 1 <= self.max_level <= 20:
            raise ValueError("max_level must be in 1..20")


def _gamma_s_plus_1(s: float) -> float:
    if float(s).is_integer():
        return float(factorial(int(s)))
    return math.gamma(s + 1.0)


def _integrand(x: np.ndarray | float, s: float):
    """x^s / sin(x) on (0, pi/2); x^s via exp(s log x) to behave for tiny x."""
    return np.exp(s * np.log(x)) / np.sin(x)


# ---------------------------------------------------------------------------
# tanh-sinh quadrature on the fixed interval (0, pi/2)
# ---------------------------------------------------------------------------
#
# Substitution x(t) = (pi/4) (1 + tanh((pi/2) sinh t)) maps the real line onto
# (0, pi/2) with double-exponentially decaying weights, so the trapezoid rule
# in t converges at roughly digits ~ 2^level even with an integrable endpoint
# singularity.  Nodes near the left endpoint are generated from the stable
# form x = (pi/2) e^{2z}/(1+e^{2z}), which keeps x positive down to ~1e-304.

_T_MAX = 6.2  # beyond this the node weight underflows to 0
_node_cache: dict[int, tuple[np.ndarray, np.ndarray]] = {}
_node_lock = threading.Lock()


def _build_level(level: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes/weights new at `level`: level 0 is the unit grid, higher levels
    contribute only the odd multiples of h = 2^-level."""
    h = 2.0 ** (-level)
    xs: list[float] = []
    ws: list[float] = []
    for k in range(int(_T_MAX / h) + 1):
        if level > 0 and k % 2 == 0:
            continue
        for t in ((0.0,) if k == 0 else (k * h, -k * h)):
            z = _HALF_PI * math.sinh(t)
            ez = math.exp(-2.0 * abs(z))
            w = 0.5 * _HALF_PI * _HALF_PI * math.cosh(t) * 4.0 * ez / (1.0 + ez) ** 2
            if w == 0.0:
                continue
            if z >= 0.0:
                x = _HALF_PI / (1.0 + ez)
            else:
                x = _HALF_PI * ez / (1.0 + ez)
            if x == 0.0 or x == _HALF_PI:
                continue
            xs.append(x)
            ws.append(w)
    return np.asarray(xs), np.asarray(ws)


def _level_nodes(level: int) -> tuple[np.ndarray, np.ndarray]:
    try:
        return _node_cache[level]
    except KeyError:
        pass
    built = _build_level(level)
    with _node_lock:
        return _node_cache.setdefault(level, built)


def j_quadrature(s: float, cfg: QuadratureConfig = QuadratureConfig()) -> EvalResult:
    """J(s) for real s > 0 by level-doubling tanh-sinh quadrature.

    Stops when two successive refinement levels agree to within
    cfg.target_abs_tol / 2 (measured on J itself); raises
    :class:`ConvergenceError` if cfg.max_level is exhausted first.
    """
    if s <= 0:
        raise ValueError("J(s) requires s > 0")
    prefactor = 2.0 / math.pi / _gamma_s_plus_1(s)
    total = 0.0
    value = 0.0
    work = 0
    for level in range(cfg.max_level + 1):
        xs, ws = _level_nodes(level)
        # s very near 0 overflows the integrand at the innermost nodes; the
        # resulting non-finite sums simply fail the convergence test below
        with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
            part = float(ws @ _integrand(xs, s))
        work += xs.size
        h = 2.0 ** (-level)
        total = part if level == 0 else total / 2.0 + h * part
        new_value = total * prefactor
        if level > 0:
            diff = abs(new_value - value)
            if diff <= cfg.target_abs_tol / 2.0:
                err = max(diff, 4.0 * _EPS * abs(new_value))
                return EvalResult(new_value, err, "quadrature", work)
        value = new_value
    raise ConvergenceError(
        f"tanh-sinh quadrature did not reach tol={cfg.target_abs_tol:g} "
        f"for s={s} within max_level={cfg.max_level}"
    )


# ---------------------------------------------------------------------------
# Euler-number series
# ---------------------------------------------------------------------------
#
# All series terms are positive: (-1)^k E_{2k} = |E_{2k}|.  Since
# |E_{2k}| = 2^{2k+2} (2k)!/pi^{2k+1} * beta(2k+1), each term equals
# beta(2k+1) * b_k with the envelope b_k = 4 (pi/2)^n / pi * (2k)!/(n+2k+1)!.
# The envelope decays only like k^-(n+1), far too slowly to truncate at
# realistic tolerances, but sum_k b_k has an elementary closed form, and
# beta(2k+1) -> 1 at the geometric rate 3^-(2k+1).  So we sum K+1 exact
# terms, add the closed-form remainder sum_{k>K} b_k, and bound the
# difference  sum_{k>K} b_k (1 - beta(2k+1)) <= (9/8) b_{K+1} 3^-(2K+3),
# which shrinks below any practical tolerance within a few dozen terms.

_EULER_MAX_INDEX_DEFAULT = 4000

_euler_abs: list[int] = []
_euler_lock = threading.Lock()


def _euler_abs_table(count: int) -> list[int]:
    """|E_0|, |E_2|, ... |E_{2(count-1)}|, grown on demand and cached."""
    global _euler_abs
    table = _euler_abs
    if len(table) < count:
        fresh = [abs(e) for e in euler_numbers(count)]
        with _euler_lock:
            if len(_euler_abs) < count:
                _euler_abs = fresh
            table = _euler_abs
    return table


def _envelope_total(n: int) -> float:
    """sum_{k>=0} (2k)!/(n+2k+1)! = (1/n!) sum_{i>=0} 2^-(i+1)/(n+i).

    Positive geometric series; summed until the tail is below 1e-22 relative.
    """
    acc = 0.0
    powhalf = 0.5
    i = 0
    while True:
        term = powhalf / (n + i)
        acc += term
        if term < 1e-22 * acc:
            return acc / _gamma_s_plus_1(n)
        powhalf *= 0.5
        i += 1


def j_euler_series_terms(n: int, count: int, max_index: int = _EULER_MAX_INDEX_DEFAULT):
    """First `count` terms |E_{2k}| (pi/2)^{n+2k} / (n+2k+1)!, k = 0..count-1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if 2 * (count - 1) > max_index:
        raise ConvergenceError(f"Euler table capped at index {max_index}")
    e = _euler_abs_table(count)
    terms = []
    t = _HALF_PI**n / _gamma_s_plus_1(n + 1)
    for k in range(count):
        if k:
            ratio = float(Fraction(e[k], e[k - 1]))
            t *= ratio * _HALF_PI * _HALF_PI / ((n + 2 * k) * (n + 2 * k + 1))
        terms.append(t)
    return terms


def j_euler_series(
    n: int, abs_tol: float = 1e-12, max_index: int = _EULER_MAX_INDEX_DEFAULT
) -> EvalResult:
    """J(n) for integer n >= 1 from the Euler-number series.

    Terms are summed exactly as stated until the analytic bound on the
    residual left after tail completion drops below abs_tol/2; the
    closed-form envelope remainder is then added.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if abs_tol <= 0:
        raise ValueError("abs_tol must be > 0")

    scale = 4.0 * _HALF_PI**n / math.pi
    # envelope b_k = scale * (2k)!/(n+2k+1)!, kept alongside the true terms
    b = scale / _gamma_s_plus_1(n + 1)
    t = _HALF_PI**n / _gamma_s_plus_1(n + 1)
    partial = 0.0
    envelope_head = 0.0
    k = 0
    e = _euler_abs_table(8)
    while True:
        partial += t
        envelope_head += b
        b_next = b * (2 * k + 1) * (2 * k + 2) / ((n + 2 * k + 2) * (n + 2 * k + 3))
        residual = 1.125 * b_next * 3.0 ** (-(2 * k + 3))
        if residual <= abs_tol / 2.0:
            break
        k += 1
        if 2 * k > max_index:
            raise ConvergenceError(
                f"abs_tol={abs_tol:g} needs Euler numbers beyond index {max_index}"
            )
        if k >= len(e):
            e = _euler_abs_table(2 * len(e))
        ratio = float(Fraction(e[k], e[k - 1]))
        t *= ratio * _HALF_PI * _HALF_PI / ((n + 2 * k) * (n + 2 * k + 1))
        b = b_next

    tail = scale * _envelope_total(n) - envelope_head
    value = partial + tail
    err = residual + 8.0 * _EPS * abs(value)
    return EvalResult(value, err, "euler_series", k + 1)


# ---------------------------------------------------------------------------
# Riemann-sum approximant and closed forms
# ---------------------------------------------------------------------------


def j_riemann_sum(s: float, n: int) -> float:
    """Finite midpoint-grid approximant to J(s):
    (1/(Gamma(s+1) n)) sum_{p=1..n} x_p^s / sin(x_p),  x_p = (2p-1)pi/(4n).

    Diagnostic only; no error estimate is claimed.
    """
    if s <= 0:
        raise ValueError("J(s) requires s > 0")
    if n < 1:
        raise ValueError("n must be >= 1")
    p = np.arange(1, n + 1, dtype=float)
    x = (2.0 * p - 1.0) * math.pi / (4.0 * n)
    return float(np.sum(_integrand(x, s))) / (_gamma_s_plus_1(s) * n)


def j_closed_odd(n: int, digits: int = 15) -> EvalResult:
    """J(2n-1) from the closed form
    (pi/4) J(2n-1) = (-1)^{n-1} sum_{k=0}^{n-1} (-1)^k beta(2n-2k) (pi/2)^{2k} / (2k)!.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    acc = 0.0
    err = 0.0
    work = 0
    for k in range(n):
        factor = PiPoly.term(Fraction(1, 4**k * factorial(2 * k)), 2 * k).evalf(max(digits, 15))
        b = beta_numeric(2 * n - 2 * k, digits)
        acc += (-1) ** k * b.value * factor
        err += b.error_estimate * factor
        work += b.work
    value = (-1) ** (n - 1) * acc * 4.0 / math.pi
    err = (err + 4.0 * _EPS * abs(acc)) * 4.0 / math.pi
    return EvalResult(value, err, "closed_form", work)


def j_closed_even(n: int, digits: int = 15) -> EvalResult:
    """J(2n) from the closed form
    (pi/4) J(2n) = (-1)^n [lambda(2n+1)
                   - sum_{k=0}^{n-1} (-1)^k beta(2n-2k) (pi/2)^{2k+1} / (2k+1)!].
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    lam = lambda_numeric(2 * n + 1, digits)
    acc = lam.value
    err = lam.error_estimate
    work = lam.work
    for k in range(n):
        factor = PiPoly.term(
            Fraction(1, 2 ** (2 * k + 1) * factorial(2 * k + 1)), 2 * k + 1
        ).evalf(max(digits, 15))
        b = beta_numeric(2 * n - 2 * k, digits)
        acc -= (-1) ** k * b.value * factor
        err += b.error_estimate * factor
        work += b.work
    value = (-1) ** n * acc * 4.0 / math.pi
    err = (err + 4.0 * _EPS * abs(acc)) * 4.0 / math.pi
    return EvalResult(value, err, "closed_form", work)


@dataclass(frozen=True)
class WExpansion:
    """Exact expansion coefficients of the divergent cosine-denominator
    companion of J at integer order m in terms of J(0..m):
    coefficient of J(k) is (-1)^k (pi/2)^{m-k} / (m-k)!.

    Symbolic bookkeeping only; neither the companion nor J(0) is a number.
    """

    order: int
    coefficients: tuple[PiPoly, ...] = field(default_factory=tuple)


def w_expansion(m: int) -> WExpansion:
    if m < 0:
        raise ValueError("m must be >= 0")
    coeffs = tuple(
        (-1) ** k * Fraction(1, factorial(m - k)) * half_pi_power(m - k) for k in range(m + 1)
    )
    return WExpansion(order=m, coefficients=coeffs)
