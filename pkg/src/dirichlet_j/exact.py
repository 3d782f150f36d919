"""Exact arithmetic substrate: pi-graded polynomials over the rationals,
and exact generators for Euler and Bernoulli numbers.

Rationals are `fractions.Fraction` (always stored reduced, positive
denominator). Constants such as lambda(2m) = (rational) * pi^{2m} live in
:class:`PiPoly`, a polynomial in pi with Fraction coefficients and
non-negative integer exponents.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Mapping, Union

Coeff = Union[int, Fraction]

__all__ = [
    "PiPoly",
    "half_pi_power",
    "euler_numbers",
    "bernoulli_numbers",
    "pi_fraction",
]


@lru_cache(maxsize=None)
def pi_fraction(digits: int) -> Fraction:
    """Rational approximation of pi good to at least `digits` decimal digits.

    Machin's formula evaluated in scaled-integer arithmetic, independent of
    any floating-point pi constant.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    guard = digits + 10
    unity = 10 ** guard

    def arccot(x: int) -> int:
        total = xpow = unity // x
        n, sign, xsq = 3, -1, x * x
        while xpow:
            xpow //= xsq
            total += sign * (xpow // n)
            n += 2
            sign = -sign
        return total

    scaled = 4 * (4 * arccot(5) - arccot(239))
    return Fraction(scaled, unity)


def _as_fraction(value: Coeff) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


class PiPoly:
    """Exact polynomial in pi: a map {exponent >= 0 -> nonzero Fraction}.

    Values are immutable; arithmetic returns new instances and never stores
    a zero coefficient, so `==` is canonical-form equality.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Coeff] | Iterable[tuple[int, Coeff]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        canon: dict[int, Fraction] = {}
        for exp, coeff in items:
            if not isinstance(exp, int) or exp < 0:
                raise ValueError(f"exponent must be a non-negative integer, got {exp!r}")
            c = canon.get(exp, Fraction(0)) + _as_fraction(coeff)
            if c:
                canon[exp] = c
            else:
                canon.pop(exp, None)
        object.__setattr__(self, "_terms", dict(sorted(canon.items())))

    @classmethod
    def zero(cls) -> "PiPoly":
        return cls()

    @classmethod
    def term(cls, coeff: Coeff, exp: int) -> "PiPoly":
        return cls(((exp, coeff),))

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __setattr__(self, name, value):
        raise AttributeError("PiPoly is immutable")

    def __add__(self, other: "PiPoly") -> "PiPoly":
        if not isinstance(other, PiPoly):
            return NotImplemented
        merged = dict(self._terms)
        for exp, coeff in other._terms.items():
            merged[exp] = merged.get(exp, Fraction(0)) + coeff
        return PiPoly(merged)

    def __sub__(self, other: "PiPoly") -> "PiPoly":
        if not isinstance(other, PiPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "PiPoly":
        return PiPoly({e: -c for e, c in self._terms.items()})

    def __mul__(self, other: Union["PiPoly", Coeff]) -> "PiPoly":
        if isinstance(other, PiPoly):
            prod: dict[int, Fraction] = {}
            for e1, c1 in self._terms.items():
                for e2, c2 in other._terms.items():
                    e = e1 + e2
                    prod[e] = prod.get(e, Fraction(0)) + c1 * c2
            return PiPoly(prod)
        if isinstance(other, (int, Fraction)):
            return PiPoly({e: c * other for e, c in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def evalf(self, digits: int = 15) -> float:
        """Evaluate at pi to at least `digits` significant decimal digits.

        The value is computed exactly against :func:`pi_fraction` and only
        rounded once on conversion to float, so the returned double is
        correctly rounded whenever digits >= 17.
        """
        if digits < 15:
            raise ValueError("digits must be >= 15")
        if not self._terms:
            return 0.0
        pi_f = pi_fraction(digits + 8)
        total = Fraction(0)
        power = Fraction(1)
        prev_exp = 0
        for exp, coeff in self._terms.items():
            power *= pi_f ** (exp - prev_exp)
            prev_exp = exp
            total += coeff * power
        return float(total)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exp, coeff in self._terms.items():
            if exp == 0:
                parts.append(str(coeff))
            else:
                base = "pi" if exp == 1 else f"pi^{exp}"
                if coeff == 1:
                    parts.append(base)
                elif coeff == -1:
                    parts.append(f"-{base}")
                else:
                    parts.append(f"{coeff}*{base}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self) -> str:
        return f"PiPoly({self})"


def half_pi_power(exp: int) -> PiPoly:
    """(pi/2)^exp as an exact PiPoly."""
    if exp < 0:
        raise ValueError("exponent must be >= 0")
    return PiPoly.term(Fraction(1, 2**exp), exp)


def euler_numbers(count: int) -> list[int]:
    """Signed Euler numbers [E_0, E_2, ..., E_{2(count-1)}].

    Computed from the exact power-series reciprocal of cos:
    sec(t) = sum_k c_k t^{2k} with c_0 = 1 and, from sec*cos = 1,
    c_k = -sum_{j=1..k} (-1)^j c_{k-j}/(2j)!.  Then E_{2k} = (-1)^k c_k (2k)!,
    an integer with alternating sign.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    c = [Fraction(1)] + [Fraction(0)] * (count - 1)
    for k in range(1, count):
        c[k] = -sum(Fraction((-1) ** j, factorial(2 * j)) * c[k - j] for j in range(1, k + 1))
    out = []
    for k in range(count):
        e = c[k] * factorial(2 * k)
        assert e.denominator == 1
        out.append((-1) ** k * e.numerator)
    return out


def bernoulli_numbers(count: int) -> list[Fraction]:
    """Even-index Bernoulli numbers [B_0, B_2, ..., B_{2(count-1)}].

    Classical binomial recurrence sum_{j<=m} C(m+1, j) B_j = 0 restricted to
    even indices, with the odd contribution B_1 = -1/2 folded in (all other
    odd B's vanish).
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    out = [Fraction(1)]
    for m in range(1, count):
        n = 2 * m
        acc = sum(comb(n + 1, 2 * j) * out[j] for j in range(m))
        acc += comb(n + 1, 1) * Fraction(-1, 2)
        out.append(-acc / (n + 1))
    return out
