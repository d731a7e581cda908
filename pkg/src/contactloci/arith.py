"""Exact rational arithmetic and one-variable integer polynomials.

Rationals are :class:`fractions.Fraction`. Polynomials are dense tuples of
Python ints in ascending degree order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Rational = Fraction
Number = Union[int, Fraction]


@lru_cache(maxsize=None)
def _binom_cached(a: int, b: int) -> int:
    return math.comb(a, b)


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero unless ``0 <= b <= a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return _binom_cached(a, b)


def parse_rational(value) -> Fraction:
    """Parse an int or a decimal string such as ``"3"``, ``"-2/5"``."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot read an exact rational from {value!r}")


def rational_to_json(x: Number) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _trim(coeffs: Iterable[int]) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _fmt_terms(pairs, var):
    # pairs: (degree, coefficient), nonzero coefficients, descending degree
    out = []
    for deg, c in pairs:
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if deg == 0:
            body = str(a)
        else:
            mono = var if deg == 1 else f"{var}^{deg}"
            body = mono if a == 1 else f"{a}*{mono}"
        out.append((sign, body))
    if not out:
        return "0"
    first_sign, first = out[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        s += f" {sign} {body}"
    return s


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial in one variable; ``coeffs[k]`` multiplies ``x**k``."""

    coeffs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPoly":
        return cls((0,) * degree + (coeff,))

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[k] + other[k] for k in range(n))

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        result = IntPoly.one()
        for _ in range(e):
            result = result * self
        return result

    def __call__(self, x: Number) -> Number:
        acc: Number = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_json(self) -> list:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> "IntPoly":
        return cls(int(c) for c in data)

    def format(self, var: str = "t") -> str:
        pairs = [(k, c) for k, c in enumerate(self.coeffs) if c]
        return _fmt_terms(reversed(pairs), var)

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial ``sum coeffs[k] * x**(min_degree + k)``."""

    min_degree: int = 0
    coeffs: tuple = ()

    def __post_init__(self):
        c = [int(v) for v in self.coeffs]
        lo = 0
        while lo < len(c) and c[lo] == 0:
            lo += 1
        c = list(_trim(c[lo:]))
        shift = self.min_degree + lo if c else 0
        object.__setattr__(self, "coeffs", tuple(c))
        object.__setattr__(self, "min_degree", shift)

    @classmethod
    def from_intpoly(cls, p: IntPoly, shift: int = 0) -> "LaurentPoly":
        """``p(x) * x**shift``."""
        return cls(shift, p.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def max_degree(self) -> int:
        return self.min_degree + len(self.coeffs) - 1

    def coeff(self, deg: int) -> int:
        k = deg - self.min_degree
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.min_degree, other.min_degree)
        hi = max(self.max_degree, other.max_degree)
        return LaurentPoly(lo, [self.coeff(k) + other.coeff(k) for k in range(lo, hi + 1)])

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.min_degree, [-c for c in self.coeffs])

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly(self.min_degree, [c * other for c in self.coeffs])
        prod = IntPoly(self.coeffs) * IntPoly(other.coeffs)
        return LaurentPoly(self.min_degree + other.min_degree, prod.coeffs)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``x**k``."""
        return LaurentPoly(self.min_degree + k, self.coeffs)

    def __call__(self, x: Number) -> Number:
        if self.is_zero():
            return 0
        body = IntPoly(self.coeffs)(x)
        if self.min_degree >= 0:
            return body * x**self.min_degree
        return Fraction(body) / Fraction(x) ** (-self.min_degree)

    def to_intpoly(self) -> IntPoly:
        if self.is_zero():
            return IntPoly()
        if self.min_degree < 0:
            raise ValueError("negative powers present")
        return IntPoly((0,) * self.min_degree + self.coeffs)

    def to_json(self) -> dict:
        return {"min_deg": self.min_degree, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "LaurentPoly":
        return cls(int(data["min_deg"]), [int(c) for c in data["coeffs"]])

    def format(self, var: str = "q") -> str:
        pairs = [(self.min_degree + k, c) for k, c in enumerate(self.coeffs) if c]
        return _fmt_terms(reversed(pairs), var)

    def __str__(self) -> str:
        return self.format()
