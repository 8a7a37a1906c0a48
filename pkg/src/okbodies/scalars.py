"""Exact scalars: arbitrary-precision rationals and quadratic irrationals a + b*sqrt(n).

Rationals are ``fractions.Fraction`` (always reduced, positive denominator),
with integers accepted everywhere and used whenever the denominator is 1.
No floating point enters any computation; ``float()`` conversions exist only
for figure emission.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Rational = Fraction

Scalar = Union[int, Fraction]


def as_scalar(value) -> Scalar:
    """Normalize to int (denominator 1) or reduced Fraction."""
    t = type(value)
    if t is int:
        return value
    if t is Fraction:
        return value.numerator if value.denominator == 1 else value
    if t is bool or isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"not an exact scalar: {value!r}")


def parse_rational(text: str) -> Scalar:
    """Parse "p/q" (or a plain integer / decimal string) into an exact scalar."""
    try:
        return as_scalar(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational {text!r}") from exc


def format_rational(value: Scalar) -> str:
    """Serialize as "p/q", omitting "/q" for integers."""
    value = as_scalar(value)
    if isinstance(value, int):
        return str(value)
    return f"{value.numerator}/{value.denominator}"


def scale_to_integers(values) -> tuple[list[int], int]:
    """Clear denominators of exact rationals: (integer vector, common positive denominator)."""
    values = list(values)
    lcm = 1
    for v in values:
        d = v.denominator  # ints carry denominator 1
        if d != 1:
            lcm = lcm * d // math.gcd(lcm, d)
    if lcm == 1:
        return [int(v) for v in values], 1
    return [v.numerator * (lcm // v.denominator) for v in values], lcm


def _square_free_split(n: int) -> tuple[int, int]:
    """n = s**2 * n0 with n0 square-free; returns (s, n0)."""
    s, n0, p = 1, 1, 2
    while p * p <= n:
        exp = 0
        while n % p == 0:
            n //= p
            exp += 1
        s *= p ** (exp // 2)
        if exp % 2:
            n0 *= p
        p += 1 if p == 2 else 2
    return s, n0 * n


def sqrt_scalar(n: int):
    """Exact sqrt of a nonnegative integer: int if perfect square, else QuadraticNumber."""
    if n < 0:
        raise ValueError("negative radicand")
    return QuadraticNumber.make(0, 1, n)


class QuadraticNumber:
    """Exact element a + b*sqrt(n) of a real quadratic field.

    Instances always have square-free radicand n > 1 and b != 0; use
    :meth:`make`, which collapses perfect-square radicands to plain scalars.
    Comparisons and sign determination are exact (via squaring, never floats).
    Immutable and hashable.
    """

    __slots__ = ("a", "b", "n")

    def __init__(self, a: Scalar, b: Scalar, n: int):
        if not isinstance(n, int) or n <= 1:
            raise ValueError("radicand must be a square-free integer > 1")
        self.a = as_scalar(a)
        self.b = as_scalar(b)
        self.n = n
        if self.b == 0:
            raise ValueError("use QuadraticNumber.make for degenerate values")

    @staticmethod
    def make(a, b, n: int):
        """Build a + b*sqrt(n), collapsing to a rational when possible."""
        if not isinstance(n, int) or n < 0:
            raise ValueError("radicand must be a nonnegative integer")
        a, b = as_scalar(a), as_scalar(b)
        if b == 0 or n == 0:
            return a
        s, n0 = _square_free_split(n)
        if n0 == 1:
            return as_scalar(a + b * s)
        return QuadraticNumber(a, b * s if s != 1 else b, n0)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, QuadraticNumber):
            if other.n != self.n:
                raise ValueError(
                    f"mixed radicands {self.n} and {other.n} are not supported"
                )
            return other.a, other.b
        return as_scalar(other), 0

    def __add__(self, other):
        try:
            oa, ob = self._coerce(other)
        except TypeError:
            return NotImplemented
        return QuadraticNumber.make(self.a + oa, self.b + ob, self.n)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.n)

    def __mul__(self, other):
        try:
            oa, ob = self._coerce(other)
        except TypeError:
            return NotImplemented
        return QuadraticNumber.make(
            self.a * oa + self.b * ob * self.n, self.a * ob + self.b * oa, self.n
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            oa, ob = self._coerce(other)
        except TypeError:
            return NotImplemented
        norm = oa * oa - ob * ob * self.n
        if norm == 0:
            raise ZeroDivisionError("division by zero quadratic number")
        num = self * QuadraticNumber.make(oa, -ob, self.n)
        inv = Fraction(1, 1) / norm
        if isinstance(num, QuadraticNumber):
            return QuadraticNumber.make(num.a * inv, num.b * inv, self.n)
        return as_scalar(num * inv)

    def __rtruediv__(self, other):
        norm = self.a * self.a - self.b * self.b * self.n  # nonzero: irrational
        inv = QuadraticNumber.make(
            Fraction(self.a, 1) / norm, Fraction(-self.b, 1) / norm, self.n
        )
        return inv * other

    def conjugate(self) -> "QuadraticNumber":
        return QuadraticNumber(self.a, -self.b, self.n)

    # -- comparisons ------------------------------------------------------

    def sign(self) -> int:
        a, b = self.a, self.b
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sa == 0:
            return sb
        if sa == sb:
            return sa
        # opposite signs: compare a^2 against n*b^2 (cannot tie, n square-free)
        return sa if a * a > self.n * b * b else sb

    def _cmp(self, other) -> int:
        diff = self - other
        if isinstance(diff, QuadraticNumber):
            return diff.sign()
        return (diff > 0) - (diff < 0)

    def __eq__(self, other):
        if isinstance(other, QuadraticNumber):
            return (self.a, self.b, self.n) == (other.a, other.b, other.n)
        if isinstance(other, (int, Fraction)):
            return False  # b != 0 means irrational
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.n))

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __bool__(self):
        return True

    def __float__(self):
        # presentation only (figures); never used in core computations
        return float(self.a) + float(self.b) * math.sqrt(self.n)

    def __repr__(self):
        return f"QuadraticNumber({self.a!r}, {self.b!r}, {self.n})"

    def __str__(self):
        b = format_rational(self.b)
        sign = "+" if self.b > 0 else "-"
        babs = format_rational(abs(self.b))
        lead = "" if self.a == 0 and self.b > 0 else f"{format_rational(self.a)} {sign} "
        if self.a == 0:
            return f"{'-' if self.b < 0 else ''}{babs}*sqrt({self.n})" if babs != "1" else (
                f"{'-' if self.b < 0 else ''}sqrt({self.n})"
            )
        mult = "" if babs == "1" else f"{babs}*"
        return f"{lead}{mult}sqrt({self.n})"

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "a": format_rational(self.a),
            "b": format_rational(self.b),
            "n": self.n,
        }

    @staticmethod
    def from_json(payload: dict):
        return QuadraticNumber.make(
            parse_rational(payload["a"]), parse_rational(payload["b"]), int(payload["n"])
        )


def sign_of(value) -> int:
    """Exact sign of a rational or quadratic scalar."""
    if isinstance(value, QuadraticNumber):
        return value.sign()
    return (value > 0) - (value < 0)
