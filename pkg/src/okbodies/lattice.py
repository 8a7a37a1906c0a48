"""Picard lattice of the plane blown up in n <= 9 points.

A class is stored in the (d; m_1, ..., m_n) convention: it represents
d*e0 - sum_i m_i*e_i, so rows of curve tables can be typed in verbatim.
The intersection form is e0^2 = 1, e_i^2 = -1, mixed products 0.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import Scalar, as_scalar, format_rational, parse_rational

MAX_POINTS = 9


class DivisorClass:
    """Immutable rational divisor class d*e0 - sum m_i*e_i on the n-point blow-up."""

    __slots__ = ("n", "d", "m", "_coords")

    def __init__(self, n: int, d, m=()):
        if not isinstance(n, int) or not 0 <= n <= MAX_POINTS:
            raise ValueError(f"n out of range 0..{MAX_POINTS}: {n}")
        m = tuple(as_scalar(v) for v in m)
        if len(m) != n:
            raise ValueError(f"expected {n} multiplicities, got {len(m)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "d", as_scalar(d))
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "_coords", None)

    @staticmethod
    def _raw(n: int, d, m: tuple) -> "DivisorClass":
        # internal fast path: entries are already exact scalars (possibly
        # unreduced Fractions with denominator 1, which compare and hash
        # identically to the ints they equal)
        self = object.__new__(DivisorClass)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "_coords", None)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("DivisorClass is immutable")

    def coords(self) -> tuple[Scalar, ...]:
        """Coordinates (d, -m_1, ..., -m_n) in the basis e0, e_1, ..., e_n."""
        cached = self._coords
        if cached is None:
            cached = (self.d,) + tuple(-v for v in self.m)
            object.__setattr__(self, "_coords", cached)
        return cached

    @staticmethod
    def from_coords(n: int, coords) -> "DivisorClass":
        return DivisorClass(n, coords[0], tuple(-c for c in coords[1:]))

    @property
    def is_integral(self) -> bool:
        for v in (self.d,) + self.m:
            if not isinstance(v, int) and v.denominator != 1:
                return False
        return True

    # -- linear structure --------------------------------------------------

    def _check(self, other: "DivisorClass"):
        if self.n != other.n:
            raise ValueError(f"mismatched n: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        self._check(other)
        return DivisorClass._raw(
            self.n, self.d + other.d, tuple(a + b for a, b in zip(self.m, other.m))
        )

    def __sub__(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        self._check(other)
        return DivisorClass._raw(
            self.n, self.d - other.d, tuple(a - b for a, b in zip(self.m, other.m))
        )

    def __neg__(self):
        return DivisorClass._raw(self.n, -self.d, tuple(-v for v in self.m))

    def __mul__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            return DivisorClass._raw(
                self.n, self.d * scalar, tuple(v * scalar for v in self.m)
            )
        return NotImplemented

    __rmul__ = __mul__

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return self.n == other.n and self.d == other.d and self.m == other.m

    def __hash__(self):
        return hash((self.n, self.d, self.m))

    def sort_key(self):
        return (self.d, self.m)

    def __repr__(self):
        return f"DivisorClass({self.n}, {self.d!r}, {self.m!r})"

    def __str__(self):
        inner = ",".join(format_rational(v) for v in self.m)
        return f"({format_rational(self.d)}; {inner})"

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": format_rational(self.d),
            "m": [format_rational(v) for v in self.m],
        }

    @staticmethod
    def from_json(payload: dict) -> "DivisorClass":
        return DivisorClass(
            int(payload["n"]),
            parse_rational(payload["d"]),
            tuple(parse_rational(v) for v in payload["m"]),
        )

    @staticmethod
    def parse(text: str, n: int | None = None) -> "DivisorClass":
        """Parse the CLI shorthand "d,m1,m2,..." with rational entries."""
        parts = [p for p in text.split(",") if p.strip()]
        if not parts:
            raise ValueError(f"malformed class {text!r}")
        d = parse_rational(parts[0])
        m = tuple(parse_rational(p) for p in parts[1:])
        if n is not None and len(m) != n:
            raise ValueError(f"class {text!r} has {len(m)} multiplicities, expected {n}")
        return DivisorClass(len(m), d, m)


def e0(n: int) -> DivisorClass:
    """Pullback of a line."""
    return DivisorClass(n, 1, (0,) * n)


def exceptional(i: int, n: int) -> DivisorClass:
    """The exceptional class e_i (1-indexed)."""
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range 1..{n}")
    return DivisorClass(n, 0, tuple(-1 if j == i - 1 else 0 for j in range(n)))


def uniform_class(n: int, d, mult) -> DivisorClass:
    """d*e0 - mult*(e_1 + ... + e_n)."""
    return DivisorClass(n, d, (as_scalar(mult),) * n)


def intersect(a: DivisorClass, b: DivisorClass) -> Scalar:
    """Intersection product d_a*d_b - sum_i m_ia*m_ib."""
    if a.n != b.n:
        raise ValueError(f"mismatched n: {a.n} vs {b.n}")
    total = a.d * b.d
    for x, y in zip(a.m, b.m):
        total -= x * y
    return as_scalar(total)


def self_intersection(c: DivisorClass) -> Scalar:
    return intersect(c, c)


def canonical_class(n: int) -> DivisorClass:
    """-3*e0 + e_1 + ... + e_n, in (d; m) form (-3; -1, ..., -1)."""
    if not isinstance(n, int) or not 0 <= n <= MAX_POINTS:
        raise ValueError(f"n out of range 0..{MAX_POINTS}: {n}")
    return DivisorClass(n, -3, (-1,) * n)


def expected_genus(c: DivisorClass) -> Scalar:
    """Adjunction genus (c^2 + c.k)/2 + 1 of an integral class."""
    if not c.is_integral:
        raise ValueError("expected_genus needs an integral class")
    k = canonical_class(c.n)
    return as_scalar(Fraction(self_intersection(c) + intersect(c, k), 2) + 1)


def is_exceptional_class(c: DivisorClass) -> bool:
    """Numerical test for an exceptional curve of the first kind."""
    return (
        c.is_integral
        and self_intersection(c) == -1
        and intersect(c, canonical_class(c.n)) == -1
    )
