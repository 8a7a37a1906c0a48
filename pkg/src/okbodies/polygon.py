"""Exact convex polygons in the plane (possibly degenerate: segment, point, empty).

Vertices are tuples of exact scalars (rationals, or quadratic numbers for
the conjectural strips).  The canonical form is the convex hull traversed
counterclockwise, starting at the lexicographically smallest vertex, with no
three consecutive collinear vertices; equality is structural on that form.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import QuadraticNumber, as_scalar, format_rational, parse_rational

Point = tuple  # pair of exact scalars


def _norm_point(p) -> Point:
    x, y = p
    if not isinstance(x, QuadraticNumber):
        x = as_scalar(x)
    if not isinstance(y, QuadraticNumber):
        y = as_scalar(y)
    return (x, y)


def cross(o: Point, a: Point, b: Point):
    """Orientation of the triangle (o, a, b): > 0 for a counterclockwise turn."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points) -> list[Point]:
    """Monotone chain with strict turns; collinear and duplicate points drop out."""
    pts = sorted(set(_norm_point(p) for p in points))
    if len(pts) <= 2:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:  # all points collinear: keep the extreme pair
        return [pts[0], pts[-1]]
    return hull


class Polygon:
    """Convex region in canonical form, with a flag for conjectural (predicted) bodies."""

    __slots__ = ("vertices", "conjectural")

    def __init__(self, vertices, conjectural: bool = False):
        object.__setattr__(self, "vertices", tuple(convex_hull(vertices)))
        object.__setattr__(self, "conjectural", bool(conjectural))

    def __setattr__(self, name, value):
        raise AttributeError("Polygon is immutable")

    @staticmethod
    def empty() -> "Polygon":
        return Polygon(())

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @property
    def is_degenerate(self) -> bool:
        return len(self.vertices) < 3

    def area(self):
        """Exact shoelace area (0 for degenerate regions)."""
        verts = self.vertices
        if len(verts) < 3:
            return 0
        twice = 0
        for i, (x0, y0) in enumerate(verts):
            x1, y1 = verts[(i + 1) % len(verts)]
            twice = twice + (x0 * y1 - x1 * y0)
        half = twice / 2 if isinstance(twice, QuadraticNumber) else Fraction(1, 2) * twice
        return half if isinstance(half, QuadraticNumber) else as_scalar(half)

    def contains_point(self, point) -> bool:
        p = _norm_point(point)
        verts = self.vertices
        if not verts:
            return False
        if len(verts) == 1:
            return p == verts[0]
        if len(verts) == 2:
            a, b = verts
            if cross(a, b, p) != 0:
                return False
            return _bbox_contains(a, b, p)
        return all(
            cross(verts[i], verts[(i + 1) % len(verts)], p) >= 0
            for i in range(len(verts))
        )

    def contains(self, other: "Polygon") -> bool:
        """Containment of convex regions: every vertex of the other lies inside."""
        return all(self.contains_point(v) for v in other.vertices)

    def scale(self, factor) -> "Polygon":
        factor = as_scalar(factor)
        if factor <= 0:
            raise ValueError("scale factor must be positive")
        return Polygon(
            [(x * factor, y * factor) for x, y in self.vertices], self.conjectural
        )

    def map(self, fn) -> "Polygon":
        return Polygon([fn(v) for v in self.vertices], self.conjectural)

    def __eq__(self, other):
        if not isinstance(other, Polygon):
            return NotImplemented
        return self.vertices == other.vertices and self.conjectural == other.conjectural

    def __hash__(self):
        return hash((self.vertices, self.conjectural))

    def __repr__(self):
        tag = ", conjectural=True" if self.conjectural else ""
        return f"Polygon({list(self.vertices)!r}{tag})"

    def __str__(self):
        if self.is_empty:
            return "(empty polygon)"
        pts = " ".join(f"({_fmt_coord(x)}, {_fmt_coord(y)})" for x, y in self.vertices)
        return pts + (" [conjectural]" if self.conjectural else "")

    # -- serialization ------------------------------------------------------

    def to_payload(self, n: int) -> dict:
        quad = any(
            isinstance(c, QuadraticNumber) for v in self.vertices for c in v
        )
        if quad:
            radicand = next(
                c.n for v in self.vertices for c in v if isinstance(c, QuadraticNumber)
            )
            vertices = [
                [_quad_payload(x, radicand), _quad_payload(y, radicand)]
                for x, y in self.vertices
            ]
        else:
            vertices = [
                [format_rational(x), format_rational(y)] for x, y in self.vertices
            ]
        return {"n": n, "conjectural": self.conjectural, "vertices": vertices}

    @staticmethod
    def from_payload(payload: dict) -> tuple[int, "Polygon"]:
        vertices = []
        for x, y in payload["vertices"]:
            vertices.append((_coord_from_json(x), _coord_from_json(y)))
        return int(payload["n"]), Polygon(vertices, bool(payload.get("conjectural", False)))


def _bbox_contains(a: Point, b: Point, p: Point) -> bool:
    for i in (0, 1):
        lo, hi = (a[i], b[i]) if a[i] <= b[i] else (b[i], a[i])
        if not lo <= p[i] <= hi:
            return False
    return True


def _fmt_coord(c) -> str:
    if isinstance(c, QuadraticNumber):
        return str(c)
    return format_rational(c)


def _quad_payload(c, radicand: int) -> dict:
    if isinstance(c, QuadraticNumber):
        return c.to_json()
    return {"a": format_rational(c), "b": "0", "n": radicand}


def _coord_from_json(value):
    if isinstance(value, dict):
        return QuadraticNumber.from_json(value)
    return parse_rational(value)


def clip_halfplane(points: list[Point], a, b, c) -> list[Point]:
    """Clip a convex vertex cycle against a*x + b*y <= c (exact arithmetic)."""
    if not points:
        return []
    if len(points) == 1:
        x, y = points[0]
        return list(points) if a * x + b * y <= c else []
    out: list[Point] = []
    count = len(points)
    # a 2-point "cycle" walks the segment both ways; duplicates are dropped later
    for i in range(count if count > 2 else 1):
        cur = points[i]
        nxt = points[(i + 1) % count]
        cur_val = a * cur[0] + b * cur[1] - c
        nxt_val = a * nxt[0] + b * nxt[1] - c
        if cur_val <= 0:
            out.append(cur)
        if (cur_val < 0 < nxt_val) or (nxt_val < 0 < cur_val):
            t = Fraction(1, 1) * cur_val / (cur_val - nxt_val)
            out.append(
                (
                    cur[0] + t * (nxt[0] - cur[0]),
                    cur[1] + t * (nxt[1] - cur[1]),
                )
            )
    if count == 2:
        last = points[1]
        if a * last[0] + b * last[1] - c <= 0:
            out.append(last)
    return out


def clip_to_unit_simplex(points) -> list[Point]:
    """Intersect with {x >= 0, y >= 0, x + y <= 1}."""
    pts = [_norm_point(p) for p in points]
    for a, b, c in ((-1, 0, 0), (0, -1, 0), (1, 1, 1)):
        pts = clip_halfplane(pts, a, b, c)
        if not pts:
            return []
    return pts
