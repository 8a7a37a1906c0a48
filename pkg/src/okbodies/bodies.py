"""Okounkov bodies for the flag (very general line, very general point on it).

The body of a class D is bounded below by 0 and above by the concave
piecewise-linear profile beta(t) = e0 . P_t, where P_t is the positive part
of the Zariski decomposition of D - t*e0 and t runs over [0, mu].  The lower
profile is identically zero and the left endpoint is a = 0: the line class
has positive square, so it can never sit inside a negative-definite support
(re-checked at runtime on every decomposition the walk produces).

The walk is exact: inside a chamber the support is constant, the negative
coefficients solve a linear system affine in t, and the next event is a
rational root of an affine function.  The decomposition is recomputed from
scratch at every event point and at the midpoint of every chamber.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .cones import cone_model, psef_exit_threshold, seshadri
from .errors import (
    InvariantViolationError,
    NotBigError,
    NotInConeError,
    UnsupportedPipelineError,
)
from .lattice import DivisorClass, e0, intersect, self_intersection, uniform_class
from .linalg import solve_linear
from .polygon import Polygon, clip_to_unit_simplex
from .scalars import Scalar, as_scalar, scale_to_integers, sign_of, sqrt_scalar
from .zariski import zariski_decompose


@dataclass(frozen=True)
class PiecewiseLinearFn:
    """Concave piecewise-linear profile given by breakpoints and values."""

    breakpoints: tuple[Scalar, ...]
    values: tuple[Scalar, ...]

    def __post_init__(self):
        if len(self.breakpoints) != len(self.values) or not self.breakpoints:
            raise ValueError("breakpoints and values must match and be nonempty")
        for a, b in zip(self.breakpoints, self.breakpoints[1:]):
            if not a < b:
                raise ValueError("breakpoints must increase strictly")
        slopes = self.slopes()
        for s0, s1 in zip(slopes, slopes[1:]):
            if not s1 <= s0:
                raise InvariantViolationError("profile is not concave")

    def slopes(self) -> tuple[Scalar, ...]:
        out = []
        for (t0, t1), (v0, v1) in zip(
            zip(self.breakpoints, self.breakpoints[1:]),
            zip(self.values, self.values[1:]),
        ):
            out.append(as_scalar(Fraction(v1 - v0, 1) / (t1 - t0)))
        return tuple(out)

    def value_at(self, t) -> Scalar:
        t = as_scalar(t)
        bps = self.breakpoints
        if not bps[0] <= t <= bps[-1]:
            raise ValueError("t outside the profile domain")
        for i in range(len(bps) - 1):
            if t <= bps[i + 1]:
                t0, t1 = bps[i], bps[i + 1]
                v0, v1 = self.values[i], self.values[i + 1]
                return as_scalar(v0 + Fraction(v1 - v0, 1) / (t1 - t0) * (t - t0))
        return self.values[-1]


@dataclass(frozen=True)
class _Chamber:
    lo: Scalar
    hi: Scalar
    support: tuple[DivisorClass, ...]
    beta0: Scalar  # beta(t) = beta0 + beta1 * t on [lo, hi]
    beta1: Scalar
    positive0: DivisorClass  # P_t = positive0 + t * positive1
    positive1: DivisorClass

    def beta(self, t) -> Scalar:
        return as_scalar(self.beta0 + self.beta1 * t)

    def positive_at(self, t) -> DivisorClass:
        return self.positive0 + t * self.positive1


def _affine_model(D: DivisorClass, flag: DivisorClass, support):
    """Within a fixed support, coefficients and positive part are affine in t."""
    support = list(support)
    if support:
        gram = [[intersect(a, b) for b in support] for a in support]
        x0 = solve_linear(gram, [intersect(D, c) for c in support])
        x1 = solve_linear(gram, [intersect(flag, c) for c in support])
    else:
        x0, x1 = [], []
    P0, P1 = D, -1 * flag
    for c, a0, a1 in zip(support, x0, x1):
        P0 = P0 - a0 * c
        P1 = P1 + a1 * c  # x(t) = x0 - t*x1 multiplies -c
    return x0, x1, P0, P1


def _validity_interval(D, support, x0, x1, P0, P1, mu):
    """Interval around a probe on which the support model stays the decomposition."""
    model = cone_model(D.n)
    lo, hi = Fraction(0), as_scalar(mu)
    constraints = []  # affine c0 + c1*t >= 0
    for a0, a1 in zip(x0, x1):
        constraints.append((a0, -a1))
    support_set = set(support)
    p0_ints, s0 = scale_to_integers(P0.coords())
    p1_ints, s1 = scale_to_integers(P1.coords())
    gens = list(model.generator_coords)
    prod0 = kernels.pairing_many(p0_ints, gens)
    prod1 = kernels.pairing_many(p1_ints, gens)
    for g, q0, q1 in zip(model.generators, prod0, prod1):
        if g in support_set:
            continue
        constraints.append((Fraction(q0, s0), Fraction(q1, s1)))
    for c0, c1 in constraints:
        if c1 == 0:
            if c0 < 0:
                raise InvariantViolationError("probe violates its own chamber model")
            continue
        root = as_scalar(Fraction(-c0, 1) / c1)
        if c1 > 0:
            lo = max(lo, root)
        else:
            hi = min(hi, root)
    return as_scalar(lo), as_scalar(hi)


def _chamber_after(D: DivisorClass, flag: DivisorClass, t_cur, mu) -> _Chamber:
    """The chamber covering (t_cur, hi]: probe, model, refine backward if needed."""
    hi_bound = mu
    while True:
        probe = as_scalar(Fraction(t_cur + hi_bound, 2))
        decomposition = zariski_decompose(D - probe * flag)
        _assert_flag_free(decomposition, flag)
        support = decomposition.support
        x0, x1, P0, P1 = _affine_model(D, flag, support)
        lo, hi = _validity_interval(D, support, x0, x1, P0, P1, mu)
        if lo <= t_cur:
            chamber = _Chamber(
                lo=t_cur,
                hi=hi,
                support=support,
                beta0=intersect(flag, P0),
                beta1=intersect(flag, P1),
                positive0=P0,
                positive1=P1,
            )
            _verify_chamber(D, flag, chamber)
            return chamber
        if not lo < hi_bound:
            raise InvariantViolationError("chamber refinement failed to progress")
        hi_bound = lo


def _assert_flag_free(decomposition, flag):
    if any(curve == flag for curve in decomposition.support):
        raise InvariantViolationError("flag line appeared in a negative support")


def _verify_chamber(D, flag, chamber):
    """Recompute the decomposition at the chamber midpoint and compare."""
    mid = as_scalar(Fraction(chamber.lo + chamber.hi, 2))
    fresh = zariski_decompose(D - mid * flag)
    _assert_flag_free(fresh, flag)
    if fresh.positive != chamber.positive_at(mid):
        raise InvariantViolationError("midpoint decomposition disagrees with the chamber model")
    if intersect(flag, fresh.positive) != chamber.beta(mid):
        raise InvariantViolationError("midpoint profile value disagrees with the chamber model")


def beta_profile(D: DivisorClass) -> tuple[PiecewiseLinearFn, Scalar]:
    """The upper profile of the body of D and the horizontal reach mu.

    D must be pseudo-effective with n <= 8; classes on the big-cone boundary
    yield the degenerate profile on [0, 0].
    """
    n = D.n
    if n == 9:
        raise UnsupportedPipelineError("n=9 requires the Seshadri/rescale pipeline")
    flag = e0(n)
    try:
        # phase-1 feasibility of the threshold LP is itself the membership test
        mu = psef_exit_threshold(D, flag)
    except NotInConeError:
        raise NotBigError(f"not big: {D} is not even pseudo-effective") from None
    first = zariski_decompose(D)
    _assert_flag_free(first, flag)
    beta_start = intersect(flag, first.positive)
    if mu == 0:
        return PiecewiseLinearFn((0,), (beta_start,)), 0

    breakpoints: list[Scalar] = [0]
    values: list[Scalar] = [beta_start]
    t = as_scalar(Fraction(0))
    while t < mu:
        chamber = _chamber_after(D, flag, t, mu)
        if not chamber.hi > t:
            raise InvariantViolationError("chamber walk failed to advance")
        if chamber.beta(t) != values[-1]:
            raise InvariantViolationError("profile discontinuity between chambers")
        mid = as_scalar(Fraction(chamber.lo + chamber.hi, 2))
        vol_mid = self_intersection(chamber.positive_at(mid))
        if not vol_mid > 0:
            raise InvariantViolationError("volume not positive strictly inside [0, mu)")
        t = chamber.hi
        breakpoints.append(t)
        values.append(chamber.beta(t))
    if t != mu:
        raise InvariantViolationError("walk did not reach mu")
    final = zariski_decompose(D - mu * flag)
    if self_intersection(final.positive) != 0:
        raise InvariantViolationError("volume did not vanish at mu")

    # merge collinear segments for a canonical breakpoint list
    merged_t, merged_v = [breakpoints[0]], [values[0]]
    for i in range(1, len(breakpoints) - 1):
        t0, t1, t2 = merged_t[-1], breakpoints[i], breakpoints[i + 1]
        v0, v1, v2 = merged_v[-1], values[i], values[i + 1]
        if (v1 - v0) * (t2 - t1) != (v2 - v1) * (t1 - t0):
            merged_t.append(t1)
            merged_v.append(v1)
    merged_t.append(breakpoints[-1])
    merged_v.append(values[-1])
    return PiecewiseLinearFn(tuple(merged_t), tuple(merged_v)), mu


def okounkov_body(D: DivisorClass) -> Polygon:
    """The Okounkov body of D as an exact convex polygon.

    Degenerates to a vertical segment for classes on the big-cone boundary.
    """
    profile, mu = beta_profile(D)
    points = [(0, 0)]
    if mu > 0:
        points.append((mu, 0))
    for t, v in zip(profile.breakpoints, profile.values):
        points.append((t, v))
    body = Polygon(points)
    for x, y in body.vertices:
        if x < 0 or y < 0:
            raise InvariantViolationError("body left the positive quadrant")
    return body


def seshadri_body(n: int) -> Polygon:
    """Body at the Seshadri ray endpoint: hull{(0,0), (1 - n*eps_n^2, 0), (0,1)}."""
    if not 1 <= n <= 9:
        raise ValueError(f"seshadri_body defined for 1 <= n <= 9, got {n}")
    eps = seshadri(n)
    corner = as_scalar(1 - n * eps * eps)
    return Polygon([(0, 0), (corner, 0), (0, 1)])


def rescale(body: Polygon, r) -> Polygon:
    """Radial rescaling by r with center (1, 0), clipped to the unit simplex.

    phi_r(x, y) = r*(x - 1, y) + (1, 0).  An empty intersection is legal (the
    rescaled class is no longer pseudo-effective) and returns the empty polygon.
    """
    r = as_scalar(r)
    if r <= 0:
        raise ValueError("rescaling factor must be positive")
    mapped = [(r * (x - 1) + 1, r * y) for x, y in body.vertices]
    return Polygon(clip_to_unit_simplex(mapped), body.conjectural)


def body_L(n: int, d, m) -> Polygon:
    """Body of the class d*e0 - m*(e1 + ... + en), computed at scale d.

    For n <= 8 this is d times the body of e0 - (m/d)*sum(e_i).  For n = 9
    only the Seshadri pipeline is available: m/d = 1/3 gives the vertical
    segment, m/d = 0 the scaled simplex; anything between is unsupported and
    anything beyond is not pseudo-effective.
    """
    d, m = as_scalar(d), as_scalar(m)
    if d <= 0:
        raise ValueError("d must be positive")
    if m < 0:
        raise ValueError("m must be nonnegative")
    eps = as_scalar(Fraction(m, 1) / d)
    if n <= 8:
        return okounkov_body(uniform_class(n, 1, eps)).scale(d)
    if n == 9:
        third = Fraction(1, 3)
        if eps == 0:
            return Polygon([(0, 0), (d, 0), (0, d)])
        if eps == third:
            return seshadri_body(9).scale(d)
        if eps > third:
            raise NotBigError(
                "not big: the n=9 class beyond the Seshadri ray is not pseudo-effective"
            )
        raise UnsupportedPipelineError(
            "n=9 bodies are only available along the Seshadri/rescale pipeline (m/d in {0, 1/3})"
        )
    raise ValueError(f"n out of range 0..9: {n}")


def nagata_strip(n: int, d, m) -> Polygon:
    """Predicted body for n >= 9: a vertical strip in the triangle of size d.

    Vertices (0,0), (d - sqrt(n)*m, 0), (d - sqrt(n)*m, sqrt(n)*m), (0, d)
    with exact quadratic-field coordinates; flagged conjectural for
    non-square n > 9 (the square cases are certified).
    """
    if not isinstance(n, int) or n < 9:
        raise ValueError(f"nagata_strip needs an integer n >= 9, got {n}")
    d, m = as_scalar(d), as_scalar(m)
    if d <= 0 or m < 0:
        raise ValueError("need d > 0 and m >= 0")
    root = sqrt_scalar(n)
    height = root * m
    width = d - height
    if sign_of(width) < 0:
        raise NotBigError("predicted non-big: d < sqrt(n)*m")
    conjectural = n > 9 and not isinstance(root, int)
    return Polygon(
        [(0, 0), (width, 0), (width, height), (0, d)],
        conjectural=conjectural,
    )


def dissection(eps=Fraction(1, 3)) -> list[tuple[int, Polygon]]:
    """Bodies of e0 - eps*(e1 + ... + en) for n = 0..9, nesting verified.

    Entries whose class is not pseudo-effective (or, for n = 9, outside the
    special-case pipeline) are dropped with a warning; eps = 1/3 always
    yields all ten bodies.
    """
    eps = as_scalar(eps)
    out: list[tuple[int, Polygon]] = []
    for n in range(0, 10):
        try:
            if n <= 8:
                body = okounkov_body(uniform_class(n, 1, eps))
            else:
                body = _n9_entry(eps)
        except (NotBigError, UnsupportedPipelineError) as exc:
            warnings.warn(f"dropping n={n} from the dissection: {exc}")
            continue
        out.append((n, body))
    for (n_prev, outer), (n_next, inner) in zip(out, out[1:]):
        if n_next == n_prev + 1 and not outer.contains(inner):
            raise InvariantViolationError(
                f"dissection nesting failed between n={n_prev} and n={n_next}"
            )
    return out


def _n9_entry(eps) -> Polygon:
    third = Fraction(1, 3)
    if eps == 0:
        return Polygon([(0, 0), (1, 0), (0, 1)])
    if eps == third:
        return seshadri_body(9)
    if eps > third:
        raise NotBigError("not big: n=9 class beyond the Seshadri ray")
    raise UnsupportedPipelineError(
        "n=9 bodies are only available along the Seshadri/rescale pipeline"
    )
