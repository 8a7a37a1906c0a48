"""Positivity cones of the blow-ups for n <= 8, plus the n = 9 Seshadri value.

The pseudo-effective cone is generated by e0 (n=0), {e1, e0-e1} (n=1) and the
exceptional classes otherwise.  Nefness is the dual test against those
generators; pseudo-effectivity is cone membership, with a shortcut: for
n <= 8 the anticanonical class is ample, so a class of nonnegative square is
pseudo-effective exactly when it pairs nonnegatively with it.  Only classes
of negative square need the LP.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import kernels
from .errors import InfiniteConeError, InvariantViolationError, NotBigError
from .lattice import (
    DivisorClass,
    canonical_class,
    e0,
    exceptional,
    intersect,
    self_intersection,
)
from .scalars import Scalar, as_scalar, scale_to_integers
from .simplex import cone_exit_threshold, cone_member
from .weyl import exceptional_classes


class ConeModel:
    """Effective-cone data for one n, precomputed for fast repeated queries."""

    def __init__(self, n: int):
        if n == 9:
            raise InfiniteConeError("cone not finitely generated for n=9")
        if not 0 <= n <= 8:
            raise ValueError(f"cone model needs 0 <= n <= 8, got {n}")
        self.n = n
        if n == 0:
            gens = (e0(0),)
        elif n == 1:
            gens = (exceptional(1, 1), DivisorClass(1, 1, (1,)))
        else:
            gens = exceptional_classes(n)
        self.generators: tuple[DivisorClass, ...] = gens
        self.generator_coords: tuple[tuple[int, ...], ...] = tuple(
            g.coords() for g in gens
        )
        # curves eligible for a negative support must have negative square
        self.negative_candidates: tuple[DivisorClass, ...] = tuple(
            g for g in gens if self_intersection(g) < 0
        )
        self.anticanonical = -1 * canonical_class(n)

    def pairings(self, c: DivisorClass) -> list[Scalar]:
        """Exact intersection numbers of c with every generator."""
        ints, scale = scale_to_integers(c.coords())
        raw = kernels.pairing_many(ints, list(self.generator_coords))
        if scale == 1:
            return raw
        return [as_scalar(Fraction(v, scale)) for v in raw]

    def pairings_scaled(self, coords_int, targets) -> list[int]:
        return kernels.pairing_many(coords_int, targets)


@lru_cache(maxsize=None)
def cone_model(n: int) -> ConeModel:
    return ConeModel(n)


def _model_for(D: DivisorClass) -> ConeModel:
    return cone_model(D.n)


def is_pseudoeffective(D: DivisorClass) -> bool:
    """Membership in the effective cone (exact)."""
    model = _model_for(D)
    if self_intersection(D) >= 0:
        # inside the positive cone or its mirror; the ample anticanonical
        # class separates the two components
        return intersect(D, model.anticanonical) >= 0
    return cone_member(D.coords(), model.generator_coords)


def pseudoeffective_certificate(D: DivisorClass):
    """(True, combination over generators) or (False, separating nef class)."""
    model = _model_for(D)
    member, cert = cone_member(D.coords(), model.generator_coords, certificate=True)
    if member:
        combo = [
            (g, coeff)
            for g, coeff in zip(model.generators, cert)
            if coeff != 0
        ]
        return True, combo
    return False, DivisorClass.from_coords(D.n, cert)


def nef_violation(D: DivisorClass) -> DivisorClass | None:
    """A generator pairing negatively with D, or None when D is nef."""
    model = _model_for(D)
    ints, _ = scale_to_integers(D.coords())
    products = kernels.pairing_many(ints, list(model.generator_coords))
    for g, p in zip(model.generators, products):
        if p < 0:
            return g
    return None


def is_nef(D: DivisorClass) -> bool:
    return nef_violation(D) is None


def is_big(D: DivisorClass) -> bool:
    """Pseudo-effective with positive volume (positive part of positive square)."""
    from .errors import NotPseudoEffectiveError
    from .zariski import zariski_decompose

    try:
        decomposition = zariski_decompose(D)
    except NotPseudoEffectiveError:
        return False
    return self_intersection(decomposition.positive) > 0


def is_ample(D: DivisorClass) -> bool:
    """Positive square and strictly positive against every generator."""
    model = _model_for(D)
    if self_intersection(D) <= 0:
        return False
    ints, _ = scale_to_integers(D.coords())
    products = kernels.pairing_many(ints, list(model.generator_coords))
    return all(p > 0 for p in products)


def ample_violation(D: DivisorClass) -> DivisorClass | None:
    model = _model_for(D)
    for g, p in zip(model.generators, model.pairings(D)):
        if p <= 0:
            return g
    return None


def seshadri(n: int) -> Scalar:
    """The n-point Seshadri constant of a line on the plane, 1 <= n <= 9.

    For n <= 8 it is the minimum of d/(m_1+...+m_n) over the cone generators
    with positive total multiplicity; the value 1/3 at n = 9 is the square
    case of the Nagata prediction and has no finite cone certificate.
    """
    if not 1 <= n <= 9:
        raise ValueError(f"Seshadri constant defined for 1 <= n <= 9, got {n}")
    if n == 9:
        return Fraction(1, 3)
    best = None
    for g in cone_model(n).generators:
        total = sum(g.m)
        if total > 0:
            ratio = Fraction(g.d, total)
            if best is None or ratio < best:
                best = ratio
    if best is None:
        raise InvariantViolationError("no generator with positive total multiplicity")
    return as_scalar(best)


def psef_exit_threshold(D: DivisorClass, direction: DivisorClass) -> Scalar:
    """sup{t : D - t*direction pseudo-effective}; D must be pseudo-effective."""
    model = _model_for(D)
    return cone_exit_threshold(D.coords(), direction.coords(), model.generator_coords)


def mu_threshold(D: DivisorClass, flag: DivisorClass) -> Scalar:
    """Exact sup{t > 0 : D - t*flag is big}, for big D and the line-class flag.

    Along a ray from a big class the big and pseudo-effective thresholds
    agree (the open segment stays in the interior of the cone), so the value
    is computed as an exact LP exit threshold and guarded by a volume check
    just inside the returned endpoint.
    """
    if flag != e0(D.n):
        raise ValueError("the flag curve must be the line class e0")
    if not is_big(D):
        raise NotBigError("mu threshold needs a big class")
    mu = psef_exit_threshold(D, flag)
    probe = mu * Fraction(1023, 1024)
    if not is_big(D - probe * flag):
        raise InvariantViolationError("volume vanished strictly inside the ray")
    return mu
