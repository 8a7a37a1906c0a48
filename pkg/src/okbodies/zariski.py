"""Exact Zariski decomposition of pseudo-effective classes for n <= 8.

The negative support grows by batch: starting from the empty support, all
candidate curves pairing negatively with the current positive part are
added, the coefficients are re-solved from the orthogonality conditions, and
the loop repeats to a fixpoint (the support can only grow, so at most one
round per candidate).  Zero-coefficient curves are evicted before the
invariant checks.  Candidates are the cone generators of negative square:
on these surfaces every irreducible negative curve is a generator, which is
the single geometric assumption of the module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cones import cone_model, is_pseudoeffective
from .errors import InvariantViolationError, NotPseudoEffectiveError, SingularSystemError
from .lattice import DivisorClass, intersect, self_intersection
from .linalg import is_negative_definite, solve_linear
from .scalars import Scalar, scale_to_integers
from . import kernels


@dataclass(frozen=True)
class ZariskiDecomposition:
    """D = positive + sum coeff_i * C_i with nef positive part orthogonal to the support."""

    divisor: DivisorClass
    positive: DivisorClass
    negative: tuple[tuple[DivisorClass, Scalar], ...]
    gram: tuple[tuple[Scalar, ...], ...]

    @property
    def support(self) -> tuple[DivisorClass, ...]:
        return tuple(curve for curve, _ in self.negative)

    def negative_class(self) -> DivisorClass:
        total = 0 * self.divisor
        for curve, coeff in self.negative:
            total = total + coeff * curve
        return total

    def volume(self) -> Scalar:
        return self_intersection(self.positive)

    def to_json(self) -> dict:
        return {
            "input": self.divisor.to_json(),
            "positive": self.positive.to_json(),
            "negative": [
                {"curve": curve.to_json(), "coeff": _fmt(coeff)}
                for curve, coeff in self.negative
            ],
        }


def _fmt(value):
    from .scalars import format_rational

    return format_rational(value)


def _solve_support(D: DivisorClass, support: list[DivisorClass]) -> list[Scalar]:
    gram = [[intersect(a, b) for b in support] for a in support]
    rhs = [intersect(D, c) for c in support]
    try:
        return solve_linear(gram, rhs)
    except SingularSystemError as exc:
        raise InvariantViolationError(
            "singular Gram matrix during support growth (input should be pseudo-effective)"
        ) from exc


def zariski_decompose(
    D: DivisorClass, candidate_order=None
) -> ZariskiDecomposition:
    """The unique Zariski decomposition of a pseudo-effective class.

    ``candidate_order`` reorders the violator scan (used to verify the result
    does not depend on it); the decomposition itself is canonical.

    The fixpoint runs without a prior membership test: a completed
    decomposition (nef part plus nonnegative combination of curves) is itself
    the certificate that the input was pseudo-effective, and any failure on a
    non-pseudo-effective input is converted into the proper error.
    """
    model = cone_model(D.n)
    try:
        return _decompose_unchecked(D, model, candidate_order)
    except InvariantViolationError:
        if not is_pseudoeffective(D):
            raise NotPseudoEffectiveError(f"not pseudo-effective: {D}") from None
        raise


def _decompose_unchecked(D, model, candidate_order) -> ZariskiDecomposition:
    candidates = list(model.negative_candidates if candidate_order is None else candidate_order)
    cand_coords = [c.coords() for c in candidates]

    support: list[DivisorClass] = []
    in_support = [False] * len(candidates)
    coeffs: list[Scalar] = []
    P = D
    while True:
        ints, scale = scale_to_integers(P.coords())
        products = kernels.pairing_many(ints, cand_coords)
        violators = [
            idx for idx, p in enumerate(products) if p < 0 and not in_support[idx]
        ]
        if not violators:
            break
        for idx in violators:
            in_support[idx] = True
            support.append(candidates[idx])
        coeffs = _solve_support(D, support)
        N = 0 * D
        for c, x in zip(support, coeffs):
            N = N + x * c
        P = D - N

    kept = [(c, x) for c, x in zip(support, coeffs) if x != 0]
    support = [c for c, _ in kept]
    coeffs = [x for _, x in kept]
    order = sorted(range(len(support)), key=lambda i: support[i].sort_key())
    support = [support[i] for i in order]
    coeffs = [coeffs[i] for i in order]

    gram = tuple(tuple(intersect(a, b) for b in support) for a in support)
    _check_invariants(D, P, support, coeffs, gram, model)
    return ZariskiDecomposition(
        divisor=D,
        positive=P,
        negative=tuple(zip(support, coeffs)),
        gram=gram,
    )


def _check_invariants(D, P, support, coeffs, gram, model):
    if any(x < 0 for x in coeffs):
        raise InvariantViolationError("negative coefficient in the negative part")
    reconstructed = P
    for c, x in zip(support, coeffs):
        reconstructed = reconstructed + x * c
    if reconstructed != D:
        raise InvariantViolationError("decomposition does not reconstruct the input")
    for c in support:
        if intersect(P, c) != 0:
            raise InvariantViolationError("positive part not orthogonal to the support")
    ints, _ = scale_to_integers(P.coords())
    if any(p < 0 for p in kernels.pairing_many(ints, list(model.generator_coords))):
        raise InvariantViolationError("positive part is not nef")
    if support and not is_negative_definite([list(row) for row in gram]):
        raise InvariantViolationError("support Gram matrix is not negative-definite")


def neg_support(D: DivisorClass) -> frozenset[DivisorClass]:
    """Curves carrying the negative part of the Zariski decomposition."""
    return frozenset(zariski_decompose(D).support)


def null_set(P: DivisorClass) -> frozenset[DivisorClass]:
    """Generators orthogonal to a nef class.

    Raises NotNefError on non-nef input.
    """
    from .cones import nef_violation
    from .errors import NotNefError

    bad = nef_violation(P)
    if bad is not None:
        raise NotNefError(f"not nef: {P} meets {bad} negatively")
    model = cone_model(P.n)
    ints, _ = scale_to_integers(P.coords())
    products = kernels.pairing_many(ints, list(model.generator_coords))
    return frozenset(
        g for g, p in zip(model.generators, products) if p == 0
    )
