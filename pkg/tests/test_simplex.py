from fractions import Fraction

import pytest

from okbodies.errors import NotInConeError, UnboundedThresholdError
from okbodies.simplex import cone_exit_threshold, cone_member


N1_GENS = [(0, 1), (1, -1)]  # e1 and the fiber class in raw coordinates


def test_zero_vector_in_every_cone():
    assert cone_member([0, 0], N1_GENS) is True
    assert cone_member([0, 0, 0], [(1, 2, 3)]) is True


def test_explicit_combination_member():
    g1, g2 = (1, 0, 2), (0, 1, -1)
    x = [g1[i] + 2 * g2[i] for i in range(3)]
    member, combo = cone_member(x, [g1, g2], certificate=True)
    assert member is True
    assert [g1[i] * combo[0] + g2[i] * combo[1] for i in range(3)] == x


def test_negated_generator_not_member():
    gens = [(1, 0), (1, 1)]  # pointed cone
    member, functional = cone_member([-1, 0], gens, certificate=True)
    assert member is False
    # separating functional: nonnegative on the cone, negative on the input
    assert all(sum(y * g for y, g in zip(functional, gen)) >= 0 for gen in gens)
    assert sum(y * x for y, x in zip(functional, [-1, 0])) < 0


def test_membership_with_rational_entries():
    gens = [(Fraction(1, 2), 0), (0, Fraction(1, 3))]
    member, combo = cone_member([2, 1], gens, certificate=True)
    assert member is True
    assert combo[0] * Fraction(1, 2) == 2
    assert combo[1] * Fraction(1, 3) == 1


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        cone_member([1, 0], [(1, 0, 0)])
    with pytest.raises(ValueError):
        cone_exit_threshold([1, 0], [1], [(1, 0)])


def test_threshold_boundary_start_is_zero():
    # start on the boundary of the quadrant cone, direction pointing straight out
    assert cone_exit_threshold([1, 0], [0, 1], [(1, 0), (0, 1)]) == 0


def test_threshold_one_point_blowup():
    # decompose (1-t)e0 - (1/3)e1 inside cone{e1, e0-e1}: exit at 2/3
    start = (1, Fraction(-1, 3))
    assert cone_exit_threshold(start, (1, 0), N1_GENS) == Fraction(2, 3)


def test_threshold_two_point_blowup():
    gens = [(0, 1, 0), (0, 0, 1), (1, -1, -1)]
    start = (1, Fraction(-1, 3), Fraction(-1, 3))
    assert cone_exit_threshold(start, (1, 0, 0), gens) == Fraction(2, 3)


def test_threshold_membership_consistency():
    gens = [(0, 1, 0), (0, 0, 1), (1, -1, -1)]
    start = [1, Fraction(-1, 3), Fraction(-1, 3)]
    direction = [1, 0, 0]
    thr = cone_exit_threshold(start, direction, gens)
    for num in range(0, 9):
        t = thr * Fraction(num, 8)
        point = [s - t * d for s, d in zip(start, direction)]
        assert cone_member(point, gens) is True
    for extra in (Fraction(1, 100), Fraction(1, 2), 3):
        t = thr + extra
        point = [s - t * d for s, d in zip(start, direction)]
        assert cone_member(point, gens) is False


def test_threshold_unbounded():
    # moving deeper into the cone forever: subtracting -e1 adds e1 each step
    with pytest.raises(UnboundedThresholdError):
        cone_exit_threshold([1, -1], [0, -1], N1_GENS)


def test_threshold_start_outside():
    with pytest.raises(NotInConeError):
        cone_exit_threshold([-1, 0], [1, 0], N1_GENS)
