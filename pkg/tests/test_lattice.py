import random
from fractions import Fraction

import pytest

from okbodies.lattice import (
    DivisorClass,
    canonical_class,
    e0,
    exceptional,
    expected_genus,
    intersect,
    is_exceptional_class,
    self_intersection,
    uniform_class,
)


def test_intersection_form_on_basis():
    n = 3
    assert intersect(e0(n), e0(n)) == 1
    for i in range(1, n + 1):
        assert intersect(exceptional(i, n), exceptional(i, n)) == -1
        assert intersect(e0(n), exceptional(i, n)) == 0
    assert intersect(exceptional(1, n), exceptional(2, n)) == 0


def test_sextic_class_is_exceptional():
    c = DivisorClass(8, 6, (3, 2, 2, 2, 2, 2, 2, 2))
    assert self_intersection(c) == -1
    assert intersect(c, canonical_class(8)) == -1
    assert is_exceptional_class(c)


def test_canonical_class():
    assert canonical_class(0) == DivisorClass(0, -3, ())
    assert canonical_class(3) == DivisorClass(3, -3, (-1, -1, -1))
    assert self_intersection(canonical_class(8)) == 1
    assert self_intersection(canonical_class(9)) == 0
    with pytest.raises(ValueError):
        canonical_class(10)


def test_expected_genus():
    assert expected_genus(exceptional(1, 1)) == 0
    assert expected_genus(DivisorClass(1, 1, (1,))) == 0
    assert expected_genus(DivisorClass(9, 3, (1,) * 9)) == 1
    assert expected_genus(DivisorClass(2, 3, (0, 0))) == 1  # smooth plane cubic
    with pytest.raises(ValueError):
        expected_genus(uniform_class(2, 1, Fraction(1, 2)))


def test_bilinearity_and_symmetry():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(0, 9)

        def rand():
            return DivisorClass(
                n,
                Fraction(rng.randint(-6, 6), rng.randint(1, 4)),
                tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(n)),
            )

        a, b, c = rand(), rand(), rand()
        lam = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        assert intersect(a, b) == intersect(b, a)
        assert intersect(a, lam * b + c) == lam * intersect(a, b) + intersect(a, c)


def test_mismatched_n_rejected():
    with pytest.raises(ValueError):
        intersect(e0(2), e0(3))
    with pytest.raises(ValueError):
        e0(2) + e0(3)


def test_class_validation():
    with pytest.raises(ValueError):
        DivisorClass(10, 1, (0,) * 10)
    with pytest.raises(ValueError):
        DivisorClass(2, 1, (0,))


def test_parse_and_str():
    c = DivisorClass.parse("6,3,2,2,2,2,2,2,2")
    assert c == DivisorClass(8, 6, (3, 2, 2, 2, 2, 2, 2, 2))
    assert str(c) == "(6; 3,2,2,2,2,2,2,2)"
    c = DivisorClass.parse("1/2,1/3,1/3", n=2)
    assert c.d == Fraction(1, 2)
    with pytest.raises(ValueError):
        DivisorClass.parse("1,2", n=3)
    with pytest.raises(ValueError):
        DivisorClass.parse("")


def test_json_roundtrip():
    c = DivisorClass(3, Fraction(5, 2), (1, Fraction(-1, 3), 0))
    assert DivisorClass.from_json(c.to_json()) == c


def test_arithmetic_and_coords():
    a = uniform_class(2, 1, Fraction(1, 3))
    assert a.coords() == (1, Fraction(-1, 3), Fraction(-1, 3))
    assert DivisorClass.from_coords(2, a.coords()) == a
    assert (a + a) == 2 * a
    assert (a - a) == 0 * a
    assert (-a).d == -1
    twice = a * 2
    assert twice.is_integral is False  # multiplicities 2/3
    assert (3 * a).is_integral is True
