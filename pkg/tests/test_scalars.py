from fractions import Fraction

import pytest

from okbodies.scalars import (
    QuadraticNumber,
    as_scalar,
    format_rational,
    parse_rational,
    scale_to_integers,
    sign_of,
    sqrt_scalar,
)


def test_parse_format_roundtrip():
    for text in ["3", "-7", "2/5", "-11/4", "0"]:
        value = parse_rational(text)
        assert format_rational(value) == text
    assert parse_rational("6/4") == Fraction(3, 2)
    assert format_rational(Fraction(6, 4)) == "3/2"


def test_parse_rejects_garbage():
    for text in ["", "1/0", "a/b", "1//2"]:
        with pytest.raises(ValueError):
            parse_rational(text)


def test_as_scalar_normalizes_denominator_one():
    assert as_scalar(Fraction(4, 2)) == 2
    assert isinstance(as_scalar(Fraction(4, 2)), int)
    with pytest.raises(TypeError):
        as_scalar(1.5)
    with pytest.raises(TypeError):
        as_scalar(True)


def test_scale_to_integers():
    ints, den = scale_to_integers([Fraction(1, 3), Fraction(1, 2), 2])
    assert den == 6
    assert ints == [2, 3, 12]
    ints, den = scale_to_integers([1, -4])
    assert (ints, den) == ([1, -4], 1)


def test_quadratic_collapse_perfect_square():
    assert QuadraticNumber.make(1, 2, 9) == 7
    assert QuadraticNumber.make(0, 1, 16) == 4
    assert QuadraticNumber.make(Fraction(1, 2), 0, 10) == Fraction(1, 2)
    assert sqrt_scalar(49) == 7


def test_quadratic_square_free_reduction():
    q = QuadraticNumber.make(0, 1, 8)  # sqrt(8) = 2*sqrt(2)
    assert isinstance(q, QuadraticNumber)
    assert q.n == 2 and q.b == 2 and q.a == 0


def test_quadratic_conjugate_norm():
    a, b, n = Fraction(3, 2), Fraction(-5, 7), 10
    q = QuadraticNumber.make(a, b, n)
    assert q * q.conjugate() == a * a - n * b * b


def test_quadratic_arithmetic_and_division():
    r = sqrt_scalar(2)
    assert (1 + r) * (1 + r) == 3 + 2 * r
    assert (1 + r) * (r - 1) == 1
    assert (3 + 2 * r) / (1 + r) == 1 + r
    assert 1 / (1 + r) == r - 1


def test_quadratic_exact_ordering():
    r10 = sqrt_scalar(10)
    # 3 < sqrt(10) < 19/6 (since 3^2=9 < 10 and (19/6)^2 = 361/36 > 10)
    assert 3 < r10 < Fraction(19, 6)
    assert sign_of(r10 - 3) == 1
    assert sign_of(3 - r10) == -1
    assert sign_of(4 - r10) == 1
    values = sorted([r10, 3, Fraction(19, 6), 4 - r10])
    assert values == [4 - r10, 3, r10, Fraction(19, 6)]


def test_quadratic_criterion_identity():
    # x = 4 - sqrt(10) satisfies (4 - x)^2 = 10 exactly
    x = 4 - sqrt_scalar(10)
    assert (4 - x) * (4 - x) == 10


def test_quadratic_json_roundtrip():
    q = QuadraticNumber.make(Fraction(1, 3), Fraction(-2, 5), 12)
    payload = q.to_json()
    assert payload["n"] == 3  # square-free part of 12
    assert QuadraticNumber.from_json(payload) == q


def test_quadratic_mixed_radicands_rejected():
    with pytest.raises(ValueError):
        sqrt_scalar(2) + sqrt_scalar(3)
