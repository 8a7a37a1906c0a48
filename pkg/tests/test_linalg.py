import random
from fractions import Fraction

import pytest

from okbodies.errors import SingularSystemError
from okbodies.linalg import is_negative_definite, solve_linear


def test_solve_one_by_one():
    assert solve_linear([[-1]], [-2]) == [2]


def test_solve_identity():
    v = [Fraction(3, 7), -2, Fraction(5, 2)]
    eye = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert solve_linear(eye, v) == v


def test_solve_two_by_two_by_elimination():
    # hand elimination: -x1 + x2 = 1, x1 - 2 x2 = 0 => x = (-2, -1)
    xs = solve_linear([[-1, 1], [1, -2]], [1, 0])
    assert xs == [-2, -1]
    # substitution check
    assert [-xs[0] + xs[1], xs[0] - 2 * xs[1]] == [1, 0]


def test_solve_substitution_property():
    rng = random.Random(7)
    for _ in range(50):
        k = rng.randint(1, 6)
        mat = [
            [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(k)]
            for _ in range(k)
        ]
        rhs = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(k)]
        try:
            xs = solve_linear(mat, rhs)
        except SingularSystemError:
            continue
        for row, b in zip(mat, rhs):
            assert sum(c * x for c, x in zip(row, xs)) == b


def test_solve_singular():
    with pytest.raises(SingularSystemError):
        solve_linear([[1, 1], [2, 2]], [1, 1])
    with pytest.raises(ValueError):
        solve_linear([[1, 2]], [1])


def test_negative_definite_basic():
    assert is_negative_definite([[-1]]) is True
    assert is_negative_definite([[-1, 1], [1, -1]]) is False  # determinant 0
    assert is_negative_definite([[-1, 1], [1, -2]]) is True
    assert is_negative_definite([[1]]) is False
    assert is_negative_definite([]) is True


def test_negative_definite_three_curve_gram():
    # Gram of {e0-e1-e2, e1, e2}: second leading minor vanishes
    gram = [[-1, 1, 1], [1, -1, 0], [1, 0, -1]]
    assert is_negative_definite(gram) is False


def test_negative_definite_rejects_asymmetric():
    with pytest.raises(ValueError):
        is_negative_definite([[-1, 2], [1, -1]])


def test_negative_definite_agrees_with_quadratic_form_fuzz():
    rng = random.Random(11)
    for _ in range(80):
        k = rng.randint(1, 4)
        mat = [[0] * k for _ in range(k)]
        for i in range(k):
            for j in range(i, k):
                mat[i][j] = mat[j][i] = Fraction(rng.randint(-4, 4), rng.randint(1, 2))
        if is_negative_definite(mat):
            for _ in range(40):
                x = [rng.randint(-5, 5) for _ in range(k)]
                if any(x):
                    q = sum(x[i] * mat[i][j] * x[j] for i in range(k) for j in range(k))
                    assert q < 0
