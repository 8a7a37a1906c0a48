import random
from fractions import Fraction

import pytest

from okbodies.errors import CremonaUndefinedError, OrbitBoundExceededError
from okbodies.lattice import (
    DivisorClass,
    canonical_class,
    exceptional,
    expected_genus,
    intersect,
    self_intersection,
)
from okbodies.weyl import (
    Reflection,
    apply,
    apply_word,
    cremona_reduce,
    degree_histogram,
    exceptional_classes,
    exceptional_classes_diophantine,
    orbit,
    satisfies_noether_inequality,
    simple_reflections,
)


def _random_integral(rng, n):
    return DivisorClass(
        n, rng.randint(-9, 9), tuple(rng.randint(-9, 9) for _ in range(n))
    )


def test_swap_reflection():
    assert apply(Reflection(1, 2), exceptional(1, 2)) == exceptional(2, 2)
    assert apply(Reflection(1, 2), exceptional(2, 2)) == exceptional(1, 2)


def test_cremona_on_line_through_two_points():
    # s3(e0 - e1 - e2) expands linearly to e3
    line = DivisorClass(3, 1, (1, 1, 0))
    assert apply(Reflection(3, 3), line) == exceptional(3, 3)


def test_cremona_action_on_basis():
    s = Reflection(3, 3)
    assert apply(s, DivisorClass(3, 1, (0, 0, 0))) == DivisorClass(3, 2, (1, 1, 1))
    assert apply(s, exceptional(1, 3)) == DivisorClass(3, 1, (0, 1, 1))


def test_reflections_are_involutions():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randint(1, 9)
        c = _random_integral(rng, n)
        for r in simple_reflections(n):
            assert apply(r, apply(r, c)) == c


def test_reflections_preserve_form_and_fix_k():
    rng = random.Random(6)
    for _ in range(60):
        n = rng.randint(3, 9)
        a, b = _random_integral(rng, n), _random_integral(rng, n)
        for r in simple_reflections(n):
            assert intersect(apply(r, a), apply(r, b)) == intersect(a, b)
            assert apply(r, canonical_class(n)) == canonical_class(n)


def test_cremona_undefined_below_three_points():
    with pytest.raises(CremonaUndefinedError):
        apply(Reflection(2, 2), exceptional(1, 2))
    with pytest.raises(CremonaUndefinedError):
        apply(Reflection(1, 1), exceptional(1, 1))


def test_orbit_sizes():
    assert len(orbit(exceptional(1, 1)).elements) == 1
    sizes = {n: len(exceptional_classes(n)) for n in range(1, 9)}
    assert sizes == {1: 1, 2: 3, 3: 6, 4: 10, 5: 16, 6: 27, 7: 56, 8: 240}


def test_orbit_contains_conic_class():
    orb = orbit(DivisorClass(5, 1, (1, 0, 0, 0, 0)))
    assert DivisorClass(5, 2, (1, 1, 1, 1, 0)) in orb


def test_orbit_bound_exceeded_for_n9():
    with pytest.raises(OrbitBoundExceededError) as excinfo:
        orbit(exceptional(9, 9), max_size=500)
    assert "500" in str(excinfo.value)


def test_orbit_words_reproduce_elements():
    orb = orbit(exceptional(4, 4), record_words=True)
    for element, word in orb.words.items():
        assert apply_word(word, orb.seed) == element


def test_orbit_elements_share_invariants():
    orb = orbit(DivisorClass(6, 1, (1, 0, 0, 0, 0, 0)))
    assert {self_intersection(c) for c in orb.elements} == {0}
    assert {intersect(c, canonical_class(6)) for c in orb.elements} == {-2}
    assert {expected_genus(c) for c in orb.elements} == {0}


def test_degree_histogram_n8():
    hist = degree_histogram(exceptional_classes(8))
    assert hist == {0: 8, 1: 28, 2: 56, 3: 56, 4: 56, 5: 28, 6: 8}


def test_histogram_n6_lines():
    hist = degree_histogram(exceptional_classes(6))
    assert hist == {0: 6, 1: 15, 2: 6}
    assert sum(hist.values()) == 27


def test_diophantine_oracle_counts():
    assert len(exceptional_classes_diophantine(1)) == 1
    assert len(exceptional_classes_diophantine(7)) == 56
    assert len(exceptional_classes_diophantine(8)) == 240


def test_oracle_matches_orbit_for_all_n():
    for n in range(1, 9):
        assert exceptional_classes(n) == exceptional_classes_diophantine(n)


def test_exceptional_classes_validate_numerics():
    for n in (2, 5, 8):
        for c in exceptional_classes(n):
            assert self_intersection(c) == -1
            assert intersect(c, canonical_class(n)) == -1
            assert expected_genus(c) == 0


def test_reflections_permute_exceptional_classes():
    for n in range(3, 9):
        classes = set(exceptional_classes(n))
        for r in simple_reflections(n):
            assert {apply(r, c) for c in classes} == classes


def test_noether_inequality_on_exceptional_classes():
    for n in range(3, 9):
        for c in exceptional_classes(n):
            if sum(1 for v in c.m if v > 0) >= 2:
                assert satisfies_noether_inequality(c)


def test_cremona_reduce_line():
    reduced, word = cremona_reduce(DivisorClass(3, 1, (1, 1, 0)))
    assert reduced == exceptional(3, 3)
    assert [r.index for r in word] == [3]


def test_cremona_reduce_fixed_point():
    reduced, word = cremona_reduce(exceptional(3, 3))
    assert reduced == exceptional(3, 3)
    assert word == ()


def test_cremona_reduce_sextic_reaches_e8():
    sextic = DivisorClass(8, 6, (3, 2, 2, 2, 2, 2, 2, 2))
    assert 6 < 3 + 2 + 2  # the reduction fires
    reduced, word = cremona_reduce(sextic)
    assert reduced == exceptional(8, 8)
    assert apply_word(word, sextic) == reduced


def test_cremona_reduce_word_replays():
    rng = random.Random(9)
    for _ in range(25):
        n = rng.randint(3, 8)
        c = _random_integral(rng, n)
        reduced, word = cremona_reduce(c)
        assert apply_word(word, c) == reduced
