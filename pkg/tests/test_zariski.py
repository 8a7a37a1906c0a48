import random
from fractions import Fraction

import pytest

from okbodies.cones import cone_model, is_ample, is_big, is_nef
from okbodies.errors import NotNefError, NotPseudoEffectiveError
from okbodies.lattice import (
    DivisorClass,
    e0,
    exceptional,
    intersect,
    self_intersection,
    uniform_class,
)
from okbodies.linalg import is_negative_definite
from okbodies.zariski import neg_support, null_set, zariski_decompose


def _random_psef(rng, n):
    gens = cone_model(n).generators
    D = Fraction(rng.randint(0, 2), 1) * e0(n)
    for _ in range(rng.randint(1, 5)):
        D = D + Fraction(rng.randint(0, 5), rng.randint(1, 4)) * rng.choice(gens)
    return D


def test_nef_class_decomposes_trivially():
    z = zariski_decompose(e0(3))
    assert z.positive == e0(3) and z.negative == ()
    z = zariski_decompose(uniform_class(5, 1, Fraction(2, 5)))
    assert z.negative == ()


def test_two_point_example():
    D = DivisorClass(2, Fraction(1, 2), (Fraction(1, 3), Fraction(1, 3)))
    z = zariski_decompose(D)
    line = DivisorClass(2, 1, (1, 1))
    assert z.negative == ((line, Fraction(1, 6)),)
    assert z.positive == Fraction(1, 6) * DivisorClass(2, 2, (1, 1))
    assert intersect(z.positive, line) == 0
    assert is_nef(z.positive)


def test_exceptional_is_its_own_negative_part():
    z = zariski_decompose(exceptional(1, 2))
    assert z.positive == 0 * e0(2)
    assert z.negative == ((exceptional(1, 2), 1),)


def test_boundary_class_supported_on_all_sextics():
    D = uniform_class(8, Fraction(16, 17), Fraction(1, 3))
    z = zariski_decompose(D)
    assert z.positive == 0 * e0(8)
    assert len(z.negative) == 8
    assert {coeff for _c, coeff in z.negative} == {Fraction(1, 51)}
    assert all(c.d == 6 for c, _x in z.negative)


def test_not_pseudoeffective_rejected():
    with pytest.raises(NotPseudoEffectiveError):
        zariski_decompose(-1 * e0(4))
    with pytest.raises(NotPseudoEffectiveError):
        zariski_decompose(DivisorClass(2, 0, (-1, 1)))


def test_neg_support():
    assert neg_support(e0(5)) == frozenset()
    D = DivisorClass(2, Fraction(1, 2), (Fraction(1, 3), Fraction(1, 3)))
    assert neg_support(D) == frozenset({DivisorClass(2, 1, (1, 1))})


def test_null_set_examples():
    assert null_set(uniform_class(2, 1, Fraction(1, 4))) == frozenset()
    assert null_set(e0(1)) == frozenset({exceptional(1, 1)})
    lines = null_set(uniform_class(4, Fraction(2, 3), Fraction(1, 3)))
    assert len(lines) == 6
    assert all(c.d == 1 for c in lines)
    with pytest.raises(NotNefError):
        null_set(exceptional(1, 3))


def test_null_set_nonempty_on_nef_boundary():
    # nef and big but not ample classes have nonempty null set
    from okbodies.cones import seshadri

    for n in (2, 3, 5, 6, 7, 8):
        P = uniform_class(n, 1, seshadri(n))
        assert is_nef(P) and is_big(P) and not is_ample(P)
        assert null_set(P)


def test_decomposition_invariants_randomized():
    rng = random.Random(21)
    for _ in range(150):
        n = rng.randint(0, 8)
        D = _random_psef(rng, n)
        z = zariski_decompose(D)
        reconstructed = z.positive
        for c, x in z.negative:
            assert x > 0
            assert intersect(z.positive, c) == 0
            reconstructed = reconstructed + x * c
        assert reconstructed == D
        assert is_nef(z.positive)
        if z.negative:
            assert is_negative_definite([list(r) for r in z.gram])


def test_order_independence():
    rng = random.Random(22)
    for _ in range(40):
        n = rng.randint(1, 8)
        D = _random_psef(rng, n)
        z1 = zariski_decompose(D)
        shuffled = list(cone_model(n).negative_candidates)
        rng.shuffle(shuffled)
        z2 = zariski_decompose(D, candidate_order=shuffled)
        assert z1.positive == z2.positive
        assert z1.negative == z2.negative


def test_idempotence_on_positive_parts():
    rng = random.Random(23)
    for _ in range(40):
        n = rng.randint(0, 8)
        z = zariski_decompose(_random_psef(rng, n))
        again = zariski_decompose(z.positive)
        assert again.positive == z.positive
        assert again.negative == ()


def test_volume_sign_tracks_bigness():
    rng = random.Random(24)
    for _ in range(40):
        n = rng.randint(0, 8)
        D = _random_psef(rng, n)
        z = zariski_decompose(D)
        assert (z.volume() > 0) == is_big(D)


def test_json_payload():
    D = DivisorClass(2, Fraction(1, 2), (Fraction(1, 3), Fraction(1, 3)))
    payload = zariski_decompose(D).to_json()
    assert payload["positive"]["d"] == "1/3"
    assert payload["negative"][0]["coeff"] == "1/6"
