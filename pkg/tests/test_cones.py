import random
from fractions import Fraction

import pytest

from okbodies.cones import (
    cone_model,
    is_ample,
    is_big,
    is_nef,
    is_pseudoeffective,
    mu_threshold,
    nef_violation,
    pseudoeffective_certificate,
    seshadri,
)
from okbodies.errors import InfiniteConeError, NotBigError
from okbodies.lattice import DivisorClass, e0, exceptional, intersect, uniform_class
from okbodies.simplex import cone_member


def test_cone_generators():
    assert cone_model(0).generators == (e0(0),)
    assert set(cone_model(1).generators) == {exceptional(1, 1), DivisorClass(1, 1, (1,))}
    assert len(cone_model(8).generators) == 240
    for n in range(2, 9):
        from okbodies.lattice import self_intersection

        assert all(self_intersection(g) < 0 for g in cone_model(n).generators)


def test_pseudoeffective_basics():
    for n in range(0, 9):
        assert is_pseudoeffective(e0(n)) is True
        assert is_pseudoeffective(-1 * e0(n)) is False
    # (2/3)e0 - (1/3)(e1+e2) = (1/3)(e0-e1-e2) + (1/3)e0
    assert is_pseudoeffective(uniform_class(2, Fraction(2, 3), Fraction(1, 3))) is True


def test_pseudoeffective_certificate_reconstructs():
    D = uniform_class(2, Fraction(2, 3), Fraction(1, 3))
    member, combo = pseudoeffective_certificate(D)
    assert member is True
    total = 0 * D
    for curve, coeff in combo:
        assert coeff > 0
        total = total + coeff * curve
    assert total == D


def test_non_member_certificate_is_nef_separator():
    D = DivisorClass(3, -2, (1, 0, -1))
    member, separator = pseudoeffective_certificate(D)
    if member:
        pytest.skip("sampled class happened to be effective")
    assert is_nef(separator)
    assert intersect(separator, D) < 0


def test_nef_examples():
    assert is_nef(e0(4)) is True
    assert is_nef(exceptional(1, 4)) is False
    assert is_nef(uniform_class(5, 1, Fraction(2, 5))) is True
    assert is_nef(uniform_class(5, 1, Fraction(2, 5) + Fraction(1, 1000))) is False
    bad = nef_violation(uniform_class(5, 1, Fraction(1, 2)))
    assert bad is not None and intersect(uniform_class(5, 1, Fraction(1, 2)), bad) < 0


def test_big_and_ample_examples():
    assert is_big(e0(1)) is True
    assert is_ample(e0(1)) is False  # meets e1 in zero
    assert is_big(uniform_class(4, 1, Fraction(1, 3))) is True
    assert is_big(uniform_class(4, 1, Fraction(1, 2))) is False  # square zero
    assert is_ample(uniform_class(4, 1, Fraction(1, 4))) is True
    assert is_ample(uniform_class(4, 1, Fraction(1, 2))) is False


def test_positivity_chain():
    rng = random.Random(15)
    for _ in range(120):
        n = rng.randint(0, 8)
        D = DivisorClass(
            n,
            Fraction(rng.randint(-5, 5), rng.randint(1, 3)),
            tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n)),
        )
        amp, nef, big, psef = is_ample(D), is_nef(D), is_big(D), is_pseudoeffective(D)
        assert not amp or nef
        assert not nef or psef
        assert not big or psef
        assert not amp or big


def test_psef_shortcut_agrees_with_lp():
    rng = random.Random(16)
    for _ in range(120):
        n = rng.randint(0, 8)
        D = DivisorClass(
            n,
            Fraction(rng.randint(-5, 5), rng.randint(1, 3)),
            tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n)),
        )
        raw = cone_member(D.coords(), cone_model(D.n).generator_coords)
        assert is_pseudoeffective(D) == raw


def test_seshadri_table():
    expected = [
        1,
        Fraction(1, 2),
        Fraction(1, 2),
        Fraction(1, 2),
        Fraction(2, 5),
        Fraction(2, 5),
        Fraction(3, 8),
        Fraction(6, 17),
        Fraction(1, 3),
    ]
    assert [seshadri(n) for n in range(1, 10)] == expected
    with pytest.raises(ValueError):
        seshadri(0)
    with pytest.raises(ValueError):
        seshadri(10)


def test_seshadri_realizers():
    # minimizing generators per the classification
    assert Fraction(3, 8) == min(
        Fraction(g.d, sum(g.m))
        for g in cone_model(7).generators
        if sum(g.m) > 0
    )
    sextic = DivisorClass(8, 6, (3, 2, 2, 2, 2, 2, 2, 2))
    assert Fraction(sextic.d, sum(sextic.m)) == Fraction(6, 17)


def test_mu_threshold_examples():
    assert mu_threshold(e0(0), e0(0)) == 1
    assert mu_threshold(uniform_class(2, 1, Fraction(1, 3)), e0(2)) == Fraction(2, 3)
    assert mu_threshold(uniform_class(8, 1, Fraction(1, 3)), e0(8)) == Fraction(1, 17)


def test_mu_threshold_delta_identity():
    for n in range(1, 9):
        eps = Fraction(seshadri(n))
        delta = mu_threshold(uniform_class(n, 1, Fraction(1, 3)), e0(n))
        assert delta == 1 - Fraction(n) * eps / 3


def test_mu_threshold_requires_big_and_line_flag():
    with pytest.raises(NotBigError):
        mu_threshold(exceptional(1, 2), e0(2))
    with pytest.raises(ValueError):
        mu_threshold(e0(2), exceptional(1, 2))


def test_n9_cone_queries_fail_loudly():
    D = uniform_class(9, 1, Fraction(1, 4))
    for fn in (is_pseudoeffective, is_nef, is_big, is_ample):
        with pytest.raises(InfiniteConeError):
            fn(D)
    with pytest.raises(InfiniteConeError):
        cone_model(9)
