"""Exterior algebra: wedge signs, the Hodge star on the 7-space, the three
calibration forms, evaluation and pullbacks."""

import pytest

from cayley import golden
from cayley.exactnum import Matrix, gq
from cayley.exterior import (GradeOverflow, IndexZeroPresent, MultiVector,
                             act_on_form, build_calibrations, eval4,
                             hodge_star7, key_str, pullback4, sort_sign,
                             wedge_of_vectors)
from cayley.octonion import E, cross4

from conftest import random_octonion


def brute_force_sign(sequence):
    """Permutation sign by explicit inversion count; the independent oracle
    for wedge and Hodge signs."""
    items = list(sequence)
    if len(set(items)) != len(items):
        return 0
    inversions = sum(1 for i in range(len(items)) for j in range(i + 1, len(items))
                     if items[i] > items[j])
    return -1 if inversions % 2 else 1


def test_wedge_examples():
    e01 = MultiVector.basis((0, 1))
    e23 = MultiVector.basis((2, 3))
    assert e01.wedge(e23) == MultiVector.basis((0, 1, 2, 3))
    e1 = MultiVector.basis((1,))
    assert e1.wedge(e1).is_zero()
    assert e23.wedge(e01) == MultiVector.basis((0, 1, 2, 3))


def test_wedge_sign_matches_brute_force(rng):
    for _ in range(100):
        k = rng.randint(1, 3)
        l = rng.randint(1, 3)
        a = tuple(sorted(rng.sample(range(8), k)))
        b = tuple(sorted(rng.sample(range(8), l)))
        product = MultiVector.basis(a).wedge(MultiVector.basis(b))
        sign = brute_force_sign(a + b)
        if sign == 0:
            assert product.is_zero()
        else:
            key = tuple(sorted(a + b))
            assert product.coeffs == {key: gq(sign)}


def test_wedge_grade_overflow():
    a = MultiVector.basis((0, 1, 2, 3, 4))
    b = MultiVector.basis((0, 5, 6, 7))
    with pytest.raises(GradeOverflow):
        a.wedge(b)


def test_sort_sign_agrees_with_brute_force(rng):
    for _ in range(200):
        seq = [rng.randint(0, 7) for _ in range(rng.randint(1, 5))]
        sign, _ = sort_sign(seq)
        assert sign == brute_force_sign(seq)


def test_hodge_examples():
    assert hodge_star7(MultiVector.basis((1, 2, 3))) == MultiVector.basis((4, 5, 6, 7))
    mv = MultiVector.basis((1, 4, 5))
    assert hodge_star7(hodge_star7(mv)) == mv
    # the sign on (2,4,6) is pinned by the permutation-parity oracle
    expected_sign = brute_force_sign((2, 4, 6, 1, 3, 5, 7))
    assert hodge_star7(MultiVector.basis((2, 4, 6))) == \
        MultiVector.basis((1, 3, 5, 7)).scale(gq(expected_sign))


def test_hodge_rejects_index_zero():
    with pytest.raises(IndexZeroPresent):
        hodge_star7(MultiVector.basis((0, 1, 2)))


def test_hodge_is_involution_on_all_triples(rng):
    from itertools import combinations
    for idx in combinations(range(1, 8), 3):
        mv = MultiVector.basis(idx)
        assert hodge_star7(hodge_star7(mv)) == mv


def test_calibrations_match_golden_tables():
    phi, big, xi = build_calibrations()
    tables = golden.load_forms()
    assert phi.to_json() == tables["phi"]
    assert big.to_json() == tables["Phi"]
    assert xi.to_json() == tables["xi"]


def test_calibration_term_counts():
    phi, big, xi = build_calibrations()
    assert len(phi.coeffs) == 7
    assert len(big.coeffs) == 14
    assert xi.term_count() == 56
    units = {gq(1), gq(-1)}
    for form in [phi, big, *xi.components]:
        assert set(form.coeffs.values()) <= units


def test_specific_coefficients():
    phi, big, xi = build_calibrations()
    assert phi.coefficient((2, 5, 7)) == gq(1)
    assert big.coefficient((1, 2, 4, 7)) == gq(-1)
    assert xi.component(7).coefficient((0, 1, 2, 4)) == gq(1)


def test_degree4_form_splits_into_degree3_and_star():
    phi, big, _ = build_calibrations()
    e0 = MultiVector.basis((0,))
    assert e0.wedge(phi) + hodge_star7(phi) == big


def test_eval4_examples():
    _, big, _ = build_calibrations()
    assert eval4(big, E[0], E[1], E[2], E[3]) == gq(1)
    assert eval4(big, E[0], E[0], E[2], E[3]) == gq(0)
    assert eval4(big, E[1], E[2], E[4], E[7]) == gq(-1)


def test_eval4_matches_cross4(rng):
    _, big, xi = build_calibrations()
    for _ in range(50):
        vs = [random_octonion(rng) for _ in range(4)]
        quad = cross4(*vs)
        assert eval4(big, *vs) == quad.coords[0]
        assert xi.evaluate(*vs) == quad.im()


def test_pullback_identity_and_sign():
    _, big, _ = build_calibrations()
    assert pullback4(Matrix.identity(8), big) == big
    minus = Matrix.identity(8).scale(gq(-1))
    assert pullback4(minus, big) == big


def test_pullback_functoriality(rng):
    _, big, _ = build_calibrations()
    for _ in range(5):
        a = Matrix([[gq(rng.randint(-2, 2)) for _ in range(8)] for _ in range(8)])
        b = Matrix([[gq(rng.randint(-2, 2)) for _ in range(8)] for _ in range(8)])
        assert pullback4(a @ b, big) == pullback4(b, pullback4(a, big))


def test_action_on_form_matches_evaluation(rng):
    _, big, _ = build_calibrations()
    rows = [[gq(rng.randint(-2, 2)) for _ in range(8)] for _ in range(8)]
    x = Matrix(rows)
    image = act_on_form(x, big)
    for _ in range(10):
        vs = [random_octonion(rng) for _ in range(4)]
        expected = gq(0)
        for pos in range(4):
            moved = list(vs)
            moved[pos] = type(vs[pos])(x.apply_to(vs[pos].coords))
            expected = expected - eval4(big, *moved)
        assert eval4(image, *vs) == expected


def test_wedge_of_vectors_matches_pluecker_shape():
    mv = wedge_of_vectors([E[0], E[1], E[2], E[3]])
    assert mv.coeffs == {(0, 1, 2, 3): gq(1)}
    assert key_str((0, 1, 2, 3)) == "0123"
