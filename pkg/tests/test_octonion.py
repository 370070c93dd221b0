"""Octonion algebra: the validated multiplication table, conjugation, norm,
and the three cross products with their composition identities."""

import pytest

from cayley.exactnum import gq
from cayley.octonion import (DOUBLING_CONVENTION, E, IsotropicVector,
                             NotImaginary, Octonion, bilinear, cross2, cross3,
                             cross4, gram_schmidt, multiplication_table, norm)

from conftest import random_octonion, random_imaginary


def test_table_shape_and_identity():
    table = multiplication_table()
    assert DOUBLING_CONVENTION in ("plain", "mirrored")
    for k in range(8):
        assert table[0][k] == (1, k)
        assert table[k][0] == (1, k)
    for k in range(1, 8):
        assert table[k][k] == (-1, 0)


def test_quaternion_products():
    assert E[1] * E[2] == E[3]
    assert E[2] * E[1] == -E[3]
    assert E[2] * E[3] == E[1]
    assert E[3] * E[1] == E[2]
    assert (E[1] * E[2]) * E[3] == -E[0]


def test_doubling_products():
    # e5, e6, e7 are the products of e4 with e1, e2, e3 by construction
    assert E[4] * E[1] == E[5]
    assert E[4] * E[2] == E[6]
    assert E[4] * E[3] == E[7]


def test_identity_element(rng):
    x = random_octonion(rng)
    assert E[0] * x == x
    assert x * E[0] == x


def test_conjugation_on_basis():
    assert E[3].conj() == -E[3]
    assert E[0].conj() == E[0]
    x = Octonion([gq(2), gq(1), gq(0), gq(3), gq(0), gq(0), gq(0), gq(-1)])
    assert x.re() + x.im() == x
    assert x.conj() == x.re() - x.im()


def test_quaternion_norm_is_sum_of_squares(rng):
    for _ in range(20):
        coords = [gq(rng.randint(-4, 4)) for _ in range(4)] + [gq(0)] * 4
        x = Octonion(coords)
        expected = sum((c * c for c in coords[:4]), gq(0))
        assert norm(x) == expected


def test_norm_of_unit():
    assert norm(E[4]) == gq(1)


def test_bilinear_form_is_re_conj_product(rng):
    for _ in range(30):
        u = random_octonion(rng)
        v = random_octonion(rng)
        assert bilinear(u, v) == (u.conj() * v).coords[0]
        assert bilinear(u, v) == bilinear(v, u)


def test_cross2_examples():
    assert cross2(E[1], E[2]) == E[3]
    assert cross2(E[4], E[5]) == -E[1]


def test_cross2_alternating(rng):
    for _ in range(20):
        u = random_imaginary(rng)
        assert cross2(u, u).is_zero()


def test_cross2_requires_imaginary():
    with pytest.raises(NotImaginary):
        cross2(E[0], E[1])


def test_cross2_orthogonality_and_norm(rng):
    for _ in range(40):
        u = random_imaginary(rng)
        v = random_imaginary(rng)
        w = cross2(u, v)
        assert not bilinear(w, u)
        assert not bilinear(w, v)
        if not bilinear(u, v):
            assert norm(w) == norm(u) * norm(v)


def test_cross3_examples():
    assert bilinear(E[0], cross3(E[1], E[2], E[3])) == gq(1)
    assert cross3(E[1], E[2], E[1]).is_zero()
    assert bilinear(E[7], cross3(E[4], E[5], E[6])) == gq(-1)


def test_cross4_examples():
    assert cross4(E[0], E[1], E[2], E[3]) == E[0]
    assert cross4(E[1], E[2], E[3], E[4]).im().coords[4] == gq(1)


def test_cross4_alternating(rng):
    for _ in range(25):
        u = random_octonion(rng)
        v = random_octonion(rng)
        w = random_octonion(rng)
        assert cross4(u, u, v, w).is_zero()
        assert cross4(u, v, v, w).is_zero()
        assert cross4(u, v, w, w).is_zero()
        assert cross4(u, v, u, w).is_zero()
        assert cross4(u, v, w, u).is_zero()
        assert cross4(u, v, w, v).is_zero()


def test_composition_law(rng):
    for _ in range(200):
        u = random_octonion(rng)
        v = random_octonion(rng)
        assert norm(u * v) == norm(u) * norm(v)


def test_multiplication_is_orthogonal(rng):
    for _ in range(200):
        u = random_octonion(rng)
        v = random_octonion(rng)
        w = random_octonion(rng)
        lhs = norm(u) * bilinear(v, w)
        assert lhs == bilinear(u * v, u * w)
        assert lhs == bilinear(v * u, w * u)


def test_conjugation_anti_involution(rng):
    for _ in range(200):
        u = random_octonion(rng)
        v = random_octonion(rng)
        assert (u * v).conj() == v.conj() * u.conj()


def test_alternativity(rng):
    for _ in range(200):
        u = random_octonion(rng)
        v = random_octonion(rng)
        assert (u * u) * v == u * (u * v)
        assert (u * v) * v == u * (v * v)


def test_cross4_norm_on_orthogonal_quadruples(rng):
    produced = 0
    while produced < 200:
        sample = [random_octonion(rng) for _ in range(4)]
        try:
            ortho = gram_schmidt(sample)
        except IsotropicVector:
            continue
        produced += 1
        expected = norm(ortho[0]) * norm(ortho[1]) * norm(ortho[2]) * norm(ortho[3])
        assert norm(cross4(*ortho)) == expected


def test_gram_schmidt_orthogonality(rng):
    produced = 0
    while produced < 20:
        sample = [random_octonion(rng) for _ in range(4)]
        try:
            ortho = gram_schmidt(sample)
        except IsotropicVector:
            continue
        produced += 1
        for i in range(4):
            for j in range(i + 1, 4):
                assert not bilinear(ortho[i], ortho[j])
