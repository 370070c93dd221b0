"""Scalar field, matrices and polynomials: exactness, determinism, and the
frozen linear-algebra examples."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from cayley import golden
from cayley.exactnum import (DivisionByZero, GaussianRational, Matrix,
                             Polynomial, PolynomialRing, UnknownVariable,
                             gq, matrix_from_json, matrix_to_json,
                             spans_equal)

from conftest import random_scalar


# ---------------------------------------------------------------------------
# scalars
# ---------------------------------------------------------------------------

def test_normalization_and_zero():
    assert gq(2, 4, 6) == gq(1, 2, 3)
    assert gq(1, 1, -2) == gq(-1, -1, 2)
    zero = gq(0, 0, 5)
    assert (zero.re_num, zero.im_num, zero.den) == (0, 0, 1)
    assert not zero


def test_half_times_conjugate_half():
    half_plus = gq(1, 1, 2)     # (1+i)/2
    half_minus = gq(1, -1, 2)   # (1-i)/2
    assert half_plus * half_minus == gq(1, 0, 2)


def test_inverse_of_i():
    assert gq(0, 1).inv() == gq(0, -1)
    assert gq(0, 1) * gq(0, -1) == gq(1)


def test_third_plus_sixth():
    assert gq(1, 0, 3) + gq(1, 0, 6) == gq(1, 0, 2)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        gq(1) / gq(0)
    with pytest.raises(DivisionByZero):
        gq(0).inv()


def test_serialization_round_trip():
    samples = [gq(0), gq(5), gq(-3, 0, 7), gq(0, 2, 3), gq(1, -1, 2),
               gq(-2, -5, 9), gq(0, -1)]
    for s in samples:
        assert GaussianRational.parse(str(s)) == s
    assert str(gq(1, -1, 2)) == "1/2-1/2*i"
    assert str(gq(0, 1)) == "1*i"


small = st.integers(-6, 6)
dens = st.integers(1, 5)
scalars = st.builds(gq, small, small, dens)


@settings(max_examples=150, deadline=None)
@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert a + (b + c) == (a + b) + c
    assert a * (b * c) == (a * b) * c
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    if b:
        assert (a / b) * b == a
    assert (a * b).conj() == a.conj() * b.conj()


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

def test_rank_identity_and_zero():
    assert Matrix.identity(4).rank() == 4
    assert Matrix.zero(7, 16).rank() == 0


def test_rank_of_golden_jacobian():
    data = golden.load_jacobian_0123()
    m = Matrix.from_int_rows(data["rows"])
    assert m.rank() == 4
    assert m.rank_fraction_free() == 4


def test_kernel_identity_and_zero():
    assert Matrix.identity(3).kernel_basis() == []
    kernel = Matrix.zero(2, 5).kernel_basis()
    assert kernel == [tuple(gq(1) if i == k else gq(0) for i in range(5))
                      for k in range(5)]


def test_kernel_members_annihilated():
    data = golden.load_jacobian_0123()
    m = Matrix.from_int_rows(data["rows"])
    kernel = m.kernel_basis()
    assert len(kernel) == 12
    for vec in kernel:
        assert all(not c for c in m.apply_to(vec))


def test_rank_nullity_on_random_matrices(rng):
    for _ in range(40):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        m = Matrix([[random_scalar(rng, 3) for _ in range(cols)]
                    for _ in range(rows)])
        assert m.rank() + len(m.kernel_basis()) == cols


def test_fraction_free_agrees_with_gaussian(rng):
    for _ in range(60):
        m = Matrix([[random_scalar(rng, 3) for _ in range(3)] for _ in range(3)])
        assert m.rank() == m.rank_fraction_free()


def test_inverse_round_trip(rng):
    for _ in range(20):
        m = Matrix([[random_scalar(rng, 3) for _ in range(4)] for _ in range(4)])
        if m.rank() < 4:
            continue
        assert m @ m.inverse() == Matrix.identity(4)


def test_matrix_json_round_trip(rng):
    m = Matrix([[random_scalar(rng) for _ in range(3)] for _ in range(2)])
    assert matrix_from_json(matrix_to_json(m)) == m


def test_span_helpers():
    a = (gq(1), gq(0), gq(1))
    b = (gq(0), gq(1), gq(1))
    assert spans_equal([a, b], [b, a])
    assert spans_equal([a, b], [a, b, tuple(x + y for x, y in zip(a, b))])
    assert not spans_equal([a], [b])


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

def test_partial_derivatives():
    ring = PolynomialRing(("q1", "q2"))
    q1, q2 = ring.gens()
    assert (q1 * q2).partial("q1") == q2
    assert (q1 ** 2).partial("q1") == q1 * 2
    with pytest.raises(UnknownVariable):
        q1.partial("zz")


def test_product_evaluation_matches(rng):
    ring = PolynomialRing(("x", "y", "z"))
    x, y, z = ring.gens()
    p = x * y - z * 2 + ring.const(gq(1, 1, 2))
    q = x ** 2 + y * z
    for _ in range(20):
        point = {n: random_scalar(rng, 3) for n in ring.names}
        assert (p * q).evaluate(point) == p.evaluate(point) * q.evaluate(point)


def test_laurent_exponents():
    ring = PolynomialRing(("t",))
    t = ring.var("t")
    inv = ring.monomial({"t": -1})
    assert (t * inv) == ring.one()
    value = (t + inv).evaluate({"t": gq(2)})
    assert value == gq(5, 0, 2)


def test_substitution():
    ring = PolynomialRing(("a", "b"))
    a, b = ring.gens()
    p = a * a + b
    assert p.subs({"a": b}) == b * b + b
    assert p.subs({"a": 0, "b": gq(3)}) == ring.const(gq(3))


def test_canonical_term_order_is_stable():
    ring = PolynomialRing(("a", "b"))
    a, b = ring.gens()
    p = b * b + a * b + a + ring.const(gq(2))
    assert str(p) == "2 + a + a*b + b^2"
