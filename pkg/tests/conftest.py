"""Shared helpers: seeded random scalars, octonions, and Cayley planes."""

from __future__ import annotations

import random

import pytest

from cayley.exactnum import GaussianRational, Matrix, gq
from cayley.octonion import Octonion
from cayley import liegroups


def random_scalar(rng: random.Random, span: int = 4) -> GaussianRational:
    return gq(rng.randint(-span, span), rng.randint(-span, span),
              rng.randint(1, 3))


def random_octonion(rng: random.Random) -> Octonion:
    return Octonion([random_scalar(rng) for _ in range(8)])


def random_imaginary(rng: random.Random) -> Octonion:
    return Octonion([gq(0)] + [random_scalar(rng) for _ in range(7)])


def nonzero_scalar(rng: random.Random) -> GaussianRational:
    while True:
        value = gq(rng.randint(-3, 3), rng.randint(-3, 3), rng.randint(1, 3))
        if value:
            return value


def random_invariance_matrix(rng: random.Random) -> Matrix:
    """A random product of torus elements and unipotents; preserves the
    bilinear form and the degree-4 calibration form exactly."""
    m = liegroups.torus_matrix_at(nonzero_scalar(rng), nonzero_scalar(rng),
                                  nonzero_scalar(rng))
    for _ in range(rng.randint(1, 3)):
        which = rng.randint(1, 3)
        m = m @ liegroups.sl2_unipotent(which, random_scalar(rng, span=2))
    return m


def random_cayley_plane(rng: random.Random) -> list[Octonion]:
    """Image of the quaternion plane under a random invariance matrix."""
    m = random_invariance_matrix(rng)
    return [Octonion(m.column(k)) for k in range(4)]


@pytest.fixture
def rng() -> random.Random:
    return random.Random(99173)
