"""Charts, straightening, localized systems and their Jacobians, checked
against the golden tables and two independent oracles: coordinate ratios of
random decomposable points, and symbolic minors of the normalized matrix
representative."""

import random

import pytest

from cayley import golden
from cayley.exactnum import GaussianRational, Matrix, PolynomialRing, gq, spans_equal
from cayley.exterior import INDEX_SETS_4, build_calibrations, pullback4, str_key
from cayley.grassmann import (Chart, DegeneratePlane, LocalizedSystem, chart,
                              exchange_relation_terms, is_cayley_plane,
                              jacobian_at_origin, linear_functionals,
                              localize_functionals, localized_equations,
                              plucker_of_plane, plucker_relations, pname,
                              qname, serialize_system, straighten)
from cayley.liegroups import eigen_octonion, eigenbasis_change
from cayley.octonion import E, Octonion

from conftest import random_cayley_plane, random_invariance_matrix, random_octonion

RELATION_COUNT = 1316   # regression constant fixed by this dedup convention


# ---------------------------------------------------------------------------
# charts and points
# ---------------------------------------------------------------------------

def test_chart_has_sixteen_lex_ordered_variables():
    ch = chart((0, 1, 2, 3))
    assert len(ch.variables) == 16
    names = [qname(I) for I in ch.variables]
    assert names == sorted(names)
    assert names[:4] == ["q0124", "q0125", "q0126", "q0127"]
    assert names == ["q" + c for c in golden.load_jacobian_0123()["columns"]]


def test_plucker_of_plane_basis():
    point = plucker_of_plane(E[0], E[1], E[2], E[3])
    assert point.coords == {(0, 1, 2, 3): gq(1)}


def test_plucker_of_plane_row_operations():
    a = plucker_of_plane(E[0], E[1], E[2], E[3])
    shifted = Octonion([gq(5) if k == 1 else (gq(1) if k == 2 else gq(0))
                        for k in range(8)])  # e2 + 5 e1
    b = plucker_of_plane(E[0], E[1], shifted, E[3])
    assert a.same_projective_point(b)


def test_plucker_of_plane_in_eigenbasis():
    inverse = eigenbasis_change().inverse()
    vectors = [Octonion(inverse.apply_to(eigen_octonion(k).coords))
               for k in (0, 2, 4, 6)]
    point = plucker_of_plane(*vectors)
    assert point.normalized().coords == {(0, 2, 4, 6): gq(1)}


def test_degenerate_plane_rejected():
    with pytest.raises(DegeneratePlane):
        plucker_of_plane(E[0], E[1], E[2], E[2])


def test_random_planes_satisfy_relations(rng):
    for _ in range(20):
        vectors = [random_octonion(rng) for _ in range(4)]
        try:
            point = plucker_of_plane(*vectors)
        except DegeneratePlane:
            continue
        assert point.satisfies_plucker_relations()


def test_relation_count_regression():
    assert len(plucker_relations()) == RELATION_COUNT


def test_specific_relation_instance():
    """p4567 p0123 = p0456 p1237 - p1456 p0237 + p2456 p0137 - p3456 p0127."""
    ring = plucker_relations()[0].ring
    lhs = ring.monomial({pname((4, 5, 6, 7)): 1}) * ring.monomial({pname((0, 1, 2, 3)): 1})
    rhs = ring.zero()
    for sign, a, b in [(1, (0, 4, 5, 6), (1, 2, 3, 7)),
                       (-1, (1, 4, 5, 6), (0, 2, 3, 7)),
                       (1, (2, 4, 5, 6), (0, 1, 3, 7)),
                       (-1, (3, 4, 5, 6), (0, 1, 2, 7))]:
        rhs = rhs + ring.monomial({pname(a): 1}) * ring.monomial({pname(b): 1}) * sign
    relation = lhs - rhs
    normalized = [rel if rel.sorted_terms()[0][1].re_num > 0 else -rel
                  for rel in (relation,)][0]
    fingerprints = {frozenset(rel.terms.items()) for rel in plucker_relations()}
    assert frozenset(normalized.terms.items()) in fingerprints


# ---------------------------------------------------------------------------
# straightening
# ---------------------------------------------------------------------------

def test_straighten_base_and_variables():
    ch = chart((0, 1, 2, 3))
    assert straighten(ch, (0, 1, 2, 3)) == ch.ring.one()
    assert straighten(ch, (0, 1, 2, 4)) == ch.var((0, 1, 2, 4))


def test_straighten_opposite_coordinate():
    ch = chart((0, 1, 2, 3))
    expansion = (straighten(ch, (0, 4, 5, 6)) * ch.var((1, 2, 3, 7))
                 - straighten(ch, (1, 4, 5, 6)) * ch.var((0, 2, 3, 7))
                 + straighten(ch, (2, 4, 5, 6)) * ch.var((0, 1, 3, 7))
                 - straighten(ch, (3, 4, 5, 6)) * ch.var((0, 1, 2, 7)))
    assert straighten(ch, (4, 5, 6, 7)) == expansion


def matrix_representative(ch: Chart) -> Matrix:
    """Symbolic 4x8 matrix normalized to the identity on the base columns;
    its 4x4 column minors are the straightened coordinates.  Independent of
    the exchange-relation rewriting."""
    entries = [[ch.ring.zero() for _ in range(8)] for _ in range(4)]
    for r, b in enumerate(ch.base):
        entries[r][b] = ch.ring.one()
    for col in range(8):
        if col in ch.base:
            continue
        for r in range(4):
            # the minor on columns (base minus b_r) + col expands to the
            # (r, col) entry times the sign of col's sorted position
            target = tuple(sorted((set(ch.base) - {ch.base[r]}) | {col}))
            position = target.index(col)
            sign = (-1) ** (r + position)
            entries[r][col] = ch.var(target) * sign
    return Matrix(entries)


def test_straighten_against_symbolic_minors():
    for base in [(0, 1, 2, 3), (0, 2, 4, 6), (1, 3, 5, 7)]:
        ch = chart(base)
        rep = matrix_representative(ch)
        rng = random.Random(4)
        targets = list(INDEX_SETS_4)
        rng.shuffle(targets)
        for target in targets[:25]:
            minor = rep.submatrix(range(4), target).det()
            assert straighten(ch, target) == minor, (base, target)


def test_straighten_against_point_ratios(rng):
    ch = chart((0, 1, 2, 3))
    checked = 0
    while checked < 20:
        vectors = random_cayley_plane(rng)
        point = plucker_of_plane(*vectors)
        if not point.in_chart(ch):
            continue
        checked += 1
        values = point.chart_values(ch)
        for target in [(4, 5, 6, 7), (0, 4, 5, 6), (2, 3, 6, 7), (0, 1, 4, 5)]:
            assert straighten(ch, target).evaluate(values) == point.ratio(ch, target)


def test_straighten_all_targets_terminates():
    ch = chart((0, 2, 4, 6))
    for target in INDEX_SETS_4:
        poly = straighten(ch, target)
        assert poly.total_degree() <= 4


# ---------------------------------------------------------------------------
# localized systems
# ---------------------------------------------------------------------------

def golden_localized_polynomials(ch: Chart):
    out = []
    for terms in golden.load_localized_0123():
        poly = ch.ring.zero()
        for coeff, variables in terms:
            mono = ch.ring.const(GaussianRational.parse(coeff))
            for v in variables:
                mono = mono * ch.ring.var("q" + v)
            poly = poly + mono
        out.append(poly)
    return out


def test_localized_standard_system_matches_golden():
    ch = chart((0, 1, 2, 3))
    system = localized_equations(ch, "standard")
    expected = golden_localized_polynomials(ch)
    assert list(system.equations) == expected


def test_localized_serialization_round_trip():
    ch = chart((0, 1, 2, 3))
    system = localized_equations(ch, "standard")
    golden_system = LocalizedSystem(ch, "standard",
                                    tuple(golden_localized_polynomials(ch)))
    assert serialize_system(system) == serialize_system(golden_system)
    assert serialize_system(system).startswith("chart 0123 basis standard\n")


def test_localized_standard_f4_linear_part():
    ch = chart((0, 1, 2, 3))
    f4 = localized_equations(ch, "standard").equations[3]
    assert f4.linear_coefficient("q0127") == gq(-1)
    assert f4.linear_coefficient("q0136") == gq(1)
    assert f4.linear_coefficient("q0235") == gq(-1)
    assert f4.linear_coefficient("q1234") == gq(1)


def test_tilde_system_vanishes_at_origin():
    ch = chart((0, 1, 2, 3))
    system = localized_equations(ch, "tilde")
    for eq in system.equations:
        assert not eq.constant_term()


def test_localized_vanishes_on_random_cayley_planes(rng):
    ch = chart((0, 1, 2, 3))
    system = localized_equations(ch, "standard")
    checked = 0
    while checked < 20:
        vectors = random_cayley_plane(rng)
        point = plucker_of_plane(*vectors)
        if not point.in_chart(ch):
            continue
        checked += 1
        values = point.chart_values(ch)
        for eq in system.equations:
            assert not eq.evaluate(values)


def test_solution_sets_agree_across_charts(rng):
    first = chart((0, 1, 2, 3))
    second = chart((0, 1, 4, 5))
    sys_first = localized_equations(first, "standard")
    sys_second = localized_equations(second, "standard")
    checked = 0
    while checked < 5:
        vectors = random_cayley_plane(rng)
        point = plucker_of_plane(*vectors)
        if not (point.in_chart(first) and point.in_chart(second)):
            continue
        checked += 1
        for eq in sys_first.equations:
            assert not eq.evaluate(point.chart_values(first))
        for eq in sys_second.equations:
            assert not eq.evaluate(point.chart_values(second))


def test_jacobian_matches_golden_bit_exact():
    ch = chart((0, 1, 2, 3))
    jac = jacobian_at_origin(localized_equations(ch, "tilde"))
    rows = [[c.re_num if (c.den == 1 and c.im_num == 0) else str(c)
             for c in row] for row in jac.entries]
    assert rows == golden.load_jacobian_0123()["rows"]


def test_jacobian_of_zero_system():
    ch = chart((0, 1, 2, 3))
    system = LocalizedSystem(ch, "tilde", tuple(ch.ring.zero() for _ in range(7)))
    assert jacobian_at_origin(system) == Matrix.zero(7, 16)


def test_jacobian_rank_drops_on_0246():
    ch = chart((0, 2, 4, 6))
    jac = jacobian_at_origin(localized_equations(ch, "tilde"))
    assert jac.rank() <= 3


def test_tilde_span_equals_transported_standard_span():
    """The eigenbasis functionals span the same space as the standard ones
    transported through the degree-4 power of the basis change."""
    _, _, xi = build_calibrations()
    e = eigenbasis_change()
    transported = [pullback4(e, comp) for comp in xi.components]
    keys = list(INDEX_SETS_4)
    rows_standard = [tuple(comp.coeffs.get(k, gq(0)) for k in keys)
                     for comp in transported]
    rows_tilde = [tuple(func.get(k, gq(0)) for k in keys)
                  for func in linear_functionals("tilde")]
    assert spans_equal(rows_standard, rows_tilde)


def test_is_cayley_plane_examples():
    assert is_cayley_plane(E[0], E[1], E[2], E[3])
    assert not is_cayley_plane(E[0], E[1], E[2], E[4])
    tilde = [eigen_octonion(k) for k in (0, 2, 5, 7)]
    assert not is_cayley_plane(*tilde)
    tilde_in = [eigen_octonion(k) for k in (0, 1, 2, 3)]
    assert is_cayley_plane(*tilde_in)


def test_is_cayley_plane_rejects_degenerate():
    with pytest.raises(DegeneratePlane):
        is_cayley_plane(E[0], E[1], E[2], E[2])


def test_invariance_matrices_preserve_cayley_planes(rng):
    for _ in range(5):
        vectors = random_cayley_plane(rng)
        assert is_cayley_plane(*vectors)
