"""Pluecker embedding of Gr(4, O) in P(Lambda^4 O): relations, affine
charts, straightening of coordinates, localized defining equations and
their Jacobians.

A chart is indexed by a 4-subset B ("the base"); its sixteen coordinate
functions are the q_I = p_I / p_B with |I & B| = 3.  Any other ratio
straightens to a polynomial in those sixteen by repeated exchange
relations, each step moving one element of I \\ B into B and strictly
increasing |I & B|, so the rewriting terminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from . import golden
from .exactnum import (GaussianRational, Matrix, Polynomial, PolynomialRing,
                       ONE, ZERO)
from .exterior import (INDEX_SETS_4, MultiVector, key_of, key_str, sort_sign,
                       str_key, wedge_of_vectors)
from .octonion import Octonion, cross4


class DegeneratePlane(ValueError):
    """The four vectors do not span a 4-plane."""


def qname(indices) -> str:
    return "q" + key_str(indices)


def pname(indices) -> str:
    return "p" + key_str(indices)


# ---------------------------------------------------------------------------
# Charts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Chart:
    base: tuple[int, ...]
    variables: tuple[tuple[int, ...], ...]
    ring: PolynomialRing

    def var(self, indices) -> Polynomial:
        return self.ring.var(qname(indices))

    def is_variable(self, indices) -> bool:
        return key_of(indices) in self._variable_set()

    def _variable_set(self):
        return set(self.variables)

    def __repr__(self):
        return f"Chart({key_str(self.base)})"


_CHARTS: dict[tuple, Chart] = {}


def chart(base) -> Chart:
    """The affine chart with p_base != 0; its 16 variables in lex order."""
    base = key_of(base)
    if len(base) != 4:
        raise ValueError("chart base must be a 4-subset")
    cached = _CHARTS.get(base)
    if cached is None:
        variables = tuple(I for I in INDEX_SETS_4
                          if len(set(I) & set(base)) == 3)
        assert len(variables) == 16
        ring = PolynomialRing([qname(I) for I in variables])
        cached = Chart(base, variables, ring)
        _CHARTS[base] = cached
    return cached


# ---------------------------------------------------------------------------
# Pluecker points
# ---------------------------------------------------------------------------

class PluckerPoint:
    """Projective point of P(Lambda^4 O) given by its 70 coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords: dict):
        stored = {}
        for idx, c in coords.items():
            idx = key_of(idx)
            c = GaussianRational.coerce(c)
            if c:
                stored[idx] = c
        if not stored:
            raise DegeneratePlane("all Pluecker coordinates vanish")
        object.__setattr__(self, "coords", stored)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("PluckerPoint is immutable")

    def coefficient(self, indices) -> GaussianRational:
        return self.coords.get(key_of(indices), ZERO)

    def normalized(self) -> "PluckerPoint":
        """Scale so the lexicographically first nonzero coordinate is 1."""
        first = min(self.coords)
        inv = self.coords[first].inv()
        return PluckerPoint({k: inv * c for k, c in self.coords.items()})

    def same_projective_point(self, other: "PluckerPoint") -> bool:
        return self.normalized().coords == other.normalized().coords

    def in_chart(self, chart_: Chart) -> bool:
        return bool(self.coefficient(chart_.base))

    def chart_values(self, chart_: Chart) -> dict[str, GaussianRational]:
        """Values of the sixteen chart coordinates at this point."""
        if not self.in_chart(chart_):
            raise ValueError("point does not lie in the chart")
        inv = self.coefficient(chart_.base).inv()
        return {qname(I): inv * self.coefficient(I) for I in chart_.variables}

    def ratio(self, chart_: Chart, target) -> GaussianRational:
        if not self.in_chart(chart_):
            raise ValueError("point does not lie in the chart")
        return self.coefficient(target) / self.coefficient(chart_.base)

    def satisfies_plucker_relations(self) -> bool:
        assignment = {pname(I): self.coords.get(I, ZERO) for I in INDEX_SETS_4}
        return all(not rel.evaluate(assignment) for rel in plucker_relations())


def plucker_of_plane(*vectors) -> PluckerPoint:
    """Pluecker coordinates of the span of four vectors (octonions or raw
    coordinate 8-tuples)."""
    if len(vectors) != 4:
        raise DegeneratePlane("a 4-plane needs four spanning vectors")
    octs = [v if isinstance(v, Octonion) else Octonion(v) for v in vectors]
    wedge = wedge_of_vectors(octs)
    if wedge.is_zero():
        raise DegeneratePlane("vectors are linearly dependent")
    return PluckerPoint(dict(wedge.coeffs))


# ---------------------------------------------------------------------------
# Pluecker relations
# ---------------------------------------------------------------------------

P_RING = PolynomialRing([pname(I) for I in INDEX_SETS_4])


def exchange_relation_terms(target, base, x) -> list[tuple[int, tuple, tuple]]:
    """Terms (sign, K, L) of the exchange relation for p_target p_base with
    designated exchanged element x of target \\ base: the signed sum of
    p_K p_L over all terms is identically zero on the Grassmannian, and the
    first term is the pair (target, base) itself."""
    target = key_of(target)
    base = key_of(base)
    if x not in target or x in base:
        raise ValueError("x must lie in target and not in base")
    head = tuple(i for i in target if i != x)
    js = (x,) + base
    terms = []
    for t in range(5):
        s1, first = sort_sign(head + (js[t],))
        if s1 == 0:
            continue
        s2, second = sort_sign(js[:t] + js[t + 1:])
        if s2 == 0:
            continue
        sign = s1 * s2 * (1 if t % 2 == 0 else -1)
        terms.append((sign, first, second))
    return terms


_RELATIONS: list[Polynomial] | None = None


def plucker_relations() -> list[Polynomial]:
    """The deduplicated generating set of quadratic relations, one for every
    head 3-subset and tail 5-subset of indices."""
    global _RELATIONS
    if _RELATIONS is not None:
        return _RELATIONS
    seen = set()
    out = []
    for head in combinations(range(8), 3):
        for tail in combinations(range(8), 5):
            poly = P_RING.zero()
            for t in range(5):
                s1, first = sort_sign(head + (tail[t],))
                if s1 == 0:
                    continue
                s2, second = sort_sign(tail[:t] + tail[t + 1:])
                if s2 == 0:
                    continue
                sign = s1 * s2 * (1 if t % 2 == 0 else -1)
                poly = poly + P_RING.monomial({pname(first): 1}) \
                    * P_RING.monomial({pname(second): 1}) * sign
            if not poly:
                continue
            lead_coeff = poly.sorted_terms()[0][1]
            if lead_coeff.re_num < 0 or (lead_coeff.re_num == 0 and lead_coeff.im_num < 0):
                poly = -poly
            fingerprint = frozenset(poly.terms.items())
            if fingerprint in seen:
                continue
            seen.add(fingerprint)
            out.append(poly)
    _RELATIONS = out
    return out


# ---------------------------------------------------------------------------
# Straightening
# ---------------------------------------------------------------------------

_STRAIGHTEN_CACHE: dict[tuple, Polynomial] = {}


def straighten(chart_: Chart, target) -> Polynomial:
    """Express q_target on the chart as a polynomial in its 16 variables.

    Rewrites by the exchange relation that moves max(target \\ base) into the
    base; every produced first factor meets the base in one more index, so
    the recursion is finite.  The result is the unique polynomial restriction
    of the coordinate ratio to the chart cell."""
    target = key_of(target)
    if len(target) != 4:
        raise ValueError("target must be a 4-subset")
    key = (chart_.base, target)
    cached = _STRAIGHTEN_CACHE.get(key)
    if cached is not None:
        return cached
    overlap = len(set(target) & set(chart_.base))
    if overlap == 4:
        result = chart_.ring.one()
    elif overlap == 3:
        result = chart_.var(target)
    else:
        x = max(set(target) - set(chart_.base))
        terms = exchange_relation_terms(target, chart_.base, x)
        sign0, first0, second0 = terms[0]
        assert first0 == target and second0 == chart_.base
        result = chart_.ring.zero()
        for sign, first, second in terms[1:]:
            piece = straighten(chart_, first) * chart_.var(second)
            result = result - piece * (sign * sign0)
    _STRAIGHTEN_CACHE[key] = result
    return result


# ---------------------------------------------------------------------------
# Localized systems
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LocalizedSystem:
    chart: Chart
    basis: str                      # "standard" or "tilde"
    equations: tuple[Polynomial, ...]


def linear_functionals(basis: str) -> list[dict[tuple, GaussianRational]]:
    """The seven defining linear functionals on Lambda^4 as coefficient maps.

    The standard-basis functionals are the components of the vector-valued
    calibration form; the eigenbasis ("tilde") ones come from the golden
    table and are revalidated elsewhere against the standard ones."""
    if basis == "standard":
        from .exterior import build_calibrations
        _, _, xi = build_calibrations()
        return [dict(comp.coeffs) for comp in xi.components]
    if basis == "tilde":
        table = golden.load_linear_systems()["tilde"]
        return [{str_key(k): GaussianRational.parse(v) for k, v in row.items()}
                for row in table]
    raise ValueError("basis must be 'standard' or 'tilde'")


def localize_functionals(chart_: Chart, functionals) -> tuple[Polynomial, ...]:
    """Straighten each coefficient map into a chart polynomial."""
    eqs = []
    for functional in functionals:
        poly = chart_.ring.zero()
        for idx, coeff in functional.items():
            poly = poly + straighten(chart_, idx) * coeff
        eqs.append(poly)
    return tuple(eqs)


def localized_equations(chart_: Chart, basis: str = "tilde") -> LocalizedSystem:
    """Substitute straightened coordinates into the seven linear functionals."""
    return LocalizedSystem(chart_, basis,
                           localize_functionals(chart_, linear_functionals(basis)))


def jacobian_at_origin(system: LocalizedSystem) -> Matrix:
    """7x16 matrix of the linear parts, columns in chart-variable order."""
    names = [qname(I) for I in system.chart.variables]
    return Matrix([[eq.linear_coefficient(n) for n in names]
                   for eq in system.equations])


def jacobian_polynomial_matrix(system: LocalizedSystem) -> Matrix:
    """7x16 matrix of all partial derivatives (polynomial entries)."""
    names = [qname(I) for I in system.chart.variables]
    return Matrix([[eq.partial(n) for n in names] for eq in system.equations])


def serialize_system(system: LocalizedSystem) -> str:
    """Canonical text form, one equation per line, graded-lex term order."""
    lines = [f"chart {key_str(system.chart.base)} basis {system.basis}"]
    for k, eq in enumerate(system.equations, start=1):
        lines.append(f"f{k} = {eq}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Cayley planes
# ---------------------------------------------------------------------------

def is_cayley_plane(*vectors) -> bool:
    """True iff the span of the four independent vectors has vanishing
    imaginary four-fold cross product.  Basis independent because the
    cross product is alternating multilinear."""
    if len(vectors) != 4:
        raise DegeneratePlane("a 4-plane needs four spanning vectors")
    octs = [v if isinstance(v, Octonion) else Octonion(v) for v in vectors]
    if wedge_of_vectors(octs).is_zero():
        raise DegeneratePlane("vectors are linearly dependent")
    x, u, v, w = octs
    return cross4(x, u, v, w).im().is_zero()
