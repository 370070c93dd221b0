"""Fixed-point geometry of the Cayley Grassmannian under the torus action:
membership, isolation certificates, smoothness classification, tangent
weights under a regular one-parameter subgroup, cell counts, and the
singular-locus and stabilizer verifications.

Every per-point pipeline (chart, localization, Jacobian, kernel, weights)
is a pure computation; results are cached per point and merged in index
order, so the module is safe to drive in parallel.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import golden
from .exactnum import (GaussianRational, Matrix, ZERO, ONE, all_minors,
                       in_span, span_rank, spans_equal)
from .exterior import INDEX_SETS_4, key_of, key_str, str_key, wedge_of_vectors
from .grassmann import (Chart, LocalizedSystem, chart, exchange_relation_terms,
                        jacobian_at_origin, jacobian_polynomial_matrix,
                        localized_equations, qname)
from .liegroups import (cartan_roots_parabolic, eigen_octonion, g2_lie_algebra,
                        weight_of_plucker)
from .octonion import Octonion
from .exterior import act_on_wedge


class CertificateNotFound(RuntimeError):
    """No exchange relation isolates a same-weight coordinate pair."""


class PointNotSmooth(ValueError):
    """Tangent tables exist only at smooth fixed points."""


class IdentityFailure(RuntimeError):
    """A polynomial that should vanish identically does not."""


DEFAULT_SUBGROUP = (1, 10, 100)

EXPECTED_CODIMENSION = 4        # the variety is 12-dimensional inside the
                                # 16-dimensional chart cell


@dataclass
class FixedPointRecord:
    index_set: str
    weight: tuple[int, int, int]
    in_x: bool
    jacobian_rank: int | None = None
    smooth: bool | None = None
    tangent: list[tuple[tuple, int]] | None = None
    positive_count: int | None = None

    def to_json(self) -> dict:
        data = {
            "index_set": self.index_set,
            "weight": list(self.weight),
            "in_x": self.in_x,
            "jacobian_rank": self.jacobian_rank,
            "smooth": self.smooth,
        }
        if self.tangent is not None:
            data["tangent"] = [
                {"vector": [str(c) for c in vec], "weight": w}
                for vec, w in self.tangent
            ]
            data["positive_count"] = self.positive_count
        return data


@dataclass(frozen=True)
class IsolationCertificate:
    weight: tuple[int, int, int]
    pair: tuple[str, str]
    head: tuple[int, ...]
    tail: tuple[int, ...]
    terms: tuple[tuple[int, str, str], ...]   # signed right-hand side pairs

    def to_json(self) -> dict:
        return {
            "weight": list(self.weight),
            "pair": list(self.pair),
            "head": key_str(self.head),
            "tail": key_str(self.tail),
            "terms": [[s, a, b] for s, a, b in self.terms],
        }


# ---------------------------------------------------------------------------
# Fixed points
# ---------------------------------------------------------------------------

def fixed_point_candidates() -> dict[tuple, list[str]]:
    """All 70 coordinate lines grouped by their torus weight."""
    groups: dict[tuple, list[str]] = {}
    for idx in INDEX_SETS_4:
        groups.setdefault(weight_of_plucker(idx), []).append(key_str(idx))
    for members in groups.values():
        members.sort()
    return groups


def _tilde_functionals() -> list[dict[tuple, GaussianRational]]:
    from .grassmann import linear_functionals
    return linear_functionals("tilde")


def point_in_variety(indices) -> bool:
    """A coordinate line lies in the variety iff its index set appears in
    none of the seven defining functionals."""
    idx = key_of(indices)
    return all(idx not in functional for functional in _tilde_functionals())


def fixed_points_in_x() -> list[str]:
    return sorted(key_str(idx) for idx in INDEX_SETS_4 if point_in_variety(idx))


def isolation_certificates() -> list[IsolationCertificate]:
    """For every same-weight pair of coordinate lines, an exchange relation
    whose left side is that pair and whose right side vanishes identically
    on the weight eigenspace.  Existence for all pairs makes the torus
    fixed-point set exactly the coordinate lines."""
    out = []
    for weight, members in sorted(fixed_point_candidates().items()):
        if len(members) < 2:
            continue
        member_set = set(members)
        for first, second in combinations(members, 2):
            cert = _certificate_for_pair(weight, first, second, member_set)
            if cert is None:
                raise CertificateNotFound(f"pair {first}, {second} at weight {weight}")
            out.append(cert)
    return out


def _certificate_for_pair(weight, first, second, member_set):
    candidates = []
    for target_s, base_s in ((first, second), (second, first)):
        target = str_key(target_s)
        base = str_key(base_s)
        for x in set(target) - set(base):
            head = tuple(i for i in target if i != x)
            candidates.append((head, (x,) + base, target, base, x))
    candidates.sort(key=lambda c: (c[0], c[1]))
    for head, tail, target, base, x in candidates:
        terms = exchange_relation_terms(target, base, x)
        sign0, first0, second0 = terms[0]
        assert (first0, second0) == (target, base)
        rest = []
        ok = True
        for sign, k, l in terms[1:]:
            ks, ls = key_str(k), key_str(l)
            if ks in member_set and ls in member_set:
                ok = False
                break
            rest.append((sign * sign0, ks, ls))
        if ok:
            return IsolationCertificate(weight, (first, second), head, tail,
                                        tuple(rest))
    return None


# ---------------------------------------------------------------------------
# Smoothness and tangent weights
# ---------------------------------------------------------------------------

_RECORDS: dict[str, FixedPointRecord] = {}


def classify_smoothness(point) -> FixedPointRecord:
    """Rank of the localized Jacobian at the chart origin; smooth iff the
    rank equals the codimension."""
    point_s = key_str(key_of(point)) if not isinstance(point, str) else point
    cached = _RECORDS.get(point_s)
    if cached is not None:
        return cached
    idx = str_key(point_s)
    if not point_in_variety(idx):
        raise ValueError(f"{point_s} is not a fixed point of the variety")
    system = localized_equations(chart(idx), "tilde")
    rank = jacobian_at_origin(system).rank()
    record = FixedPointRecord(
        index_set=point_s,
        weight=weight_of_plucker(idx),
        in_x=True,
        jacobian_rank=rank,
        smooth=(rank == EXPECTED_CODIMENSION),
    )
    _RECORDS[point_s] = record
    return record


def tangent_weights(point, subgroup=DEFAULT_SUBGROUP) -> FixedPointRecord:
    """Kernel of the Jacobian split into weight spaces of the one-parameter
    subgroup; the weight of a chart direction is the pairing of the subgroup
    with the weight difference to the chart base."""
    record = classify_smoothness(point)
    if not record.smooth:
        raise PointNotSmooth(record.index_set)
    if record.tangent is not None and subgroup == DEFAULT_SUBGROUP:
        return record
    idx = str_key(record.index_set)
    chart_ = chart(idx)
    jac = jacobian_at_origin(localized_equations(chart_, "tilde"))
    base_weight = weight_of_plucker(idx)

    def tau_weight(var_idx) -> int:
        diff = tuple(a - b for a, b in zip(weight_of_plucker(var_idx), base_weight))
        return sum(s * d for s, d in zip(subgroup, diff))

    by_weight: dict[int, list[int]] = {}
    for col, var_idx in enumerate(chart_.variables):
        by_weight.setdefault(tau_weight(var_idx), []).append(col)

    kernel = jac.kernel_basis()
    tangent: list[tuple[tuple, int]] = []
    for w in sorted(by_weight):
        cols = by_weight[w]
        sub = jac.submatrix(range(jac.rows), cols)
        for small in sub.kernel_basis():
            vec = [ZERO] * 16
            for c, col in zip(small, cols):
                vec[col] = c
            tangent.append((tuple(vec), w))
    if len(tangent) != len(kernel):
        raise IdentityFailure(
            f"kernel of {record.index_set} does not split into weight spaces")
    if not spans_equal([v for v, _ in tangent], kernel):
        raise IdentityFailure(
            f"weight-space pieces do not span the kernel at {record.index_set}")
    if subgroup == DEFAULT_SUBGROUP:
        record.tangent = tangent
        record.positive_count = sum(1 for _, w in tangent if w > 0)
        return record
    extra = FixedPointRecord(record.index_set, record.weight, True,
                             record.jacobian_rank, record.smooth,
                             tangent, sum(1 for _, w in tangent if w > 0))
    return extra


def all_records(subgroup=DEFAULT_SUBGROUP) -> list[FixedPointRecord]:
    """Records for all fixed points in index order, tangent data included
    at the smooth ones."""
    out = []
    for point in fixed_points_in_x():
        record = classify_smoothness(point)
        if record.smooth:
            record = tangent_weights(point, subgroup)
        out.append(record)
    return out


def bb_cell_counts() -> dict[int, int]:
    """Histogram of positive tangent-weight counts over the smooth points."""
    hist: dict[int, int] = {}
    for record in all_records():
        if record.smooth:
            hist[record.positive_count] = hist.get(record.positive_count, 0) + 1
    return dict(sorted(hist.items()))


def subgroup_is_regular(subgroup=DEFAULT_SUBGROUP) -> bool:
    """The subgroup must pair nontrivially with every nonzero weight
    difference among the fixed points, so its fixed set is the torus's."""
    weights = {weight_of_plucker(str_key(p)) for p in fixed_points_in_x()}
    for a in weights:
        for b in weights:
            if a == b:
                continue
            pairing = sum(s * (x - y) for s, x, y in zip(subgroup, a, b))
            if pairing == 0:
                return False
    return True


# ---------------------------------------------------------------------------
# Singular locus
# ---------------------------------------------------------------------------

def sigma_substitution(chart_: Chart, generators) -> dict[str, object]:
    """Substitution map sending each generator's lead variable to zero or to
    its partner variable."""
    mapping: dict[str, object] = {}
    for gen in generators:
        lead = qname(str_key(gen[0]))
        if len(gen) == 1:
            mapping[lead] = 0
        else:
            mapping[lead] = chart_.ring.var(qname(str_key(gen[1])))
    return mapping


def verify_sigma_description(chart_indices=(0, 2, 4, 6)) -> dict:
    """Check that the golden linear generators cut the singular locus out of
    the chart: substituted into the seven localized equations and into every
    4x4 minor of the Jacobian matrix, everything vanishes identically, and
    five free parameters remain."""
    chart_ = chart(chart_indices)
    generators = golden.load_sigma_0246()["generators"]
    if key_str(chart_.base) != golden.load_sigma_0246()["chart"]:
        raise ValueError("generators are recorded for a different chart")
    mapping = sigma_substitution(chart_, generators)

    lead_names = set(mapping)
    if len(lead_names) != len(generators):
        raise IdentityFailure("generator lead variables are not distinct")
    free = [qname(I) for I in chart_.variables if qname(I) not in lead_names]
    for gen in generators:
        if len(gen) == 2 and qname(str_key(gen[1])) not in free:
            raise IdentityFailure("generator partner is not a free variable")

    homogeneous = all(
        len(gen) == 1
        or weight_of_plucker(str_key(gen[0])) == weight_of_plucker(str_key(gen[1]))
        for gen in generators)

    system = localized_equations(chart_, "tilde")
    for k, eq in enumerate(system.equations, start=1):
        reduced = eq.subs(mapping)
        if reduced:
            raise IdentityFailure(f"equation {k} does not vanish: {reduced}")

    jac = jacobian_polynomial_matrix(system)
    substituted = Matrix([[entry.subs(mapping) for entry in row]
                          for row in jac.entries])
    live_rows = [r for r in range(substituted.rows)
                 if any(substituted.entries[r][c] for c in range(substituted.cols))]
    live_cols = [c for c in range(substituted.cols)
                 if any(substituted.entries[r][c] for r in live_rows)]
    trimmed = substituted.submatrix(live_rows, live_cols)
    minor_count = 0
    if trimmed.rows >= 4 and trimmed.cols >= 4:
        for key, value in all_minors(trimmed, 4).items():
            minor_count += 1
            if value:
                raise IdentityFailure(f"minor {key} does not vanish: {value}")

    return {
        "chart": key_str(chart_.base),
        "generators": len(generators),
        "free_parameters": len(free),
        "equations_vanish": True,
        "minors_vanish": True,
        "minors_checked": minor_count,
        "generators_homogeneous": homogeneous,
        "fixed_points_in_sigma": sorted(r.index_set for r in all_records()
                                        if not r.smooth),
    }


# ---------------------------------------------------------------------------
# Stabilizer of the distinguished line
# ---------------------------------------------------------------------------

def stabilizer_check() -> dict:
    """The subalgebra stabilizing the line of the highest-weight wedge
    vector must coincide with the parabolic assembled from the root data."""
    data = cartan_roots_parabolic()
    g2 = g2_lie_algebra()
    target = wedge_of_vectors([eigen_octonion(k) for k in (0, 2, 4, 6)])
    keys = sorted(target.coeffs)
    pivot_key = keys[0]
    pivot = target.coeffs[pivot_key]
    all_keys = list(INDEX_SETS_4)

    def projected_action(x: Matrix) -> tuple:
        image = act_on_wedge(x, target)
        factor = image.coeffs.get(pivot_key, ZERO) / pivot
        out = []
        for k in all_keys:
            out.append(image.coeffs.get(k, ZERO) - factor * target.coeffs.get(k, ZERO))
        return tuple(out)

    columns = [projected_action(x) for x in g2]
    kernel = Matrix(columns).transpose().kernel_basis()
    stab_vectors = []
    for coords in kernel:
        vec = [ZERO] * 64
        for c, x in zip(coords, g2):
            if c:
                flat = [e for row in x.entries for e in row]
                vec = [a + c * b for a, b in zip(vec, flat)]
        stab_vectors.append(tuple(vec))

    h1, h2 = data.cartan
    h_vectors = [tuple(e for row in h.entries for e in row) for h in (h1, h2)]
    pos_vectors = [data.roots[a] for a in data.positive]
    alpha1, alpha2 = data.simple
    neg_alpha1 = data.roots[(-alpha1[0], -alpha1[1])]

    return {
        "stabilizer_dim": len(stab_vectors),
        "p2_dim": len(data.p2_basis),
        "equal_p2": spans_equal(stab_vectors, data.p2_basis),
        "contains_cartan": all(in_span(v, stab_vectors) for v in h_vectors),
        "contains_positive": all(in_span(v, stab_vectors) for v in pos_vectors),
        "excludes_neg_short_simple": not in_span(neg_alpha1, stab_vectors),
        "g2_dim": len(g2),
        "roots": len(data.roots),
        "length_ratio_sq": str(data.length_ratio_sq),
    }
