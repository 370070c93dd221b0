"""Named verification checks over the whole package, used by the CLI.

Every check recomputes a published value from scratch and diffs it against
the golden tables, yielding CheckResult records with machine-readable
expected/actual payloads.  All randomness is seeded, so two runs produce
identical comparison bodies.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations

from . import geometry, golden, grassmann, liegroups
from .exactnum import (GaussianRational, Matrix, gq, spans_equal)
from .exterior import (MultiVector, act_on_form, build_calibrations, eval4,
                       hodge_star7, pullback4, str_key)
from .grassmann import chart, jacobian_at_origin, localized_equations, qname
from .octonion import (E, IsotropicVector, Octonion, bilinear, cross2, cross3,
                       cross4, gram_schmidt, norm)

SAMPLE_SEED = 20240815
ALGEBRA_SAMPLES = 200


@dataclass
class CheckResult:
    check_id: str
    status: str                 # pass / fail / skip
    expected: object
    actual: object
    elapsed_ms: int = 0

    def to_json(self) -> dict:
        return {
            "check_id": self.check_id,
            "status": self.status,
            "expected": self.expected,
            "actual": self.actual,
            "elapsed_ms": self.elapsed_ms,
        }


def _check(check_id: str, expected, actual) -> CheckResult:
    status = "pass" if expected == actual else "fail"
    return CheckResult(check_id, status, expected, actual)


def _timed(fn):
    start = time.monotonic_ns()
    results = fn()
    elapsed = (time.monotonic_ns() - start) // 1_000_000
    share = max(elapsed // max(len(results), 1), 0)
    for r in results:
        r.elapsed_ms = share
    return results


# ---------------------------------------------------------------------------
# algebra suite
# ---------------------------------------------------------------------------

def _random_scalar(rng) -> GaussianRational:
    return gq(rng.randint(-4, 4), rng.randint(-4, 4), rng.randint(1, 4))


def _random_octonion(rng) -> Octonion:
    return Octonion([_random_scalar(rng) for _ in range(8)])


def _random_imaginary(rng) -> Octonion:
    return Octonion([gq(0)] + [_random_scalar(rng) for _ in range(7)])


def check_algebra() -> list[CheckResult]:
    rng = random.Random(SAMPLE_SEED)
    n = ALGEBRA_SAMPLES
    composition = lemma = conj_anti = alternative = alternating = 0
    for _ in range(n):
        u = _random_octonion(rng)
        v = _random_octonion(rng)
        w = _random_octonion(rng)
        if norm(u * v) != norm(u) * norm(v):
            composition += 1
        nu = norm(u)
        if nu * bilinear(v, w) != bilinear(u * v, u * w) \
                or nu * bilinear(v, w) != bilinear(v * u, w * u):
            lemma += 1
        if (u * v).conj() != v.conj() * u.conj():
            conj_anti += 1
        if (u * u) * v != u * (u * v) or (u * v) * v != u * (v * v):
            alternative += 1
        x = _random_octonion(rng)
        if cross4(u, u, v, w) or cross4(u, v, v, w) or cross4(u, v, w, w) \
                or cross4(x, v, x, w):
            alternating += 1

    norm4 = 0
    produced = 0
    while produced < n:
        sample = [_random_octonion(rng) for _ in range(4)]
        try:
            ortho = gram_schmidt(sample)
        except IsotropicVector:
            continue
        produced += 1
        lhs = norm(cross4(*ortho))
        rhs = norm(ortho[0]) * norm(ortho[1]) * norm(ortho[2]) * norm(ortho[3])
        if lhs != rhs:
            norm4 += 1

    def record(name, violations):
        return _check(f"algebra.{name}",
                      {"samples": n, "violations": 0},
                      {"samples": n, "violations": violations})

    return [
        record("composition_law", composition),
        record("orthogonality_lemma", lemma),
        record("conj_anti_involution", conj_anti),
        record("alternativity", alternative),
        record("cross4_alternating", alternating),
        record("cross4_norm", norm4),
    ]


# ---------------------------------------------------------------------------
# forms suite
# ---------------------------------------------------------------------------

def check_forms() -> list[CheckResult]:
    phi, big, xi = build_calibrations()
    tables = golden.load_forms()
    results = [
        _check("forms.phi_table", tables["phi"], phi.to_json()),
        _check("forms.Phi_table", tables["Phi"], big.to_json()),
        _check("forms.xi_table", tables["xi"], xi.to_json()),
    ]
    e0 = MultiVector.basis((0,))
    results.append(_check("forms.hodge_identity", "equal",
                          "equal" if e0.wedge(phi) + hodge_star7(phi) == big
                          else "different"))
    unit = {str(gq(1)), str(gq(-1))}
    counts = {
        "phi": len(phi.coeffs),
        "Phi": len(big.coeffs),
        "xi": xi.term_count(),
        "unit_coefficients": all(
            str(c) in unit
            for form in [phi, big, *xi.components] for c in form.coeffs.values()),
    }
    results.append(_check("forms.term_counts",
                          {"phi": 7, "Phi": 14, "xi": 56, "unit_coefficients": True},
                          counts))

    rng = random.Random(SAMPLE_SEED + 1)
    mismatch = 0
    for _ in range(50):
        vs = [_random_octonion(rng) for _ in range(4)]
        quad = cross4(*vs)
        if eval4(big, *vs) != quad.coords[0]:
            mismatch += 1
        if xi.evaluate(*vs) != quad.im():
            mismatch += 1
    results.append(_check("forms.cross4_decomposition",
                          {"samples": 50, "violations": 0},
                          {"samples": 50, "violations": mismatch}))
    return results


# ---------------------------------------------------------------------------
# torus suite
# ---------------------------------------------------------------------------

def check_torus() -> list[CheckResult]:
    results = [
        _check("torus.so2_block", True, liegroups.so2_identities_hold()),
        _check("torus.pullback_invariance", True,
               liegroups.verify_spin7_invariance()),
        _check("torus.perturbed_control", False,
               liegroups.verify_spin7_invariance(liegroups.perturbed_torus_matrix())),
    ]

    _, big, _ = build_calibrations()
    tilde = liegroups.form_in_eigenbasis(big)
    support_ok = all(liegroups.weight_of_plucker(idx) == (0, 0, 0)
                     for idx in tilde.coeffs)
    results.append(_check("torus.weight_support", True, support_ok))

    tables = golden.load_eigen_tables()
    mine_basis = [list(liegroups.weight_of_basis(k)) for k in range(8)]
    results.append(_check("torus.basis_weights", tables["basis_weights"], mine_basis))

    mine_classes = sorted(
        ({"weight": list(w), "members": members}
         for w, members in geometry.fixed_point_candidates().items()),
        key=lambda c: tuple(c["weight"]))
    results.append(_check("torus.wedge_weights", tables["wedge_classes"], mine_classes))

    h = liegroups.torus_matrix()
    results.append(_check("torus.parameter_negation", True,
                          liegroups.negate_torus_parameters(h) == h))
    results.append(_check("torus.center", True,
                          liegroups.torus_matrix_at(-1, -1, -1) == Matrix.identity(8)))
    return results


# ---------------------------------------------------------------------------
# sl2 suite
# ---------------------------------------------------------------------------

def check_sl2() -> list[CheckResult]:
    _, big, _ = build_calibrations()
    results = []
    names = {1: "e1", 2: "e2", 3: "e3"}
    for which in (1, 2, 3):
        for generator in (1, 2, 3):
            x = liegroups.sl2_infinitesimal(which, generator)
            image = act_on_form(x, big)
            results.append(_check(f"sl2.inf.{which}.{names[generator]}",
                                  "zero", "zero" if image.is_zero() else "nonzero"))

    rng = random.Random(SAMPLE_SEED + 2)
    bad = 0
    trials = 0
    for _ in range(10):
        u = _random_scalar(rng)
        for which in (1, 2, 3):
            trials += 1
            m = liegroups.sl2_unipotent(which, u)
            if pullback4(m, big) != big:
                bad += 1
            if m.transpose() @ m != Matrix.identity(8):
                bad += 1
    results.append(_check("sl2.unipotent_invariance",
                          {"trials": trials, "violations": 0},
                          {"trials": trials, "violations": bad}))

    minus_one = Octonion([gq(-1)] + [gq(0)] * 7)
    combined = (liegroups.sl2_action_matrix(1, minus_one)
                @ liegroups.sl2_action_matrix(2, minus_one)
                @ liegroups.sl2_action_matrix(3, minus_one))
    results.append(_check("sl2.center_kernel", True,
                          combined == Matrix.identity(8)))

    # negative control: a generic antisymmetric matrix moves the form
    rows = [[gq(0)] * 8 for _ in range(8)]
    control = random.Random(SAMPLE_SEED + 3)
    for a in range(8):
        for b in range(a + 1, 8):
            c = _random_scalar(control)
            rows[a][b] = c
            rows[b][a] = -c
    results.append(_check("sl2.generic_control", "nonzero",
                          "nonzero" if act_on_form(Matrix(rows), big) else "zero"))
    return results


# ---------------------------------------------------------------------------
# fixed points suite
# ---------------------------------------------------------------------------

def check_fixed_points() -> list[CheckResult]:
    gold = golden.load_fixed_points()
    candidates = geometry.fixed_point_candidates()
    results = [
        _check("fixed.total", 70, sum(len(v) for v in candidates.values())),
        _check("fixed.in_x", gold["in_x"], geometry.fixed_points_in_x()),
        _check("fixed.weight_zero_excluded", gold["weight_zero_excluded"],
               sorted(set(candidates[(0, 0, 0)])
                      - set(geometry.fixed_points_in_x()))),
    ]
    pair_total = sum(
        len(members) * (len(members) - 1) // 2
        for members in candidates.values() if len(members) > 1)
    certificates = geometry.isolation_certificates()
    all_isolating = all(
        all(k not in candidates[c.weight] or l not in candidates[c.weight]
            for _, k, l in c.terms)
        for c in certificates)
    results.append(_check("fixed.certificates",
                          {"pairs": pair_total, "isolating": True},
                          {"pairs": len(certificates), "isolating": all_isolating}))
    return results


# ---------------------------------------------------------------------------
# smoothness suite
# ---------------------------------------------------------------------------

def _smoothness_record(point: str, singular: set[str]) -> CheckResult:
    record = geometry.classify_smoothness(point)
    if point in singular:
        expected = "singular"
        actual = "singular" if not record.smooth else f"rank {record.jacobian_rank}"
    else:
        expected = 4
        actual = record.jacobian_rank
    return _check(f"rank.{point}", expected, actual)


def check_smoothness(point: str | None = None, parallel_map=map) -> list[CheckResult]:
    gold = golden.load_fixed_points()
    singular = set(gold["singular"])
    if point is not None:
        return [_smoothness_record(point, singular)]

    results = list(parallel_map(
        lambda p: _smoothness_record(p, singular), gold["in_x"]))

    jac = jacobian_at_origin(localized_equations(chart((0, 1, 2, 3)), "tilde"))
    mine = [[c.re_num if (c.den == 1 and c.im_num == 0) else str(c)
             for c in row] for row in jac.entries]
    results.append(_check("smooth.jacobian_0123",
                          golden.load_jacobian_0123()["rows"], mine))

    records = [geometry.classify_smoothness(p) for p in gold["in_x"]]
    results.append(_check(
        "smooth.counts",
        {"smooth": 38, "singular": gold["singular"]},
        {"smooth": sum(1 for r in records if r.smooth),
         "singular": sorted(r.index_set for r in records if not r.smooth)}))
    return results


# ---------------------------------------------------------------------------
# weights suite
# ---------------------------------------------------------------------------

def _weights_record(point: str, table: dict | None,
                    subgroup=geometry.DEFAULT_SUBGROUP) -> CheckResult:
    record = geometry.tangent_weights(point, subgroup)
    mine_weights = sorted(w for _, w in record.tangent)
    actual = {"weights": mine_weights, "positive": record.positive_count}
    if table is None:
        # no golden table for this subgroup; assert the structural contract
        return _check(f"weights.{point}", {"vectors": 12},
                      {"vectors": len(record.tangent)})

    expected = {"weights": sorted(w for w, _ in table["generators"]),
                "positive": table["positive"],
                "spans": "match"}
    chart_ = chart(str_key(point))
    var_pos = {qname(I): k for k, I in enumerate(chart_.variables)}
    by_weight_mine: dict[int, list[tuple]] = {}
    for vec, w in record.tangent:
        by_weight_mine.setdefault(w, []).append(vec)
    by_weight_want: dict[int, list[tuple]] = {}
    for w, combo in table["generators"]:
        vec = [gq(0)] * 16
        for var, coeff in combo.items():
            vec[var_pos["q" + var]] = GaussianRational.parse(coeff)
        by_weight_want.setdefault(w, []).append(tuple(vec))
    spans = "match"
    if set(by_weight_mine) != set(by_weight_want):
        spans = "weight sets differ"
    else:
        for w, want in by_weight_want.items():
            if not spans_equal(by_weight_mine[w], want):
                spans = f"span mismatch at weight {w}"
                break
    actual["spans"] = spans
    return _check(f"weights.{point}", expected, actual)


def check_weights(point: str | None = None,
                  subgroup=geometry.DEFAULT_SUBGROUP,
                  parallel_map=map) -> list[CheckResult]:
    tables = golden.load_tangent_tables()
    default = subgroup == geometry.DEFAULT_SUBGROUP
    if point is not None:
        table = tables.get(point) if default else None
        return [_weights_record(point, table, subgroup)]
    results = list(parallel_map(
        lambda p: _weights_record(p, tables[p] if default else None, subgroup),
        sorted(tables)))
    if default:
        hist = {str(k): v for k, v in geometry.bb_cell_counts().items()}
        golden_hist: dict[str, int] = {}
        for table in tables.values():
            key = str(table["positive"])
            golden_hist[key] = golden_hist.get(key, 0) + 1
        results.append(_check("weights.histogram", golden_hist, hist))
    return results


# ---------------------------------------------------------------------------
# betti suite
# ---------------------------------------------------------------------------

def check_betti() -> list[CheckResult]:
    hist = {str(k): v for k, v in geometry.bb_cell_counts().items()}
    return [
        _check("betti.histogram",
               {"1": 1, "2": 2, "3": 3, "4": 5, "5": 4, "6": 8,
                "7": 4, "8": 5, "9": 3, "10": 2, "11": 1},
               hist),
        _check("betti.smooth_total", 38, sum(geometry.bb_cell_counts().values())),
        _check("betti.subgroup_regular", True, geometry.subgroup_is_regular()),
        _check("betti.sigma_point_count", 6,
               len([r for r in geometry.all_records() if not r.smooth])),
    ]


# ---------------------------------------------------------------------------
# singular locus suite
# ---------------------------------------------------------------------------

def check_singular_locus(chart_indices=(0, 2, 4, 6)) -> list[CheckResult]:
    report = geometry.verify_sigma_description(chart_indices)
    return [
        _check("sigma.equations_vanish", True, report["equations_vanish"]),
        _check("sigma.minors_vanish", True, report["minors_vanish"]),
        _check("sigma.free_parameters", 5, report["free_parameters"]),
        _check("sigma.generators_homogeneous", True,
               report["generators_homogeneous"]),
        _check("sigma.fixed_points", golden.load_fixed_points()["singular"],
               report["fixed_points_in_sigma"]),
    ]


# ---------------------------------------------------------------------------
# stabilizer suite
# ---------------------------------------------------------------------------

def check_g2_stabilizer() -> list[CheckResult]:
    report = geometry.stabilizer_check()
    return [
        _check("g2.dim", 14, report["g2_dim"]),
        _check("g2.roots", 12, report["roots"]),
        _check("g2.length_ratio_sq", "3", report["length_ratio_sq"]),
        _check("g2.p2_dim", 9, report["p2_dim"]),
        _check("g2.stabilizer_dim", 9, report["stabilizer_dim"]),
        _check("g2.stabilizer_equals_p2", True, report["equal_p2"]),
        _check("g2.contains_cartan_and_positive", True,
               report["contains_cartan"] and report["contains_positive"]),
        _check("g2.excludes_negative_short_simple", True,
               report["excludes_neg_short_simple"]),
    ]


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

VERIFY_SUITES = {
    "algebra": check_algebra,
    "forms": check_forms,
    "torus": check_torus,
    "sl2": check_sl2,
}


def run_all(parallel_map=map) -> list[CheckResult]:
    results: list[CheckResult] = []
    for suite in ("algebra", "forms", "torus", "sl2"):
        results.extend(_timed(VERIFY_SUITES[suite]))
    results.extend(_timed(check_fixed_points))
    results.extend(_timed(lambda: check_smoothness(parallel_map=parallel_map)))
    results.extend(_timed(lambda: check_weights(parallel_map=parallel_map)))
    results.extend(_timed(check_betti))
    results.extend(_timed(check_singular_locus))
    results.extend(_timed(check_g2_stabilizer))
    return results
