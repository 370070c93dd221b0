"""The maximal torus h(lambda, mu, gamma), the three SL(2, C) actions, and
the Lie algebra of the form-preserving subgroup of SO(7, C) with its Cartan
subalgebra, roots and parabolic.

Symbolic torus entries are Laurent polynomials in three variables over
Q(i); the factor 1/2 in the rotation blocks stays exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .exactnum import (GaussianRational, Matrix, Polynomial, PolynomialRing,
                       ZERO, ONE, I as IMAG, HALF, gq, spans_equal, in_span)
from .exterior import (MultiVector, act_on_form, act_on_wedge,
                       build_calibrations, key_of, pullback4,
                       wedge_of_vectors)
from .octonion import MULT_TABLE, Octonion, E


class NonRegularCartan(RuntimeError):
    """The Cartan candidate did not act with 12 distinct nonzero roots."""


def _rational_key(value: GaussianRational):
    """Ordering key for real Gaussian rationals."""
    if not value.is_real():
        raise ValueError("ordering needs a real value")
    return Fraction(value.re_num, value.den)


LAURENT_RING = PolynomialRing(("lam", "mu", "gam"))


def _laurent_var(name: str, power: int) -> Polynomial:
    return LAURENT_RING.monomial({name: power})


def rotation_block(name: str, invert: bool = False) -> list[list[Polynomial]]:
    """The 2x2 block [[P, -iM], [iM, P]] with P = (t + 1/t)/2 and
    M = (t - 1/t)/2 for t the (possibly inverted) variable."""
    power = -1 if invert else 1
    t = _laurent_var(name, power)
    tinv = _laurent_var(name, -power)
    p = (t + tinv) * HALF
    m = (t - tinv) * HALF
    return [[p, m * gq(0, -1)], [m * IMAG, p]]


def _block_diag(blocks) -> Matrix:
    size = sum(len(b) for b in blocks)
    zero = LAURENT_RING.zero()
    rows = [[zero] * size for _ in range(size)]
    offset = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, entry in enumerate(row):
                rows[offset + i][offset + j] = entry
        offset += len(b)
    return Matrix(rows)


def _identity_block(n: int) -> list[list[Polynomial]]:
    one = LAURENT_RING.one()
    zero = LAURENT_RING.zero()
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def torus_factor(which: str) -> Matrix:
    """The three commuting 8x8 factors of the torus."""
    if which == "A":
        return _block_diag([rotation_block("lam")] * 4)
    if which == "B":
        return _block_diag([rotation_block("mu"), rotation_block("mu", invert=True),
                            _identity_block(4)])
    if which == "C":
        return _block_diag([_identity_block(4), rotation_block("gam"),
                            rotation_block("gam", invert=True)])
    raise ValueError(which)


_TORUS: Matrix | None = None


def torus_matrix() -> Matrix:
    """h(lambda, mu, gamma) as a symbolic 8x8 Laurent matrix."""
    global _TORUS
    if _TORUS is None:
        _TORUS = torus_factor("A") @ torus_factor("B") @ torus_factor("C")
    return _TORUS


def torus_matrix_at(lam, mu, gam) -> Matrix:
    """Numeric torus element for nonzero scalar parameters."""
    values = {"lam": GaussianRational.coerce(lam),
              "mu": GaussianRational.coerce(mu),
              "gam": GaussianRational.coerce(gam)}
    return Matrix([[entry.evaluate(values) for entry in row]
                   for row in torus_matrix().entries])


ONE_PARAMETER_RING = PolynomialRing(("t",))


def one_parameter_matrix(a: int, b: int, c: int) -> Matrix:
    """The one-parameter subgroup with the three parameters run at integer
    speeds (a, b, c); exponent triples collapse linearly, so (0, 0, 0) is
    the identity."""
    rows = []
    for row in torus_matrix().entries:
        out = []
        for entry in row:
            terms: dict[tuple, GaussianRational] = {}
            for exps, coeff in entry.terms.items():
                key = (exps[0] * a + exps[1] * b + exps[2] * c,)
                acc = terms.get(key)
                total = coeff if acc is None else acc + coeff
                if total:
                    terms[key] = total
                elif acc is not None:
                    del terms[key]
            out.append(Polynomial(ONE_PARAMETER_RING, terms))
        rows.append(out)
    return Matrix(rows)


def negate_torus_parameters(m: Matrix) -> Matrix:
    """Entrywise substitution of minus each torus parameter: a term picks up
    the parity of its total exponent."""
    rows = []
    for row in m.entries:
        out = []
        for entry in row:
            terms = {e: (c if sum(e) % 2 == 0 else -c)
                     for e, c in entry.terms.items()}
            out.append(Polynomial(entry.ring, terms))
        rows.append(out)
    return Matrix(rows)


def eigenbasis_change() -> Matrix:
    """Columns are the torus eigenvectors in standard coordinates:
    pairs e_{2k} + i e_{2k+1}, e_{2k} - i e_{2k+1}."""
    cols = []
    for k in range(4):
        for sign in (IMAG, -IMAG):
            col = [ZERO] * 8
            col[2 * k] = ONE
            col[2 * k + 1] = sign
            cols.append(col)
    return Matrix(cols).transpose()


_DIAG: Matrix | None = None


def diagonalized_torus() -> Matrix:
    global _DIAG
    if _DIAG is None:
        e = eigenbasis_change()
        _DIAG = e.inverse() @ torus_matrix() @ e
    return _DIAG


_BASIS_WEIGHTS: tuple | None = None


def weight_of_basis(k: int) -> tuple[int, int, int]:
    """Exponent triple (a, b, c) of the k-th eigenvector's character."""
    global _BASIS_WEIGHTS
    if _BASIS_WEIGHTS is None:
        d = diagonalized_torus()
        weights = []
        for i in range(8):
            for j in range(8):
                if i != j and d.entries[i][j]:
                    raise NonRegularCartan("torus failed to diagonalize")
            exps, coeff = d.entries[i][i].monomial_exponents()
            if coeff != ONE:
                raise NonRegularCartan("diagonal entry is not a monomial")
            weights.append(exps)
        _BASIS_WEIGHTS = tuple(weights)
    return _BASIS_WEIGHTS[k]


def weight_of_plucker(indices) -> tuple[int, int, int]:
    """Weight of a degree-4 wedge of eigenvectors: the sum of the four."""
    total = (0, 0, 0)
    for k in key_of(indices):
        total = tuple(a + b for a, b in zip(total, weight_of_basis(k)))
    return total


def eigen_octonion(k: int) -> Octonion:
    """The k-th torus eigenvector as an octonion."""
    return Octonion(eigenbasis_change().column(k))


# ---------------------------------------------------------------------------
# Torus invariance of the degree-4 calibration form
# ---------------------------------------------------------------------------

def so2_identities_hold() -> bool:
    """Transpose of the rotation block is the inverse block, symbolically."""
    block = rotation_block("lam")
    inverse = rotation_block("lam", invert=True)
    transpose = [[block[j][i] for j in range(2)] for i in range(2)]
    if transpose != inverse:
        return False
    prod = Matrix(block) @ Matrix(transpose)
    ident = Matrix(_identity_block(2))
    return prod == ident


def form_in_eigenbasis(form: MultiVector) -> MultiVector:
    """Coefficients of a 4-form against the eigenbasis wedge monomials."""
    return pullback4(eigenbasis_change(), form)


def verify_spin7_invariance(matrix: Matrix | None = None) -> bool:
    """Check that the torus preserves the degree-4 calibration form, two
    independent ways: symbolic pullback equality, and zero-weight support
    of the form in the eigenbasis.  A replacement matrix can be injected
    for negative controls; the support criterion then only applies when
    the default torus is used."""
    _, big, _ = build_calibrations()
    if not so2_identities_hold():
        return False
    m = torus_matrix() if matrix is None else matrix
    direct = pullback4(m, big) == big
    if matrix is not None:
        return direct
    tilde = form_in_eigenbasis(big)
    support = all(weight_of_plucker(idx) == (0, 0, 0) for idx in tilde.coeffs)
    return direct and support


def perturbed_torus_matrix() -> Matrix:
    """Negative control: the first factor's last block runs at doubled
    speed, which breaks invariance."""
    bad_a = _block_diag([rotation_block("lam")] * 3 + [[
        [(_laurent_var("lam", 2) + _laurent_var("lam", -2)) * HALF,
         (_laurent_var("lam", 2) - _laurent_var("lam", -2)) * HALF * gq(0, -1)],
        [(_laurent_var("lam", 2) - _laurent_var("lam", -2)) * HALF * IMAG,
         (_laurent_var("lam", 2) + _laurent_var("lam", -2)) * HALF],
    ]])
    return bad_a @ torus_factor("B") @ torus_factor("C")


# ---------------------------------------------------------------------------
# The three SL(2, C) actions
# ---------------------------------------------------------------------------

def quaternion_left_mult(g: Octonion) -> Matrix:
    """4x4 matrix of x -> g x on the quaternion span e0..e3."""
    cols = []
    for b in range(4):
        out = [ZERO] * 4
        for a in range(4):
            ga = g.coords[a]
            if not ga:
                continue
            sign, idx = MULT_TABLE[a][b]
            out[idx] = out[idx] + (ga if sign > 0 else -ga)
        cols.append(out)
    return Matrix(cols).transpose()


def quaternion_right_mult(g: Octonion) -> Matrix:
    """4x4 matrix of x -> x g on the quaternion span e0..e3."""
    cols = []
    for a in range(4):
        out = [ZERO] * 4
        for b in range(4):
            gb = g.coords[b]
            if not gb:
                continue
            sign, idx = MULT_TABLE[a][b]
            out[idx] = out[idx] + (gb if sign > 0 else -gb)
        cols.append(out)
    return Matrix(cols).transpose()


def _embed_blocks(top: Matrix, bottom: Matrix) -> Matrix:
    rows = []
    for i in range(4):
        rows.append(list(top.entries[i]) + [ZERO] * 4)
    for i in range(4):
        rows.append([ZERO] * 4 + list(bottom.entries[i]))
    return Matrix(rows)


def sl2_action_matrix(which: int, g: Octonion) -> Matrix:
    """Matrix of a unit quaternion acting on O = H + lH: the first action
    is x -> x g^(-1) on H, the second the same on lH, the third is left
    multiplication by g on both halves."""
    if any(g.coords[k] for k in range(4, 8)):
        raise ValueError("the acting element must be a quaternion")
    i4 = Matrix.identity(4)
    if which == 1:
        return _embed_blocks(quaternion_right_mult(g.conj()), i4)
    if which == 2:
        return _embed_blocks(i4, quaternion_right_mult(g.conj()))
    if which == 3:
        left = quaternion_left_mult(g)
        return _embed_blocks(left, left)
    raise ValueError("which must be 1, 2 or 3")


def sl2_unipotent(which: int, u) -> Matrix:
    """The 8x8 matrices of the unipotent one-parameter subgroups.

    The first two are the exponential of right multiplication by
    u/2 (e2 - i e3) on one quaternion half; the third doubles a block
    that fixes 1.  All preserve the bilinear form and the degree-4 form,
    and each is a one-parameter group in u."""
    u = GaussianRational.coerce(u)
    h = u * HALF
    ih = IMAG * h
    a_block = Matrix([
        [ONE, ZERO, -h, ih],
        [ZERO, ONE, -ih, -h],
        [h, ih, ONE, ZERO],
        [-ih, h, ZERO, ONE],
    ])
    usq = u * u * HALF
    iusq = IMAG * u * u * HALF
    b_block = Matrix([
        [ONE, ZERO, ZERO, ZERO],
        [ZERO, ONE, IMAG * u, u],
        [ZERO, -IMAG * u, ONE + usq, -iusq],
        [ZERO, -u, -iusq, ONE - usq],
    ])
    i4 = Matrix.identity(4)
    if which == 1:
        return _embed_blocks(a_block, i4)
    if which == 2:
        return _embed_blocks(i4, a_block)
    if which == 3:
        return _embed_blocks(b_block, b_block)
    raise ValueError("which must be 1, 2 or 3")


def sl2_infinitesimal(which: int, generator: int) -> Matrix:
    """Lie-algebra action of the imaginary quaternion units e1, e2, e3:
    differentiating g -> action of exp(t g) at t = 0."""
    if generator not in (1, 2, 3):
        raise ValueError("generator must be 1, 2 or 3")
    g = E[generator]
    zero4 = Matrix.zero(4, 4)
    if which == 1:
        return _embed_blocks(quaternion_right_mult(g).scale(-ONE), zero4)
    if which == 2:
        return _embed_blocks(zero4, quaternion_right_mult(g).scale(-ONE))
    if which == 3:
        left = quaternion_left_mult(g)
        return _embed_blocks(left, left)
    raise ValueError("which must be 1, 2 or 3")


def sl2_lie_invariance() -> tuple[bool, list]:
    """All nine infinitesimal actions must annihilate the degree-4 form.

    Returns (ok, failures) where failures lists (action, generator) pairs."""
    _, big, _ = build_calibrations()
    failures = []
    for which in (1, 2, 3):
        for generator in (1, 2, 3):
            if not act_on_form(sl2_infinitesimal(which, generator), big).is_zero():
                failures.append((which, generator))
    return not failures, failures


# ---------------------------------------------------------------------------
# The 14-dimensional stabilizer algebra of the degree-3 form
# ---------------------------------------------------------------------------

def _mat_to_vec(m: Matrix) -> tuple:
    return tuple(e for row in m.entries for e in row)


def so7_basis() -> list[Matrix]:
    """Antisymmetric matrices on the imaginary 7-space, embedded as 8x8
    with zero first row and column."""
    out = []
    for a in range(1, 8):
        for b in range(a + 1, 8):
            rows = [[ZERO] * 8 for _ in range(8)]
            rows[a][b] = ONE
            rows[b][a] = -ONE
            out.append(Matrix(rows))
    return out


_G2: list[Matrix] | None = None


def g2_lie_algebra() -> list[Matrix]:
    """Basis of the subalgebra of so(7) annihilating the degree-3 form,
    obtained as the kernel of an explicit linear map into Lambda^3."""
    global _G2
    if _G2 is not None:
        return _G2
    phi, _, _ = build_calibrations()
    basis = so7_basis()
    keys = list(combinations(range(1, 8), 3))
    columns = []
    for x in basis:
        image = act_on_form(x, phi)
        columns.append([image.coeffs.get(k, ZERO) for k in keys])
    matrix = Matrix(columns).transpose()      # 35 x 21
    kernel = matrix.kernel_basis()
    out = []
    for coeffs in kernel:
        acc = Matrix.zero(8, 8)
        for c, x in zip(coeffs, basis):
            if c:
                acc = acc + x.scale(c)
        out.append(acc)
    _G2 = out
    return out


def infinitesimal_torus(which: str) -> Matrix:
    """Derivative at the identity of the three torus factors."""
    dl = Matrix([[ZERO, -IMAG], [IMAG, ZERO]])
    zero2 = Matrix.zero(2, 2)
    blocks = {
        "lam": [dl, dl, dl, dl],
        "mu": [dl, dl.scale(-ONE), zero2, zero2],
        "gam": [zero2, zero2, dl, dl.scale(-ONE)],
    }[which]
    rows = [[ZERO] * 8 for _ in range(8)]
    for k, b in enumerate(blocks):
        for i in range(2):
            for j in range(2):
                rows[2 * k + i][2 * k + j] = b.entries[i][j]
    return Matrix(rows)


def trace_form(x: Matrix, y: Matrix) -> GaussianRational:
    total = ZERO
    prod = x @ y
    for k in range(prod.rows):
        total = total + prod.entries[k][k]
    return total


@dataclass(frozen=True)
class RootData:
    cartan: tuple[Matrix, Matrix]
    roots: dict                       # (x, y) -> root vector (64-tuple)
    positive: tuple[tuple[int, int], ...]
    simple: tuple[tuple[int, int], tuple[int, int]]
    length_ratio_sq: GaussianRational
    p2_basis: list[tuple]
    highest_weight: tuple[int, int]


def _solve_in_basis(basis_vectors, target) -> tuple:
    """Coordinates of target in the span of basis_vectors (must exist)."""
    cols = Matrix(basis_vectors).transpose()
    aug = Matrix([list(row) + [t] for row, t in zip(cols.entries, target)])
    red, pivots = aug.rref()
    n = len(basis_vectors)
    if n in pivots:
        raise ValueError("target not in span")
    coords = [ZERO] * n
    for r, pc in enumerate(pivots):
        coords[pc] = red.entries[r][n]
    return tuple(coords)


_ROOT_DATA: RootData | None = None


def cartan_roots_parabolic() -> RootData:
    """Cartan subalgebra, root decomposition and the parabolic subalgebra
    singled out by the line of the highest-weight wedge vector.

    The Cartan is the intersection of the algebra with the torus directions;
    positivity is chosen among the chambers making the distinguished wedge
    weight dominant (it sits on one wall, so exactly two chambers qualify
    and they assemble the same parabolic)."""
    global _ROOT_DATA
    if _ROOT_DATA is not None:
        return _ROOT_DATA

    g2 = g2_lie_algebra()
    g2_vectors = [_mat_to_vec(x) for x in g2]
    phi, _, _ = build_calibrations()

    h1 = infinitesimal_torus("lam") - infinitesimal_torus("mu")
    h2 = infinitesimal_torus("gam")
    for h in (h1, h2):
        if act_on_form(h, phi):
            raise NonRegularCartan("torus direction does not preserve the 3-form")
        if not in_span(_mat_to_vec(h), g2_vectors):
            raise NonRegularCartan("torus direction missing from the algebra")

    def ad_matrix(h: Matrix) -> Matrix:
        cols = []
        for x in g2:
            bracket = h @ x - x @ h
            cols.append(_solve_in_basis(g2_vectors, _mat_to_vec(bracket)))
        return Matrix(cols).transpose()      # 14 x 14

    ad1 = ad_matrix(h1)
    ad2 = ad_matrix(h2)
    ident = Matrix.identity(14)

    roots: dict[tuple[int, int], tuple] = {}
    cartan_dim = 0
    total = 0
    for x in range(-4, 5):
        for y in range(-4, 5):
            shifted1 = ad1 - ident.scale(gq(x))
            shifted2 = ad2 - ident.scale(gq(y))
            stacked = Matrix(list(shifted1.entries) + list(shifted2.entries))
            kernel = stacked.kernel_basis()
            if not kernel:
                continue
            total += len(kernel)
            if (x, y) == (0, 0):
                cartan_dim = len(kernel)
                continue
            if len(kernel) != 1:
                raise NonRegularCartan(f"root {(x, y)} has multiplicity {len(kernel)}")
            coords = kernel[0]
            vec = [ZERO] * 64
            for c, gv in zip(coords, g2_vectors):
                if c:
                    vec = [a + c * b for a, b in zip(vec, gv)]
            roots[(x, y)] = tuple(vec)
    if cartan_dim != 2 or len(roots) != 12 or total != 14:
        raise NonRegularCartan(
            f"bad decomposition: cartan {cartan_dim}, roots {len(roots)}, total {total}")

    # inner products on the dual via the trace form
    gram = Matrix([[trace_form(h1, h1), trace_form(h1, h2)],
                   [trace_form(h2, h1), trace_form(h2, h2)]])
    gram_inv = gram.inverse()

    def pairing(alpha, beta) -> GaussianRational:
        row = gram_inv.apply_to((gq(beta[0]), gq(beta[1])))
        return gq(alpha[0]) * row[0] + gq(alpha[1]) * row[1]

    norms = {alpha: pairing(alpha, alpha) for alpha in roots}
    short = min(norms.values(), key=_rational_key)
    long = max(norms.values(), key=_rational_key)
    length_ratio_sq = long / short

    # highest weight of the distinguished wedge line
    target = wedge_of_vectors([eigen_octonion(k) for k in (0, 2, 4, 6)])
    nu = []
    for h in (h1, h2):
        image = act_on_wedge(h, target)
        ratios = {k: image.coeffs.get(k, ZERO) / c for k, c in target.coeffs.items()}
        values = set(ratios.values())
        if len(values) != 1:
            raise NonRegularCartan("wedge line is not an eigenvector")
        value = values.pop()
        if not value.is_real() or value.den != 1:
            raise NonRegularCartan("wedge weight is not an integer")
        nu.append(value.re_num)
    nu = tuple(nu)

    # enumerate chambers via generic functionals
    chambers = set()
    for p in range(-7, 8):
        for q in range(-7, 8):
            if any(p * x + q * y == 0 for (x, y) in roots):
                continue
            chambers.add(frozenset(a for a in roots if p * a[0] + q * a[1] > 0))
    if len(chambers) != 12:
        raise NonRegularCartan(f"expected 12 chambers, found {len(chambers)}")

    def simples_of(positive):
        pos = set(positive)
        out = []
        for alpha in pos:
            decomposable = any(
                tuple(a + b for a, b in zip(beta, gamma)) == alpha
                for beta in pos for gamma in pos)
            if not decomposable:
                out.append(alpha)
        return tuple(sorted(out))

    dominant = []
    for positive in sorted(chambers, key=lambda s: tuple(sorted(s))):
        simples = simples_of(positive)
        if len(simples) != 2:
            raise NonRegularCartan("chamber without two simple roots")
        ok = all((lambda v: v.re_num >= 0)(pairing(nu, alpha)) for alpha in simples)
        if ok:
            dominant.append((positive, simples))
    if len(dominant) != 2:
        raise NonRegularCartan(f"expected 2 dominant chambers, found {len(dominant)}")

    def build_p2(positive, simples):
        by_len = sorted(simples, key=lambda a: _rational_key(norms[a]))
        alpha_long = by_len[-1]
        if norms[alpha_long] / norms[by_len[0]] != length_ratio_sq:
            raise NonRegularCartan("simple roots do not realize the length ratio")
        vectors = [_mat_to_vec(h1), _mat_to_vec(h2)]
        vectors += [roots[a] for a in sorted(positive)]
        neg_long = (-alpha_long[0], -alpha_long[1])
        vectors.append(roots[neg_long])
        return by_len, vectors

    (pos_a, simp_a), (pos_b, simp_b) = dominant
    by_len_a, p2_a = build_p2(pos_a, simp_a)
    by_len_b, p2_b = build_p2(pos_b, simp_b)
    if not spans_equal(p2_a, p2_b):
        raise NonRegularCartan("the two dominant chambers disagree on the parabolic")

    positive, simples, by_len, p2 = pos_a, simp_a, by_len_a, p2_a
    _ROOT_DATA = RootData(
        cartan=(h1, h2),
        roots=roots,
        positive=tuple(sorted(positive)),
        simple=(by_len[0], by_len[1]),
        length_ratio_sq=length_ratio_sq,
        p2_basis=p2,
        highest_weight=nu,
    )
    return _ROOT_DATA


def root_data_to_json() -> dict:
    """Serialized Cartan matrices and root functionals."""
    data = cartan_roots_parabolic()
    return {
        "cartan": [[[str(e) for e in row] for row in h.entries] for h in data.cartan],
        "roots": sorted([list(alpha) for alpha in data.roots]),
        "simple": [list(a) for a in data.simple],
        "positive": sorted([list(a) for a in data.positive]),
        "length_ratio_sq": str(data.length_ratio_sq),
        "p2_dim": len(data.p2_basis),
        "highest_weight": list(data.highest_weight),
    }
