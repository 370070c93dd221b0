"""The octonion algebra O over Q(i) and its 2-, 3- and 4-fold cross products.

The eight basis units are e0 = 1, e1 = i, e2 = j, e3 = k, e4 = l,
e5 = l*i, e6 = l*j, e7 = l*k, where e0..e3 span the quaternions and the
rest of the table comes from Cayley-Dickson doubling with a norm-1
generator l.  The doubling sign convention is not free: the table is
accepted only if the degree-3 calibration form it induces matches the
golden coefficients (the mirrored convention is tried otherwise).
"""

from __future__ import annotations

from . import golden
from .exactnum import GaussianRational, ZERO, ONE, HALF, gq


class NotImaginary(ValueError):
    """Operand of the two-fold cross product has a real part."""


class IsotropicVector(ValueError):
    """Gram-Schmidt hit a vector with B(v, v) = 0."""


class TableValidationFailure(RuntimeError):
    """No doubling convention reproduces the golden form coefficients."""


# ---------------------------------------------------------------------------
# Multiplication table via Cayley-Dickson doubling
# ---------------------------------------------------------------------------

# quaternion units 1, i, j, k:  _QUAT[a][b] = (sign, index) with ea*eb = sign*e_index
_QUAT = (
    ((1, 0), (1, 1), (1, 2), (1, 3)),
    ((1, 1), (-1, 0), (1, 3), (-1, 2)),
    ((1, 2), (-1, 3), (-1, 0), (1, 1)),
    ((1, 3), (1, 2), (-1, 1), (-1, 0)),
)


def _quat_mul(x, y):
    out = [0, 0, 0, 0]
    for a, xa in enumerate(x):
        if not xa:
            continue
        for b, yb in enumerate(y):
            if not yb:
                continue
            sign, idx = _QUAT[a][b]
            out[idx] += sign * xa * yb
    return tuple(out)


def _quat_conj(x):
    return (x[0], -x[1], -x[2], -x[3])


def _pair_mul(p, q, mirrored: bool):
    """Cayley-Dickson product of pairs of quaternions.

    Plain convention: (x, y)(u, v) = (xu - conj(v) y, v x + y conj(u)).
    The mirrored convention multiplies in the opposite order, which is the
    other possible orientation of the table.
    """
    if mirrored:
        p, q = q, p
    x, y = p
    u, v = q
    first = tuple(a - b for a, b in zip(_quat_mul(x, u), _quat_mul(_quat_conj(v), y)))
    second = tuple(a + b for a, b in zip(_quat_mul(v, x), _quat_mul(y, _quat_conj(u))))
    return first, second


def _build_table(mirrored: bool):
    """8x8 table of (sign, index): e_a * e_b = sign * e_index."""
    zero = (0, 0, 0, 0)
    units = {0: (1, 0, 0, 0), 1: (0, 1, 0, 0), 2: (0, 0, 1, 0), 3: (0, 0, 0, 1)}
    basis = [(units[k], zero) for k in range(4)]
    basis.append((zero, units[0]))
    # e5, e6, e7 are by definition the products e4*e1, e4*e2, e4*e3
    for k in (1, 2, 3):
        basis.append(_pair_mul(basis[4], basis[k], mirrored))

    # each basis element is +-1 times a flat pair unit; record where and with
    # which sign so products can be rewritten in the basis
    unit_to_basis = {}
    for k, pair in enumerate(basis):
        flat = pair[0] + pair[1]
        hits = [(i, v) for i, v in enumerate(flat) if v]
        if len(hits) != 1 or abs(hits[0][1]) != 1:
            raise TableValidationFailure("doubling produced a non-unit basis element")
        pos, s = hits[0]
        unit_to_basis[pos] = (k, s)

    def locate(pair):
        flat = pair[0] + pair[1]
        hits = [(i, v) for i, v in enumerate(flat) if v]
        if len(hits) != 1 or abs(hits[0][1]) != 1:
            raise TableValidationFailure("basis product is not a signed unit")
        pos, v = hits[0]
        k, s = unit_to_basis[pos]
        return (v * s, k)

    table = []
    for a in range(8):
        row = []
        for b in range(8):
            row.append(locate(_pair_mul(basis[a], basis[b], mirrored)))
        table.append(tuple(row))
    return tuple(table)


def _phi_coefficients(table):
    """Degree-3 form coefficients B(e_a, Im(e_b e_c)) for a < b < c >= 1."""
    coeffs = {}
    for a in range(1, 8):
        for b in range(a + 1, 8):
            for c in range(b + 1, 8):
                sign, idx = table[b][c]
                if idx == a:
                    coeffs[f"{a}{b}{c}"] = sign
    return coeffs


def _validated_table():
    want = {key: int(val) for key, val in golden.load_forms()["phi"].items()}
    for mirrored in (False, True):
        table = _build_table(mirrored)
        if _phi_coefficients(table) == want:
            return table, ("mirrored" if mirrored else "plain")
    raise TableValidationFailure("neither doubling convention matches the golden table")


MULT_TABLE, DOUBLING_CONVENTION = _validated_table()


def multiplication_table():
    """The validated table of signed basis indices."""
    return MULT_TABLE


# ---------------------------------------------------------------------------
# Octonions
# ---------------------------------------------------------------------------

class Octonion:
    """Element of O as eight Gaussian-rational coordinates against e0..e7."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = tuple(GaussianRational.coerce(c) for c in coords)
        if len(coords) != 8:
            raise ValueError("an octonion has eight coordinates")
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Octonion is immutable")

    @staticmethod
    def basis(k: int) -> "Octonion":
        return Octonion(tuple(ONE if i == k else ZERO for i in range(8)))

    @staticmethod
    def zero() -> "Octonion":
        return Octonion((ZERO,) * 8)

    def __add__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        return Octonion(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        return Octonion(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Octonion(tuple(-a for a in self.coords))

    def scale(self, c) -> "Octonion":
        c = GaussianRational.coerce(c)
        return Octonion(tuple(c * a for a in self.coords))

    def __mul__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        out = [ZERO] * 8
        for a, xa in enumerate(self.coords):
            if not xa:
                continue
            for b, yb in enumerate(other.coords):
                if not yb:
                    continue
                sign, idx = MULT_TABLE[a][b]
                term = xa * yb
                out[idx] = out[idx] + (term if sign > 0 else -term)
        return Octonion(tuple(out))

    def conj(self) -> "Octonion":
        return Octonion((self.coords[0],) + tuple(-c for c in self.coords[1:]))

    def re(self) -> "Octonion":
        return Octonion((self.coords[0],) + (ZERO,) * 7)

    def im(self) -> "Octonion":
        return Octonion((ZERO,) + self.coords[1:])

    def is_imaginary(self) -> bool:
        return not self.coords[0]

    def is_zero(self) -> bool:
        return all(not c for c in self.coords)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __str__(self):
        parts = [f"({c})*e{k}" for k, c in enumerate(self.coords) if c]
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__


E = tuple(Octonion.basis(k) for k in range(8))


def bilinear(u: Octonion, v: Octonion) -> GaussianRational:
    """The symmetric bilinear form B(u, v) = Re(conj(u) v); the basis
    e0..e7 is orthonormal for it, so this is the coordinate dot product."""
    total = ZERO
    for a, b in zip(u.coords, v.coords):
        total = total + a * b
    return total


def norm(u: Octonion) -> GaussianRational:
    return bilinear(u, u)


def cross2(u: Octonion, v: Octonion) -> Octonion:
    """Two-fold cross product Im(uv) on imaginary octonions."""
    if not (u.is_imaginary() and v.is_imaginary()):
        raise NotImaginary("cross2 requires imaginary operands")
    return (u * v).im()


def cross3(u: Octonion, v: Octonion, w: Octonion) -> Octonion:
    """Three-fold cross product ((u conj(v)) w - (w conj(v)) u) / 2."""
    vc = v.conj()
    return ((u * vc) * w - (w * vc) * u).scale(HALF)


def cross4(x: Octonion, u: Octonion, v: Octonion, w: Octonion) -> Octonion:
    """Four-fold cross product
    -1/4 [ (x X u X v) conj(w) - (w X x X u) conj(v)
           + (v X w X x) conj(u) - (u X v X w) conj(x) ]."""
    total = (cross3(x, u, v) * w.conj()
             - cross3(w, x, u) * v.conj()
             + cross3(v, w, x) * u.conj()
             - cross3(u, v, w) * x.conj())
    return total.scale(gq(-1, 0, 4))


def gram_schmidt(vectors) -> list[Octonion]:
    """B-orthogonalize a list of octonions.

    The complex bilinear form has isotropic vectors, so the projection
    coefficient can hit a zero denominator; that raises IsotropicVector and
    the caller is expected to resample."""
    ortho: list[Octonion] = []
    for v in vectors:
        w = v
        for u in ortho:
            w = w - u.scale(bilinear(w, u) / bilinear(u, u))
        if not bilinear(w, w):
            raise IsotropicVector("isotropic vector in the sample")
        ortho.append(w)
    return ortho
