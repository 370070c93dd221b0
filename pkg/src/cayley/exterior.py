"""Exterior algebra on C^8: multivectors, wedge, Hodge star, pullbacks,
and the three calibration forms built from octonion cross products.

Multivectors are sparse maps from sorted index tuples to coefficients.
Coefficients are usually Gaussian rationals but any commutative-ring
element with +, * and truthiness works, which is how symbolic pullbacks
by Laurent-polynomial matrices are computed.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from . import golden
from .exactnum import GaussianRational, Matrix, ZERO, ONE
from .octonion import Octonion, E, bilinear, cross2, cross3, cross4


class GradeOverflow(ValueError):
    """Wedge of grades exceeding the dimension."""


class IndexZeroPresent(ValueError):
    """Hodge star on the 7-space got a multivector touching index 0."""


class TableValidationFailure(RuntimeError):
    """Computed calibration forms disagree with the golden coefficients."""


INDEX_SETS_4 = tuple(combinations(range(8), 4))


def key_of(indices) -> tuple[int, ...]:
    t = tuple(indices)
    if list(t) != sorted(t) or len(set(t)) != len(t):
        raise ValueError(f"index set must be sorted and distinct: {t}")
    return t


def key_str(indices) -> str:
    return "".join(str(i) for i in indices)


def str_key(text: str) -> tuple[int, ...]:
    return key_of(int(ch) for ch in text)


def sort_sign(indices) -> tuple[int, tuple[int, ...]]:
    """Sign of the permutation sorting ``indices``; 0 on repeats."""
    items = list(indices)
    if len(set(items)) != len(items):
        return 0, ()
    sign = 1
    for i in range(len(items)):
        for j in range(len(items) - 1, i, -1):
            if items[j - 1] > items[j]:
                items[j - 1], items[j] = items[j], items[j - 1]
                sign = -sign
    return sign, tuple(items)


class MultiVector:
    """Sparse homogeneous element of Lambda^k, keyed by sorted k-tuples."""

    __slots__ = ("grade", "coeffs")

    def __init__(self, grade: int, coeffs=None):
        stored = {}
        for idx, c in (coeffs or {}).items():
            t = key_of(idx)
            if len(t) != grade:
                raise ValueError(f"key {t} has wrong grade, expected {grade}")
            if c:
                stored[t] = c
        object.__setattr__(self, "grade", grade)
        object.__setattr__(self, "coeffs", stored)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("MultiVector is immutable")

    @staticmethod
    def basis(indices) -> "MultiVector":
        t = key_of(indices)
        return MultiVector(len(t), {t: ONE})

    @staticmethod
    def zero(grade: int) -> "MultiVector":
        return MultiVector(grade, {})

    def __add__(self, other):
        if not isinstance(other, MultiVector) or other.grade != self.grade:
            return NotImplemented
        coeffs = dict(self.coeffs)
        for k, c in other.coeffs.items():
            acc = coeffs.get(k)
            total = c if acc is None else acc + c
            if total:
                coeffs[k] = total
            elif acc is not None:
                del coeffs[k]
        return MultiVector(self.grade, coeffs)

    def __sub__(self, other):
        if not isinstance(other, MultiVector) or other.grade != self.grade:
            return NotImplemented
        return self + other.scale(-ONE)

    def __neg__(self):
        return self.scale(-ONE)

    def scale(self, c) -> "MultiVector":
        return MultiVector(self.grade, {k: c * v for k, v in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, MultiVector):
            return NotImplemented
        return self.grade == other.grade and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.grade, frozenset(self.coeffs.items())))

    def coefficient(self, indices):
        return self.coeffs.get(key_of(indices), ZERO)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return not self.is_zero()

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self.coeffs)

    def wedge(self, other: "MultiVector") -> "MultiVector":
        if not isinstance(other, MultiVector):
            raise TypeError("wedge expects a MultiVector")
        grade = self.grade + other.grade
        if grade > 8:
            raise GradeOverflow(f"grade {grade} exceeds the dimension")
        out: dict[tuple, object] = {}
        for a, ca in self.coeffs.items():
            for b, cb in other.coeffs.items():
                sign, key = sort_sign(a + b)
                if sign == 0:
                    continue
                c = ca * cb
                if sign < 0:
                    c = -c
                acc = out.get(key)
                total = c if acc is None else acc + c
                if total:
                    out[key] = total
                elif acc is not None:
                    del out[key]
        return MultiVector(grade, out)

    def __xor__(self, other):
        return self.wedge(other)

    def to_json(self) -> dict[str, str]:
        return {key_str(k): str(c) for k, c in sorted(self.coeffs.items())}

    @staticmethod
    def from_json(grade: int, data: dict) -> "MultiVector":
        return MultiVector(grade, {str_key(k): GaussianRational.parse(str(v))
                                   for k, v in data.items()})

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"({c})*e^{key_str(k)}" for k, c in sorted(self.coeffs.items()))

    __repr__ = __str__


class VectorValuedForm:
    """An Im(O)-valued 4-form: seven component 4-forms, one per e1..e7."""

    __slots__ = ("components",)

    def __init__(self, components: Sequence[MultiVector]):
        components = tuple(components)
        if len(components) != 7 or any(c.grade != 4 for c in components):
            raise ValueError("expected seven grade-4 components")
        object.__setattr__(self, "components", components)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("VectorValuedForm is immutable")

    def component(self, k: int) -> MultiVector:
        """Component multiplying e_k, for k in 1..7."""
        return self.components[k - 1]

    def evaluate(self, v1, v2, v3, v4) -> Octonion:
        coords = [ZERO]
        for comp in self.components:
            coords.append(eval4(comp, v1, v2, v3, v4))
        return Octonion(coords)

    def term_count(self) -> int:
        return sum(len(c.coeffs) for c in self.components)

    def to_json(self) -> dict[str, dict]:
        return {str(k): self.component(k).to_json() for k in range(1, 8)}


# ---------------------------------------------------------------------------
# Hodge star on the imaginary 7-space
# ---------------------------------------------------------------------------

def hodge_star7(mv: MultiVector) -> MultiVector:
    """Hodge star on indices 1..7 with orientation e^{1234567}:
    *e^I = sign * e^{I^c} where e^I ^ *e^I = e^{1234567}."""
    full = tuple(range(1, 8))
    out: dict[tuple, object] = {}
    for idx, c in mv.coeffs.items():
        if 0 in idx:
            raise IndexZeroPresent(f"index 0 present in {idx}")
        complement = tuple(i for i in full if i not in idx)
        sign, _ = sort_sign(idx + complement)
        out[complement] = c if sign > 0 else -c
    return MultiVector(7 - mv.grade, out)


# ---------------------------------------------------------------------------
# Evaluation and pullback
# ---------------------------------------------------------------------------

def eval4(form: MultiVector, v1, v2, v3, v4) -> GaussianRational:
    """Evaluate a 4-form on four octonions (multilinear, alternating)."""
    if form.grade != 4:
        raise ValueError("eval4 expects a grade-4 form")
    vs = (v1, v2, v3, v4)
    columns = [v.coords for v in vs]
    total = ZERO
    for idx, c in form.coeffs.items():
        sub = [[columns[j][i] for j in range(4)] for i in idx]
        total = total + c * Matrix(sub).det()
    return total


_PULLBACK_CACHE: dict[Matrix, dict] = {}


def _induced_minors(m: Matrix, row_sets) -> dict:
    """det m[J, I] for the requested J and all 70 column sets I."""
    cached = _PULLBACK_CACHE.get(m)
    if cached is None:
        cached = {}
        _PULLBACK_CACHE[m] = cached
    out = {}
    for J in row_sets:
        for I in INDEX_SETS_4:
            key = (J, I)
            value = cached.get(key)
            if value is None:
                value = m.submatrix(J, I).det()
                cached[key] = value
            out[key] = value
    return out


def pullback4(m: Matrix, form: MultiVector) -> MultiVector:
    """Pullback of a 4-form along the linear map m:
    (pullback4(m, w))(v1..v4) = w(m v1, ..., m v4), via 4x4 minors."""
    if form.grade != 4:
        raise ValueError("pullback4 expects a grade-4 form")
    if (m.rows, m.cols) != (8, 8):
        raise ValueError("pullback4 expects an 8x8 matrix")
    row_sets = tuple(form.coeffs)
    minors = _induced_minors(m, row_sets)
    out: dict[tuple, object] = {}
    for I in INDEX_SETS_4:
        acc = None
        for J, c in form.coeffs.items():
            minor = minors[(J, I)]
            if not minor:
                continue
            term = c * minor
            acc = term if acc is None else acc + term
        if acc is not None and acc:
            out[I] = acc
    return MultiVector(4, out)


# ---------------------------------------------------------------------------
# Infinitesimal actions
# ---------------------------------------------------------------------------

def act_on_form(x: Matrix, form: MultiVector) -> MultiVector:
    """Lie-algebra action on a k-form: (X.w)(v1..vk) = -sum_i w(.., X vi, ..)."""
    k = form.grade
    out = MultiVector.zero(k)
    for idx, c in form.coeffs.items():
        for pos in range(k):
            # replace slot `pos`: contributions -c * X[idx[pos], s] on key with s
            col = idx[pos]
            for s in range(8):
                entry = x.entries[col][s]
                if not entry:
                    continue
                new_idx = idx[:pos] + (s,) + idx[pos + 1:]
                sign, key = sort_sign(new_idx)
                if sign == 0:
                    continue
                coeff = c * entry
                if sign > 0:
                    coeff = -coeff
                out = out + MultiVector(k, {key: coeff})
    return out


def act_on_wedge(x: Matrix, mv: MultiVector) -> MultiVector:
    """Derivation action on a wedge of vectors:
    X.(v1 ^ ... ^ vk) = sum_i v1 ^ .. ^ X vi ^ .. ^ vk."""
    k = mv.grade
    out = MultiVector.zero(k)
    for idx, c in mv.coeffs.items():
        for pos in range(k):
            col = idx[pos]
            for s in range(8):
                entry = x.entries[s][col]
                if not entry:
                    continue
                new_idx = idx[:pos] + (s,) + idx[pos + 1:]
                sign, key = sort_sign(new_idx)
                if sign == 0:
                    continue
                coeff = c * entry
                if sign < 0:
                    coeff = -coeff
                out = out + MultiVector(k, {key: coeff})
    return out


def wedge_of_vectors(vectors: Sequence[Octonion]) -> MultiVector:
    """v1 ^ ... ^ vk as a grade-k multivector."""
    result = None
    for v in vectors:
        mv = MultiVector(1, {(i,): c for i, c in enumerate(v.coords) if c})
        result = mv if result is None else result.wedge(mv)
    if result is None:
        raise ValueError("empty vector list")
    return result


# ---------------------------------------------------------------------------
# Calibration forms
# ---------------------------------------------------------------------------

_CALIBRATIONS: tuple | None = None


def build_calibrations() -> tuple[MultiVector, MultiVector, VectorValuedForm]:
    """Compute the degree-3 form, the degree-4 form, and the vector-valued
    4-form by evaluating their defining cross-product formulas on all basis
    tuples, then validate them against the golden coefficient tables."""
    global _CALIBRATIONS
    if _CALIBRATIONS is not None:
        return _CALIBRATIONS

    phi_coeffs = {}
    for idx in combinations(range(1, 8), 3):
        a, b, c = idx
        value = bilinear(E[a], cross2(E[b], E[c]))
        if value:
            phi_coeffs[idx] = value
    phi = MultiVector(3, phi_coeffs)

    big_coeffs = {}
    xi_parts = [dict() for _ in range(7)]
    for idx in INDEX_SETS_4:
        x, u, v, w = (E[i] for i in idx)
        value = bilinear(x, cross3(u, v, w))
        if value:
            big_coeffs[idx] = value
        im_part = cross4(x, u, v, w).im()
        for k in range(1, 8):
            coord = im_part.coords[k]
            if coord:
                xi_parts[k - 1][idx] = coord
    big = MultiVector(4, big_coeffs)
    xi = VectorValuedForm([MultiVector(4, part) for part in xi_parts])

    tables = golden.load_forms()
    want_phi = MultiVector.from_json(3, tables["phi"])
    want_big = MultiVector.from_json(4, tables["Phi"])
    want_xi = [MultiVector.from_json(4, tables["xi"][str(k)]) for k in range(1, 8)]
    if phi != want_phi:
        raise TableValidationFailure("degree-3 form disagrees with the golden table")
    if big != want_big:
        raise TableValidationFailure("degree-4 form disagrees with the golden table")
    for k in range(7):
        if xi.components[k] != want_xi[k]:
            raise TableValidationFailure(
                f"vector-valued form component e{k + 1} disagrees with the golden table")

    _CALIBRATIONS = (phi, big, xi)
    return _CALIBRATIONS
