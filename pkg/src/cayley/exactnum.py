"""Exact arithmetic over the Gaussian rationals and exact linear algebra.

Scalars are elements of Q(i) kept as integer triples with one shared,
positive denominator, so every computation in this package is exact; no
floating point appears anywhere.  On top of the scalars this module
provides dense matrices with rank / kernel / inverse over the field, a
fraction-free (Bareiss) rank for cross-checking, and sparse multivariate
Laurent polynomials used for chart equations and symbolic torus matrices.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Iterator, Mapping, Sequence


class DivisionByZero(ZeroDivisionError):
    """Division or inversion by zero."""


class UnknownVariable(KeyError):
    """Variable does not belong to the polynomial ring at hand."""


# ---------------------------------------------------------------------------
# Scalars
# ---------------------------------------------------------------------------

class GaussianRational:
    """Element (re + im*i)/den of Q(i), normalized so den > 0 and
    gcd(re, im, den) == 1.  Zero is (0, 0, 1).  Immutable and hashable."""

    __slots__ = ("re_num", "im_num", "den")

    def __init__(self, re_num: int = 0, im_num: int = 0, den: int = 1):
        if den == 0:
            raise DivisionByZero("zero denominator")
        if den < 0:
            re_num, im_num, den = -re_num, -im_num, -den
        g = math.gcd(math.gcd(abs(re_num), abs(im_num)), den)
        if g > 1:
            re_num //= g
            im_num //= g
            den //= g
        object.__setattr__(self, "re_num", re_num)
        object.__setattr__(self, "im_num", im_num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("GaussianRational is immutable")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def coerce(value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, int):
            return GaussianRational(value)
        raise TypeError(f"cannot coerce {value!r} into Q(i)")

    @staticmethod
    def parse(text: str) -> "GaussianRational":
        """Parse the canonical serialization produced by ``str``.

        Accepts forms like ``"0"``, ``"-3"``, ``"1/2"``, ``"2*i"``,
        ``"-1/2*i"`` and ``"1/2-1/2*i"``.
        """
        s = text.strip().replace(" ", "")
        if not s:
            raise ValueError("empty scalar string")
        pattern = re.compile(r"([+-]?\d+)(?:/(\d+))?(\*i)?")
        pos = 0
        re_part = (0, 1)
        im_part = (0, 1)
        seen = 0
        while pos < len(s):
            m = pattern.match(s, pos)
            if not m or m.end() == pos:
                raise ValueError(f"bad scalar string {text!r}")
            num = int(m.group(1))
            den = int(m.group(2) or 1)
            if m.group(3):
                im_part = (num, den)
            else:
                re_part = (num, den)
            pos = m.end()
            seen += 1
            if seen > 2:
                raise ValueError(f"bad scalar string {text!r}")
        return (GaussianRational(re_part[0], 0, re_part[1])
                + GaussianRational(0, im_part[0], im_part[1]))

    # -- ring/field operations ---------------------------------------------

    def __add__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(
            self.re_num * other.den + other.re_num * self.den,
            self.im_num * other.den + other.im_num * self.den,
            self.den * other.den,
        )

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return GaussianRational(-self.re_num, -self.im_num, self.den)

    def __pos__(self):
        return self

    def __mul__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(
            self.re_num * other.re_num - self.im_num * other.im_num,
            self.re_num * other.im_num + self.im_num * other.re_num,
            self.den * other.den,
        )

    __rmul__ = __mul__

    def inv(self) -> "GaussianRational":
        n = self.re_num * self.re_num + self.im_num * self.im_num
        if n == 0:
            raise DivisionByZero("inverse of zero")
        return GaussianRational(self.re_num * self.den, -self.im_num * self.den, n)

    def __truediv__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re_num, -self.im_num, self.den)

    # -- predicates & misc ---------------------------------------------------

    def is_zero(self) -> bool:
        return self.re_num == 0 and self.im_num == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_real(self) -> bool:
        return self.im_num == 0

    def __eq__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return (self.re_num == other.re_num and self.im_num == other.im_num
                and self.den == other.den)

    def __hash__(self):
        if self.im_num == 0 and self.den == 1:
            return hash(self.re_num)
        return hash((self.re_num, self.im_num, self.den))

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        if self.re_num != 0:
            parts.append(f"{self.re_num}" if self.den == 1 else f"{self.re_num}/{self.den}")
        if self.im_num != 0:
            im = f"{self.im_num}" if self.den == 1 else f"{self.im_num}/{self.den}"
            if parts and self.im_num > 0:
                parts.append("+")
            parts.append(f"{im}*i")
        return "".join(parts)

    def __repr__(self):
        return f"GaussianRational({self.re_num}, {self.im_num}, {self.den})"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
HALF = GaussianRational(1, 0, 2)


def gq(re=0, im=0, den=1) -> GaussianRational:
    """Shorthand constructor."""
    return GaussianRational(re, im, den)


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------

class Matrix:
    """Dense matrix.  Entries are GaussianRational for the field routines
    (rank, kernel, inverse); structural operations (product, transpose,
    minors) also accept polynomial entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        rows = tuple(tuple(row) for row in entries)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged matrix")
        else:
            width = 0
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Matrix is immutable")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(rows: int, cols: int) -> "Matrix":
        return Matrix([[ZERO] * cols for _ in range(rows)])

    @staticmethod
    def from_int_rows(entries: Sequence[Sequence[int]]) -> "Matrix":
        return Matrix([[GaussianRational(e) for e in row] for row in entries])

    # -- structure -----------------------------------------------------------

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def row(self, i) -> tuple:
        return self.entries[i]

    def column(self, j) -> tuple:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix([self.column(j) for j in range(self.cols)])

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "Matrix":
        return Matrix([[self.entries[i][j] for j in col_idx] for i in row_idx])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix([[a + b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix([[a - b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.entries, other.entries)])

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = other.transpose().entries
        out = []
        for row in self.entries:
            out_row = []
            for col in cols:
                acc = None
                for a, b in zip(row, col):
                    term = a * b
                    acc = term if acc is None else acc + term
                out_row.append(acc if acc is not None else ZERO)
            out.append(out_row)
        return Matrix(out)

    def scale(self, c) -> "Matrix":
        return Matrix([[c * e for e in row] for row in self.entries])

    def apply_to(self, vector: Sequence) -> tuple:
        """Matrix-vector product."""
        if len(vector) != self.cols:
            raise ValueError("shape mismatch")
        out = []
        for row in self.entries:
            acc = None
            for a, b in zip(row, vector):
                term = a * b
                acc = term if acc is None else acc + term
            out.append(acc)
        return tuple(out)

    def is_zero(self) -> bool:
        return all(not e for row in self.entries for e in row)

    def det(self):
        """Determinant by Laplace expansion; meant for small matrices with
        entries in any commutative ring."""
        n = self.rows
        if n != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return _laplace_det(self.entries, tuple(range(n)), tuple(range(n)))

    # -- field linear algebra -------------------------------------------------

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row echelon form with its pivot columns.  Pivot choice is
        leftmost nonzero entry in the first unfinished row, so the output is
        deterministic."""
        m = [list(row) for row in self.entries]
        pivots = []
        pr = 0
        for pc in range(self.cols):
            pivot_row = None
            for r in range(pr, self.rows):
                if m[r][pc]:
                    pivot_row = r
                    break
            if pivot_row is None:
                continue
            m[pr], m[pivot_row] = m[pivot_row], m[pr]
            inv = m[pr][pc].inv()
            m[pr] = [inv * e for e in m[pr]]
            for r in range(self.rows):
                if r != pr and m[r][pc]:
                    factor = m[r][pc]
                    m[r] = [a - factor * b for a, b in zip(m[r], m[pr])]
            pivots.append(pc)
            pr += 1
            if pr == self.rows:
                break
        return Matrix(m), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def rank_fraction_free(self) -> int:
        """Rank via Bareiss elimination; every division is exact."""
        m = [list(row) for row in self.entries]
        rows, cols = self.rows, self.cols
        prev = ONE
        pr = 0
        for pc in range(cols):
            pivot_row = None
            for r in range(pr, rows):
                if m[r][pc]:
                    pivot_row = r
                    break
            if pivot_row is None:
                continue
            m[pr], m[pivot_row] = m[pivot_row], m[pr]
            pivot = m[pr][pc]
            for r in range(pr + 1, rows):
                for c in range(cols):
                    if c == pc:
                        continue
                    m[r][c] = (pivot * m[r][c] - m[r][pc] * m[pr][c]) / prev
                m[r][pc] = ZERO
            prev = pivot
            pr += 1
            if pr == rows:
                break
        return pr

    def kernel_basis(self) -> list[tuple]:
        """Basis of the right null space, read off the reduced echelon form.

        One vector per free column, listed in increasing column order; the
        vector for free column f has entry 1 at f and minus the reduced
        column entries at the pivot positions."""
        rref, pivots = self.rref()
        pivot_set = set(pivots)
        basis = []
        for free in range(self.cols):
            if free in pivot_set:
                continue
            vec = [ZERO] * self.cols
            vec[free] = ONE
            for r, pc in enumerate(pivots):
                vec[pc] = -rref.entries[r][free]
            basis.append(tuple(vec))
        return basis

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = Matrix([list(row) + list(Matrix.identity(n).entries[i])
                      for i, row in enumerate(self.entries)])
        red, pivots = aug.rref()
        if pivots[:n] != tuple(range(n)):
            raise DivisionByZero("matrix is singular")
        return Matrix([row[n:] for row in red.entries])

    def __str__(self):
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]"
                         for row in self.entries)

    __repr__ = __str__


def _laplace_det(entries, row_idx: tuple, col_idx: tuple):
    if len(row_idx) == 1:
        return entries[row_idx[0]][col_idx[0]]
    top = row_idx[0]
    rest = row_idx[1:]
    acc = None
    for pos, j in enumerate(col_idx):
        pivot = entries[top][j]
        if not pivot:
            continue
        sub_cols = col_idx[:pos] + col_idx[pos + 1:]
        term = pivot * _laplace_det(entries, rest, sub_cols)
        if pos % 2:
            term = -term
        acc = term if acc is None else acc + term
    if acc is None:
        first = entries[row_idx[0]][col_idx[0]]
        return first - first
    return acc


# -- span helpers -------------------------------------------------------------

def span_rank(vectors: Sequence[Sequence[GaussianRational]]) -> int:
    if not vectors:
        return 0
    return Matrix(vectors).rank()


def spans_equal(first: Sequence[Sequence[GaussianRational]],
                second: Sequence[Sequence[GaussianRational]]) -> bool:
    """Do two lists of vectors span the same subspace?"""
    ra = span_rank(first)
    rb = span_rank(second)
    if ra != rb:
        return False
    if ra == 0:
        return True
    return span_rank(list(first) + list(second)) == ra


def in_span(vector: Sequence[GaussianRational],
            vectors: Sequence[Sequence[GaussianRational]]) -> bool:
    base = span_rank(vectors)
    return span_rank(list(vectors) + [tuple(vector)]) == base


# ---------------------------------------------------------------------------
# Sparse multivariate (Laurent) polynomials
# ---------------------------------------------------------------------------

class PolynomialRing:
    """A polynomial ring over Q(i) with a fixed ordered variable list.

    Exponents may be negative, which is how the symbolic torus matrices keep
    their Laurent entries exact."""

    __slots__ = ("names", "index")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "index", {n: k for k, n in enumerate(names)})

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("PolynomialRing is immutable")

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    @property
    def nvars(self) -> int:
        return len(self.names)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(ONE)

    def const(self, value) -> "Polynomial":
        value = GaussianRational.coerce(value)
        if not value:
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: value})

    def var(self, name: str) -> "Polynomial":
        if name not in self.index:
            raise UnknownVariable(name)
        exps = [0] * self.nvars
        exps[self.index[name]] = 1
        return Polynomial(self, {tuple(exps): ONE})

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.var(n) for n in self.names)

    def monomial(self, exponents: Mapping[str, int], coeff=ONE) -> "Polynomial":
        coeff = GaussianRational.coerce(coeff)
        if not coeff:
            return self.zero()
        exps = [0] * self.nvars
        for name, e in exponents.items():
            if name not in self.index:
                raise UnknownVariable(name)
            exps[self.index[name]] = e
        return Polynomial(self, {tuple(exps): coeff})


class Polynomial:
    """Sparse polynomial: a map exponent-vector -> nonzero coefficient."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolynomialRing, terms: Mapping[tuple, GaussianRational]):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms",
                           {e: c for e, c in terms.items() if c})

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Polynomial is immutable")

    # -- coercion ------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return other
        if isinstance(other, (int, GaussianRational)):
            return self.ring.const(GaussianRational.coerce(other))
        return None

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            acc = terms.get(e)
            total = c if acc is None else acc + c
            if total:
                terms[e] = total
            elif acc is not None:
                del terms[e]
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, GaussianRational)):
            c = GaussianRational.coerce(other)
            if not c:
                return self.ring.zero()
            return Polynomial(self.ring, {e: c * v for e, v in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[tuple, GaussianRational] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                acc = out.get(e)
                total = c if acc is None else acc + c
                if total:
                    out[e] = total
                elif acc is not None:
                    del out[e]
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- calculus, substitution -------------------------------------------------

    def partial(self, name: str) -> "Polynomial":
        """Formal partial derivative."""
        if name not in self.ring.index:
            raise UnknownVariable(name)
        k = self.ring.index[name]
        out: dict[tuple, GaussianRational] = {}
        for e, c in self.terms.items():
            if e[k] == 0:
                continue
            ne = list(e)
            ne[k] -= 1
            out[tuple(ne)] = c * e[k]
        return Polynomial(self.ring, out)

    def subs(self, mapping: Mapping[str, "Polynomial | GaussianRational | int"]) -> "Polynomial":
        """Substitute polynomials or scalars for variables.  Variables not in
        the mapping stay untouched.  Negative exponents may only receive
        invertible scalars."""
        values = {}
        for name, v in mapping.items():
            if name not in self.ring.index:
                raise UnknownVariable(name)
            values[self.ring.index[name]] = v
        result = self.ring.zero()
        for e, c in self.terms.items():
            term = self.ring.const(c)
            for k, exp in enumerate(e):
                if exp == 0:
                    continue
                if k in values:
                    v = values[k]
                    if isinstance(v, (int, GaussianRational)):
                        term = term * (GaussianRational.coerce(v) ** exp)
                    else:
                        if exp < 0:
                            raise ValueError("negative power of a polynomial substitution")
                        term = term * (v ** exp)
                else:
                    term = term * self.ring.monomial({self.ring.names[k]: exp})
            result = result + term
        return result

    def evaluate(self, assignment: Mapping[str, GaussianRational]) -> GaussianRational:
        """Full evaluation at a scalar point."""
        missing = [n for n in self.ring.names if n not in assignment
                   and any(e[self.ring.index[n]] for e in self.terms)]
        if missing:
            raise UnknownVariable(f"unassigned variables {missing}")
        total = ZERO
        for e, c in self.terms.items():
            value = c
            for k, exp in enumerate(e):
                if exp:
                    value = value * (GaussianRational.coerce(assignment[self.ring.names[k]]) ** exp)
            total = total + value
        return total

    # -- inspection ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def constant_term(self) -> GaussianRational:
        return self.terms.get((0,) * self.ring.nvars, ZERO)

    def coefficient(self, exponents: Mapping[str, int]) -> GaussianRational:
        exps = [0] * self.ring.nvars
        for name, e in exponents.items():
            if name not in self.ring.index:
                raise UnknownVariable(name)
            exps[self.ring.index[name]] = e
        return self.terms.get(tuple(exps), ZERO)

    def linear_coefficient(self, name: str) -> GaussianRational:
        return self.coefficient({name: 1})

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def variables_used(self) -> tuple[str, ...]:
        used = set()
        for e in self.terms:
            for k, exp in enumerate(e):
                if exp:
                    used.add(self.ring.names[k])
        return tuple(sorted(used))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def monomial_exponents(self) -> tuple[tuple, GaussianRational]:
        if not self.is_monomial():
            raise ValueError("not a monomial")
        ((e, c),) = self.terms.items()
        return e, c

    def constant_value(self) -> GaussianRational:
        """The value of a constant polynomial (zero included)."""
        if self.terms and any(any(e) for e in self.terms):
            raise ValueError("not a constant polynomial")
        return self.constant_term()

    def __eq__(self, other):
        if isinstance(other, (int, GaussianRational)):
            other = self.ring.const(GaussianRational.coerce(other))
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring.names, frozenset(self.terms.items())))

    # -- canonical text -------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple, GaussianRational]]:
        """Terms in graded lexicographic order on the declared variable list
        (degree first, then earlier variables first)."""
        return sorted(self.terms.items(),
                      key=lambda item: (sum(item[0]), tuple(-e for e in item[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                (name if exp == 1 else f"{name}^{exp}")
                for name, exp in zip(self.ring.names, e) if exp
            )
            if not mono:
                body = str(c)
            elif c == ONE:
                body = mono
            elif c == -ONE:
                body = f"-{mono}"
            elif c.is_real():
                body = f"{c}*{mono}"
            else:
                body = f"({c})*{mono}"
            chunks.append(body)
        text = chunks[0]
        for body in chunks[1:]:
            if body.startswith("-"):
                text += " - " + body[1:]
            else:
                text += " + " + body
        return text

    __repr__ = __str__


# ---------------------------------------------------------------------------
# Minor cascades (used by the singular-locus identity checks)
# ---------------------------------------------------------------------------

def all_minors(matrix: Matrix, size: int) -> dict[tuple[tuple, tuple], object]:
    """All ``size x size`` minors of ``matrix`` keyed by (rows, cols).

    Computed by Laplace expansion along the first row with all smaller minors
    cached, so polynomial entries are multiplied as few times as possible."""
    from itertools import combinations

    entries = matrix.entries
    cache: dict[tuple[tuple, tuple], object] = {}
    for r in range(matrix.rows):
        for c in range(matrix.cols):
            cache[((r,), (c,))] = entries[r][c]
    for k in range(2, size + 1):
        new_cache: dict[tuple[tuple, tuple], object] = {}
        for rows in combinations(range(matrix.rows), k):
            top, rest = rows[0], rows[1:]
            for cols in combinations(range(matrix.cols), k):
                acc = None
                for pos, j in enumerate(cols):
                    pivot = entries[top][j]
                    if not pivot:
                        continue
                    minor = cache[(rest, cols[:pos] + cols[pos + 1:])]
                    if not minor:
                        continue
                    term = pivot * minor
                    if pos % 2:
                        term = -term
                    acc = term if acc is None else acc + term
                new_cache[(rows, cols)] = acc if acc is not None else ZERO
        cache = new_cache
    return cache


# ---------------------------------------------------------------------------
# Canonical serialization helpers
# ---------------------------------------------------------------------------

def scalar_to_str(value: GaussianRational) -> str:
    return str(value)


def matrix_to_json(matrix: Matrix) -> list[list[str]]:
    """Row-major array of canonical scalar strings."""
    return [[str(e) for e in row] for row in matrix.entries]


def matrix_from_json(data: Sequence[Sequence[str]]) -> Matrix:
    return Matrix([[GaussianRational.parse(e) for e in row] for row in data])
