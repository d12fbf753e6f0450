"""Exact rational linear algebra: vectors, matrices, kernels and subspaces.

Scalars are :class:`fractions.Fraction`.  Vectors are plain tuples of
fractions.  All elimination funnels through :func:`rref`, which rescales each
row to integers and hands it to a fraction-free Gauss-Jordan kernel: the
compiled one when the extension is built, otherwise the pure-Python one.
"""
from __future__ import annotations

import contextlib
import contextvars
import math
import re
from fractions import Fraction
from typing import Iterable, Sequence

from nhomlie import _rref_py
from nhomlie.errors import DimensionError

try:
    from nhomlie import _rref_cy
except ImportError:  # extension not built
    _rref_cy = None

Vector = tuple  # tuple[Fraction, ...]

KERNELS = {"python": _rref_py.integer_rref}
if _rref_cy is not None:
    KERNELS["compiled"] = _rref_cy.integer_rref

DEFAULT_BACKEND = "compiled" if "compiled" in KERNELS else "python"
_backend = contextvars.ContextVar("nhomlie_rref_backend", default=DEFAULT_BACKEND)


def active_backend() -> str:
    return _backend.get()


@contextlib.contextmanager
def use_backend(name: str):
    """Run the enclosed block with the named elimination kernel (context-local)."""
    if name not in KERNELS:
        raise ValueError(f"unknown backend {name!r}; available: {sorted(KERNELS)}")
    token = _backend.set(name)
    try:
        yield
    finally:
        _backend.reset(token)


# -- rationals ---------------------------------------------------------------

_RATIONAL_RE = re.compile(r"-?[0-9]+(?:/[0-9]+)?\Z")


def parse_rational(text: str) -> Fraction:
    """Parse ``-?digits(/digits)?``; the denominator must be positive."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rational(q) -> str:
    return str(Fraction(q))


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")


# -- vectors -----------------------------------------------------------------

def vector(entries: Iterable) -> Vector:
    return tuple(as_rational(x) for x in entries)


def zero_vector(d: int) -> Vector:
    return (Fraction(0),) * d


def unit_vector(d: int, i: int) -> Vector:
    """Coordinates of the basis vector e_i (``i`` is 1-based)."""
    if not 1 <= i <= d:
        raise DimensionError(f"basis index {i} outside 1..{d}")
    v = [Fraction(0)] * d
    v[i - 1] = Fraction(1)
    return tuple(v)


def vadd(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v: Vector) -> Vector:
    if c == 0:
        return (Fraction(0),) * len(v)
    return tuple(c * a for a in v)


def is_zero(v: Vector) -> bool:
    return not any(v)


def dot(u: Vector, v: Vector) -> Fraction:
    return sum((a * b for a, b in zip(u, v) if a and b), Fraction(0))


def lin_comb(coeffs: Iterable, vectors: Sequence[Vector], d: int) -> Vector:
    acc = [Fraction(0)] * d
    for c, v in zip(coeffs, vectors):
        if c:
            for k, x in enumerate(v):
                if x:
                    acc[k] += c * x
    return tuple(acc)


def det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    m = [list(r) for r in rows]
    sign = 1
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[p], m[c] = m[c], m[p]
            sign = -sign
        piv = m[c][c]
        result *= piv
        for i in range(c + 1, n):
            f = m[i][c]
            if f:
                f = f / piv
                for j in range(c + 1, n):
                    m[i][j] -= f * m[c][j]
    return sign * result


# -- matrices ----------------------------------------------------------------

class Matrix:
    """Immutable rational matrix.

    Used for linear maps in coordinates: column ``j`` is the image of the
    ``j``-th basis vector, so ``M @ v`` applies the map to ``v``.
    """

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        rows = tuple(vector(r) for r in rows)
        if ncols is None:
            if not rows:
                raise DimensionError("cannot infer column count of an empty matrix")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise DimensionError("ragged matrix rows")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int | None = None) -> "Matrix":
        columns = [vector(c) for c in columns]
        if nrows is None:
            if not columns:
                raise DimensionError("cannot infer row count of an empty matrix")
            nrows = len(columns[0])
        rows = [[col[i] for col in columns] for i in range(nrows)]
        return cls(rows, ncols=len(columns))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([unit_vector(n, i + 1) for i in range(n)], ncols=n)

    @classmethod
    def zeros(cls, m: int, n: int) -> "Matrix":
        return cls([zero_vector(n) for _ in range(m)], ncols=n)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def column(self, j: int) -> Vector:
        """Image of basis vector ``e_j`` (``j`` is 1-based)."""
        return tuple(r[j - 1] for r in self.rows)

    def columns(self) -> list[Vector]:
        return [tuple(r[j] for r in self.rows) for j in range(self.ncols)]

    @property
    def T(self) -> "Matrix":
        return Matrix(self.columns(), ncols=self.nrows)

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.ncols:
            raise DimensionError(f"vector of length {len(v)} for {self.nrows}x{self.ncols} matrix")
        return tuple(dot(r, v) for r in self.rows)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionError(f"cannot compose {self.shape} with {other.shape}")
            cols = other.columns()
            return Matrix([[dot(r, c) for c in cols] for r in self.rows], ncols=other.ncols)
        return self.apply(tuple(other))

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionError("shape mismatch in matrix sum")
        return Matrix([vadd(a, b) for a, b in zip(self.rows, other.rows)], ncols=self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionError("shape mismatch in matrix difference")
        return Matrix([vsub(a, b) for a, b in zip(self.rows, other.rows)], ncols=self.ncols)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        c = as_rational(c)
        return Matrix([vscale(c, r) for r in self.rows], ncols=self.ncols)

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square():
            raise DimensionError("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative matrix power")
        result = Matrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return all(is_zero(r) for r in self.rows)

    def rank(self) -> int:
        return len(rref(self.rows, self.ncols)[1])

    def flatten(self) -> Vector:
        """Row-major coordinates (used to treat maps as vectors)."""
        return tuple(x for r in self.rows for x in r)

    @classmethod
    def unflatten(cls, v: Sequence, nrows: int, ncols: int) -> "Matrix":
        return cls([v[i * ncols:(i + 1) * ncols] for i in range(nrows)], ncols=ncols)

    def to_lists(self) -> list[list[str]]:
        return [[format_rational(x) for x in r] for r in self.rows]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ncols == other.ncols and self.rows == other.rows

    def __hash__(self):
        return hash((self.ncols, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(format_rational(x) for x in r) for r in self.rows)
        return f"Matrix([{body}])"


# -- elimination -------------------------------------------------------------

def _integer_row(row: Sequence[Fraction]) -> list[int]:
    lcm = 1
    for x in row:
        if x.denominator != 1:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
    return [x.numerator * (lcm // x.denominator) for x in row]


def rref(rows: Sequence[Sequence[Fraction]], ncols: int, backend: str | None = None):
    """Reduced row echelon form with pivots normalised to 1.

    Returns ``(nonzero_rows, pivot_columns)`` with 0-based pivot columns.
    Row scaling to integers does not change the row space, so the result is
    the exact RREF of the input.
    """
    kernel = KERNELS[backend or _backend.get()]
    int_rows = [_integer_row(r) for r in rows if any(r)]
    reduced, pivots = kernel(int_rows, ncols)
    out = []
    for row, c in zip(reduced, pivots):
        piv = row[c]
        out.append(tuple(Fraction(x, piv) if x else Fraction(0) for x in row))
    return tuple(out), tuple(pivots)


def kernel_basis(M: Matrix) -> "Subspace":
    """Full nullspace of ``M`` in canonical form."""
    reduced, pivots = rref(M.rows, M.ncols)
    pivot_set = set(pivots)
    vectors = []
    for f in range(M.ncols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * M.ncols
        v[f] = Fraction(1)
        for row, c in zip(reduced, pivots):
            v[c] = -row[f]
        vectors.append(tuple(v))
    return Subspace(M.ncols, vectors)


def image_and_rank(M: Matrix) -> tuple["Subspace", int]:
    image = Subspace(M.nrows, M.columns())
    return image, image.dim


def solve(M: Matrix, b: Sequence) -> Vector | None:
    """A particular solution of ``M x = b``, or ``None`` if inconsistent."""
    b = vector(b)
    if len(b) != M.nrows:
        raise DimensionError(f"right-hand side has length {len(b)}, matrix has {M.nrows} rows")
    augmented = [r + (bi,) for r, bi in zip(M.rows, b)]
    reduced, pivots = rref(augmented, M.ncols + 1)
    if pivots and pivots[-1] == M.ncols:
        return None
    x = [Fraction(0)] * M.ncols
    for row, c in zip(reduced, pivots):
        x[c] = row[M.ncols]
    return tuple(x)


# -- subspaces ---------------------------------------------------------------

class Subspace:
    """Column span in canonical form: basis rows in RREF, pivots equal to 1.

    Equal subspaces have identical ``basis`` tuples, so equality is a plain
    data comparison.
    """

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        vecs = [vector(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise DimensionError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        basis, pivots = rref(vecs, ambient_dim) if vecs else ((), ())
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "pivots", pivots)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def zero(cls, d: int) -> "Subspace":
        return cls(d)

    @classmethod
    def full(cls, d: int) -> "Subspace":
        return cls(d, [unit_vector(d, i + 1) for i in range(d)])

    @classmethod
    def spanned_by_units(cls, d: int, indices: Iterable[int]) -> "Subspace":
        """Span of ``e_i`` for the given 1-based indices."""
        return cls(d, [unit_vector(d, i) for i in indices])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def coordinates(self, v: Sequence) -> Vector | None:
        """Coefficients of ``v`` on the canonical basis, or ``None`` if ``v`` is outside."""
        v = vector(v)
        if len(v) != self.ambient_dim:
            raise DimensionError("ambient dimension mismatch")
        coeffs = tuple(v[c] for c in self.pivots)
        residual = list(v)
        for a, b in zip(coeffs, self.basis):
            if a:
                for k, x in enumerate(b):
                    if x:
                        residual[k] -= a * x
        if any(residual):
            return None
        return coeffs

    def __contains__(self, v) -> bool:
        return self.coordinates(v) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check(other)
        return all(b in self for b in other.basis)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains_subspace(self)

    def __ge__(self, other: "Subspace") -> bool:
        return self.contains_subspace(other)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.ambient_dim, self.basis + other.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Subspace(self.ambient_dim)
        cols = list(self.basis) + [vscale(-1, t) for t in other.basis]
        ker = kernel_basis(Matrix.from_columns(cols, self.ambient_dim))
        k = self.dim
        return Subspace(self.ambient_dim, [lin_comb(w[:k], self.basis, self.ambient_dim) for w in ker.basis])

    def image(self, M: Matrix) -> "Subspace":
        if M.ncols != self.ambient_dim:
            raise DimensionError("matrix does not act on this ambient space")
        return Subspace(M.nrows, [M @ b for b in self.basis])

    def _check(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError(f"ambient dimensions {self.ambient_dim} and {other.ambient_dim} differ")

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        vecs = ", ".join("(" + ", ".join(format_rational(x) for x in b) + ")" for b in self.basis)
        return f"Subspace(dim={self.dim}/{self.ambient_dim}, [{vecs}])"


def canonical(S: Subspace) -> Subspace:
    return Subspace(S.ambient_dim, S.basis)


def member(v, S: Subspace) -> bool:
    return v in S


def equal(S: Subspace, T: Subspace) -> bool:
    S._check(T)
    return S == T


def subspace_sum(S: Subspace, T: Subspace) -> Subspace:
    return S + T


def intersect(S: Subspace, T: Subspace) -> Subspace:
    return S.intersect(T)
