"""Fundamental objects: the (n-1)-th exterior power of a multiplicative algebra.

Elements are coordinate tuples over the lexicographic list of strictly
increasing (n-1)-tuples, so ``e_1 ^ e_3`` in dimension 4 (n = 3) is the unit
vector at the position of ``(1, 3)``.
"""
from __future__ import annotations

import functools
from typing import Sequence

from nhomlie.algebra import HomNLieAlgebra, require_multiplicative
from nhomlie.errors import DimensionError
from nhomlie.linalg import Matrix, Vector, det, unit_vector, vadd, vscale, zero_vector
from nhomlie.tensor import SkewTensor, increasing_tuples


class Fundamental:
    """Exterior power ``L(A)`` with ``alpha_bar``, the action on ``A`` and ``[X, Y]_alpha``."""

    def __init__(self, alg: HomNLieAlgebra):
        require_multiplicative(alg)
        self.alg = alg
        self.n = alg.arity
        self.d = alg.dim
        self.keys = increasing_tuples(self.d, self.n - 1)
        self.index = {k: i for i, k in enumerate(self.keys)}
        self.alpha = alg.alpha
        self._alpha_cols = self.alpha.columns()
        self._ad = [self._ad_matrix(k) for k in self.keys]
        self._alpha_bar = Matrix.from_columns(
            [self.wedge([self._alpha_cols[i - 1] for i in k]) for k in self.keys], nrows=self.dim)
        self._leibniz_table = {(ki, li): self._compute_basis_leibniz(ki, li)
                               for ki in range(self.dim) for li in range(self.dim)}

    @property
    def dim(self) -> int:
        return len(self.keys)

    def _ad_matrix(self, key) -> Matrix:
        cols = [self.alg.bracket.value_at(key + (j,)) for j in range(1, self.d + 1)]
        return Matrix.from_columns(cols, nrows=self.d)

    def basis(self, key) -> Vector:
        return unit_vector(self.dim, self.index[tuple(key)] + 1)

    def zero(self) -> Vector:
        return zero_vector(self.dim)

    def wedge(self, vectors: Sequence[Sequence]) -> Vector:
        """Coordinates of ``v_1 ^ .. ^ v_{n-1}``."""
        if len(vectors) != self.n - 1:
            raise DimensionError(f"need {self.n - 1} vectors to wedge")
        return tuple(det([[v[i - 1] for v in vectors] for i in key]) for key in self.keys)

    def alpha_bar(self, X: Sequence) -> Vector:
        return self._alpha_bar @ tuple(X)

    def alpha_bar_matrix(self) -> Matrix:
        return self._alpha_bar

    def act(self, X: Sequence, z: Sequence) -> Vector:
        """``X . z = [x_1, .., x_{n-1}, z]`` extended linearly in ``X``."""
        out = zero_vector(self.d)
        for c, ad in zip(X, self._ad):
            if c:
                out = vadd(out, vscale(c, ad @ tuple(z)))
        return out

    def ad(self, X: Sequence) -> Matrix:
        """Matrix of ``z -> X . z``."""
        return Matrix.from_columns([self.act(X, unit_vector(self.d, j)) for j in range(1, self.d + 1)],
                                   nrows=self.d)

    def _compute_basis_leibniz(self, ki: int, li: int) -> Vector:
        ad = self._ad[ki]
        ys = [unit_vector(self.d, j) for j in self.keys[li]]
        out = self.zero()
        for i in range(self.n - 1):
            args = [self.alpha @ y for y in ys]
            args[i] = ad @ ys[i]
            out = vadd(out, self.wedge(args))
        return out

    def leibniz(self, X: Sequence, Y: Sequence) -> Vector:
        """``[X, Y]_alpha = sum_i alpha(y_1) ^ .. ^ X.y_i ^ .. ^ alpha(y_{n-1})``."""
        out = self.zero()
        for ki, a in enumerate(X):
            if not a:
                continue
            for li, b in enumerate(Y):
                if b:
                    out = vadd(out, vscale(a * b, self._leibniz_table[(ki, li)]))
        return out

    def pair(self, phi: SkewTensor, X: Sequence, z: Sequence):
        """``phi(X, z)`` for an n-ary skew cochain ``phi``."""
        acc = phi.zero_value()
        for c, key in zip(X, self.keys):
            if not c:
                continue
            args = [unit_vector(self.d, i) for i in key] + [tuple(z)]
            value = phi.evaluate(args)
            acc = acc + c * value if phi.is_scalar else vadd(acc, vscale(c, value))
        return acc

    def dot_alpha(self, phi: SkewTensor, X: Sequence, Y: Sequence) -> Vector:
        """``phi(X, .) ._alpha Y = sum_i alpha(y_1) ^ .. ^ phi(X, y_i) ^ .. ^ alpha(y_{n-1})``."""
        out = self.zero()
        for li, b in enumerate(Y):
            if not b:
                continue
            ys = [unit_vector(self.d, j) for j in self.keys[li]]
            for i in range(self.n - 1):
                args = [self.alpha @ y for y in ys]
                args[i] = self.pair(phi, X, ys[i])
                out = vadd(out, vscale(b, self.wedge(args)))
        return out

    def leibniz_defect(self) -> list:
        """Basis triples where ``[aX, [Y, Z]] = [[X, Y], aZ] + [aY, [X, Z]]`` fails."""
        bad = []
        units = [unit_vector(self.dim, i + 1) for i in range(self.dim)]
        for X in units:
            aX = self.alpha_bar(X)
            for Y in units:
                XY = self.leibniz(X, Y)
                aY = self.alpha_bar(Y)
                for Z in units:
                    lhs = self.leibniz(aX, self.leibniz(Y, Z))
                    rhs = vadd(self.leibniz(XY, self.alpha_bar(Z)), self.leibniz(aY, self.leibniz(X, Z)))
                    if lhs != rhs:
                        bad.append((X, Y, Z))
        return bad


@functools.lru_cache(maxsize=64)
def fundamental(alg: HomNLieAlgebra) -> Fundamental:
    """Shared :class:`Fundamental` for an algebra (the object is read-only after init)."""
    return Fundamental(alg)


def wedge(alg: HomNLieAlgebra, vectors) -> Vector:
    return fundamental(alg).wedge(vectors)


def alpha_bar(alg: HomNLieAlgebra, X) -> Vector:
    return fundamental(alg).alpha_bar(X)


def fundamental_action(alg: HomNLieAlgebra, X, z) -> Vector:
    return fundamental(alg).act(X, z)


def leibniz_bracket(alg: HomNLieAlgebra, X, Y) -> Vector:
    return fundamental(alg).leibniz(X, Y)


def fundamental_basis(alg: HomNLieAlgebra) -> list[tuple[int, ...]]:
    return increasing_tuples(alg.dim, alg.arity - 1)

