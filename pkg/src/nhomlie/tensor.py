"""Skew-symmetric multilinear maps stored on strictly increasing index tuples.

Basis indices are 1-based throughout, so ``(1, 2)`` means ``(e_1, e_2)``.
A tensor is either scalar valued (forms, scalar cochains) or vector valued
(brackets, adjoint cochains).
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from math import prod
from typing import Callable, Iterable, Mapping, Sequence

from nhomlie.errors import DimensionError
from nhomlie.linalg import (
    Matrix,
    Vector,
    as_rational,
    det,
    format_rational,
    is_zero,
    vadd,
    vector,
    vscale,
    vsub,
    zero_vector,
)


def increasing_tuples(d: int, k: int) -> list[tuple[int, ...]]:
    """All strictly increasing ``k``-tuples over ``1..d`` in lexicographic order."""
    return list(combinations(range(1, d + 1), k))


def sort_with_sign(indices: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sort ``indices`` and return the sign of the sorting permutation.

    The sign is 0 when an index repeats (the skew value there vanishes).
    """
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return 0, tuple(sorted(idx))
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(idx)


class SkewTensor:
    """Skew-symmetric ``arity``-linear map on a ``dim``-dimensional space.

    ``width`` is ``None`` for scalar values, else the length of the value
    vectors.  Only nonzero values on strictly increasing keys are stored.
    """

    __slots__ = ("arity", "dim", "width", "_values")

    def __init__(self, arity: int, dim: int, values: Mapping | Iterable = (), width: int | None = None):
        if arity < 1:
            raise DimensionError("arity must be at least 1")
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "width", width)
        items = values.items() if isinstance(values, Mapping) else values
        stored = {}
        for key, value in items:
            key = tuple(key)
            if len(key) != arity:
                raise DimensionError(f"key {key} does not have arity {arity}")
            if any(not 1 <= i <= dim for i in key):
                raise DimensionError(f"key {key} has an index outside 1..{dim}")
            if any(key[t] >= key[t + 1] for t in range(arity - 1)):
                raise DimensionError(f"key {key} is not strictly increasing")
            value = self._coerce(value)
            if key in stored:
                raise DimensionError(f"duplicate key {key}")
            if not self._value_is_zero(value):
                stored[key] = value
        object.__setattr__(self, "_values", dict(sorted(stored.items())))

    def __setattr__(self, name, value):
        raise AttributeError("SkewTensor is immutable")

    # -- construction --------------------------------------------------------

    @classmethod
    def zero(cls, arity: int, dim: int, width: int | None = None) -> "SkewTensor":
        return cls(arity, dim, {}, width)

    @classmethod
    def from_function(cls, arity: int, dim: int, fn: Callable[[tuple[int, ...]], object],
                      width: int | None = None) -> "SkewTensor":
        """Tabulate ``fn`` on every strictly increasing basis tuple."""
        return cls(arity, dim, {key: fn(key) for key in increasing_tuples(dim, arity)}, width)

    @classmethod
    def from_coordinates(cls, arity: int, dim: int, coords: Sequence, width: int | None = None) -> "SkewTensor":
        """Inverse of :meth:`coordinates`."""
        keys = increasing_tuples(dim, arity)
        w = 1 if width is None else width
        if len(coords) != len(keys) * w:
            raise DimensionError("coordinate vector has the wrong length")
        if width is None:
            return cls(arity, dim, dict(zip(keys, coords)), None)
        return cls(arity, dim, {k: coords[i * w:(i + 1) * w] for i, k in enumerate(keys)}, width)

    def _coerce(self, value):
        if self.width is None:
            return as_rational(value)
        value = vector(value)
        if len(value) != self.width:
            raise DimensionError(f"value of length {len(value)}, expected {self.width}")
        return value

    def _value_is_zero(self, value) -> bool:
        return value == 0 if self.width is None else is_zero(value)

    # -- access --------------------------------------------------------------

    @property
    def is_scalar(self) -> bool:
        return self.width is None

    def zero_value(self):
        return Fraction(0) if self.width is None else zero_vector(self.width)

    def stored(self, key: tuple[int, ...]):
        """Value on an increasing key (zero if absent)."""
        return self._values.get(key, self.zero_value())

    def items(self):
        return self._values.items()

    def support(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self._values)

    def is_zero(self) -> bool:
        return not self._values

    def value_at(self, indices: Sequence[int]):
        """Value on a basis tuple in any order: sign times the stored value."""
        if len(indices) != self.arity:
            raise DimensionError(f"expected {self.arity} indices, got {len(indices)}")
        sign, key = sort_with_sign(indices)
        if sign == 0:
            return self.zero_value()
        value = self._values.get(key)
        if value is None:
            return self.zero_value()
        if sign > 0:
            return value
        return -value if self.width is None else vscale(-1, value)

    def evaluate(self, vectors: Sequence[Sequence]):
        """Multilinear skew extension to arbitrary coordinate vectors."""
        if len(vectors) != self.arity:
            raise DimensionError(f"expected {self.arity} arguments, got {len(vectors)}")
        for v in vectors:
            if len(v) != self.dim:
                raise DimensionError(f"argument of length {len(v)}, expected {self.dim}")
        supports = [[(i + 1, x) for i, x in enumerate(v) if x] for v in vectors]
        if any(not s for s in supports):
            return self.zero_value()
        if prod(len(s) for s in supports) <= len(self._values):
            return self._expand(supports)
        acc = self.zero_value()
        for key, value in self._values.items():
            minor = det([[v[i - 1] for v in vectors] for i in key])
            if minor:
                acc = acc + minor * value if self.width is None else vadd(acc, vscale(minor, value))
        return acc

    def _expand(self, supports):
        # sum over nonzero coordinate choices; cheap for sparse arguments
        acc = self.zero_value()
        for choice in product(*supports):
            c = 1
            for _, x in choice:
                c *= x
            sign, key = sort_with_sign([i for i, _ in choice])
            value = self._values.get(key) if sign else None
            if value is None:
                continue
            c = c if sign > 0 else -c
            acc = acc + c * value if self.width is None else vadd(acc, vscale(c, value))
        return acc

    def coordinates(self) -> tuple:
        """Flat coordinates over increasing keys (and components, if vector valued)."""
        out = []
        for key in increasing_tuples(self.dim, self.arity):
            v = self.stored(key)
            if self.width is None:
                out.append(v)
            else:
                out.extend(v)
        return tuple(out)

    # -- arithmetic ----------------------------------------------------------

    def _compatible(self, other: "SkewTensor"):
        if (self.arity, self.dim, self.width) != (other.arity, other.dim, other.width):
            raise DimensionError("tensors of different shape")

    def __add__(self, other: "SkewTensor") -> "SkewTensor":
        self._compatible(other)
        keys = set(self._values) | set(other._values)
        if self.width is None:
            vals = {k: self.stored(k) + other.stored(k) for k in keys}
        else:
            vals = {k: vadd(self.stored(k), other.stored(k)) for k in keys}
        return SkewTensor(self.arity, self.dim, vals, self.width)

    def __sub__(self, other: "SkewTensor") -> "SkewTensor":
        self._compatible(other)
        keys = set(self._values) | set(other._values)
        if self.width is None:
            vals = {k: self.stored(k) - other.stored(k) for k in keys}
        else:
            vals = {k: vsub(self.stored(k), other.stored(k)) for k in keys}
        return SkewTensor(self.arity, self.dim, vals, self.width)

    def scale(self, c) -> "SkewTensor":
        c = as_rational(c)
        if self.width is None:
            vals = {k: c * v for k, v in self._values.items()}
        else:
            vals = {k: vscale(c, v) for k, v in self._values.items()}
        return SkewTensor(self.arity, self.dim, vals, self.width)

    def __neg__(self) -> "SkewTensor":
        return self.scale(-1)

    def compose(self, M: Matrix) -> "SkewTensor":
        """Post-compose a vector-valued tensor with the linear map ``M``."""
        if self.width is None or M.ncols != self.width:
            raise DimensionError("matrix does not act on the tensor's values")
        return SkewTensor(self.arity, self.dim, {k: M @ v for k, v in self._values.items()}, M.nrows)

    def apply_form(self, form: Sequence) -> "SkewTensor":
        """Scalar tensor ``form o self`` for a linear form given by coefficients."""
        if self.width is None or len(form) != self.width:
            raise DimensionError("form does not act on the tensor's values")
        vals = {k: sum((a * b for a, b in zip(form, v)), Fraction(0)) for k, v in self._values.items()}
        return SkewTensor(self.arity, self.dim, vals, None)

    def __eq__(self, other):
        if not isinstance(other, SkewTensor):
            return NotImplemented
        return ((self.arity, self.dim, self.width) == (other.arity, other.dim, other.width)
                and self._values == other._values)

    def __hash__(self):
        return hash((self.arity, self.dim, self.width, tuple(self._values.items())))

    def __repr__(self):
        def fmt(v):
            if self.width is None:
                return format_rational(v)
            return "(" + ", ".join(format_rational(x) for x in v) + ")"
        body = ", ".join(f"{k}: {fmt(v)}" for k, v in self._values.items())
        kind = "scalar" if self.width is None else f"vector({self.width})"
        return f"SkewTensor(arity={self.arity}, dim={self.dim}, {kind}, {{{body}}})"
