"""n-Hom-Lie algebras given by structure constants, and checks of their axioms."""
from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Mapping, Sequence

from nhomlie.errors import DimensionError, HomLieError, PreconditionError
from nhomlie.linalg import (
    Matrix,
    Subspace,
    Vector,
    as_rational,
    dot,
    unit_vector,
    vector,
    vsub,
    zero_vector,
)
from nhomlie.tensor import SkewTensor, increasing_tuples


@dataclass(frozen=True)
class Check:
    """Verdict of a finite verification, with the first failing instance."""

    ok: bool
    witness: object = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class TraceForm:
    """Linear form ``x -> sum(t_i * x_i)``."""

    coefficients: tuple

    def __post_init__(self):
        object.__setattr__(self, "coefficients", vector(self.coefficients))

    @property
    def dim(self) -> int:
        return len(self.coefficients)

    def __call__(self, v: Sequence) -> Fraction:
        return dot(self.coefficients, v)

    def at(self, i: int) -> Fraction:
        """Value on the basis vector e_i (1-based)."""
        return self.coefficients[i - 1]

    def compose(self, M: Matrix) -> "TraceForm":
        """The form ``tau o M``."""
        return TraceForm(tuple(self(M.column(j + 1)) for j in range(M.ncols)))

    def is_zero(self) -> bool:
        return not any(self.coefficients)


def as_trace(tau) -> TraceForm:
    return tau if isinstance(tau, TraceForm) else TraceForm(tuple(tau))


@dataclass(frozen=True, kw_only=True)
class HomNLieAlgebra:
    """A vector space with a skew ``arity``-ary bracket and ``arity - 1`` twist maps.

    Twists are ``dim x dim`` matrices whose column ``j`` is the image of ``e_j``.
    ``multiplicative_declared`` asserts that all twists coincide and form an
    algebra morphism; :func:`validate` checks the claim.
    """

    dim: int
    arity: int
    bracket: SkewTensor
    twists: tuple
    name: str = field(default="", compare=False)
    multiplicative_declared: bool = False
    provenance: str = field(default="", compare=False)

    def __post_init__(self):
        if self.arity < 2:
            raise DimensionError("arity must be at least 2")
        if self.dim < 0:
            raise DimensionError("dimension must be non-negative")
        object.__setattr__(self, "twists", tuple(self.twists))
        b = self.bracket
        if (b.arity, b.dim, b.width) != (self.arity, self.dim, self.dim):
            raise DimensionError(
                f"bracket has arity {b.arity}, dim {b.dim}, width {b.width}; "
                f"expected {self.arity}, {self.dim}, {self.dim}")
        if len(self.twists) != self.arity - 1:
            raise DimensionError(f"{len(self.twists)} twist maps given, expected {self.arity - 1}")
        for t in self.twists:
            if not isinstance(t, Matrix) or t.shape != (self.dim, self.dim):
                raise DimensionError(f"twist maps must be {self.dim}x{self.dim} matrices")
        if self.multiplicative_declared and not self.uniform_twist:
            raise DimensionError("a multiplicative algebra needs all twist maps equal")

    @classmethod
    def from_structure(cls, dim: int, arity: int, brackets: Mapping, *, alpha=None, twists=None,
                       name: str = "", multiplicative: bool | None = None) -> "HomNLieAlgebra":
        """Build from sparse constants ``{(i1,...,in): {k: c}}`` (1-based)."""
        values = {}
        for key, coeffs in brackets.items():
            v = [Fraction(0)] * dim
            for k, c in coeffs.items():
                v[k - 1] += as_rational(c)
            values[tuple(key)] = v
        bracket = SkewTensor(arity, dim, values, width=dim)
        if twists is None:
            alpha = Matrix.identity(dim) if alpha is None else _as_matrix(alpha)
            twists = (alpha,) * (arity - 1)
            if multiplicative is None:
                multiplicative = True
        else:
            twists = tuple(_as_matrix(t) for t in twists)
        return cls(dim=dim, arity=arity, bracket=bracket, twists=twists, name=name,
                   multiplicative_declared=bool(multiplicative))

    # -- derived data --------------------------------------------------------

    @property
    def uniform_twist(self) -> bool:
        return all(t == self.twists[0] for t in self.twists)

    @property
    def alpha(self) -> Matrix:
        """The common twist map; error if the twists differ."""
        if not self.uniform_twist:
            raise HomLieError("twist maps are not all equal")
        return self.twists[0]

    def is_abelian(self) -> bool:
        return self.bracket.is_zero()

    def e(self, i: int) -> Vector:
        return unit_vector(self.dim, i)

    def basis_bracket(self, indices: Sequence[int]) -> Vector:
        return self.bracket.value_at(indices)

    def __call__(self, *vectors) -> Vector:
        return self.bracket.evaluate(vectors)

    def with_name(self, name: str, provenance: str | None = None) -> "HomNLieAlgebra":
        return HomNLieAlgebra(dim=self.dim, arity=self.arity, bracket=self.bracket, twists=self.twists,
                              name=name, multiplicative_declared=self.multiplicative_declared,
                              provenance=self.provenance if provenance is None else provenance)


def _as_matrix(m) -> Matrix:
    return m if isinstance(m, Matrix) else Matrix(m)


def eval_bracket(alg: HomNLieAlgebra, args: Sequence[Sequence]) -> Vector:
    if len(args) != alg.arity:
        raise DimensionError(f"bracket takes {alg.arity} arguments, got {len(args)}")
    return alg.bracket.evaluate([vector(a) for a in args])


def hom_nambu_defect(alg: HomNLieAlgebra) -> list[tuple[tuple, tuple, Vector]]:
    """Basis instances where the Hom-Nambu identity fails, with LHS - RHS.

    ``x`` runs over strictly increasing (n-1)-tuples (both sides are skew in
    ``x``); ``y`` runs over all n-tuples, since the identity is not manifestly
    skew in ``y``.
    """
    n, d = alg.arity, alg.dim
    tw = alg.twists
    twisted = [[tw[i].column(j) for j in range(1, d + 1)] for i in range(n - 1)]
    bracket = alg.bracket
    out = []
    for x in increasing_tuples(d, n - 1):
        ad_x = [bracket.value_at(x + (k,)) for k in range(1, d + 1)]
        ax = [twisted[i][x[i] - 1] for i in range(n - 1)]
        for y in product(range(1, d + 1), repeat=n):
            lhs = bracket.evaluate(ax + [bracket.value_at(y)])
            rhs = zero_vector(d)
            for i in range(n):
                args = [twisted[j][y[j] - 1] for j in range(i)]
                args.append(ad_x[y[i] - 1])
                args.extend(twisted[j - 1][y[j] - 1] for j in range(i + 1, n))
                term = bracket.evaluate(args)
                if any(term):
                    rhs = tuple(a + b for a, b in zip(rhs, term))
            residual = vsub(lhs, rhs)
            if any(residual):
                out.append((x, y, residual))
    return out


def is_multiplicative(alg: HomNLieAlgebra) -> Check:
    """Whether the common twist is an endomorphism of the bracket."""
    if not alg.uniform_twist:
        raise HomLieError("multiplicativity needs all twist maps equal")
    a = alg.alpha
    cols = [a.column(j) for j in range(1, alg.dim + 1)]
    for key in increasing_tuples(alg.dim, alg.arity):
        lhs = a @ alg.bracket.stored(key)
        rhs = alg.bracket.evaluate([cols[i - 1] for i in key])
        if lhs != rhs:
            return Check(False, key)
    return Check(True)


def is_weak_morphism(f: Matrix, A: HomNLieAlgebra, B: HomNLieAlgebra) -> Check:
    """Bracket compatibility ``f[x_1..x_n] = {f x_1 .. f x_n}`` on basis tuples."""
    if A.arity != B.arity:
        raise DimensionError("algebras of different arity")
    f = _as_matrix(f)
    if f.shape != (B.dim, A.dim):
        raise DimensionError(f"map of shape {f.shape}, expected {(B.dim, A.dim)}")
    cols = [f.column(j) for j in range(1, A.dim + 1)]
    for key in increasing_tuples(A.dim, A.arity):
        if f @ A.bracket.stored(key) != B.bracket.evaluate([cols[i - 1] for i in key]):
            return Check(False, key)
    return Check(True)


def is_morphism(f: Matrix, A: HomNLieAlgebra, B: HomNLieAlgebra) -> Check:
    """Weak morphism that also intertwines every pair of twist maps."""
    weak = is_weak_morphism(f, A, B)
    if not weak:
        return weak
    f = _as_matrix(f)
    for i, (a, b) in enumerate(zip(A.twists, B.twists), start=1):
        if f @ a != b @ f:
            return Check(False, ("twist", i))
    return Check(True)


def _twists_preserve(alg: HomNLieAlgebra, S: Subspace) -> Check:
    for i, t in enumerate(alg.twists, start=1):
        for b in S.basis:
            if t @ b not in S:
                return Check(False, ("twist", i, b))
    return Check(True)


def is_subalgebra(alg: HomNLieAlgebra, S: Subspace) -> Check:
    if S.ambient_dim != alg.dim:
        raise DimensionError("subspace lives in a different ambient space")
    closed = _twists_preserve(alg, S)
    if not closed:
        return closed
    for combo in combinations(range(S.dim), alg.arity):
        value = alg.bracket.evaluate([S.basis[i] for i in combo])
        if value not in S:
            return Check(False, ("bracket", combo))
    return Check(True)


def is_ideal(alg: HomNLieAlgebra, S: Subspace) -> Check:
    if S.ambient_dim != alg.dim:
        raise DimensionError("subspace lives in a different ambient space")
    closed = _twists_preserve(alg, S)
    if not closed:
        return closed
    for key in increasing_tuples(alg.dim, alg.arity - 1):
        args = [unit_vector(alg.dim, i) for i in key]
        for b in S.basis:
            if alg.bracket.evaluate(args + [b]) not in S:
                return Check(False, ("bracket", key, b))
    return Check(True)


@dataclass(frozen=True)
class ValidationReport:
    shapes_ok: bool
    defects: tuple
    uniform_twist: bool
    multiplicative: Check | None

    @property
    def ok(self) -> bool:
        mult_ok = self.multiplicative is None or self.multiplicative.ok
        return self.shapes_ok and not self.defects and mult_ok


@functools.lru_cache(maxsize=256)
def validate(alg: HomNLieAlgebra) -> ValidationReport:
    """Skew storage, Hom-Nambu identity and (if declared) multiplicativity."""
    defects = tuple(hom_nambu_defect(alg))
    mult = is_multiplicative(alg) if alg.multiplicative_declared else None
    return ValidationReport(True, defects, alg.uniform_twist, mult)


def require_valid(alg: HomNLieAlgebra) -> HomNLieAlgebra:
    """Refuse algebras failing the Hom-Nambu identity or a declared multiplicativity."""
    report = validate(alg)
    if report.defects:
        x, y, r = report.defects[0]
        raise PreconditionError(f"Hom-Nambu identity fails at x={x}, y={y}", witness=report.defects[0])
    if report.multiplicative is not None and not report.multiplicative:
        raise PreconditionError("declared multiplicative but the twist is not a morphism",
                                witness=report.multiplicative.witness)
    return alg


@functools.lru_cache(maxsize=256)
def _multiplicative_cached(alg: HomNLieAlgebra) -> Check:
    if not alg.uniform_twist:
        return Check(False, "twist maps differ")
    return is_multiplicative(alg)


def require_multiplicative(alg: HomNLieAlgebra) -> HomNLieAlgebra:
    """Valid and multiplicative (checked, not merely declared)."""
    require_valid(alg)
    verdict = _multiplicative_cached(alg)
    if not verdict:
        raise PreconditionError("algebra is not multiplicative", witness=verdict.witness)
    return alg
