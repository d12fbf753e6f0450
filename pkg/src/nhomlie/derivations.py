"""alpha^k-derivations, inner derivations, and their behaviour under induction.

Linear maps ``A -> A`` are handled as ``d x d`` matrices; spaces of maps are
:class:`Subspace` objects of row-major flattened matrices (length ``d * d``).
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from itertools import combinations

from nhomlie.algebra import Check, HomNLieAlgebra, _as_matrix, as_trace, require_multiplicative
from nhomlie.errors import DimensionError, PostconditionError, PreconditionError
from nhomlie.induction import alternating_extension, induce_multiplicative, is_phi_trace
from nhomlie.linalg import Matrix, Subspace, kernel_basis, unit_vector, vsub
from nhomlie.tensor import increasing_tuples

PLAIN = "plain"
TWISTED = "twisted"


def _unit_map(d: int, j: int) -> Matrix:
    return Matrix.unflatten(unit_vector(d * d, j + 1), d, d)


def as_map(alg: HomNLieAlgebra, v) -> Matrix:
    """Matrix of a flattened map (or the matrix itself)."""
    if isinstance(v, Matrix):
        return v
    v = tuple(v)
    if len(v) == alg.dim ** 2 and not isinstance(v[0], (list, tuple)):
        return Matrix.unflatten(v, alg.dim, alg.dim)
    return _as_matrix(v)


def leibniz_residual(alg: HomNLieAlgebra, f: Matrix, k: int) -> list:
    """``f[x] - sum_i [a^k x_1, .., f x_i, .., a^k x_n]`` on each increasing basis tuple."""
    d, n = alg.dim, alg.arity
    ak = alg.alpha ** k
    ak_cols = ak.columns()
    f_cols = f.columns()
    out = []
    for key in increasing_tuples(d, n):
        acc = f @ alg.bracket.stored(key)
        for i in range(n):
            args = [ak_cols[j - 1] for j in key]
            args[i] = f_cols[key[i] - 1]
            acc = vsub(acc, alg.bracket.evaluate(args))
        out.append((key, acc))
    return out


def _residual_vector(alg: HomNLieAlgebra, f: Matrix, k: int) -> tuple:
    comm = (f @ alg.alpha - alg.alpha @ f).flatten()
    leib = tuple(x for _, r in leibniz_residual(alg, f, k) for x in r)
    return comm + leib


def is_derivation(alg: HomNLieAlgebra, f, k: int) -> Check:
    """Whether ``f`` commutes with alpha and obeys the alpha^k-Leibniz rule."""
    require_multiplicative(alg)
    f = as_map(alg, f)
    if f.shape != (alg.dim, alg.dim):
        raise DimensionError(f"map of shape {f.shape}, expected {(alg.dim, alg.dim)}")
    if f @ alg.alpha != alg.alpha @ f:
        return Check(False, "f o alpha != alpha o f")
    for key, r in leibniz_residual(alg, f, k):
        if any(r):
            return Check(False, key)
    return Check(True)


@functools.lru_cache(maxsize=128)
def derivation_space(alg: HomNLieAlgebra, k: int) -> Subspace:
    """``Der_k(A)`` as the kernel of a linear system in ``d*d`` unknowns."""
    if k < 0:
        raise DimensionError("k must be non-negative")
    require_multiplicative(alg)
    d = alg.dim
    if d == 0:
        return Subspace(0)
    cols = [_residual_vector(alg, _unit_map(d, j), k) for j in range(d * d)]
    return kernel_basis(Matrix.from_columns(cols, nrows=len(cols[0])))


def fixed_points(alg: HomNLieAlgebra) -> Subspace:
    a = alg.alpha
    return kernel_basis(a - Matrix.identity(alg.dim))


def ad_map(alg: HomNLieAlgebra, X, k: int, reading: str = TWISTED) -> Matrix:
    """``z -> [x_1, .., x_{n-1}, alpha^k z]`` (twisted) or ``z -> [x_1, .., x_{n-1}, z]`` (plain)."""
    d = alg.dim
    ak = alg.alpha ** k if reading == TWISTED else Matrix.identity(d)
    cols = [alg.bracket.evaluate(list(X) + [ak.column(j)]) for j in range(1, d + 1)]
    return Matrix.from_columns(cols, nrows=d)


@dataclass(frozen=True)
class InnerGenerator:
    X: tuple
    map: Matrix
    reading: str
    verified: bool


@dataclass(frozen=True)
class InnerDerivations:
    k: int
    space: Subspace
    generators: tuple


@functools.lru_cache(maxsize=128)
def inner_derivations(alg: HomNLieAlgebra, k: int) -> InnerDerivations:
    """``Inn_k``: span of ``ad_{k-1,X}`` with each ``x_i`` from a basis of ``Fix(alpha)``.

    ``Inn_0`` is zero.  Every generator is checked to lie in ``Der_k``; the
    twisted reading is tried first and the plain one is used if it fails.
    """
    require_multiplicative(alg)
    d, n = alg.dim, alg.arity
    gens = []
    if k >= 1:
        fix = fixed_points(alg)
        for combo in combinations(range(fix.dim), n - 1):
            X = tuple(fix.basis[i] for i in combo)
            chosen = None
            for reading in (TWISTED, PLAIN):
                m = ad_map(alg, X, k - 1, reading)
                if is_derivation(alg, m, k):
                    chosen = InnerGenerator(X, m, reading, True)
                    break
            if chosen is None:
                chosen = InnerGenerator(X, ad_map(alg, X, k - 1, PLAIN), PLAIN, False)
            gens.append(chosen)
    space = Subspace(d * d, [g.map.flatten() for g in gens])
    return InnerDerivations(k, space, tuple(gens))


def _commutator(f: Matrix, g: Matrix) -> Matrix:
    return f @ g - g @ f


def derivation_lie_checks(alg: HomNLieAlgebra, ks=(0, 1, 2)) -> dict:
    """Graded closure of ``Der`` under commutators and the ideal property of ``Inn``.

    Keys: ``"bracket"`` (``[Der_k, Der_l]`` in ``Der_{k+l}``), ``"ideal"``
    (``[Der_k, Inn_l]`` in ``Inn_{k+l}``), ``"inner"`` (generators lie in their
    ``Der``), ``"identity"`` (``id`` in ``Der_0`` exactly when the bracket is zero).
    """
    require_multiplicative(alg)
    d = alg.dim
    out = {}
    bad = None
    for k in ks:
        for l in ks:
            target = derivation_space(alg, k + l)
            for u in derivation_space(alg, k).basis:
                for v in derivation_space(alg, l).basis:
                    c = _commutator(as_map(alg, u), as_map(alg, v))
                    if c.flatten() not in target:
                        bad = bad or (k, l, u, v)
    out["bracket"] = Check(bad is None, bad)

    bad = None
    for k in ks:
        for l in ks:
            target = inner_derivations(alg, k + l).space
            for u in derivation_space(alg, k).basis:
                for g in inner_derivations(alg, l).generators:
                    c = _commutator(as_map(alg, u), g.map)
                    if c.flatten() not in target:
                        bad = bad or (k, l, u, g.X)
    out["ideal"] = Check(bad is None, bad)

    bad = next(((k, g.X) for k in ks for g in inner_derivations(alg, k).generators if not g.verified), None)
    out["inner"] = Check(bad is None, bad)

    ident_in = Matrix.identity(d).flatten() in derivation_space(alg, 0)
    out["identity"] = Check(ident_in == alg.is_abelian(), ident_in)
    return out


def _require_derivation(alg: HomNLieAlgebra, f: Matrix, k: int):
    verdict = is_derivation(alg, f, k)
    if not verdict:
        raise PreconditionError(f"map is not an alpha^{k}-derivation", verdict.witness)


def trace_from_derivation(alg: HomNLieAlgebra, f, k: int, tau) -> Check:
    """For ``f`` in ``Der_k`` and a trace ``tau``, check that ``tau o f`` is a trace."""
    f = as_map(alg, f)
    _require_derivation(alg, f, k)
    tau = as_trace(tau)
    if not is_phi_trace(tau, alg):
        raise PreconditionError("tau is not a trace", tuple(tau.coefficients))
    return is_phi_trace(tau.compose(f), alg)


@dataclass(frozen=True)
class DerivationTransfer:
    ok: bool
    criterion: Check
    direct: Check

    def __bool__(self):
        return self.ok


def derivation_transfers(alg: HomNLieAlgebra, tau, f, k: int) -> DerivationTransfer:
    """Is ``f`` in ``Der_k(A)`` also in ``Der_k(A_tau)``?

    Computed twice: by the criterion ``alpha^k`` of the bracket induced by
    ``tau o f`` vanishing, and by the Leibniz rule on ``A_tau`` directly.
    The two must agree.
    """
    f = as_map(alg, f)
    _require_derivation(alg, f, k)
    tau = as_trace(tau)
    induced = induce_multiplicative(alg, tau)
    ak = alg.alpha ** k
    skewed = alternating_extension(alg.bracket, tau.compose(f))
    witness = next((key for key, v in skewed.items() if any(ak @ v)), None)
    criterion = Check(witness is None, witness)
    direct = is_derivation(induced, f, k)
    if criterion.ok != direct.ok:
        raise PostconditionError("criterion and direct Leibniz check disagree", (criterion, direct))
    return DerivationTransfer(direct.ok, criterion, direct)


def zero_map(d: int) -> Matrix:
    return Matrix.zeros(d, d)

