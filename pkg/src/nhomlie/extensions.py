"""One-dimensional central extensions by scalar 2-cocycles, and how they induce."""
from __future__ import annotations

from dataclasses import dataclass

from nhomlie.algebra import Check, HomNLieAlgebra, as_trace, hom_nambu_defect, is_multiplicative
from nhomlie.cohomology import is_scalar_cocycle, scalar_cochain
from nhomlie.errors import DimensionError, NotACocycleError, PostconditionError
from nhomlie.induction import alternating_extension, induce_multiplicative, induced_bracket
from nhomlie.linalg import Matrix, vector, zero_vector
from nhomlie.tensor import SkewTensor


@dataclass(frozen=True)
class CentralExtension:
    """``A + Kc`` with ``<x>_c = <x> + omega(x) c``, ``c`` central and ``alpha_c = alpha + lam(.) c``."""

    base: HomNLieAlgebra
    omega: SkewTensor
    lam: tuple
    extended: HomNLieAlgebra
    multiplicative: Check

    @property
    def central(self):
        """Coordinates of ``c`` (the last basis vector)."""
        d = self.extended.dim
        return tuple(1 if i == d - 1 else 0 for i in range(d))


def extended_twist(alpha: Matrix, lam) -> Matrix:
    """``alpha`` in the top-left block, ``lam`` as the last row."""
    d = alpha.nrows
    rows = [tuple(r) + (0,) for r in alpha.rows]
    rows.append(tuple(lam))
    return Matrix(rows, ncols=d + 1)


def extended_bracket(bracket: SkewTensor, omega: SkewTensor) -> SkewTensor:
    """Bracket on ``A + Kc``: old value in the first ``d`` slots, ``omega`` in the last."""
    d = bracket.dim
    values = {}
    for key, v in bracket.items():
        values[key] = tuple(v) + (omega.stored(key),)
    for key, w in omega.items():
        if key not in values:
            values[key] = zero_vector(d) + (w,)
    return SkewTensor(bracket.arity, d + 1, values, d + 1)


def _lambda(alg: HomNLieAlgebra, lam) -> tuple:
    lam = zero_vector(alg.dim + 1) if lam is None else vector(lam)
    if len(lam) != alg.dim + 1:
        raise DimensionError(f"lambda needs {alg.dim + 1} coefficients, got {len(lam)}")
    return lam


def central_extension(alg: HomNLieAlgebra, omega, lam=None, name: str = "") -> CentralExtension:
    """Central extension of a multiplicative algebra by a scalar 2-cocycle ``omega``.

    ``lam`` is a linear form on ``A + Kc`` (``d + 1`` coefficients, default zero).
    The extension is checked against the Hom-Nambu identity; whether
    ``alpha_c`` is multiplicative is recorded but not required.
    """
    omega = scalar_cochain(alg, omega)
    if (omega.arity, omega.dim) != (alg.arity, alg.dim) or not omega.is_scalar:
        raise DimensionError("omega must be a scalar cochain of the algebra's arity and dimension")
    verdict = is_scalar_cocycle(alg, omega)
    if not verdict:
        raise NotACocycleError("omega is not a scalar 2-cocycle", verdict.witness)
    lam = _lambda(alg, lam)
    alpha_c = extended_twist(alg.alpha, lam)
    ext = HomNLieAlgebra(dim=alg.dim + 1, arity=alg.arity, bracket=extended_bracket(alg.bracket, omega),
                         twists=(alpha_c,) * (alg.arity - 1),
                         name=name or (f"{alg.name}_ext" if alg.name else ""),
                         provenance="central extension")
    defects = hom_nambu_defect(ext)
    if defects:
        raise PostconditionError("extension fails the Hom-Nambu identity", defects[0])
    return CentralExtension(alg, omega, lam, ext, is_multiplicative(ext))


def extend_trace(tau, d: int):
    """``tau`` on ``A + Kc`` with ``tau(c) = 0``."""
    tau = as_trace(tau)
    if tau.dim != d:
        raise DimensionError(f"trace of length {tau.dim} for dimension {d}")
    return as_trace(tuple(tau.coefficients) + (0,))


@dataclass(frozen=True)
class ExtensionInduction:
    ok: bool
    induced_of_extension: HomNLieAlgebra
    extension_of_induced: CentralExtension
    witness: object = None

    def __bool__(self):
        return self.ok


def induced_extension_check(alg: HomNLieAlgebra, tau, omega, lam=None) -> ExtensionInduction:
    """Compare two ways of reaching an (n+1)-ary algebra on ``A + Kc``.

    Left: extend ``A`` by ``omega``, then induce with ``tau`` extended by
    ``tau(c) = 0``.  Right: induce ``A`` with ``tau``, then extend by
    ``omega_tau``.  Brackets are compared on every basis tuple, together with
    the twist maps.
    """
    tau = as_trace(tau)
    ext = central_extension(alg, omega, lam)
    tau_c = extend_trace(tau, alg.dim)
    # alpha_c need not be multiplicative, so the bracket is built directly
    left_bracket = induced_bracket(ext.extended, tau_c)
    left = HomNLieAlgebra(dim=alg.dim + 1, arity=alg.arity + 1, bracket=left_bracket,
                          twists=(ext.extended.twists[0],) * alg.arity,
                          name=f"{ext.extended.name}_tau" if ext.extended.name else "")
    induced = induce_multiplicative(alg, tau)
    omega_tau = alternating_extension(ext.omega, tau)
    right = central_extension(induced, omega_tau, ext.lam)
    witness = None
    if left.bracket != right.extended.bracket:
        diff = left.bracket - right.extended.bracket
        witness = ("bracket", diff.support()[0])
    elif left.twists != right.extended.twists:
        witness = ("twist",)
    return ExtensionInduction(witness is None, left, right, witness)
