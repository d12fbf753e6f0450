"""Scalar and adjoint cochain complexes in degrees 1 and 2, and their behaviour under induction.

Degree-2 cochains are fully skew n-linear maps, stored as :class:`SkewTensor`;
their coordinates run over strictly increasing n-tuples (and, for adjoint
cochains, over value components within each tuple).  Degree-1 scalar cochains
are linear forms given by coefficient vectors.

The scalar ``d^1`` is ``omega -> omega o [..]`` with a positive sign.  The
general-degree evaluators at the end follow the alternating formula, which
gives the opposite sign in degree 1; kernels and images do not depend on it.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from nhomlie.algebra import Check, HomNLieAlgebra, as_trace, require_multiplicative
from nhomlie.corpus import example2, tau2
from nhomlie.errors import NotACocycleError, PostconditionError, PreconditionError
from nhomlie.fundamental import fundamental
from nhomlie.induction import alternating_extension, induce, solve_trace_space
from nhomlie.linalg import Matrix, Subspace, kernel_basis, solve, unit_vector, vadd, vscale, vsub
from nhomlie.tensor import SkewTensor, increasing_tuples, sort_with_sign


def cochain_keys(alg: HomNLieAlgebra) -> list[tuple[int, ...]]:
    return increasing_tuples(alg.dim, alg.arity)


def linear_operator(fn: Callable[[int], Sequence], n_unknowns: int, n_outputs: int) -> Matrix:
    """Matrix whose column j is ``fn(j)``, the image of the j-th unknown basis element."""
    cols = [tuple(fn(j)) for j in range(n_unknowns)]
    return Matrix.from_columns(cols, nrows=n_outputs) if cols else Matrix.zeros(n_outputs, 0)


def _scalar_unit(alg: HomNLieAlgebra, j: int) -> SkewTensor:
    keys = cochain_keys(alg)
    return SkewTensor(alg.arity, alg.dim, {keys[j]: 1})


def _adjoint_unit(alg: HomNLieAlgebra, j: int) -> SkewTensor:
    keys = cochain_keys(alg)
    key, comp = divmod(j, alg.dim)
    return SkewTensor(alg.arity, alg.dim, {keys[key]: unit_vector(alg.dim, comp + 1)}, alg.dim)


# -- scalar complex ----------------------------------------------------------

def scalar_d1(alg: HomNLieAlgebra, omega: Sequence) -> SkewTensor:
    """``(d^1 omega)(x_1, .., x_n) = omega([x_1, .., x_n])``."""
    require_multiplicative(alg)
    return alg.bracket.apply_form(tuple(omega))


def scalar_d1_matrix(alg: HomNLieAlgebra) -> Matrix:
    keys = cochain_keys(alg)
    return linear_operator(lambda j: scalar_d1(alg, unit_vector(alg.dim, j + 1)).coordinates(),
                           alg.dim, len(keys))


def scalar_d2_value(alg: HomNLieAlgebra, phi: SkewTensor, X, Y, z) -> Fraction:
    """``-phi([X,Y]_a, a z) - phi(a Y, X.z) + phi(a X, Y.z)``."""
    F = fundamental(alg)
    z = tuple(z)
    return (-F.pair(phi, F.leibniz(X, Y), F.alpha @ z)
            - F.pair(phi, F.alpha_bar(Y), F.act(X, z))
            + F.pair(phi, F.alpha_bar(X), F.act(Y, z)))


def _basis_instances(alg: HomNLieAlgebra):
    F = fundamental(alg)
    units = [unit_vector(F.dim, i + 1) for i in range(F.dim)]
    zs = [unit_vector(alg.dim, m) for m in range(1, alg.dim + 1)]
    for X in units:
        for Y in units:
            for z in zs:
                yield X, Y, z


def scalar_d2(alg: HomNLieAlgebra, phi: SkewTensor, X=None, Y=None, z=None):
    """Value at ``(X, Y, z)``, or the tuple of values on every basis instance."""
    require_multiplicative(alg)
    if X is not None:
        return scalar_d2_value(alg, phi, X, Y, z)
    return tuple(scalar_d2_value(alg, phi, *inst) for inst in _basis_instances(alg))


def _pair_row(F, W: Sequence, v: Sequence, index: dict, scale=1) -> dict:
    """Coefficients of ``phi(W, v)`` on the unknowns ``phi(e_T)``, T increasing."""
    row: dict = {}
    for c, key in zip(W, F.keys):
        if not c:
            continue
        for j, vj in enumerate(v, start=1):
            if not vj:
                continue
            sign, T = sort_with_sign(key + (j,))
            if sign:
                t = index[T]
                row[t] = row.get(t, 0) + sign * scale * c * vj
    return row


def _instance_terms(F, X, Y, z):
    """The three ``(sign, W, v)`` pairings shared by both degree-2 coboundaries."""
    return ((-1, F.leibniz(X, Y), F.alpha @ z),
            (-1, F.alpha_bar(Y), F.act(X, z)),
            (1, F.alpha_bar(X), F.act(Y, z)))


@functools.lru_cache(maxsize=128)
def scalar_d2_matrix(alg: HomNLieAlgebra) -> Matrix:
    """Operator of :func:`scalar_d2`, assembled directly from its linearity in ``phi``."""
    require_multiplicative(alg)
    F = fundamental(alg)
    keys = cochain_keys(alg)
    index = {k: i for i, k in enumerate(keys)}
    rows = []
    for X, Y, z in _basis_instances(alg):
        row = [Fraction(0)] * len(keys)
        for sign, W, v in _instance_terms(F, X, Y, z):
            for t, c in _pair_row(F, W, v, index, sign).items():
                row[t] += c
        rows.append(row)
    return Matrix(rows, ncols=len(keys))


@dataclass(frozen=True)
class Cohomology2:
    """Degree-2 cocycles, coboundaries and the dimension of their quotient."""

    Z2: Subspace
    B2: Optional[Subspace]
    h2_dim: Optional[int]
    keys: tuple
    note: str = ""


def scalar_Z2(alg: HomNLieAlgebra) -> Subspace:
    return kernel_basis(scalar_d2_matrix(alg))


def scalar_B2(alg: HomNLieAlgebra) -> Subspace:
    return Subspace(len(cochain_keys(alg)), scalar_d1_matrix(alg).columns())


def scalar_cohomology2(alg: HomNLieAlgebra) -> Cohomology2:
    Z, B = scalar_Z2(alg), scalar_B2(alg)
    if not B <= Z:
        raise PostconditionError("scalar coboundaries are not all cocycles for this algebra")
    return Cohomology2(Z, B, Z.dim - B.dim, tuple(cochain_keys(alg)))


def scalar_cohomology2_induced(alg: HomNLieAlgebra, tau, alpha_n=None) -> Cohomology2:
    return scalar_cohomology2(induce(alg, tau, alpha_n))


def complex_check(alg: HomNLieAlgebra) -> Check:
    """``d^2 o d^1 = 0`` as an operator; witness is the offending 1-cochain index."""
    product = scalar_d2_matrix(alg) @ scalar_d1_matrix(alg)
    for j, col in enumerate(product.columns()):
        if any(col):
            return Check(False, j + 1)
    return Check(True)


def scalar_cochain(alg: HomNLieAlgebra, values) -> SkewTensor:
    """Scalar n-cochain from ``{increasing key: value}`` or a coordinate sequence."""
    if isinstance(values, SkewTensor):
        return values
    if isinstance(values, dict):
        return SkewTensor(alg.arity, alg.dim, values)
    return SkewTensor.from_coordinates(alg.arity, alg.dim, tuple(values))


def is_scalar_cocycle(alg: HomNLieAlgebra, phi: SkewTensor) -> Check:
    values = scalar_d2_matrix(alg) @ phi.coordinates()
    bad = next((i for i, v in enumerate(values) if v), None)
    return Check(bad is None, bad)


def induced_scalar_cocycle(alg: HomNLieAlgebra, tau, phi, alpha_n=None) -> SkewTensor:
    """``phi_tau``, the alternating extension of a 2-cocycle along ``tau``.

    The result is re-verified as a 2-cocycle of the induced algebra.
    """
    tau = as_trace(tau)
    phi = scalar_cochain(alg, phi)
    verdict = is_scalar_cocycle(alg, phi)
    if not verdict:
        raise NotACocycleError("phi is not a scalar 2-cocycle", verdict.witness)
    induced = induce(alg, tau, alpha_n)
    out = alternating_extension(phi, tau)
    post = is_scalar_cocycle(induced, out)
    if not post:
        raise PostconditionError("induced cochain is not a 2-cocycle of the induced algebra", post.witness)
    return out


def induced_cocycle_image(alg: HomNLieAlgebra, tau, alpha_n=None) -> Subspace:
    """Span of ``phi_tau`` over a basis of ``Z^2(A)``, in coordinates of the induced cochains."""
    Z = scalar_Z2(alg)
    keys = increasing_tuples(alg.dim, alg.arity + 1)
    images = [induced_scalar_cocycle(alg, tau, SkewTensor.from_coordinates(alg.arity, alg.dim, v), alpha_n)
              .coordinates() for v in Z.basis]
    return Subspace(len(keys), images)


def induced_cocycle_image_vs_constraint(a=2, b=1, d=5, c=0) -> Check:
    """For the second reference family with ``e = 1 - a``: the image of ``phi -> phi_tau``
    equals ``{psi in Z^2(A_tau) : psi(e2,e3,e4) = (a-1) psi(e1,e2,e4)}``.
    """
    a = Fraction(a)
    alg = example2(a, b, c, d, 1 - a)
    tau = tau2(a)
    image = induced_cocycle_image(alg, tau)
    induced = induce(alg, tau)
    keys = increasing_tuples(4, 3)
    row = [Fraction(0)] * len(keys)
    row[keys.index((2, 3, 4))] = Fraction(1)
    row[keys.index((1, 2, 4))] = -(a - 1)
    constrained = scalar_Z2(induced).intersect(kernel_basis(Matrix([row])))
    return Check(image == constrained, (image, constrained))


# -- transfer results for the scalar complex ---------------------------------

def coboundary_transfer_check(alg: HomNLieAlgebra, tau, omega, alpha_n=None) -> Check:
    """``d^1_tau omega`` equals the alternating extension of ``d^1 omega`` along ``tau``."""
    induced = induce(alg, tau, alpha_n)
    lhs = scalar_d1(induced, omega)
    rhs = alternating_extension(scalar_d1(alg, omega), tau)
    if lhs == rhs:
        return Check(True)
    return Check(False, (lhs - rhs).support()[0])


@dataclass(frozen=True)
class ClassTransfer:
    ok: bool
    preimage: Optional[tuple]
    base_preimage: tuple

    def __bool__(self):
        return self.ok


def class_transfer_check(alg: HomNLieAlgebra, tau, phi1, phi2, alpha_n=None) -> ClassTransfer:
    """Cohomologous 2-cocycles induce cohomologous 2-cocycles.

    ``preimage`` is a 1-cochain ``w`` of the induced algebra with
    ``d^1_tau w = psi_2 - psi_1``, found by solving.
    """
    phi1, phi2 = scalar_cochain(alg, phi1), scalar_cochain(alg, phi2)
    base = solve(scalar_d1_matrix(alg), (phi2 - phi1).coordinates())
    if base is None:
        raise PreconditionError("phi2 - phi1 is not a coboundary")
    psi1 = induced_scalar_cocycle(alg, tau, phi1, alpha_n)
    psi2 = induced_scalar_cocycle(alg, tau, phi2, alpha_n)
    induced = induce(alg, tau, alpha_n)
    pre = solve(scalar_d1_matrix(induced), (psi2 - psi1).coordinates())
    return ClassTransfer(pre is not None, pre, base)


def one_cocycles(alg: HomNLieAlgebra) -> Subspace:
    return kernel_basis(scalar_d1_matrix(alg))


def one_cocycles_are_traces(alg: HomNLieAlgebra, tau=None, alpha_n=None) -> Check:
    """``ker d^1`` equals the trace space; with ``tau``, traces are also 1-cocycles of ``A_tau``."""
    Z1 = one_cocycles(alg)
    traces = solve_trace_space(alg)
    if Z1 != traces:
        return Check(False, ("kernel differs from traces", Z1, traces))
    if tau is not None:
        induced = induce(alg, tau, alpha_n)
        Z1_induced = one_cocycles(induced)
        for t in traces.basis:
            if t not in Z1_induced:
                return Check(False, ("trace is not a 1-cocycle of the induced algebra", t))
    return Check(True)


# -- adjoint complex ---------------------------------------------------------

def adjoint_d2_value(alg: HomNLieAlgebra, phi: SkewTensor, X, Y, z):
    """Degree-2 adjoint coboundary at ``(X, Y, z)``.

    ``-phi([X,Y]_a, a z) - phi(a Y, X.z) + phi(a X, Y.z)
      - (phi(X, .) ._a Y) . a z - a(Y) . phi(X, z) + a(X) . phi(Y, z)``
    """
    F = fundamental(alg)
    z = tuple(z)
    az = F.alpha @ z
    out = vscale(-1, F.pair(phi, F.leibniz(X, Y), az))
    out = vsub(out, F.pair(phi, F.alpha_bar(Y), F.act(X, z)))
    out = vadd(out, F.pair(phi, F.alpha_bar(X), F.act(Y, z)))
    out = vsub(out, F.act(F.dot_alpha(phi, X, Y), az))
    out = vsub(out, F.act(F.alpha_bar(Y), F.pair(phi, X, z)))
    out = vadd(out, F.act(F.alpha_bar(X), F.pair(phi, Y, z)))
    return out


def adjoint_d2(alg: HomNLieAlgebra, phi: SkewTensor, X=None, Y=None, z=None):
    """Value at ``(X, Y, z)``, or all basis instances flattened."""
    require_multiplicative(alg)
    if X is not None:
        return adjoint_d2_value(alg, phi, X, Y, z)
    out = []
    for inst in _basis_instances(alg):
        out.extend(adjoint_d2_value(alg, phi, *inst))
    return tuple(out)


def adjoint_unknowns(alg: HomNLieAlgebra) -> int:
    return len(cochain_keys(alg)) * alg.dim


def equivariance_defect(alg: HomNLieAlgebra, phi: SkewTensor) -> tuple:
    """``alpha(phi(e_K)) - phi(alpha e_K)`` over increasing keys, flattened."""
    a = alg.alpha
    cols = a.columns()
    out = []
    for key in cochain_keys(alg):
        out.extend(vsub(a @ phi.stored(key), phi.evaluate([cols[i - 1] for i in key])))
    return tuple(out)


@functools.lru_cache(maxsize=128)
def adjoint_d2_matrix(alg: HomNLieAlgebra) -> Matrix:
    """Operator of :func:`adjoint_d2`; unknown ``(T, c)`` sits at ``index(T) * d + c``."""
    require_multiplicative(alg)
    F = fundamental(alg)
    d = alg.dim
    keys = cochain_keys(alg)
    index = {k: i for i, k in enumerate(keys)}
    N = len(keys) * d
    units = [unit_vector(d, c) for c in range(1, d + 1)]
    ad_bar = [F.ad(F.alpha_bar(unit_vector(F.dim, i + 1))).rows for i in range(F.dim)]
    rows = []
    for X, Y, z in _basis_instances(alg):
        ki, li = X.index(1), Y.index(1)
        block = [[Fraction(0)] * N for _ in range(d)]
        # value terms: phi(W, v) lands in component c of the unknown (T, c)
        for sign, W, v in _instance_terms(F, X, Y, z):
            for t, coeff in _pair_row(F, W, v, index, sign).items():
                for c in range(d):
                    block[c][t * d + c] += coeff
        # -(phi(X, .) ._a Y) . a z
        az = F.alpha @ z
        ys = [units[j - 1] for j in F.keys[li]]
        for i in range(alg.arity - 1):
            prow = _pair_row(F, X, ys[i], index)
            if not prow:
                continue
            for c in range(d):
                args = [F.alpha @ y for y in ys]
                args[i] = units[c]
                w = F.act(F.wedge(args), az)
                if not any(w):
                    continue
                for t, coeff in prow.items():
                    for comp in range(d):
                        if w[comp]:
                            block[comp][t * d + c] -= coeff * w[comp]
        # -a(Y) . phi(X, z) + a(X) . phi(Y, z)
        for sign, M, W in ((-1, ad_bar[li], X), (1, ad_bar[ki], Y)):
            for t, coeff in _pair_row(F, W, z, index, sign).items():
                for c in range(d):
                    for comp in range(d):
                        if M[comp][c]:
                            block[comp][t * d + c] += coeff * M[comp][c]
        rows.extend(block)
    return Matrix(rows, ncols=N)


def equivariance_matrix(alg: HomNLieAlgebra) -> Matrix:
    require_multiplicative(alg)
    n = adjoint_unknowns(alg)
    return linear_operator(lambda j: equivariance_defect(alg, _adjoint_unit(alg, j)), n, n)


def adjoint_cochain(alg: HomNLieAlgebra, values) -> SkewTensor:
    if isinstance(values, SkewTensor):
        return values
    if isinstance(values, dict):
        return SkewTensor(alg.arity, alg.dim, values, alg.dim)
    return SkewTensor.from_coordinates(alg.arity, alg.dim, tuple(values), alg.dim)


def adjoint_Z2(alg: HomNLieAlgebra, tau=None) -> Subspace:
    """Equivariant adjoint 2-cocycles; with ``tau``, only those with ``tau o phi = 0``."""
    rows = list(equivariance_matrix(alg).rows) + list(adjoint_d2_matrix(alg).rows)
    if tau is not None:
        tau = as_trace(tau)
        d = alg.dim
        for k in range(len(cochain_keys(alg))):
            row = [Fraction(0)] * adjoint_unknowns(alg)
            row[k * d:(k + 1) * d] = tau.coefficients
            rows.append(row)
    return kernel_basis(Matrix(rows, ncols=adjoint_unknowns(alg)))


def is_adjoint_cocycle(alg: HomNLieAlgebra, phi: SkewTensor) -> Check:
    eq = equivariance_defect(alg, phi)
    if any(eq):
        return Check(False, ("equivariance", next(i for i, v in enumerate(eq) if v)))
    values = adjoint_d2_matrix(alg) @ phi.coordinates()
    bad = next((i for i, v in enumerate(values) if v), None)
    return Check(bad is None, None if bad is None else ("d2", bad))


def adjoint_d1(alg: HomNLieAlgebra, f: Matrix) -> SkewTensor:
    """Degree-1 adjoint coboundary from the alternating formula at p = 1.

    ``(d^1 f)(X, z) = -f(X.z) + X.f(z) + sum_i [a x_1, .., f x_i, .., a x_{n-1}, z]``,
    tabulated on increasing n-tuples ``(X, z)``.
    """
    require_multiplicative(alg)
    a = alg.alpha
    d, n = alg.dim, alg.arity
    values = {}
    for key in cochain_keys(alg):
        xs = [unit_vector(d, i) for i in key[:-1]]
        z = unit_vector(d, key[-1])
        val = vsub(alg.bracket.evaluate(xs + [f @ z]), f @ alg.bracket.stored(key))
        for i in range(n - 1):
            args = [a @ x for x in xs]
            args[i] = f @ xs[i]
            val = vadd(val, alg.bracket.evaluate(args + [z]))
        values[key] = val
    return SkewTensor(n, d, values, d)


def adjoint_cohomology2(alg: HomNLieAlgebra) -> Cohomology2:
    """``Z^2_ad``; coboundaries come from :func:`adjoint_d1` on equivariant maps.

    When those coboundaries are not all cocycles the degree-1 formula does not
    close up for this algebra, and ``B2``/``h2_dim`` are reported as ``None``.
    """
    Z = adjoint_Z2(alg)
    d = alg.dim
    a = alg.alpha
    # equivariant 1-cochains: f a = a f, as flattened matrices
    comm = linear_operator(lambda j: (Matrix.unflatten(unit_vector(d * d, j + 1), d, d) @ a
                                      - a @ Matrix.unflatten(unit_vector(d * d, j + 1), d, d)).flatten(),
                           d * d, d * d)
    equivariant = kernel_basis(comm)
    B = Subspace(adjoint_unknowns(alg),
                 [adjoint_d1(alg, Matrix.unflatten(v, d, d)).coordinates() for v in equivariant.basis])
    keys = tuple(cochain_keys(alg))
    if B <= Z:
        return Cohomology2(Z, B, Z.dim - B.dim, keys)
    return Cohomology2(Z, None, None, keys, note="degree-1 coboundaries are not 2-cocycles here")


def induced_adjoint_cocycle(alg: HomNLieAlgebra, tau, phi, alpha_n=None) -> SkewTensor:
    """Alternating extension of an adjoint 2-cocycle with ``tau o phi = 0``, re-verified."""
    tau = as_trace(tau)
    phi = adjoint_cochain(alg, phi)
    for key, value in phi.items():
        if tau(value):
            raise PreconditionError("tau o phi is not zero", key)
    verdict = is_adjoint_cocycle(alg, phi)
    if not verdict:
        raise NotACocycleError("phi is not an adjoint 2-cocycle", verdict.witness)
    induced = induce(alg, tau, alpha_n)
    out = alternating_extension(phi, tau)
    post = is_adjoint_cocycle(induced, out)
    if not post:
        raise PostconditionError("induced cochain is not an adjoint 2-cocycle", post.witness)
    return out


# -- general degree evaluators -----------------------------------------------

def scalar_coboundary(alg: HomNLieAlgebra, phi: Callable, p: int) -> Callable:
    """``d^p phi`` for a cochain given as ``phi(Xs, z)`` with ``Xs`` a list of fundamental objects.

    Returns a callable taking ``(Xs, z)`` with ``len(Xs) == p``.
    """
    F = fundamental(alg)

    def d(Xs, z):
        Xs = [tuple(X) for X in Xs]
        z = tuple(z)
        aX = [F.alpha_bar(X) for X in Xs]
        total = Fraction(0)
        for j in range(p):
            for k in range(j + 1, p):
                args = [aX[m] for m in range(p) if m != j]
                args[k - 1] = F.leibniz(Xs[j], Xs[k])
                total += (-1) ** (j + 1) * phi(args, F.alpha @ z)
        for j in range(p):
            args = [aX[m] for m in range(p) if m != j]
            total += (-1) ** (j + 1) * phi(args, F.act(Xs[j], z))
        return total

    return d


def adjoint_coboundary(alg: HomNLieAlgebra, phi: Callable, p: int) -> Callable:
    """Adjoint ``d^p phi`` (p >= 1) for ``phi(Xs, z) -> vector``."""
    F = fundamental(alg)
    a = alg.alpha
    ap = a ** (p - 1)
    bar_p = F.alpha_bar_matrix() ** (p - 1)

    def d(Xs, z):
        Xs = [tuple(X) for X in Xs]
        z = tuple(z)
        aX = [F.alpha_bar(X) for X in Xs]
        total = tuple(Fraction(0) for _ in range(alg.dim))
        for j in range(p):
            for k in range(j + 1, p):
                args = [aX[m] for m in range(p) if m != j]
                args[k - 1] = F.leibniz(Xs[j], Xs[k])
                total = vadd(total, vscale((-1) ** (j + 1), phi(args, a @ z)))
        for j in range(p):
            args = [aX[m] for m in range(p) if m != j]
            total = vadd(total, vscale((-1) ** (j + 1), phi(args, F.act(Xs[j], z))))
        for j in range(p):
            rest = [Xs[m] for m in range(p) if m != j]
            total = vadd(total, vscale((-1) ** j, F.act(bar_p @ Xs[j], phi(rest, z))))
        # (phi(X_1..X_{p-1}, .) ._a X_p) . a^{p-1}(z)
        head, last = Xs[:-1], Xs[-1]
        dot = F.zero()
        for li, b in enumerate(last):
            if not b:
                continue
            ys = [unit_vector(alg.dim, j) for j in F.keys[li]]
            for i in range(alg.arity - 1):
                args = [a @ y for y in ys]
                args[i] = phi(head, ys[i])
                dot = vadd(dot, vscale(b, F.wedge(args)))
        total = vadd(total, vscale((-1) ** (p - 1), F.act(dot, ap @ z)))
        return total

    return d


def tensor_as_cochain(alg: HomNLieAlgebra, phi: SkewTensor) -> Callable:
    """View an n-ary skew tensor as a degree-2 cochain ``phi([X], z)``, or a map as degree 1."""
    F = fundamental(alg)
    return lambda Xs, z: F.pair(phi, Xs[0], z)
