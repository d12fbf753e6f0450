"""Induced (n+1)-Hom-Lie algebras from trace forms, Yau twisting, and transfer checks."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from nhomlie.algebra import (
    Check,
    HomNLieAlgebra,
    TraceForm,
    _as_matrix,
    as_trace,
    hom_nambu_defect,
    is_ideal,
    is_morphism,
    is_multiplicative,
    is_subalgebra,
    is_weak_morphism,
    require_multiplicative,
    require_valid,
)
from nhomlie.errors import DimensionError, NotATraceError, PostconditionError, PreconditionError
from nhomlie.linalg import Matrix, Subspace, kernel_basis, unit_vector, vadd, vector, vscale
from nhomlie.tensor import SkewTensor, increasing_tuples

GENERAL = "general theorem"
MULTIPLICATIVE = "multiplicative theorem"


def _check_dim(tau: TraceForm, alg: HomNLieAlgebra):
    if tau.dim != alg.dim:
        raise DimensionError(f"trace form has length {tau.dim}, algebra has dimension {alg.dim}")


def is_phi_trace(tau, alg: HomNLieAlgebra) -> Check:
    """``tau`` vanishes on every bracket of basis vectors."""
    tau = as_trace(tau)
    _check_dim(tau, alg)
    for key, value in alg.bracket.items():
        if tau(value):
            return Check(False, key)
    return Check(True)


def is_alpha_invariant(tau, alpha: Matrix) -> bool:
    """``tau o alpha == tau``."""
    tau = as_trace(tau)
    return tau.compose(alpha) == tau


def alternating_extension(tensor: SkewTensor, tau) -> SkewTensor:
    """``sum_k (-1)^(k-1) tau(x_k) T(x_1, .., ^x_k, .., x_{m+1})`` as a skew (m+1)-tensor.

    Works for scalar and vector valued tensors alike; both the induced bracket
    and induced cochains are of this shape.
    """
    tau = as_trace(tau)
    m, d = tensor.arity, tensor.dim
    values = {}
    for key in increasing_tuples(d, m + 1):
        acc = tensor.zero_value()
        for k in range(m + 1):
            t = tau.at(key[k])
            if not t:
                continue
            sub = tensor.stored(key[:k] + key[k + 1:])
            coeff = t if k % 2 == 0 else -t
            acc = acc + coeff * sub if tensor.is_scalar else vadd(acc, vscale(coeff, sub))
        values[key] = acc
    return SkewTensor(m + 1, d, values, tensor.width)


def induced_bracket(alg: HomNLieAlgebra, tau) -> SkewTensor:
    """The (n+1)-ary bracket ``phi_tau``; ``tau`` must be a trace of the bracket."""
    tau = as_trace(tau)
    verdict = is_phi_trace(tau, alg)
    if not verdict:
        raise NotATraceError(f"tau does not vanish on the bracket at {verdict.witness}", verdict.witness)
    return alternating_extension(alg.bracket, tau)


def check_general_conditions(alg: HomNLieAlgebra, tau, alpha_n) -> Check:
    """Both compatibility conditions between ``tau`` and the twists ``alpha_1..alpha_n``.

    Bilinear in ``(x, y)``, so basis vectors suffice.  Witness is
    ``(condition, i, j, x, y)`` with 1-based indices; ``j`` is ``None`` for the
    scalar condition.
    """
    tau = as_trace(tau)
    _check_dim(tau, alg)
    twists = list(alg.twists) + [_as_matrix(alpha_n)]
    d = alg.dim
    # tau(alpha_i e_x) for all i, x
    ta = [[tau(t.column(x)) for x in range(1, d + 1)] for t in twists]
    for i in range(len(twists)):
        for x in range(d):
            for y in range(d):
                if ta[i][x] * tau.at(y + 1) != tau.at(x + 1) * ta[i][y]:
                    return Check(False, ("scalar", i + 1, None, x + 1, y + 1))
    for i, ai in enumerate(twists):
        for j, aj in enumerate(twists):
            for x in range(1, d + 1):
                aix = ai.column(x)
                for y in range(1, d + 1):
                    lhs = vscale(ta[i][x - 1], aj.column(y))
                    rhs = vscale(ta[j][y - 1], aix)
                    if lhs != rhs:
                        return Check(False, ("vector", i + 1, j + 1, x, y))
    return Check(True)


def _assert_hom_nambu(out: HomNLieAlgebra):
    defects = hom_nambu_defect(out)
    if defects:
        raise PostconditionError("induced algebra fails the Hom-Nambu identity", defects[0])


def induce_general(alg: HomNLieAlgebra, tau, alpha_n) -> HomNLieAlgebra:
    """Induced algebra with twists ``alpha_1, .., alpha_{n-1}, alpha_n``."""
    require_valid(alg)
    tau = as_trace(tau)
    alpha_n = _as_matrix(alpha_n)
    if alpha_n.shape != (alg.dim, alg.dim):
        raise DimensionError("alpha_n has the wrong shape")
    bracket = induced_bracket(alg, tau)
    cond = check_general_conditions(alg, tau, alpha_n)
    if not cond:
        raise PreconditionError(f"twist compatibility condition fails at {cond.witness}", cond.witness)
    out = HomNLieAlgebra(dim=alg.dim, arity=alg.arity + 1, bracket=bracket,
                         twists=alg.twists + (alpha_n,), name=_induced_name(alg),
                         provenance=GENERAL)
    _assert_hom_nambu(out)
    return out


def induce_multiplicative(alg: HomNLieAlgebra, tau) -> HomNLieAlgebra:
    """Induced algebra of a multiplicative algebra along an ``alpha``-invariant trace."""
    require_multiplicative(alg)
    tau = as_trace(tau)
    bracket = induced_bracket(alg, tau)
    if not is_alpha_invariant(tau, alg.alpha):
        raise PreconditionError("tau o alpha differs from tau",
                                tuple(tau.compose(alg.alpha).coefficients))
    out = HomNLieAlgebra(dim=alg.dim, arity=alg.arity + 1, bracket=bracket,
                         twists=(alg.alpha,) * alg.arity, name=_induced_name(alg),
                         multiplicative_declared=True, provenance=MULTIPLICATIVE)
    _assert_hom_nambu(out)
    mult = is_multiplicative(out)
    if not mult:
        raise PostconditionError("induced algebra is not multiplicative", mult.witness)
    return out


def induce(alg: HomNLieAlgebra, tau, alpha_n=None) -> HomNLieAlgebra:
    """Induce by whichever theorem applies, preferring the multiplicative one.

    The output's ``provenance`` names the theorem used.
    """
    tau = as_trace(tau)
    _check_dim(tau, alg)
    alpha_n = None if alpha_n is None else _as_matrix(alpha_n)
    if alg.uniform_twist and (alpha_n is None or alpha_n == alg.twists[0]):
        if is_multiplicative(alg) and is_alpha_invariant(tau, alg.alpha):
            return induce_multiplicative(alg, tau)
    if alpha_n is None:
        raise PreconditionError("multiplicative construction does not apply and no alpha_n was given")
    return induce_general(alg, tau, alpha_n)


def _induced_name(alg: HomNLieAlgebra) -> str:
    return f"{alg.name}_tau" if alg.name else ""


def _kernel_of_rows(rows: list, ncols: int) -> Subspace:
    return kernel_basis(Matrix(rows, ncols=ncols))


def solve_trace_space(alg: HomNLieAlgebra, require_alpha_compatible: bool = False) -> Subspace:
    """All trace forms, optionally also satisfying ``tau o alpha = tau``, as coefficient vectors."""
    d = alg.dim
    rows = [value for _, value in alg.bracket.items()]
    if require_alpha_compatible:
        require_multiplicative(alg)
        a = alg.alpha
        # (tau o alpha - tau)(e_j) = sum_i t_i a_ij - t_j
        for j in range(1, d + 1):
            rows.append(tuple(a.rows[i][j - 1] - (1 if i == j - 1 else 0) for i in range(d)))
    return _kernel_of_rows(rows, d)


def twist(alg: HomNLieAlgebra, beta) -> HomNLieAlgebra:
    """Yau twist: bracket ``beta o [..]`` and twists ``beta o alpha_i``."""
    beta = _as_matrix(beta)
    weak = is_weak_morphism(beta, alg, alg)
    if not weak:
        raise PreconditionError(f"beta is not a weak morphism (fails at {weak.witness})", weak.witness)
    commutes = all(beta @ t == t @ beta for t in alg.twists)
    mult = alg.multiplicative_declared and commutes
    out = HomNLieAlgebra(dim=alg.dim, arity=alg.arity, bracket=alg.bracket.compose(beta),
                         twists=tuple(beta @ t for t in alg.twists),
                         name=f"{alg.name}_beta" if alg.name else "", multiplicative_declared=mult,
                         provenance="twist")
    if mult:
        verdict = is_multiplicative(out)
        if not verdict:
            raise PostconditionError("twisted algebra is not multiplicative", verdict.witness)
    return out


def check_twist_induce_commute(nlie: HomNLieAlgebra, alpha, tau) -> Check:
    """Twist-then-induce and induce-then-twist give the same bracket.

    ``nlie`` must have identity twists.  Witness is the first differing key.
    """
    d = nlie.dim
    if any(t != Matrix.identity(d) for t in nlie.twists):
        raise PreconditionError("the input algebra must have identity twists")
    alpha = _as_matrix(alpha)
    tau = as_trace(tau)
    first = induce_multiplicative(twist(nlie, alpha), tau)
    second = twist(induce_multiplicative(nlie, tau), alpha)
    if first.bracket == second.bracket:
        return Check(True)
    diff = first.bracket - second.bracket
    return Check(False, diff.support()[0])


def _require_closed(alpha_n: Matrix | None, S: Subspace, label: str):
    if alpha_n is not None and any(alpha_n @ b not in S for b in S.basis):
        raise PreconditionError(f"{label} is not invariant under alpha_n")


def subalgebra_transfers(alg: HomNLieAlgebra, tau, S: Subspace, alpha_n=None) -> Check:
    """Direct subalgebra check of ``S`` inside the induced algebra."""
    alpha_n = None if alpha_n is None else _as_matrix(alpha_n)
    pre = is_subalgebra(alg, S)
    if not pre:
        raise PreconditionError("S is not a subalgebra of the input algebra", pre.witness)
    _require_closed(alpha_n, S, "S")
    return is_subalgebra(induce(alg, tau, alpha_n), S)


@dataclass(frozen=True)
class IdealTransfer:
    criterion: bool
    derived_inside: bool
    in_kernel: bool
    direct: Check

    @property
    def ok(self) -> bool:
        return self.direct.ok

    def __bool__(self):
        return self.ok


def ideal_in_induced(alg: HomNLieAlgebra, tau, J: Subspace, alpha_n=None) -> IdealTransfer:
    """Whether ``J`` stays an ideal of the induced algebra, by criterion and by direct check.

    The criterion is: the derived ideal lies in ``J``, or ``tau`` kills ``J``.
    A disagreement with the direct check raises :class:`PostconditionError`.
    """
    tau = as_trace(tau)
    alpha_n = None if alpha_n is None else _as_matrix(alpha_n)
    pre = is_ideal(alg, J)
    if not pre:
        raise PreconditionError("J is not an ideal of the input algebra", pre.witness)
    _require_closed(alpha_n, J, "J")
    induced = induce(alg, tau, alpha_n)
    derived = Subspace(alg.dim, [v for _, v in alg.bracket.items()])
    derived_inside = derived <= J
    in_kernel = all(tau(b) == 0 for b in J.basis)
    criterion = derived_inside or in_kernel
    direct = is_ideal(induced, J)
    if criterion != direct.ok:
        raise PostconditionError("ideal criterion disagrees with the direct check", direct.witness)
    return IdealTransfer(criterion, derived_inside, in_kernel, direct)


def lemma_double_sum(psi: Callable[[Sequence], object], phi: Callable[[Sequence], object],
                     tau, xs: Sequence, ys: Sequence):
    """``sum_k sum_{j != k} (-1)^(j-1) tau(y_j) tau(y_k) psi(y with y_j removed, y_k -> phi(x))``.

    ``psi`` and ``phi`` are n-ary, ``xs`` has n entries and ``ys`` has n+1.
    The sum vanishes identically for skew ``psi``.
    """
    tau = as_trace(tau)
    xs = [vector(x) for x in xs]
    ys = [vector(y) for y in ys]
    if len(ys) != len(xs) + 1:
        raise DimensionError("need one more y than x")
    inner = phi(xs)
    total = None
    for k in range(len(ys)):
        for j in range(len(ys)):
            if j == k:
                continue
            coeff = tau(ys[j]) * tau(ys[k]) * (1 if j % 2 == 0 else -1)
            args = [inner if m == k else ys[m] for m in range(len(ys)) if m != j]
            term = _scale(coeff, psi(args))
            total = term if total is None else _add(total, term)
    return total


def _scale(c, value):
    return vscale(c, value) if isinstance(value, tuple) else c * value


def _add(u, v):
    return vadd(u, v) if isinstance(u, tuple) else u + v


def morphism_transfers(f, A: HomNLieAlgebra, B: HomNLieAlgebra, tau, sigma,
                       alpha_n=None, beta_n=None) -> Check:
    """Morphism check between the induced algebras, after verifying the hypotheses.

    Hypotheses: ``f`` is a morphism ``A -> B``, ``sigma o f = tau`` and
    ``f o alpha_n = beta_n o f`` (the last is implied in the multiplicative case).
    """
    f = _as_matrix(f)
    tau, sigma = as_trace(tau), as_trace(sigma)
    pre = is_morphism(f, A, B)
    if not pre:
        raise PreconditionError("f is not a morphism of the input algebras", pre.witness)
    if sigma.compose(f) != tau:
        raise PreconditionError("sigma o f differs from tau")
    A_tau = induce(A, tau, alpha_n)
    B_sigma = induce(B, sigma, beta_n)
    an, bn = A_tau.twists[-1], B_sigma.twists[-1]
    if f @ an != bn @ f:
        raise PreconditionError("f does not intertwine the added twists")
    return is_morphism(f, A_tau, B_sigma)


def trace_from_coordinates(coeffs: Sequence) -> TraceForm:
    return TraceForm(tuple(coeffs))


def unit_trace(d: int, i: int) -> TraceForm:
    """Coordinate form ``x -> x_i``."""
    return TraceForm(unit_vector(d, i))
