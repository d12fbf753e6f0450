"""Derived and central descending series, center, and comparison of A with A_tau."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from nhomlie.algebra import Check, HomNLieAlgebra, as_trace, is_ideal
from nhomlie.errors import PreconditionError
from nhomlie.induction import induce
from nhomlie.linalg import Matrix, Subspace, Vector, kernel_basis, solve, zero_vector
from nhomlie.tensor import increasing_tuples


@dataclass(frozen=True)
class SeriesReport:
    kind: str
    terms: tuple
    stabilized: bool
    class_index: Optional[int]

    def term(self, r: int) -> Subspace:
        """The r-th term, continuing past the computed range once stable."""
        if r < len(self.terms):
            return self.terms[r]
        if self.stabilized:
            return self.terms[-1]
        raise IndexError(f"term {r} was not computed and the series had not stabilized")


def _derived_step(alg: HomNLieAlgebra, D: Subspace) -> Subspace:
    vecs = [alg.bracket.evaluate([D.basis[i] for i in combo])
            for combo in combinations(range(D.dim), alg.arity)]
    return Subspace(alg.dim, [tuple(v) for v in vecs])


def _central_step(alg: HomNLieAlgebra, C: Subspace, I: Subspace) -> Subspace:
    # [C, I, .., I]: the slot holding C is fixed, I-slots need only increasing tuples
    vecs = []
    for c in C.basis:
        for combo in combinations(range(I.dim), alg.arity - 1):
            vecs.append(alg.bracket.evaluate([c] + [I.basis[i] for i in combo]))
    return Subspace(alg.dim, vecs)


def _series(alg: HomNLieAlgebra, I: Subspace | None, max_steps: int | None, kind: str) -> SeriesReport:
    I = Subspace.full(alg.dim) if I is None else I
    verdict = is_ideal(alg, I)
    if not verdict:
        raise PreconditionError("series base is not an ideal", verdict.witness)
    steps = alg.dim + 2 if max_steps is None else max_steps
    terms = [I]
    stabilized = False
    for _ in range(steps):
        prev = terms[-1]
        nxt = _derived_step(alg, prev) if kind == "derived" else _central_step(alg, prev, I)
        terms.append(nxt)
        if nxt == prev:
            stabilized = True
            break
    class_index = next((r for r, t in enumerate(terms) if t.is_zero()), None)
    return SeriesReport(kind, tuple(terms), stabilized, class_index)


def derived_series(alg: HomNLieAlgebra, I: Subspace | None = None, max_steps: int | None = None) -> SeriesReport:
    """``D^0 = I``, ``D^{r+1} = [D^r, .., D^r]``."""
    return _series(alg, I, max_steps, "derived")


def central_series(alg: HomNLieAlgebra, I: Subspace | None = None, max_steps: int | None = None) -> SeriesReport:
    """``C^0 = I``, ``C^{r+1} = [C^r, I, .., I]``."""
    return _series(alg, I, max_steps, "central")


def adjoint_stack(alg: HomNLieAlgebra) -> Matrix:
    """Rows of ``z -> [e_K, z]`` for every increasing (n-1)-tuple ``K``, stacked."""
    d = alg.dim
    rows = []
    for key in increasing_tuples(d, alg.arity - 1):
        cols = [alg.bracket.value_at(key + (j,)) for j in range(1, d + 1)]
        rows.extend(tuple(col[i] for col in cols) for i in range(d))
    return Matrix(rows, ncols=d)


def center(alg: HomNLieAlgebra) -> Subspace:
    return kernel_basis(adjoint_stack(alg))


def solvability_class(alg: HomNLieAlgebra) -> Optional[int]:
    """Least r with ``D^r(A) = 0``, or ``None`` if the series stabilizes nonzero."""
    return derived_series(alg).class_index


def nilpotency_class(alg: HomNLieAlgebra) -> Optional[int]:
    return central_series(alg).class_index


def is_surjective(M: Matrix) -> bool:
    return M.rank() == M.nrows


def find_unit_like(alg: HomNLieAlgebra, tau, alpha_n=None) -> Optional[Vector]:
    """Some ``u`` with ``[u, x_1, .., x_n]_tau = [x_1, .., x_n]`` for all x, or ``None``."""
    induced = induce(alg, tau, alpha_n)
    d, n = alg.dim, alg.arity
    keys = increasing_tuples(d, n)
    columns = []
    for j in range(1, d + 1):
        col = []
        for key in keys:
            col.extend(induced.bracket.value_at((j,) + key))
        columns.append(col)
    rhs = []
    for key in keys:
        rhs.extend(alg.bracket.stored(key))
    if not keys:
        return zero_vector(d)
    return solve(Matrix.from_columns(columns, nrows=len(rhs)), rhs)


@dataclass(frozen=True)
class StructureComparison:
    induced: HomNLieAlgebra
    central_A: SeriesReport
    central_induced: SeriesReport
    derived_A: SeriesReport
    derived_induced: SeriesReport
    center_A: Subspace
    center_induced: Subspace
    unit: Optional[Vector]
    verdicts: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())


def compare_structures(alg: HomNLieAlgebra, tau, alpha_n=None, max_steps: int | None = None) -> StructureComparison:
    """Machine-checked comparison of the series and centers of ``A`` and ``A_tau``.

    Verdict keys:
      ``i``   ``C^p(A_tau)`` lies in ``C^p(A)`` for every computed p;
      ``ii``  equality for every p when a unit-like element exists (else vacuous);
      ``iii`` ``{c in Z(A) : tau(c) = 0}`` lies in ``Z(A_tau)``;
      ``iv``  ``A`` non-abelian and ``tau(Z(A)) != 0`` force ``A_tau`` non-abelian;
      ``v``   nilpotency class of ``A_tau`` is at most that of ``A``, equal given a unit;
      ``derived`` ``D^1(A_tau)`` lies in ``D^1(A)`` and ``D^2(A_tau) = 0``.
    """
    tau = as_trace(tau)
    induced = induce(alg, tau, alpha_n)
    steps = alg.dim + 2 if max_steps is None else max_steps
    cA = central_series(alg, max_steps=steps)
    cT = central_series(induced, max_steps=steps)
    dA = derived_series(alg, max_steps=steps)
    dT = derived_series(induced, max_steps=steps)
    zA, zT = center(alg), center(induced)
    unit = find_unit_like(alg, tau, alpha_n)
    horizon = max(len(cA.terms), len(cT.terms))
    verdicts = {}

    bad = next((p for p in range(horizon) if not cT.term(p) <= cA.term(p)), None)
    verdicts["i"] = Check(bad is None, bad)

    if unit is None:
        verdicts["ii"] = Check(True, "vacuous: no unit-like element")
    else:
        bad = next((p for p in range(1, horizon) if cT.term(p) != cA.term(p)), None)
        verdicts["ii"] = Check(bad is None, bad)

    ker_tau = kernel_basis(Matrix([tau.coefficients], ncols=alg.dim))
    killed = zA.intersect(ker_tau)
    verdicts["iii"] = Check(killed <= zT, killed)

    hypothesis = not alg.is_abelian() and any(tau(c) for c in zA.basis)
    if hypothesis:
        verdicts["iv"] = Check(not induced.is_abelian(), "hypothesis holds")
    else:
        verdicts["iv"] = Check(True, "vacuous: hypothesis fails")

    pA, pT = cA.class_index, cT.class_index
    v_ok = True
    if pA is not None:
        v_ok = pT is not None and pT <= pA
    if unit is not None:
        v_ok = v_ok and pA == pT
    verdicts["v"] = Check(v_ok, (pA, pT))

    d_ok = dT.term(1) <= dA.term(1) and dT.term(2).is_zero()
    verdicts["derived"] = Check(d_ok, (dT.term(1), dT.term(2)))
    return StructureComparison(induced, cA, cT, dA, dT, zA, zT, unit, verdicts)
