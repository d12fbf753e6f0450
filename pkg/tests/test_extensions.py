from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nhomlie.algebra import hom_nambu_defect
from nhomlie.cohomology import scalar_Z2
from nhomlie.corpus import example1, example2, tau1, tau2, zero_bracket
from nhomlie.errors import DimensionError, NotACocycleError
from nhomlie.extensions import (
    central_extension,
    extend_trace,
    extended_bracket,
    extended_twist,
    induced_extension_check,
)
from nhomlie.induction import induce
from nhomlie.linalg import Matrix, unit_vector
from nhomlie.structure import center
from nhomlie.tensor import SkewTensor

from oracles import induced_value, units

small = st.fractions(min_value=-2, max_value=2, max_denominator=2)
CASES = [(example1(), tau1()), (example2(), tau2(2))]


def basis_cocycles():
    for alg, tau in CASES:
        for v in scalar_Z2(alg).basis:
            yield alg, tau, v


def test_trivial_extension():
    A = example1()
    ext = central_extension(A, SkewTensor.zero(2, 4))
    E = ext.extended
    assert E.dim == 5 and hom_nambu_defect(E) == []
    assert ext.central in center(E)
    assert ext.multiplicative
    assert E.bracket.stored((1, 2)) == (0, 0, 0, 2, 0)


def test_example1_phi12_extension():
    ext = central_extension(example1(), {(1, 2): 1})
    assert ext.extended.bracket.stored((1, 2)) == (0, 0, 0, 2, 1)
    assert ext.extended.bracket.stored((3, 4)) == (0, 3, 0, 0, 0)
    assert hom_nambu_defect(ext.extended) == []


def test_non_cocycle_rejected():
    with pytest.raises(NotACocycleError):
        central_extension(example1(), {(1, 4): 1})


def test_lambda_length_checked():
    with pytest.raises(DimensionError):
        central_extension(example1(), {(1, 2): 1}, lam=(1, 2, 3))


def test_extended_twist_layout():
    M = extended_twist(Matrix([[1, 2], [3, 4]]), (5, 6, 7))
    assert M == Matrix([[1, 2, 0], [3, 4, 0], [5, 6, 7]])


def test_extended_bracket_puts_omega_last():
    B = SkewTensor(2, 2, {(1, 2): (1, 0)}, 2)
    W = SkewTensor(2, 2, {(1, 2): 3})
    assert extended_bracket(B, W).stored((1, 2)) == (1, 0, 3)


def test_extend_trace():
    assert extend_trace((1, 2), 2).coefficients == (1, 2, 0)
    with pytest.raises(DimensionError):
        extend_trace((1, 2), 3)


@pytest.mark.parametrize("alg,tau,omega", list(basis_cocycles()))
@pytest.mark.parametrize("lam", [None, (1, 0, 1, 0, 2)])
def test_basis_cocycle_extensions_induce(alg, tau, omega, lam):
    ext = central_extension(alg, omega, lam)
    assert hom_nambu_defect(ext.extended) == []
    r = induced_extension_check(alg, tau, omega, lam)
    assert r.ok, r.witness
    assert hom_nambu_defect(r.induced_of_extension) == []
    assert hom_nambu_defect(r.extension_of_induced.extended) == []


@pytest.mark.parametrize("alg,tau,omega", list(basis_cocycles())[:3])
def test_induced_extension_against_defining_sum(alg, tau, omega):
    r = induced_extension_check(alg, tau, omega)
    E = central_extension(alg, omega).extended
    tau_c = tuple(tau.coefficients) + (0,)
    U = units(E.dim)
    right = r.extension_of_induced.extended.bracket
    for idx in product(range(1, E.dim + 1), repeat=alg.arity + 1):
        value = induced_value(E, tau_c, [U[i - 1] for i in idx])
        assert right.value_at(idx) == value
        if E.dim in idx:
            assert not any(value)


def test_zero_cocycle_gives_trivial_extension_of_induced():
    alg, tau = example2(), tau2(2)
    r = induced_extension_check(alg, tau, SkewTensor.zero(2, 4))
    induced = induce(alg, tau)
    assert r.ok
    assert r.extension_of_induced.extended.bracket == extended_bracket(induced.bracket, SkewTensor.zero(3, 4))


@given(st.lists(small, min_size=5, max_size=5))
@settings(max_examples=10)
def test_random_lambda_keeps_hom_nambu(lam):
    A = example1()
    omega = scalar_Z2(A).basis[-1]
    ext = central_extension(A, omega, lam)
    assert hom_nambu_defect(ext.extended) == []
    assert induced_extension_check(A, tau1(), omega, lam)


def test_zero_bracket_extension():
    Z = zero_bracket(3, 2)
    ext = central_extension(Z, {(1, 2): 1, (2, 3): -1})
    assert ext.extended.bracket.stored((1, 2)) == (0, 0, 0, 1)
    assert unit_vector(4, 4) in center(ext.extended)
