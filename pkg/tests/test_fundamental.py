from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nhomlie.algebra import HomNLieAlgebra
from nhomlie.corpus import example1, tau1, zero_bracket
from nhomlie.errors import DimensionError, PreconditionError
from nhomlie.fundamental import (
    alpha_bar,
    fundamental,
    fundamental_action,
    fundamental_basis,
    leibniz_bracket,
    wedge,
)
from nhomlie.induction import induce
from nhomlie.linalg import Matrix, unit_vector

from conftest import corpus_algebras
from oracles import matvec, wedge_oracle

small = st.fractions(min_value=-3, max_value=3, max_denominator=2)
ids = lambda x: x if isinstance(x, str) else ""  # noqa: E731


def basis_object(alg, key):
    keys = fundamental_basis(alg)
    return unit_vector(len(keys), keys.index(key) + 1)


def test_fundamental_basis_is_lexicographic():
    A = induce(example1(), tau1())
    assert fundamental_basis(A) == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    assert fundamental(A).dim == 6


def test_binary_case_reduces_to_bracket():
    A = example1()
    assert leibniz_bracket(A, unit_vector(4, 1), unit_vector(4, 2)) == (0, 0, 0, 2)


def test_action_on_induced_algebra():
    A = induce(example1(), tau1())
    assert fundamental_action(A, basis_object(A, (1, 2)), unit_vector(4, 3)) == (0, 0, 0, 2)


def test_zero_action_gives_zero_bracket():
    Z = zero_bracket(3, 3)
    X = basis_object(Z, (1, 2))
    assert not any(leibniz_bracket(Z, X, basis_object(Z, (2, 3))))
    assert not any(fundamental_action(Z, X, unit_vector(3, 1)))


def test_alpha_bar_of_e1_e3():
    A = induce(example1(), tau1())
    cols = A.alpha.columns()
    assert alpha_bar(A, basis_object(A, (1, 3))) == wedge_oracle([cols[0], cols[2]], 4)


@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=2, max_size=2))
def test_wedge_against_minors(vs):
    A = induce(example1(), tau1())
    assert wedge(A, vs) == wedge_oracle(vs, 4)


@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=3, max_size=3))
def test_action_of_pure_wedge_is_bracket(vs):
    A = induce(example1(), tau1())
    x1, x2, z = vs
    assert fundamental_action(A, wedge(A, [x1, x2]), z) == A.bracket.evaluate([x1, x2, z])


def test_wedge_needs_n_minus_1_vectors():
    with pytest.raises(DimensionError):
        wedge(example1(), [unit_vector(4, 1), unit_vector(4, 2)])


def test_non_multiplicative_rejected():
    D = Matrix([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 2]])
    alg = HomNLieAlgebra(dim=4, arity=2, bracket=example1().bracket, twists=(D,))
    with pytest.raises(PreconditionError):
        fundamental(alg)


@pytest.mark.parametrize("name,alg", corpus_algebras(), ids=ids)
def test_hom_leibniz_identity(name, alg):
    assert fundamental(alg).leibniz_defect() == []


@pytest.mark.parametrize("name,alg", [p for p in corpus_algebras() if p[1].arity == 3], ids=ids)
def test_leibniz_bracket_on_pure_wedges(name, alg):
    # [x1^x2, y1^y2] = [x1,x2,y1] ^ a y2 + a y1 ^ [x1,x2,y2]
    a = alg.alpha.rows
    d = alg.dim
    U = [unit_vector(d, i) for i in range(1, d + 1)]
    for xk, yk in combinations(list(combinations(range(d), 2)), 2):
        x = [U[i] for i in xk]
        y = [U[i] for i in yk]
        t1 = wedge_oracle([alg.bracket.evaluate(x + [y[0]]), matvec(a, y[1])], d)
        t2 = wedge_oracle([matvec(a, y[0]), alg.bracket.evaluate(x + [y[1]])], d)
        expected = tuple(Fraction(p + q) for p, q in zip(t1, t2))
        X = basis_object(alg, tuple(i + 1 for i in xk))
        Y = basis_object(alg, tuple(i + 1 for i in yk))
        assert leibniz_bracket(alg, X, Y) == expected
