from fractions import Fraction
from itertools import permutations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy.combinatorics import Permutation

from nhomlie.errors import DimensionError
from nhomlie.linalg import Matrix, unit_vector
from nhomlie.tensor import SkewTensor, increasing_tuples, sort_with_sign

from conftest import corpus_algebras
from oracles import dense_of

small = st.fractions(min_value=-3, max_value=3, max_denominator=3)


def test_increasing_tuples_lexicographic():
    assert increasing_tuples(4, 2) == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    assert increasing_tuples(3, 0) == [()]


@pytest.mark.parametrize("idx,sign,key", [((1, 2, 3), 1, (1, 2, 3)), ((2, 1, 3), -1, (1, 2, 3)),
                                          ((3, 1, 2), 1, (1, 2, 3)), ((2, 2, 1), 0, (1, 2, 2))])
def test_sort_with_sign(idx, sign, key):
    assert sort_with_sign(idx) == (sign, key)


@given(st.permutations([1, 2, 3, 4, 5]))
def test_sort_sign_matches_permutation_parity(p):
    sign, key = sort_with_sign(p)
    assert key == (1, 2, 3, 4, 5)
    assert sign == Permutation([i - 1 for i in p]).signature()


def test_repeated_index_is_zero():
    T = SkewTensor(2, 3, {(1, 2): (1, 0, 0)}, 3)
    assert T.value_at((2, 2)) == (0, 0, 0)


def test_transposition_flips_sign():
    T = SkewTensor(2, 3, {(1, 2): (0, 1, 0)}, 3)
    assert T.value_at((2, 1)) == (0, -1, 0)


@pytest.mark.parametrize("values", [{(2, 1): (1, 0)}, {(1, 1): (1, 0)}, {(1, 3): (1, 0)}])
def test_bad_keys_rejected(values):
    with pytest.raises(DimensionError):
        SkewTensor(2, 2, values, 2)


def test_value_width_checked():
    with pytest.raises(DimensionError):
        SkewTensor(2, 2, {(1, 2): (1, 0, 0)}, 2)


def test_zero_values_not_stored():
    T = SkewTensor(2, 2, {(1, 2): (0, 0)}, 2)
    assert T.is_zero() and T.support() == ()


def test_coordinates_round_trip():
    T = SkewTensor(2, 3, {(1, 2): 1, (2, 3): Fraction(-1, 2)})
    assert SkewTensor.from_coordinates(2, 3, T.coordinates()) == T
    V = SkewTensor(2, 3, {(1, 3): (1, 2, 3)}, 3)
    assert SkewTensor.from_coordinates(2, 3, V.coordinates(), 3) == V


def test_arithmetic():
    S = SkewTensor(2, 2, {(1, 2): 3})
    T = SkewTensor(2, 2, {(1, 2): 1})
    assert (S - T).stored((1, 2)) == 2
    assert (S + -S).is_zero()
    assert S.scale(Fraction(1, 3)) == T


def test_compose_and_apply_form():
    T = SkewTensor(2, 2, {(1, 2): (1, 2)}, 2)
    M = Matrix([[0, 1], [1, 0]])
    assert T.compose(M).stored((1, 2)) == (2, 1)
    assert T.apply_form((1, 1)).stored((1, 2)) == 3


@pytest.mark.parametrize("name,alg", corpus_algebras(), ids=lambda x: x if isinstance(x, str) else "")
def test_storage_matches_dense_oracle_on_basis(name, alg):
    dense = dense_of(alg.bracket)
    units = [unit_vector(alg.dim, i) for i in range(1, alg.dim + 1)]
    for idx in product(range(1, alg.dim + 1), repeat=alg.arity):
        args = [units[i - 1] for i in idx]
        assert alg.bracket.evaluate(args) == dense.evaluate(args) == alg.bracket.value_at(idx)


def vectors_of(dim, count):
    return st.lists(st.lists(small, min_size=dim, max_size=dim), min_size=count, max_size=count)


@given(st.data())
def test_evaluate_matches_dense_on_random_vectors(data):
    dim = data.draw(st.integers(2, 4))
    arity = data.draw(st.integers(1, dim))
    width = data.draw(st.sampled_from([None, 2]))
    keys = increasing_tuples(dim, arity)
    if width is None:
        vals = data.draw(st.lists(small, min_size=len(keys), max_size=len(keys)))
    else:
        vals = data.draw(st.lists(st.lists(small, min_size=2, max_size=2), min_size=len(keys), max_size=len(keys)))
    T = SkewTensor(arity, dim, dict(zip(keys, vals)), width)
    args = data.draw(vectors_of(dim, arity))
    assert T.evaluate(args) == dense_of(T).evaluate(args)


@given(st.data())
def test_permutation_law(data):
    dim = 4
    T = SkewTensor(3, dim, {k: i + 1 for i, k in enumerate(increasing_tuples(dim, 3))})
    args = data.draw(vectors_of(dim, 3))
    base = T.evaluate(args)
    for p in permutations(range(3)):
        sign = Permutation(list(p)).signature()
        assert T.evaluate([args[i] for i in p]) == sign * base
