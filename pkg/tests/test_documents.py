import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nhomlie.corpus import example1, example2, zero_bracket
from nhomlie.documents import (
    algebra_to_document,
    cocycle_to_document,
    dumps,
    emit_algebra,
    load_json,
    parse_algebra,
    parse_cocycle,
    parse_lambda,
    parse_trace,
    trace_to_document,
)
from nhomlie.errors import ParseError
from nhomlie.induction import induce
from nhomlie.linalg import Matrix
from nhomlie.tensor import SkewTensor

from conftest import corpus_algebras

ids = lambda x: x if isinstance(x, str) else ""  # noqa: E731


def doc(**overrides):
    base = {"name": "t", "dimension": 2, "arity": 2, "multiplicative": True,
            "alpha": [["1", "0"], ["0", "1"]], "bracket": {"1,2": {"1": "1"}}}
    base.update(overrides)
    return base


@pytest.mark.parametrize("name,alg", corpus_algebras(), ids=ids)
def test_round_trip(name, alg):
    back = parse_algebra(emit_algebra(alg))
    assert back == alg
    assert back.twists == alg.twists and back.bracket == alg.bracket


def test_round_trip_with_distinct_twists():
    alg = zero_bracket(3, 3, twists=(Matrix.identity(3), Matrix.zeros(3, 3)))
    text = emit_algebra(alg)
    assert "twists" in json.loads(text)
    assert parse_algebra(text) == alg


def test_example1_document(data_dir):
    alg = parse_algebra(data_dir / "example1.json")
    assert alg == example1()
    assert (alg.dim, alg.arity) == (4, 2)
    assert parse_algebra(str(data_dir / "example2.json")) == example2()


def test_empty_bracket_is_zero():
    alg = parse_algebra(doc(bracket={}))
    assert alg.is_abelian()


def test_matrix_convention():
    alg = parse_algebra(doc(alpha=[["1", "2"], ["3", "4"]], multiplicative=False))
    assert alg.alpha.column(1) == (1, 3)


def test_integer_coefficients_accepted():
    alg = parse_algebra(doc(bracket={"1,2": {"2": 3}}))
    assert alg.bracket.stored((1, 2)) == (0, 3)


@pytest.mark.parametrize("bad,where", [
    ({"bracket": {"2,1": {"1": "1"}}}, "bracket"),
    ({"bracket": {"1,1": {"1": "1"}}}, "bracket"),
    ({"bracket": {"1,3": {"1": "1"}}}, "bracket"),
    ({"bracket": {"1,2": {"3": "1"}}}, "bracket"),
    ({"bracket": {"1,2": {"1": "1.5"}}}, "bracket"),
    ({"bracket": {"1,2": {"1": 1.5}}}, "bracket"),
    ({"bracket": {"1": {"1": "1"}}}, "bracket"),
    ({"alpha": [["1", "0"]]}, "alpha"),
    ({"alpha": [["1", "0"], ["0"]]}, "alpha[1]"),
    ({"dimension": "2"}, "dimension"),
    ({"arity": 1}, "arity"),
    ({"multiplicative": "yes"}, "multiplicative"),
    ({"extra": 1}, "unknown"),
])
def test_malformed_documents(bad, where):
    with pytest.raises(ParseError) as info:
        parse_algebra(doc(**bad))
    assert where in str(info.value)


def test_alpha_or_twists_exactly_one():
    d = doc()
    d["twists"] = [[["1", "0"], ["0", "1"]]]
    with pytest.raises(ParseError):
        parse_algebra(d)
    del d["alpha"], d["twists"]
    with pytest.raises(ParseError):
        parse_algebra(d)


def test_duplicate_keys_rejected():
    text = '{"name": "a", "name": "b"}'
    with pytest.raises(ParseError) as info:
        load_json(text)
    assert "duplicate" in str(info.value)


def test_syntax_error_has_line_and_column():
    with pytest.raises(ParseError) as info:
        load_json('{\n  "a": ,\n}', "x.json")
    assert info.value.location == "x.json:2:8"


def test_missing_file(tmp_path):
    with pytest.raises(ParseError):
        parse_algebra(tmp_path / "nope.json")


def test_trace_documents():
    tau, alpha_n = parse_trace({"trace": ["1", "0", "-1/2"]}, 3)
    assert tau.coefficients[2] == -0.5 and alpha_n is None
    back = parse_trace(trace_to_document(tau, Matrix.identity(3)), 3)
    assert back[0] == tau and back[1] == Matrix.identity(3)
    with pytest.raises(ParseError):
        parse_trace({"trace": ["1"]}, 3)
    with pytest.raises(ParseError):
        parse_trace({"coefficients": ["1"]}, 1)


def test_cocycle_documents():
    phi = parse_cocycle({"values": {"1,2": "1", "3,4": "-2"}}, 4, 2)
    assert phi == SkewTensor(2, 4, {(1, 2): 1, (3, 4): -2})
    assert parse_cocycle(cocycle_to_document(phi), 4, 2) == phi
    with pytest.raises(ParseError):
        parse_cocycle({"values": {"2,1": "1"}}, 4, 2)
    with pytest.raises(ParseError):
        parse_cocycle({"values": {}, "dimension": 3}, 4, 2)


def test_lambda_documents():
    assert parse_lambda({"lambda": ["0", "1", "0"]}, 2) == (0, 1, 0)
    with pytest.raises(ParseError):
        parse_lambda({"lambda": ["0", "1"]}, 2)


def test_dumps_keeps_rows_on_one_line():
    text = dumps(algebra_to_document(example1()))
    assert '["0", "0", "1", "0"]' in text
    assert text.endswith("\n")


@given(st.integers(1, 4), st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=7), min_size=16,
                                   max_size=16))
def test_round_trip_random_twists(d, entries):
    M = Matrix([entries[i * d:(i + 1) * d] for i in range(d)])
    alg = zero_bracket(d, 2, twists=(M,))
    assert parse_algebra(emit_algebra(alg)).alpha == M


def test_induced_algebra_round_trip():
    alg = induce(example1(), (1, 0, 1, 0))
    assert parse_algebra(algebra_to_document(alg)) == alg
