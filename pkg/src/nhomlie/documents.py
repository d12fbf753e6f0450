"""JSON documents for algebras, trace forms, cochains and extension data.

An algebra document looks like::

    {
      "name": "A1",
      "dimension": 4,
      "arity": 2,
      "multiplicative": true,
      "alpha": [["0", "0", "1", "0"], ...],
      "bracket": {"1,2": {"4": "2"}, "3,4": {"2": "3"}}
    }

Matrices are lists of rows; column ``j`` holds the image of ``e_j``.  Instead
of ``alpha`` a document may give ``twists``, a list of ``arity - 1`` matrices.
Bracket keys are comma-joined strictly increasing 1-based indices, values are
sparse ``{index: coefficient}`` records, and missing entries are zero.
Coefficients are strings like ``"-3/4"`` (plain JSON integers are accepted).
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from nhomlie.algebra import HomNLieAlgebra, TraceForm, as_trace
from nhomlie.errors import DimensionError, ParseError
from nhomlie.linalg import Matrix, format_rational, parse_rational
from nhomlie.tensor import SkewTensor

ALGEBRA_FIELDS = {"name", "dimension", "arity", "multiplicative", "alpha", "twists", "bracket", "provenance"}


def _pairs_no_duplicates(pairs):
    seen = {}
    for k, v in pairs:
        if k in seen:
            raise ParseError(f"duplicate key {k!r}")
        seen[k] = v
    return seen


def load_json(text: str, source: str = "<input>"):
    """``json.loads`` that rejects duplicate keys and reports line and column."""
    try:
        return json.loads(text, object_pairs_hook=_pairs_no_duplicates)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"{source}:{exc.lineno}:{exc.colno}") from None
    except ParseError as exc:
        raise ParseError(str(exc), source) from None


def _read(source) -> tuple[object, str]:
    if isinstance(source, dict):
        return source, "<document>"
    if isinstance(source, Path) or (isinstance(source, str) and not source.lstrip().startswith("{")):
        path = Path(source)
        try:
            text = path.read_text()
        except OSError as exc:
            raise ParseError(f"cannot read file: {exc.strerror}", str(path)) from None
        return load_json(text, str(path)), str(path)
    return load_json(source), "<text>"


def _rational(value, where: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ParseError(f"expected a rational string, got {value!r}", where)
    if isinstance(value, int):
        return Fraction(value)
    try:
        return parse_rational(value)
    except ValueError as exc:
        raise ParseError(str(exc), where) from None


def _integer(doc: dict, field: str, where: str, minimum: int = 0) -> int:
    value = doc.get(field)
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"'{field}' must be an integer", f"{where}.{field}")
    if value < minimum:
        raise ParseError(f"'{field}' must be at least {minimum}", f"{where}.{field}")
    return value


def _matrix(value, rows: int, cols: int, where: str) -> Matrix:
    if not isinstance(value, list) or len(value) != rows:
        raise ParseError(f"expected {rows} rows", where)
    out = []
    for i, row in enumerate(value):
        if not isinstance(row, list) or len(row) != cols:
            raise ParseError(f"expected {cols} entries", f"{where}[{i}]")
        out.append([_rational(x, f"{where}[{i}][{j}]") for j, x in enumerate(row)])
    return Matrix(out, ncols=cols)


def _vector(value, length: int, where: str) -> tuple:
    if not isinstance(value, list) or len(value) != length:
        raise ParseError(f"expected a list of {length} coefficients", where)
    return tuple(_rational(x, f"{where}[{i}]") for i, x in enumerate(value))


def _index_key(text: str, arity: int, dim: int, where: str) -> tuple[int, ...]:
    parts = text.split(",")
    try:
        key = tuple(int(p.strip()) for p in parts)
    except ValueError:
        raise ParseError(f"key {text!r} is not a list of indices", where) from None
    if len(key) != arity:
        raise ParseError(f"key {text!r} needs {arity} indices", where)
    if any(i < 1 or i > dim for i in key):
        raise ParseError(f"key {text!r} has an index outside 1..{dim}", where)
    if any(a >= b for a, b in zip(key, key[1:])):
        raise ParseError(f"key {text!r} is not strictly increasing", where)
    return key


def _bracket(value, arity: int, dim: int, where: str) -> SkewTensor:
    if not isinstance(value, dict):
        raise ParseError("bracket must be an object", where)
    values = {}
    for text, record in value.items():
        here = f"{where}[{text!r}]"
        key = _index_key(text, arity, dim, here)
        if not isinstance(record, dict):
            raise ParseError("expected {index: coefficient}", here)
        v = [Fraction(0)] * dim
        for comp, coeff in record.items():
            try:
                k = int(comp)
            except ValueError:
                raise ParseError(f"component {comp!r} is not an index", here) from None
            if not 1 <= k <= dim:
                raise ParseError(f"component {k} outside 1..{dim}", here)
            v[k - 1] = _rational(coeff, f"{here}[{comp!r}]")
        values[key] = v
    return SkewTensor(arity, dim, values, dim)


def algebra_from_document(doc, where: str = "<document>") -> HomNLieAlgebra:
    if not isinstance(doc, dict):
        raise ParseError("algebra document must be an object", where)
    unknown = set(doc) - ALGEBRA_FIELDS
    if unknown:
        raise ParseError(f"unknown fields {sorted(unknown)}", where)
    dim = _integer(doc, "dimension", where)
    arity = _integer(doc, "arity", where, minimum=2)
    mult = doc.get("multiplicative", False)
    if not isinstance(mult, bool):
        raise ParseError("'multiplicative' must be true or false", f"{where}.multiplicative")
    if ("alpha" in doc) == ("twists" in doc):
        raise ParseError("give exactly one of 'alpha' and 'twists'", where)
    if "alpha" in doc:
        twists = (_matrix(doc["alpha"], dim, dim, f"{where}.alpha"),) * (arity - 1)
    else:
        tw = doc["twists"]
        if not isinstance(tw, list) or len(tw) != arity - 1:
            raise ParseError(f"'twists' must list {arity - 1} matrices", f"{where}.twists")
        twists = tuple(_matrix(t, dim, dim, f"{where}.twists[{i}]") for i, t in enumerate(tw))
    bracket = _bracket(doc.get("bracket", {}), arity, dim, f"{where}.bracket")
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise ParseError("'name' must be a string", f"{where}.name")
    try:
        return HomNLieAlgebra(dim=dim, arity=arity, bracket=bracket, twists=twists, name=name,
                              multiplicative_declared=mult, provenance=str(doc.get("provenance", "")))
    except DimensionError as exc:
        raise ParseError(str(exc), where) from None


def parse_algebra(source) -> HomNLieAlgebra:
    """Algebra from a path, JSON text or an already-decoded dict.

    Only the shape is checked here; the Hom-Nambu identity is left to
    :func:`nhomlie.algebra.validate`.
    """
    doc, where = _read(source)
    return algebra_from_document(doc, where)


def _rows(M: Matrix) -> list:
    return M.to_lists()


def algebra_to_document(alg: HomNLieAlgebra) -> dict:
    doc = {"name": alg.name, "dimension": alg.dim, "arity": alg.arity,
           "multiplicative": alg.multiplicative_declared}
    if alg.uniform_twist:
        doc["alpha"] = _rows(alg.twists[0])
    else:
        doc["twists"] = [_rows(t) for t in alg.twists]
    doc["bracket"] = {
        ",".join(map(str, key)): {str(k + 1): format_rational(c) for k, c in enumerate(v) if c}
        for key, v in alg.bracket.items()
    }
    if alg.provenance:
        doc["provenance"] = alg.provenance
    return doc


_FLAT_LIST = re.compile(r'\[\s+("[^"\n]*"(?:,\s+"[^"\n]*")*)\s+\]')


def dumps(doc) -> str:
    """Indented JSON with innermost string lists (matrix rows, vectors) kept on one line."""
    text = json.dumps(doc, indent=2)
    text = _FLAT_LIST.sub(lambda m: "[" + re.sub(r",\s+", ", ", m.group(1)) + "]", text)
    return text + "\n"


def emit_algebra(alg: HomNLieAlgebra) -> str:
    return dumps(algebra_to_document(alg))


# -- auxiliary documents -----------------------------------------------------

def parse_trace(source, dim: int) -> tuple[TraceForm, Matrix | None]:
    """``{"trace": [...], "alpha_n": matrix?}``; ``alpha_n`` is the extra twist for the general construction."""
    doc, where = _read(source)
    if not isinstance(doc, dict) or "trace" not in doc:
        raise ParseError("trace document needs a 'trace' field", where)
    unknown = set(doc) - {"trace", "alpha_n", "name"}
    if unknown:
        raise ParseError(f"unknown fields {sorted(unknown)}", where)
    tau = TraceForm(_vector(doc["trace"], dim, f"{where}.trace"))
    alpha_n = _matrix(doc["alpha_n"], dim, dim, f"{where}.alpha_n") if "alpha_n" in doc else None
    return tau, alpha_n


def trace_to_document(tau, alpha_n: Matrix | None = None) -> dict:
    doc = {"trace": [format_rational(x) for x in as_trace(tau).coefficients]}
    if alpha_n is not None:
        doc["alpha_n"] = _rows(alpha_n)
    return doc


def parse_cocycle(source, dim: int, arity: int) -> SkewTensor:
    """Scalar cochain ``{"values": {"i,j,..": "q"}}`` on increasing keys."""
    doc, where = _read(source)
    if not isinstance(doc, dict) or not isinstance(doc.get("values"), dict):
        raise ParseError("cocycle document needs a 'values' object", where)
    for field, expected in (("dimension", dim), ("arity", arity)):
        if field in doc and doc[field] != expected:
            raise ParseError(f"'{field}' is {doc[field]}, algebra has {expected}", f"{where}.{field}")
    unknown = set(doc) - {"values", "dimension", "arity", "name"}
    if unknown:
        raise ParseError(f"unknown fields {sorted(unknown)}", where)
    values = {}
    for text, coeff in doc["values"].items():
        here = f"{where}.values[{text!r}]"
        values[_index_key(text, arity, dim, here)] = _rational(coeff, here)
    return SkewTensor(arity, dim, values)


def cocycle_to_document(phi: SkewTensor) -> dict:
    return {"dimension": phi.dim, "arity": phi.arity,
            "values": {",".join(map(str, k)): format_rational(v) for k, v in phi.items()}}


def parse_lambda(source, dim: int) -> tuple:
    """``{"lambda": [...]}`` with ``dim + 1`` coefficients (the last one acts on ``c``)."""
    doc, where = _read(source)
    if not isinstance(doc, dict) or "lambda" not in doc:
        raise ParseError("lambda document needs a 'lambda' field", where)
    return _vector(doc["lambda"], dim + 1, f"{where}.lambda")
