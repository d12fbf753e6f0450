"""Reference algebras with rational parameters.

The two four-dimensional families are Yau twists of the Lie algebra
``[e1, e2] = e2, [e3, e4] = e4`` by endomorphisms depending on parameters.
"""
from __future__ import annotations

from fractions import Fraction

from nhomlie.algebra import HomNLieAlgebra, TraceForm
from nhomlie.induction import twist
from nhomlie.linalg import Matrix, as_rational
from nhomlie.tensor import SkewTensor


def base_lie() -> HomNLieAlgebra:
    return HomNLieAlgebra.from_structure(4, 2, {(1, 2): {2: 1}, (3, 4): {4: 1}}, name="base")


def alpha1(a=1, b=2, c=0, d=3) -> Matrix:
    a, b, c, d = map(as_rational, (a, b, c, d))
    return Matrix.from_columns([
        (0, 0, 1, a),
        (0, 0, 0, b),
        (1, c, 0, 0),
        (0, d, 0, 0),
    ])


def alpha2(a=2, b=1, c=0, d=5, e=-1) -> Matrix:
    a, b, c, d, e = map(as_rational, (a, b, c, d, e))
    if a == 0:
        raise ValueError("parameter a must be nonzero")
    return Matrix.from_columns([
        (a, b, 1, c),
        (0, 0, 0, d),
        (e, b * e / a, 0, 0),
        (0, 0, 0, 0),
    ])


def example1(a=1, b=2, c=0, d=3) -> HomNLieAlgebra:
    return twist(base_lie(), alpha1(a, b, c, d)).with_name("A1")


def example2(a=2, b=1, c=0, d=5, e=-1) -> HomNLieAlgebra:
    return twist(base_lie(), alpha2(a, b, c, d, e)).with_name("A2")


def tau1() -> TraceForm:
    return TraceForm((1, 0, 1, 0))


def tau2(a=2) -> TraceForm:
    return TraceForm((1, 0, 1 - as_rational(a), 0))


def zero_bracket(dim: int, arity: int, twists=None) -> HomNLieAlgebra:
    if twists is None:
        twists = (Matrix.identity(dim),) * (arity - 1)
    twists = tuple(t if isinstance(t, Matrix) else Matrix(t) for t in twists)
    uniform = all(t == twists[0] for t in twists)
    return HomNLieAlgebra(dim=dim, arity=arity, bracket=SkewTensor.zero(arity, dim, dim),
                          twists=twists, name="zero", multiplicative_declared=uniform)


def simple_nlie(n: int = 3, twists=None) -> HomNLieAlgebra:
    """``n``-dimensional, ``[e_1, .., e_n] = e_1``."""
    if twists is None:
        twists = (Matrix.identity(n),) * (n - 1)
    twists = tuple(t if isinstance(t, Matrix) else Matrix(t) for t in twists)
    value = [Fraction(0)] * n
    value[0] = Fraction(1)
    bracket = SkewTensor(n, n, {tuple(range(1, n + 1)): value}, n)
    return HomNLieAlgebra(dim=n, arity=n, bracket=bracket, twists=twists, name="simple")
