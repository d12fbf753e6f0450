"""Independent brute-force evaluators used as test oracles.

Nothing here reuses the package's skew storage, operator assembly or
coboundary code; each oracle expands its defining sum directly.
"""
from fractions import Fraction
from functools import lru_cache
from itertools import product

from sympy.combinatorics import Permutation


class DenseTensor:
    """All d^n entries stored explicitly, filled by antisymmetrising the given table."""

    def __init__(self, arity, dim, table, width):
        self.arity, self.dim, self.width = arity, dim, width
        self.entries = {}
        for idx in product(range(1, dim + 1), repeat=arity):
            if len(set(idx)) < arity:
                self.entries[idx] = self._zero()
                continue
            order = sorted(range(arity), key=lambda i: idx[i])
            sign = Permutation(order).signature()
            base = table.get(tuple(sorted(idx)), self._zero())
            self.entries[idx] = self._scale(sign, base)
        zero = self._zero()
        self._nonzero = [(idx, v) for idx, v in self.entries.items() if v != zero]

    def _zero(self):
        return Fraction(0) if self.width is None else (Fraction(0),) * self.width

    def _scale(self, c, v):
        return c * v if self.width is None else tuple(c * x for x in v)

    def evaluate(self, vectors):
        acc = self._zero()
        # zero entries and zero factors contribute nothing to the full sum
        for idx, value in self._nonzero:
            c = Fraction(1)
            for v, i in zip(vectors, idx):
                c *= v[i - 1]
                if not c:
                    break
            if c:
                term = self._scale(c, value)
                acc = acc + term if self.width is None else tuple(a + b for a, b in zip(acc, term))
        return acc


@lru_cache(maxsize=None)
def dense_of(T) -> DenseTensor:
    return DenseTensor(T.arity, T.dim, dict(T.items()), T.width)


# -- plain vector helpers ----------------------------------------------------

def matvec(rows, v):
    return tuple(sum((Fraction(a) * b for a, b in zip(r, v)), Fraction(0)) for r in rows)


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def scale(c, v):
    return tuple(c * x for x in v)


def units(d):
    return [tuple(Fraction(int(i == j)) for j in range(d)) for i in range(d)]


# -- identities, expanded term by term ---------------------------------------

def nambu_residual(alg, x, y):
    """LHS minus RHS of the Hom-Nambu identity for vectors ``x`` (n-1) and ``y`` (n)."""
    B = dense_of(alg.bracket)
    tw = [t.rows for t in alg.twists]
    n = alg.arity
    lhs = B.evaluate([matvec(tw[i], x[i]) for i in range(n - 1)] + [B.evaluate(y)])
    rhs = (Fraction(0),) * alg.dim
    for i in range(n):
        args = [matvec(tw[j], y[j]) for j in range(i)]
        args.append(B.evaluate(list(x) + [y[i]]))
        args += [matvec(tw[j - 1], y[j]) for j in range(i + 1, n)]
        rhs = add(rhs, B.evaluate(args))
    return add(lhs, scale(-1, rhs))


def induced_value(alg, tau, vectors):
    """``sum_k (-1)^(k-1) tau(x_k) [x_1, .., x_k^, .., x_{n+1}]``."""
    B = dense_of(alg.bracket)
    tau = getattr(tau, "coefficients", tau)
    out = (Fraction(0),) * alg.dim
    for k, v in enumerate(vectors):
        t = sum(Fraction(a) * b for a, b in zip(tau, v))
        if t:
            rest = list(vectors[:k]) + list(vectors[k + 1:])
            out = add(out, scale((-1) ** k * t, B.evaluate(rest)))
    return out


# -- degree-2 coboundaries on pure wedges ------------------------------------
# A fundamental object is a list of n-1 vectors; sums of them are lists of
# (coefficient, vectors) pairs.

def _leibniz_terms(alg, X, Y):
    B = dense_of(alg.bracket)
    a = alg.alpha.rows
    out = []
    for i in range(len(Y)):
        args = [matvec(a, y) for y in Y]
        args[i] = B.evaluate(list(X) + [Y[i]])
        out.append(args)
    return out


def scalar_d2_oracle(alg, phi, X, Y, z):
    B = dense_of(alg.bracket)
    P = dense_of(phi)
    a = alg.alpha.rows
    aX = [matvec(a, x) for x in X]
    aY = [matvec(a, y) for y in Y]
    az = matvec(a, z)
    val = -sum((P.evaluate(W + [az]) for W in _leibniz_terms(alg, X, Y)), Fraction(0))
    val -= P.evaluate(aY + [B.evaluate(list(X) + [z])])
    val += P.evaluate(aX + [B.evaluate(list(Y) + [z])])
    return val


def adjoint_d2_oracle(alg, phi, X, Y, z):
    B = dense_of(alg.bracket)
    P = dense_of(phi)
    a = alg.alpha.rows
    d = alg.dim
    aX = [matvec(a, x) for x in X]
    aY = [matvec(a, y) for y in Y]
    az = matvec(a, z)
    out = (Fraction(0),) * d
    for W in _leibniz_terms(alg, X, Y):
        out = add(out, scale(-1, P.evaluate(W + [az])))
    out = add(out, scale(-1, P.evaluate(aY + [B.evaluate(list(X) + [z])])))
    out = add(out, P.evaluate(aX + [B.evaluate(list(Y) + [z])]))
    for i in range(len(Y)):
        args = list(aY)
        args[i] = P.evaluate(list(X) + [Y[i]])
        out = add(out, scale(-1, B.evaluate(args + [az])))
    out = add(out, scale(-1, B.evaluate(aY + [P.evaluate(list(X) + [z])])))
    out = add(out, B.evaluate(aX + [P.evaluate(list(Y) + [z])]))
    return out


def wedge_oracle(vectors, d):
    """Coordinates of ``v_1 ^ .. ^ v_k`` in the increasing-key basis, via sympy minors."""
    from itertools import combinations

    import sympy

    k = len(vectors)
    M = sympy.Matrix([[sympy.Rational(v[i].numerator, v[i].denominator) if isinstance(v[i], Fraction)
                       else sympy.Rational(v[i]) for v in vectors] for i in range(d)])
    out = []
    for rows in combinations(range(d), k):
        det = M.extract(list(rows), list(range(k))).det()
        out.append(Fraction(int(det.p), int(det.q)))
    return tuple(out)
