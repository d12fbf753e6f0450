"""Time the compiled and pure-Python elimination kernels on the same inputs.

    python benchmarks/bench_kernel.py [--sizes 20 40 60] [--repeat 3]

Each case is a random integer matrix with a planted kernel (so elimination
runs to completion on a rank-deficient system) plus the two operator
matrices that dominate a second-cohomology computation.  Results from both
kernels are compared before any timing is reported.
"""
from __future__ import annotations

import argparse
import random
import timeit

from nhomlie.cohomology import adjoint_d2_matrix, scalar_d2_matrix
from nhomlie.corpus import example1, example2, tau1
from nhomlie.induction import induce
from nhomlie.linalg import KERNELS, Matrix, rref


def random_case(n: int, rng: random.Random) -> Matrix:
    rank = max(1, n - n // 4)
    basis = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(rank)]
    rows = []
    for _ in range(n):
        coeffs = [rng.randint(-3, 3) for _ in range(rank)]
        rows.append([sum(c * b[j] for c, b in zip(coeffs, basis)) for j in range(n)])
    return Matrix(rows, ncols=n)


def cases(sizes, seed: int):
    rng = random.Random(seed)
    for n in sizes:
        yield f"random {n}x{n}", random_case(n, rng)
    A1 = example1()
    yield "scalar d2, A1", scalar_d2_matrix(A1)
    yield "adjoint d2, A1", adjoint_d2_matrix(A1)
    yield "adjoint d2, A2", adjoint_d2_matrix(example2())
    yield "adjoint d2, A1_tau", adjoint_d2_matrix(induce(A1, tau1()))


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[20, 40, 60])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args(argv)

    backends = sorted(KERNELS)
    if "compiled" not in KERNELS:
        print("compiled kernel not built; timing the Python kernel only")
    header = f"{'case':<22}{'shape':>10}" + "".join(f"{b + ' (ms)':>16}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for label, M in cases(args.sizes, args.seed):
        results = {b: rref(M.rows, M.ncols, backend=b) for b in backends}
        if len({repr(r) for r in results.values()}) != 1:
            raise SystemExit(f"kernels disagree on {label}")
        times = {}
        for b in backends:
            t = timeit.repeat(lambda: rref(M.rows, M.ncols, backend=b), number=1, repeat=args.repeat)
            times[b] = min(t) * 1000
        line = f"{label:<22}{f'{M.nrows}x{M.ncols}':>10}" + "".join(f"{times[b]:>16.2f}" for b in backends)
        if len(backends) == 2:
            line += f"{times['python'] / times['compiled']:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
