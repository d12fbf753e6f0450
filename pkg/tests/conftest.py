import os
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from nhomlie.corpus import example1, example2, simple_nlie, tau1, tau2, zero_bracket
from nhomlie.induction import induce

settings.register_profile(
    "default", max_examples=int(os.environ.get("HYPOTHESIS_EXAMPLES", 25)), deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def A1():
    return example1()


@pytest.fixture(scope="session")
def A2():
    return example2()


@pytest.fixture(scope="session")
def A1_tau(A1):
    return induce(A1, tau1())


@pytest.fixture(scope="session")
def A2_tau(A2):
    return induce(A2, tau2(2))


def corpus_pairs():
    """Multiplicative corpus algebras with an admissible trace."""
    return [
        ("A1", example1(), tau1()),
        ("A1_alt", example1(-1, 5, 2, "1/2"), tau1()),
        ("A2", example2(), tau2(2)),
        ("A2_alt", example2(3, 2, 0, 1, -2), tau2(3)),
        ("zero", zero_bracket(3, 2), (1, 2, 3)),
        ("simple", simple_nlie(3), (0, 1, 0)),
    ]


def corpus_algebras():
    """Every multiplicative algebra of the test corpus, induced ones included."""
    out = []
    for name, alg, tau in corpus_pairs():
        out.append((name, alg))
        out.append((name + "_tau", induce(alg, tau)))
    return out
