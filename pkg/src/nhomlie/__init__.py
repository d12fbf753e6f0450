"""Exact computations with n-Hom-Lie algebras and the (n+1)-ary algebras induced by trace forms."""
from nhomlie.algebra import (
    Check,
    HomNLieAlgebra,
    TraceForm,
    eval_bracket,
    hom_nambu_defect,
    is_ideal,
    is_morphism,
    is_multiplicative,
    is_subalgebra,
    is_weak_morphism,
    validate,
)
from nhomlie.errors import (
    DimensionError,
    HomLieError,
    NotACocycleError,
    NotATraceError,
    ParseError,
    PostconditionError,
    PreconditionError,
)
from nhomlie.induction import (
    induce,
    induce_general,
    induce_multiplicative,
    induced_bracket,
    is_phi_trace,
    solve_trace_space,
    twist,
)
from nhomlie.linalg import Matrix, Subspace, active_backend, use_backend
from nhomlie.tensor import SkewTensor

__version__ = "0.1.0"
