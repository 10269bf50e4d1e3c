from .cyclotomic import ZETA as ZETA_Q, Cyclotomic
from .laurent import (
    ALPHA,
    ALPHA_PRIME,
    BETA,
    BETA_PRIME,
    GAMMA,
    LAMBDA,
    MU,
    NU,
    ONE,
    ZERO,
    ZETA,
    SymbolicScalar,
    symbolic_det,
    zeta_power,
)
from .intlinalg import (
    det,
    hermite_normal_form,
    identity,
    integer_kernel,
    inverse_unimodular,
    invariant_factors,
    matmul,
    matvec,
    rank_mod3,
    rank_mod_p,
    smith_normal_form,
    solve_linear,
    transpose,
)
