"""quadmds: quadratic congruence counts, the multiple Dirichlet series they
generate, and exact/numerical verification of the functional-equation group.
"""

from .arith import (
    CongruenceCount,
    DiscriminantDecomposition,
    PrimeFactorization,
    count_sqrt_mod,
    count_sqrt_mod_bruteforce,
    factorize,
    fundamental_discriminant,
    kronecker_symbol,
    sqrt_count,
)
from .coefficients import (
    CoefficientTable,
    MdsCoefficient,
    TableBounds,
    coefficient_table,
    mds_coefficient,
    regrouping_identity_check,
)
from .lseries import (
    InnerSeriesValue,
    LocalEulerFactor,
    dirichlet_L,
    inner_series,
    local_euler_fit,
)
from .mdseval import (
    FeResidualReport,
    SeriesValue,
    TruncationPolicy,
    check_fe_s,
    check_fe_shintani,
    completion_factor,
    eval_double_series,
    eval_xi,
)
from .quadspace import BPlusElement, QuadricPoint, RationalMatrix
from .specialfn import (
    ThetaIntegralSpec,
    gamma,
    hurwitz_zeta,
    legendre_P,
    riemann_zeta,
    theta_integral,
)
from .weyl import AffineMap3, SpectralPoint, generators, group_closure

__version__ = "0.1.0"

__all__ = [
    "AffineMap3",
    "BPlusElement",
    "CoefficientTable",
    "CongruenceCount",
    "DiscriminantDecomposition",
    "FeResidualReport",
    "InnerSeriesValue",
    "LocalEulerFactor",
    "MdsCoefficient",
    "PrimeFactorization",
    "QuadricPoint",
    "RationalMatrix",
    "SeriesValue",
    "SpectralPoint",
    "TableBounds",
    "ThetaIntegralSpec",
    "TruncationPolicy",
    "check_fe_s",
    "check_fe_shintani",
    "coefficient_table",
    "completion_factor",
    "count_sqrt_mod",
    "count_sqrt_mod_bruteforce",
    "dirichlet_L",
    "eval_double_series",
    "eval_xi",
    "factorize",
    "fundamental_discriminant",
    "gamma",
    "generators",
    "group_closure",
    "hurwitz_zeta",
    "inner_series",
    "kronecker_symbol",
    "legendre_P",
    "local_euler_fit",
    "mds_coefficient",
    "regrouping_identity_check",
    "riemann_zeta",
    "sqrt_count",
    "theta_integral",
    "__version__",
]
