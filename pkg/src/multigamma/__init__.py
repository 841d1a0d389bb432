"""Multiple gamma functions, Hurwitz zeta derivatives and zeta-regularized sums.

The evaluators work in binary64; combinatorial objects (Stirling numbers,
Bernoulli polynomials, the P and Q polynomial families, expansion
coefficients) are exact.
"""

from .closedform import Atom, ClosedForm
from .errors import (
    DomainError,
    OracleError,
    ParseError,
    PoleError,
    SpecDomainError,
    UnsupportedError,
)
from .exactcomb import (
    RationalPolynomial,
    bernoulli_number,
    bernoulli_poly,
    binomial_general,
    pochhammer,
    stirling_cycle,
    stirling_subset,
)
from .gammas import (
    glaisher_log,
    hurwitz_deriv_from_gammas,
    log_barnes_g,
    log_multiple_gamma,
    multiple_zeta,
    r_n,
)
from .hurwitz import (
    hurwitz_zeta,
    hurwitz_zeta_deriv,
    kth_deriv_asymptotic,
    prop1_expansion,
    riemann_zeta_deriv_neg,
    stieltjes,
    zeta_kth_deriv_at0,
    zeta_sderiv_neg,
)
from .oracle import (
    finite_difference_sderiv,
    partial_product_extrapolated,
    partial_sum_extrapolated,
)
from .pqpoly import p_poly, q_poly
from .products import (
    barnes_reflection,
    catalan_constant,
    corollary_product,
    gamma3_reflection,
    melzak_product,
    melzak_squared_product,
    polylog_unit_circle,
)
from .seriesengine import (
    dilcher_sum,
    evaluate_series,
    phi_regularized,
    zeta_power_series,
)
from .sparser import parse_product, parse_series, unparse
from .specs import ProductSpec, SeriesSpec, SeriesTerm

__version__ = "0.1.0"
