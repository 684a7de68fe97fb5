"""Exact class numbers, Siegel Eisenstein coefficients and the weighted average
of L-values arising from the pullback of a degree three Siegel Eisenstein series
to h x h^2, together with double-precision numerics for the weight 12 check.

The numeric module (numpy, mpmath) is not imported here; use
``pullback_lvalues.numeric`` explicitly.
"""

from .bernoulli import (
    DiscriminantCharacter,
    NotFundamentalError,
    bernoulli_number,
    bernoulli_polynomial,
    cohen_H,
    dirichlet_L_exact_negative,
    generalized_bernoulli,
    is_fundamental_discriminant,
    kronecker_chi,
)
from .exact import (
    PiExponentMismatch,
    PiMonomial,
    Rational,
    format_rational,
    parse_rational,
)
from .qseries import (
    EigenformError,
    QSeries,
    delta_qexp,
    dim_cusp_forms,
    eigenform,
    eisenstein_qexp,
    miller_basis,
    theta_qexp,
)
from .siegel import (
    HalfIntegralIndex,
    e1e2_q1q2q3_coef,
    e3_q1q2q3_coef,
    siegel_A2k,
)
from .special_values import (
    AlphaResult,
    alpha_direct,
    alpha_from_pieces,
    emit_table1,
    emit_table2,
    zeta_exact_even,
    zeta_exact_negative_odd,
)


__all__ = [
    "DiscriminantCharacter",
    "NotFundamentalError",
    "bernoulli_number",
    "bernoulli_polynomial",
    "cohen_H",
    "dirichlet_L_exact_negative",
    "generalized_bernoulli",
    "is_fundamental_discriminant",
    "kronecker_chi",
    "PiExponentMismatch",
    "PiMonomial",
    "Rational",
    "format_rational",
    "parse_rational",
    "EigenformError",
    "QSeries",
    "delta_qexp",
    "dim_cusp_forms",
    "eigenform",
    "eisenstein_qexp",
    "miller_basis",
    "theta_qexp",
    "HalfIntegralIndex",
    "e1e2_q1q2q3_coef",
    "e3_q1q2q3_coef",
    "siegel_A2k",
    "AlphaResult",
    "alpha_direct",
    "alpha_from_pieces",
    "emit_table1",
    "emit_table2",
    "zeta_exact_even",
    "zeta_exact_negative_odd",
]

__version__ = "0.1.0"
