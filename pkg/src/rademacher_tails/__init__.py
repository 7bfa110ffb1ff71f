"""Gaussian-type tail bounds for normalized Rademacher sums.

Evaluates the bound Q(x) = P(Z > x) + C*phi(x)/(9 + x^2) and its corollaries,
validates it against exhaustive enumeration, computes the exponential-tilt /
Berry-Esseen apparatus behind it, and re-certifies the underlying closed-form
inequalities with outward-rounded interval arithmetic.
"""

from .bounds import (
    BoundKind,
    BoundValue,
    best_bound,
    comparison_bound,
    h,
    log_h,
    log_q,
    q_bound,
    qhat_iid_bound,
    ratio_table,
    student_t_bound,
)
from .coefficients import (
    Coefficients,
    equal_weights,
    from_floats,
    from_rationals,
    random_unit,
)
from .constants import Constants, constants
from .errors import CapacityError, DomainError
from .gaussian import (
    inverse_mills_ratio_r,
    log_std_normal_tail,
    mills_ratio,
    std_normal_tail,
)
from .oracle import (
    TailResult,
    binomial_tail,
    equal_weight_agreement,
    equal_weight_sup,
    exact_tail,
    verify_comparison_dominance,
    verify_q_bound,
)
from .tilt import (
    TiltSummary,
    lyapunov_upper,
    nb_bound,
    tilt_identity_residual,
    tilt_summary,
)

__version__ = "0.1.0"

__all__ = [
    "BoundKind",
    "BoundValue",
    "CapacityError",
    "Coefficients",
    "Constants",
    "DomainError",
    "TailResult",
    "TiltSummary",
    "best_bound",
    "binomial_tail",
    "comparison_bound",
    "constants",
    "equal_weight_agreement",
    "equal_weight_sup",
    "equal_weights",
    "exact_tail",
    "from_floats",
    "from_rationals",
    "h",
    "inverse_mills_ratio_r",
    "log_h",
    "log_q",
    "log_std_normal_tail",
    "lyapunov_upper",
    "mills_ratio",
    "nb_bound",
    "q_bound",
    "qhat_iid_bound",
    "random_unit",
    "ratio_table",
    "std_normal_tail",
    "student_t_bound",
    "tilt_identity_residual",
    "tilt_summary",
    "verify_comparison_dominance",
    "verify_q_bound",
]
