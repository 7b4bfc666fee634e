"""Fast, accurate computation for the generalized hyperbolic distribution.

The package builds a quadrature for the (generalized) inverse Gaussian
mixing distribution out of the Gauss-Hermite rule, approximates the GH
distribution as a finite normal variance-mean mixture, and derives CDF,
quantiles, moments, MGFs, European option prices and random variates
from that mixture.  An independent adaptive-integration oracle provides
reference values for validation.
"""

from .errors import (
    ConvergenceError,
    DivergenceError,
    DomainError,
    GhquadError,
    ParameterError,
    RangeError,
    SizeError,
)
from .special import bessel_k, log_bessel_k, normal_cdf, normal_pdf
from .hermite import MAX_RULE_SIZE, QuadratureRule, hermite_rule
from .mapping import ig_to_normal, normal_to_ig
from .params import (
    GHParams,
    GHParamsAlpha,
    GIGParams,
    IGParams,
    from_alpha_parameterization,
)
from .quadrature import gig_rule, ig_rule
from .distributions import (
    SummaryStats,
    gh_density,
    gh_log_density,
    gh_mgf,
    gh_summary_stats,
    gig_density,
    gig_mgf,
    gig_moment,
    ig_density,
)
from .mixture import (
    MixtureComponent,
    build_mixture,
    call_price,
    gh_cdf,
    gh_expectation,
    gh_quantile,
    gig_mgf_quad,
)
from .sampling import (
    RngStream,
    sample_gh,
    sample_gig_discrete,
    sample_ig_exact,
    select_component,
)
from .oracle import (
    adaptive_integrate,
    cdf_by_integration,
    mixture_cdf_bruteforce,
    oracle_quantile,
)
from .presets import PRESETS, ParameterSetPreset, get_preset

__version__ = "0.1.0"

__all__ = [
    "GhquadError", "DomainError", "ParameterError", "SizeError", "RangeError",
    "DivergenceError", "ConvergenceError",
    "bessel_k", "log_bessel_k", "normal_cdf", "normal_pdf",
    "QuadratureRule", "hermite_rule", "MAX_RULE_SIZE",
    "ig_to_normal", "normal_to_ig",
    "IGParams", "GIGParams", "GHParams", "GHParamsAlpha",
    "from_alpha_parameterization",
    "ig_rule", "gig_rule",
    "ig_density", "gig_density", "gh_density", "gh_log_density",
    "gig_moment", "gig_mgf", "gh_mgf", "gh_summary_stats", "SummaryStats",
    "MixtureComponent", "build_mixture", "gh_cdf", "gh_quantile",
    "call_price", "gh_expectation", "gig_mgf_quad",
    "RngStream", "select_component", "sample_gh", "sample_ig_exact",
    "sample_gig_discrete",
    "adaptive_integrate", "cdf_by_integration", "mixture_cdf_bruteforce",
    "oracle_quantile",
    "ParameterSetPreset", "PRESETS", "get_preset",
    "__version__",
]
