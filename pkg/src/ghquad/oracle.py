"""High-precision reference computations, independent of the quadrature.

``cdf_by_integration`` integrates the closed-form GH density with a
globally adaptive scheme; ``mixture_cdf_bruteforce`` reaches the same
number through the variance-mean-mixture representation instead.  The
two independent routes agreeing is the strongest correctness check in
the package, and both serve as ground truth for the quadrature CDF.
"""

import math

import numpy as np
from scipy.integrate import quad

from .errors import ConvergenceError, DomainError
from .distributions import gh_density, gig_density, gig_moment, ig_density
from .mixture import gh_quantile
from .params import GHParams
from .special import normal_cdf

__all__ = [
    "adaptive_integrate",
    "cdf_by_integration",
    "mixture_cdf_bruteforce",
    "oracle_quantile",
]

_MIN_EPSREL = 1.2e-14  # smallest relative tolerance QUADPACK accepts


def adaptive_integrate(f, a, b, tol: float = 1e-12, absolute_tol: float | None = None):
    """Globally adaptive integration of ``f`` over (a, b), limits may be infinite.

    Returns ``(value, error_estimate)`` with the error bounded by
    max(tol*|value|, tol) for smooth integrands.  ``absolute_tol``
    overrides the absolute part of the stopping rule; pass 0.0 to force
    purely relative convergence (used for tail probabilities).

    Raises
    ------
    ConvergenceError
        If the subdivision limit is hit first; the partial estimate is
        attached to the exception.
    """
    if not tol >= 1e-14:
        raise DomainError("tolerance must be >= 1e-14")
    epsabs = tol if absolute_tol is None else absolute_tol
    epsrel = max(tol, _MIN_EPSREL)
    out = quad(f, a, b, epsabs=epsabs, epsrel=epsrel, limit=400, full_output=True)
    value, err = out[0], out[1]
    if len(out) > 3:
        raise ConvergenceError("integration did not converge: %s" % out[3],
                               estimate=value)
    return value, err


def _as_params(params) -> GHParams:
    return params if isinstance(params, GHParams) else GHParams(*params)


def _mixture_center(params: GHParams) -> float:
    return params.mu + params.beta * gig_moment(params.mixing(), 1.0)


def cdf_by_integration(params: GHParams, y: float, tol: float = 1e-14) -> float:
    """Reference GH CDF by adaptive integration of the density.

    The smaller tail is integrated with purely relative convergence, so
    extreme quantile probabilities retain full relative accuracy.
    """
    params = _as_params(params)
    f = lambda t: gh_density(params, t)
    if y <= _mixture_center(params):
        value, _ = adaptive_integrate(f, -np.inf, y, tol=tol, absolute_tol=0.0)
        return value
    value, _ = adaptive_integrate(f, y, np.inf, tol=tol, absolute_tol=0.0)
    return 1.0 - value


def mixture_cdf_bruteforce(params: GHParams, y: float, tol: float = 1e-14) -> float:
    """Reference GH CDF through the mixture representation.

    Integrates N((y - mu - beta*x)/sqrt(x)) against the mixing density
    over x > 0, in log coordinates x = (delta/gamma) e^v so the mixing
    mass always sits near v = 0 regardless of the parameter scale.  At
    p = -1/2 the IG mixing density is used directly.
    """
    params = _as_params(params)
    mixing = params.mixing()
    scale = params.delta / params.gamma
    if params.p == -0.5:
        mix_density = lambda x: ig_density((params.gamma, params.delta), x)
    else:
        mix_density = lambda x: gig_density(mixing, x)
    upper = y > _mixture_center(params)
    sign = -1.0 if upper else 1.0

    def integrand(v):
        x = scale * math.exp(v)
        arg = (y - params.mu - params.beta * x) / math.sqrt(x)
        return normal_cdf(sign * arg) * mix_density(x) * x

    value, _ = adaptive_integrate(integrand, -np.inf, np.inf, tol=tol,
                                  absolute_tol=0.0)
    return 1.0 - value if upper else value


def oracle_quantile(params: GHParams, q: float, tol: float = 1e-14,
                    seed_n: int = 200) -> float:
    """Quantile of the exact GH law, to near machine accuracy in probability.

    Seeds from the quadrature quantile at ``seed_n`` nodes, then applies
    Newton steps on the reference CDF (derivative = closed-form density).
    The returned y satisfies |F(y) - q| << tol_rel * min(q, 1-q).
    """
    params = _as_params(params)
    if not (0.0 < q < 1.0):
        raise DomainError("quantile level must lie strictly inside (0, 1)")
    y = gh_quantile(params, q, n=seed_n)
    target = max(1e-7 * min(q, 1.0 - q), 1e-15)
    for _ in range(8):
        resid = cdf_by_integration(params, y, tol=tol) - q
        y -= resid / gh_density(params, y)
        if not math.isfinite(y):
            raise ConvergenceError("oracle quantile refinement diverged")
        if abs(resid) <= target:
            return y
    raise ConvergenceError("oracle quantile did not reach %.3g at q=%g" % (target, q),
                           estimate=y)
