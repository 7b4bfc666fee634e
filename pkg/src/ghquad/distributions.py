"""Closed-form machinery of the IG, GIG and GH distributions.

Densities are evaluated in log space before exponentiating, which keeps
skewed parameter sets (large drift beta against a fast-decaying Bessel
tail) finite pointwise even where the density underflows to zero.
"""

import math
from typing import NamedTuple

import numpy as np

from .errors import DivergenceError, DomainError
from .params import GHParams, GIGParams, IGParams
from .special import bessel_k, log_bessel_k

__all__ = [
    "ig_density",
    "gig_density",
    "gh_density",
    "gh_log_density",
    "gig_moment",
    "gig_mgf",
    "gh_mgf",
    "gh_summary_stats",
    "SummaryStats",
]

_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)


def _positive_x(x):
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0.0) or np.any(~np.isfinite(x)):
        raise DomainError("density argument must be a positive finite real")
    return x


def ig_density(params: IGParams, x):
    """IG(gamma, delta) density: delta/sqrt(2 pi x^3) * exp(-(gamma x - delta)^2 / 2x)."""
    if not isinstance(params, IGParams):
        params = IGParams(*params)
    x = _positive_x(x)
    gamma, delta = params.gamma, params.delta
    log_f = (math.log(delta) - _LOG_SQRT_2PI - 1.5 * np.log(x)
             - 0.5 * (gamma * x - delta) ** 2 / x)
    out = np.exp(log_f)
    return out[()] if out.ndim == 0 else out


def gig_density(params: GIGParams, x):
    """GIG(gamma, delta, p) density.

    (gamma/delta)^p x^(p-1) / (2 K_p(gamma delta)) * exp(-(gamma^2 x + delta^2/x)/2).
    At p = -1/2 this reduces to the IG density.
    """
    if not isinstance(params, GIGParams):
        params = GIGParams(*params)
    x = _positive_x(x)
    gamma, delta, p = params.gamma, params.delta, params.p
    log_norm = (p * math.log(gamma / delta) - math.log(2.0)
                - log_bessel_k(p, gamma * delta))
    log_f = log_norm + (p - 1.0) * np.log(x) - 0.5 * (gamma * gamma * x + delta * delta / x)
    out = np.exp(log_f)
    return out[()] if out.ndim == 0 else out


def gh_log_density(params: GHParams, y):
    """Log of the GH density; finite wherever the density is positive."""
    if not isinstance(params, GHParams):
        params = GHParams(*params)
    y = np.asarray(y, dtype=float)
    mu, beta, gamma, delta, p = params.mu, params.beta, params.gamma, params.delta, params.p
    alpha = params.alpha
    u = y - mu
    q = np.hypot(delta, u)
    log_norm = (0.5 * math.log(alpha) + p * math.log(gamma / (alpha * delta))
                - _LOG_SQRT_2PI - log_bessel_k(p, delta * gamma))
    out = (log_norm + beta * u + log_bessel_k(p - 0.5, alpha * q)
           + (2.0 * p - 1.0) / 2.0 * np.log(q))
    return out[()] if out.ndim == 0 else out


def gh_density(params: GHParams, y):
    """GH(mu, beta, gamma, delta, p) density of the variance-mean mixture."""
    with np.errstate(under="ignore"):
        out = np.exp(gh_log_density(params, y))
    return out[()] if np.ndim(out) == 0 else out


def gig_moment(params: GIGParams, r: float) -> float:
    """E(X^r) for X ~ GIG(gamma, delta, p): (delta/gamma)^r K_{r+p}/K_p at gamma*delta.

    Valid for any finite real order r, negative orders included.
    """
    if not isinstance(params, GIGParams):
        params = GIGParams(*params)
    if not math.isfinite(r):
        raise DomainError("moment order must be finite")
    z = params.gamma * params.delta
    log_m = (r * math.log(params.delta / params.gamma)
             + log_bessel_k(r + params.p, z) - log_bessel_k(params.p, z))
    return math.exp(log_m)


def gig_mgf(params: GIGParams, t: float) -> float:
    """Moment generating function of GIG(gamma, delta, p) at t < gamma^2/2."""
    if not isinstance(params, GIGParams):
        params = GIGParams(*params)
    gamma, delta, p = params.gamma, params.delta, params.p
    if not t < gamma * gamma / 2.0:
        raise DivergenceError("GIG MGF diverges for t >= gamma^2/2 "
                              "(t=%g, bound=%g)" % (t, gamma * gamma / 2.0))
    s = math.sqrt(gamma * gamma - 2.0 * t)
    log_m = (p * math.log(gamma / s)
             + log_bessel_k(p, delta * s) - log_bessel_k(p, delta * gamma))
    return math.exp(log_m)


def gh_mgf(params: GHParams, t: float) -> float:
    """MGF of the GH distribution: exp(mu t) * M_X(beta t + t^2/2).

    Defined while the mixing argument stays below the GIG divergence
    point, i.e. beta*t + t^2/2 < gamma^2/2.
    """
    if not isinstance(params, GHParams):
        params = GHParams(*params)
    arg = params.beta * t + 0.5 * t * t
    if not arg < params.gamma ** 2 / 2.0:
        raise DivergenceError("GH MGF diverges: beta*t + t^2/2 = %g >= gamma^2/2 = %g"
                              % (arg, params.gamma ** 2 / 2.0))
    return math.exp(params.mu * t) * gig_mgf(params.mixing(), arg)


class SummaryStats(NamedTuple):
    mean: float
    variance: float
    skewness: float
    ex_kurtosis: float


def gh_summary_stats(params: GHParams) -> SummaryStats:
    """Mean, variance, skewness and excess kurtosis of the GH distribution.

    Assembled from the first four mixing moments m_r = E(X^r) through the
    central-moment expansion of mu + beta*X + sqrt(X)*Z; excess kurtosis
    is the standard mu4/mu2^2 - 3.
    """
    if not isinstance(params, GHParams):
        params = GHParams(*params)
    mixing = params.mixing()
    m1, m2, m3, m4 = (gig_moment(mixing, r) for r in (1.0, 2.0, 3.0, 4.0))
    beta = params.beta
    # central moments of the mixing variable
    c2 = m2 - m1 * m1
    c3 = m3 - 3.0 * m1 * m2 + 2.0 * m1 ** 3
    c4 = m4 - 4.0 * m1 * m3 + 6.0 * m1 * m1 * m2 - 3.0 * m1 ** 4
    mean = params.mu + beta * m1
    variance = m1 + beta * beta * c2
    mu3 = beta ** 3 * c3 + 3.0 * beta * c2
    mu4 = beta ** 4 * c4 + 6.0 * beta * beta * (c3 + m1 * c2) + 3.0 * m2
    return SummaryStats(
        mean=mean,
        variance=variance,
        skewness=mu3 / variance ** 1.5,
        ex_kurtosis=mu4 / (variance * variance) - 3.0,
    )
