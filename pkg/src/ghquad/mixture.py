"""Finite normal-mixture approximation of GH expectations.

Each GIG quadrature node x_k contributes one normal component with
weight w_k, mean mu + beta*x_k and variance x_k.  CDF, option price and
generic expectations then reduce to weighted sums of normal quantities.
CDF sums are accumulated with exact (fsum) summation so results do not
depend on how the components are partitioned.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DivergenceError, DomainError
from .hermite import QuadratureRule, hermite_rule
from .params import GHParams, GIGParams
from .quadrature import gig_rule
from .special import normal_cdf

__all__ = [
    "MixtureComponent",
    "build_mixture",
    "gh_cdf",
    "gh_quantile",
    "call_price",
    "gh_expectation",
    "gig_mgf_quad",
]


@dataclass(frozen=True)
class MixtureComponent:
    """One normal component (weight, mean, variance) of the finite mixture."""

    weight: float
    mean: float
    variance: float

    def __post_init__(self):
        if not (self.weight > 0.0 and self.variance > 0.0):
            raise DomainError("mixture component needs positive weight and variance")


def _as_params(params) -> GHParams:
    return params if isinstance(params, GHParams) else GHParams(*params)


def _mixture_rule(params: GHParams, n: int) -> QuadratureRule:
    return gig_rule(params.mixing(), n, renormalize=True)


def build_mixture(params: GHParams, n: int) -> list[MixtureComponent]:
    """The n-component normal mixture approximating GH(params).

    Components are ordered by ascending variance (the quadrature nodes).
    """
    params = _as_params(params)
    rule = _mixture_rule(params, n)
    return [MixtureComponent(weight=w, mean=params.mu + params.beta * x, variance=x)
            for x, w in zip(rule.nodes, rule.weights)]


def _cdf_scalar(y, mu, beta, sqrt_x, weights):
    args = (y - mu) / sqrt_x - beta * sqrt_x
    lower = math.fsum(weights * normal_cdf(args))
    if lower <= 0.5:
        return min(lower, 1.0)
    upper = math.fsum(weights * normal_cdf(-args))
    return 1.0 - upper


def gh_cdf(params: GHParams, y, n: int):
    """CDF of the GH distribution as a weighted sum of normal CDFs.

    Monotone nondecreasing in y with limits 0 and 1, for any rule size,
    because the mixture weights are a probability vector.  The smaller
    tail is accumulated first so extreme quantiles keep full relative
    accuracy.  ``y`` may be a scalar or an array.
    """
    params = _as_params(params)
    rule = _mixture_rule(params, n)
    sqrt_x = np.sqrt(rule.nodes)
    y_arr = np.asarray(y, dtype=float)
    out = np.empty(y_arr.shape, dtype=float)
    for idx, yi in np.ndenumerate(y_arr):
        out[idx] = _cdf_scalar(yi, params.mu, params.beta, sqrt_x, rule.weights)
    return float(out[()]) if out.ndim == 0 else out


def gh_quantile(params: GHParams, q: float, n: int) -> float:
    """Inverse of the quadrature CDF by bracketing plus safeguarded refinement.

    The bracket is grown outward from the mixture mean in units of the
    mixture standard deviation; the monotone CDF then admits a standard
    Brent solve.  The result y satisfies |gh_cdf(y) - q| <= 1e-12.
    """
    from scipy.optimize import brentq

    params = _as_params(params)
    if not (0.0 < q < 1.0) or not math.isfinite(q):
        raise DomainError("quantile level must lie strictly inside (0, 1)")
    rule = _mixture_rule(params, n)
    sqrt_x = np.sqrt(rule.nodes)

    def objective(y):
        return _cdf_scalar(y, params.mu, params.beta, sqrt_x, rule.weights) - q

    m1 = rule.integrate(rule.nodes)
    m2 = rule.integrate(rule.nodes ** 2)
    center = params.mu + params.beta * m1
    spread = math.sqrt(m1 + params.beta ** 2 * max(m2 - m1 * m1, 0.0))
    lo, hi = center - spread, center + spread
    for _ in range(200):
        if objective(lo) <= 0.0:
            break
        lo, hi = lo - 2.0 * (hi - lo), lo
    else:
        raise ConvergenceError("bracket expansion failed on the lower side")
    for _ in range(200):
        if objective(hi) >= 0.0:
            break
        lo, hi = hi, hi + 2.0 * (hi - lo)
    else:
        raise ConvergenceError("bracket expansion failed on the upper side")
    return brentq(objective, lo, hi, xtol=1e-280, rtol=4 * np.finfo(float).eps,
                  maxiter=300)


def call_price(params: GHParams, strike: float, n: int) -> float:
    """Undiscounted European call E(max(e^Y - K, 0)) under the GH law.

    A weighted sum of Black-Scholes formulas with per-component forward
    F_k = exp(mu + (beta + 1/2) x_k) and total volatility sqrt(x_k).
    Requires E(e^Y) finite, i.e. beta + 1/2 < gamma^2/2.  The caller
    applies any discount factor externally.
    """
    params = _as_params(params)
    if not (strike > 0.0 and math.isfinite(strike)):
        raise DomainError("strike must be a positive finite real")
    if not params.beta + 0.5 < params.gamma ** 2 / 2.0:
        raise DivergenceError("E(e^Y) diverges: requires beta + 1/2 < gamma^2/2")
    rule = _mixture_rule(params, n)
    x = rule.nodes
    sqrt_x = np.sqrt(x)
    log_forward = params.mu + (params.beta + 0.5) * x
    d = (log_forward - math.log(strike)) / sqrt_x - 0.5 * sqrt_x
    with np.errstate(over="ignore", under="ignore"):
        terms = (np.exp(log_forward) * normal_cdf(d + sqrt_x)
                 - strike * normal_cdf(d))
    return max(math.fsum(rule.weights * terms), 0.0)


def gh_expectation(g, params: GHParams, n: int, m: int | None = None) -> float:
    """E(g(Y)) on the compound (mixing x Gauss-Hermite) grid.

    The grid points are mu + beta*x_k + sqrt(x_k)*z_l with weights
    w_k * h_l; ``m`` (the normal-direction size) defaults to n.  ``g``
    may be vectorized over arrays; plain scalar callables are handled
    through a fallback loop.
    """
    params = _as_params(params)
    rule = _mixture_rule(params, n)
    normal = hermite_rule(n if m is None else m)
    grid = (params.mu + params.beta * rule.nodes[:, None]
            + np.sqrt(rule.nodes)[:, None] * normal.nodes[None, :])
    try:
        values = np.asarray(g(grid), dtype=float)
        if values.shape != grid.shape:
            raise ValueError
    except Exception:
        values = np.vectorize(lambda t: float(g(t)))(grid)
    return float(rule.weights @ values @ normal.weights)


def gig_mgf_quad(params: GIGParams, t: float, n: int,
                 renormalize: bool = True) -> float:
    """GIG MGF approximated on the quadrature: sum of w_k * exp(t * x_k).

    The finite sum exists for any t; it approximates the true MGF only
    for t below the divergence point gamma^2/2.
    """
    if not isinstance(params, GIGParams):
        params = GIGParams(*params)
    rule = gig_rule(params, n, renormalize=renormalize)
    return float(math.fsum(rule.weights * np.exp(t * rule.nodes)))
