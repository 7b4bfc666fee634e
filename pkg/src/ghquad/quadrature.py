"""Quadrature rules for the IG and GIG distributions.

Both rules are obtained by transforming a Gauss-Hermite rule through the
half-line mapping, so their construction costs one eigen-decomposition
(memoized) plus O(n) arithmetic.  The IG rule integrates x^r exactly for
every integer r in [1-n, n]; the GIG rule shifts that window by
-(p + 1/2) and reweights with the closed-form density ratio.
"""

import math
from functools import lru_cache

import numpy as np

from .errors import ParameterError, SizeError
from .hermite import MAX_RULE_SIZE, QuadratureRule, hermite_rule
from .mapping import normal_to_ig
from .params import GIGParams, IGParams
from .special import log_bessel_k

__all__ = ["ig_rule", "gig_rule"]

# Weights at or below this threshold are dropped (they carry no usable
# probability mass and would break the positive-weight invariant).
_WEIGHT_FLOOR = 1e-300


def _check_size(n):
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise SizeError("rule size must be an integer, got %r" % (n,))
    if n < 1 or n > MAX_RULE_SIZE:
        raise SizeError("rule size must be in [1, %d], got %d" % (MAX_RULE_SIZE, n))


def _finalize(nodes, weights, probability):
    """Drop underflowed weights, renormalize probability rules, flag degradation."""
    keep = np.isfinite(weights) & (weights > _WEIGHT_FLOOR)
    degraded = not bool(keep.all())
    if degraded:
        nodes, weights = nodes[keep], weights[keep]
    if probability:
        weights = weights / math.fsum(weights)
    return QuadratureRule(nodes, weights, degraded=degraded)


@lru_cache(maxsize=256)
def _ig_rule_cached(gamma: float, delta: float, n: int) -> QuadratureRule:
    sigma = math.sqrt(gamma * delta)
    base = hermite_rule(n)
    x_unit = normal_to_ig(sigma, base.nodes)
    weights = 2.0 * base.weights / (1.0 + x_unit)
    nodes = (delta / gamma) * x_unit
    return _finalize(nodes, weights, probability=True)


def ig_rule(params: IGParams, n: int) -> QuadratureRule:
    """n-point quadrature with respect to the IG(gamma, delta) density.

    Nodes are (delta/gamma) * m(z_k) and weights 2*h_k/(1 + m(z_k)) where
    (z_k, h_k) is the Gauss-Hermite rule and m the half-line mapping at
    sigma = sqrt(gamma*delta).  Weights sum to one; moments of integer
    order 1-n..n are exact.

    Rules are cached per (gamma, delta, n); the returned object is
    immutable, so sharing is safe.
    """
    if not isinstance(params, IGParams):
        params = IGParams(*params)
    if params.gamma <= 0.0:
        raise ParameterError("quadrature construction requires gamma > 0")
    _check_size(n)
    return _ig_rule_cached(float(params.gamma), float(params.delta), int(n))


@lru_cache(maxsize=256)
def _gig_rule_cached(gamma: float, delta: float, p: float, n: int,
                     renormalize: bool) -> QuadratureRule:
    ig = _ig_rule_cached(gamma, delta, n)
    # density ratio f_GIG/f_IG = c * x^(p+1/2), with c in log form so that
    # extreme parameters degrade to dropped weights instead of inf/0.
    log_c = (0.5 * math.log(math.pi / 2.0) + p * math.log(gamma)
             - (p + 1.0) * math.log(delta) - gamma * delta
             - log_bessel_k(p, gamma * delta))
    with np.errstate(over="ignore", under="ignore"):
        log_w = log_c + (p + 0.5) * np.log(ig.nodes) + np.log(ig.weights)
        weights = np.exp(log_w)
    return _finalize(ig.nodes.copy(), weights, probability=renormalize)


def gig_rule(params: GIGParams, n: int, renormalize: bool = True) -> QuadratureRule:
    """n-point quadrature with respect to the GIG(gamma, delta, p) density.

    Same nodes as the IG rule; the weights are rescaled by the pointwise
    GIG/IG density ratio.  For non-integer p + 1/2 the raw weights sum to
    one only up to the quadrature error of the fractional moment, so by
    default they are renormalized; pass ``renormalize=False`` for the raw
    weights of the underlying construction.

    Moments x^r with r + p + 1/2 an integer in [1-n, n] are exact
    (up to the renormalization factor, itself 1 + O(weight-sum error)).
    """
    if not isinstance(params, GIGParams):
        params = GIGParams(*params)
    _check_size(n)
    return _gig_rule_cached(float(params.gamma), float(params.delta),
                            float(params.p), int(n), bool(renormalize))
