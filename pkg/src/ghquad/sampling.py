"""Random-variate generation.

The GH sampler draws a mixture component through the cumulative weights
of the GIG rule and then one normal variate, so its sampling
distribution is exactly the finite mixture of the quadrature (not the
continuous GH law).  The exact IG sampler of Michael-Schucany-Haas is
provided as the statistical baseline.

Uniforms are produced as dyadic midpoints (k + 1/2)/2^53, which lie
strictly inside (0, 1) and make the antithetic complement 1 - u another
exact grid point.  Normals come from the inverse-CDF transform so that
the antithetic pair (Z, -Z) corresponds exactly to (U, 1-U).
"""

import math

import numpy as np
from scipy.special import ndtri

from .errors import DomainError, ParameterError
from .params import GHParams, GIGParams, IGParams
from .mapping import normal_to_ig
from .quadrature import gig_rule

__all__ = [
    "RngStream",
    "select_component",
    "sample_gh",
    "sample_ig_exact",
    "sample_gig_discrete",
]

_TWO53 = float(1 << 53)


class RngStream:
    """Seedable, splittable uniform/normal source (counter-based Philox core).

    Identical seeds reproduce identical sequences bit for bit.  A stream
    is single-owner; for parallel work derive disjoint children with
    :meth:`substream`, whose output depends only on (seed, index).
    """

    def __init__(self, seed: int, _spawn_key: tuple = ()):
        self.seed = int(seed)
        self._spawn_key = tuple(_spawn_key)
        seq = np.random.SeedSequence(self.seed, spawn_key=self._spawn_key)
        self._gen = np.random.Generator(np.random.Philox(seq))

    def uniform(self, size=None):
        """Uniform variates strictly inside (0, 1)."""
        k = self._gen.integers(0, 1 << 53, size=size)
        return (k + 0.5) / _TWO53

    def normal(self, size=None):
        """Standard normal variates via the inverse-CDF transform."""
        return ndtri(self.uniform(size=size))

    def substream(self, index: int) -> "RngStream":
        """Deterministic child stream number ``index`` of this seed."""
        return RngStream(self.seed, _spawn_key=self._spawn_key + (int(index),))


def _cumulative_weights(weights):
    w = np.asarray(weights, dtype=float)
    if w.ndim != 1 or w.size < 1 or np.any(w < 0.0) or np.any(~np.isfinite(w)):
        raise ParameterError("weights must be a 1-d array of nonnegative reals")
    total = math.fsum(w)
    if abs(total - 1.0) > 1e-9:
        raise ParameterError("weights must sum to 1, got %.17g" % total)
    cum = np.cumsum(w)
    cum[-1] = 1.0
    return cum


def select_component(weights, u):
    """Index of the first component whose cumulative weight reaches u.

    Implements the inclusive rule index(u) = min{k : u <= w_1 + ... + w_k}
    (0-based), so P(index = k) = w_k exactly and a zero-weight component
    can never be selected.  ``u`` may be a scalar or an array in (0, 1).
    """
    cum = _cumulative_weights(weights)
    u_arr = np.asarray(u, dtype=float)
    if np.any(u_arr <= 0.0) or np.any(u_arr >= 1.0):
        raise DomainError("u must lie strictly inside (0, 1)")
    idx = np.searchsorted(cum, u_arr, side="left")
    return int(idx) if np.ndim(u) == 0 else idx


def _gh_nodes(params: GHParams, n_quad: int):
    params = params if isinstance(params, GHParams) else GHParams(*params)
    rule = gig_rule(params.mixing(), n_quad, renormalize=True)
    return params, rule.nodes, _cumulative_weights(rule.weights)


def sample_gh(params: GHParams, n_quad: int, count: int, rng: RngStream,
              antithetic: bool = False):
    """Draw ``count`` GH variates mu + beta*x_k(U) + sqrt(x_k(U)) * Z.

    With ``antithetic`` the draws come in consecutive pairs built from
    (U, 1-U) and (Z, -Z).  The empirical law converges to the quadrature
    mixture, whose distance to the exact GH law is the rule error.
    """
    if count < 1:
        raise DomainError("count must be >= 1")
    params, nodes, cum = _gh_nodes(params, n_quad)
    if antithetic:
        half = (count + 1) // 2
        u = rng.uniform(half)
        z = ndtri(rng.uniform(half))
        x1 = nodes[np.searchsorted(cum, u, side="left")]
        x2 = nodes[np.searchsorted(cum, 1.0 - u, side="left")]
        out = np.empty(2 * half)
        out[0::2] = params.mu + params.beta * x1 + np.sqrt(x1) * z
        out[1::2] = params.mu + params.beta * x2 - np.sqrt(x2) * z
        return out[:count]
    u = rng.uniform(count)
    z = ndtri(rng.uniform(count))
    x = nodes[np.searchsorted(cum, u, side="left")]
    return params.mu + params.beta * x + np.sqrt(x) * z


def sample_ig_exact(params: IGParams, count: int, rng: RngStream):
    """Exact IG(gamma, delta) variates (Michael-Schucany-Haas).

    For |Z| the two mapping roots x+ and x- = 1/x+ are candidates;
    choosing x+ with probability 1/(1 + x+) makes the scaled draw exact.
    Consequently sigma^2 (X' - 1)^2 / X' with X' = X*gamma/delta is
    chi-squared with one degree of freedom.
    """
    params = params if isinstance(params, IGParams) else IGParams(*params)
    if params.gamma <= 0.0:
        raise ParameterError("exact IG sampling requires gamma > 0")
    if count < 1:
        raise DomainError("count must be >= 1")
    sigma = params.sigma
    z = np.abs(ndtri(rng.uniform(count)))
    x_plus = normal_to_ig(sigma, z)
    pick_plus = rng.uniform(count) <= 1.0 / (1.0 + x_plus)
    x = np.where(pick_plus, x_plus, 1.0 / x_plus)
    return (params.delta / params.gamma) * x


def sample_gig_discrete(params: GIGParams, n_quad: int, count: int, rng: RngStream):
    """Draw mixing values from the discrete support of the GIG rule.

    The support has exactly n_quad points, so this is only a coarse
    stand-in for continuous GIG sampling; its moments match the rule's.
    """
    if not isinstance(params, GIGParams):
        params = GIGParams(*params)
    if count < 1:
        raise DomainError("count must be >= 1")
    rule = gig_rule(params, n_quad, renormalize=True)
    cum = _cumulative_weights(rule.weights)
    u = rng.uniform(count)
    return rule.nodes[np.searchsorted(cum, u, side="left")]
