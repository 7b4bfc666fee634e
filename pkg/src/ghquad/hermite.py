"""Gauss-Hermite quadrature with respect to the standard normal density.

The nodes are the roots of the probabilists' Hermite polynomial He_n and
the weights sum to one, so the rule is a discrete probability measure
matching all normal moments up to order 2n-1.
"""

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from numpy.polynomial.hermite_e import hermegauss

from .errors import SizeError

__all__ = ["QuadratureRule", "hermite_rule", "MAX_RULE_SIZE"]

MAX_RULE_SIZE = 300


@dataclass(frozen=True)
class QuadratureRule:
    """An ordered discrete measure: strictly ascending nodes, positive weights.

    Instances are immutable (arrays are marked read-only) and freely
    shareable across threads.  ``degraded`` marks rules whose smallest
    weights underflowed and were dropped during construction.
    """

    nodes: np.ndarray
    weights: np.ndarray
    degraded: bool = field(default=False)

    def __post_init__(self):
        nodes = np.atleast_1d(np.asarray(self.nodes, dtype=float))
        weights = np.atleast_1d(np.asarray(self.weights, dtype=float))
        if nodes.shape != weights.shape or nodes.ndim != 1 or nodes.size < 1:
            raise ValueError("nodes and weights must be 1-d arrays of equal length >= 1")
        if np.any(np.diff(nodes) <= 0.0):
            raise ValueError("nodes must be strictly ascending")
        if np.any(weights <= 0.0) or np.any(~np.isfinite(weights)):
            raise ValueError("weights must be positive and finite")
        nodes.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)

    def __len__(self):
        return self.nodes.size

    def integrate(self, values):
        """Weighted sum of ``values`` (an array aligned with the nodes)."""
        return float(np.dot(self.weights, values))


@lru_cache(maxsize=None)
def hermite_rule(n: int) -> QuadratureRule:
    """n-point Gauss-Hermite rule for the standard normal density.

    Nodes are the roots of He_n; weights are positive, symmetric and
    normalized to sum to exactly one.  Results are memoized per n
    (lru_cache is safe under concurrent access).

    Raises
    ------
    SizeError
        If n is not an integer in [1, 300].
    """
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise SizeError("rule size must be an integer, got %r" % (n,))
    if n < 1 or n > MAX_RULE_SIZE:
        raise SizeError("rule size must be in [1, %d], got %d" % (MAX_RULE_SIZE, n))
    nodes, weights = hermegauss(int(n))
    weights = weights / weights.sum()
    return QuadratureRule(nodes, weights)
