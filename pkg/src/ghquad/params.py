"""Validated parameter records for the IG, GIG and GH distributions.

Two equivalent GH parameterizations are supported: the (mu, beta, gamma,
delta, p) form used throughout the computational layer, and the
(mu, alpha, beta, delta, p) form common in the empirical literature,
related by alpha^2 = beta^2 + gamma^2 with |beta| < alpha.
"""

import math
from dataclasses import dataclass

from .errors import ParameterError

__all__ = [
    "IGParams",
    "GIGParams",
    "GHParams",
    "GHParamsAlpha",
    "from_alpha_parameterization",
]


def _require(cond, msg):
    if not cond:
        raise ParameterError(msg)


@dataclass(frozen=True)
class IGParams:
    """Inverse Gaussian IG(gamma, delta): drift rate gamma >= 0, barrier delta > 0.

    gamma = 0 is admissible only for density evaluation; quadrature and
    sampling require gamma > 0.
    """

    gamma: float
    delta: float

    def __post_init__(self):
        _require(math.isfinite(self.gamma) and self.gamma >= 0.0,
                 "IG gamma must be finite and >= 0, got %r" % (self.gamma,))
        _require(math.isfinite(self.delta) and self.delta > 0.0,
                 "IG delta must be finite and > 0, got %r" % (self.delta,))

    @property
    def sigma(self) -> float:
        """Scale-free shape parameter sqrt(gamma*delta)."""
        return math.sqrt(self.gamma * self.delta)


@dataclass(frozen=True)
class GIGParams:
    """Generalized inverse Gaussian GIG(gamma, delta, p)."""

    gamma: float
    delta: float
    p: float

    def __post_init__(self):
        _require(math.isfinite(self.gamma) and self.gamma > 0.0,
                 "GIG gamma must be finite and > 0, got %r" % (self.gamma,))
        _require(math.isfinite(self.delta) and self.delta > 0.0,
                 "GIG delta must be finite and > 0, got %r" % (self.delta,))
        _require(math.isfinite(self.p), "GIG order p must be finite, got %r" % (self.p,))

    @property
    def sigma(self) -> float:
        return math.sqrt(self.gamma * self.delta)

    def to_ig(self) -> IGParams:
        return IGParams(self.gamma, self.delta)


@dataclass(frozen=True)
class GHParams:
    """Generalized hyperbolic GH(mu, beta, gamma, delta, p).

    The variate is mu + beta*X + sqrt(X)*Z for X ~ GIG(gamma, delta, p)
    and independent standard normal Z.
    """

    mu: float
    beta: float
    gamma: float
    delta: float
    p: float

    def __post_init__(self):
        _require(math.isfinite(self.mu), "GH mu must be finite")
        _require(math.isfinite(self.beta), "GH beta must be finite")
        _require(math.isfinite(self.gamma) and self.gamma > 0.0,
                 "GH gamma must be finite and > 0, got %r" % (self.gamma,))
        _require(math.isfinite(self.delta) and self.delta > 0.0,
                 "GH delta must be finite and > 0, got %r" % (self.delta,))
        _require(math.isfinite(self.p), "GH order p must be finite")

    @property
    def alpha(self) -> float:
        return math.hypot(self.beta, self.gamma)

    @property
    def sigma(self) -> float:
        return math.sqrt(self.gamma * self.delta)

    def mixing(self) -> GIGParams:
        """The GIG mixing distribution of the variance."""
        return GIGParams(self.gamma, self.delta, self.p)

    def to_dict(self) -> dict:
        return {"mu": self.mu, "beta": self.beta, "gamma": self.gamma,
                "delta": self.delta, "p": self.p}

    @classmethod
    def from_dict(cls, d: dict) -> "GHParams":
        return cls(mu=float(d["mu"]), beta=float(d["beta"]), gamma=float(d["gamma"]),
                   delta=float(d["delta"]), p=float(d["p"]))


@dataclass(frozen=True)
class GHParamsAlpha:
    """GH parameters in the (mu, alpha, beta, delta, p) form, |beta| < alpha."""

    mu: float
    alpha: float
    beta: float
    delta: float
    p: float

    def __post_init__(self):
        _require(math.isfinite(self.alpha) and self.alpha > 0.0,
                 "alpha must be finite and > 0, got %r" % (self.alpha,))
        _require(math.isfinite(self.beta) and abs(self.beta) < self.alpha,
                 "|beta| < alpha required, got beta=%r alpha=%r" % (self.beta, self.alpha))
        _require(math.isfinite(self.mu), "mu must be finite")
        _require(math.isfinite(self.delta) and self.delta > 0.0,
                 "delta must be finite and > 0, got %r" % (self.delta,))
        _require(math.isfinite(self.p), "order p must be finite")

    def to_dict(self) -> dict:
        return {"mu": self.mu, "alpha": self.alpha, "beta": self.beta,
                "delta": self.delta, "p": self.p}


def from_alpha_parameterization(q: GHParamsAlpha) -> GHParams:
    """Convert (mu, alpha, beta, delta, p) to the gamma form.

    gamma = sqrt(alpha^2 - beta^2); all other fields carry over.  The
    round trip through GHParams.alpha is exact to floating precision.
    """
    gamma = math.sqrt((q.alpha - q.beta) * (q.alpha + q.beta))
    return GHParams(mu=q.mu, beta=q.beta, gamma=gamma, delta=q.delta, p=q.p)
