"""Scalar special functions used by every closed-form expression in the package.

All functions accept scalars or array-likes and broadcast in the usual
numpy way.  They are pure and safe to call from any number of threads.
"""

import numpy as np
from scipy import special as _sp

from .errors import DomainError, RangeError

__all__ = ["bessel_k", "log_bessel_k", "normal_cdf", "normal_pdf"]

_SQRT_2PI = np.sqrt(2.0 * np.pi)


def bessel_k(p, z):
    """Modified Bessel function of the second kind, K_p(z), for real order p.

    Evaluated as ``kve(p, z) * exp(-z)`` so that the exponentially scaled
    part carries the precision and large arguments (z up to ~700) do not
    underflow prematurely.  Symmetric in the order: K_p = K_{-p}.

    Parameters
    ----------
    p : float or array_like
        Order. Any finite real value.
    z : float or array_like
        Argument, must be > 0.

    Returns
    -------
    float or ndarray

    Raises
    ------
    DomainError
        If z <= 0 or an input is not finite.
    RangeError
        If the result overflows or underflows the double range (the true
        K_p(z) is always a finite positive number on z > 0).
    """
    p = np.asarray(p, dtype=float)
    z = np.asarray(z, dtype=float)
    if not (np.all(np.isfinite(p)) and np.all(np.isfinite(z))):
        raise DomainError("bessel_k requires finite order and argument")
    if np.any(z <= 0.0):
        raise DomainError("bessel_k requires z > 0")
    with np.errstate(over="ignore", under="ignore"):
        out = _sp.kve(p, z) * np.exp(-z)
    if np.any(~np.isfinite(out)) or np.any(out == 0.0):
        raise RangeError("bessel_k over/underflowed for order %s, argument %s"
                         % (p, z))
    return out[()] if out.ndim == 0 else out


def log_bessel_k(p, z):
    """log K_p(z), stable for arguments where K itself would over/underflow."""
    p = np.asarray(p, dtype=float)
    z = np.asarray(z, dtype=float)
    if np.any(z <= 0.0):
        raise DomainError("log_bessel_k requires z > 0")
    scaled = _sp.kve(p, z)
    if np.any(~np.isfinite(scaled)) or np.any(scaled <= 0.0):
        raise RangeError("log_bessel_k failed for order %s, argument %s" % (p, z))
    out = np.log(scaled) - z
    return out[()] if out.ndim == 0 else out


def normal_cdf(z):
    """Standard normal CDF.

    Uses the complementary error function, so both tails retain full
    relative accuracy; saturates cleanly to 0/1 for |z| beyond ~38.
    """
    out = _sp.ndtr(np.asarray(z, dtype=float))
    return out[()] if out.ndim == 0 else out


def normal_pdf(z):
    """Standard normal density exp(-z^2/2)/sqrt(2*pi)."""
    z = np.asarray(z, dtype=float)
    out = np.exp(-0.5 * z * z) / _SQRT_2PI
    return out[()] if out.ndim == 0 else out
