"""Real-order special-function evaluators shared by every pricing module.

Thin, validated wrappers around scipy.special for J/Y/I/K/Gamma plus two pieces
scipy does not provide directly: the complementary error function for complex
argument (via the Faddeeva function) and positive zeros of J_nu for real order.

Conventions
-----------
* ``bessel_i_scaled``/``bessel_k_scaled`` return e^{-x} I_nu(x) and e^{x} K_nu(x).
  Green-function exponents must be combined analytically by the caller before
  exponentiation; the unscaled values are available through explicit helpers.
* Zero tables are memoized per order and safe for concurrent readers once built.
"""
from __future__ import annotations

import threading

import numpy as np
import scipy.special as _sp
from scipy.optimize import brentq

__all__ = [
    "bessel_j",
    "bessel_y",
    "bessel_i",
    "bessel_i_scaled",
    "bessel_k",
    "bessel_k_scaled",
    "gamma_fn",
    "erfc_complex",
    "faddeeva_w",
    "jnu_zeros",
    "mcmahon_estimate",
]


def _check_finite(name, x):
    if not np.all(np.isfinite(x)):
        raise ValueError(f"{name} must be finite, got {x!r}")


def bessel_j(nu, x):
    """Bessel function of the first kind J_nu(x) for real order nu >= 0, x >= 0."""
    nu = float(nu)
    x = np.asarray(x, dtype=float)
    _check_finite("nu", nu)
    _check_finite("x", x)
    if nu < 0:
        raise ValueError(f"bessel_j requires nu >= 0, got {nu}")
    if np.any(x < 0):
        raise ValueError("bessel_j requires x >= 0")
    return _sp.jv(nu, x)


def bessel_y(nu, x):
    """Bessel function of the second kind Y_nu(x), x > 0 (singular at 0)."""
    nu = float(nu)
    x = np.asarray(x, dtype=float)
    _check_finite("nu", nu)
    _check_finite("x", x)
    if np.any(x <= 0):
        raise ValueError("bessel_y requires x > 0")
    return _sp.yv(nu, x)


def bessel_i_scaled(nu, x):
    """Exponentially scaled modified Bessel function e^{-x} I_nu(x), x >= 0."""
    nu = float(nu)
    x = np.asarray(x, dtype=float)
    _check_finite("nu", nu)
    _check_finite("x", x)
    if np.any(x < 0):
        raise ValueError("bessel_i_scaled requires x >= 0")
    return _sp.ive(nu, x)


def bessel_i(nu, x):
    """Unscaled I_nu(x); overflows for large x -- prefer bessel_i_scaled."""
    x = np.asarray(x, dtype=float)
    return bessel_i_scaled(nu, x) * np.exp(x)


def bessel_k_scaled(nu, x):
    """Exponentially scaled modified Bessel function e^{x} K_nu(x), x > 0."""
    nu = float(nu)
    x = np.asarray(x, dtype=float)
    _check_finite("nu", nu)
    _check_finite("x", x)
    if np.any(x <= 0):
        raise ValueError("bessel_k_scaled requires x > 0")
    return _sp.kve(nu, x)


def bessel_k(nu, x):
    """Unscaled K_nu(x); underflows for large x -- prefer bessel_k_scaled."""
    x = np.asarray(x, dtype=float)
    return bessel_k_scaled(nu, x) * np.exp(-x)


def gamma_fn(x):
    """Euler Gamma function with an explicit pole check at non-positive integers."""
    x = np.asarray(x, dtype=float)
    _check_finite("x", x)
    bad = (x <= 0) & (x == np.floor(x))
    if np.any(bad):
        raise ValueError(f"gamma_fn pole at non-positive integer argument {x[bad] if x.ndim else x}")
    return _sp.gamma(x)


def faddeeva_w(z):
    """Scaled complex error function w(z) = e^{-z^2} erfc(-iz) (Faddeeva function)."""
    return _sp.wofz(z)


def erfc_complex(z):
    """Complementary error function for complex argument.

    Uses erfc(z) = e^{-z^2} w(iz) for Re z >= 0 and the reflection
    erfc(z) = 2 - erfc(-z) otherwise, so w is only evaluated in the upper
    half-plane where the Faddeeva routine is accurate. Inherits overflow of the
    unscaled erfc for large |Im z|; callers needing the scaled combination
    should assemble exponents through faddeeva_w directly.
    """
    z = np.asarray(z, dtype=complex)
    if not np.all(np.isfinite(z)):
        raise ValueError("erfc_complex requires finite argument")
    out = np.empty_like(z)
    pos = z.real >= 0
    out[pos] = np.exp(-z[pos] ** 2) * _sp.wofz(1j * z[pos])
    zn = -z[~pos]
    out[~pos] = 2.0 - np.exp(-zn ** 2) * _sp.wofz(1j * zn)
    return out if out.ndim else out[()]


def mcmahon_estimate(nu, k):
    """McMahon asymptotic estimate of the k-th positive zero of J_nu."""
    a = (k + 0.5 * nu - 0.25) * np.pi
    mu = 4.0 * nu * nu
    return a - (mu - 1) / (8 * a) - 4 * (mu - 1) * (7 * mu - 31) / (3 * (8 * a) ** 3)


_zero_cache: dict[tuple[float, int], np.ndarray] = {}
_zero_lock = threading.Lock()


def _compute_jnu_zeros(nu: float, n: int) -> np.ndarray:
    # Consecutive zeros of J_nu are separated by more than pi/2 for nu >= 0,
    # so a pi/2 scan cannot skip a sign change. Start the scan just above the
    # small-argument region where J_nu > 0 (first zero exceeds nu).
    lo = max(nu, 1e-8)
    step = 0.5 * np.pi
    zeros = []
    f_lo = _sp.jv(nu, lo)
    x0 = lo
    guard = 0
    while len(zeros) < n:
        guard += 1
        if guard > 100 * n + 1000:
            raise RuntimeError(f"jnu_zeros bracket scan failed for nu={nu}")
        x1 = x0 + step
        f1 = _sp.jv(nu, x1)
        if f_lo == 0.0:
            zeros.append(x0)
        elif f_lo * f1 < 0:
            root = brentq(lambda x: _sp.jv(nu, x), x0, x1, xtol=1e-15, rtol=8.9e-16)
            # one Newton polish with J' = (J_{nu-1} - J_{nu+1})/2
            fp = 0.5 * (_sp.jv(nu - 1, root) - _sp.jv(nu + 1, root))
            if fp != 0.0:
                root -= _sp.jv(nu, root) / fp
            zeros.append(root)
        x0, f_lo = x1, f1
    out = np.array(zeros[:n])
    if np.any(np.abs(_sp.jv(nu, out)) >= 1e-12):
        raise RuntimeError(f"jnu_zeros polishing did not converge for nu={nu}")
    if np.any(np.diff(out) <= 0):
        raise RuntimeError(f"jnu_zeros produced non-increasing zeros for nu={nu}")
    return out


def jnu_zeros(nu, n):
    """First ``n`` positive zeros of J_nu, strictly increasing, |J_nu(mu_k)| < 1e-12.

    Real order nu >= 0. Results are cached per (nu, n-ceiling); the cache is
    written under a lock and read without one (safe after first use).
    """
    nu = float(nu)
    n = int(n)
    if not np.isfinite(nu) or nu < 0:
        raise ValueError(f"jnu_zeros requires real nu >= 0, got {nu}")
    if n < 1:
        raise ValueError("jnu_zeros requires n >= 1")
    for key, tab in _zero_cache.items():
        if key[0] == nu and key[1] >= n:
            return tab[:n].copy()
    with _zero_lock:
        tab = _compute_jnu_zeros(nu, n)
        _zero_cache[(nu, n)] = tab
    return tab.copy()
