"""Arithmetic on causal z-polynomials.

A polynomial is a 1-D float array whose index k holds the coefficient of
z^(-k). All filters in this package (analysis, synthesis, products,
transfer functions) live in this representation.
"""

from __future__ import annotations

import numpy as np

# Symmetry round-off budget, relative to the max-magnitude coefficient.
SYMMETRY_RTOL = 1e-12


def as_poly(coeffs) -> np.ndarray:
    """Validate and coerce a coefficient sequence to a 1-D float array."""
    p = np.atleast_1d(np.asarray(coeffs, dtype=float))
    if p.ndim != 1 or p.size < 1:
        raise ValueError("polynomial needs at least one coefficient")
    if not np.all(np.isfinite(p)):
        raise ValueError("polynomial coefficients must be finite")
    return p


def multiply(p, q) -> np.ndarray:
    """Polynomial product p(z)*q(z), i.e. coefficient convolution."""
    return np.convolve(as_poly(p), as_poly(q))


def alternate(p) -> np.ndarray:
    """Realize p(-z): sign-flip the odd-index coefficients."""
    out = as_poly(p).copy()
    out[1::2] *= -1.0
    return out


def evaluate(p, omegas):
    """Frequency response sum_k p[k] e^{-j w k} at each radian frequency."""
    p = as_poly(p)
    w = np.atleast_1d(np.asarray(omegas, dtype=float))
    k = np.arange(p.size)
    return np.exp(-1j * np.outer(w, k)) @ p


def is_symmetric(p, rtol: float = SYMMETRY_RTOL) -> bool:
    """True for odd-length mirror-symmetric coefficient sequences."""
    p = as_poly(p)
    if p.size % 2 == 0:
        return False
    scale = float(np.max(np.abs(p)))
    if scale == 0.0:
        return True
    return bool(np.max(np.abs(p - p[::-1])) <= rtol * scale)


def require_symmetric(p, name: str = "filter") -> np.ndarray:
    p = as_poly(p)
    if not is_symmetric(p):
        raise ValueError(f"{name} must have odd length and mirror symmetry")
    return p


def amplitude(p, omegas, center: int | None = None):
    """Zero-phase amplitude A(w) about `center` (default: array midpoint).

    For p symmetric about `center`, evaluate(p, w) = e^{-j w center} A(w),
    so A is real and carries the sign information the magnitude loses.
    """
    p = as_poly(p)
    if center is None:
        if p.size % 2 == 0:
            raise ValueError("amplitude needs odd length or an explicit center")
        center = (p.size - 1) // 2
    w = np.asarray(omegas, dtype=float)
    k = np.arange(p.size) - center
    return np.cos(np.multiply.outer(w, k)) @ p
