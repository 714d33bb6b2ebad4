"""Low-pass prototype design.

The prototype is a symmetric odd-length FIR whose taps come from the
difference of two squared sinc functions (a trapezoid in frequency),
shaped by a selectable window and normalized to unit DC gain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import poly

WINDOW_KINDS = ("rectangular", "hamming", "gaussian", "kaiser")

GAUSSIAN_DEFAULT_ALPHA = 2.5
KAISER_DEFAULT_BETA = 6.0

# Power-series truncation for the order-zero modified Bessel function.
_I0_TERM_TOL = 1e-12


@dataclass(frozen=True)
class BandEdges:
    """Passband edge wp and stopband edge ws of the prototype, in radians."""

    wp: float
    ws: float

    def __post_init__(self):
        if not (0.0 < self.wp < self.ws < math.pi):
            raise ValueError(
                f"band edges must satisfy 0 < wp < ws < pi, got wp={self.wp}, ws={self.ws}"
            )

    @classmethod
    def symmetric(cls, delta: float = 0.1 * math.pi) -> "BandEdges":
        """Edges mirrored about pi/2, matching the QMF half-band convention."""
        return cls(math.pi / 2 - delta, math.pi / 2 + delta)


@dataclass(frozen=True)
class WindowSpec:
    """Window family plus its shape parameter (gaussian alpha / kaiser beta)."""

    kind: str = "rectangular"
    param: float | None = None

    def __post_init__(self):
        if self.kind not in WINDOW_KINDS:
            raise ValueError(f"unknown window {self.kind!r}; choose from {WINDOW_KINDS}")
        if self.param is not None:
            if self.kind == "gaussian" and self.param <= 0:
                raise ValueError("gaussian width alpha must be positive")
            if self.kind == "kaiser" and self.param < 0:
                raise ValueError("kaiser beta must be nonnegative")


@dataclass(frozen=True)
class DesignSpec:
    """Everything needed to design one filter bank.

    n is the half-order: the low-pass gets 2n+1 taps and its basic
    high-pass mate 2n-1. m is the refinement order (0 disables it).
    zero_freqs overrides the default stop-band zero placement.
    """

    n: int
    edges: BandEdges = field(default_factory=BandEdges.symmetric)
    window: WindowSpec = WindowSpec()
    m: int = 1
    grid_size: int = 1024
    zero_freqs: tuple[float, ...] | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("half-order n must be >= 1")
        if self.m < 0:
            raise ValueError("refinement order m must be >= 0")
        if self.grid_size < 64:
            raise ValueError("grid_size must be >= 64")
        if self.zero_freqs is not None:
            object.__setattr__(self, "zero_freqs", tuple(float(w) for w in self.zero_freqs))


def trapezoid_taps(edges: BandEdges, n: int) -> np.ndarray:
    """Squared-sinc difference taps for signed indices -n..n, stored causally.

    The frequency response of the ideal version is a trapezoid: unit gain
    up to wp, linear fall to zero at ws.
    """
    if n < 1:
        raise ValueError("half-order n must be >= 1")
    denom = 2.0 * math.pi * (edges.ws - edges.wp)
    c0 = edges.ws**2 / denom
    b0 = edges.wp**2 / denom
    k = np.arange(-n, n + 1)
    return c0 * np.sinc(edges.ws * k / (2 * math.pi)) ** 2 - b0 * np.sinc(
        edges.wp * k / (2 * math.pi)
    ) ** 2


def _bessel_i0(x: float) -> float:
    # I0(x) = sum_k ((x/2)^k / k!)^2, truncated once terms drop below tol.
    half_sq = (x / 2.0) ** 2
    term = 1.0
    total = 1.0
    k = 1
    while term >= _I0_TERM_TOL:
        term *= half_sq / (k * k)
        total += term
        k += 1
    return total


def window_weights(spec: WindowSpec, length: int) -> np.ndarray:
    """Symmetric window weights in (0,1] with peak 1 at the center tap."""
    if length < 1 or length % 2 == 0:
        raise ValueError("window length must be odd and >= 1")
    if spec.kind == "rectangular" or length == 1:
        return np.ones(length)
    mid = (length - 1) // 2
    k = np.arange(length)
    if spec.kind == "hamming":
        return 0.54 - 0.46 * np.cos(2 * math.pi * k / (length - 1))
    x = (k - mid) / mid
    if spec.kind == "gaussian":
        alpha = GAUSSIAN_DEFAULT_ALPHA if spec.param is None else spec.param
        return np.exp(-0.5 * (alpha * x) ** 2)
    beta = KAISER_DEFAULT_BETA if spec.param is None else spec.param
    i0_beta = _bessel_i0(beta)
    return np.array([_bessel_i0(beta * math.sqrt(1.0 - xi * xi)) for xi in x]) / i0_beta


def design_h0(spec: DesignSpec) -> np.ndarray:
    """Windowed trapezoid prototype, scaled to unit gain at w=0."""
    taps = trapezoid_taps(spec.edges, spec.n) * window_weights(spec.window, 2 * spec.n + 1)
    dc = taps.sum()
    if abs(dc) <= 1e-9:
        raise ValueError("degenerate prototype: DC gain vanishes before normalization")
    return poly.require_symmetric(taps / dc, "h0")
