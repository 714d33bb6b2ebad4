"""Bank certification and quality metrics.

Certifies that an (H0, H1) pair reduces the two-channel analysis/synthesis
cascade to a pure delay and scale, builds the alias-cancelling synthesis
filters, simulates the full bank on real signals, and scores magnitude
responses against ideal brick-wall targets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import poly
from .prototype import DesignSpec

PR_TOL = 1e-9
MSE_GRID_SIZE = 1024


class NoDelayFound(Exception):
    """Transfer function is numerically zero (trivial or broken pair)."""


@dataclass(frozen=True)
class PrReport:
    delay: int
    scale: float
    max_spurious: float
    tol: float = PR_TOL

    @property
    def passed(self) -> bool:
        return self.max_spurious <= self.tol and abs(self.scale) > 1e-9


@dataclass(frozen=True)
class FilterBank:
    """Certified analysis/synthesis quadruple with its delay and scale."""

    h0: np.ndarray
    h1: np.ndarray
    f0: np.ndarray
    f1: np.ndarray
    delay: int
    scale: float
    max_spurious: float = 0.0
    spec: DesignSpec | None = None
    zero_freqs: tuple[float, ...] = ()


@dataclass(frozen=True)
class ResponseMetrics:
    """MSE against an ideal brick-wall response, plus -10 log10(MSE)."""

    mse: float
    db: float
    grid_size: int
    ideal: str


@dataclass(frozen=True)
class ProcessReport:
    y: np.ndarray
    max_rel_error: float
    delay: int
    scale: float


def transfer(h0, h1) -> np.ndarray:
    """T(z) = 0.5 [H0(z) H1(-z) - H1(z) H0(-z)].

    Even-power coefficients cancel identically; a perfect-reconstruction
    pair leaves a single nonzero odd-power coefficient.
    """
    return 0.5 * (
        poly.multiply(h0, poly.alternate(h1)) - poly.multiply(h1, poly.alternate(h0))
    )


def verify_pr(h0, h1, tol: float = PR_TOL) -> PrReport:
    """Locate the delay term of T(z) and measure everything else against it."""
    t = transfer(h0, h1)
    idx = int(np.argmax(np.abs(t)))
    c = float(t[idx])
    floor = 1e-12 * float(np.max(np.abs(poly.as_poly(h0))) * np.max(np.abs(poly.as_poly(h1))))
    if abs(c) <= floor:
        raise NoDelayFound("transfer function is numerically zero")
    rest = np.delete(np.abs(t), idx)
    max_spurious = float(rest.max() / abs(c)) if rest.size else 0.0
    return PrReport(delay=idx, scale=c, max_spurious=max_spurious, tol=tol)


def synthesis_filters(h0, h1) -> tuple[np.ndarray, np.ndarray]:
    """F0(z) = H1(-z), F1(z) = -H0(-z); cancels the alias component."""
    return poly.alternate(h1), -poly.alternate(h0)


def _upsample2(v: np.ndarray) -> np.ndarray:
    u = np.zeros(2 * v.size)
    u[::2] = v
    return u


def process_bank(bank: FilterBank, x) -> ProcessReport:
    """Run a signal through the full analyze / down-up sample / synthesize chain.

    The reconstruction error is reported over the steady-state region only:
    the `delay` samples at each end of the signal are transients.
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if x.ndim != 1 or x.size < 1:
        raise ValueError("signal must be a nonempty 1-D sequence")
    v0 = np.convolve(bank.h0, x)[::2]
    v1 = np.convolve(bank.h1, x)[::2]
    y0 = np.convolve(bank.f0, _upsample2(v0))
    y1 = np.convolve(bank.f1, _upsample2(v1))
    y = np.zeros(max(y0.size, y1.size))
    y[: y0.size] += y0
    y[: y1.size] += y1
    d, c = bank.delay, bank.scale
    lo, hi = d, x.size - d
    if lo < hi:
        peak = float(np.max(np.abs(x)))
        err = float(np.max(np.abs(y[lo + d : hi + d] - c * x[lo:hi])))
        max_rel = err / (abs(c) * peak) if peak > 0.0 else 0.0
    else:
        max_rel = math.nan
    return ProcessReport(y=y, max_rel_error=max_rel, delay=d, scale=c)


def mse(filt, ideal: str, grid_size: int = MSE_GRID_SIZE) -> ResponseMetrics:
    """Mean squared magnitude error against an ideal half-band response.

    Uniform closed grid over [0, pi]; the target is 1 in the passband,
    0 in the stopband, and 0.5 at the pi/2 cutoff when the grid hits it.
    """
    if grid_size < 64:
        raise ValueError("grid_size must be >= 64")
    if ideal not in ("lowpass", "highpass"):
        raise ValueError("ideal must be 'lowpass' or 'highpass'")
    w = np.linspace(0.0, math.pi, grid_size)
    mags = np.abs(poly.evaluate(filt, w))
    half = math.pi / 2
    if ideal == "lowpass":
        target = np.where(w < half, 1.0, 0.0)
    else:
        target = np.where(w > half, 1.0, 0.0)
    target[np.isclose(w, half, rtol=0.0, atol=1e-12)] = 0.5
    value = float(np.mean((mags - target) ** 2))
    db = -10.0 * math.log10(value) if value > 0.0 else math.inf
    return ResponseMetrics(mse=value, db=db, grid_size=grid_size, ideal=ideal)


def validate_case_a(h0, h1) -> tuple[bool, list[str]]:
    """Check the linear-phase taxonomy class this design targets.

    Both filters symmetric with odd lengths, and the length difference an
    odd multiple of 2. Returns (ok, reasons) rather than raising: this is
    a diagnostic, not a contract violation.
    """
    reasons: list[str] = []
    for name, f in (("h0", h0), ("h1", h1)):
        f = poly.as_poly(f)
        if f.size % 2 == 0:
            reasons.append(f"{name} has even length {f.size}")
        elif not poly.is_symmetric(f):
            reasons.append(f"{name} is not mirror-symmetric")
    diff = abs(poly.as_poly(h1).size - poly.as_poly(h0).size)
    if diff % 4 != 2:
        reasons.append(f"length difference {diff} is not an odd multiple of 2")
    return (not reasons), reasons
