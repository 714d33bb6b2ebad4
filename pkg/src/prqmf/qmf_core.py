"""High-pass mate of a low-pass prototype.

Given a symmetric low-pass H0 with 2n+1 taps, the product
P(z) = H0(z) H1(-z) must have all odd-power coefficients zero except the
central one. Folding the symmetry of H1 into the unknowns yields a dense
n x n system whose solution is the unique (up to scale) 2n-1 tap mate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import analysis, poly
from .prototype import DesignSpec, design_h0

# Pivot threshold relative to max|A|; below it the system counts as singular.
# Kept near machine scale: sharp-window prototypes at n ~ 20 produce genuine
# pivots down to ~1e-14 that still solve to full residual accuracy. The
# residual check below is the real singularity gate.
PIVOT_RTOL = 1e-15
# Post-solve residual budget relative to the rhs.
RESIDUAL_RTOL = 1e-9


class SingularSystem(Exception):
    """The mate system has no usable pivot (degenerate prototype)."""


class DegeneratePassband(Exception):
    """Candidate high-pass has numerically zero gain at w = pi."""


@dataclass(frozen=True)
class DenseSystem:
    """Square system on the n independent taps b_0..b_{n-1} of the mate."""

    matrix: np.ndarray
    rhs: np.ndarray


def build_system(h0) -> DenseSystem:
    """One row per odd power i in {1, 3, ..., 2n-1} of P(z).

    The row weight on unknown b_j is a_{i-j} (-1)^j, with indices past the
    fold mapped back via b_{2n-2-j} = b_j and out-of-range terms dropped.
    Every rhs entry is zero except the last (central product term), pinned
    to 1 to exclude the trivial all-zero solution.
    """
    a = poly.require_symmetric(h0, "h0")
    if a.size < 3:
        raise ValueError("h0 needs at least 3 taps; no shorter mate exists")
    n = (a.size - 1) // 2
    mat = np.zeros((n, n))
    rhs = np.zeros(n)
    for row, i in enumerate(range(1, 2 * n, 2)):
        for j in range(0, min(i, 2 * n - 2) + 1):
            col = j if j < n else 2 * n - 2 - j
            mat[row, col] += a[i - j] * (-1) ** j
    rhs[-1] = 1.0
    return DenseSystem(mat, rhs)


def solve(system: DenseSystem) -> np.ndarray:
    """Gaussian elimination with partial pivoting."""
    a = np.array(system.matrix, dtype=float)
    b = np.array(system.rhs, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n) or b.shape != (n,):
        raise ValueError("system must be square with a matching rhs")
    pivot_floor = PIVOT_RTOL * float(np.max(np.abs(a)))
    for col in range(n):
        piv = col + int(np.argmax(np.abs(a[col:, col])))
        if abs(a[piv, col]) <= pivot_floor:
            raise SingularSystem(f"pivot {a[piv, col]:.3e} below threshold in column {col}")
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
            b[[col, piv]] = b[[piv, col]]
        factors = a[col + 1 :, col] / a[col, col]
        a[col + 1 :, col:] -= np.outer(factors, a[col, col:])
        b[col + 1 :] -= factors * b[col]
    x = np.zeros(n)
    for row in range(n - 1, -1, -1):
        x[row] = (b[row] - a[row, row + 1 :] @ x[row + 1 :]) / a[row, row]
    residual = float(np.max(np.abs(system.matrix @ x - system.rhs)))
    if residual > RESIDUAL_RTOL * max(float(np.max(np.abs(system.rhs))), 1e-300):
        raise SingularSystem(f"residual {residual:.3e} too large; system is ill-conditioned")
    return x


def unfold(b) -> np.ndarray:
    """Expand the n independent taps into the full symmetric 2n-1 sequence."""
    b = np.asarray(b, dtype=float)
    return np.concatenate([b, b[-2::-1]])


def normalize_passband(h1) -> np.ndarray:
    """Scale a symmetric filter so its amplitude at w = pi is exactly +1."""
    h1 = poly.require_symmetric(h1, "h1")
    gain = float(poly.amplitude(h1, math.pi))
    if abs(gain) < 1e-9:
        raise DegeneratePassband(f"|A(pi)| = {abs(gain):.3e}; mate is not high-pass")
    return h1 / gain


def basic_mate(h0) -> np.ndarray:
    """The unique passband-normalized 2n-1 tap high-pass mate of h0."""
    return normalize_passband(unfold(solve(build_system(h0))))


def design_pair(spec: DesignSpec) -> "analysis.FilterBank":
    """Design H0 and its basic mate, certify PR; no refinement applied."""
    h0 = design_h0(spec)
    h1 = basic_mate(h0)
    f0, f1 = analysis.synthesis_filters(h0, h1)
    report = analysis.verify_pr(h0, h1)
    return analysis.FilterBank(
        h0=h0,
        h1=h1,
        f0=f0,
        f1=f1,
        delay=report.delay,
        scale=report.scale,
        max_spurious=report.max_spurious,
        spec=spec,
        zero_freqs=(),
    )
