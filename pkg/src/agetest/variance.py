"""Long-run standard deviation of the projection series via overlapping block sums.

For a series ``Y_1..Y_n`` and block length ``l``, with ``S_j = Y_{j+1} + ... + Y_{j+l}``,

    B_n = mean_{j=0..n-l} |S_j - l * Ybar| / sqrt(l)

converges to ``sigma * sqrt(2/pi)``, so ``sigma_hat = B_n * sqrt(pi/2)``. The tests
feed it the empirical projection ``rho1_hat(X_i)`` of their kernel.

The block length defaults to ``floor(n ** (1/3))`` (rule ``"cbrt"``). Rule
``"sqrt"`` uses ``floor(sqrt(n))``; the published simulation tables agree much more
closely with it at the higher dependence orders.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .kernels import (
    KernelParams,
    ahmad_rho1_hat,
    deshpande_rho1_hat,
    hp_rho1_hat_at_sample,
)
from .kinds import TestKind
from .ustat import as_sample

__all__ = [
    "SQRT_HALF_PI",
    "BLOCK_RULES",
    "SigmaEstimate",
    "block_length",
    "b_n",
    "projection_series",
    "sigma_hat_for_test",
]

SQRT_HALF_PI = math.sqrt(math.pi / 2)


@dataclass(frozen=True)
class SigmaEstimate:
    sigma_hat: float
    block_length: int
    b_n_raw: float

    @property
    def degenerate(self) -> bool:
        return self.sigma_hat == 0.0


def _icbrt(n: int) -> int:
    k = int(round(n ** (1.0 / 3.0)))
    while k**3 > n:
        k -= 1
    while (k + 1) ** 3 <= n:
        k += 1
    return k


BLOCK_RULES = {"cbrt": _icbrt, "sqrt": math.isqrt}


def block_length(n: int, rule: str = "cbrt") -> int:
    """Floor of the cube root (or square root) of ``n``, in exact integer arithmetic."""
    n = int(n)
    if n < 2:
        raise ValueError(f"block length needs n >= 2, got {n}")
    try:
        root = BLOCK_RULES[rule]
    except KeyError:
        raise ValueError(f"unknown block rule {rule!r}; choose from {sorted(BLOCK_RULES)}") from None
    return max(root(n), 1)


def b_n(series, ell: int) -> float:
    y = np.asarray(series, dtype=float).ravel()
    n = y.size
    ell = int(ell)
    if not 1 <= ell <= n:
        raise ValueError(f"block length must satisfy 1 <= l <= n={n}, got {ell}")
    if not np.all(np.isfinite(y)):
        raise ValueError("series must be finite")
    if np.all(y == y[0]):
        return 0.0
    block_sums = np.lib.stride_tricks.sliding_window_view(y, ell).sum(axis=1)
    centered = np.abs(block_sums - ell * (math.fsum(y) / n))
    return math.fsum(centered) / ((n - ell + 1) * math.sqrt(ell))


def projection_series(sample, kind: TestKind, params: KernelParams = KernelParams()) -> np.ndarray:
    """``rho1_hat`` of the chosen test evaluated at every observation, in order."""
    kind = TestKind.parse(kind)
    x = as_sample(sample, kind.degree)
    if kind is TestKind.DESHPANDE:
        return deshpande_rho1_hat(x, x, params)
    if kind is TestKind.HOLLANDER_PROSCHAN:
        return hp_rho1_hat_at_sample(x)
    return ahmad_rho1_hat(x, x)


def sigma_hat_for_test(sample, kind: TestKind, params: KernelParams = KernelParams(),
                       block_rule: str = "cbrt") -> SigmaEstimate:
    y = projection_series(sample, kind, params)
    ell = block_length(y.size, block_rule)
    raw = b_n(y, ell)
    return SigmaEstimate(sigma_hat=raw * SQRT_HALF_PI, block_length=ell, b_n_raw=raw)
