"""Test kernels, their one-argument projections, and empirical plug-ins.

Three symmetric kernels are provided:

* Deshpande (IFRA): ``rho(x, y) = (h(x, y) + h(y, x)) / 2`` with ``h(x, y) = 1{x > b y}``
* Hollander-Proschan (NBU): degree 3, ``phi(x1, x2, x3) = 1{x1 > x2 + x3}`` averaged
  over which argument plays ``x1``
* Ahmad (DMRL): ``phi(x1, x2) = (3 x1 - x2) 1{x2 > x1}``, symmetrized

All indicator comparisons are strict and exact (no epsilon), so ties contribute 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numba import njit
from scipy import integrate

__all__ = [
    "KernelParams",
    "Ecdf",
    "deshpande_h1",
    "deshpande_rho",
    "hp_phi",
    "hp_rho",
    "ahmad_phi",
    "ahmad_rho",
    "deshpande_rho1_null",
    "hp_rho1_null",
    "ahmad_rho1_null",
    "deshpande_rho1_hat",
    "hp_rho1_hat",
    "ahmad_rho1_hat",
    "ecdf_eval",
    "hp_rho1_hat_at_sample",
]


@dataclass(frozen=True)
class KernelParams:
    """Kernel tuning; only the Deshpande scale fraction ``b`` exists."""

    b: float = 0.5

    def __post_init__(self):
        if not (0.0 < self.b < 1.0) or not math.isfinite(self.b):
            raise ValueError(f"b must lie strictly inside (0, 1), got {self.b!r}")


class Ecdf:
    """Right-continuous empirical distribution function ``F_n(x) = #{X_i <= x} / n``."""

    __slots__ = ("points",)

    def __init__(self, sample):
        values = np.sort(np.asarray(sample, dtype=float).ravel())
        if values.size == 0:
            raise ValueError("empirical distribution needs a non-empty sample")
        self.points = values

    def __repr__(self):
        return f"Ecdf(n={self.n})"

    @property
    def n(self) -> int:
        return self.points.size

    def __call__(self, x):
        counts = np.searchsorted(self.points, x, side="right")
        out = counts / self.n
        return float(out) if np.ndim(out) == 0 else out

    def survival(self, x):
        """``1 - F_n(x)``, the empirical survival function."""
        counts = self.n - np.searchsorted(self.points, x, side="right")
        out = counts / self.n
        return float(out) if np.ndim(out) == 0 else out


def ecdf_eval(ecdf: Ecdf, x):
    return ecdf(x)


def _as_ecdf(sample) -> Ecdf:
    return sample if isinstance(sample, Ecdf) else Ecdf(sample)


# ---------------------------------------------------------------------------
# Kernels
# ---------------------------------------------------------------------------


def deshpande_h1(x: float, y: float, params: KernelParams = KernelParams()) -> int:
    return 1 if x > params.b * y else 0


def deshpande_rho(x: float, y: float, params: KernelParams = KernelParams()) -> float:
    return (deshpande_h1(x, y, params) + deshpande_h1(y, x, params)) / 2


def hp_phi(x1: float, x2: float, x3: float) -> int:
    return 1 if x1 > x2 + x3 else 0


def hp_rho(x1: float, x2: float, x3: float) -> float:
    return (hp_phi(x1, x2, x3) + hp_phi(x2, x1, x3) + hp_phi(x3, x1, x2)) / 3


def ahmad_phi(x1: float, x2: float) -> float:
    return 3 * x1 - x2 if x2 > x1 else 0.0


def ahmad_rho(x1: float, x2: float) -> float:
    return (ahmad_phi(x1, x2) + ahmad_phi(x2, x1)) / 2


# ---------------------------------------------------------------------------
# Projections under the exponential null F(x) = 1 - exp(-x / mu)
# ---------------------------------------------------------------------------


def _check_mu(mu: float) -> None:
    if not mu > 0:
        raise ValueError(f"mean lifetime must be positive, got {mu!r}")


def deshpande_rho1_null(x, params: KernelParams = KernelParams(), mu: float = 1.0):
    """``(Fbar(b x) + F(x / b)) / 2`` for the exponential with mean ``mu``."""
    _check_mu(mu)
    b = params.b
    x = np.asarray(x, dtype=float)
    out = (np.exp(-b * x / mu) + 1.0 - np.exp(-x / (b * mu))) / 2
    return float(out) if out.ndim == 0 else out


_QUAD_OPTS = dict(epsabs=1e-10, epsrel=1e-10, limit=200)


def hp_rho1_null(x: float, mu: float = 1.0) -> float:
    """NBU projection under Exp(mean ``mu``) by adaptive quadrature."""
    _check_mu(mu)
    F = lambda t: -math.expm1(-t / mu) if t > 0 else 0.0
    Fbar = lambda t: math.exp(-t / mu) if t > 0 else 1.0
    f = lambda t: math.exp(-t / mu) / mu
    first = integrate.quad(lambda z: F(x - z) * f(z), 0.0, x, **_QUAD_OPTS)[0] if x > 0 else 0.0
    second = integrate.quad(lambda z: Fbar(x + z) * f(z), 0.0, np.inf, **_QUAD_OPTS)[0]
    third = integrate.quad(lambda z: F(z - x) * f(z), x, np.inf, **_QUAD_OPTS)[0]
    return (first + second + third) / 3


def ahmad_rho1_null(x: float, mu: float = 1.0) -> float:
    """DMRL projection under Exp(mean ``mu``) by adaptive quadrature."""
    _check_mu(mu)
    f = lambda t: math.exp(-t / mu) / mu
    upper = integrate.quad(lambda y: (3 * x - y) * f(y), x, np.inf, **_QUAD_OPTS)[0]
    lower = integrate.quad(lambda y: (3 * y - x) * f(y), 0.0, x, **_QUAD_OPTS)[0] if x > 0 else 0.0
    return (upper + lower) / 2


# ---------------------------------------------------------------------------
# Empirical plug-in projections
# ---------------------------------------------------------------------------


def deshpande_rho1_hat(x, sample, params: KernelParams = KernelParams()):
    """``(F_n(x / b) + 1 - F_n(x b)) / 2``."""
    F = _as_ecdf(sample)
    x = np.asarray(x, dtype=float)
    out = (np.asarray(F(x / params.b)) + 1.0 - np.asarray(F(x * params.b))) / 2
    return float(out) if out.ndim == 0 else out


def hp_rho1_hat(x, sample):
    """Plug-in NBU projection, evaluated term by term.

    The first and third sums use ``X_i <= x`` and ``X_i >= x`` as written, so an
    observation equal to ``x`` enters both. Costs O(n) memory per point of ``x``;
    for the projection at every observation use :func:`hp_rho1_hat_at_sample`.
    """
    F = _as_ecdf(sample)
    pts, n = F.points, F.n
    x = np.asarray(x, dtype=float)
    xs = np.atleast_1d(x)[:, None]
    first = np.where(pts <= xs, F(xs - pts), 0.0).sum(axis=1) / n
    second = F.survival(xs + pts).sum(axis=1) / n
    third = np.where(pts >= xs, F(pts - xs), 0.0).sum(axis=1) / n
    out = (first + second + third) / 3
    return float(out[0]) if x.ndim == 0 else out.reshape(x.shape)


def ahmad_rho1_hat(x, sample):
    """``2 x Fbar_n(x) - x / 2 + 3 Xbar / 2 - 2 sum(X_i 1{X_i > x}) / n``."""
    F = _as_ecdf(sample)
    pts, n = F.points, F.n
    tail = _tail_sums(pts)
    mean = math.fsum(pts) / n
    x = np.asarray(x, dtype=float)
    k = np.searchsorted(pts, x, side="right")
    out = 2 * x * np.asarray(F.survival(x)) - x / 2 + 1.5 * mean - 2 * tail[k] / n
    return float(out) if out.ndim == 0 else out


def _tail_sums(sorted_values: np.ndarray) -> np.ndarray:
    # tail[k] = sum(sorted_values[k:]); tail[n] = 0
    rev = np.cumsum(sorted_values[::-1])[::-1]
    return np.append(rev, 0.0)


@njit(cache=True, nogil=True)
def _hp_projection_counts(s):
    # s sorted ascending; returns, for each q, the three pair counts at x = s[q]:
    #   c1 = #{(i,k): s_i <= x, s_k <= x - s_i}
    #   c2 = #{(i,k): s_k <= x + s_i}
    #   c3 = #{(i,k): s_i >= x, s_k <= s_i - x}
    n = s.size
    c1 = np.zeros(n, np.int64)
    c2 = np.zeros(n, np.int64)
    c3 = np.zeros(n, np.int64)
    for i in range(n):
        p1 = 0
        p2 = 0
        for q in range(n):
            x = s[q]
            if s[i] <= x:
                t = x - s[i]
                while p1 < n and s[p1] <= t:
                    p1 += 1
                c1[q] += p1
            t = x + s[i]
            while p2 < n and s[p2] <= t:
                p2 += 1
            c2[q] += p2
        # third sum: threshold s_i - x shrinks as q grows
        p3 = n
        for q in range(n):
            x = s[q]
            if s[i] < x:
                break
            t = s[i] - x
            while p3 > 0 and s[p3 - 1] > t:
                p3 -= 1
            c3[q] += p3
    return c1, c2, c3


def hp_rho1_hat_at_sample(sample) -> np.ndarray:
    """Plug-in NBU projection at every observation, in sample order.

    Same values as ``hp_rho1_hat(sample, sample)`` but O(n^2) time and O(n) memory,
    using monotone pointers over the sorted sample.
    """
    x = np.asarray(sample, dtype=float)
    order = np.argsort(x, kind="stable")
    s = x[order]
    n = s.size
    c1, c2, c3 = _hp_projection_counts(s)
    nn = float(n) * n
    sorted_vals = (c1 / nn + (nn - c2) / nn + c3 / nn) / 3
    out = np.empty(n)
    out[order] = sorted_vals
    return out
