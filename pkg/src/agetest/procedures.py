"""Decision procedures for exponentiality against IFRA, NBU and DMRL ageing.

Each test standardizes its U-statistic as ``sqrt(n) (U - theta0) / (k * sigma_hat)``
with ``k`` = 2, 3, 2 and ``sigma_hat`` the block-sum estimate of the long-run
standard deviation, which stays valid for stationary associated samples. The
classical i.i.d. standardization is always reported alongside for comparison.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np
from scipy import special

from .kernels import KernelParams
from .kinds import TestKind
from .ustat import ahmad_delta, as_sample, deshpande_J, hp_N
from .variance import SigmaEstimate, sigma_hat_for_test

__all__ = [
    "TestKind",
    "TestOutcome",
    "xi1",
    "HP_IID_VARIANCE",
    "AHMAD_IID_VARIANCE",
    "normal_cdf",
    "normal_quantile",
    "raw_statistic",
    "standardized_statistic",
    "iid_standardized",
    "iid_standardized_from",
    "rejects",
    "p_value",
    "run_test",
]

HP_IID_VARIANCE = 5.0 / 432.0
AHMAD_IID_VARIANCE = 1.0 / 3.0


def normal_cdf(x):
    return special.ndtr(x)


def normal_quantile(p):
    p_arr = np.asarray(p, dtype=float)
    if np.any((p_arr <= 0) | (p_arr >= 1)) or np.any(np.isnan(p_arr)):
        raise ValueError(f"probability must lie in (0, 1), got {p!r}")
    out = special.ndtri(p_arr)
    return float(out) if out.ndim == 0 else out


def xi1(b: float = 0.5) -> float:
    """Variance of the Deshpande projection under the exponential null."""
    return 0.25 * (
        1
        + b / (2 + b)
        + 1 / (2 * b + 1)
        + 2 * (1 - b) / (1 + b)
        - 2 * b / (1 + b + b * b)
        - 4 / (b + 1) ** 2
    )


def raw_statistic(sample, kind: TestKind, params: KernelParams = KernelParams()) -> float:
    kind = TestKind.parse(kind)
    if kind is TestKind.DESHPANDE:
        return deshpande_J(sample, params)
    if kind is TestKind.HOLLANDER_PROSCHAN:
        return hp_N(sample)
    return ahmad_delta(sample)


def _safe_ratio(num: float, den: float) -> float:
    if den > 0:
        return num / den
    if num == 0:
        return math.nan
    return math.copysign(math.inf, num)


def standardized_statistic(raw: float, sigma_hat: float, n: int, kind: TestKind,
                           params: KernelParams = KernelParams()) -> float:
    """Association-aware standardization; +-inf (or nan) when ``sigma_hat`` is 0."""
    kind = TestKind.parse(kind)
    num = math.sqrt(n) * (raw - kind.null_mean(params))
    return _safe_ratio(num, kind.scale * sigma_hat)


def iid_standardized_from(raw: float, n: int, kind: TestKind, params: KernelParams = KernelParams(),
                          mean: float | None = None) -> float:
    kind = TestKind.parse(kind)
    num = math.sqrt(n) * (raw - kind.null_mean(params))
    if kind is TestKind.DESHPANDE:
        return num / (2 * math.sqrt(xi1(params.b)))
    if kind is TestKind.HOLLANDER_PROSCHAN:
        return num / math.sqrt(HP_IID_VARIANCE)
    if mean is None or not mean > 0:
        raise ValueError("the i.i.d. Ahmad standardization needs a positive sample mean")
    return num / (mean * math.sqrt(AHMAD_IID_VARIANCE))


def iid_standardized(sample, kind: TestKind, params: KernelParams = KernelParams()) -> float:
    """Standardization valid only for i.i.d. data (no covariance terms)."""
    kind = TestKind.parse(kind)
    x = as_sample(sample, kind.degree)
    mean = math.fsum(x) / x.size
    return iid_standardized_from(raw_statistic(x, kind, params), x.size, kind, params, mean)


def _lower(kind: TestKind, dual: bool) -> bool:
    return kind.lower_tail != dual


def rejects(standardized: float, kind: TestKind, alpha: float = 0.05, dual: bool = False) -> bool:
    """Upper-tail tests reject at ``T >= z_{1-alpha}``, the NBU test at ``T <= z_alpha``."""
    kind = TestKind.parse(kind)
    if math.isnan(standardized):
        return False
    if _lower(kind, dual):
        return standardized <= normal_quantile(alpha)
    return standardized >= normal_quantile(1 - alpha)


def p_value(standardized: float, kind: TestKind, dual: bool = False) -> float:
    kind = TestKind.parse(kind)
    if math.isnan(standardized):
        return math.nan
    if _lower(kind, dual):
        return float(normal_cdf(standardized))
    return float(normal_cdf(-standardized))


@dataclass(frozen=True)
class TestOutcome:
    __test__ = False

    kind: TestKind
    n: int
    raw_statistic: float
    theta0: float
    sigma: SigmaEstimate
    standardized: float
    p_value: float
    reject: bool
    alpha: float
    iid_standardized: float
    iid_p_value: float
    iid_reject: bool
    dual: bool = False

    @property
    def degenerate(self) -> bool:
        return self.sigma.degenerate

    @property
    def alternative(self) -> str:
        return self.kind.dual_alternative if self.dual else self.kind.alternative

    def to_dict(self) -> dict:
        d = asdict(self)
        d["kind"] = self.kind.value
        d["alternative"] = self.alternative
        d["degenerate"] = self.degenerate
        d["sigma"] = dict(d["sigma"], degenerate=self.degenerate)
        return d


def run_test(sample, kind: TestKind, params: KernelParams = KernelParams(), alpha: float = 0.05,
             dual: bool = False, block_rule: str = "cbrt") -> TestOutcome:
    """Run one ageing test on a stationary (possibly associated) sample.

    ``dual=True`` tests against the negative-ageing dual (DFRA, NWU, IMRL) by
    flipping the rejection tail; the statistic itself is unchanged. A zero
    ``sigma_hat`` gives an infinite standardized value and never rejects.
    """
    kind = TestKind.parse(kind)
    if not 0 < alpha < 1:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha!r}")
    x = as_sample(sample, kind.degree)
    n = x.size
    raw = raw_statistic(x, kind, params)
    sigma = sigma_hat_for_test(x, kind, params, block_rule)
    z = standardized_statistic(raw, sigma.sigma_hat, n, kind, params)
    mean = math.fsum(x) / n
    if kind is TestKind.AHMAD and not mean > 0:
        z_iid = math.nan
    else:
        z_iid = iid_standardized_from(raw, n, kind, params, mean)
    reject = (not sigma.degenerate) and rejects(z, kind, alpha, dual)
    return TestOutcome(
        kind=kind,
        n=n,
        raw_statistic=raw,
        theta0=kind.null_mean(params),
        sigma=sigma,
        standardized=z,
        p_value=math.nan if sigma.degenerate else p_value(z, kind, dual),
        reject=reject,
        alpha=alpha,
        iid_standardized=z_iid,
        iid_p_value=p_value(z_iid, kind, dual),
        iid_reject=rejects(z_iid, kind, alpha, dual),
        dual=dual,
    )
