"""Replication harness for size, power and estimator-quality studies.

Replication ``i`` of a run draws its sample from the stream
``(master_seed, i)``, so results do not depend on how replications are split
across worker threads; per-replication values are gathered back in index order
before any aggregation.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import reference
from .generators import RNG_ID, Family, GeneratorSpec, SeedSpec, format_value, gen_sequence, make_spec, scenario
from .kernels import KernelParams
from .kinds import TestKind
from .procedures import iid_standardized_from, normal_quantile, raw_statistic, standardized_statistic
from .variance import BLOCK_RULES, sigma_hat_for_test

__all__ = [
    "THREADS_ENV",
    "MonteCarloConfig",
    "Draws",
    "SizePowerReport",
    "EstimatorReport",
    "default_threads",
    "simulate",
    "size_power_report",
    "estimator_report",
    "run_size_experiment",
    "run_power_experiment",
    "run_estimator_experiment",
    "empirical_percentile",
    "reference_sigma",
    "TABLE_IDS",
    "reproduce_table",
    "SIZE_POWER_COLUMNS",
    "ESTIMATOR_COLUMNS",
    "rows_to_csv",
]

THREADS_ENV = "AGETEST_THREADS"


def default_threads() -> int:
    raw = os.environ.get(THREADS_ENV, "").strip()
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None


@dataclass(frozen=True)
class MonteCarloConfig:
    kind: TestKind
    spec: GeneratorSpec
    n: int
    r: int = 10_000
    alpha: float = 0.05
    master_seed: int = 0
    params: KernelParams = field(default_factory=KernelParams)
    block_rule: str = "cbrt"

    def __post_init__(self):
        object.__setattr__(self, "kind", TestKind.parse(self.kind))
        if self.block_rule not in BLOCK_RULES:
            raise ValueError(f"unknown block rule {self.block_rule!r}; choose from {sorted(BLOCK_RULES)}")
        if self.r < 100:
            raise ValueError(f"need at least 100 replications, got r={self.r}")
        if self.n < max(self.kind.degree, 2):
            raise ValueError(f"n={self.n} is too small for the {self.kind.value} test")
        if not 0 < self.alpha < 1:
            raise ValueError(f"alpha must lie in (0, 1), got {self.alpha!r}")


@dataclass
class Draws:
    """Per-replication values for one test, in replication order."""

    raw: np.ndarray
    sigma_hat: np.ndarray
    standardized: np.ndarray
    iid_standardized: np.ndarray

    @property
    def degenerate(self) -> np.ndarray:
        return self.sigma_hat == 0.0

    def to_dict(self) -> dict:
        return {k: [float(v) for v in getattr(self, k)] for k in
                ("raw", "sigma_hat", "standardized", "iid_standardized")}


def _one_replication(spec, n, master_seed, index, kinds, params, block_rule):
    x = gen_sequence(spec, n, SeedSpec(master_seed, index))
    mean = math.fsum(x) / n
    out = []
    for kind in kinds:
        raw = raw_statistic(x, kind, params)
        sigma = sigma_hat_for_test(x, kind, params, block_rule).sigma_hat
        z = standardized_statistic(raw, sigma, n, kind, params)
        z_iid = iid_standardized_from(raw, n, kind, params, mean) if mean > 0 else math.nan
        out.append((raw, sigma, z, z_iid))
    return out


def _run_chunk(args):
    spec, n, master_seed, lo, hi, kinds, params, block_rule = args
    return [_one_replication(spec, n, master_seed, i, kinds, params, block_rule) for i in range(lo, hi)]


def simulate(spec: GeneratorSpec, n: int, r: int, master_seed: int, kinds=tuple(TestKind),
             params: KernelParams = KernelParams(), threads: int | None = None,
             block_rule: str = "cbrt") -> dict[TestKind, Draws]:
    """Run ``r`` replications and evaluate every test in ``kinds`` on the same samples."""
    kinds = tuple(TestKind.parse(k) for k in kinds)
    threads = default_threads() if threads is None else max(1, int(threads))
    chunk = max(1, math.ceil(r / (4 * threads)))
    jobs = [(spec, n, master_seed, lo, min(lo + chunk, r), kinds, params, block_rule)
            for lo in range(0, r, chunk)]
    if threads == 1:
        parts = [_run_chunk(job) for job in jobs]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_run_chunk, jobs))
    rows = [rep for part in parts for rep in part]
    values = np.asarray(rows, dtype=float)  # (r, kinds, 4)
    return {
        kind: Draws(*(np.ascontiguousarray(values[:, j, c]) for c in range(4)))
        for j, kind in enumerate(kinds)
    }


# ---------------------------------------------------------------------------
# Aggregation
# ---------------------------------------------------------------------------


def empirical_percentile(values, p: float) -> float:
    """The ``ceil(p * r)``-th smallest value (lower empirical quantile)."""
    v = np.sort(np.asarray(values, dtype=float).ravel())
    if v.size == 0:
        raise ValueError("percentile of an empty collection")
    if not 0 < p < 1:
        raise ValueError(f"p must lie in (0, 1), got {p!r}")
    k = math.ceil(round(p * v.size, 9))
    return float(v[min(max(k, 1), v.size) - 1])


@dataclass(frozen=True)
class SizePowerReport:
    kind: str
    scenario: str | None
    family: str
    m: int
    a: float | None
    n: int
    r: int
    alpha: float
    master_seed: int
    sim_rate: float
    sim_critpt: float
    mc_stderr: float
    iid_sim_rate: float
    iid_sim_critpt: float
    iid_mc_stderr: float
    n_degenerate: int
    block_rule: str = "cbrt"

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class EstimatorReport:
    kind: str
    scenario: str | None
    m: int
    n: int
    r: int
    master_seed: int
    sigma_target: float
    mean_scaled_sigma: float
    bias: float
    emse: float
    mean_stderr: float
    block_rule: str = "cbrt"

    def to_dict(self) -> dict:
        return asdict(self)


def _rate_and_critpt(z: np.ndarray, kind: TestKind, alpha: float, usable: np.ndarray):
    r = z.size
    if kind.lower_tail:
        hits = usable & (z <= normal_quantile(alpha))
        p = alpha
    else:
        hits = usable & (z >= normal_quantile(1 - alpha))
        p = 1 - alpha
    rate = int(hits.sum()) / r
    crit = empirical_percentile(z[usable], p) if usable.any() else math.nan
    return rate, crit, math.sqrt(rate * (1 - rate) / r)


def size_power_report(draws: Draws, kind: TestKind, spec: GeneratorSpec, n: int, alpha: float = 0.05,
                      master_seed: int = 0, block_rule: str = "cbrt") -> SizePowerReport:
    kind = TestKind.parse(kind)
    ok = ~draws.degenerate & ~np.isnan(draws.standardized)
    rate, crit, se = _rate_and_critpt(draws.standardized, kind, alpha, ok)
    iid_ok = ~np.isnan(draws.iid_standardized)
    iid_rate, iid_crit, iid_se = _rate_and_critpt(draws.iid_standardized, kind, alpha, iid_ok)
    return SizePowerReport(
        kind=kind.value, scenario=spec.label, family=spec.family.value, m=spec.m, a=spec.a, n=n,
        r=draws.raw.size, alpha=alpha, master_seed=master_seed,
        sim_rate=rate, sim_critpt=crit, mc_stderr=se,
        iid_sim_rate=iid_rate, iid_sim_critpt=iid_crit, iid_mc_stderr=iid_se,
        n_degenerate=int(draws.degenerate.sum()), block_rule=block_rule,
    )


def estimator_report(draws: Draws, kind: TestKind, spec: GeneratorSpec, n: int, sigma_target: float,
                     master_seed: int = 0, block_rule: str = "cbrt") -> EstimatorReport:
    """Mean, bias and spread of ``k * sigma_hat`` across replications.

    ``sigma_target`` is on the same ``k * sigma`` scale as the estimates.
    """
    kind = TestKind.parse(kind)
    est = kind.scale * draws.sigma_hat
    r = est.size
    mean = math.fsum(est) / r
    emse = math.fsum((est - mean) ** 2) / (r - 1)
    return EstimatorReport(
        kind=kind.value, scenario=spec.label, m=spec.m, n=n, r=r, master_seed=master_seed,
        sigma_target=sigma_target, mean_scaled_sigma=mean, bias=abs(mean - sigma_target),
        emse=emse, mean_stderr=math.sqrt(emse / r), block_rule=block_rule,
    )


def _simulate_config(config: MonteCarloConfig, threads: int | None):
    return simulate(config.spec, config.n, config.r, config.master_seed, (config.kind,),
                    config.params, threads, config.block_rule)[config.kind]


def run_size_experiment(config: MonteCarloConfig, threads: int | None = None,
                        keep_draws: bool = False):
    """Simulated size and critical point under a null (exponential-marginal) design."""
    if config.spec.family is not Family.NULL_EXP:
        raise ValueError("size experiments need a null-exp generator; use run_power_experiment")
    draws = _simulate_config(config, threads)
    report = size_power_report(draws, config.kind, config.spec, config.n, config.alpha, config.master_seed,
                               config.block_rule)
    return (report, draws) if keep_draws else report


def run_power_experiment(config: MonteCarloConfig, threads: int | None = None,
                         keep_draws: bool = False):
    """Simulated power against an ageing alternative; ``sim_rate`` is the power."""
    if config.spec.family is Family.NULL_EXP:
        raise ValueError("power experiments need an alternative generator; use run_size_experiment")
    draws = _simulate_config(config, threads)
    report = size_power_report(draws, config.kind, config.spec, config.n, config.alpha, config.master_seed,
                               config.block_rule)
    return (report, draws) if keep_draws else report


def run_estimator_experiment(config: MonteCarloConfig, sigma_target: float | None = None,
                             threads: int | None = None, keep_draws: bool = False):
    if config.spec.family is not Family.NULL_EXP:
        raise ValueError("estimator experiments need a null-exp generator")
    if sigma_target is None:
        sigma_target = reference_sigma(config.kind, config.spec.m)
    draws = _simulate_config(config, threads)
    report = estimator_report(draws, config.kind, config.spec, config.n, sigma_target, config.master_seed,
                              config.block_rule)
    return (report, draws) if keep_draws else report


def reference_sigma(kind: TestKind, m: int) -> float:
    """Tabulated ``k * sigma`` for the null minimum-of-``m`` design (k = 2, 3, 2)."""
    kind = TestKind.parse(kind)
    try:
        return reference.ESTIMATOR[(kind.value, int(m))]["target"]
    except KeyError:
        raise ValueError(f"no reference sigma for {kind.value} with m={m}") from None


# ---------------------------------------------------------------------------
# Table reproduction
# ---------------------------------------------------------------------------

TABLE_IDS = ("4.1a", "4.1b", "4.1c", "4.2", "4.3", "4.4", "4.5")

SIZE_POWER_COLUMNS = (
    "table", "test", "scenario", "family", "m", "a", "n", "r", "alpha", "seed", "block_rule",
    "sim_rate", "mc_stderr", "sim_critpt",
    "iid_sim_rate", "iid_mc_stderr", "iid_sim_critpt", "n_degenerate",
    "ref_rate", "ref_critpt", "ref_iid_rate", "ref_iid_critpt",
)

ESTIMATOR_COLUMNS = (
    "table", "test", "scenario", "m", "n", "r", "seed", "block_rule",
    "sigma_target", "mean_scaled_sigma", "mean_stderr", "bias", "emse",
    "ref_mean", "ref_bias", "ref_emse",
)

_ESTIMATOR_TABLES = {"4.1a": TestKind.DESHPANDE, "4.1b": TestKind.HOLLANDER_PROSCHAN, "4.1c": TestKind.AHMAD}


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return "nan" if math.isnan(v) else format_value(v)
    return str(v)


def rows_to_csv(rows: list[dict], columns) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_fmt(row.get(c)) for c in columns])
    return buf.getvalue()


def _cells(table_id: str):
    if table_id in _ESTIMATOR_TABLES or table_id == "4.2":
        for m in reference.WINDOW_SIZES:
            for n in reference.SAMPLE_SIZES:
                yield make_spec(Family.NULL_EXP, m), n
        return
    labels, a_values = reference.POWER_TABLES[table_id]
    for label in labels:
        for a in a_values:
            for n in reference.SAMPLE_SIZES:
                yield scenario(label, a), n


def reproduce_table(table_id: str, r: int = 10_000, seed: int = 0, threads: int | None = None,
                    params: KernelParams = KernelParams(), alpha: float = 0.05, block_rule: str = "cbrt",
                    progress=None):
    """Run every cell of a table; returns ``(rows, columns)`` ready for :func:`rows_to_csv`."""
    if table_id not in TABLE_IDS:
        raise ValueError(f"unknown table {table_id!r}; choose from {', '.join(TABLE_IDS)}")
    rows = []
    if table_id in _ESTIMATOR_TABLES:
        kind = _ESTIMATOR_TABLES[table_id]
        for spec, n in _cells(table_id):
            draws = simulate(spec, n, r, seed, (kind,), params, threads, block_rule)[kind]
            rep = estimator_report(draws, kind, spec, n, reference_sigma(kind, spec.m), seed, block_rule)
            ref = reference.ESTIMATOR[(kind.value, spec.m)]
            rows.append(dict(rep.to_dict(), table=table_id, test=kind.value, seed=seed,
                             ref_mean=ref["mean"][n], ref_bias=ref["bias"][n], ref_emse=ref["emse"][n]))
            if progress:
                progress(rows[-1])
        return rows, ESTIMATOR_COLUMNS

    kinds = tuple(TestKind)
    for spec, n in _cells(table_id):
        all_draws = simulate(spec, n, r, seed, kinds, params, threads, block_rule)
        for j, kind in enumerate(kinds):
            rep = size_power_report(all_draws[kind], kind, spec, n, alpha, seed, block_rule)
            row = dict(rep.to_dict(), table=table_id, test=kind.value, seed=seed)
            if table_id == "4.2":
                ref = reference.SIZE[(spec.m, n)]
                row.update(ref_rate=ref["size"][j], ref_critpt=ref["critpt"][j],
                           ref_iid_rate=ref["iid_size"][j], ref_iid_critpt=ref["iid_critpt"][j])
            else:
                row.update(ref_rate=reference.POWER[(spec.label, spec.a, n)][j])
            rows.append(row)
            if progress:
                progress(row)
    return rows, SIZE_POWER_COLUMNS


def report_json(report, config: dict, draws: Draws | None = None) -> str:
    payload = {"config": config, "rng": RNG_ID, "report": report.to_dict()}
    if draws is not None:
        payload["draws"] = draws.to_dict()
    return json.dumps(payload, indent=2, allow_nan=True)
