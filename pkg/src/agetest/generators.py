"""Stationary associated lifetime sequences built from sliding-window minima.

Each output is a non-decreasing function of i.i.d. exponential base draws, so
every sequence is associated, and windows of size ``m`` make it m-dependent::

    X_j = g( min_{o < m} t_o(E_{j+o}) )

``t_o`` is the identity or ``e -> sqrt(c * e)``; ``g`` is the identity (null),
``log(1 + a v) / a`` (Makeham-type F1), or ``v ** (1/a)`` (Weibull F3). Base rates
and constants are fixed so that the marginal is exactly the family's target.

Scenario labels S1..S16 map to (family, m) as:

    S1-S4   null exponential          m = 2, 3, 5, 10
    S5-S8   F1(x) = 1 - exp(-(e^{ax} - 1)/a)
    S9-S12  F2(x) = 1 - exp(-x - x^2/a)   (a in {10, 5, 2} only)
    S13-S16 F3(x) = 1 - exp(-x^a)
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy import stats

__all__ = [
    "Family",
    "GeneratorSpec",
    "SeedSpec",
    "RNG_ID",
    "LFR_CONSTANTS",
    "make_spec",
    "scenario",
    "scenario_label",
    "make_rng",
    "gen_base_exp",
    "gen_sequence",
    "outer_transform",
    "offset_transform",
    "composed_survival",
    "target_survival",
    "target_cdf",
    "validate_marginal",
    "SampleFormatError",
    "format_value",
    "write_sample",
    "read_sample",
]

RNG_ID = "numpy.random.Philox(SeedSequence(master_seed, spawn_key=(stream_id,)))"


class Family(enum.Enum):
    NULL_EXP = "null-exp"
    MAKEHAM = "makeham"
    LINEAR_FAILURE_RATE = "lfr"
    WEIBULL = "weibull"

    @classmethod
    def parse(cls, name: "str | Family") -> "Family":
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower().replace("_", "-")
        aliases = {
            "null-exp": "null-exp", "null": "null-exp", "exp": "null-exp", "exponential": "null-exp",
            "makeham": "makeham", "makeham-gompertz": "makeham", "f1": "makeham",
            "lfr": "lfr", "linear-failure-rate": "lfr", "f2": "lfr",
            "weibull": "weibull", "f3": "weibull",
        }
        if key not in aliases:
            raise ValueError(f"unknown family {name!r}; choose from {[f.value for f in cls]}")
        return cls(aliases[key])


SCENARIO_WINDOWS = (2, 3, 5, 10)
_FAMILY_ORDER = (Family.NULL_EXP, Family.MAKEHAM, Family.LINEAR_FAILURE_RATE, Family.WEIBULL)

# a -> (a1, a2, a3, a4): the sqrt-scaling constants used at m = 2, 3, 5, 10
LFR_CONSTANTS: dict[float, tuple[float, float, float, float]] = {
    10.0: (10.0, 5.0, 20.0 / 3.0, 10.0),
    5.0: (5.0, 2.5, 10.0 / 3.0, 5.0),
    2.0: (2.0, 1.0, 4.0 / 3.0, 2.0),
}

# m -> (base rate, offsets carrying a sqrt term, index into the constants tuple)
_LFR_LAYOUT = {
    2: (1.0, (1,), 0),
    3: (1.0 / 2.0, (1,), 1),
    5: (1.0 / 3.0, (1, 4), 2),
    10: (1.0 / 5.0, (1, 4, 7, 8, 9), 3),
}


@dataclass(frozen=True)
class GeneratorSpec:
    """Recipe for one sequence design.

    ``window[o]`` is ``None`` for a plain base draw at offset ``o`` and ``c`` for
    ``sqrt(c * E)``. ``m = 1`` is the i.i.d. baseline of a family.
    """

    family: Family
    m: int
    a: float | None
    base_rate: float
    window: tuple[float | None, ...]

    @property
    def label(self) -> str | None:
        return scenario_label(self)

    def describe(self) -> dict:
        return {
            "family": self.family.value,
            "scenario": self.label,
            "m": self.m,
            "a": self.a,
            "base_rate": self.base_rate,
            "window": ["plain" if c is None else f"sqrt({c!r}*E)" for c in self.window],
            "constants": sorted({c for c in self.window if c is not None}),
        }


def make_spec(family: "str | Family", m: int, a: float | None = None) -> GeneratorSpec:
    family = Family.parse(family)
    m = int(m)
    if family is Family.LINEAR_FAILURE_RATE:
        if m not in _LFR_LAYOUT:
            raise ValueError(f"lfr designs exist only for m in {sorted(_LFR_LAYOUT)}, got m={m}")
        if a is None or float(a) not in LFR_CONSTANTS:
            raise ValueError(f"lfr designs exist only for a in {sorted(LFR_CONSTANTS)}, got a={a!r}")
        a = float(a)
        rate, sqrt_offsets, which = _LFR_LAYOUT[m]
        c = LFR_CONSTANTS[a][which]
        window = tuple(c if o in sqrt_offsets else None for o in range(m))
        return GeneratorSpec(family, m, a, rate, window)
    if m < 1:
        raise ValueError(f"window size must be >= 1, got {m}")
    if family is Family.NULL_EXP:
        if a is not None:
            raise ValueError("the null exponential design takes no shape parameter")
    else:
        if a is None or not (float(a) > 0 and math.isfinite(float(a))):
            raise ValueError(f"{family.value} needs a positive shape parameter a, got {a!r}")
        a = float(a)
    return GeneratorSpec(family, m, a, 1.0 / m, (None,) * m)


def scenario(label: "str | int", a: float | None = None) -> GeneratorSpec:
    """Spec for ``"S1"`` .. ``"S16"`` (``a`` required for S5-S16)."""
    k = int(str(label).strip().upper().lstrip("S"))
    if not 1 <= k <= 16:
        raise ValueError(f"scenario must be S1..S16, got {label!r}")
    family = _FAMILY_ORDER[(k - 1) // 4]
    m = SCENARIO_WINDOWS[(k - 1) % 4]
    return make_spec(family, m, a)


def scenario_label(spec: GeneratorSpec) -> str | None:
    if spec.m not in SCENARIO_WINDOWS:
        return None
    return f"S{4 * _FAMILY_ORDER.index(spec.family) + SCENARIO_WINDOWS.index(spec.m) + 1}"


# ---------------------------------------------------------------------------
# Random streams
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SeedSpec:
    master_seed: int
    stream_id: int = 0


def make_rng(seed: "SeedSpec | int | np.random.Generator") -> np.random.Generator:
    """Counter-based stream keyed by ``(master_seed, stream_id)``."""
    if isinstance(seed, np.random.Generator):
        return seed
    if not isinstance(seed, SeedSpec):
        seed = SeedSpec(int(seed))
    ss = np.random.SeedSequence(seed.master_seed, spawn_key=(seed.stream_id,))
    return np.random.Generator(np.random.Philox(ss))


def gen_base_exp(rate: float, count: int, seed) -> np.ndarray:
    """i.i.d. Exp(rate) draws (survival ``exp(-rate x)``) by inverse transform."""
    if not rate > 0:
        raise ValueError(f"rate must be positive, got {rate!r}")
    u = make_rng(seed).random(int(count))
    return -np.log1p(-u) / rate


def offset_transform(c: float | None, e):
    return e if c is None else np.sqrt(c * np.asarray(e, dtype=float))


def outer_transform(spec: GeneratorSpec, v):
    v = np.asarray(v, dtype=float)
    if spec.family is Family.MAKEHAM:
        return np.log1p(spec.a * v) / spec.a
    if spec.family is Family.WEIBULL:
        return v ** (1.0 / spec.a)
    return v


def gen_sequence(spec: GeneratorSpec, n: int, seed) -> np.ndarray:
    n = int(n)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    base = gen_base_exp(spec.base_rate, n + spec.m - 1, seed)
    out = None
    for o, c in enumerate(spec.window):
        term = offset_transform(c, base[o:o + n])
        out = term if out is None else np.minimum(out, term)
    return outer_transform(spec, out)


# ---------------------------------------------------------------------------
# Marginals
# ---------------------------------------------------------------------------


def _inner_threshold(spec: GeneratorSpec, x: np.ndarray) -> np.ndarray:
    # g^{-1}(x): X > x  <=>  min > g^{-1}(x)
    if spec.family is Family.MAKEHAM:
        return np.expm1(spec.a * x) / spec.a
    if spec.family is Family.WEIBULL:
        return x ** spec.a
    return x


def composed_survival(spec: GeneratorSpec, x):
    """Survival of one output coordinate from the per-offset factors.

    ``P(min_o t_o(E_o) > v) = prod_o P(t_o(E_o) > v)`` by independence, with
    ``P(E > v) = exp(-rate v)`` and ``P(sqrt(c E) > v) = exp(-rate v^2 / c)``.
    """
    x = np.asarray(x, dtype=float)
    v = _inner_threshold(spec, x)
    out = np.ones_like(v)
    for c in spec.window:
        out = out * (np.exp(-spec.base_rate * v) if c is None else np.exp(-spec.base_rate * v * v / c))
    return out


def target_survival(spec: GeneratorSpec, x):
    x = np.asarray(x, dtype=float)
    a = spec.a
    if spec.family is Family.MAKEHAM:
        return np.exp(-np.expm1(a * x) / a)
    if spec.family is Family.LINEAR_FAILURE_RATE:
        return np.exp(-x - x * x / a)
    if spec.family is Family.WEIBULL:
        return np.exp(-(x ** a))
    return np.exp(-x)


def target_cdf(spec: GeneratorSpec, x):
    return 1.0 - target_survival(spec, x)


def validate_marginal(spec: GeneratorSpec, n_large: int, seed) -> float:
    """Kolmogorov-Smirnov distance between a long generated run and the target.

    Under dependence the KS null distribution does not apply; only the raw
    distance is meaningful.
    """
    if n_large < 10_000:
        raise ValueError(f"marginal validation needs n_large >= 10000, got {n_large}")
    x = gen_sequence(spec, n_large, seed)
    return float(stats.kstest(x, lambda t: target_cdf(spec, t)).statistic)


# ---------------------------------------------------------------------------
# Text sample files
# ---------------------------------------------------------------------------


class SampleFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def format_value(v: float) -> str:
    """Shortest decimal that round-trips to the same double."""
    return repr(float(v))


def write_sample(path, values) -> None:
    text = "".join(format_value(v) + "\n" for v in np.asarray(values, dtype=float))
    Path(path).write_text(text, encoding="utf-8", newline="\n")


def read_sample(path) -> np.ndarray:
    """One non-negative decimal per line; blank lines and ``#`` comments are skipped."""
    values = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                v = float(line)
            except ValueError:
                raise SampleFormatError(f"not a number: {line!r}", lineno) from None
            if not math.isfinite(v):
                raise SampleFormatError(f"not finite: {line!r}", lineno)
            if v < 0:
                raise SampleFormatError(f"negative lifetime: {line!r}", lineno)
            values.append(v)
    return np.asarray(values, dtype=float)
