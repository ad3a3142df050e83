"""Tests of exponentiality against IFRA, NBU and DMRL ageing for stationary associated lifetimes."""

from .generators import (
    Family,
    GeneratorSpec,
    SeedSpec,
    gen_sequence,
    make_spec,
    read_sample,
    scenario,
    write_sample,
)
from .kernels import KernelParams
from .kinds import TestKind
from .montecarlo import (
    MonteCarloConfig,
    reproduce_table,
    run_estimator_experiment,
    run_power_experiment,
    run_size_experiment,
)
from .procedures import TestOutcome, run_test
from .ustat import ahmad_delta, deshpande_J, hp_N
from .variance import sigma_hat_for_test

__all__ = [
    "Family",
    "GeneratorSpec",
    "KernelParams",
    "MonteCarloConfig",
    "SeedSpec",
    "TestKind",
    "TestOutcome",
    "ahmad_delta",
    "deshpande_J",
    "gen_sequence",
    "hp_N",
    "make_spec",
    "read_sample",
    "reproduce_table",
    "run_estimator_experiment",
    "run_power_experiment",
    "run_size_experiment",
    "run_test",
    "scenario",
    "sigma_hat_for_test",
    "write_sample",
]
