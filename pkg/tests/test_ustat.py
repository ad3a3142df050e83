import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from agetest.kernels import KernelParams
from agetest.ustat import ahmad_delta, as_sample, deshpande_J, hp_N, u_stat_deg2, u_stat_deg3

tied = st.lists(st.integers(0, 8).map(lambda v: v / 2), min_size=3, max_size=25)
continuous = st.lists(st.floats(0, 50, allow_subnormal=False), min_size=3, max_size=25)


def test_hand_values():
    assert deshpande_J([1.0, 2.0]) == 0.5
    assert hp_N([1.0, 2.0, 4.0]) == pytest.approx(1 / 3)
    assert ahmad_delta([1.0, 2.0]) == 0.5
    assert ahmad_delta([1.0, 3.0]) == 0.0


def test_generic_engines_use_every_subset():
    x = [1.0, 2.0, 3.0, 4.0]
    assert u_stat_deg2(x, lambda a, b: 1.0) == 1.0
    assert u_stat_deg2(x, lambda a, b: a + b) == pytest.approx(2 * 2.5)
    assert u_stat_deg3(x, lambda a, b, c: a * b * c) == pytest.approx((6 + 8 + 12 + 24) / 4)


@settings(max_examples=80, deadline=None)
@given(st.one_of(tied, continuous), st.sampled_from([0.2, 0.5, 0.9]))
def test_fast_paths_match_enumeration(values, b):
    params = KernelParams(b)
    assert deshpande_J(values, params) == pytest.approx(deshpande_J(values, params, method="naive"), rel=1e-12, abs=0)
    assert hp_N(values) == pytest.approx(hp_N(values, method="naive"), rel=1e-12, abs=0)
    assert ahmad_delta(values) == pytest.approx(ahmad_delta(values, method="naive"), rel=1e-9, abs=1e-9)


@settings(max_examples=40, deadline=None)
@given(continuous, st.floats(0.1, 100))
def test_scale_behaviour(values, c):
    x = np.array(values)
    assume(not _has_near_ties(x))
    assert deshpande_J(c * x) == pytest.approx(deshpande_J(x), abs=1e-12)
    assert ahmad_delta(c * x) == pytest.approx(c * ahmad_delta(x), rel=1e-9, abs=1e-9)


def _has_near_ties(x):
    # rescaling can flip an exact comparison x_i == b x_j through rounding
    s = np.sort(x)
    return np.any(np.isclose(s[:, None], 0.5 * s[None, :], rtol=1e-12, atol=0))


def test_permutation_invariance():
    rng = np.random.default_rng(3)
    x = rng.exponential(size=60)
    y = rng.permutation(x)
    assert deshpande_J(x) == deshpande_J(y)
    assert hp_N(x) == hp_N(y)
    assert ahmad_delta(x) == ahmad_delta(y)


def test_large_null_samples_sit_near_null_means():
    x = np.random.default_rng(5).exponential(size=3000)
    assert deshpande_J(x) == pytest.approx(2 / 3, abs=0.02)
    assert hp_N(x) == pytest.approx(0.25, abs=0.02)
    assert ahmad_delta(x) == pytest.approx(0.0, abs=0.06)


def test_constant_sample():
    x = [2.0] * 5
    assert deshpande_J(x) == 1.0  # 2 > 0.5 * 2 in both orientations
    assert hp_N(x) == 0.0
    assert ahmad_delta(x) == 0.0


def test_input_validation():
    with pytest.raises(ValueError, match="need at least 2 observations"):
        deshpande_J([1.0])
    with pytest.raises(ValueError, match="need at least 3 observations"):
        hp_N([1.0, 2.0])
    with pytest.raises(ValueError):
        ahmad_delta([1.0, -1.0])
    with pytest.raises(ValueError):
        ahmad_delta([1.0, math.inf])
    assert as_sample([[1.0, 2.0]]).shape == (2,)
