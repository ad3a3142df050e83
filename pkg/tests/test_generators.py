import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate

from agetest.generators import (
    LFR_CONSTANTS,
    Family,
    SampleFormatError,
    SeedSpec,
    composed_survival,
    gen_base_exp,
    gen_sequence,
    make_spec,
    read_sample,
    scenario,
    target_survival,
    validate_marginal,
    write_sample,
)

ALT_SHAPES = {"makeham": (1.0, 2.0), "lfr": (10.0, 5.0, 2.0), "weibull": (1.1, 1.2, 1.5)}


def _all_specs():
    for k in range(1, 17):
        fam = _family_of(k)
        for a in (None,) if fam is Family.NULL_EXP else ALT_SHAPES[fam.value]:
            yield scenario(f"S{k}", a)


def _family_of(k):
    return (Family.NULL_EXP, Family.MAKEHAM, Family.LINEAR_FAILURE_RATE, Family.WEIBULL)[(k - 1) // 4]


def test_scenario_table():
    assert scenario("S1").m == 2 and scenario("S4").m == 10
    assert scenario("S7", 1.0).family is Family.MAKEHAM and scenario("S7", 1.0).m == 5
    assert scenario("S16", 1.1).label == "S16"
    assert make_spec("null-exp", 7).label is None
    with pytest.raises(ValueError):
        scenario("S17")


def test_base_rates():
    assert [scenario(f"S{k}").base_rate for k in (1, 2, 3, 4)] == [1 / 2, 1 / 3, 1 / 5, 1 / 10]
    assert [scenario(f"S{k}", 10.0).base_rate for k in (9, 10, 11, 12)] == [1, 1 / 2, 1 / 3, 1 / 5]


@pytest.mark.parametrize("label, a, constant, sqrt_offsets", [
    ("S9", 10.0, 10.0, (1,)), ("S10", 10.0, 5.0, (1,)), ("S11", 2.0, 4 / 3, (1, 4)),
    ("S12", 5.0, 5.0, (1, 4, 7, 8, 9)), ("S12", 2.0, 2.0, (1, 4, 7, 8, 9)),
])
def test_lfr_layout(label, a, constant, sqrt_offsets):
    spec = scenario(label, a)
    assert [o for o, c in enumerate(spec.window) if c is not None] == list(sqrt_offsets)
    assert {c for c in spec.window if c is not None} == {constant}


def test_unsupported_designs():
    with pytest.raises(ValueError, match="lfr designs exist only for a in"):
        scenario("S9", 3.0)
    with pytest.raises(ValueError):
        make_spec("lfr", 4, 10.0)
    with pytest.raises(ValueError):
        make_spec("weibull", 2, None)
    with pytest.raises(ValueError):
        make_spec("null-exp", 2, 1.0)
    with pytest.raises(ValueError):
        make_spec("gamma", 2)
    assert set(LFR_CONSTANTS) == {10.0, 5.0, 2.0}


@pytest.mark.parametrize("spec", list(_all_specs()), ids=lambda s: f"{s.label}-a{s.a}")
def test_composed_marginal_is_target(spec):
    grid = np.linspace(0, 4, 50)
    np.testing.assert_allclose(composed_survival(spec, grid), target_survival(spec, grid), rtol=0, atol=1e-12)


@pytest.mark.parametrize("label, a", [("S1", None), ("S4", None), ("S6", 2.0), ("S11", 5.0), ("S12", 2.0), ("S15", 1.5)])
def test_simulated_marginal_matches_target(label, a):
    assert validate_marginal(scenario(label, a), 40_000, SeedSpec(12)) < 0.02


def test_marginal_validation_needs_a_long_run():
    with pytest.raises(ValueError):
        validate_marginal(scenario("S1"), 100, SeedSpec(0))


def test_lag_one_correlation_of_s1():
    # E[X_j X_{j+1}] = int int P(X_j > s, X_{j+1} > t) ds dt with the shared middle draw;
    # the integrand exp(-(s + max(s, t) + t) / 2) is symmetric, so integrate t < s twice
    joint = 2 * integrate.dblquad(lambda t, s: math.exp(-s - t / 2), 0, np.inf, 0, lambda s: s,
                                  epsabs=1e-12, epsrel=1e-12)[0]
    oracle = joint - 1.0  # unit mean and unit variance
    assert oracle == pytest.approx(1 / 3, abs=1e-8)
    x = gen_sequence(scenario("S1"), 1_000_000, SeedSpec(5))
    assert np.corrcoef(x[:-1], x[1:])[0, 1] == pytest.approx(oracle, abs=0.005)


@pytest.mark.parametrize("label", ["S2", "S3"])
def test_sequences_are_m_dependent_and_positively_correlated(label):
    spec = scenario(label)
    x = gen_sequence(spec, 400_000, SeedSpec(6))
    corr = lambda h: np.corrcoef(x[:-h], x[h:])[0, 1]
    assert all(corr(h) > 0.02 for h in range(1, spec.m))
    assert abs(corr(spec.m)) < 0.01


def test_streams_are_reproducible_and_distinct():
    spec = scenario("S13", 1.2)
    a = gen_sequence(spec, 200, SeedSpec(42, 3))
    np.testing.assert_array_equal(a, gen_sequence(spec, 200, SeedSpec(42, 3)))
    assert not np.array_equal(a, gen_sequence(spec, 200, SeedSpec(42, 4)))
    assert not np.array_equal(a, gen_sequence(spec, 200, SeedSpec(43, 3)))


def test_base_exponentials_have_requested_rate():
    e = gen_base_exp(0.25, 200_000, SeedSpec(1))
    assert e.mean() == pytest.approx(4.0, rel=0.01)
    assert e.min() >= 0
    with pytest.raises(ValueError):
        gen_base_exp(0.0, 5, SeedSpec(1))


def test_describe_reports_constants():
    d = scenario("S12", 5.0).describe()
    assert d["constants"] == [5.0]
    assert d["window"][1] == "sqrt(5.0*E)"


@settings(max_examples=50, deadline=None)
@given(st.lists(st.floats(0, 1e300, allow_subnormal=True), min_size=1, max_size=30))
def test_sample_files_round_trip_bit_exactly(tmp_path_factory, values):
    path = tmp_path_factory.mktemp("rt") / "x.txt"
    write_sample(path, values)
    back = read_sample(path)
    assert back.tobytes() == np.asarray(values, dtype=float).tobytes()
    assert path.read_bytes().endswith(b"\n") and b"\r" not in path.read_bytes()


def test_read_sample_skips_comments_and_names_bad_lines(tmp_path):
    p = tmp_path / "x.txt"
    p.write_text("# header\n1.5\n\n  2\n# tail\n")
    np.testing.assert_array_equal(read_sample(p), [1.5, 2.0])
    for body, line in (("1\nabc\n", 2), ("1\n2\n-3\n", 3), ("nan\n", 1), ("1\ninf\n", 2)):
        p.write_text(body)
        with pytest.raises(SampleFormatError, match=f"line {line}:") as info:
            read_sample(p)
        assert info.value.line == line
