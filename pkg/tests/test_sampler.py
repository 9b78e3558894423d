"""Finite trace sampler: determinism, laws on moderate samples, step counts."""

import math

import pytest

import tracegen as tg
from tracegen.sampler import PIVOT_RULES
from tracegen.verify import empirical_distribution


class FixedUniform:
    def __init__(self, value):
        self.value = value

    def uniform(self):
        return self.value


def test_geometric_inversion_frozen_values():
    assert tg.sample_geometric(0.5, FixedUniform(0.9)) == 3
    assert tg.sample_geometric(0.5, FixedUniform(0.49)) == 0
    assert tg.sample_geometric(0.5, FixedUniform(0.75)) == 2  # exact boundary
    assert tg.sample_geometric(0.0, FixedUniform(0.99)) == 0
    u = 0.437
    r = 3 / 11
    expect = int(math.log1p(-u) / math.log(r))
    assert tg.sample_geometric(r, FixedUniform(u)) == expect


def test_geometric_validates_parameter():
    for bad in (-0.1, 1.0, 1.5):
        with pytest.raises(ValueError):
            tg.sample_geometric(bad, FixedUniform(0.5))


def test_random_stream_split_is_stable():
    base = tg.RandomStream(42)
    child = base.split(3)
    fresh = tg.RandomStream(42, (3,))
    assert [child.uniform() for _ in range(5)] == [
        fresh.uniform() for _ in range(5)
    ]
    # drawing from the parent does not disturb the children
    base.uniform()
    assert tg.RandomStream(42, (3,)).uniform() == tg.RandomStream(42, (3,)).uniform()


def test_sampler_params_validation():
    with pytest.raises(ValueError):
        tg.SamplerParams(p=0.2, pivot="bogus")
    with pytest.raises(ValueError):
        tg.SamplerParams(p=0.2, pivot="order")
    params = tg.SamplerParams(p=0.2, pivot="order", pivot_order=("b", "a"))
    assert params.pivot_order == ("b", "a")


def test_sample_rejects_p_at_or_beyond_root(path4):
    for bad in (1 / 3, 0.34, 0.5, 0.0, -0.2):
        with pytest.raises(ValueError):
            tg.sample(path4, tg.SamplerParams(p=bad, seed=1))


def test_subset_sampling_allows_larger_p(path4):
    # the bcd subpath has root (3 - sqrt(5)) / 2, above 1/3
    bcd = path4.subset("bcd")
    params = tg.SamplerParams(p=0.35, seed=2)
    x = tg.sample_trace(path4, bcd, bcd, params)
    for factor in x.factors:
        assert factor & ~bcd == 0
    with pytest.raises(ValueError):
        tg.sample(path4, params)


def test_sample_determinism(path4):
    params = tg.SamplerParams(p=0.2, seed=11)
    assert tg.sample(path4, params) == tg.sample(path4, params)
    first = list(tg.sample_many(path4, params, 50))
    again = list(tg.sample_many(path4, params, 50))
    assert first == again
    prefix = list(tg.sample_many(path4, params, 10))
    assert first[:10] == prefix
    other = list(tg.sample_many(path4, tg.SamplerParams(p=0.2, seed=12), 50))
    assert first != other


def test_law_moderate_sample(path4):
    params = tg.SamplerParams(p=0.2, seed=5)
    n = 20000
    samples = list(tg.sample_many(path4, params, n))
    unit_freq = sum(1 for x in samples if x.is_unit) / n
    assert abs(unit_freq - 0.32) < 0.012
    exact = tg.enumerate_traces(path4, None, 3).probability_table(0.2)
    tv = tg.tv_distance(empirical_distribution(samples), exact, 3)
    assert tv < 0.02


def test_mean_length_moderate_sample(path4):
    params = tg.SamplerParams(p=0.25, seed=6)
    n = 30000
    mean = sum(x.length for x in tg.sample_many(path4, params, n)) / n
    assert abs(mean - 10 / 3) < 0.1


def test_conditioned_max_stays_inside_target(path4):
    target = tg.link(path4, "a")
    params = tg.SamplerParams(p=0.2, seed=7)
    full = path4.full_mask
    for i, x in enumerate(tg.sample_many(path4, params, 500, full, target)):
        assert tg.max_letters(path4, x) & ~target == 0


def test_unconditioned_counter_bound(path4):
    params = tg.SamplerParams(p=0.2, seed=8)
    n_letters = path4.size
    for i in range(2000):
        counter = tg.StepCounter()
        stream = tg.RandomStream(8, (i,))
        x = tg.sample(path4, params, stream=stream, counter=counter)
        assert counter.steps <= 3 * (n_letters + 1) * (x.length + 1)


def test_all_pivot_rules_sample_the_same_law(path4):
    n = 20000
    freqs = []
    for rule in PIVOT_RULES:
        params = tg.SamplerParams(
            p=0.2,
            seed=9,
            pivot=rule,
            pivot_order=("d", "c", "b", "a") if rule == "order" else None,
        )
        samples = tg.sample_many(path4, params, n)
        freqs.append(sum(1 for x in samples if x.length <= 1) / n)
    spread = max(freqs) - min(freqs)
    assert spread < 0.02


def test_shared_counter_accumulates(path4):
    params = tg.SamplerParams(p=0.2, seed=10)
    counter = tg.StepCounter()
    list(tg.sample_many(path4, params, 100, counter=counter))
    assert counter.steps > 100
