"""Statistical and structural verification suites.

Each check produces a TestReport: a named statistic, the threshold it was
held to, and the verdict.  All randomness is seeded, so every report is
reproducible bit for bit from its parameters.  The exact references come
from the oracle module; the suites never compare a sampler against
itself.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np
from scipy.stats import chi2_contingency

from .boundary import BlockStream, open_stream, parallel_run
from .mobius import (
    MobiusTable,
    expected_length,
    mobius_eval,
    mobius_polynomial,
    recurrence_residual_coefficients,
    smallest_root,
)
from .monoid import (
    IndependenceModel,
    Trace,
    concat,
    format_trace,
    is_left_divisor,
    is_pyramidal,
    iter_bits,
    left_divisors,
    max_letters,
    normalize_indices,
    pyramidal_decompose,
    word_indices,
)
from .oracle import (
    chi_square,
    enumerate_traces,
    geometric_bins,
    tv_distance,
)
from .sampler import (
    RandomStream,
    SamplerParams,
    StepCounter,
    _pivot_chooser,
    _sample_into,
    sample_many,
    sample_trace,
)

DEFAULT_SEED = 20070919


@dataclass
class TestReport:
    """Outcome of one verification check.

    ``comparison`` states how the statistic was judged: "le" passes when
    statistic <= threshold, "ge" when statistic >= threshold, "gt" when
    statistic > threshold (the p-value convention).
    """

    __test__ = False  # keep pytest collection away from the Test prefix

    name: str
    statistic: float
    threshold: float
    comparison: str
    sample_size: int
    seed: int
    passed: bool
    details: dict = field(default_factory=dict)

    @classmethod
    def make(
        cls,
        name: str,
        statistic: float,
        threshold: float,
        comparison: str,
        sample_size: int,
        seed: int,
        **details,
    ) -> "TestReport":
        if comparison == "le":
            passed = statistic <= threshold
        elif comparison == "ge":
            passed = statistic >= threshold
        elif comparison == "gt":
            passed = statistic > threshold
        else:
            raise ValueError(f"unknown comparison {comparison!r}")
        return cls(
            name, float(statistic), float(threshold), comparison,
            int(sample_size), int(seed), bool(passed), details,
        )

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "statistic": self.statistic,
            "threshold": self.threshold,
            "comparison": self.comparison,
            "sample_size": self.sample_size,
            "seed": self.seed,
            "passed": self.passed,
            "details": self.details,
        }


def empirical_distribution(samples: Sequence[Trace]) -> dict[Trace, float]:
    n = len(samples)
    return {x: c / n for x, c in Counter(samples).items()}


def conditioned_probability_table(
    model: IndependenceModel, subset: int, target: int, p: float, n_max: int
) -> dict[Trace, float]:
    """Exact law over ``subset`` conditioned on maximal pieces in ``target``,
    tabulated on traces of length at most n_max."""
    scale = mobius_eval(model, subset, p) / mobius_eval(model, subset & ~target, p)
    table: dict[Trace, float] = {}
    for x in enumerate_traces(model, subset, n_max):
        if max_letters(model, x) & ~target == 0:
            table[x] = scale * p**x.length
    return table


def pyramidal_block_table(
    model: IndependenceModel, pivot: str, p: float, n_max: int
) -> dict[Trace, float]:
    """Exact block law of the boundary generator: each block v with apex
    ``pivot`` has probability p^|v|, tabulated up to length n_max."""
    i = model.index_of(pivot)
    rest = model.full_mask & ~(1 << i)
    lk = model.dependence[i]
    apex = Trace((1 << i,))
    table: dict[Trace, float] = {}
    if n_max >= 1:
        for z in enumerate_traces(model, rest, n_max - 1):
            if max_letters(model, z) & ~lk == 0:
                v = concat(model, z, apex)
                table[v] = p**v.length
    return table


def _strip_apex(model: IndependenceModel, part: Trace, pivot_index: int) -> Trace:
    # a pyramidal part ends with its apex in the canonical linearisation
    word = word_indices(part)
    assert word[-1] == pivot_index
    return normalize_indices(model, word[:-1])


# ---------------------------------------------------------------------------
# Decomposition law

def verify_decomposition_law(
    model: IndependenceModel,
    pivot: str,
    p: float,
    n: int = 100_000,
    seed: int = DEFAULT_SEED,
    target: int | None = None,
    chi_alpha: float = 0.005,
    tv_threshold: float = 0.015,
) -> list[TestReport]:
    """Sample n traces, split each at the pivot, and test the three
    consequences of the decomposition: the pyramidal factor count is
    geometric, the first factor body follows the conditioned law, and the
    first two bodies are independent."""
    full = model.full_mask
    target = full if target is None else target
    pivot_index = model.index_of(pivot)
    params = SamplerParams(p=p, seed=seed)
    r = MobiusTable(model, p).occurrence(full, pivot_index)

    ks: list[int] = []
    first_bodies: list[Trace] = []
    pair_lengths: list[tuple[int, int]] = []
    for x in sample_many(model, params, n, full, target):
        k = x.letter_count(pivot_index)
        ks.append(k)
        if k >= 1:
            parts, _ = pyramidal_decompose(model, x, pivot)
            v0 = _strip_apex(model, parts[0], pivot_index)
            first_bodies.append(v0)
            if k >= 2:
                v1 = _strip_apex(model, parts[1], pivot_index)
                pair_lengths.append((v0.length, v1.length))

    reports = []
    observed, expected = geometric_bins(ks, r)
    stat, pvalue = chi_square(observed, expected)
    reports.append(
        TestReport.make(
            "decomposition-count-geometric", pvalue, chi_alpha, "gt", n, seed,
            r=r, statistic_chi2=stat, bins=len(observed),
        )
    )

    rest = full & ~(1 << pivot_index)
    exact = conditioned_probability_table(
        model, rest, model.dependence[pivot_index], p, 3
    )
    emp = empirical_distribution(first_bodies)
    tv = tv_distance(emp, exact, support_cutoff=3)
    reports.append(
        TestReport.make(
            "decomposition-first-body-law", tv, tv_threshold, "le",
            len(first_bodies), seed,
        )
    )

    cap = 2
    table = np.zeros((cap + 1, cap + 1))
    for a, b in pair_lengths:
        table[min(a, cap), min(b, cap)] += 1
    keep_rows = table.sum(axis=1) > 0
    keep_cols = table.sum(axis=0) > 0
    table = table[keep_rows][:, keep_cols]
    stat, pvalue, _, _ = chi2_contingency(table, correction=False)
    reports.append(
        TestReport.make(
            "decomposition-pair-independence", pvalue, chi_alpha, "gt",
            len(pair_lengths), seed, statistic_chi2=float(stat),
        )
    )
    return reports


# ---------------------------------------------------------------------------
# Boundary cylinders

CHECKPOINT_LADDER = (4, 8, 12, 16, 24, 32, 48, 64, 96, 128, 192)


def _doubling_schedule(start: int, ladder: Sequence[int]) -> list[int]:
    steps = {k for k in ladder}
    out = [start]
    while out[-1] * 2 in steps:
        out.append(out[-1] * 2)
    return out


def verify_cylinders(
    model: IndependenceModel,
    pivot: str,
    seed: int = DEFAULT_SEED,
    x_max_len: int = 3,
    runs: int = 10_000,
    tolerance: float = 0.015,
    ladder: Sequence[int] = CHECKPOINT_LADDER,
) -> TestReport:
    """Check the cylinder law of the boundary measure by direct frequency.

    Every trace x with |x| <= x_max_len should be a prefix of the infinite
    trace with probability p_star^|x|.  The frequency of the event
    "x divides the first K blocks" is monotone in K; for each x the number
    of blocks is doubled, starting from 4 |x|, until the observed increment
    over a doubling falls under 1e-3, and the frequency at that point is
    compared with the target.

    One stream per run; a run is extended once through the whole
    checkpoint ladder while only the bottom x_max_len heap levels are
    retained, since a divisor of length L lives entirely in the bottom L
    levels.  The first checkpoint at which each short divisor appears is
    recorded, which gives every frequency in the ladder in a single pass.
    """
    stream0 = open_stream(model, pivot, seed)
    p_star = stream0.p_star
    pivot_index = stream0.pivot_index
    block_subset = stream0.block_subset
    block_target = stream0.block_target
    table = stream0.table
    choose = _pivot_chooser(model, SamplerParams(p=p_star, seed=seed))
    dep = model.dependence
    counter = StepCounter()

    arrivals: dict[Trace, np.ndarray] = {}
    n_checkpoints = len(ladder)
    k_max = ladder[-1]

    for run_idx in range(runs):
        stream = RandomStream(seed, (run_idx,))
        levels = [-1] * model.size
        prefix = [0] * x_max_len
        changed = False
        seen: set[Trace] = set()
        cp = 0
        for k in range(1, k_max + 1):
            word: list[int] = []
            _sample_into(
                model, block_subset, block_target, table, choose,
                stream, counter, word,
            )
            word.append(pivot_index)
            for i in word:
                lvl = 0
                for j in iter_bits(dep[i]):
                    if levels[j] >= lvl:
                        lvl = levels[j] + 1
                levels[i] = lvl
                if lvl < x_max_len:
                    prefix[lvl] |= 1 << i
                    changed = True
            if k == ladder[cp]:
                if changed:
                    depth = next(
                        (d for d, f in enumerate(prefix) if f == 0), x_max_len
                    )
                    low = Trace(tuple(prefix[:depth]))
                    for d in left_divisors(model, low, x_max_len):
                        if d not in seen:
                            seen.add(d)
                            slot = arrivals.get(d)
                            if slot is None:
                                slot = arrivals[d] = np.zeros(n_checkpoints, dtype=np.int64)
                            slot[cp] += 1
                    changed = False
                cp += 1

    details: dict[str, dict] = {}
    worst = 0.0
    ladder_index = {k: i for i, k in enumerate(ladder)}
    for x in enumerate_traces(model, model.full_mask, x_max_len):
        target_prob = p_star**x.length
        counts = arrivals.get(x)
        cum = np.zeros(n_checkpoints) if counts is None else np.cumsum(counts)
        freqs = cum / runs
        schedule = _doubling_schedule(max(4 * x.length, ladder[0]), ladder)
        report_at = schedule[0]
        capped = True
        for prev_k, next_k in zip(schedule, schedule[1:]):
            gain = freqs[ladder_index[next_k]] - freqs[ladder_index[prev_k]]
            report_at = next_k
            if gain < 1e-3:
                capped = False
                break
        freq = float(freqs[ladder_index[report_at]])
        deviation = abs(freq - target_prob)
        worst = max(worst, deviation)
        details[format_trace(model, x)] = {
            "frequency": freq,
            "target": target_prob,
            "blocks": report_at,
            "capped": capped,
        }
    return TestReport.make(
        "boundary-cylinder-law", worst, tolerance, "le", runs, seed,
        p_star=p_star, per_trace=details,
    )


# ---------------------------------------------------------------------------
# Suite configurations

@dataclass(frozen=True)
class MobiusSuiteConfig:
    exhaustive_limit: int = 8
    sampled_checks: int = 512
    grid_points: int = 50
    chain_checks: int = 100


@dataclass(frozen=True)
class FiniteSuiteConfig:
    p: float | None = None
    pivot_letter: str | None = None
    n_law: int = 200_000
    n_mean: int = 100_000
    n_decomposition: int = 100_000
    n_conditioned: int = 50_000
    n_pivot_rule: int = 200_000
    n_steps: int = 10_000
    support_cutoff: int = 4
    tv_threshold: float = 0.01
    conditioned_tv_threshold: float = 0.015
    pivot_tv_threshold: float = 0.015
    unit_mass_threshold: float = 0.005
    mean_relative_threshold: float = 0.02
    chi_alpha: float = 0.01


@dataclass(frozen=True)
class BoundarySuiteConfig:
    pivot_letter: str | None = None
    n_blocks_law: int = 100_000
    cylinder_runs: int = 10_000
    x_max_len: int = 3
    support_cutoff: int = 4
    k_monotone: int = 700
    k_divisor_check: int = 50
    k_linearity: int = 1_000
    k_equivalence: int = 200
    workers: int = 8
    tv_threshold: float = 0.01
    cylinder_threshold: float = 0.015
    r_squared_threshold: float = 0.99


# ---------------------------------------------------------------------------
# Mobius suite

def run_mobius_suite(
    model: IndependenceModel,
    seed: int = DEFAULT_SEED,
    config: MobiusSuiteConfig = MobiusSuiteConfig(),
) -> list[TestReport]:
    """Structural checks of the polynomial layer on one model."""
    reports = []
    full = model.full_mask
    rng = random.Random(seed)

    if model.size <= config.exhaustive_limit:
        pairs = [
            (x, i)
            for x in range(1, full + 1)
            for i in iter_bits(x)
        ]
    else:
        pairs = []
        for _ in range(config.sampled_checks):
            x = rng.randrange(1, full + 1)
            i = rng.choice(list(iter_bits(x)))
            pairs.append((x, i))
    violations = sum(
        1
        for x, i in pairs
        if any(recurrence_residual_coefficients(model, x, model.letters[i]))
    )
    reports.append(
        TestReport.make(
            "pivot-deletion-identity-exact", violations, 0, "le",
            len(pairs), seed,
        )
    )

    root = smallest_root(model)
    poly = mobius_polynomial(model)
    worst = max(
        poly.evaluate(root * j / config.grid_points)
        - (1.0 - root * j / config.grid_points)
        for j in range(config.grid_points + 1)
    )
    reports.append(
        TestReport.make(
            "mobius-upper-bound", worst, 1e-9, "le", config.grid_points + 1, seed,
        )
    )

    worst = 0.0
    checked = 0
    for _ in range(config.chain_checks):
        small = rng.randrange(0, full + 1)
        big = small | rng.randrange(0, full + 1)
        if full & ~small == 0 or full & ~big == 0:
            continue
        checked += 1
        worst = max(
            worst,
            smallest_root(model, full & ~small) - smallest_root(model, full & ~big),
        )
    reports.append(
        TestReport.make(
            "root-monotone-under-removal", worst, 1e-12, "le", checked, seed,
        )
    )

    if model.size <= config.exhaustive_limit:
        subsets = range(1, full + 1)
    else:
        subsets = [rng.randrange(1, full + 1) for _ in range(config.sampled_checks)]
    violations = 0
    checked = 0
    for x in subsets:
        px = smallest_root(model, x)
        sub_poly = mobius_polynomial(model, x)
        for j in range(1, 20):
            q = px * j / 20
            checked += 1
            if sub_poly.evaluate(q) <= 0.0:
                violations += 1
    reports.append(
        TestReport.make(
            "positivity-below-root", violations, 0, "le", checked, seed,
        )
    )

    p = 0.5 * root
    table = MobiusTable(model, p)
    violations = sum(
        1
        for x in (range(0, full + 1) if model.size <= config.exhaustive_limit
                  else [rng.randrange(0, full + 1) for _ in range(config.sampled_checks)])
        if table.value(x) != mobius_eval(model, x, p)
    )
    reports.append(
        TestReport.make(
            "memo-coherence", violations, 0, "le",
            full + 1 if model.size <= config.exhaustive_limit else config.sampled_checks,
            seed,
        )
    )

    worst = 0.0
    checked = 0
    for frac in (0.25, 0.5, 0.75):
        q = frac * root
        qtable = MobiusTable(model, q)
        for i in range(model.size):
            denom = qtable.value(full & ~(1 << i))
            left = 1.0 - qtable.value(full) / denom
            right = q * qtable.value(full & ~model.dependence[i]) / denom
            checked += 1
            worst = max(worst, abs(left - right) / max(abs(left), abs(right), 1e-12))
    reports.append(
        TestReport.make(
            "occurrence-forms-agree", worst, 1e-10, "le", checked, seed,
        )
    )
    return reports


# ---------------------------------------------------------------------------
# Finite sampler suite

def run_finite_suite(
    model: IndependenceModel,
    seed: int = DEFAULT_SEED,
    config: FiniteSuiteConfig = FiniteSuiteConfig(),
) -> list[TestReport]:
    """End to end statistical checks of the finite trace sampler."""
    reports = []
    full = model.full_mask
    root = smallest_root(model)
    p = config.p if config.p is not None else 0.6 * root
    pivot = config.pivot_letter or model.letters[0]
    params = SamplerParams(p=p, seed=seed)

    samples = list(sample_many(model, params, config.n_law))
    exact = enumerate_traces(model, full, config.support_cutoff).probability_table(p)
    tv = tv_distance(empirical_distribution(samples), exact, config.support_cutoff)
    reports.append(
        TestReport.make(
            "finite-law-tv", tv, config.tv_threshold, "le", config.n_law, seed, p=p,
        )
    )

    unit_freq = sum(1 for x in samples if x.is_unit) / len(samples)
    reports.append(
        TestReport.make(
            "unit-mass", abs(unit_freq - mobius_eval(model, full, p)),
            config.unit_mass_threshold, "le", config.n_law, seed,
            frequency=unit_freq, target=mobius_eval(model, full, p),
        )
    )

    target_mean = expected_length(model, p)
    mean_params = SamplerParams(p=p, seed=seed + 1)
    total = 0
    for x in sample_many(model, mean_params, config.n_mean):
        total += x.length
    observed_mean = total / config.n_mean
    reports.append(
        TestReport.make(
            "mean-length", abs(observed_mean - target_mean) / target_mean,
            config.mean_relative_threshold, "le", config.n_mean, seed + 1,
            observed=observed_mean, target=target_mean,
        )
    )

    reports.extend(
        verify_decomposition_law(
            model, pivot, p, config.n_decomposition, seed + 2,
            chi_alpha=config.chi_alpha / 2,
        )
    )

    pivot_index = model.index_of(pivot)
    for label, target in (
        ("link", model.dependence[pivot_index]),
        ("single", 1 << pivot_index),
    ):
        cond_params = SamplerParams(p=p, seed=seed + 3)
        drawn = list(
            sample_many(model, cond_params, config.n_conditioned, full, target)
        )
        escapes = sum(
            1 for x in drawn if max_letters(model, x) & ~target
        )
        reports.append(
            TestReport.make(
                f"conditioned-max-inside-{label}", escapes, 0, "le",
                config.n_conditioned, seed + 3,
            )
        )
        exact_cond = conditioned_probability_table(
            model, full, target, p, config.support_cutoff
        )
        tv = tv_distance(
            empirical_distribution(drawn), exact_cond, config.support_cutoff
        )
        reports.append(
            TestReport.make(
                f"conditioned-law-tv-{label}", tv,
                config.conditioned_tv_threshold, "le",
                config.n_conditioned, seed + 3,
            )
        )

    low = list(
        sample_many(model, SamplerParams(p=p, seed=seed + 4), config.n_pivot_rule)
    )
    high = list(
        sample_many(
            model,
            SamplerParams(p=p, seed=seed + 5, pivot="maxdeg"),
            config.n_pivot_rule,
        )
    )
    tv = tv_distance(
        empirical_distribution(low), empirical_distribution(high),
        config.support_cutoff,
    )
    reports.append(
        TestReport.make(
            "pivot-rule-invariance", tv, config.pivot_tv_threshold, "le",
            config.n_pivot_rule, seed + 4,
        )
    )

    again = list(sample_many(model, params, 200))
    mismatch = sum(1 for a, b in zip(samples[:200], again) if a != b)
    other = list(sample_many(model, SamplerParams(p=p, seed=seed + 6), 200))
    identical_other = all(a == b for a, b in zip(samples[:200], other))
    reports.append(
        TestReport.make(
            "determinism", mismatch + (1 if identical_other else 0), 0, "le",
            200, seed,
        )
    )

    ratios = []
    n_letters = model.size
    for i in range(config.n_steps):
        counter = StepCounter()
        x = sample_trace(
            model, full, full, params, RandomStream(seed + 7, (i,)),
            counter=counter,
        )
        ratios.append(counter.steps / ((n_letters + 1) * (x.length + 1)))
    calibration = max(ratios[: max(100, config.n_steps // 10)])
    fitted_c = 2.0 * calibration
    reports.append(
        TestReport.make(
            "step-bound-linear", max(ratios), fitted_c, "le",
            config.n_steps, seed + 7, fitted_constant=fitted_c,
        )
    )
    return reports


# ---------------------------------------------------------------------------
# Boundary suite

def run_boundary_suite(
    model: IndependenceModel,
    seed: int = DEFAULT_SEED,
    config: BoundarySuiteConfig = BoundarySuiteConfig(),
) -> list[TestReport]:
    """End to end checks of the boundary block generator."""
    reports = []
    pivot = config.pivot_letter or model.letters[0]
    stream = open_stream(model, pivot, seed)
    p_star = stream.p_star

    if model.size > 1:
        sub_root = smallest_root(model, stream.block_subset)
        reports.append(
            TestReport.make(
                "critical-gap", sub_root - p_star, 1e-9, "ge", 1, seed,
                p_star=p_star, pivot_free_root=sub_root,
            )
        )

    reports.append(
        TestReport.make(
            "block-conditioning-is-link",
            0 if stream.block_target == model.dependence[stream.pivot_index] else 1,
            0, "le", 1, seed,
        )
    )

    law_stream = open_stream(model, pivot, seed + 1)
    blocks = [law_stream.next_block() for _ in range(config.n_blocks_law)]
    bad = sum(0 if is_pyramidal(model, b, pivot) else 1 for b in blocks)
    reports.append(
        TestReport.make(
            "blocks-pyramidal", bad, 0, "le", config.n_blocks_law, seed + 1,
        )
    )
    exact_blocks = pyramidal_block_table(model, pivot, p_star, config.support_cutoff)
    tv = tv_distance(
        empirical_distribution(blocks), exact_blocks, config.support_cutoff
    )
    reports.append(
        TestReport.make(
            "block-law-tv", tv, config.tv_threshold, "le",
            config.n_blocks_law, seed + 1, p_star=p_star,
        )
    )

    pivot_index = law_stream.pivot_index
    count_bad = 0
    mono_stream = open_stream(model, pivot, seed + 2)
    comparisons = 0
    mono_bad = 0
    divisor_bad = 0
    prev = mono_stream.accumulated
    for k in range(1, config.k_monotone + 1):
        block = mono_stream.next_block()
        now = mono_stream.accumulated
        rebuilt = concat(model, prev, block)
        comparisons += len(now.factors)
        if rebuilt != now:
            mono_bad += 1
        if now.letter_count(pivot_index) != k:
            count_bad += 1
        if k <= config.k_divisor_check and not is_left_divisor(model, prev, now):
            divisor_bad += 1
        prev = now
    reports.append(
        TestReport.make(
            "prefix-monotone", mono_bad + divisor_bad, 0, "le",
            comparisons, seed + 2,
            blocks=config.k_monotone, division_checks=config.k_divisor_check,
        )
    )
    reports.append(
        TestReport.make(
            "pivot-count-per-block", count_bad, 0, "le",
            config.k_monotone, seed + 2,
        )
    )

    lin_stream = open_stream(model, pivot, seed + 3)
    lengths = []
    cum_bad = 0
    n_letters = model.size
    calibrated: float | None = None
    for k in range(1, config.k_linearity + 1):
        lin_stream.next_block()
        lengths.append(lin_stream.length)
        if k == max(50, config.k_linearity // 10):
            calibrated = 2.0 * lin_stream.counter.steps / (n_letters * lin_stream.length)
        if calibrated is not None:
            if lin_stream.counter.steps > calibrated * n_letters * lin_stream.length:
                cum_bad += 1
    ks = np.arange(1, config.k_linearity + 1, dtype=float)
    r_squared = float(np.corrcoef(ks, np.array(lengths, dtype=float))[0, 1] ** 2)
    reports.append(
        TestReport.make(
            "length-linear-in-blocks", r_squared, config.r_squared_threshold,
            "ge", config.k_linearity, seed + 3,
        )
    )
    reports.append(
        TestReport.make(
            "step-bound-stream", cum_bad, 0, "le", config.k_linearity, seed + 3,
            fitted_constant=calibrated,
        )
    )

    sequential = open_stream(model, pivot, seed + 4).run(config.k_equivalence)
    parallel = parallel_run(
        model, pivot, seed + 4, config.k_equivalence, workers=config.workers
    )
    reports.append(
        TestReport.make(
            "parallel-equivalence", 0 if sequential == parallel else 1, 0, "le",
            config.k_equivalence, seed + 4, workers=config.workers,
        )
    )

    replay = open_stream(model, pivot, seed + 4).run(config.k_equivalence)
    other = open_stream(model, pivot, seed + 5).run(config.k_equivalence)
    reports.append(
        TestReport.make(
            "determinism",
            (0 if replay == sequential else 1) + (1 if other == sequential else 0),
            0, "le", config.k_equivalence, seed + 4,
        )
    )

    reports.append(
        verify_cylinders(
            model, pivot, seed + 6, config.x_max_len, config.cylinder_runs,
            config.cylinder_threshold,
        )
    )
    return reports


SUITES = ("mobius", "finite", "boundary", "all")


def run_suite(
    name: str,
    model: IndependenceModel,
    seed: int = DEFAULT_SEED,
    pivot_letter: str | None = None,
) -> list[TestReport]:
    """Run one named suite, or all of them, with default configurations."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}, expected one of {SUITES}")
    reports = []
    if name in ("mobius", "all"):
        reports.extend(run_mobius_suite(model, seed))
    if name in ("finite", "all"):
        reports.extend(
            run_finite_suite(model, seed, FiniteSuiteConfig(pivot_letter=pivot_letter))
        )
    if name in ("boundary", "all"):
        reports.extend(
            run_boundary_suite(model, seed, BoundarySuiteConfig(pivot_letter=pivot_letter))
        )
    return reports
