"""Statistical verification harness run at reduced sizes with scaled thresholds."""

import pytest

import tracegen as tg
from tracegen.verify import (
    BoundarySuiteConfig,
    FiniteSuiteConfig,
    MobiusSuiteConfig,
    TestReport,
    run_boundary_suite,
    run_finite_suite,
    run_mobius_suite,
)


def test_report_comparisons():
    assert TestReport.make("x", 0.5, 1.0, "le", 1, 0).passed
    assert not TestReport.make("x", 1.5, 1.0, "le", 1, 0).passed
    assert TestReport.make("x", 1.5, 1.0, "ge", 1, 0).passed
    assert TestReport.make("x", 1.0, 1.0, "ge", 1, 0).passed
    assert not TestReport.make("x", 1.0, 1.0, "gt", 1, 0).passed
    with pytest.raises(ValueError):
        TestReport.make("x", 1.0, 1.0, "eq", 1, 0)
    as_dict = TestReport.make("x", 0.5, 1.0, "le", 7, 3, extra=1).to_dict()
    assert as_dict["name"] == "x" and as_dict["details"] == {"extra": 1}


def test_mobius_suite_passes(path4):
    reports = run_mobius_suite(path4, seed=101)
    assert reports and all(r.passed for r in reports)
    names = {r.name for r in reports}
    assert "pivot-deletion-identity-exact" in names
    assert "mobius-upper-bound" in names
    assert "root-monotone-under-removal" in names


def test_mobius_suite_on_larger_random_alphabet():
    # above the exhaustive limit the identity is spot checked by sampling
    letters = "abcdefghij"
    pairs = [(letters[i], letters[i + 1]) for i in range(9)]
    model = tg.build_model(letters, pairs)
    config = MobiusSuiteConfig(exhaustive_limit=4, sampled_checks=64)
    reports = run_mobius_suite(model, seed=5, config=config)
    assert all(r.passed for r in reports)


SMALL_FINITE = FiniteSuiteConfig(
    n_law=30_000,
    n_mean=20_000,
    n_decomposition=20_000,
    n_conditioned=10_000,
    n_pivot_rule=30_000,
    n_steps=2_000,
    tv_threshold=0.03,
    conditioned_tv_threshold=0.05,
    pivot_tv_threshold=0.05,
    unit_mass_threshold=0.015,
    mean_relative_threshold=0.05,
    chi_alpha=0.005,
)


def test_finite_suite_passes_at_reduced_size(path4):
    reports = run_finite_suite(path4, seed=202, config=SMALL_FINITE)
    failed = [r.name for r in reports if not r.passed]
    assert failed == []
    names = [r.name for r in reports]
    for expected in (
        "finite-law-tv",
        "unit-mass",
        "mean-length",
        "determinism",
        "step-bound-linear",
    ):
        assert expected in names


def test_finite_suite_is_seed_deterministic(path4):
    config = FiniteSuiteConfig(
        n_law=2_000, n_mean=1_000, n_decomposition=1_000, n_conditioned=1_000,
        n_pivot_rule=1_000, n_steps=200, tv_threshold=1.0,
        conditioned_tv_threshold=1.0, pivot_tv_threshold=1.0,
        unit_mass_threshold=1.0, mean_relative_threshold=1.0, chi_alpha=0.0,
    )
    first = run_finite_suite(path4, seed=7, config=config)
    again = run_finite_suite(path4, seed=7, config=config)
    assert [r.statistic for r in first] == [r.statistic for r in again]


SMALL_BOUNDARY = BoundarySuiteConfig(
    n_blocks_law=20_000,
    cylinder_runs=1_200,
    x_max_len=2,
    k_monotone=200,
    k_divisor_check=20,
    k_linearity=300,
    k_equivalence=60,
    workers=2,
    tv_threshold=0.025,
    cylinder_threshold=0.05,
)


def test_boundary_suite_passes_at_reduced_size(path4):
    reports = run_boundary_suite(path4, seed=303, config=SMALL_BOUNDARY)
    failed = [r.name for r in reports if not r.passed]
    assert failed == []
    names = [r.name for r in reports]
    for expected in (
        "critical-gap",
        "block-conditioning-is-link",
        "blocks-pyramidal",
        "block-law-tv",
        "prefix-monotone",
        "length-linear-in-blocks",
        "parallel-equivalence",
        "boundary-cylinder-law",
    ):
        assert expected in names


def test_decomposition_law_standalone(path4):
    reports = tg.verify_decomposition_law(
        path4, "a", 0.2, n=20_000, seed=404, tv_threshold=0.03
    )
    assert [r.name for r in reports] == [
        "decomposition-count-geometric",
        "decomposition-first-body-law",
        "decomposition-pair-independence",
    ]
    assert all(r.passed for r in reports)


def test_cylinders_standalone(path4):
    report = tg.verify_cylinders(
        path4, "a", seed=505, x_max_len=1, runs=800, tolerance=0.06
    )
    assert report.passed
    assert report.name == "boundary-cylinder-law"
    per_trace = report.details["per_trace"]
    assert len(per_trace) == 5  # the unit plus the four single letter cylinders
    assert per_trace["1"]["frequency"] == 1.0
    for name, entry in per_trace.items():
        if name == "1":
            continue
        assert entry["target"] == pytest.approx(1 / 3, abs=1e-9)
        assert abs(entry["frequency"] - 1 / 3) < 0.06


def test_run_suite_dispatch(path4):
    with pytest.raises(ValueError):
        tg.run_suite("bogus", path4)
    reports = tg.run_suite("mobius", path4, seed=9)
    assert reports and all(r.passed for r in reports)
