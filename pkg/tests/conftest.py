"""Shared fixtures: small dependence models used across the suite."""

import random

import pytest
from hypothesis import HealthCheck, settings

import tracegen as tg

settings.register_profile(
    "ci",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


@pytest.fixture(scope="session")
def path4():
    # the four-letter path a - b - c - d
    return tg.build_model("abcd", [("a", "b"), ("b", "c"), ("c", "d")])


@pytest.fixture(scope="session")
def path3():
    return tg.build_model("abc", [("a", "b"), ("b", "c")])


@pytest.fixture(scope="session")
def free2():
    # both letters dependent: the free monoid on two generators
    return tg.build_model("ab", [("a", "b")])


@pytest.fixture(scope="session")
def comm2():
    # no dependence beyond reflexivity: the free commutative monoid
    return tg.build_model("ab", [])


@pytest.fixture(scope="session")
def triangle():
    return tg.build_model("abc", [("a", "b"), ("b", "c"), ("a", "c")])


@pytest.fixture(scope="session")
def star4():
    # hub a with three mutually independent spokes
    return tg.build_model("abcd", [("a", "b"), ("a", "c"), ("a", "d")])


def random_model(rng: random.Random, n_letters: int) -> tg.IndependenceModel:
    """Uniformly random dependence graph on the first n_letters letters."""
    letters = "abcdefgh"[:n_letters]
    pairs = [
        (letters[i], letters[j])
        for i in range(n_letters)
        for j in range(i + 1, n_letters)
        if rng.random() < 0.5
    ]
    return tg.build_model(letters, pairs)
