"""Brute force ground truth for small alphabets.

Everything here is slow and exact on purpose: exhaustive enumeration of
traces by length, series coefficients from the Mobius polynomial, and
closed form probabilities.  The samplers are tested against these, never
the other way round.  Guardrails keep calls inside the regime where the
enumeration stays fast.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from scipy.stats import chi2

from .mobius import mobius_eval, mobius_polynomial, smallest_root
from .monoid import (
    IndependenceModel,
    Trace,
    iter_bits,
    max_letters,
)

MAX_ORACLE_LETTERS = 6
MAX_ORACLE_LENGTH = 12


def _check_guardrails(model: IndependenceModel, subset: int, n_max: int) -> None:
    if subset >> model.size:
        raise ValueError("subset mask has bits outside the alphabet")
    if subset.bit_count() > MAX_ORACLE_LETTERS:
        raise ValueError(
            f"oracle is limited to {MAX_ORACLE_LETTERS} letters, "
            f"got {subset.bit_count()}"
        )
    if n_max < 0 or n_max > MAX_ORACLE_LENGTH:
        raise ValueError(
            f"oracle is limited to length {MAX_ORACLE_LENGTH}, got {n_max}"
        )


def _extensions(
    model: IndependenceModel, subset: int, factors: tuple[int, ...]
) -> Iterator[tuple[int, ...]]:
    """All normal forms obtained by appending one letter of ``subset``."""
    dep = model.dependence
    n = model.size
    levels = [-1] * n
    for lvl, f in enumerate(factors):
        for i in iter_bits(f):
            levels[i] = lvl
    for i in iter_bits(subset):
        lvl = 0
        for j in iter_bits(dep[i]):
            if levels[j] >= lvl:
                lvl = levels[j] + 1
        if lvl == len(factors):
            yield factors + (1 << i,)
        else:
            yield factors[:lvl] + (factors[lvl] | (1 << i),) + factors[lvl + 1:]


@dataclass(frozen=True)
class EnumerationIndex:
    """All traces of a subalphabet up to a length bound, grouped by length."""

    model: IndependenceModel
    subset: int
    by_length: tuple[tuple[Trace, ...], ...]

    def counts(self) -> list[int]:
        return [len(level) for level in self.by_length]

    def __iter__(self) -> Iterator[Trace]:
        for level in self.by_length:
            yield from level

    def probability_table(self, p: float) -> dict[Trace, float]:
        """Exact probability of each enumerated trace under the
        multiplicative law of the subalphabet at parameter p."""
        mu = mobius_eval(self.model, self.subset, p)
        return {x: mu * p**x.length for x in self}


def enumerate_traces(
    model: IndependenceModel, subset: int | None = None, n_max: int = 6
) -> EnumerationIndex:
    """Breadth first enumeration of all traces of length at most n_max.

    Each level is produced by extending the previous level with every
    letter and deduplicating on the normal form, then sorted for a
    deterministic order.
    """
    mask = model.full_mask if subset is None else subset
    _check_guardrails(model, mask, n_max)
    levels: list[tuple[Trace, ...]] = [(Trace(),)]
    frontier: set[tuple[int, ...]] = {()}
    for _ in range(n_max):
        frontier = {
            ext for fac in frontier for ext in _extensions(model, mask, fac)
        }
        levels.append(tuple(Trace(f) for f in sorted(frontier)))
    return EnumerationIndex(model, mask, tuple(levels))


def count_traces(
    model: IndependenceModel, subset: int | None = None, n_max: int = 6
) -> list[int]:
    """Trace counts by length, keeping only one enumeration level alive.

    Same guardrails as enumerate_traces but far lighter on memory, which
    is what makes length 12 counts practical.
    """
    mask = model.full_mask if subset is None else subset
    _check_guardrails(model, mask, n_max)
    counts = [1]
    frontier: set[tuple[int, ...]] = {()}
    for _ in range(n_max):
        frontier = {
            ext for fac in frontier for ext in _extensions(model, mask, fac)
        }
        counts.append(len(frontier))
    return counts


def series_coefficients(
    model: IndependenceModel, subset: int | None = None, n_max: int = 12
) -> list[int]:
    """Coefficients of the growth series 1 / mu as exact integers.

    The linear recurrence g_n = -sum_d mu_d g_{n-d} counts the traces of
    each length; no enumeration is involved, so n_max is unrestricted.
    """
    mu = mobius_polynomial(model, subset).coefficients
    out = [1]
    for n in range(1, n_max + 1):
        acc = 0
        for d in range(1, min(n, len(mu) - 1) + 1):
            acc -= mu[d] * out[n - d]
        out.append(acc)
    return out


def exact_probability(
    model: IndependenceModel, x: Trace, p: float, subset: int | None = None
) -> float:
    """Probability mu(p) * p^|x| of one trace under the multiplicative law."""
    mask = model.full_mask if subset is None else subset
    root = smallest_root(model, mask)
    if not 0.0 < p < root:
        raise ValueError(
            f"p={p!r} is out of range: need 0 < p < {root!r}, the smallest "
            f"Mobius root of the subalphabet"
        )
    return mobius_eval(model, mask, p) * p**x.length


def check_series_identity(
    model: IndependenceModel, target: int, p: float, n_max: int = 10
) -> float:
    """Residual of the conditioned growth series identity.

    Sums p^|x| over all enumerated traces whose maximal pieces lie in
    ``target`` and compares with mu_{Sigma minus target} / mu_Sigma.  The
    residual is the truncation tail plus rounding and must stay below
    series_tail_bound for the same arguments.
    """
    full = model.full_mask
    _check_guardrails(model, full, n_max)
    partial = 0.0
    frontier: set[tuple[int, ...]] = {()}
    partial += 1.0  # the unit trace has no maximal pieces at all
    for n in range(1, n_max + 1):
        frontier = {
            ext for fac in frontier for ext in _extensions(model, full, fac)
        }
        weight = p**n
        for fac in frontier:
            if max_letters(model, Trace(fac)) & ~target == 0:
                partial += weight
    expected = mobius_eval(model, full & ~target, p) / mobius_eval(model, full, p)
    return abs(partial - expected)


def series_tail_bound(
    model: IndependenceModel, p: float, n_max: int, lookahead: int = 20
) -> float:
    """Upper bound on the mass of traces longer than n_max.

    Uses the exact counts up to n_max + lookahead and the observed maximal
    growth ratio to dominate the tail by a geometric series.  Infinite
    when p is too close to the growth radius for the bound to close.
    """
    counts = series_coefficients(model, None, n_max + lookahead + 1)
    ratios = [
        counts[n + 1] / counts[n]
        for n in range(n_max, n_max + lookahead)
        if counts[n] > 0
    ]
    alpha = max(ratios)
    if alpha * p >= 1.0:
        return float("inf")
    return counts[n_max + 1] * p ** (n_max + 1) / (1.0 - alpha * p)


# ---------------------------------------------------------------------------
# Statistical distances

def tv_distance(
    empirical: Mapping, exact: Mapping, support_cutoff: int | None = None
) -> float:
    """Total variation distance between two sub probability tables.

    Keys may be any hashables; with support_cutoff set, keys are traces
    and both tables are restricted to length at most the cutoff.  Mass
    missing from either table (beyond the cutoff, or simply never seen)
    is lumped into a shared overflow bucket, so the result is the exact
    distance between the two coarsened distributions.
    """
    if not empirical and not exact:
        raise ValueError("both tables are empty")

    def kept(table: Mapping) -> dict:
        if support_cutoff is None:
            return dict(table)
        return {x: q for x, q in table.items() if x.length <= support_cutoff}

    emp = kept(empirical)
    ref = kept(exact)
    total = 0.0
    for key in emp.keys() | ref.keys():
        total += abs(emp.get(key, 0.0) - ref.get(key, 0.0))
    total += abs((1.0 - sum(emp.values())) - (1.0 - sum(ref.values())))
    return 0.5 * total


def chi_square(
    observed: Sequence[float], expected: Sequence[float]
) -> tuple[float, float]:
    """Pearson statistic and p-value for aligned count vectors.

    ``expected`` must be strictly positive and sum to the same total as
    ``observed``; degrees of freedom are the number of bins minus one.
    """
    if len(observed) != len(expected):
        raise ValueError("observed and expected must have the same length")
    if len(observed) < 2:
        raise ValueError("need at least two bins")
    if any(e <= 0 for e in expected):
        raise ValueError("expected counts must be positive")
    stat = sum((o - e) ** 2 / e for o, e in zip(observed, expected))
    return stat, float(chi2.sf(stat, len(observed) - 1))


def geometric_bins(
    samples: Sequence[int], r: float, total: int | None = None, min_expected: float = 5.0
) -> tuple[list[float], list[float]]:
    """Bin geometric draws against the law (1 - r) r^k with a lumped tail.

    Bins are k = 0, 1, ... while the expected count stays at least
    min_expected, with everything larger collected into a final bin; the
    two returned vectors are aligned observed and expected counts.
    """
    if not 0.0 < r < 1.0:
        raise ValueError("r must lie strictly between 0 and 1")
    n = len(samples) if total is None else total
    k_max = 0
    while n * (1.0 - r) * r ** (k_max + 1) >= min_expected:
        k_max += 1
    # the lumped tail itself must also carry enough mass
    while k_max > 0 and n * r ** (k_max + 1) < min_expected:
        k_max -= 1
    observed = [0.0] * (k_max + 2)
    for k in samples:
        observed[min(k, k_max + 1)] += 1
    expected = [n * (1.0 - r) * r**k for k in range(k_max + 1)]
    expected.append(n * r ** (k_max + 1))
    return observed, expected
