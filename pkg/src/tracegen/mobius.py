"""Mobius polynomials of independence alphabets and derived quantities.

The Mobius polynomial of a subalphabet X is the clique polynomial with
alternating signs: the coefficient of degree d is (-1)^d times the number
of d element cliques of pairwise independent letters in X.  Its reciprocal
is the generating series of the trace monoid over X, so the smallest
positive root governs the growth rate and is the largest usable parameter
for the multiplicative probability laws on traces.

Everything here is deterministic.  Evaluations used in sampling are
memoised per subset in a MobiusTable, which also caches the occurrence
probability of a pivot letter.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .monoid import IndependenceModel, clique_size_counts, iter_bits

ROOT_MARGIN = 1e-9
_FORM_AGREEMENT = 1e-10


class RootNotFoundError(RuntimeError):
    """No usable root of the Mobius polynomial was located in (0, 1]."""


class NotIrreducibleError(ValueError):
    """The dependence graph of the alphabet is not connected."""


@dataclass(frozen=True)
class MobiusPolynomial:
    """Integer coefficients by increasing degree; degree 0 is always 1."""

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def evaluate(self, p: float) -> float:
        acc = 0.0
        for c in reversed(self.coefficients):
            acc = acc * p + c
        return acc

    def derivative_at(self, p: float) -> float:
        acc = 0.0
        for d in range(self.degree, 0, -1):
            acc = acc * p + d * self.coefficients[d]
        return acc

    def clique_count(self) -> int:
        return sum(abs(c) for c in self.coefficients)


def mobius_polynomial(model: IndependenceModel, subset: int | None = None) -> MobiusPolynomial:
    """Clique polynomial of a subalphabet with alternating signs."""
    counts = clique_size_counts(model, subset)
    return MobiusPolynomial(
        tuple(c if d % 2 == 0 else -c for d, c in enumerate(counts))
    )


def mobius_eval(model: IndependenceModel, subset: int | None, p: float) -> float:
    """One shot evaluation of the Mobius polynomial at p."""
    return mobius_polynomial(model, subset).evaluate(p)


def recurrence_residual_coefficients(
    model: IndependenceModel, subset: int, pivot: str
) -> tuple[int, ...]:
    """Exact coefficient residual of the pivot deletion identity.

    For a in X the identity says mu_X equals mu_{X minus a} minus
    X times mu_{X minus the dependence neighbourhood of a}.  The returned
    tuple is the coefficient wise difference and must be all zeros.
    """
    i = model.index_of(pivot)
    bit = 1 << i
    if not subset & bit:
        raise ValueError(f"pivot {pivot!r} is not in the subset")
    left = mobius_polynomial(model, subset).coefficients
    without = mobius_polynomial(model, subset & ~bit).coefficients
    nolink = mobius_polynomial(model, subset & ~model.dependence[i]).coefficients
    size = max(len(left), len(without), len(nolink) + 1)
    out = [0] * size
    for d, c in enumerate(left):
        out[d] += c
    for d, c in enumerate(without):
        out[d] -= c
    for d, c in enumerate(nolink):
        out[d + 1] += c
    return tuple(out)


def recurrence_residual(
    model: IndependenceModel, subset: int, pivot: str, p: float
) -> float:
    """Numeric residual of the pivot deletion identity at p."""
    i = model.index_of(pivot)
    bit = 1 << i
    if not subset & bit:
        raise ValueError(f"pivot {pivot!r} is not in the subset")
    return (
        mobius_eval(model, subset, p)
        - mobius_eval(model, subset & ~bit, p)
        + p * mobius_eval(model, subset & ~model.dependence[i], p)
    )


def _poly_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    # remainder of a modulo b, coefficients ascending, exact arithmetic
    if len(b) == 1:
        return [Fraction(0)]
    a = a[:]
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    db = len(b) - 1
    while len(a) - 1 >= db and not (len(a) == 1 and a[0] == 0):
        factor = a[-1] / b[-1]
        shift = len(a) - 1 - db
        for i in range(db + 1):
            a[shift + i] -= factor * b[i]
        a.pop()
        while len(a) > 1 and a[-1] == 0:
            a.pop()
    return a


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while not (len(b) == 1 and b[0] == 0):
        a, b = b, _poly_rem(a, b)
    lead = a[-1]
    return [c / lead for c in a]


def _poly_div_exact(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    rem = list(a)
    for k in range(len(out) - 1, -1, -1):
        coef = rem[k + len(b) - 1] / b[-1]
        out[k] = coef
        for i in range(len(b)):
            rem[k + i] -= coef * b[i]
    assert all(c == 0 for c in rem)
    return out


def _square_free_part(coefficients: tuple[int, ...]) -> tuple[int, ...]:
    """Primitive integer coefficients of P / gcd(P, P'), ascending degree.

    Dividing out repeated factors leaves every real root simple, which is
    what the companion matrix and the Newton polish both need.  Repeated
    factors are routine for disconnected subalphabets: the polynomial of a
    disjoint union is the product over components, and equal components
    contribute equal factors, turning the smallest root into an even order
    touch point that a plain sign scan cannot see.
    """
    p = [Fraction(c) for c in coefficients]
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    if len(p) <= 1:
        return tuple(int(c) for c in p)
    dp = [i * c for i, c in enumerate(p)][1:]
    q = _poly_div_exact(p, _poly_gcd(p, dp))
    den = 1
    for c in q:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in q]
    common = 0
    for c in ints:
        common = math.gcd(common, abs(c))
    ints = [c // common for c in ints]
    if ints[0] < 0:
        ints = [-c for c in ints]
    return tuple(ints)


def _horner(coefficients, x: float) -> float:
    acc = 0.0
    for c in reversed(coefficients):
        acc = acc * x + c
    return acc


@lru_cache(maxsize=8192)
def _smallest_root_cached(model: IndependenceModel, subset: int) -> float:
    poly = mobius_polynomial(model, subset)
    square_free = _square_free_part(poly.coefficients)
    if len(square_free) <= 1:
        raise RootNotFoundError(
            f"the Mobius polynomial {poly.coefficients!r} is constant"
        )
    roots = np.polynomial.polynomial.polyroots(
        np.asarray(square_free, dtype=float)
    )
    candidates = [
        float(z.real)
        for z in roots
        if abs(z.imag) <= 1e-8 * (1.0 + abs(z.real))
        and 1e-9 < z.real <= 1.0 + 1e-9
    ]
    if not candidates:
        raise RootNotFoundError(
            f"no root of the Mobius polynomial {poly.coefficients!r} "
            f"found in (0, 1]"
        )
    root = min(candidates)
    derivative = tuple(d * c for d, c in enumerate(square_free))[1:]
    for _ in range(12):
        slope = _horner(derivative, root)
        if slope == 0.0:
            break
        step = _horner(square_free, root) / slope
        root -= step
        if abs(step) <= 1e-17:
            break
    # an exact root at the right endpoint is reported as exactly 1.0
    if sum(square_free) == 0 and abs(root - 1.0) <= 1e-6:
        return 1.0
    root = min(max(root, 1e-12), 1.0)
    scale = sum(abs(c) for c in square_free)
    if abs(_horner(square_free, root)) > 1e-9 * scale:
        raise RootNotFoundError(
            f"polished root {root!r} does not annihilate the square free "
            f"factor of {poly.coefficients!r}"
        )
    return root


def smallest_root(model: IndependenceModel, subset: int | None = None) -> float:
    """Smallest positive root of the Mobius polynomial of a subalphabet.

    The root is real and lies in (0, 1]; it is simple for a connected
    dependence graph but can have any multiplicity when the subalphabet
    splits into independent components.  The repeated factors are removed
    exactly first, the remaining simple roots come from the companion
    matrix and are polished by Newton iteration.
    """
    mask = model.full_mask if subset is None else subset
    if mask == 0:
        raise ValueError("the empty alphabet has no Mobius root")
    if mask >> model.size:
        raise ValueError("subset mask has bits outside the alphabet")
    return _smallest_root_cached(model, mask)


def is_irreducible(model: IndependenceModel) -> bool:
    """Whether the dependence graph (self loops ignored) is connected."""
    if model.size == 0:
        raise ValueError("empty alphabet")
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for i in iter_bits(frontier):
            nxt |= model.dependence[i]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == model.full_mask


class MobiusTable:
    """Memoised Mobius evaluations of one model at one fixed parameter.

    Values are pure functions of (subset, p), so concurrent lookups are
    safe; insertion is guarded by a lock to keep the cache consistent under
    threaded use.
    """

    def __init__(self, model: IndependenceModel, p: float):
        self.model = model
        self.p = float(p)
        self._values: dict[int, float] = {}
        self._occurrence: dict[tuple[int, int], float] = {}
        self._lock = threading.Lock()

    def value(self, subset: int) -> float:
        try:
            return self._values[subset]
        except KeyError:
            pass
        val = mobius_eval(self.model, subset, self.p)
        with self._lock:
            self._values.setdefault(subset, val)
        return self._values[subset]

    def occurrence(self, subset: int, pivot_index: int) -> float:
        """Probability that a trace over ``subset`` contains the pivot.

        Computed as 1 - mu_S / mu_{S minus pivot} and cross checked against
        the equivalent form p * mu_{S minus link} / mu_{S minus pivot}; a
        disagreement beyond rounding signals a numerical fault.
        """
        key = (subset, pivot_index)
        try:
            return self._occurrence[key]
        except KeyError:
            pass
        bit = 1 << pivot_index
        if not subset & bit:
            raise ValueError("pivot is not in the subset")
        denom = self.value(subset & ~bit)
        left = 1.0 - self.value(subset) / denom
        right = self.p * self.value(subset & ~self.model.dependence[pivot_index]) / denom
        if abs(left - right) > _FORM_AGREEMENT * max(abs(left), abs(right), 1e-12):
            raise RuntimeError(
                f"occurrence probability forms disagree: {left!r} vs {right!r}"
            )
        with self._lock:
            self._occurrence.setdefault(key, left)
        return self._occurrence[key]


def occurrence_probability(
    model: IndependenceModel, subset: int, pivot: str, p: float
) -> float:
    """Probability that a multiplicative trace over a subalphabet contains
    the pivot letter at least once.

    Requires 0 < p < smallest_root(subset).  Both closed forms are computed
    and must agree to 1e-10 relative; the quotient form is returned.
    """
    root = smallest_root(model, subset)
    if not 0.0 < p < root:
        raise ValueError(
            f"p={p!r} is out of range: need 0 < p < {root!r}, the smallest "
            f"Mobius root of the subalphabet"
        )
    return MobiusTable(model, p).occurrence(subset, model.index_of(pivot))


def expected_length(model: IndependenceModel, p: float, subset: int | None = None) -> float:
    """Mean trace length under the multiplicative law at parameter p."""
    mask = model.full_mask if subset is None else subset
    root = smallest_root(model, mask)
    if not 0.0 < p < root:
        raise ValueError(
            f"p={p!r} is out of range: need 0 < p < {root!r}, the smallest "
            f"Mobius root of the subalphabet"
        )
    poly = mobius_polynomial(model, mask)
    return -p * poly.derivative_at(p) / poly.evaluate(p)
