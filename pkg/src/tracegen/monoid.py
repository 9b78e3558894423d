"""Trace monoids presented by independence alphabets.

An independence alphabet is a finite ordered set of letters together with a
dependence relation that is reflexive and symmetric.  Words over the alphabet
are identified up to commutation of adjacent independent letters; the
resulting equivalence classes (traces) form a monoid under concatenation.

Traces are stored in Cartier-Foata normal form: the unique factorisation
into nonempty cliques of pairwise independent letters such that every letter
of a factor depends on at least one letter of the preceding factor.  The
geometric reading is a heap of pieces: each letter is a piece dropped on top
of the current heap, it slides down past independent pieces and comes to
rest on the highest dependent one.  Factor i of the normal form is exactly
the set of pieces at height i.

Subsets of the alphabet are handled as integer bit masks throughout, with
bit i standing for ``letters[i]``.  Alphabets are capped at 64 letters so a
subset always fits in one machine word.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

MAX_LETTERS = 64


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of mask, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class IndependenceModel:
    """An alphabet with a reflexive symmetric dependence relation.

    ``dependence[i]`` is the bit mask of letters that do not commute with
    letter i; it always contains i itself.  Two letters commute exactly when
    neither appears in the other's dependence mask.
    """

    letters: tuple[str, ...]
    dependence: tuple[int, ...]

    @cached_property
    def _index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.letters)}

    @property
    def size(self) -> int:
        return len(self.letters)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.letters)) - 1

    def index_of(self, letter: str) -> int:
        try:
            return self._index[letter]
        except KeyError:
            raise ValueError(f"unknown letter {letter!r}") from None

    def subset(self, letters: Iterable[str]) -> int:
        """Bit mask for a collection of letter names."""
        mask = 0
        for name in letters:
            mask |= 1 << self.index_of(name)
        return mask

    def letters_of(self, mask: int) -> list[str]:
        if mask >> self.size:
            raise ValueError("mask has bits outside the alphabet")
        return [self.letters[i] for i in iter_bits(mask)]


def build_model(
    letters: Sequence[str],
    dependence_pairs: Iterable[tuple[str, str] | Sequence[str]],
) -> IndependenceModel:
    """Construct a model from letter names and dependent pairs.

    The relation is closed under symmetry and reflexivity, so pairs may be
    given in either order and self pairs are implicit.
    """
    letters = tuple(letters)
    if not letters:
        raise ValueError("alphabet must not be empty")
    if len(letters) > MAX_LETTERS:
        raise ValueError(f"alphabet larger than {MAX_LETTERS} letters")
    if len(set(letters)) != len(letters):
        raise ValueError("duplicate letters in alphabet")
    index = {name: i for i, name in enumerate(letters)}
    dep = [1 << i for i in range(len(letters))]
    for pair in dependence_pairs:
        a, b = pair
        try:
            i, j = index[a], index[b]
        except KeyError as exc:
            raise ValueError(f"dependence pair uses unknown letter {exc.args[0]!r}") from None
        dep[i] |= 1 << j
        dep[j] |= 1 << i
    return IndependenceModel(letters, tuple(dep))


def load_model(path: str) -> IndependenceModel:
    """Read a model from a JSON file with keys "letters" and "dependence"."""
    with open(path, encoding="utf-8") as handle:
        data = json.load(handle)
    return model_from_dict(data)


def model_from_dict(data: dict) -> IndependenceModel:
    if not isinstance(data, dict) or "letters" not in data or "dependence" not in data:
        raise ValueError('model must be an object with "letters" and "dependence"')
    return build_model(data["letters"], data["dependence"])


def model_to_dict(model: IndependenceModel) -> dict:
    pairs = []
    for i in range(model.size):
        for j in iter_bits(model.dependence[i] & ~(1 << i)):
            if j > i:
                pairs.append([model.letters[i], model.letters[j]])
    return {"letters": list(model.letters), "dependence": pairs}


def restrict(model: IndependenceModel, letters: Iterable[str] | int) -> IndependenceModel:
    """Submodel induced on a subset of the alphabet, order preserved."""
    mask = letters if isinstance(letters, int) else model.subset(letters)
    keep = list(iter_bits(mask))
    if not keep:
        raise ValueError("cannot restrict to an empty alphabet")
    pos = {old: new for new, old in enumerate(keep)}
    dep = []
    for old in keep:
        m = 0
        for j in iter_bits(model.dependence[old] & mask):
            m |= 1 << pos[j]
        dep.append(m)
    return IndependenceModel(tuple(model.letters[i] for i in keep), tuple(dep))


def link(model: IndependenceModel, letter: str) -> int:
    """Dependence neighbourhood of a letter, the letter itself included."""
    return model.dependence[model.index_of(letter)]


# ---------------------------------------------------------------------------
# Cliques

def cliques(model: IndependenceModel, subset: int | None = None) -> list[int]:
    """All cliques of pairwise independent letters inside a subset.

    The empty clique is included, so the result always has at least one
    entry.  Order is deterministic: a depth first walk adding letters in
    index order.
    """
    out: list[int] = []
    full = model.full_mask if subset is None else subset
    if full >> model.size:
        raise ValueError("subset mask has bits outside the alphabet")
    dep = model.dependence

    def grow(clique: int, candidates: int) -> None:
        out.append(clique)
        rest = candidates
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            rest ^= low
            grow(clique | low, rest & ~dep[i])

    grow(0, full)
    return out


def clique_size_counts(model: IndependenceModel, subset: int | None = None) -> list[int]:
    """Number of cliques of each size inside a subset; entry d counts size d."""
    full = model.full_mask if subset is None else subset
    if full >> model.size:
        raise ValueError("subset mask has bits outside the alphabet")
    dep = model.dependence
    counts = [0]

    def grow(size: int, candidates: int) -> None:
        if size == len(counts):
            counts.append(0)
        counts[size] += 1
        rest = candidates
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            rest ^= low
            grow(size + 1, rest & ~dep[i])

    grow(0, full)
    return counts


# ---------------------------------------------------------------------------
# Traces

@dataclass(frozen=True)
class Trace:
    """A trace in Cartier-Foata normal form.

    ``factors`` is the tuple of height levels of the heap, bottom first;
    each level is a nonempty bit mask of pairwise independent letters, and
    every letter of a level depends on some letter of the level below.
    Equality of traces is equality of factor tuples.
    """

    factors: tuple[int, ...] = ()

    @cached_property
    def length(self) -> int:
        return sum(f.bit_count() for f in self.factors)

    @property
    def is_unit(self) -> bool:
        return not self.factors

    def letter_count(self, index: int) -> int:
        """Occurrences of one letter, given by its bit index."""
        bit = 1 << index
        return sum(1 for f in self.factors if f & bit)


UNIT = Trace()


def _heap_levels(size: int, factors: Sequence[int]) -> list[int]:
    """Highest level at which each letter occurs, -1 for absent letters."""
    levels = [-1] * size
    for lvl, f in enumerate(factors):
        for i in iter_bits(f):
            levels[i] = lvl
    return levels


def _push(factors: list[int], levels: list[int], index: int, dep: Sequence[int]) -> int:
    """Drop one piece on the heap, updating factors and levels in place.

    Returns the level the piece came to rest at.  The piece lands one level
    above the highest piece it depends on, or at the bottom if there is
    none.
    """
    lvl = 0
    for j in iter_bits(dep[index]):
        if levels[j] >= lvl:
            lvl = levels[j] + 1
    if lvl == len(factors):
        factors.append(1 << index)
    else:
        factors[lvl] |= 1 << index
    levels[index] = lvl
    return lvl


def _word_to_indices(model: IndependenceModel, word: Iterable[str]) -> list[int]:
    return [model.index_of(ch) for ch in word]


def word_indices(trace: Trace) -> list[int]:
    """Canonical linearisation as letter indices, factor by factor."""
    out: list[int] = []
    for f in trace.factors:
        out.extend(iter_bits(f))
    return out


def word_of(model: IndependenceModel, trace: Trace) -> list[str]:
    """Canonical linearisation as letter names."""
    return [model.letters[i] for i in word_indices(trace)]


def normalize(model: IndependenceModel, word: Iterable[str]) -> Trace:
    """Normal form of a word, given as an iterable of letter names.

    A string is accepted when every letter is a single character.
    """
    return normalize_indices(model, _word_to_indices(model, word))


def normalize_indices(model: IndependenceModel, indices: Sequence[int]) -> Trace:
    factors: list[int] = []
    levels = [-1] * model.size
    dep = model.dependence
    for i in indices:
        _push(factors, levels, i, dep)
    return Trace(tuple(factors))


def concat(model: IndependenceModel, x: Trace, y: Trace) -> Trace:
    """Product of two traces: drop the pieces of y onto the heap of x."""
    if x.is_unit:
        return y
    if y.is_unit:
        return x
    factors = list(x.factors)
    levels = _heap_levels(model.size, factors)
    dep = model.dependence
    for i in word_indices(y):
        _push(factors, levels, i, dep)
    return Trace(tuple(factors))


def max_letters(model: IndependenceModel, x: Trace) -> int:
    """Bit mask of letters whose last occurrence is a maximal piece.

    A piece is maximal when no later piece depends on it; these are the
    pieces that can be removed from the top of the heap.
    """
    covered = 0
    out = 0
    dep = model.dependence
    for f in reversed(x.factors):
        out |= f & ~covered
        for i in iter_bits(f):
            covered |= dep[i]
    return out


def _left_divide_index(model: IndependenceModel, y: Trace, index: int) -> Trace | None:
    if not y.factors or not (y.factors[0] >> index) & 1:
        return None
    first = y.factors[0] & ~(1 << index)
    indices = list(iter_bits(first))
    for f in y.factors[1:]:
        indices.extend(iter_bits(f))
    return normalize_indices(model, indices)


def left_divide(model: IndependenceModel, y: Trace, letter: str) -> Trace | None:
    """Remove one minimal piece labelled ``letter``, or None if there is none.

    The letter must sit in the bottom factor of y; the remainder z satisfies
    letter . z == y.
    """
    return _left_divide_index(model, y, model.index_of(letter))


def is_left_divisor(model: IndependenceModel, x: Trace, y: Trace) -> bool:
    """Whether y == x . z for some trace z."""
    rest: Trace | None = y
    for i in word_indices(x):
        rest = _left_divide_index(model, rest, i)
        if rest is None:
            return False
    return True


def left_quotient(model: IndependenceModel, x: Trace, y: Trace) -> Trace | None:
    """The z with y == x . z, or None when x does not divide y."""
    rest: Trace | None = y
    for i in word_indices(x):
        rest = _left_divide_index(model, rest, i)
        if rest is None:
            return None
    return rest


def left_divisors(model: IndependenceModel, x: Trace, max_length: int) -> set[Trace]:
    """All left divisors of x of length at most max_length.

    A nonempty divisor starts with a minimal piece of x, so the search
    branches over the bottom factor and recurses on the quotient.
    """
    out = {UNIT}
    if max_length == 0 or x.is_unit:
        return out
    for i in iter_bits(x.factors[0]):
        rest = _left_divide_index(model, x, i)
        head = Trace((1 << i,))
        for d in left_divisors(model, rest, max_length - 1):
            out.add(concat(model, head, d))
    return out


def is_pyramidal(model: IndependenceModel, x: Trace, letter: str) -> bool:
    """Whether x has exactly one occurrence of ``letter`` and it is the only
    maximal piece."""
    i = model.index_of(letter)
    return x.letter_count(i) == 1 and max_letters(model, x) == 1 << i


def _first_piece_cone(dep: Sequence[int], word: Sequence[int], pivot: int) -> tuple[list[int], list[int]]:
    """Split a word at the downward closure of its first pivot occurrence.

    Returns (cone, rest) as index lists.  The cone is the set of pieces the
    first pivot piece rests on, transitively, pivot included; it is computed
    by a right to left sweep from the pivot position collecting letters
    dependent on something already collected.
    """
    pos = word.index(pivot)
    keep = [False] * (pos + 1)
    keep[pos] = True
    reach = dep[pivot]
    for j in range(pos - 1, -1, -1):
        b = word[j]
        if reach & (1 << b):
            keep[j] = True
            reach |= dep[b]
    cone = [word[j] for j in range(pos + 1) if keep[j]]
    rest = [word[j] for j in range(pos + 1) if not keep[j]]
    rest.extend(word[pos + 1:])
    return cone, rest


def pyramidal_decompose(
    model: IndependenceModel, x: Trace, letter: str
) -> tuple[list[Trace], Trace]:
    """Split x into pyramidal prefixes and a remainder free of ``letter``.

    With k occurrences of the letter in x, returns (parts, remainder) where
    parts has k traces, each pyramidal with apex ``letter``, the remainder
    has no occurrence of the letter, and the product of parts followed by
    the remainder equals x.  Each part is the downward closure of the
    lowest remaining occurrence of the letter.
    """
    pivot = model.index_of(letter)
    dep = model.dependence
    word = word_indices(x)
    parts: list[Trace] = []
    while pivot in word:
        cone, word = _first_piece_cone(dep, word, pivot)
        parts.append(normalize_indices(model, cone))
    return parts, normalize_indices(model, word)


# ---------------------------------------------------------------------------
# Formatting

def format_trace(model: IndependenceModel, x: Trace) -> str:
    """Bracket form of the normal form, for example "(a d)(b)"; unit is "1"."""
    if x.is_unit:
        return "1"
    return "".join(
        "(" + " ".join(model.letters[i] for i in iter_bits(f)) + ")" for f in x.factors
    )


def trace_to_lists(model: IndependenceModel, x: Trace) -> list[list[str]]:
    """Normal form as a list of factors, each a list of letter names."""
    return [[model.letters[i] for i in iter_bits(f)] for f in x.factors]


def trace_from_lists(model: IndependenceModel, factors: Sequence[Sequence[str]]) -> Trace:
    """Rebuild a trace from its factor lists, renormalising for safety."""
    indices: list[int] = []
    for factor in factors:
        indices.extend(model.index_of(ch) for ch in factor)
    return normalize_indices(model, indices)
