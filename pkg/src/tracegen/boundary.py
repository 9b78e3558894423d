"""Streaming generation of infinite traces under the uniform measure.

An irreducible alphabet (connected dependence graph) carries a unique
uniform probability measure on the boundary of infinite traces, under
which every cylinder of a finite prefix x has probability p^|x| at the
critical parameter p, the smallest Mobius root of the whole alphabet.

The generator emits an endless product of independent identically
distributed blocks V . a, where a is a fixed pivot letter and V is drawn
over the alphabet without a, at the critical parameter, conditioned on
its maximal pieces lying in the dependence neighbourhood of a.  That
conditioning is exactly what makes every block pyramidal with apex a, so
consecutive blocks interlock and the partial products converge to a
boundary point with the uniform law.

Each block is drawn from its own child random stream keyed by the block
index, which makes the stream restartable and lets blocks be produced in
parallel with output identical to the sequential run.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

from .mobius import ROOT_MARGIN, MobiusTable, NotIrreducibleError, is_irreducible, smallest_root
from .monoid import IndependenceModel, Trace, _heap_levels, _push
from .sampler import (
    RandomStream,
    SamplerParams,
    StepCounter,
    _pivot_chooser,
    _sample_into,
)


class GapViolationError(RuntimeError):
    """The critical parameter failed to sit strictly below the root of the
    pivot free subalphabet; for an irreducible alphabet this signals a
    numerical fault, not a modelling choice."""


class BlockStream:
    """Mutable generator state for one boundary run.

    Single owner: the stream mutates in place as blocks are emitted.  The
    accumulated trace is kept as a growing heap, so each new block costs
    time proportional to its own length only.
    """

    def __init__(
        self,
        model: IndependenceModel,
        pivot: str,
        seed: int,
        pivot_rule: str = "lowindex",
    ):
        self.model = model
        self.pivot = pivot
        self.pivot_index = model.index_of(pivot)
        self.seed = int(seed)
        self.p_star = smallest_root(model)
        self.block_target = model.dependence[self.pivot_index]
        self.block_subset = model.full_mask & ~(1 << self.pivot_index)
        self.table = MobiusTable(model, self.p_star)
        self.stream = RandomStream(self.seed)
        self.counter = StepCounter()
        self.blocks_done = 0
        self._params = SamplerParams(p=self.p_star, seed=self.seed, pivot=pivot_rule)
        self._choose = _pivot_chooser(model, self._params)
        self._factors: list[int] = []
        self._levels = [-1] * model.size
        self._length = 0

    @property
    def accumulated(self) -> Trace:
        """Product of all blocks emitted so far."""
        return Trace(tuple(self._factors))

    @property
    def length(self) -> int:
        return self._length

    def block_word(self, index: int) -> list[int]:
        """Letter indices of block ``index`` (0 based), by pure replay.

        The block depends only on (seed, index), not on the stream state,
        so any block can be recomputed at will.
        """
        word: list[int] = []
        _sample_into(
            self.model,
            self.block_subset,
            self.block_target,
            self.table,
            self._choose,
            self.stream.split(index),
            self.counter,
            word,
        )
        word.append(self.pivot_index)
        return word

    def next_block(self) -> Trace:
        """Draw the next block, append it to the accumulated trace, and
        return the block itself."""
        word = self.block_word(self.blocks_done)
        dep = self.model.dependence
        bf: list[int] = []
        bl = [-1] * self.model.size
        for i in word:
            _push(self._factors, self._levels, i, dep)
            _push(bf, bl, i, dep)
        self._length += len(word)
        self.blocks_done += 1
        self.counter.steps += 1
        return Trace(tuple(bf))

    def run(self, blocks: int) -> Trace:
        """Advance by the given number of blocks, returning the accumulated
        trace."""
        for _ in range(blocks):
            self.next_block()
        return self.accumulated


def open_stream(
    model: IndependenceModel,
    pivot: str,
    seed: int,
    pivot_rule: str = "lowindex",
    allow_trivial: bool = False,
) -> BlockStream:
    """Validate the model and prepare a boundary stream.

    The alphabet must be irreducible; a one letter alphabet is degenerate
    (the only boundary point is a . a . a ...) and is rejected unless
    allow_trivial is set.  The critical parameter must clear the root of
    the pivot free subalphabet by a strict margin, which irreducibility
    guarantees up to numerics.
    """
    if not is_irreducible(model):
        raise NotIrreducibleError(
            "the dependence graph is not connected; the uniform boundary "
            "measure needs an irreducible alphabet"
        )
    model.index_of(pivot)
    if model.size == 1:
        if not allow_trivial:
            raise ValueError(
                "one letter alphabet: the boundary is a single point; pass "
                "allow_trivial=True to emit it anyway"
            )
        return BlockStream(model, pivot, seed, pivot_rule)
    stream = BlockStream(model, pivot, seed, pivot_rule)
    sub_root = smallest_root(model, stream.block_subset)
    if not stream.p_star <= sub_root - ROOT_MARGIN:
        raise GapViolationError(
            f"critical parameter {stream.p_star!r} does not sit below the "
            f"pivot free root {sub_root!r} by the required margin"
        )
    return stream


def next_block(stream: BlockStream) -> Trace:
    return stream.next_block()


def run(stream: BlockStream, blocks: int) -> Trace:
    return stream.run(blocks)


def _block_words_range(
    model: IndependenceModel,
    pivot: str,
    seed: int,
    pivot_rule: str,
    lo: int,
    hi: int,
) -> tuple[list[list[int]], int]:
    """Worker body: blocks lo..hi-1 as words, plus the steps spent."""
    stream = BlockStream(model, pivot, seed, pivot_rule)
    words = [stream.block_word(i) for i in range(lo, hi)]
    return words, stream.counter.steps


def parallel_run(
    model: IndependenceModel,
    pivot: str,
    seed: int,
    blocks: int,
    workers: int = 1,
    pivot_rule: str = "lowindex",
    allow_trivial: bool = False,
    counter: StepCounter | None = None,
) -> Trace:
    """Produce the first ``blocks`` blocks, optionally on worker processes.

    Block i depends only on (seed, i), so the result is identical to a
    sequential run with the same seed whatever the worker count.
    """
    if workers < 1:
        raise ValueError("workers must be at least 1")
    stream = open_stream(model, pivot, seed, pivot_rule, allow_trivial)
    if workers == 1:
        out = stream.run(blocks)
        if counter is not None:
            counter.add(stream.counter.steps)
        return out
    chunk = max(1, -(-blocks // workers))
    ranges = [(lo, min(lo + chunk, blocks)) for lo in range(0, blocks, chunk)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(
                _block_words_range, model, pivot, seed, pivot_rule, lo, hi
            )
            for lo, hi in ranges
        ]
        parts = [f.result() for f in futures]
    factors: list[int] = []
    levels = _heap_levels(model.size, factors)
    dep = model.dependence
    steps = 0
    for words, spent in parts:
        steps += spent
        for word in words:
            for i in word:
                _push(factors, levels, i, dep)
    if counter is not None:
        counter.add(steps + blocks)
    return Trace(tuple(factors))
