"""Burst-deletion balls and the segmented channel, with enumeration oracles.

An error pattern is a tuple with one entry per segment: ``None`` for an intact
segment, or the 1-based start ``a`` in [1, b-t+1] of a burst of exactly t
deletions inside that segment.
"""
from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import ParameterError
from .seq_core import ChannelParams, Word

ErrorPattern = tuple  # tuple[int | None, ...]


def burst_ball(x: Sequence[int], t: int) -> set[Word]:
    """All words obtained from ``x`` by deleting t consecutive symbols.

    >>> sorted(burst_ball((0, 1, 0), 1))
    [(0, 0), (0, 1), (1, 0)]
    """
    x = tuple(x)
    if not 0 <= t < len(x):
        raise ParameterError(f"burst length {t} must lie in [0, {len(x)})")
    return {x[:i] + x[i + t:] for i in range(len(x) - t + 1)}


def burst_starts(params: ChannelParams) -> range:
    return range(1, params.b - params.t + 2)


def validate_pattern(pattern: Sequence, params: ChannelParams) -> ErrorPattern:
    pattern = tuple(pattern)
    if len(pattern) != params.gamma:
        raise ParameterError(f"pattern has {len(pattern)} entries, expected gamma={params.gamma}")
    hi = params.b - params.t + 1
    for k, a in enumerate(pattern, 1):
        if a is None:
            continue
        if isinstance(a, bool) or not isinstance(a, (int, np.integer)) or not 1 <= a <= hi:
            raise ParameterError(f"segment {k}: burst start {a!r} outside [1, {hi}]")
    return tuple(None if a is None else int(a) for a in pattern)


def all_error_patterns(params: ChannelParams) -> Iterator[ErrorPattern]:
    """Every admissible pattern; there are (b-t+2)**gamma of them."""
    choices = (None,) + tuple(burst_starts(params))
    return product(choices, repeat=params.gamma)


def apply_channel(x: Sequence[int], params: ChannelParams, pattern: Sequence) -> Word:
    x = tuple(x)
    if len(x) != params.n:
        raise ParameterError(f"word length {len(x)} != n={params.n}")
    pattern = validate_pattern(pattern, params)
    b, t = params.b, params.t
    out = []
    for k, a in enumerate(pattern):
        seg = x[k * b:(k + 1) * b]
        if a is not None:
            seg = seg[:a - 1] + seg[a - 1 + t:]
        out.extend(seg)
    return tuple(out)


def segmented_ball(x: Sequence[int], params: ChannelParams) -> set[Word]:
    """All outputs reachable from ``x``, including ``x`` itself."""
    x = tuple(x)
    if len(x) != params.n:
        raise ParameterError(f"word length {len(x)} != n={params.n}")
    b, t = params.b, params.t
    per_segment = []
    for k in range(params.gamma):
        seg = x[k * b:(k + 1) * b]
        per_segment.append({seg} | burst_ball(seg, t))
    return {sum(parts, ()) for parts in product(*per_segment)}


def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_pattern(params: ChannelParams, burst_probability: float, seed) -> ErrorPattern:
    if not 0.0 <= burst_probability <= 1.0:
        raise ParameterError(f"burst probability {burst_probability} outside [0, 1]")
    rng = _rng(seed)
    hi = params.b - params.t + 1
    hits = rng.random(params.gamma) < burst_probability
    starts = rng.integers(1, hi + 1, size=params.gamma)
    return tuple(int(a) if hit else None for hit, a in zip(hits, starts))


def apply_channel_random(x: Sequence[int], params: ChannelParams, burst_probability: float,
                         seed) -> tuple[Word, ErrorPattern]:
    """Each segment independently loses a burst with the given probability.

    Deterministic for a fixed integer seed.
    """
    pattern = random_pattern(params, burst_probability, seed)
    return apply_channel(x, params, pattern), pattern


def confusable_neighbors(x: Sequence[int], params: ChannelParams,
                         universe: Iterable[Sequence[int]]) -> set[Word]:
    """Words x' != x of the universe whose segmented ball meets that of x."""
    x = tuple(x)
    mine = segmented_ball(x, params)
    out = set()
    for w in universe:
        w = tuple(w)
        if w == x:
            continue
        if not mine.isdisjoint(segmented_ball(w, params)):
            out.add(w)
    return out


def neighbor_count_bound(params: ChannelParams) -> int:
    """b^{2 gamma} q^{gamma t}, the counting bound on confusable neighbours."""
    return params.b ** (2 * params.gamma) * params.q ** (params.gamma * params.t)


def pattern_to_json(pattern: Sequence) -> list:
    return ["none" if a is None else {"burst": int(a)} for a in pattern]


def pattern_from_json(entries: Sequence) -> ErrorPattern:
    out = []
    for e in entries:
        if e is None or e == "none" or (isinstance(e, dict) and "none" in e):
            out.append(None)
        elif isinstance(e, dict) and "burst" in e:
            out.append(int(e["burst"]))
        else:
            raise ParameterError(f"unrecognised pattern entry {e!r}")
    return tuple(out)
