"""Words over Sigma_q and their segments, with pattern indicators and density tests.

Words are plain tuples of ints. Positions in docstrings are 1-based, as in the
usual coding-theory notation; the Python API slices 0-based internally.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, replace
from itertools import accumulate
from typing import Iterable, Sequence

from .errors import ParameterError

Word = tuple  # tuple[int, ...]


def make_word(symbols: Iterable[int], q: int = 2) -> Word:
    """Validate ``symbols`` against the alphabet [0, q) and freeze them."""
    if q < 2:
        raise ParameterError(f"alphabet size must be >= 2, got {q}")
    w = tuple(int(s) for s in symbols)
    for s in w:
        if not 0 <= s < q:
            raise ParameterError(f"symbol {s} outside alphabet [0, {q})")
    return w


def burst_pattern(t: int) -> Word:
    """The synchronization pattern 0^t 1^t."""
    if t < 1:
        raise ParameterError("pattern needs t >= 1")
    return (0,) * t + (1,) * t


def default_digest_symbols(rho: int, q: int) -> int:
    """ceil(4 log_q(2 rho)), the leading term of the window-digest length."""
    # the epsilon absorbs float noise such as log(16, 2) -> 4.000000000000001
    return math.ceil(4 * math.log(2 * rho, q) - 1e-9)


def symbols_needed(modulus: int, q: int) -> int:
    """Smallest w with q**w >= modulus, i.e. the base-q width of [0, modulus)."""
    w, cap = 0, 1
    while cap < modulus:
        cap *= q
        w += 1
    return w


@dataclass(frozen=True)
class ChannelParams:
    """Segmented burst-deletion channel parameters.

    Window fields left as ``None`` default to the asymptotic formulas
    (delta = 2t q^{2t} ceil(log2 n), rho = delta + t for q = 2 and 3 delta
    otherwise, N = ceil(4 log_q(2 rho))). At desk scale these make density
    vacuous, so tests usually pass smaller values explicitly.
    """

    q: int
    b: int
    t: int
    gamma: int
    delta: int | None = None
    rho: int | None = None
    N: int | None = None

    def __post_init__(self):
        if self.q < 2:
            raise ParameterError(f"q must be >= 2, got {self.q}")
        if self.b < 1 or self.gamma < 1:
            raise ParameterError("b and gamma must be positive")
        if not 1 <= self.t < self.b:
            raise ParameterError(f"burst length t={self.t} must lie in [1, b={self.b})")
        n = self.b * self.gamma
        if self.delta is None:
            logn = max(1, math.ceil(math.log2(n))) if n > 1 else 1
            object.__setattr__(self, "delta", 2 * self.t * self.q ** (2 * self.t) * logn)
        if self.rho is None:
            rho = self.delta + self.t if self.q == 2 else 3 * self.delta
            object.__setattr__(self, "rho", rho)
        if self.N is None:
            object.__setattr__(self, "N", default_digest_symbols(self.rho, self.q))
        if self.delta < 2 * self.t:
            raise ParameterError(f"delta={self.delta} must be >= 2t={2 * self.t}")
        if self.rho < self.t:
            raise ParameterError(f"rho={self.rho} must be >= t={self.t}")
        if self.N < 0:
            raise ParameterError("N must be non-negative")

    @property
    def n(self) -> int:
        return self.b * self.gamma

    @property
    def pattern(self) -> Word:
        return burst_pattern(self.t)

    def replace(self, **changes) -> "ChannelParams":
        return replace(self, **changes)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "ChannelParams":
        keys = ("q", "b", "t", "gamma", "delta", "rho", "N")
        return cls(**{k: d[k] for k in keys if k in d and d[k] is not None})


def indicator_vector(x: Sequence[int], p: Sequence[int]) -> Word:
    """Binary vector with a 1 at every start position of an occurrence of ``p``.

    >>> indicator_vector((0, 1, 0, 1), (0, 1))
    (1, 0, 1, 0)
    """
    x, p = tuple(x), tuple(p)
    m = len(p)
    if m > len(x):
        raise ParameterError(f"pattern of length {m} longer than word of length {len(x)}")
    last = len(x) - m
    return tuple(1 if i <= last and x[i:i + m] == p else 0 for i in range(len(x)))


def count_occurrences(x: Sequence[int], p: Sequence[int]) -> int:
    """Naive overlapping occurrence count; kept independent of indicator_vector."""
    x, p = list(x), list(p)
    return sum(1 for i in range(len(x) - len(p) + 1) if x[i:i + len(p)] == p)


def is_dense(x: Sequence[int], p: Sequence[int], delta: int) -> bool:
    """True iff every length-``delta`` substring of ``x`` contains ``p``.

    Vacuously true when ``delta > len(x)``.
    """
    x, p = tuple(x), tuple(p)
    n, m = len(x), len(p)
    if delta > n:
        return True
    if delta < m:
        raise ParameterError(f"delta={delta} shorter than the pattern ({m})")
    starts = indicator_vector(x, p)
    # pre[k] = number of occurrence starts in x[0:k]
    pre = (0,) + tuple(accumulate(starts))
    span = delta - m + 1  # admissible starts inside a window
    return all(pre[s + span] - pre[s] > 0 for s in range(n - delta + 1))


def segment(x: Sequence[int], params: ChannelParams, i: int) -> Word:
    """The i-th segment (1-based) x((i-1)b+1 : ib)."""
    if len(x) != params.n:
        raise ParameterError(f"word length {len(x)} != n={params.n}")
    if not 1 <= i <= params.gamma:
        raise ParameterError(f"segment index {i} outside [1, {params.gamma}]")
    b = params.b
    return tuple(x[(i - 1) * b:i * b])


def split_segments(x: Sequence[int], params: ChannelParams) -> list[Word]:
    return [segment(x, params, i) for i in range(1, params.gamma + 1)]
