"""The one-burst syndrome f(x) = (a0, a1, eta, zeta) and decoding from it.

a0 and a1 are the count (mod 4) and the position-weighted sum (mod 2n) of the
occurrences of 0^t 1^t. eta and zeta add up the digests of the even- and
odd-indexed overlapping windows, reduced mod q^N.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, NamedTuple, Sequence

from .errors import AmbiguousError, DensityError, NoCandidateError, ParameterError
from .labeling import LabelingScheme, burst_preimages, encode_digest, label
from .seq_core import ChannelParams, Word, indicator_vector, is_dense


@dataclass(frozen=True)
class WindowLayout:
    n: int
    rho: int
    windows: tuple  # ((start, end), ...), 1-based inclusive

    def covers(self) -> bool:
        covered = set()
        for s, e in self.windows:
            covered.update(range(s, e + 1))
        return covered == set(range(1, self.n + 1))


def window_layout(n: int, rho: int) -> WindowLayout:
    """Overlapping windows of length 2*rho with stride rho; the last one is cut at n.

    When ceil(n/rho) <= 1 the layout is the single window [1, n].

    >>> window_layout(20, 5).windows
    ((1, 10), (6, 15), (11, 20))
    """
    if rho < 1:
        raise ParameterError("rho must be >= 1")
    k = math.ceil(n / rho)
    if k <= 1:
        return WindowLayout(n, rho, ((1, n),))
    wins = [((j - 1) * rho + 1, (j + 1) * rho) for j in range(1, k - 1)]
    wins.append(((k - 2) * rho + 1, n))
    return WindowLayout(n, rho, tuple(wins))


class SyndromeTuple(NamedTuple):
    alpha: int
    beta: int
    eta: int
    zeta: int

    def to_dict(self) -> dict:
        return self._asdict()

    @classmethod
    def from_dict(cls, d: dict) -> "SyndromeTuple":
        return cls(int(d["alpha"]), int(d["beta"]), int(d["eta"]), int(d["zeta"]))


def a_syndromes(x: Sequence[int], p: Sequence[int], n: int | None = None) -> tuple[int, int]:
    """(a0, a1): occurrence count of ``p`` mod 4 and sum of 1-based starts mod 2n."""
    x = tuple(x)
    n = len(x) if n is None else n
    if len(p) > len(x):
        return 0, 0
    ind = indicator_vector(x, p)
    return sum(ind) % 4, sum(i for i, v in enumerate(ind, 1) if v) % (2 * n)


def window_parities(x: Sequence[int], layout: WindowLayout, scheme: LabelingScheme,
                    q: int, N: int) -> tuple[int, int]:
    """(eta, zeta): digests of even- and odd-indexed windows, each summed mod q^N."""
    x = tuple(x)
    if layout.n != len(x):
        raise ParameterError(f"layout built for n={layout.n}, word has length {len(x)}")
    scheme.check_fits(q, N)
    modulus = q ** N
    acc = [0, 0]
    for j, (s, e) in enumerate(layout.windows, 1):
        acc[j % 2] += encode_digest(label(x[s - 1:e], scheme), scheme, q)
    return acc[0] % modulus, acc[1] % modulus


@lru_cache(maxsize=1 << 18)
def _f(x: Word, params: ChannelParams, scheme: LabelingScheme) -> SyndromeTuple:
    n = len(x)
    a0, a1 = a_syndromes(x, params.pattern, n)
    eta, zeta = window_parities(x, window_layout(n, params.rho), scheme, params.q, params.N)
    return SyndromeTuple(a0, a1, eta, zeta)


def f_syndrome(x: Sequence[int], params: ChannelParams, scheme: LabelingScheme,
               enforce_density: bool = False) -> SyndromeTuple:
    """Syndrome tuple of ``x`` (any length; n = |x| throughout)."""
    x = tuple(x)
    if enforce_density and not is_dense(x, params.pattern, params.delta):
        raise DensityError(f"word is not ({params.pattern}, {params.delta})-dense")
    return _f(x, params, scheme)


def decode_one_burst(y: Sequence[int], expected: SyndromeTuple, params: ChannelParams,
                     scheme: LabelingScheme, t: int | None = None,
                     extra_filter: Callable[[Word], bool] | None = None,
                     enforce_density: bool = False) -> Word:
    """Recover the word of length |y|+t whose syndrome is ``expected``.

    Every burst preimage of ``y`` is scored; the survivors must also pass
    ``extra_filter`` and, if enforced, the density test. Exactly one survivor
    is required.
    """
    y = tuple(y)
    t = params.t if t is None else t
    p, delta = params.pattern, params.delta
    survivors = []
    for c in sorted(burst_preimages(y, t, params.q)):
        # cached syndrome lookup first; it rejects almost everything
        if _f(c, params, scheme) != expected:
            continue
        if extra_filter is not None and not extra_filter(c):
            continue
        if enforce_density and not is_dense(c, p, delta):
            continue
        survivors.append(c)
    if not survivors:
        raise NoCandidateError("no burst preimage has the expected syndrome")
    if len(survivors) > 1:
        raise AmbiguousError(f"{len(survivors)} preimages share the syndrome", survivors)
    return survivors[0]
