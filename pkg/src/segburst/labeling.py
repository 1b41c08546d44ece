"""One-burst labeling: a short digest from which a word is recoverable after
one burst of t deletions.

The digest pairs a position-weighted sum with a polynomial hash,

    s1 = sum_i i * x_i          (mod P1)
    s2 = sum_i x_i * beta^(i-1) (mod P2),

and its recovery contract is checked empirically with :func:`certify` rather
than proven. Recovery is an exhaustive search over all burst preimages of the
received word.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Callable, Sequence

import numpy as np
from sympy import nextprime

from .channel import burst_ball
from .errors import AmbiguousError, ConfigurationError, NoCandidateError, ParameterError
from .seq_core import Word, symbols_needed

COMPONENTS = ("s1", "s2")


@dataclass(frozen=True)
class LabelingScheme:
    p1: int
    p2: int
    beta: int
    n_symbols: int | None = None  # declared digest size, for redundancy accounting
    components: tuple = COMPONENTS

    def __post_init__(self):
        if self.p1 < 1 or self.p2 < 1:
            raise ConfigurationError("moduli must be positive")
        comps = tuple(self.components)
        if any(c not in COMPONENTS for c in comps) or len(set(comps)) != len(comps):
            raise ConfigurationError(f"components must be a subset of {COMPONENTS}, got {comps}")
        object.__setattr__(self, "components", tuple(c for c in COMPONENTS if c in comps))

    def width(self, q: int) -> int:
        """Number of q-ary symbols the encoded digest occupies."""
        moduli = {"s1": self.p1, "s2": self.p2}
        return sum(symbols_needed(moduli[c], q) for c in self.components)

    def check_fits(self, q: int, N: int) -> None:
        w = self.width(q)
        if w > N:
            raise ConfigurationError(
                f"digest needs {w} base-{q} symbols but only N={N} are available")
        if self.n_symbols is not None and w > self.n_symbols:
            raise ConfigurationError(
                f"digest needs {w} symbols, more than the declared N={self.n_symbols}")

    def to_dict(self) -> dict:
        d = {"P1": self.p1, "P2": self.p2, "beta": self.beta, "N": self.n_symbols}
        if self.components != COMPONENTS:
            d["components"] = list(self.components)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "LabelingScheme":
        return cls(p1=int(d["P1"]), p2=int(d["P2"]), beta=int(d["beta"]),
                   n_symbols=d.get("N"), components=tuple(d.get("components", COMPONENTS)))


def default_scheme(max_length: int, q: int = 2, t: int = 1) -> LabelingScheme:
    """Recommended moduli for words up to ``max_length``.

    P1 is the first prime above 2*max_length, P2 the first prime above
    (max_length * q^t)^2, and beta = q + 1. For q = 2, max_length = 12, t = 3
    this gives P1 = 29, P2 = 9221, beta = 3, which certifies exhaustively for
    every n <= 12 and t in {1, 2, 3}.
    """
    p1 = int(nextprime(2 * max_length))
    p2 = int(nextprime((max_length * q ** t) ** 2))
    return LabelingScheme(p1=p1, p2=p2, beta=q + 1)


DEFAULT_SCHEME = default_scheme(12, 2, 3)


@dataclass(frozen=True)
class Digest:
    s1: int
    s2: int
    length: int


@lru_cache(maxsize=1 << 18)
def _label(x: Word, p1: int, p2: int, beta: int, comps: tuple) -> tuple[int, int]:
    s1 = s2 = 0
    if "s1" in comps:
        s1 = sum(i * v for i, v in enumerate(x, 1)) % p1
    if "s2" in comps:
        acc, power = 0, 1
        for v in x:
            acc += v * power
            power = power * beta % p2
        s2 = acc % p2
    return s1, s2


def label(x: Sequence[int], scheme: LabelingScheme) -> Digest:
    """Digest of ``x``; components not selected by the scheme are reported as 0.

    >>> label((0, 1, 0, 1), LabelingScheme(97, 31, 2))
    Digest(s1=6, s2=10, length=4)
    """
    x = tuple(x)
    s1, s2 = _label(x, scheme.p1, scheme.p2, scheme.beta, scheme.components)
    return Digest(s1, s2, len(x))


def encode_digest(d: Digest, scheme: LabelingScheme, q: int) -> int:
    """Big-endian base-q concatenation of the selected components."""
    value = 0
    for name, modulus in (("s1", scheme.p1), ("s2", scheme.p2)):
        if name in scheme.components:
            value = value * q ** symbols_needed(modulus, q) + getattr(d, name)
    return value


def burst_preimages(y: Sequence[int], t: int, q: int) -> set[Word]:
    """Every word c of length |y|+t with y in the t-burst ball of c."""
    y = tuple(y)
    if t == 0:
        return {y}
    blocks = list(product(range(q), repeat=t))
    return {y[:i] + blk + y[i:] for i in range(len(y) + 1) for blk in blocks}


def recover_from_burst(d: Digest, y: Sequence[int], t: int, scheme: LabelingScheme,
                       q: int = 2) -> Word:
    """The unique c with y in B_t(c) and label(c) == d.

    Raises :class:`AmbiguousError` when several preimages share the digest and
    :class:`NoCandidateError` when none does.
    """
    y = tuple(y)
    if len(y) != d.length - t:
        raise ParameterError(f"received length {len(y)} != {d.length} - {t}")
    hits = sorted(c for c in burst_preimages(y, t, q) if label(c, scheme) == d)
    if not hits:
        raise NoCandidateError("no burst preimage matches the digest")
    if len(hits) > 1:
        raise AmbiguousError(f"{len(hits)} preimages share the digest", hits)
    return hits[0]


@dataclass(frozen=True)
class Sampled:
    k: int
    seed: int = 0


@dataclass
class CertificationReport:
    q: int
    n: int
    t: int
    scheme: LabelingScheme
    domain: str
    words_tested: int = 0
    pairs_tested: int = 0
    failures: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    failure_count: int = 0
    max_exemplars: int = 20

    @property
    def certified(self) -> bool:
        return self.failure_count == 0

    def add_failure(self, x, received, others):
        self.failure_count += 1
        if len(self.failures) < self.max_exemplars:
            self.failures.append({"x": list(x), "received": list(received),
                                  "colliding": [list(o) for o in others]})

    def to_dict(self) -> dict:
        return {
            "certified": self.certified,
            "q": self.q, "n": self.n, "t": self.t,
            "scheme": self.scheme.to_dict(),
            "domain": self.domain,
            "words_tested": self.words_tested,
            "pairs_tested": self.pairs_tested,
            "failure_count": self.failure_count,
            "failures": self.failures,
            "warnings": self.warnings,
        }


def certify(scheme: LabelingScheme, q: int, n: int, t: int, domain="exhaustive",
            max_words: int = 1 << 20) -> CertificationReport:
    """Check recover_from_burst(label(x), x') == x for x in the domain and x' in B_t(x).

    ``domain`` is ``"exhaustive"`` (all of Sigma_q^n, at most ``max_words``)
    or a :class:`Sampled` instance.
    """
    if not 0 <= t < n:
        raise ParameterError(f"need 0 <= t < n, got t={t}, n={n}")
    if domain == "exhaustive":
        if q ** n > max_words:
            raise ParameterError(f"q^n = {q ** n} exceeds the budget of {max_words} words")
        return _certify_exhaustive(scheme, q, n, t)
    if isinstance(domain, Sampled):
        return _certify_sampled(scheme, q, n, t, domain)
    raise ParameterError(f"unknown certification domain {domain!r}")


def _certify_exhaustive(scheme, q, n, t) -> CertificationReport:
    # recovery of x from x' fails exactly when another burst parent of x'
    # carries the same digest, so group parents by their common descendant
    rep = CertificationReport(q, n, t, scheme, "exhaustive")
    parents: dict[Word, list[Word]] = {}
    for x in product(range(q), repeat=n):
        rep.words_tested += 1
        for y in burst_ball(x, t):
            parents.setdefault(y, []).append(x)
            rep.pairs_tested += 1
    for y, ps in parents.items():
        by_digest: dict[Digest, list[Word]] = {}
        for p in ps:
            by_digest.setdefault(label(p, scheme), []).append(p)
        for group in by_digest.values():
            if len(group) > 1:
                for x in group:
                    rep.add_failure(x, y, [o for o in group if o != x])
    return rep


def _certify_sampled(scheme, q, n, t, domain: Sampled) -> CertificationReport:
    rep = CertificationReport(q, n, t, scheme, f"sampled(k={domain.k}, seed={domain.seed})")
    if domain.k == 0:
        rep.warnings.append("no coverage: empty sample")
        return rep
    rng = np.random.default_rng(domain.seed)
    for row in rng.integers(0, q, size=(domain.k, n)):
        x = tuple(int(v) for v in row)
        rep.words_tested += 1
        d = label(x, scheme)
        for y in sorted(burst_ball(x, t)):
            rep.pairs_tested += 1
            try:
                got = recover_from_burst(d, y, t, scheme, q)
            except AmbiguousError as exc:
                rep.add_failure(x, y, [c for c in exc.candidates if c != x])
                continue
            if got != x:
                rep.add_failure(x, y, [got])
    return rep


def certify_on(words, t: int, signature: Callable[[Word], object]) -> list[tuple]:
    """Collisions of ``signature`` among burst-confusable members of ``words``.

    Returns (descendant, colliding words) pairs; empty means the signature
    separates every pair of members that share a t-burst descendant.
    """
    parents: dict[Word, list[Word]] = {}
    for w in words:
        for y in burst_ball(w, t):
            parents.setdefault(y, []).append(w)
    out = []
    for y, ps in parents.items():
        if len(ps) < 2:
            continue
        seen: dict = {}
        for p in ps:
            seen.setdefault(signature(p), []).append(p)
        out.extend((y, tuple(g)) for g in seen.values() if len(g) > 1)
    return out
