"""Segmented burst-deletion codes built from one-burst syndrome classes.

Each segment is a codeword of a syndrome class S^(j) (words sharing one
f-tuple) with a few extra symbol constraints tied to the *branch* j, the last
symbol of the previous segment:

* q = 2:  s_1 = 1 - j,  s_{t+1} != s_{2t},  s_{b-t+1} = s_b
* q > 2:  s_k != j for k in the forbidden positions,  s_{b-t+1} = s_b

These constraints stop the head of a segment that lost a burst from being
mistaken for the tail of the previous one. The decoder can therefore walk the
received word segment by segment and recover every boundary.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, NamedTuple, Sequence

from .errors import (AmbiguousError, ConstructionError, LengthMismatchError, NoCandidateError,
                     NotInCodebookError, ParameterError)
from .labeling import LabelingScheme, certify_on
from .seq_core import ChannelParams, Word, is_dense, make_word
from .syndrome import SyndromeTuple, decode_one_burst, f_syndrome

FORMAT_VERSION = 1


def default_forbidden_positions(t: int) -> tuple:
    return tuple(sorted({1, t, t + 1, 2 * t}))


def initial_branch(q: int) -> int:
    """Branch used for the first segment: the s_1 = 0 class when q = 2, branch 0 otherwise."""
    return 1 if q == 2 else 0


@dataclass(frozen=True)
class ClassConstraint:
    q: int
    b: int
    t: int
    branch: int
    forbidden_positions: tuple  # symbol at each of these positions must differ from branch
    unequal_pair: tuple | None  # binary only: (t+1, 2t)
    equal_pair: tuple  # (b-t+1, b)

    def describe(self) -> str:
        parts = [f"s_{k}!={self.branch}" for k in self.forbidden_positions]
        if self.unequal_pair:
            parts.append("s_{}!=s_{}".format(*self.unequal_pair))
        parts.append("s_{}=s_{}".format(*self.equal_pair))
        return ", ".join(parts)


def check_codec_params(params: ChannelParams) -> None:
    if params.t < 2:
        raise ParameterError("codebook construction needs t >= 2 (s_{t+1} != s_{2t} is void at t=1)")
    if params.b < 3 * params.t:
        raise ParameterError(f"codebook construction needs b >= 3t, got b={params.b}, t={params.t}")


def class_constraints(params: ChannelParams, j: int,
                      forbidden_positions: Sequence[int] | None = None) -> ClassConstraint:
    """Structural constraints for branch ``j``.

    ``forbidden_positions`` only applies when q > 2; it defaults to {1, t, t+1, 2t}.
    """
    check_codec_params(params)
    q, b, t = params.q, params.b, params.t
    if not 0 <= j < q:
        raise ParameterError(f"branch {j} outside [0, {q})")
    equal = (b - t + 1, b)
    if q == 2:
        return ClassConstraint(q, b, t, j, (1,), (t + 1, 2 * t), equal)
    pos = default_forbidden_positions(t) if forbidden_positions is None else forbidden_positions
    pos = tuple(sorted(set(int(k) for k in pos)))
    if not pos or pos[0] < 1 or pos[-1] > b:
        raise ParameterError(f"forbidden positions {pos} must lie in [1, {b}]")
    return ClassConstraint(q, b, t, j, pos, None, equal)


def satisfies(s: Sequence[int], cs: ClassConstraint) -> bool:
    if len(s) != cs.b:
        raise ParameterError(f"segment length {len(s)} != b={cs.b}")
    if any(s[k - 1] == cs.branch for k in cs.forbidden_positions):
        return False
    if cs.unequal_pair and s[cs.unequal_pair[0] - 1] == s[cs.unequal_pair[1] - 1]:
        return False
    return s[cs.equal_pair[0] - 1] == s[cs.equal_pair[1] - 1]


def constrained_words(params: ChannelParams, cs: ClassConstraint, enforce_density: bool,
                      max_words: int) -> Iterable[Word]:
    """Lexicographic stream of length-b words meeting ``cs`` (and density, if enforced)."""
    if params.q ** params.b > max_words:
        raise ParameterError(
            f"q^b = {params.q ** params.b} exceeds the enumeration budget of {max_words}")
    p, delta = params.pattern, params.delta
    for s in product(range(params.q), repeat=params.b):
        if satisfies(s, cs) and (not enforce_density or is_dense(s, p, delta)):
            yield s


def class_partition(params: ChannelParams, scheme: LabelingScheme, j: int,
                    forbidden_positions=None, enforce_density: bool = False,
                    max_words: int = 1 << 20) -> dict[SyndromeTuple, list[Word]]:
    """Constrained words of branch ``j`` grouped by syndrome tuple (members in lex order)."""
    cs = class_constraints(params, j, forbidden_positions)
    classes: dict[SyndromeTuple, list[Word]] = {}
    for s in constrained_words(params, cs, enforce_density, max_words):
        classes.setdefault(f_syndrome(s, params, scheme), []).append(s)
    return classes


def largest_class(classes: dict) -> tuple[SyndromeTuple, list[Word]]:
    """Argmax by size; ties go to the lexicographically smallest tuple."""
    key = min(classes, key=lambda k: (-len(classes[k]), k))
    return key, classes[key]


def burst_collisions(words: Sequence[Word], t: int) -> list[tuple]:
    """Pairs of words in ``words`` whose t-burst balls meet (empty = internally decodable)."""
    return certify_on(words, t, signature=lambda w: None)


@dataclass(frozen=True)
class Branch:
    branch: int
    syndrome: SyndromeTuple
    codewords: tuple
    class_size: int


@dataclass
class Codebook:
    params: ChannelParams
    scheme: LabelingScheme
    branches: tuple
    M: int
    forbidden_positions: tuple | None = None
    density: bool = False
    _rank: list = field(default=None, init=False, repr=False, compare=False)

    def constraint(self, j: int) -> ClassConstraint:
        return class_constraints(self.params, j, self.forbidden_positions)

    def rank(self, j: int, word: Word) -> int:
        if self._rank is None:
            self._rank = [{w: i for i, w in enumerate(br.codewords)} for br in self.branches]
        try:
            return self._rank[j][tuple(word)]
        except KeyError:
            raise NotInCodebookError(f"segment {word} is not a branch-{j} codeword") from None

    def is_member(self, j: int, s: Word) -> bool:
        """Membership in the full syndrome class of branch j (not just the first M)."""
        if not satisfies(s, self.constraint(j)):
            return False
        if self.density and not is_dense(s, self.params.pattern, self.params.delta):
            return False
        return f_syndrome(s, self.params, self.scheme) == self.branches[j].syndrome

    @property
    def size(self) -> int:
        return self.M ** self.params.gamma

    # serialization

    def to_dict(self) -> dict:
        p = self.params
        header = {
            "version": FORMAT_VERSION,
            "q": p.q, "b": p.b, "t": p.t, "gamma": p.gamma,
            "delta": p.delta, "rho": p.rho, "N": p.N,
            "scheme": self.scheme.to_dict(),
            "forbidden_positions": None if self.forbidden_positions is None
            else list(self.forbidden_positions),
            "density_flag": self.density,
        }
        branches = [{
            "branch": br.branch,
            "tuple": br.syndrome.to_dict(),
            "class_size": br.class_size,
            "M": self.M,
            "codewords": [list(w) for w in br.codewords],
        } for br in self.branches]
        return {"header": header, "branches": branches}

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "Codebook":
        h = d["header"]
        if h.get("version") != FORMAT_VERSION:
            raise ParameterError(f"unsupported codebook version {h.get('version')!r}")
        params = ChannelParams.from_dict(h)
        scheme = LabelingScheme.from_dict(h["scheme"])
        fp = h.get("forbidden_positions")
        branches = []
        for entry in sorted(d["branches"], key=lambda e: e["branch"]):
            words = tuple(make_word(w, params.q) for w in entry["codewords"])
            branches.append(Branch(int(entry["branch"]), SyndromeTuple.from_dict(entry["tuple"]),
                                   words, int(entry.get("class_size", len(words)))))
        M = int(d["branches"][0]["M"]) if d["branches"] else 0
        book = cls(params, scheme, tuple(branches), M,
                   None if fp is None else tuple(fp), bool(h.get("density_flag", False)))
        validate_codebook(book)
        return book

    @classmethod
    def loads(cls, text: str) -> "Codebook":
        return cls.from_dict(json.loads(text))


def validate_codebook(book: Codebook) -> None:
    """Re-check every stored invariant; raises ConstructionError on the first violation."""
    p = book.params
    check_codec_params(p)
    if len(book.branches) != p.q or [br.branch for br in book.branches] != list(range(p.q)):
        raise ConstructionError(f"expected branches 0..{p.q - 1}")
    if book.M < 1:
        raise ConstructionError("M must be >= 1")
    for br in book.branches:
        words = br.codewords
        if len(words) != book.M:
            raise ConstructionError(f"branch {br.branch} has {len(words)} codewords, M={book.M}")
        if list(words) != sorted(set(words)):
            raise ConstructionError(f"branch {br.branch} codewords not strictly sorted")
        for w in words:
            if len(w) != p.b:
                raise ConstructionError(f"codeword {w} has length {len(w)} != b")
            if not book.is_member(br.branch, w):
                raise ConstructionError(f"codeword {w} is not in the branch-{br.branch} class")


def build_codebook(params: ChannelParams, scheme: LabelingScheme, enforce_density: bool = False,
                   forbidden_positions: Sequence[int] | None = None, max_words: int = 1 << 20,
                   check_classes: bool = True) -> Codebook:
    """Pick the largest syndrome class per branch and keep its first M members.

    With ``check_classes`` the chosen classes must have pairwise disjoint
    t-burst balls, which is what the decoder relies on; a labeling too coarse
    for that raises :class:`ConstructionError`.
    """
    check_codec_params(params)
    scheme.check_fits(params.q, params.N)
    fp = None if params.q == 2 else tuple(
        default_forbidden_positions(params.t) if forbidden_positions is None
        else sorted(set(forbidden_positions)))
    chosen = []
    for j in range(params.q):
        classes = class_partition(params, scheme, j, fp, enforce_density, max_words)
        if not classes:
            cs = class_constraints(params, j, fp)
            raise ConstructionError(f"branch {j}: no word satisfies {cs.describe()}"
                                    + (" with density" if enforce_density else ""))
        key, members = largest_class(classes)
        if check_classes:
            bad = burst_collisions(members, params.t)
            if bad:
                y, group = bad[0]
                raise ConstructionError(
                    f"branch {j}: class {tuple(key)} is not burst-separated by {scheme}; "
                    f"{len(bad)} collisions, e.g. {group[0]} and {group[1]} both yield {y}")
        chosen.append((j, key, members))
    M = min(len(m) for _, _, m in chosen)
    branches = tuple(Branch(j, key, tuple(members[:M]), len(members)) for j, key, members in chosen)
    return Codebook(params, scheme, branches, M, fp, enforce_density)


def search_scheme(params: ChannelParams, p1_values: Iterable[int], p2_values: Iterable[int],
                  beta_values: Iterable[int], forbidden_positions=None,
                  enforce_density: bool = False) -> tuple[LabelingScheme, int] | None:
    """Scan labeling moduli for the scheme giving the largest M.

    Only schemes whose chosen classes are burst-separated count. Ties go to the
    first scheme scanned. Returns ``None`` if nothing qualifies.
    """
    best = None
    for p1, p2, beta in product(list(p1_values), list(p2_values), list(beta_values)):
        scheme = LabelingScheme(p1, p2, beta)
        if scheme.width(params.q) > params.N:
            continue
        try:
            book = build_codebook(params, scheme, enforce_density, forbidden_positions)
        except ConstructionError:
            continue
        if best is None or book.M > best[1]:
            best = (scheme, book.M)
    return best


def encode(message: Sequence[int], book: Codebook) -> Word:
    """Chain one codeword per segment; segment i's branch is the last symbol of segment i-1."""
    p = book.params
    if len(message) != p.gamma:
        raise ParameterError(f"message has {len(message)} indices, expected gamma={p.gamma}")
    out: list[int] = []
    j = initial_branch(p.q)
    for m in message:
        if not 0 <= m < book.M:
            raise ParameterError(f"message index {m} outside [0, {book.M})")
        seg = book.branches[j].codewords[m]
        out.extend(seg)
        j = seg[-1]
    return tuple(out)


@dataclass
class DecoderTrace:
    cursors: list = field(default_factory=list)  # 0-based p_i; segment i starts at p_i + 1
    verdicts: list = field(default_factory=list)  # "intact" | "burst-corrected"
    branches: list = field(default_factory=list)
    segments: list = field(default_factory=list)
    messages: list = field(default_factory=list)


class DecodeResult(NamedTuple):
    messages: list
    word: Word
    trace: DecoderTrace


def decode(y: Sequence[int], book: Codebook) -> DecodeResult:
    """Recover the message from a channel output, one segment at a time.

    With the cursor at p_i, the full window y(p_i+1 : p_i+b) is accepted as
    intact when it lies in the expected syndrome class, and the next segment
    starts b symbols later. Otherwise the segment is rebuilt from the shorter
    window y(p_i+1 : p_i+b-t) and the cursor advances by b-t.
    """
    p = book.params
    y = tuple(y)
    b, t = p.b, p.t
    trace = DecoderTrace()
    cursor = 0
    j = initial_branch(p.q)
    for i in range(1, p.gamma + 1):
        trace.cursors.append(cursor)
        trace.branches.append(j)
        expected = book.branches[j].syndrome
        window = y[cursor:cursor + b]
        if len(window) == b and book.is_member(j, window):
            seg, verdict, step = window, "intact", b
        else:
            short = y[cursor:cursor + b - t]
            if len(short) < b - t:
                raise LengthMismatchError(
                    f"segment {i}: only {len(y) - cursor} symbols left, need >= {b - t}")
            cs = book.constraint(j)
            try:
                seg = decode_one_burst(short, expected, p, book.scheme,
                                       extra_filter=lambda c: satisfies(c, cs),
                                       enforce_density=book.density)
            except AmbiguousError as exc:
                raise AmbiguousError(f"ambiguous segment {i}: {exc}", exc.candidates) from None
            except NoCandidateError:
                raise NotInCodebookError(f"segment {i}: no class member explains the window") from None
            verdict, step = "burst-corrected", b - t
        trace.messages.append(book.rank(j, seg))
        trace.segments.append(seg)
        trace.verdicts.append(verdict)
        cursor += step
        j = seg[-1]
    trace.cursors.append(cursor)
    if cursor != len(y):
        raise LengthMismatchError(f"length mismatch at end: consumed {cursor} of {len(y)} symbols")
    return DecodeResult(list(trace.messages), sum(trace.segments, ()), trace)


def rate(book: Codebook) -> float:
    """Bits per symbol, log2(M) / b."""
    return math.log2(book.M) / book.params.b


def rate_q(book: Codebook) -> float:
    """q-ary symbols per symbol, log_q(M) / b."""
    return math.log(book.M, book.params.q) / book.params.b
