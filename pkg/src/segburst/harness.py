"""Codebook verification (exhaustive or Monte Carlo), experiment configs and report output."""
from __future__ import annotations

import csv
import io
import json
import logging
import math
import time
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from .channel import (all_error_patterns, apply_channel, pattern_to_json, random_pattern,
                      segmented_ball)
from .codec import Codebook, build_codebook, decode, encode, initial_branch, rate, rate_q
from .errors import DecodeError, ParameterError
from .labeling import LabelingScheme, Sampled, certify
from .redundancy import guaranteed_class_size
from .seq_core import ChannelParams, Word
from .syndrome import f_syndrome

log = logging.getLogger(__name__)

MODES = ("verify-exhaustive", "verify-montecarlo", "build", "report", "certify-labeling")


@dataclass
class ExperimentConfig:
    params: ChannelParams
    scheme: LabelingScheme
    mode: str = "build"
    forbidden_positions: tuple | None = None
    density: bool = False
    trials: int = 1000
    seed: int = 0
    burst_probability: float = 0.5
    max_words: int = 1 << 20
    max_codewords: int = 4096
    max_decodes: int = 2_000_000
    certify_n: int | None = None
    certify_t: int | None = None
    certify_samples: int | None = None
    table_b: tuple = (8, 16, 32)

    def __post_init__(self):
        if self.mode not in MODES:
            raise ParameterError(f"unknown mode {self.mode!r}; expected one of {MODES}")
        if self.trials < 1 and self.mode == "verify-montecarlo":
            raise ParameterError("trials must be >= 1")
        for name in ("max_words", "max_codewords", "max_decodes"):
            if getattr(self, name) < 1:
                raise ParameterError(f"{name} must be positive")

    @classmethod
    def from_dict(cls, d: dict) -> "ExperimentConfig":
        d = dict(d)
        params = ChannelParams.from_dict(d)
        scheme = LabelingScheme.from_dict(d["scheme"])
        kw = {}
        for k in ("mode", "density", "trials", "seed", "burst_probability", "max_words",
                  "max_codewords", "max_decodes", "certify_n", "certify_t", "certify_samples"):
            if d.get(k) is not None:
                kw[k] = d[k]
        if d.get("forbidden_positions") is not None:
            kw["forbidden_positions"] = tuple(d["forbidden_positions"])
        if d.get("table_b") is not None:
            kw["table_b"] = tuple(d["table_b"])
        return cls(params, scheme, **kw)

    @classmethod
    def load(cls, path) -> "ExperimentConfig":
        return cls.from_dict(json.loads(Path(path).read_text()))

    def to_dict(self) -> dict:
        d = self.params.to_dict()
        d.update(scheme=self.scheme.to_dict(), mode=self.mode,
                 forbidden_positions=None if self.forbidden_positions is None
                 else list(self.forbidden_positions),
                 density=self.density, trials=self.trials, seed=self.seed,
                 burst_probability=self.burst_probability, max_words=self.max_words,
                 max_codewords=self.max_codewords, max_decodes=self.max_decodes,
                 certify_n=self.certify_n, certify_t=self.certify_t,
                 certify_samples=self.certify_samples, table_b=list(self.table_b))
        return d

    def build(self) -> Codebook:
        return build_codebook(self.params, self.scheme, self.density, self.forbidden_positions,
                              self.max_words)


@dataclass
class VerificationReport:
    mode: str
    config: dict
    counts: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    failure_count: int = 0
    bounds: dict = field(default_factory=dict)
    rate: dict = field(default_factory=dict)
    notes: dict = field(default_factory=dict)
    incomplete: bool = False
    max_exemplars: int = 25

    @property
    def verdict(self) -> str:
        if self.failure_count:
            return "fail"
        return "incomplete" if self.incomplete else "pass"

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def fail(self, kind: str, **detail):
        self.failure_count += 1
        if len(self.failures) < self.max_exemplars:
            self.failures.append({"kind": kind, **detail})

    def to_dict(self) -> dict:
        return {"mode": self.mode, "verdict": self.verdict, "config": self.config,
                "counts": self.counts, "failure_count": self.failure_count,
                "failures": self.failures, "bounds": self.bounds, "rate": self.rate,
                "notes": self.notes, "incomplete": self.incomplete}


def _book_echo(book: Codebook) -> dict:
    h = book.to_dict()["header"]
    h["M"] = book.M
    return h


def _bound_summary(book: Codebook) -> dict:
    p = book.params
    bound = guaranteed_class_size(p.q, p.b, p.N)
    sizes = [br.class_size for br in book.branches]
    return {
        "class_sizes": sizes,
        "guaranteed_class_size": float(bound),
        "class_size_bound_applies": bound >= 1,
        "class_size_bound_holds": all(s >= bound for s in sizes) if bound >= 1 else None,
        "neighbor_count_bound": p.b ** (2 * p.gamma) * p.q ** (p.gamma * p.t),
    }


def _rates(book: Codebook) -> dict:
    return {"bits_per_symbol": rate(book), "q_symbols_per_symbol": rate_q(book), "M": book.M}


def true_cursors(params: ChannelParams, pattern) -> list[int]:
    """0-based start of every received segment, plus the final length."""
    out, c = [0], 0
    for a in pattern:
        c += params.b - (params.t if a is not None else 0)
        out.append(c)
    return out


def ball_overlaps(words: Sequence[Word], params: ChannelParams) -> tuple[list, int]:
    """Index pairs whose segmented balls meet, with one shared output each.

    Returns ``([(i, k, y), ...], number of distinct ball elements)``.

    >>> p = ChannelParams(2, 2, 1, 2, delta=2, rho=2)
    >>> ball_overlaps([(0, 0, 0, 0), (0, 0, 0, 1)], p)[0][0]
    (0, 1, (0, 0, 0))
    """
    owner: dict = {}
    out = []
    for idx, x in enumerate(words):
        for y in sorted(segmented_ball(x, params), key=lambda w: (-len(w), w)):
            prev = owner.setdefault(y, idx)
            if prev != idx:
                out.append((prev, idx, y))
    return out, len(owner)


def verify_exhaustive(book: Codebook, max_codewords: int = 4096,
                      max_decodes: int = 2_000_000) -> VerificationReport:
    """Certify disjoint segmented balls and decode every codeword under every pattern.

    The checks are (a) pairwise ball disjointness, (b) exact message recovery,
    and (c) the boundary property: at each true segment start, a full window
    the decoder would accept as intact is the transmitted segment.
    """
    p = book.params
    rep = VerificationReport("verify-exhaustive", _book_echo(book))
    messages = list(product(range(book.M), repeat=p.gamma))
    if len(messages) > max_codewords:
        rep.incomplete = True
        messages = messages[:max_codewords]
    words = [encode(m, book) for m in messages]

    shared, ball_elements = ball_overlaps(words, p)
    for i, k, y in shared:
        rep.fail("ball-overlap", x=list(words[i]), x2=list(words[k]), shared=list(y))
    n_words = len(words)
    rep.counts.update(codewords=n_words, pairs_checked=n_words * (n_words - 1) // 2,
                      ball_elements=ball_elements)

    patterns = list(all_error_patterns(p))
    decodes = window_checks = literal_mismatch = 0
    for m, x in zip(messages, words):
        segs = [x[k * p.b:(k + 1) * p.b] for k in range(p.gamma)]
        for pat in patterns:
            if decodes >= max_decodes:
                rep.incomplete = True
                break
            y = apply_channel(x, p, pat)
            cursors = true_cursors(p, pat)
            j = initial_branch(p.q)
            for i, seg in enumerate(segs):
                w = y[cursors[i]:cursors[i] + p.b]
                if len(w) == p.b:
                    expected = book.branches[j].syndrome
                    if f_syndrome(w, p, book.scheme) == expected:
                        window_checks += 1
                        if w != seg:
                            literal_mismatch += 1
                    if book.is_member(j, w) and w != seg:
                        rep.fail("window", message=list(m), pattern=pattern_to_json(pat),
                                 segment=i + 1, window=list(w))
                j = seg[-1]
            decodes += 1
            try:
                got = decode(y, book)
            except DecodeError as exc:
                rep.fail("decode", message=list(m), pattern=pattern_to_json(pat),
                         error=f"{type(exc).__name__}: {exc}")
                continue
            if tuple(got.messages) != m:
                rep.fail("decode", message=list(m), pattern=pattern_to_json(pat),
                         decoded=list(got.messages))
            elif got.trace.cursors != cursors:
                rep.fail("boundary", message=list(m), pattern=pattern_to_json(pat),
                         cursors=got.trace.cursors, expected=cursors)
    rep.counts.update(patterns_per_codeword=len(patterns), decodes=decodes,
                      full_windows_with_matching_f=window_checks)
    rep.notes["f_only_window_mismatches"] = literal_mismatch
    rep.bounds = _bound_summary(book)
    rep.rate = _rates(book)
    return rep


def verify_montecarlo(book: Codebook, trials: int, seed: int,
                      burst_probability: float = 0.5) -> VerificationReport:
    """Random messages through the random channel; deterministic for a given seed."""
    if trials < 1:
        raise ParameterError("trials must be >= 1")
    p = book.params
    rep = VerificationReport("verify-montecarlo", _book_echo(book))
    rep.config.update(trials=trials, seed=seed, burst_probability=burst_probability)
    rng = np.random.default_rng(seed)
    ok = bursts = 0
    for _ in range(trials):
        m = tuple(int(v) for v in rng.integers(0, book.M, size=p.gamma))
        pat = random_pattern(p, burst_probability, rng)
        bursts += sum(a is not None for a in pat)
        y = apply_channel(encode(m, book), p, pat)
        try:
            got = decode(y, book)
        except DecodeError as exc:
            rep.fail("decode", message=list(m), pattern=pattern_to_json(pat),
                     error=f"{type(exc).__name__}: {exc}")
            continue
        if tuple(got.messages) == m:
            ok += 1
        else:
            rep.fail("decode", message=list(m), pattern=pattern_to_json(pat),
                     decoded=list(got.messages))
    rep.counts.update(trials=trials, successes=ok, bursts_applied=bursts)
    rep.bounds = _bound_summary(book)
    rep.rate = _rates(book)
    return rep


def certify_from_config(cfg: ExperimentConfig):
    n = cfg.certify_n or cfg.params.b
    t = cfg.params.t if cfg.certify_t is None else cfg.certify_t
    domain = "exhaustive" if cfg.certify_samples is None else Sampled(cfg.certify_samples, cfg.seed)
    return certify(cfg.scheme, cfg.params.q, n, t, domain, cfg.max_words)


# output

def _normalize(obj: Any) -> Any:
    if isinstance(obj, float):
        if math.isnan(obj) or math.isinf(obj):
            return None
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {str(k): _normalize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_normalize(v) for v in obj]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, np.floating):
        return _normalize(float(obj))
    return obj


def _payload(obj) -> Any:
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    return obj


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True)
    return str(v)


def render(obj, fmt: str = "json") -> str:
    """Bit-stable text for a report, codebook, or table (list of dict rows)."""
    if fmt == "json":
        return json.dumps(_normalize(_payload(obj)), sort_keys=True, indent=1) + "\n"
    if fmt == "csv":
        rows = obj if isinstance(obj, list) else getattr(obj, "rows", None)
        if rows is None:
            raise ParameterError("csv output needs a table (list of rows)")
        rows = [_normalize(r) for r in rows]
        cols: list[str] = []
        for r in rows:
            cols.extend(k for k in r if k not in cols)
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(cols)
        for r in rows:
            writer.writerow([_cell(r.get(c)) for c in cols])
        return buf.getvalue()
    raise ParameterError(f"unknown output format {fmt!r}")


def emit(obj, path, fmt: str | None = None) -> Path:
    """Write ``obj`` to ``path``; the format defaults to the file suffix."""
    path = Path(path)
    fmt = fmt or (path.suffix.lstrip(".").lower() or "json")
    text = render(obj, fmt)
    path.write_text(text)
    return path


def timed(fn, *args, **kwargs):
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    log.info("%s finished in %.2fs", getattr(fn, "__name__", fn), time.perf_counter() - t0)
    return out
