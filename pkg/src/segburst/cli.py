"""Command line entry point: build, verify, simulate, report, certify.

Exit status is 0 iff the run's verdict is a pass.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

import numpy as np

from .channel import apply_channel_random, pattern_to_json
from .codec import Codebook, decode, encode, rate
from .errors import DecodeError, SegBurstError
from .harness import (ExperimentConfig, certify_from_config, emit, render, timed,
                      verify_exhaustive, verify_montecarlo)
from .redundancy import redundancy_report, table_one

OVERRIDES = (("q", int), ("b", int), ("t", int), ("gamma", int), ("delta", int), ("rho", int),
             ("N", int), ("seed", int), ("trials", int), ("burst_probability", float),
             ("max_words", int), ("max_codewords", int), ("max_decodes", int))


def _add_overrides(p: argparse.ArgumentParser):
    for name, typ in OVERRIDES:
        p.add_argument(f"--{name.replace('_', '-')}", dest=f"ov_{name}", type=typ, default=None)


def _config(args) -> ExperimentConfig:
    raw = json.loads(Path(args.config).read_text())
    for name, _ in OVERRIDES:
        v = getattr(args, f"ov_{name}", None)
        if v is not None:
            raw[name] = v
    return ExperimentConfig.from_dict(raw)


def _write(obj, out, fmt=None):
    if out:
        emit(obj, out, fmt)
    else:
        sys.stdout.write(render(obj, fmt or "json"))


def cmd_build(args) -> int:
    cfg = _config(args)
    book = timed(cfg.build)
    Path(args.out).write_text(book.dumps())
    print(f"M={book.M} rate={rate(book):.4f} bits/symbol -> {args.out}", file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    book = Codebook.loads(Path(args.book).read_text())
    if args.mode == "exhaustive":
        rep = timed(verify_exhaustive, book, args.max_codewords, args.max_decodes)
    else:
        rep = timed(verify_montecarlo, book, args.trials, args.seed, args.burst_probability)
    _write(rep, args.out)
    print(f"verdict: {rep.verdict} ({rep.failure_count} failures)", file=sys.stderr)
    return 0 if rep.passed else 1


def cmd_simulate(args) -> int:
    book = Codebook.loads(Path(args.book).read_text())
    rng = np.random.default_rng(args.seed)
    p = book.params
    if args.message:
        message = [int(v) for v in args.message.split(",")]
    else:
        message = [int(v) for v in rng.integers(0, book.M, size=p.gamma)]
    x = encode(message, book)
    y, pattern = apply_channel_random(x, p, args.burst_probability, rng)
    out = {"seed": args.seed, "message": message, "codeword": list(x),
           "pattern": pattern_to_json(pattern), "received": list(y)}
    try:
        got = decode(y, book)
        out.update(decoded=got.messages, verdicts=got.trace.verdicts, ok=got.messages == message)
    except DecodeError as exc:
        out.update(decoded=None, error=str(exc), ok=False)
    _write(out, args.out)
    return 0 if out["ok"] else 1


def cmd_report(args) -> int:
    cfg = _config(args)
    if args.table:
        rows = [row for b in cfg.table_b for row in table_one(b)]
        _write(rows, args.out)
        return 0
    book = Codebook.loads(Path(args.book).read_text()) if args.book else None
    rep = redundancy_report(cfg.params, book)
    _write(rep, args.out)
    return 0


def cmd_certify(args) -> int:
    cfg = _config(args)
    rep = timed(certify_from_config, cfg)
    _write(rep, args.out)
    print(f"certified: {rep.certified} ({rep.failure_count} failures)", file=sys.stderr)
    return 0 if rep.certified else 1


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="segburst", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a codebook from a config")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    _add_overrides(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="exhaustive or Monte Carlo verification of a codebook")
    p.add_argument("--book", required=True)
    p.add_argument("--mode", choices=("exhaustive", "mc"), default="exhaustive")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--burst-probability", type=float, default=0.5)
    p.add_argument("--max-codewords", type=int, default=4096)
    p.add_argument("--max-decodes", type=int, default=2_000_000)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("simulate", help="one encode -> random channel -> decode round trip")
    p.add_argument("--book", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--burst-probability", type=float, default=0.5)
    p.add_argument("--message", help="comma-separated message indices")
    p.add_argument("--out")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("report", help="redundancy report or comparison table")
    p.add_argument("--config", required=True)
    p.add_argument("--book")
    p.add_argument("--table", action="store_true", help="emit the comparison table for table_b")
    p.add_argument("--out")
    _add_overrides(p)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("certify", help="certify the labeling scheme of a config")
    p.add_argument("--config", required=True)
    p.add_argument("--out")
    _add_overrides(p)
    p.set_defaults(func=cmd_certify)
    return ap


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (SegBurstError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
