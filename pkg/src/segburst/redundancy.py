"""Redundancy bookkeeping: achieved figures and guaranteed class sizes, next to
the comparison formulas for other segmented codes.

All logarithms are base 2 unless noted. The asymptotic terms o(.) and the
constant r_{q,t} are carried as text in ``symbolic`` fields and never
evaluated.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .seq_core import ChannelParams

log2 = math.log2


def guaranteed_class_size(q: int, b: int, N: int) -> Fraction:
    """Pigeonhole lower bound on the largest syndrome class of one branch.

    Binary: 2^{b-3} / (4 * 2b * 2^{2N}); q-ary: q^{b-5} (q-1)^4 / (4 * 2b * q^{2N}).
    """
    classes = 4 * 2 * b * q ** (2 * N)
    if q == 2:
        return Fraction(2 ** (b - 3), classes)
    return Fraction(q ** (b - 5) * (q - 1) ** 4, classes)


def constrained_count(q: int, b: int) -> int:
    """Words per branch that meet the structural constraints (default position set)."""
    return 2 ** (b - 3) if q == 2 else q ** (b - 5) * (q - 1) ** 4


def segment_penalty_bits(q: int) -> float:
    """Extra redundancy per segment over the underlying one-burst code."""
    return 3.0 if q == 2 else 5 * log2(q) - 4 * log2(q - 1)


def solve_b_prime(b: int) -> int | None:
    """b' with b = b' + ceil(log b') + 7, or None."""
    for bp in range(1, b + 1):
        if bp + math.ceil(log2(bp)) + 7 == b:
            return bp
    return None


def table_one(b: int, q_nonbinary: int = 4, t1: int = 1, t2: int = 1,
              mds_field_size: int | None = None) -> list[dict]:
    """Per-segment redundancy (bits) of the compared segmented codes at segment length b."""
    lb = log2(b)
    u = b / (t1 + t2 + 2)
    fs = mds_field_size or 2 ** math.floor(1 + lb)
    lam = log2(fs) / math.floor(1 + lb)
    bp = solve_b_prime(b)
    qn = q_nonbinary
    rows = [
        ("2", "1-del", "Abroshan et al. 2018", "log(b+1)+2", log2(b + 1) + 2),
        ("2", "1-ins", "Abroshan et al. 2018", "log(b+1)+2.5", log2(b + 1) + 2.5),
        ("2", "1-indel", "Abroshan et al. 2018", "log(b+1)+7", log2(b + 1) + 7),
        ("2", "1-del", "Jiao et al. 2022", "log(b+1)+2-log 1.5", log2(b + 1) + 2 - log2(1.5)),
        ("2", "1-ins", "Jiao et al. 2022", "log(b+1)+2.5", log2(b + 1) + 2.5),
        ("2", "1-indel", "Li et al. 2024", "log(b-6)+7", log2(b - 6) + 7 if b > 6 else None),
        ("2", "1-edit", "Li et al. 2024", "log(b-9)+10", log2(b - 9) + 10 if b > 9 else None),
        ("4", "1-indel", "Cai et al. 2021", "log b+6 log 3+6", lb + 6 * log2(3) + 6),
        ("4", "1-edit", "Yan et al. 2023", "2 log b'+14, b=b'+ceil(log b')+7",
         2 * log2(bp) + 14 if bp else None),
        (">2", "1-del", "Abroshan et al. 2018", "log b+6-2 log 3",
         lb + 6 - 2 * log2(3)),
        (">2", "1-ins", "Abroshan et al. 2018", "log b+8", lb + 8),
        (">2", "1-indel", "Abroshan et al. 2018", "log b+16", lb + 16),
        (">2", "1-burst <=t1-del/<=t2-ins", "Yi et al. 2024 (BM-MDS)", "b log b/u+log b",
         b * lb / u + lb),
        (">2", "1-burst <=t1-del/<=t2-ins", "Yi et al. 2024 (BM-DB-MDS)",
         "((lambda+2u) b log b)/(2u(lambda+1))+log b",
         (lam + 2 * u) * b * lb / (2 * u * (lam + 1)) + lb),
        ("2", "1-burst t-del", "this construction (binary)", "log b+o(log b)+3", lb + 3),
        (">2", "1-burst t-del", "this construction (q-ary)",
         "log b+o(log b)+5 log q-4 log(q-1)", lb + segment_penalty_bits(qn)),
    ]
    out = []
    for alphabet, err, ref, formula, value in rows:
        extra = {}
        if ref.startswith("Yi"):
            extra = {"t1": t1, "t2": t2, "u": u}
        if "lambda" in formula:
            extra["lambda"] = lam
        if "b'" in formula:
            extra["b_prime"] = bp
        if "log q" in formula:
            extra["q"] = qn
        out.append({"b": b, "alphabet": alphabet, "error_type": err, "reference": ref,
                    "formula": formula, "value_bits": value,
                    "symbolic": "o(log b)" if "o(" in formula else "", "parameters": extra})
    return out


@dataclass
class RedundancyReport:
    params: ChannelParams
    rows: list = field(default_factory=list)

    def add(self, quantity, expression, value, unit="bits", symbolic="", source=""):
        self.rows.append({"quantity": quantity, "expression": expression, "value": value,
                          "unit": unit, "symbolic": symbolic, "source": source})

    def get(self, quantity):
        for r in self.rows:
            if r["quantity"] == quantity:
                return r
        raise KeyError(quantity)

    def to_dict(self) -> dict:
        return {"params": self.params.to_dict(), "rows": self.rows}


def redundancy_report(params: ChannelParams, book=None, q_nonbinary: int | None = None,
                      **table_kwargs) -> RedundancyReport:
    """Achieved and guaranteed redundancy of ``params``, with the asymptotic terms.

    ``book`` is optional; without it only formula rows are produced.
    """
    q, b, t, gamma, N = params.q, params.b, params.t, params.gamma, params.N
    rep = RedundancyReport(params)
    lb = log2(b)
    if book is not None:
        M = book.M
        rep.add("achieved_redundancy_per_segment", "b log q - log M", b * log2(q) - log2(M),
                source="built codebook")
        rep.add("rate_bits", "(1/b) log2 M", log2(M) / b, unit="bits/symbol", source="built codebook")
        rep.add("rate_q", "(1/b) log_q M", math.log(M, q) / b, unit="q-ary symbols/symbol",
                source="built codebook")
        rep.add("M", "min over branches of the largest class", M, unit="codewords",
                source="built codebook")
    bound = guaranteed_class_size(q, b, N)
    expr = ("2^{b-3}/(4*2b*2^{2N})" if q == 2 else "q^{b-5}(q-1)^4/(4*2b*q^{2N})")
    rep.add("guaranteed_M_lower_bound", expr, float(bound), unit="codewords",
            source="pigeonhole over 8b q^{2N} classes")
    penalty = segment_penalty_bits(q)
    pen_expr = "3" if q == 2 else "5 log q - 4 log(q-1)"
    lead = lb + 8 * log2(lb) + penalty if b > 1 else float("nan")
    rep.add("theorem_redundancy_per_segment", f"log b + 8 log log b + {pen_expr}", lead,
            symbolic="+ o(log log b) + r_{q,t}", source="binary theorem" if q == 2 else "q-ary theorem")
    rep.add("segment_penalty_over_base_code", pen_expr, penalty)
    dense_extra = 3 if q == 2 else 1
    rep.add("average_redundancy_with_density", f"theorem + {dense_extra}/gamma",
            lead + dense_extra / gamma, symbolic="+ o(log log b) + r_{q,t}",
            source="density encoding amortized over gamma segments")
    rep.add("neighbor_count_bound", "b^{2 gamma} q^{gamma t}", b ** (2 * gamma) * q ** (gamma * t),
            unit="words", source="segmented confusable neighbourhood")
    rep.add("syndrome_compression_total", "4 gamma log_q b", 4 * gamma * math.log(b, q),
            unit="q-ary symbols", symbolic="+ o(log_q b)")
    rep.add("this_construction_total", "gamma log_q b", gamma * math.log(b, q),
            unit="q-ary symbols", symbolic="+ o(log_q b)")
    qn = q_nonbinary or (q if q > 2 else 4)
    for row in table_one(b, q_nonbinary=qn, **table_kwargs):
        rep.add(f"table1:{row['alphabet']}:{row['error_type']}:{row['reference']}",
                row["formula"], row["value_bits"], symbolic=row["symbolic"], source="comparison table")
    return rep
