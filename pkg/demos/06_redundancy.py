"""
Redundancy accounting
=====================

Achieved redundancy of a built book next to the guaranteed class size, the
asymptotic per-segment expression, and the comparison table.
"""
from segburst import ChannelParams, LabelingScheme, build_codebook, redundancy_report, table_one
from segburst.harness import render

params = ChannelParams(2, 8, 2, 2, delta=16, rho=8)
book = build_codebook(params, LabelingScheme(17, 2, 2))
rep = redundancy_report(params, book)
for row in rep.rows[:10]:
    print(f"{row['quantity']:40s} {row['expression']:45s} {row['value']!s:>22} {row['symbolic']}")

print(render([r for b in (8, 16, 32) for r in table_one(b)][:6], "csv"))
