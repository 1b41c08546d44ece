"""
Verifying a codebook
====================

Exhaustive verification checks that segmented balls never meet and that every
codeword survives every error pattern. The Monte Carlo run draws random
messages and bursts from a seeded generator.
"""
import tempfile
from pathlib import Path

from segburst import ChannelParams, LabelingScheme, build_codebook, emit, verify_exhaustive, verify_montecarlo
from segburst.harness import ball_overlaps

book = build_codebook(ChannelParams(2, 8, 2, 2, delta=16, rho=8), LabelingScheme(17, 2, 2))

rep = verify_exhaustive(book)
print(rep.verdict, rep.counts)
print(rep.bounds)

mc = verify_montecarlo(book, trials=500, seed=1, burst_probability=0.8)
print(mc.verdict, mc.counts)

# a pair that is not a code: both balls contain 000
print(ball_overlaps([(0, 0, 0, 0), (0, 0, 0, 1)], ChannelParams(2, 2, 1, 2, delta=2, rho=2))[0])

# reports are byte-stable
with tempfile.TemporaryDirectory() as d:
    a = emit(rep, Path(d) / "a.json").read_bytes()
    b = emit(verify_exhaustive(book), Path(d) / "b.json").read_bytes()
    print("identical:", a == b)
