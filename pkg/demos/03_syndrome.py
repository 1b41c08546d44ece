"""
The one-burst syndrome
======================

f(x) = (a0, a1, eta, zeta): pattern count mod 4, sum of pattern positions
mod 2n, and the digests of overlapping windows summed by window parity.
For words dense in the pattern 0^t 1^t it identifies x from any burst copy.
"""
from itertools import product

import numpy as np

from segburst import ChannelParams, decode_one_burst, f_syndrome, is_dense, window_layout
from segburst.labeling import default_scheme

print(window_layout(20, 5).windows)  # ((1, 10), (6, 15), (11, 20))
print(window_layout(9, 4).windows)   # ((1, 8), (5, 9))

params = ChannelParams(q=2, b=16, t=2, gamma=1, delta=12, rho=5, N=19)
scheme = default_scheme(16, 2, 2)

dense = [x for x in product((0, 1), repeat=16) if is_dense(x, params.pattern, params.delta)]
print(len(dense), "dense words of length 16")

rng = np.random.default_rng(3)
picks = rng.choice(len(dense), size=300, replace=False)
ok = 0
for i in picks:
    x = dense[i]
    a = int(rng.integers(0, 15))
    y = x[:a] + x[a + 2:]
    ok += decode_one_burst(y, f_syndrome(x, params, scheme), params, scheme,
                           enforce_density=True) == x
print(ok, "of", len(picks), "bursts undone")
