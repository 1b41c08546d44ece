"""
The segmented burst-deletion channel
====================================

A word of length n = b * gamma is cut into gamma segments. Each segment may
lose one burst of exactly t consecutive symbols. The receiver sees only the
concatenated survivors and has no idea where one segment ends.
"""
from itertools import product

from segburst import ChannelParams, apply_channel, apply_channel_random, segmented_ball
from segburst.channel import all_error_patterns, confusable_neighbors, neighbor_count_bound

# two segments of length 2, bursts of one symbol
params = ChannelParams(q=2, b=2, t=1, gamma=2, delta=2, rho=2)
x = (0, 1, 1, 0)

# an error pattern lists the burst start per segment (None = untouched)
print(apply_channel(x, params, (None, 1)))  # (0, 1, 0)
print(apply_channel(x, params, (2, 2)))     # (0, 1)

# everything the channel can emit, x itself included
ball = segmented_ball(x, params)
print(len(ball), sorted(ball, key=len, reverse=True))

# there are (b - t + 2)^gamma patterns; several may collide on the same output
print(len(list(all_error_patterns(params))), "patterns")

# the random channel is a pure function of its seed
y, pattern = apply_channel_random(x, params, burst_probability=0.5, seed=7)
print(y, pattern)

# words whose balls meet that of x cannot share a code with it
universe = list(product((0, 1), repeat=4))
nbrs = confusable_neighbors((0, 0, 0, 0), params, universe)
print(len(nbrs), "confusable neighbours of 0000, bound", neighbor_count_bound(params))
