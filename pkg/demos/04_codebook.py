"""
Encoding and decoding with a codebook
=====================================

Each branch (selected by the last symbol of the previous segment) keeps the
largest syndrome class of words meeting the boundary constraints. The decoder
walks a cursor through the received word, segment by segment.
"""
from segburst import ChannelParams, LabelingScheme, apply_channel, build_codebook, decode, encode, rate

params = ChannelParams(q=2, b=8, t=2, gamma=2, delta=16, rho=8)
book = build_codebook(params, LabelingScheme(17, 2, 2))
print("M =", book.M, "rate =", round(rate(book), 4), "bits/symbol")
for br in book.branches:
    print(br.branch, tuple(br.syndrome), br.codewords, book.constraint(br.branch).describe())

x = encode([2, 1], book)
print(x)

y = apply_channel(x, params, (3, None))
res = decode(y, book)
print(res.messages, res.trace.verdicts, res.trace.cursors)

# a q-ary book with the default forbidden positions {1, t, t+1, 2t}
tern = build_codebook(ChannelParams(3, 9, 2, 2, delta=16, rho=9), LabelingScheme(19, 41, 2))
y = apply_channel(encode([3, 0], tern), tern.params, (None, 5))
print(tern.M, decode(y, tern).messages)
