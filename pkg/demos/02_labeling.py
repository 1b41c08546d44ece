"""
A digest that undoes one burst
==============================

label(x) packs two residues: a position-weighted sum mod P1 and a polynomial
evaluation mod P2. Together with any burst-damaged copy of x they pin x down.
"""
from segburst import DEFAULT_SCHEME, LabelingScheme, certify, label, recover_from_burst
from segburst.labeling import Sampled

print(label((0, 1, 0, 1), LabelingScheme(97, 31, 2)))  # s1 = 6, s2 = 10

s = DEFAULT_SCHEME
print(s)

x = (1, 0, 0, 1, 1, 0, 1, 0, 1, 1)
y = x[:4] + x[7:]  # lose three symbols starting at position 5
print(recover_from_burst(label(x, s), y, 3, s) == x)

# certification walks every word and every burst; no digest collision is allowed
rep = certify(s, q=2, n=10, t=3)
print(rep.certified, rep.words_tested, rep.pairs_tested)

# a too-small second modulus fails with concrete witnesses
bad = certify(LabelingScheme(97, 2, 2), q=2, n=8, t=2)
print(bad.certified, bad.failure_count, bad.failures[0])

# sampled certification is deterministic and warns when it covers nothing
print(certify(s, 2, 30, 2, Sampled(200, seed=1)).certified)
print(certify(s, 2, 30, 2, Sampled(0)).warnings)
