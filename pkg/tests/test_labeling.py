from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from segburst.errors import AmbiguousError, ConfigurationError, NoCandidateError, ParameterError
from segburst.labeling import (DEFAULT_SCHEME, LabelingScheme, Sampled, burst_preimages, certify,
                               certify_on, default_scheme, encode_digest, label, recover_from_burst)


def test_label_examples():
    d = label((0, 1, 0, 1), LabelingScheme(97, 31, 2))
    assert (d.s1, d.s2, d.length) == (6, 10, 4)
    z = label((0,) * 7, LabelingScheme(97, 31, 2))
    assert (z.s1, z.s2) == (0, 0)


@settings(max_examples=200)
@given(st.lists(st.integers(0, 3), max_size=20), st.sampled_from([(29, 9221, 3), (17, 2, 2), (97, 31, 2)]))
def test_label_matches_oracle(x, moduli):
    d = label(x, LabelingScheme(*moduli))
    assert (d.s1, d.s2) == oracles.digest(x, *moduli)


def test_recover_examples():
    s = DEFAULT_SCHEME
    assert recover_from_burst(label((0, 0, 1, 1), s), (1, 1), 2, s) == (0, 0, 1, 1)
    x = (1, 0, 1, 1, 0)
    assert recover_from_burst(label(x, s), x, 0, s) == x
    assert recover_from_burst(label((0,) * 4, s), (0, 0, 0), 1, s) == (0,) * 4


def test_recover_agrees_with_brute_force():
    s = DEFAULT_SCHEME
    x = (0, 0, 1, 1)
    assert oracles.recover(oracles.digest(x, s.p1, s.p2, s.beta), (1, 1), 2, 2, s.p1, s.p2, s.beta) == [x]
    assert len(burst_preimages((1, 1), 2, 2)) <= 3 * 4


def test_recover_errors():
    s = LabelingScheme(2, 2, 2)
    # mod 2, s1 = x_1 + x_2 and s2 = x_1, so (1,0) and (1,1) collide above (1,)
    assert oracles.digest((1, 0), 2, 2, 2) == oracles.digest((1, 1), 2, 2, 2)
    with pytest.raises(AmbiguousError) as exc:
        recover_from_burst(label((1, 0), s), (1,), 1, s)
    assert exc.value.candidates == [(1, 0), (1, 1)]
    with pytest.raises(NoCandidateError):
        recover_from_burst(label((1, 1, 1), DEFAULT_SCHEME), (0, 0), 1, DEFAULT_SCHEME)
    with pytest.raises(ParameterError):
        recover_from_burst(label((1, 1, 1), DEFAULT_SCHEME), (0,), 1, DEFAULT_SCHEME)


def test_default_scheme_moduli():
    assert (DEFAULT_SCHEME.p1, DEFAULT_SCHEME.p2, DEFAULT_SCHEME.beta) == (29, 9221, 3)
    s = default_scheme(16, 2, 2)
    assert (s.p1, s.p2) == (37, 4099)


def test_certify_examples():
    ok = certify(default_scheme(8, 2, 2), 2, 8, 2)
    assert ok.certified and ok.failure_count == 0 and ok.words_tested == 256
    bad = certify(LabelingScheme(97, 2, 2), 2, 8, 2)
    assert not bad.certified
    assert bad.failures and bad.failures[0]["colliding"]
    empty = certify(DEFAULT_SCHEME, 2, 8, 2, Sampled(0))
    assert empty.certified and empty.words_tested == 0
    assert any("no coverage" in w for w in empty.warnings)


def test_certify_failures_are_real_collisions():
    scheme = LabelingScheme(97, 2, 2)
    rep = certify(scheme, 2, 6, 2)
    assert not rep.certified
    for f in rep.failures:
        x, y = tuple(f["x"]), tuple(f["received"])
        for other in map(tuple, f["colliding"]):
            assert y in oracles.burst_ball(x, 2) and y in oracles.burst_ball(other, 2)
            assert oracles.digest(x, 97, 2, 2) == oracles.digest(other, 97, 2, 2)


@pytest.mark.parametrize("moduli", [(29, 9221, 3), (7, 5, 2), (97, 2, 2)])
def test_exhaustive_and_sampled_routes_agree(moduli):
    # the parent-map route and the direct recovery route must flag the same words
    scheme = LabelingScheme(*moduli)
    n, t = 6, 2
    fast = certify(scheme, 2, n, t)
    flagged = set()
    for x in product((0, 1), repeat=n):
        d = label(x, scheme)
        for y in oracles.burst_ball(x, t):
            try:
                if recover_from_burst(d, y, t, scheme) != x:
                    flagged.add(x)
            except AmbiguousError:
                flagged.add(x)
    fast_flagged = {tuple(f["x"]) for f in fast.failures}
    assert fast.certified == (not flagged)
    if fast.failure_count <= fast.max_exemplars:
        assert fast_flagged <= flagged


def test_sampled_is_deterministic():
    a = certify(LabelingScheme(5, 3, 2), 2, 10, 2, Sampled(50, seed=3)).to_dict()
    b = certify(LabelingScheme(5, 3, 2), 2, 10, 2, Sampled(50, seed=3)).to_dict()
    assert a == b and a["failure_count"] > 0


def test_certify_on():
    words = [(0, 0, 1, 1), (0, 1, 1, 1)]
    assert certify_on(words, 1, lambda w: None)
    assert not certify_on(words, 1, lambda w: w)


def test_encode_digest_and_fit():
    s = LabelingScheme(97, 31, 2)
    d = label((0, 1, 0, 1), s)
    # 7 bits for s1, 5 for s2, big-endian
    assert encode_digest(d, s, 2) == (6 << 5) | 10
    only_s2 = LabelingScheme(97, 31, 2, components=("s2",))
    assert encode_digest(d, only_s2, 2) == 10
    assert only_s2.width(2) == 5
    only_s2.check_fits(2, 5)
    with pytest.raises(ConfigurationError):
        s.check_fits(2, 11)


def test_scheme_round_trip():
    for s in (DEFAULT_SCHEME, LabelingScheme(3, 5, 2, n_symbols=4, components=("s1",)),
              LabelingScheme(2, 2, 2, components=())):
        assert LabelingScheme.from_dict(s.to_dict()) == s
    with pytest.raises(ConfigurationError):
        LabelingScheme(3, 5, 2, components=("s3",))
