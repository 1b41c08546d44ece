from collections import Counter
from itertools import product

import pytest
from hypothesis import given, strategies as st

import oracles
from segburst.errors import AmbiguousError, ConfigurationError, DensityError, NoCandidateError
from segburst.labeling import LabelingScheme, default_scheme, encode_digest, label
from segburst.seq_core import ChannelParams, burst_pattern, is_dense
from segburst.syndrome import (SyndromeTuple, a_syndromes, decode_one_burst, f_syndrome,
                               window_layout, window_parities)

S2_ONLY = LabelingScheme(97, 31, 2, components=("s2",))


@pytest.mark.parametrize("n, rho, expected", [
    (20, 5, ((1, 10), (6, 15), (11, 20))),
    (8, 8, ((1, 8),)),
    (9, 4, ((1, 8), (5, 9))),
    (3, 10, ((1, 3),)),
])
def test_layout_examples(n, rho, expected):
    assert window_layout(n, rho).windows == expected


@given(st.integers(1, 60), st.integers(1, 20))
def test_layout_covers_and_overlaps_at_most_twice(n, rho):
    lay = window_layout(n, rho)
    assert lay.covers()
    hits = Counter(i for s, e in lay.windows for i in range(s, e + 1))
    assert max(hits.values()) <= 2
    assert all(1 <= s <= e <= n for s, e in lay.windows)


@pytest.mark.parametrize("x, expected", [
    ((0, 1, 0, 1), (2, 4)),
    ((0, 1, 0, 1, 0, 1, 0, 1), (0, 0)),
    ((1, 1, 0, 0), (0, 0)),
])
def test_a_syndrome_examples(x, expected):
    assert a_syndromes(x, (0, 1)) == expected


@given(st.lists(st.integers(0, 1), min_size=4, max_size=14).map(tuple), st.integers(1, 2), st.data())
def test_burst_shifts_a0_by_destroyed_occurrences(x, t, data):
    p = burst_pattern(t)
    if len(x) <= t:
        return
    a = data.draw(st.integers(0, len(x) - t))
    y = x[:a] + x[a + t:]
    before, after = sum(oracles.indicator(x, p)), sum(oracles.indicator(y, p))
    # occurrences lost minus occurrences created by the splice
    k = before - after
    assert (a_syndromes(x, p)[0] - k) % 4 == a_syndromes(y, p)[0]


def test_window_parity_examples():
    x = (0, 1, 0, 1)
    single = window_layout(4, 4)
    assert window_parities(x, single, S2_ONLY, 2, 5) == (0, 10)
    scheme = LabelingScheme(97, 31, 2)
    eta, zeta = window_parities(x, single, scheme, 2, 12)
    assert eta == 0 and zeta == encode_digest(label(x, scheme), scheme, 2) % 2 ** 12
    with pytest.raises(ConfigurationError):
        window_parities(x, single, scheme, 2, 11)


def test_window_parity_symmetry():
    # two windows with identical content: one odd, one even, equal digests
    x = (0, 1, 1, 0, 1, 1, 0, 1, 1)
    lay = window_layout(9, 3)
    assert lay.windows == ((1, 6), (4, 9))
    eta, zeta = window_parities(x, lay, S2_ONLY, 2, 5)
    assert eta == zeta


def test_f_syndrome_example():
    params = ChannelParams(2, 4, 1, 1, delta=2, rho=4, N=5)
    assert f_syndrome((0, 1, 0, 1), params, S2_ONLY) == SyndromeTuple(2, 4, 0, 10)
    zero = f_syndrome((0, 0, 0, 0), params, S2_ONLY)
    assert (zero.alpha, zero.beta) == (0, 0)
    with pytest.raises(DensityError):
        f_syndrome((1, 1, 1, 1), params, S2_ONLY, enforce_density=True)


def test_syndrome_tuple_round_trip():
    s = SyndromeTuple(1, 2, 3, 4)
    assert SyndromeTuple.from_dict(s.to_dict()) == s


# small dense test case: n = 10, t = 2, windows [1,8], [5,10]
P10 = ChannelParams(2, 10, 2, 1, delta=8, rho=4, N=18)
S10 = default_scheme(10, 2, 2)


def dense_words(params):
    return [x for x in product(range(params.q), repeat=params.b)
            if is_dense(x, params.pattern, params.delta)]


def test_decode_one_burst_examples():
    x = next(w for w in dense_words(P10))
    y = x[P10.t:]
    assert decode_one_burst(y, f_syndrome(x, P10, S10), P10, S10, enforce_density=True) == x
    assert decode_one_burst(x, f_syndrome(x, P10, S10), P10, S10, t=0) == x
    with pytest.raises(NoCandidateError):
        decode_one_burst(y, f_syndrome(x, P10, S10), P10, S10, extra_filter=lambda c: False)


def test_decode_one_burst_ambiguity_is_reported():
    params = ChannelParams(2, 6, 2, 1, delta=4, rho=6, N=0)
    empty = LabelingScheme(2, 2, 2, components=())
    # no pattern occurrence and no digest: every patternless parent matches
    x = (0,) * 6
    with pytest.raises(AmbiguousError) as exc:
        decode_one_burst((0,) * 4, f_syndrome(x, params, empty), params, empty)
    assert x in exc.value.candidates and (0, 0, 0, 0, 0, 1) in exc.value.candidates


def test_dense_words_decode_exhaustively():
    params = P10
    failures = 0
    for x in dense_words(params):
        expected = f_syndrome(x, params, S10)
        for a in range(params.b - params.t + 1):
            y = x[:a] + x[a + params.t:]
            got = decode_one_burst(y, expected, params, S10, enforce_density=True)
            # soundness: syndrome, ball membership, density
            failures += got != x
            assert f_syndrome(got, params, S10) == expected
            assert y in oracles.burst_ball(got, params.t)
            assert is_dense(got, params.pattern, params.delta)
    assert failures == 0
