from itertools import product

import pytest
from hypothesis import given, strategies as st

from oracles import dense, indicator
from segburst.errors import ParameterError
from segburst.seq_core import (ChannelParams, burst_pattern, count_occurrences, indicator_vector,
                               is_dense, make_word, segment, split_segments, symbols_needed)


@pytest.mark.parametrize("x, p, expected", [
    ((0, 1, 0, 1), (0, 1), (1, 0, 1, 0)),
    ((0, 0, 0, 0), (0, 1), (0, 0, 0, 0)),
    ((0, 0, 1, 1), (0, 0, 1, 1), (1, 0, 0, 0)),
])
def test_indicator_examples(x, p, expected):
    assert indicator_vector(x, p) == expected


def test_indicator_rejects_long_pattern():
    with pytest.raises(ParameterError):
        indicator_vector((0, 1), (0, 0, 1))


@pytest.mark.parametrize("x, delta, expected", [
    ((0, 1, 0, 1), 2, False),
    ((0, 1, 0, 1), 3, True),
    ((1, 1), 5, True),
])
def test_density_examples(x, delta, expected):
    assert is_dense(x, (0, 1), delta) is expected


@pytest.mark.parametrize("x, b, i, expected", [
    ((0, 1, 1, 0), 2, 2, (1, 0)),
    ((0, 1, 1, 0), 2, 1, (0, 1)),
    ((0, 1, 1, 0), 4, 1, (0, 1, 1, 0)),
])
def test_segment_examples(x, b, i, expected):
    params = ChannelParams(2, b, 1, len(x) // b, delta=2, rho=2)
    assert segment(x, params, i) == expected


def test_segment_index_bounds():
    params = ChannelParams(2, 2, 1, 2, delta=2, rho=2)
    with pytest.raises(ParameterError):
        segment((0, 1, 1, 0), params, 3)


def test_burst_pattern():
    assert burst_pattern(1) == (0, 1)
    assert burst_pattern(3) == (0, 0, 0, 1, 1, 1)


def test_make_word_checks_alphabet():
    assert make_word([2, 0, 1], q=3) == (2, 0, 1)
    with pytest.raises(ParameterError):
        make_word([0, 2], q=2)


def test_symbols_needed():
    assert symbols_needed(2, 2) == 1
    assert symbols_needed(31, 2) == 5
    assert symbols_needed(32, 2) == 5
    assert symbols_needed(33, 2) == 6
    assert symbols_needed(41, 3) == 4


class TestChannelParams:
    def test_defaults(self):
        p = ChannelParams(2, 8, 2, 2)
        assert p.n == 16
        # delta = 2t q^{2t} ceil(log2 n), rho = delta + t in the binary case
        assert p.delta == 2 * 2 * 16 * 4
        assert p.rho == p.delta + 2

    def test_qary_rho_default(self):
        p = ChannelParams(3, 9, 2, 1)
        assert p.rho == 3 * p.delta

    @pytest.mark.parametrize("kw", [
        dict(q=1, b=4, t=1, gamma=1),
        dict(q=2, b=4, t=0, gamma=1),
        dict(q=2, b=4, t=5, gamma=1),
        dict(q=2, b=4, t=4, gamma=1),
        dict(q=2, b=4, t=2, gamma=1, delta=3),
        dict(q=2, b=4, t=2, gamma=0),
    ])
    def test_rejects(self, kw):
        with pytest.raises(ParameterError):
            ChannelParams(**kw)

    def test_dict_round_trip(self):
        p = ChannelParams(3, 9, 2, 2, delta=16, rho=9, N=7)
        assert ChannelParams.from_dict(p.to_dict()) == p


words = st.lists(st.integers(0, 1), min_size=0, max_size=14).map(tuple)


@given(words, st.integers(1, 3))
def test_indicator_matches_oracle(x, t):
    p = burst_pattern(t)
    if len(p) > len(x):
        return
    ind = indicator_vector(x, p)
    assert ind == indicator(x, p)
    assert sum(ind) == count_occurrences(x, p)


@given(words, st.integers(1, 2), st.integers(0, 14))
def test_density_matches_oracle(x, t, extra):
    p = burst_pattern(t)
    delta = 2 * t + extra
    assert is_dense(x, p, delta) == dense(x, p, delta)


@given(st.integers(2, 5), st.integers(1, 4), st.data())
def test_split_segments_round_trip(b, gamma, data):
    x = tuple(data.draw(st.lists(st.integers(0, 2), min_size=b * gamma, max_size=b * gamma)))
    params = ChannelParams(3, b, 1, gamma, delta=2, rho=2)
    parts = split_segments(x, params)
    assert len(parts) == gamma and sum(parts, ()) == x


def test_density_exhaustive_small():
    p = burst_pattern(1)
    for n in range(1, 9):
        for x in product((0, 1), repeat=n):
            for delta in range(2, n + 2):
                assert is_dense(x, p, delta) == dense(x, p, delta)
