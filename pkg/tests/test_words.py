import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ucycle.words import (InvalidSymbolError, content, cyclic_windows, format_word,
                          least_rotation, least_rotation_naive, max_cyclic_zero_run,
                          parse_word, reverse, rotate)

W = parse_word

words = st.lists(st.integers(0, 3), min_size=1, max_size=12).map(tuple)


@pytest.mark.parametrize("w, expected", [
    ("110100", "001101"),
    ("000", "000"),
    ("0010111", "0010111"),
])
def test_least_rotation_examples(w, expected):
    assert least_rotation(W(w)) == W(expected)


@given(words)
def test_least_rotation_matches_naive(w):
    assert least_rotation(w) == least_rotation_naive(w)


@given(words, st.integers(0, 20))
def test_least_rotation_rotation_invariant(w, j):
    assert least_rotation(rotate(w, j)) == least_rotation(w)


def test_least_rotation_exhaustive_small():
    for n in range(1, 9):
        for w in itertools.product(range(2), repeat=n):
            assert least_rotation(w) == least_rotation_naive(w)


def test_least_rotation_rejects_empty():
    with pytest.raises(ValueError):
        least_rotation(())


@pytest.mark.parametrize("w, expected", [("001011", "110100"), ("000", "000"),
                                         ("0010111", "1110100")])
def test_reverse(w, expected):
    assert reverse(W(w)) == W(expected)
    assert reverse(reverse(W(w))) == W(w)


def test_content():
    # 131 displayed (1-based) is 020 internally: two 1s and one 3
    assert content(W("020"), 3) == [2, 0, 1]
    assert content(W("012"), 3) == [1, 1, 1]
    assert content(W("000"), 3) == [3, 0, 0]
    assert content((), 3) == [0, 0, 0]
    with pytest.raises(InvalidSymbolError):
        content(W("3"), 3)


@given(words)
def test_content_sums_to_length(w):
    assert sum(content(w, 4)) == len(w)


@pytest.mark.parametrize("w, expected", [("0101", 1), ("1000", 3), ("0010", 3),
                                         ("0000", 4), ("1111", 0)])
def test_max_cyclic_zero_run(w, expected):
    assert max_cyclic_zero_run(W(w)) == expected


def _naive_run(w):
    best = 0
    for i in range(len(w)):
        r = rotate(w, i)
        run = 0
        for s in r:
            if s:
                break
            run += 1
        best = max(best, run)
    return best


@given(st.lists(st.integers(0, 2), min_size=1, max_size=12).map(tuple))
def test_max_cyclic_zero_run_matches_rotations(w):
    assert max_cyclic_zero_run(w) == _naive_run(w)


def test_cyclic_windows():
    assert sorted(cyclic_windows(W("110100"), 3)) == sorted(
        W(x) for x in ["110", "101", "010", "100", "001", "011"])
    assert cyclic_windows(W("0"), 1) == [W("0")]
    assert cyclic_windows(W("0011"), 2) == [W(x) for x in ["00", "01", "11", "10"]]
    # windows longer than the word wrap more than once
    assert cyclic_windows(W("01"), 3) == [W("010"), W("101")]


def test_format_and_parse():
    assert format_word(W("0120")) == "0120"
    assert format_word((0, 1, 2), offset=1) == "123"
    assert format_word((3, 11, 0)) == "3,11,0"
    assert parse_word("3,11,0") == (3, 11, 0)
    assert parse_word("131", offset=1) == (0, 2, 0)
    with pytest.raises(InvalidSymbolError):
        parse_word("0a1")
