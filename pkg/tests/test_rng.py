from collections import Counter

import pytest

from ucycle.rng import EmptyRangeError, RandomStream, RangeOverflowError

from conftest import chi_square_ok


def test_singleton_range_is_zero_without_consuming():
    r = RandomStream(1)
    ref = RandomStream(1)
    assert all(r.uniform_below(1) == 0 for _ in range(100))
    assert r.next_u64() == ref.next_u64()


def test_empty_range():
    with pytest.raises(EmptyRangeError):
        RandomStream(1).uniform_below(0)
    with pytest.raises(RangeOverflowError):
        RandomStream(1).uniform_below(1 << 127)


def test_reproducible():
    a, b = RandomStream(42, 7), RandomStream(42, 7)
    assert [a.next_u64() for _ in range(64)] == [b.next_u64() for _ in range(64)]
    assert RandomStream(42, 7).next_u64() != RandomStream(42, 8).next_u64()


def test_known_xoshiro_output():
    # xoshiro256** reference: state (1, 2, 3, 4) yields 11520, 0, 1509978240, 1215971899390074240
    r = RandomStream(0)
    r.set_state_array([1, 2, 3, 4])
    assert [r.next_u64() for _ in range(4)] == [11520, 0, 1509978240, 1215971899390074240]


def test_uniform_below_six():
    r = RandomStream(11)
    counts = Counter(r.uniform_below(6) for _ in range(60000))
    stat, thr, ok = chi_square_ok(counts, range(6))
    assert thr == pytest.approx(20.515, abs=1e-2)
    assert ok, stat


def test_uniform_below_three_no_modulo_bias():
    r = RandomStream(12)
    counts = Counter(r.uniform_below(3) for _ in range(10 ** 6))
    assert chi_square_ok(counts, range(3))[2]


def test_big_ranges():
    r = RandomStream(13)
    for _ in range(2000):
        x = r.uniform_below(1 << 100)
        assert 0 <= x < 1 << 100
    m = (1 << 126) + 12345
    xs = [r.uniform_below(m) for _ in range(2000)]
    assert all(0 <= x < m for x in xs)
    # top bit region gets hit: the draw spans the full width
    assert max(xs) > m // 2


def test_split_distinct_and_deterministic():
    r = RandomStream(99)
    s0, s1 = r.split(0), r.split(1)
    a = [s0.next_u64() for _ in range(64)]
    b = [s1.next_u64() for _ in range(64)]
    assert a != b
    again = RandomStream(99).split(0)
    assert [again.next_u64() for _ in range(64)] == a


def test_split_interleaved_uniformity():
    r = RandomStream(5)
    subs = [r.split(i) for i in range(16)]
    counts = Counter()
    for _ in range(2000):
        for s in subs:
            counts[s.uniform_below(10)] += 1
    assert chi_square_ok(counts, range(10))[2]


def test_shuffle_is_fisher_yates():
    r = RandomStream(3)
    counts = Counter()
    for _ in range(24000):
        a = [0, 1, 2, 3]
        r.shuffle(a)
        counts[tuple(a)] += 1
    assert len(counts) == 24
    assert chi_square_ok(counts, counts.keys())[2]
