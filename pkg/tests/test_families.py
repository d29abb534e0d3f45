import itertools
import math

import pytest

from ucycle.counting import TooLargeError
from ucycle.families import (AllStrings, FamilyError, Forbidden, MultisetPerm, Orientable,
                             ShorthandPerm, ShorthandSubset, WeakOrder, WeightRange,
                             make_family)
from ucycle.words import least_rotation_naive, parse_word

from matrix import check_family, small_families

W = parse_word


def test_examples_contains():
    assert WeakOrder(3).contains(W("131", offset=1))
    assert Orientable(2, 7).contains(W("0010110"))
    assert not Orientable(2, 6).contains(W("001001"))


def test_weak_listing():
    listed = "111 113 131 311 122 212 221 123 132 213 231 312 321".split()
    f = WeakOrder(3)
    members = {w for w in itertools.product(range(3), repeat=3) if f.contains(w)}
    assert members == {W(x, offset=1) for x in listed}


def test_orientable_listing():
    listed = """0001011 0010110 0101100 1011000 0110001 1100010 1000101
                0010111 0101110 1011100 0111001 1110010 1100101 1001011""".split()
    f = Orientable(2, 7)
    assert set(f.members()) == {W(x) for x in listed}


def test_membership_errors():
    with pytest.raises(ValueError):
        AllStrings(2, 3).contains((0, 1))
    with pytest.raises(ValueError):
        AllStrings(2, 3).contains((0, 1, 2))


def test_out_labels_weight_range():
    f = WeightRange(2, 6, 1, 2)
    assert f.out_labels(W("00010")) == [0, 1]
    assert f.out_labels(W("00000")) == [1]
    assert f.in_symbols(W("00010")) == [0, 1]
    for k in (2, 3):
        g = AllStrings(k, 4)
        assert g.out_labels((0, 1, 0)) == list(range(k)) == g.in_symbols((1, 1, 1))


def test_in_symbols_subset():
    assert ShorthandSubset(5, 2).in_symbols(W("000")) == [1]
    f = ShorthandSubset(5, 2)
    assert f.in_symbols(W("001")) == [0, 1] and f.out_labels(W("001")) == [0, 1]
    assert f.out_labels(W("000")) == [1]


def test_cardinalities():
    assert ShorthandPerm(4).cardinality == 24
    assert WeakOrder(3).cardinality == 13
    assert Forbidden(2, 4, 2).cardinality == 7
    assert ShorthandSubset(8, 4).cardinality == 70
    assert MultisetPerm((3, 3, 3)).cardinality == 1680
    assert WeightRange(2, 6, 1, 2).cardinality == 21


def test_vertex_counts():
    assert ShorthandPerm(4).vertex_count() == 12
    assert AllStrings(2, 8).vertex_count() == 128
    assert WeakOrder(3).vertex_count() == 8
    assert WeakOrder(3).vertices() == {W(x, offset=1) for x in
                                       ["11", "13", "31", "12", "21", "22", "23", "32"]}
    for n in range(3, 9):
        assert ShorthandPerm(n).vertex_count() == math.factorial(n) // 2


def test_perm_and_subset_degrees():
    f = ShorthandPerm(5)
    for v in itertools.permutations(range(5), 3):
        assert len(f.out_labels(v)) == len(f.in_symbols(v)) == 2
    g = ShorthandSubset(7, 3)
    for v in g.vertices():
        assert len(g.out_labels(v)) in (1, 2)


def test_construction_errors():
    with pytest.raises(FamilyError):
        Forbidden(2, 5, 1)
    with pytest.raises(FamilyError):
        Orientable(2, 5)  # OS_2(5) is empty
    with pytest.raises(FamilyError):
        WeightRange(2, 4, 6, 9)
    with pytest.raises(FamilyError):
        ShorthandSubset(5, 1)
    with pytest.raises(FamilyError):
        make_family("forbidden", n=5)
    with pytest.raises(FamilyError):
        make_family("nope", n=5)


def test_make_family():
    assert make_family("debruijn", n=4) == AllStrings(2, 4)
    assert make_family("multiset", content=(1, 2)) == MultisetPerm((1, 2))
    assert make_family("weight-range", n=5, lo=1, hi=3) == WeightRange(2, 5, 1, 3)


def test_enumeration_guard():
    with pytest.raises(TooLargeError):
        list(Orientable(2, 25).members()) if False else AllStrings(2, 30).member_table()


@pytest.mark.parametrize("f", list(small_families(max_n=6, max_k=3, perm_max=5, weak_max=5)),
                         ids=repr)
def test_family_against_brute_force(f):
    assert check_family(f) == []


def _orientable_naive(w):
    return least_rotation_naive(w) < least_rotation_naive(w[::-1])


def test_orientable_membership_independent():
    for n in range(1, 9):
        for k in (2, 3):
            if k ** n > 7000:
                continue
            try:
                f = Orientable(k, n)
            except FamilyError:
                assert not any(_orientable_naive(w) for w in itertools.product(range(k), repeat=n))
                continue
            for w in itertools.product(range(k), repeat=n):
                assert f.contains(w) == _orientable_naive(w)


def test_multiset_members_lex_order():
    f = MultisetPerm((2, 1, 1))
    ms = list(f.members())
    assert ms == sorted(ms) and len(ms) == len(set(ms)) == f.cardinality
