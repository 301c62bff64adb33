import itertools

import pytest
from hypothesis import given

import oracles
from conftest import dyck_words
from dyckposet.paths import EMPTY, DyckWord, generate_all, parse
from dyckposet.patterns import avoiders, contains, count_avoiders_brute, count_occurrences

W = parse


def test_contains_examples():
    assert contains(W("UUDUDDUDUUDD"), W("UUDDUD"))
    assert not contains(W("UUDUDDUDUUDD"), W("UUUUDDDD"))
    assert contains(W("UUDUDDUDUUDD"), EMPTY)
    assert contains(EMPTY, EMPTY)
    assert not contains(EMPTY, W("UD"))


def test_containment_is_scattered_not_contiguous():
    # the example pair from the definition only works as a scattered subsequence
    assert "UUDDUD" not in "UUDUDDUDUUDD"


@pytest.mark.parametrize("q, p, expected", [
    ("UUDD", "UD", 4),
    ("UDUD", "UD", 3),
    ("UUDUDDUDUUDD", "UUDDUD", oracles.occurrences("UUDUDDUDUUDD", "UUDDUD")),
    ("UDUDUD", "UDUD", 5),
    ("UUDD", "UUDD", 1),
    ("UD", "UUDD", 0),
])
def test_count_occurrences(q, p, expected):
    assert count_occurrences(W(q), W(p)) == expected


@given(dyck_words(5), dyck_words(3))
def test_count_occurrences_against_subset_enumeration(q, p):
    assert count_occurrences(q, p) == oracles.occurrences(q.steps, p.steps)


@given(dyck_words(7))
def test_self_occurrence_is_one(q):
    assert count_occurrences(q, q) == 1


def _level(max_n):
    return [w for n in range(max_n + 1) for w in generate_all(n)]


def test_partial_order_up_to_semilength_5():
    words = _level(5)
    for a in words:
        assert contains(a, a)
    for a, b in itertools.product(words, repeat=2):
        if contains(a, b) and contains(b, a):
            assert a == b
        if contains(a, b):
            assert b.semilength <= a.semilength


def test_transitivity_up_to_semilength_4():
    words = _level(4)
    below = {a: [b for b in words if contains(a, b)] for a in words}
    for a in words:
        for b in below[a]:
            for c in below[b]:
                assert contains(a, c)


def test_greedy_agrees_with_counting_up_to_semilength_6():
    words = _level(6)
    patterns = _level(4)
    for q in words:
        for p in patterns:
            assert contains(q, p) == (count_occurrences(q, p) > 0)


@given(dyck_words(6), dyck_words(4))
def test_contains_against_recursive_oracle(q, p):
    assert contains(q, p) == oracles.is_subsequence(q.steps, p.steps)


@given(dyck_words(7))
def test_containment_count_independent_of_scan_direction(q):
    # reversing and swapping U/D is an involution on Dyck words that preserves containment
    def mirror(w):
        return DyckWord(w.steps[::-1].translate(str.maketrans("UD", "DU")))

    for m in range(q.semilength + 1):
        fwd = sum(contains(q, p) for p in generate_all(m))
        back = sum(contains(mirror(q), mirror(p)) for p in generate_all(m))
        assert fwd == back


def test_avoiders_examples():
    assert [w.steps for w in avoiders(3, W("UDUDUD"))] == ["UUUDDD", "UUDUDD", "UUDDUD", "UDUUDD"]
    for n in range(1, 7):
        assert list(avoiders(n, W("UD"))) == []
    assert list(avoiders(0, W("UUDD"))) == [EMPTY]


@pytest.mark.parametrize("n", range(0, 8))
@pytest.mark.parametrize("p", ["UD", "UDUD", "UUDD", "UUDUDD", "UUDDUD", "UDUUDD"])
def test_avoiders_in_generation_order(n, p):
    got = [w.steps for w in avoiders(n, W(p))]
    assert got == [w for w in oracles.dyck_strings(n) if not oracles.is_subsequence(w, p)]


def test_count_avoiders_brute_examples():
    assert count_avoiders_brute(6, W("UUUUDUDDDD")) == 106
    for n in range(3, 9):
        assert count_avoiders_brute(n, W("UUDUDD")) == 4
    assert count_avoiders_brute(7, W("UUUUDDDD")) == 0
    assert count_avoiders_brute(4, EMPTY) == 0
