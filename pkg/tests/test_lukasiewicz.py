from itertools import product
from math import factorial

import pytest
from hypothesis import given, strategies as st

from oracles import all_pf, is_pf, pf_from_pollak

from parkfn import core, lukasiewicz as lk
from parkfn.errors import InvalidInputError

EXAMPLE_PF = (2, 1, 3, 1, 3, 1, 6, 4)
EXAMPLE_WORD = (2, 0, 1, 0, -1, 0, -1, -1)
EXAMPLE_BLOCKS = ((2, 4, 6), (1,), (3, 5), (8,), (), (7,), (), ())


@st.composite
def parking_functions(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    return pf_from_pollak(draw(st.lists(st.integers(1, n + 1), min_size=n, max_size=n)))


def brute_words(n, prime=False):
    out = []
    for steps in product(range(-1, n), repeat=n):
        h, ok = 0, True
        for j, s in enumerate(steps, start=1):
            h += s
            if h < 0 or (prime and j < n and h < 1):
                ok = False
                break
        if ok and h == 0:
            out.append(steps)
    return out


# --- words ------------------------------------------------------------------


def test_prime_path_heights():
    w = lk.word_from_pf((1, 1, 1, 3, 4, 4, 6))
    assert w.steps == (2, -1, 0, 1, -1, 0, -1)
    assert w.heights == (0, 2, 1, 1, 2, 1, 1, 0)
    assert w.is_prime
    assert lk.area(w) == 8 == core.displacement((1, 1, 1, 3, 4, 4, 6))


@pytest.mark.parametrize("steps", [(), (1, -1, 1), (-1, 1), (2, -2, 0), (0, 1)])
def test_bad_words(steps):
    assert not lk.is_lukasiewicz(steps)
    with pytest.raises(InvalidInputError):
        lk.LukasiewiczWord(steps)


@pytest.mark.parametrize("n", range(1, 7))
def test_word_enumeration(n):
    assert [w.steps for w in lk.enumerate_lukas(n)] == brute_words(n)
    assert [w.steps for w in lk.enumerate_prime_lukas(n)] == brute_words(n, prime=True)


@pytest.mark.parametrize("n", range(1, 8))
def test_multinomial_path_counts(n):
    assert lk.count_by_paths(n) == core.count_pf(n)
    assert lk.count_by_paths(n, prime=True) == core.count_ppf(n)


@given(parking_functions())
def test_area_is_displacement(p):
    w = lk.word_from_pf(p)
    assert lk.area(w) == core.displacement(p)
    assert w.is_prime == core.is_prime_parking_function(p)
    assert lk.height_sequence(w) == w.heights


def test_word_from_non_pf():
    with pytest.raises(InvalidInputError):
        lk.word_from_pf((2, 2))


# --- labeled paths and Dyck paths -----------------------------------------------


def test_labeled_path_example():
    path = lk.labeled_path_from_pf(EXAMPLE_PF)
    assert path.word.steps == EXAMPLE_WORD
    assert path.blocks == EXAMPLE_BLOCKS
    assert lk.alpha_permutation(path) == (2, 4, 6, 1, 3, 5, 8, 7)
    assert lk.pf_from_labeled_path(lk.LabeledLukasiewiczPath(EXAMPLE_WORD, EXAMPLE_BLOCKS)) == EXAMPLE_PF
    dyck = lk.dyck_from_labeled_lukas(path)
    assert dyck.word == "NNNENENNENEENEEE"
    assert dyck.columns()[:4] == [(2, 4, 6), (1,), (3, 5), (8,)]
    assert lk.pf_from_labeled_dyck(dyck) == EXAMPLE_PF
    des, asc, tie = lk.path_stat_sets(path)
    assert (des, asc, tie) == ({1, 3, 5, 7}, {2, 4, 6}, set())


def test_inverse_ascents_include_ties():
    alpha_l = (1, 2, 6, 4, 3, 5, 8, 7)
    inv = lk.inverse_permutation(alpha_l)
    assert core.ascent_set(inv) == {1, 2, 4, 6}


@given(parking_functions())
def test_roundtrips(p):
    path = lk.labeled_path_from_pf(p)
    assert lk.pf_from_labeled_path(path) == p
    dyck = lk.dyck_from_labeled_lukas(path)
    assert lk.lukas_from_labeled_dyck(dyck) == path
    assert lk.pf_from_labeled_dyck(dyck) == p
    assert lk.labeled_dyck_from_pf(p) == dyck
    assert lk.LabeledLukasiewiczPath.from_json(path.to_json()) == path
    assert lk.LabeledDyckPath.from_dict(dyck.to_dict()) == dyck


@given(parking_functions())
def test_stat_sets_and_inverse_descents(p):
    path = lk.labeled_path_from_pf(p)
    des, asc, tie = lk.path_stat_sets(path)
    assert (des, asc, tie) == (core.descent_set(p), core.ascent_set(p), core.tie_set(p))
    inv = lk.inverse_permutation(lk.alpha_permutation(path))
    assert core.descent_set(inv) == core.descent_set(p)
    assert core.ascent_set(inv) == core.ascent_set(p) | core.tie_set(p)


@pytest.mark.parametrize("n", range(1, 6))
def test_bijection_is_onto(n):
    images = {lk.labeled_path_from_pf(p) for p in all_pf(n)}
    total = sum(lk.labelings(w) for w in lk.enumerate_lukas(n))
    assert len(images) == total == len(all_pf(n))


def test_labelings():
    w = lk.LukasiewiczWord(EXAMPLE_WORD)
    assert lk.labelings(w) == factorial(8) // (6 * 1 * 2 * 1 * 1 * 1 * 1 * 1)


@pytest.mark.parametrize(
    "word, labels",
    [("ENNE", (1, 2)), ("NNE", (1, 2)), ("NNEE", (2, 1)), ("NXEE", (1, 2)), ("NNEE", (1, 1))],
)
def test_bad_dyck_paths(word, labels):
    with pytest.raises(InvalidInputError):
        lk.LabeledDyckPath(word, labels)


def test_bad_labeled_path():
    with pytest.raises(InvalidInputError):
        lk.LabeledLukasiewiczPath((1, -1), ((1,), (2,)))
    with pytest.raises(InvalidInputError):
        lk.LabeledLukasiewiczPath((1, -1), ((1, 1), ()))
