import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from parkhopf import combinat as cb

words = st.lists(st.integers(1, 8), min_size=0, max_size=6).map(tuple)


# -- predicates and closures ---------------------------------------------------


def test_is_parking():
    assert cb.is_parking((1, 1, 2, 4))
    assert cb.is_parking((1, 1, 3))
    assert cb.is_parking(())
    assert not cb.is_parking((2, 2))


def test_parkize_examples():
    assert cb.parkize((1, 2)) == (1, 2)
    assert cb.parkize((3, 3, 4, 4, 4)) == (1, 1, 2, 2, 2)
    assert cb.parkize((1, 3)) == (1, 2)


@given(words)
def test_parkize_lands_on_parking_and_fixes_them(w):
    p = cb.parkize(w)
    assert cb.is_parking(p)
    assert cb.parkize(p) == p
    if cb.is_parking(w):
        assert p == w


def _std_oracle(w):
    """Unique permutation order-isomorphic to w with left-to-right ties."""
    matches = []
    for sigma in itertools.permutations(range(1, len(w) + 1)):
        ok = True
        for i in range(len(w)):
            for j in range(len(w)):
                lt = w[i] < w[j] or (w[i] == w[j] and i < j)
                if lt != (sigma[i] < sigma[j]):
                    ok = False
        if ok:
            matches.append(sigma)
    assert len(matches) == 1
    return matches[0]


def test_standardize_examples_against_oracle():
    for w in [(1, 3, 1), (1, 2, 3), (3, 1, 1), (2, 2, 2), (5, 1, 5, 2)]:
        assert cb.standardize(w) == _std_oracle(w)
    assert cb.standardize((1, 3, 1)) == (1, 3, 2)
    assert cb.standardize((3, 1, 1)) == (3, 1, 2)


@given(words)
def test_standardize_idempotent_order_isomorphic(w):
    s = cb.standardize(w)
    assert cb.is_permutation(s)
    assert cb.standardize(s) == s
    for i in range(len(w)):
        for j in range(len(w)):
            assert (w[i] < w[j]) <= (s[i] < s[j])


def test_pack_and_evaluations():
    assert cb.pack((2, 4, 4)) == (1, 2, 2)
    assert cb.evaluation((1, 1, 3)) == (2, 0, 1)
    assert cb.packed_evaluation((1, 2, 2)) == (1, 2)
    assert cb.sort_ascending((3, 1, 2)) == (1, 2, 3)
    assert cb.evaluation(()) == ()


@given(words)
def test_pack_is_packed(w):
    assert cb.is_packed(cb.pack(w))


def test_shifted_concats():
    assert cb.shifted_concat_len((1, 2), (1, 1, 3)) == (1, 2, 3, 3, 5)
    assert cb.shifted_concat_len((), (1, 1)) == (1, 1)
    assert cb.shifted_concat_len((1,), (1,)) == (1, 2)
    assert cb.shifted_concat_max((1, 2), (1, 1, 3)) == (1, 2, 2, 2, 4)
    assert cb.shifted_concat_max((1,), (2, 2)) == (1, 2, 2)
    assert cb.shifted_concat_max((1, 1), (1, 2)) == (1, 1, 1, 2)
    with pytest.raises(ValueError):
        cb.shifted_concat_max((), (1,))


def test_shifted_shuffle():
    assert sorted(cb.shifted_shuffle((1,), (1,), 1)) == [(1, 2), (2, 1)]
    assert sorted(cb.shifted_shuffle((1,), (1,), 0)) == [(1, 1), (1, 1)]
    out = cb.shifted_shuffle((1, 2), (1, 1), 2)
    assert len(out) == comb(4, 2)


@given(st.lists(st.integers(1, 4), min_size=0, max_size=4).map(tuple),
       st.lists(st.integers(1, 4), min_size=0, max_size=4).map(tuple))
def test_shuffle_multiset_size(u, v):
    assert len(cb.shifted_shuffle(u, v, len(u))) == comb(len(u) + len(v), len(u))


# -- quasi-ribbons --------------------------------------------------------------


def test_hypoplactic_examples():
    q1 = cb.hypoplactic_quasi_ribbon((1, 3, 1))
    q2 = cb.hypoplactic_quasi_ribbon((3, 1, 1))
    assert q1 == q2 == cb.QuasiRibbon((1, 1, 3), {2})
    assert str(q1) == "11|3"
    assert cb.hypoplactic_quasi_ribbon((1, 1, 3)) == cb.QuasiRibbon((1, 1, 3))
    classes = {cb.hypoplactic_quasi_ribbon(w) for w in cb.parking_functions(3)}
    assert len(classes) == 11


def test_quasi_ribbon_invariant_never_violated():
    # recoil positions of std(a) always sit at strict ascents of sorted(a)
    for n in range(7):
        for w in cb.parking_functions(n):
            cb.hypoplactic_quasi_ribbon(w)


def test_quasi_ribbon_validation_and_text():
    with pytest.raises(ValueError):
        cb.QuasiRibbon((1, 1, 3), {1})  # not a strict ascent
    with pytest.raises(ValueError):
        cb.QuasiRibbon((2, 2), set())  # not a parking word
    q = cb.QuasiRibbon.parse("1|2|3")
    assert q.word == (1, 2, 3) and q.bars == frozenset({1, 2})
    assert cb.QuasiRibbon.parse(str(q)) == q
    assert q.shape() == (1, 1, 1)
    assert cb.QuasiRibbon((1, 1, 3), {2}).shape() == (2, 1)
    big = cb.QuasiRibbon(tuple(range(1, 12)), {10})
    assert str(big) == "1,2,3,4,5,6,7,8,9,10|11"
    assert cb.QuasiRibbon.parse(str(big)) == big


# -- compositions ----------------------------------------------------------------


def test_composition_ops():
    assert cb.comp_concat((2,), (1, 1)) == (2, 1, 1)
    assert cb.comp_near_concat((2,), (1, 1)) == (3, 1)
    assert cb.comp_conjugate((1, 1, 1, 1)) == (4,)
    assert cb.comp_conjugate(()) == ()
    assert cb.coarser_leq((2, 1), (1, 1, 1))
    assert not cb.coarser_leq((1, 2), (2, 1))
    with pytest.raises(ValueError):
        cb.comp_near_concat((), (1,))


def _coarsenings_oracle(j):
    """All I <= J by explicitly summing consecutive blocks of J."""
    out = set()
    r = len(j)
    for cuts in itertools.product((0, 1), repeat=max(r - 1, 0)):
        blocks, current = [], j[0] if j else 0
        for part, cut in zip(j[1:], cuts):
            if cut:
                blocks.append(current)
                current = part
            else:
                current += part
        if j:
            blocks.append(current)
        out.add(tuple(blocks))
    return out


def test_coarser_leq_against_block_oracle():
    for n in range(7):
        for j in cb.compositions(n):
            coarser = _coarsenings_oracle(j)
            for i in cb.compositions(n):
                assert cb.coarser_leq(i, j) == (i in coarser)


def test_conjugate_is_involution_and_flips_order():
    for n in range(1, 8):
        for i in cb.compositions(n):
            assert cb.comp_conjugate(cb.comp_conjugate(i)) == i
    assert cb.comp_conjugate((2, 1, 1)) == (3, 1)
    assert cb.comp_conjugate((1, 2, 1)) == (2, 2)


# -- trees and canopy --------------------------------------------------------------


def test_tree_text_roundtrip():
    for n in range(6):
        for t in cb.binary_trees(n):
            assert cb.tree_parse(cb.tree_to_text(t)) == t
    assert cb.tree_to_text((None, None)) == "(.,.)"


def test_canopy():
    assert cb.canopy((None, None)) == ""
    left_comb = (((None, None), None), None)
    right_comb = (None, (None, (None, None)))
    assert cb.canopy(left_comb) != cb.canopy(right_comb)
    assert len(cb.canopy(left_comb)) == 2
    # partition of 4-node trees by canopy has 8 blocks
    blocks = {cb.canopy(t) for t in cb.binary_trees(4)}
    assert len(blocks) == 8


# -- enumerators -------------------------------------------------------------------


def test_enumeration_counts():
    assert [len(cb.ndpfs(n)) for n in range(1, 9)] == \
        [1, 2, 5, 14, 42, 132, 429, 1430]
    assert [len(cb.parking_functions(n)) for n in range(1, 8)] == \
        [(n + 1) ** (n - 1) for n in range(1, 8)]
    assert [len(cb.quasi_ribbons(n)) for n in range(1, 9)] == \
        [1, 3, 11, 45, 197, 903, 4279, 20793]
    assert [len(cb.packed_words(n)) for n in range(1, 9)] == \
        [1, 3, 13, 75, 541, 4683, 47293, 545835]
    assert len(cb.compositions(5)) == 16
    assert len(cb.binary_trees(5)) == 42


def test_enumerations_are_sorted_and_duplicate_free():
    for n in range(6):
        for family in ("parking", "ndpf", "packed", "permutation",
                       "composition"):
            items = cb.enumerate_family(family, n)
            assert list(items) == sorted(set(items))
        ribbons = cb.enumerate_family("quasi_ribbon", n)
        keys = [r.sort_key() for r in ribbons]
        assert keys == sorted(keys) and len(set(keys)) == len(keys)


def test_enumeration_cap():
    with pytest.raises(ValueError):
        cb.ndpfs(13)
    with pytest.raises(ValueError):
        cb.enumerate_family("nonsense", 3)


def test_quasi_ribbon_list_n3_matches_known_list():
    expected = {"111", "112", "11|2", "113", "11|3", "122", "1|22",
                "123", "1|23", "12|3", "1|2|3"}
    assert {str(q) for q in cb.quasi_ribbons(3)} == expected


def test_word_text_roundtrip():
    assert cb.word_to_text((1, 10, 2)) == "1,10,2"
    assert cb.word_to_text((1, 2, 3)) == "123"
    assert cb.text_to_word("1,10,2") == (1, 10, 2)
    assert cb.text_to_word("123") == (1, 2, 3)
    assert cb.text_to_word("") == ()
