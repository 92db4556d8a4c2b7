import random

import pytest
from hypothesis import given, settings

from conftest import FIB, PHI, TERNARY, TM, TM2, XI, M, words
from palmorph.factors import (PalindromicTree, PeriodicSourceError,
                              bispecial_extension, build_factor_index,
                              closed_under_reversal, complete_return_words,
                              default_seed_bound, factor_index_from_text,
                              geometric_bands, left_extensions, looks_periodic,
                              palindrome_census, period_as_two_palindromes,
                              phi_map, phi_orbit, recurrence_window,
                              right_extensions, smallest_period,
                              special_factors)
from palmorph.conjugacy import conjugacy_extremes
from palmorph.morphism import apply, fixed_point_prefix
from palmorph.words import is_palindrome, reverse

FIXTURES = [TM, TM2, FIB, PHI[3], TERNARY, XI, M("a->abc;b->bac;c->cab")]
PALINDROMIC = [TM, TM2, FIB, PHI[3], XI]


def brute_factors(text, n):
    return {text[i:i + k] for k in range(n + 1) for i in range(len(text) - k + 1)}


def brute_palindromes(text):
    return {text[i:j] for i in range(len(text)) for j in range(i + 1, len(text) + 1)
            if is_palindrome(text[i:j])}


def test_index_examples():
    idx = build_factor_index(TM, "0", 2)
    assert idx.certified
    assert idx.factors == {"", "0", "1", "00", "01", "10", "11"}
    assert set(build_factor_index(PHI[3], None, 1).of_length(1)) == {"a", "b"}
    assert build_factor_index(TERNARY, "a", 3).of_length(3) == ["abc", "bca", "cab"]


@pytest.mark.parametrize("phi", FIXTURES, ids=str)
def test_certified_equals_scraped(phi):
    idx = build_factor_index(phi, None, 8)
    text = fixed_point_prefix(phi, idx.letter, 30000)
    assert idx.factors == brute_factors(text, 8)


def test_non_primitive_falls_back_to_scraping():
    idx = build_factor_index(M("0->000;1->10110100"), "1", 4, prefix_length=5000)
    assert not idx.certified
    assert "000" in idx and "1" in idx


def test_special_factor_examples():
    sp = special_factors(build_factor_index(TM, None, 5), 4)
    assert {"", "0", "1", "01", "10", "010", "101", "0110", "1001"} <= sp.bispecial
    assert special_factors(build_factor_index(TERNARY, "a", 6)).bispecial == {""}
    assert special_factors(build_factor_index(TERNARY, "a", 6)).left == {""}
    assert special_factors(build_factor_index(FIB, None, 4), 3).bispecial == {"", "0", "010"}
    with pytest.raises(ValueError):
        special_factors(build_factor_index(TM, None, 4), 4)


def test_extensions():
    idx = build_factor_index(TM, None, 4)
    assert left_extensions(idx, "010") == ["0", "1"]
    assert right_extensions(idx, "00") == ["1"]


def test_special_factors_against_brute_force():
    text = fixed_point_prefix(TM, "0", 1 << 14)
    facts = brute_factors(text, 6)
    brute = {u for u in facts if len(u) <= 5
             and sum(c + u in facts for c in "01") > 1 and sum(u + c in facts for c in "01") > 1}
    assert special_factors(build_factor_index(TM, None, 6), 5).bispecial == brute


def test_census_examples():
    c = palindrome_census(fixed_point_prefix(TM, "0", 1 << 14), geometric_bands(1 << 12))
    assert c.strictly_increasing()
    c = palindrome_census(fixed_point_prefix(TERNARY, "a", 3000))
    assert c.lengths == [1, 1, 1]
    c = palindrome_census("a")
    assert c.lengths == [1] and c.counts == [1]


def test_census_from_index_matches_text():
    idx = build_factor_index(FIB, None, 12)
    from_idx = palindrome_census(idx, geometric_bands(13))
    text = fixed_point_prefix(FIB, "0", 5000)
    short = {f for f in brute_factors(text, 12) if f and is_palindrome(f)}
    assert from_idx.distinct == len(short)
    assert sum(from_idx.counts) == len(short)


@settings(max_examples=300)
@given(words("abc", 0, 40))
def test_eertree_against_brute_force(text):
    tree = PalindromicTree(text)
    found = {tree.palindrome(v) for v in range(2, len(tree.length))}
    assert found == brute_palindromes(text)
    assert len(tree) == len(found)


@given(words("ab", 1, 30), words("ab", 0, 30))
def test_eertree_incremental(a, b):
    tree = PalindromicTree(a)
    tree.extend(b)
    assert len(tree) == len(PalindromicTree(a + b))


@given(words("ab", 1, 30))
def test_palindromic_branch(text):
    tree = PalindromicTree(text)
    centre, arm = tree.longest_branch()
    deepest = reverse(arm) + centre + arm
    assert len(deepest) == max(tree.lengths())
    for k in range(len(arm) + 1):
        p = reverse(arm[:k]) + centre + arm[:k]
        if p:
            assert p in text
    for v in range(2, len(tree.length)):
        for c in tree.extension_letters(v):
            assert c + tree.palindrome(v) + c in text


def _brute_returns(text, w):
    occ = [i for i in range(len(text) - len(w) + 1) if text.startswith(w, i)]
    return {text[i:j + len(w)] for i, j in zip(occ, occ[1:])}


def test_return_word_examples():
    tm = fixed_point_prefix(TM, "0", 1 << 14)
    r = complete_return_words(tm, "11")
    assert r.words == _brute_returns(tm, "11")
    assert r.words == {"110011", "11001011", "11010011", "1101001011"}
    assert r.complete
    assert complete_return_words("ab" * 50, "ab").words == {"abab"}
    fib = fixed_point_prefix(FIB, "0", 20000)
    assert len(complete_return_words(fib, "00").words) == 2
    with pytest.raises(ValueError):
        complete_return_words("abc", "c")


def test_bispecial_extension_examples():
    tm = fixed_point_prefix(TM, "0", 1 << 14)
    idx = build_factor_index(TM, None, 30)
    bisp = special_factors(idx).bispecial
    for w in ("0", "010", "0110"):
        x = bispecial_extension(tm, w)
        assert w in x and is_palindrome(x) and x in bisp
        half = (len(x) - len(w)) // 2
        assert x[half:half + len(w)] == w and reverse(x[:half]) == x[half + len(w):]
    fib = fixed_point_prefix(FIB, "0", 20000)
    assert bispecial_extension(fib, "1") == "010"
    with pytest.raises(PeriodicSourceError):
        bispecial_extension(fixed_point_prefix(TERNARY, "a", 3000), "a")
    with pytest.raises(PeriodicSourceError):
        bispecial_extension(fixed_point_prefix(TERNARY, "a", 30), "a", TERNARY, "a")
    with pytest.raises(ValueError):
        bispecial_extension(tm, "000")


def test_periodicity_heuristics():
    assert smallest_period("abcabcab") == 3
    assert looks_periodic("ab" * 10) and not looks_periodic(fixed_point_prefix(TM, "0", 256))


def test_phi_map_examples():
    assert phi_map(TM2, "01") == "01101001"
    assert phi_map(TM2, "") == ""
    assert phi_map(PHI[3], "b") == "babbabbab"
    idx = build_factor_index(PHI[3], None, 12)
    sp = special_factors(idx)
    assert "b" in sp.bispecial and "babbabbab" in sp.bispecial
    with pytest.raises(ValueError):
        phi_map(M("0->000;1->10110100"), "0")


@pytest.mark.parametrize("phi", [TM, TM2, FIB, PHI[3]], ids=str)
def test_phi_orbit_is_complete(phi):
    orbit = phi_orbit(phi, 60)
    assert orbit.seed_bound == default_seed_bound(phi)
    assert orbit.misses == [] and orbit.not_bispecial == []
    assert orbit.speciality_violations == []
    ext = conjugacy_extremes(phi)
    for u, v in orbit.orbit.items():
        assert v == apply(ext.rightmost, u) + ext.w


@pytest.mark.parametrize("phi", PALINDROMIC + [M("a->abc;b->bac;c->cab")], ids=str)
def test_uniform_recurrence(phi):
    idx = build_factor_index(phi, None, 7)
    text = fixed_point_prefix(phi, idx.letter, 20000)
    rng = random.Random(0)
    for n in range(1, 7):
        facts = idx.of_length(n)
        r = recurrence_window(text, facts)
        assert r is not None and r < len(text) // 10
        for _ in range(50):
            i = rng.randrange(len(text) - r)
            window = text[i:i + r]
            assert all(f in window for f in facts)


@pytest.mark.parametrize("phi", PALINDROMIC, ids=str)
def test_palindromic_languages_closed_under_reversal(phi):
    assert closed_under_reversal(build_factor_index(phi, None, 10))


def test_non_palindromic_language_not_closed():
    assert not closed_under_reversal(build_factor_index(TERNARY, "a", 4))


def test_periodic_binary_period_splits_into_palindromes():
    text = fixed_point_prefix(XI, "a", 100)
    p = smallest_period(text)
    assert text[:p] == "ab"
    assert period_as_two_palindromes(text[:p]) == ("a", "b")
    assert period_as_two_palindromes("abc") is None


def test_index_from_text():
    idx = factor_index_from_text("abab", 3)
    assert idx.factors == {"", "a", "b", "ab", "ba", "aba", "bab"}
    assert right_extensions(idx, "a") == ["b"]
