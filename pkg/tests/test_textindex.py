from itertools import product

import pytest

from apsa.core import APPerm, ap_materialize, canonical_residue
from apsa.errors import UnsupportedCaseError
from apsa.synthesis import SynthCase, classify, synth, synth_ternary
from apsa.textindex import (
    bwt_definitions_agree,
    bwt_from_matrix,
    bwt_from_sa,
    bwt_predict,
    bwt_predict_ternary,
    compact_runs,
    expand_runs,
    inverse_sa,
    parse_compact_runs,
    rotate_runs,
    run_count,
    runs_of,
    suffix_array,
)

from helpers import iter_ap_perms, naive_matrix_bwt, naive_sa


@pytest.mark.parametrize(
    "text, expected",
    [
        ("babbabac", (5, 2, 7, 4, 1, 6, 3, 8)),
        ("abaababa", (8, 3, 6, 1, 4, 7, 2, 5)),
        ("aaa", (3, 2, 1)),
        ("banana", (6, 4, 2, 1, 5, 3)),
        ("ab", (1, 2)),
        ("a", (1,)),
    ],
)
def test_suffix_array_examples(text, expected):
    assert suffix_array(text).sa == expected


def test_suffix_array_rejects_empty():
    with pytest.raises(ValueError):
        suffix_array("")


def test_suffix_array_cross_check_exhaustive():
    # Against the independent naive oracle, over every string of length up
    # to 12 on up to three characters.
    for length in range(1, 13):
        for tup in product("abc", repeat=length):
            text = "".join(tup)
            assert suffix_array(text).sa == naive_sa(text), text


def test_suffix_array_numpy_path_agrees():
    # Long texts take the vectorized route; check it against the small one.
    from apsa.textindex import _doubling_small

    words = [
        ("ab" * 1500) + "a",
        "a" * 3000,
        ("abc" * 1000) + "bca",
    ]
    for text in words:
        got = suffix_array(text).sa  # length >= threshold, vectorized
        want = tuple(i + 1 for i in _doubling_small([ord(c) for c in text]))
        assert got == want


@pytest.mark.parametrize(
    "sa, expected",
    [
        ([5, 2, 7, 4, 1, 6, 3, 8], [5, 2, 7, 4, 1, 6, 3, 8]),
        ([1, 2, 3, 4], [1, 2, 3, 4]),
        ([3, 1, 2], [2, 3, 1]),
    ],
)
def test_inverse_sa(sa, expected):
    assert inverse_sa(sa) == expected


def test_inverse_sa_rejects_non_permutation():
    with pytest.raises(ValueError):
        inverse_sa([1, 1, 2])
    with pytest.raises(ValueError):
        inverse_sa([0, 1, 2])


def test_isa_closed_form():
    # For synthesized strings the inverse suffix array is the materialized
    # inverse permutation: rank of suffix i is (i - last) * k_inverse mod n.
    from apsa.core import ap_inverse

    for n in range(2, 33):
        for perm in iter_ap_perms(n):
            sa = list(suffix_array(synth(perm).text).sa)
            assert inverse_sa(sa) == ap_materialize(ap_inverse(perm))


@pytest.mark.parametrize(
    "text, chars",
    [
        ("babbabac", "bbbbcaaa"),
        ("ababbabb", "bbbbbaaa"),
        ("bab", "bab"),
    ],
)
def test_bwt_from_sa_examples(text, chars):
    profile = bwt_from_sa(text)
    assert profile.chars == chars
    assert profile.source == "sa-based"
    assert expand_runs(profile.runs) == chars


def test_bwt_from_sa_length_mismatch():
    with pytest.raises(ValueError):
        bwt_from_sa("abc", [1, 2])


@pytest.mark.parametrize(
    "text, chars",
    [
        ("bab", "bba"),
        ("babbabac", "bbbbcaaa"),
        ("bbabbabb", "bbbbbaba"),
    ],
)
def test_bwt_from_matrix_examples(text, chars):
    assert bwt_from_matrix(text).chars == chars


def test_bwt_from_matrix_non_primitive_deterministic():
    # Equal rotations ordered by starting position; brute force agrees.
    for text in ("abab", "aaaa", "abcabc", "aabaab"):
        assert bwt_from_matrix(text).chars == naive_matrix_bwt(text)


@pytest.mark.parametrize(
    "perm, chars",
    [
        (APPerm(8, 5, 6), "bbbbbaab"),  # canonical binary output
        (APPerm(8, 5, 5), "bbbbcaaa"),
        (APPerm(8, 5, 1), "bbbbbaaa"),
    ],
)
def test_bwt_predict_examples(perm, chars):
    profile = bwt_predict(perm)
    assert profile.chars == chars
    assert profile.source == "predicted"


def test_bwt_predict_ternary_keeps_third_character():
    # For p1 = k + 1 the split construction string is ternary and its BWT
    # differs from the canonical binary string's BWT.
    assert bwt_predict_ternary(APPerm(8, 5, 6)).chars == "cccccaab"
    assert runs_of("cccccaab") == (("c", 5), ("a", 2), ("b", 1))


def test_bwt_predict_rejects_reversal():
    with pytest.raises(UnsupportedCaseError):
        bwt_predict(APPerm(8, 7, 8))


def test_bwt_predict_matches_sa_route():
    for n in range(2, 65):
        for perm in iter_ap_perms(n):
            if perm.is_reversal:
                continue
            text = synth(perm).text
            assert bwt_predict(perm) == bwt_from_sa(text, ap_materialize(perm))


def test_bwt_predict_ternary_matches_sa_route():
    for n in range(2, 49):
        for perm in iter_ap_perms(n):
            if perm.is_reversal:
                continue
            text = synth_ternary(perm).text
            assert bwt_predict_ternary(perm) == bwt_from_sa(text, ap_materialize(perm))


@pytest.mark.parametrize(
    "chars, count",
    [
        ("bbbbcaaa", 3),
        ("bbbbbaaa", 2),
        ("aaaa", 1),
    ],
)
def test_run_count(chars, count):
    from apsa.textindex import BwtProfile

    assert run_count(BwtProfile(chars, "sa-based")) == count


def test_run_counts_of_split_construction():
    # Exactly 2 runs when the split construction string is binary, exactly 3
    # when it is ternary.
    for n in range(2, 65):
        for perm in iter_ap_perms(n):
            if perm.is_reversal:
                continue
            profile = bwt_predict_ternary(perm)
            expected = 2 if perm.p1 in (1, perm.n) else 3
            assert run_count(profile) == expected, perm


@pytest.mark.parametrize(
    "text, expected",
    [
        ("babbabac", True),
        ("bbabbabb", False),
        ("aab", True),
    ],
)
def test_bwt_definitions_agree_examples(text, expected):
    assert bwt_definitions_agree(text) is expected


def test_bwt_definitions_agree_on_split_construction():
    # The split construction string always satisfies matrix = SA BWT; the
    # canonical binary string for p1 = k + 1 may not.
    for n in range(2, 49):
        for perm in iter_ap_perms(n):
            if perm.is_reversal:
                continue
            assert bwt_definitions_agree(synth_ternary(perm).text), perm


def test_bwt_definitions_agree_on_lyndon_words():
    for text in ("aab", "ab", "aababaababab", "ababbabb", "abcac"):
        assert bwt_definitions_agree(text)


def test_run_helpers_round_trip():
    for chars in ("bbbbcaaa", "a", "abba", "cccccaab"):
        runs = runs_of(chars)
        assert expand_runs(runs) == chars
        assert parse_compact_runs(compact_runs(runs)) == runs
        assert all(count >= 1 for _, count in runs)
        assert all(a[0] != b[0] for a, b in zip(runs, runs[1:]))


def test_rotate_runs_matches_string_rotation():
    for chars in ("aaabbbbc", "aabbbbbb", "abc", "aaaa"):
        runs = runs_of(chars)
        for t in range(len(chars) + 1):
            rotated = chars[t:] + chars[:t]
            assert expand_runs(rotate_runs(runs, t)) == rotated
            assert rotate_runs(runs, t) == runs_of(rotated)


def test_profile_equality_is_on_chars():
    a = bwt_from_sa("babbabac")
    b = bwt_from_matrix("babbabac")
    assert a == b
    assert a.source != b.source
