"""Acceptance suite: one test per exit criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines alongside pytest's own report.
"""

import random
import time
from contextlib import contextmanager
from itertools import product
from math import comb, gcd

import numpy as np
import pytest

from apsa.christoffel import (
    adjacent_diff_columns,
    bwt_matrix_adjacent_diffs,
    christoffel_bwt,
    christoffel_sa_params,
    christoffel_word,
    closest_path_point,
    factorization_index,
)
from apsa.core import APPerm, ap_detect, ap_inverse, ap_materialize, canonical_residue
from apsa.corpus import (
    entry_sa_array,
    entry_text_bytes,
    generate_corpus,
    pick_parameters,
    read_manifest,
    verify_sa_file,
)
from apsa.enumeration import count_bounds, enumerate_strings, sigma_min
from apsa.lyndonlab import (
    balanced2_factorization,
    balanced_via_bwt,
    fibonacci_closed_form,
    fibonacci_lengths,
    fibonacci_swapped,
    fibonacci_word,
    is_balanced,
    is_balanced2,
    is_lyndon,
)
from apsa.synthesis import (
    SynthCase,
    classify,
    synth,
    synth_binary,
    synth_ternary,
)
from apsa.textindex import (
    bwt_from_matrix,
    bwt_from_sa,
    run_count,
    suffix_array,
)

from helpers import all_strings, ap_census, coprimes, iter_ap_perms, naive_sa


@contextmanager
def criterion(number, name):
    try:
        yield
    except BaseException:
        print(f"criterion {number:02d} {name}: FAIL")
        raise
    print(f"criterion {number:02d} {name}: PASS")


# Rotation family for n = 8, k = 5, one row per first entry, in rotation
# order: (text, boundary indices, forced split value, BWT characters).
ROTATION_FAMILY_N8_K5 = {
    5: ("babbabac", (3, 7), 7, "bbbbcaaa"),
    2: ("babacbac", (3, 6), 4, "bbbccaaa"),
    7: ("acbacbac", (3, 5), 1, "bbcccaaa"),
    4: ("acbacacc", (3, 4), 6, "bccccaaa"),
    1: ("ababbabb", (3,), 3, "bbbbbaaa"),
    6: ("ccaccacb", (2, 3), 8, "cccccaab"),
    3: ("ccacbccb", (1, 3), 5, "cccccabb"),
    8: ("babbabba", (3,), 2, "bbbbbaaa"),
}


def test_criterion_01_rotation_family_reproduction():
    with criterion(1, "eight-rotation family n=8 k=5"):
        start = time.perf_counter()
        for p1, (text, boundaries, split_value, bwt) in ROTATION_FAMILY_N8_K5.items():
            perm = APPerm(8, 5, p1)
            result = synth_ternary(perm)
            assert result.text == text
            assert result.split.boundaries == boundaries
            assert canonical_residue(p1 - 5 - 1, 8) == split_value
            assert bwt_from_sa(text, ap_materialize(perm)).chars == bwt
            assert suffix_array(text).sa == tuple(ap_materialize(perm))
        assert time.perf_counter() - start < 1.0


def test_criterion_02_binary_triples():
    with criterion(2, "three binary strings n=8 k=5"):
        expected = {
            8: ("babbabba", 2, 3),
            6: ("bbabbabb", 3, 2),
            1: ("ababbabb", 3, 3),
        }
        for p1, (text, p_s, s) in expected.items():
            result = synth_binary(APPerm(8, 5, p1))
            assert (result.text, result.p_s, result.s) == (text, p_s, s)


def test_criterion_03_christoffel_7_5():
    with criterion(3, "christoffel (7,5) record"):
        word = christoffel_word(7, 5)
        assert word == "aababaababab"
        perm = christoffel_sa_params(7, 5)
        sa = [1, 6, 11, 4, 9, 2, 7, 12, 5, 10, 3, 8]
        assert ap_materialize(perm) == sa
        assert list(suffix_array(word).sa) == sa
        assert perm.k == 5
        result = synth_binary(perm)
        assert result.s == 7 and result.p_s == 7
        assert christoffel_bwt(7, 5).chars == "b" * 5 + "a" * 7
        assert bwt_from_sa(word).runs == (("b", 5), ("a", 7))
        assert factorization_index(7, 5) == sa[9 - 1] == 5
        assert balanced2_factorization(word).factors == ("aabab", "aababab")


def test_criterion_04_round_trip_exhaustive():
    with criterion(4, "round trip n in [2..64], all (k, p1)"):
        start = time.perf_counter()
        cases = 0
        for n in range(2, 65):
            for perm in iter_ap_perms(n):
                text = synth(perm).text
                assert suffix_array(text).sa == tuple(ap_materialize(perm)), perm
                cases += 1
        elapsed = time.perf_counter() - start
        assert cases > 40_000
        assert elapsed < 30.0


def test_criterion_05_bwt_matrix_and_run_counts():
    with criterion(5, "matrix BWT equality and run counts"):
        for n in range(2, 65):
            for perm in iter_ap_perms(n):
                if perm.is_reversal:
                    continue
                text = synth_ternary(perm).text
                sa_bwt = bwt_from_sa(text, ap_materialize(perm))
                assert bwt_from_matrix(text).chars == sa_bwt.chars, perm
                expected_runs = 2 if perm.p1 in (1, perm.n) else 3
                assert run_count(sa_bwt) == expected_runs, perm
        # The canonical binary string for p1 = k + 1 breaks the equality:
        assert bwt_from_sa("bbabbabb").chars == "bbbbbaab"
        assert bwt_from_matrix("bbabbabb").chars == "bbbbbaba"


def test_criterion_06_exactly_three_census():
    with criterion(6, "exactly-three census n in [3..14]"):
        for n in range(3, 15):
            by_ratio = {}
            for word in all_strings(2, n):
                perm = ap_detect(list(naive_sa(word)))
                if perm is not None:
                    by_ratio.setdefault(perm.k, set()).add(word)
            for k in coprimes(n):
                if k == n - 1:
                    observed = len(by_ratio.get(k, ()))
                    reversal_only = sum(
                        1
                        for w in by_ratio.get(k, ())
                        if naive_sa(w) == tuple(range(n, 0, -1))
                    )
                    print(
                        f"  n={n} k={k} (=n-1): observed {observed} binary strings"
                        f" ({reversal_only} with the reversal suffix array;"
                        f" the two documented candidate counts are {n} and {n + 1})"
                    )
                else:
                    assert len(by_ratio.get(k, ())) == 3, (n, k)


def test_criterion_07_uniqueness_census():
    with criterion(7, "ternary uniqueness census n in [3..9]"):
        for n in range(3, 10):
            buckets = {}
            for word in all_strings(3, n):
                perm = ap_detect(list(naive_sa(word)))
                if perm is not None:
                    buckets[perm] = buckets.get(perm, 0) + 1
            for perm in iter_ap_perms(n):
                if classify(perm)[0] is SynthCase.TERNARY:
                    assert buckets.get(perm, 0) == 1, perm


def test_criterion_08_christoffel_suite():
    with criterion(8, "christoffel suite p+q in [3..40]"):
        start = time.perf_counter()
        for n in range(3, 41):
            for p in range(1, n):
                q = n - p
                if gcd(p, q) != 1:
                    continue
                word = christoffel_word(p, q)
                perm = christoffel_sa_params(p, q)
                assert suffix_array(word).sa == tuple(ap_materialize(perm))
                assert word == synth_binary(perm).text
                assert is_lyndon(word)
                assert is_balanced(word)
                assert is_balanced2(word)
                assert bwt_from_sa(word).chars == "b" * q + "a" * p
                idx = factorization_index(p, q)
                assert idx == closest_path_point(p, q)
                assert idx == len(balanced2_factorization(word).factors[0])
                if n <= 24:
                    by_row = {}
                    for r, c in bwt_matrix_adjacent_diffs(word):
                        by_row.setdefault(r, []).append(c)
                    for i in range(1, n):
                        assert sorted(by_row[i]) == sorted(
                            adjacent_diff_columns(n, perm.k, i)
                        ), (p, q, i)
        assert time.perf_counter() - start < 60.0


def test_criterion_09_balanced_equivalence():
    with criterion(9, "balance equivalence n <= 12"):
        for n in range(1, 13):
            for word in all_strings(2, n):
                assert is_balanced(word) == balanced_via_bwt(word), word


def test_criterion_10_fibonacci_suite():
    with criterion(10, "fibonacci suite"):
        f = fibonacci_lengths(40)
        for m in range(4, 40, 2):
            if f[m - 1] > 1000:
                break
            fm, fm2 = f[m - 1], f[m - 3]
            word = fibonacci_word(m).word
            perm = ap_detect(list(suffix_array(word).sa))
            assert perm == APPerm(fm, fm2 % fm, fm), m
            assert fibonacci_closed_form(m) == word, m
        for m in range(3, 40, 2):
            if f[m - 1] > 1000:
                break
            fm, fm2 = f[m - 1], f[m - 3]
            word = fibonacci_swapped(m)
            perm = ap_detect(list(suffix_array(word).sa))
            assert perm is not None and perm.k == fm2 % fm, m
        for m in range(4, 40, 2):
            if f[m - 1] > 10**6:
                break
            assert f[m - 3] ** 2 % f[m - 1] == 1, m


def test_criterion_11_inverse_permutations():
    with criterion(11, "inverse permutation formula n <= 64"):
        for n in range(2, 65):
            for perm in iter_ap_perms(n):
                p = ap_materialize(perm)
                table = [0] * n
                for i, v in enumerate(p, start=1):
                    table[v - 1] = i
                assert ap_materialize(ap_inverse(perm)) == table, perm


def test_criterion_12_enumeration_census():
    with criterion(12, "enumeration census n <= 8, sigma <= 4"):
        for sigma in range(2, 5):
            for n in range(1, 9):
                buckets = ap_census(n, sigma)
                for perm in iter_ap_perms(n):
                    smin = sigma_min(perm)
                    if sigma < smin:
                        assert perm not in buckets
                        continue
                    got = set(enumerate_strings(perm, sigma))
                    assert got == buckets.get(perm, set()), (perm, sigma)
                    bound = count_bounds(n, sigma, smin).bound_fixed_perm
                    assert len(got) <= bound


def test_criterion_13_corpus_scale(tmp_path):
    with criterion(13, "corpus scale n = 10^7 and corruption fuzz"):
        out = tmp_path / "scale"
        start = time.perf_counter()
        manifest = generate_corpus(out, [10**7], ["binary3"], seed="scale")
        gen_elapsed = time.perf_counter() - start
        entry = manifest.entries[0]
        assert entry.n == 10**7
        assert (out / entry.text_name).stat().st_size == 10**7
        assert (out / entry.sa_name).stat().st_size == 8 * 10**7
        assert gen_elapsed < 5.0, f"generation took {gen_elapsed:.2f}s"

        start = time.perf_counter()
        res = verify_sa_file(out / entry.sa_name, entry.n, entry.k, entry.p1)
        verify_elapsed = time.perf_counter() - start
        assert res.ok
        assert verify_elapsed < 5.0, f"verification took {verify_elapsed:.2f}s"

        # Full oracle soundness at the largest size the oracle handles fast.
        small = pick_parameters(100_000, "binary3", "scale-small")
        assert list(suffix_array(entry_text_bytes(small).decode()).sa) == list(
            entry_sa_array(small)
        )

        # 1000 random single-value corruptions, all detected.
        n = 10_000
        fuzz_dir = tmp_path / "fuzz"
        generate_corpus(fuzz_dir, [n], ["binary3"], seed="fuzz")
        fe = read_manifest(fuzz_dir / "manifest.txt").entries[0]
        path = fuzz_dir / fe.sa_name
        pristine = np.fromfile(path, dtype="<u8")
        rng = random.Random("criterion13")
        for _ in range(1000):
            arr = pristine.copy()
            i = rng.randrange(n)
            arr[i] = (int(arr[i]) - 1 + rng.randrange(1, n)) % n + 1
            arr.tofile(path)
            res = verify_sa_file(path, fe.n, fe.k, fe.p1)
            assert not res.ok and res.first_bad == i + 1
        pristine.tofile(path)
