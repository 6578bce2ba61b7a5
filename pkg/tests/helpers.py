"""Shared test utilities: independent oracles and exhaustive generators."""

from itertools import product
from math import gcd

from apsa.core import APPerm, ap_detect


def naive_sa(text):
    """Second, independent suffix-array oracle: full suffix comparison sort."""
    return tuple(sorted(range(1, len(text) + 1), key=lambda i: text[i - 1 :]))


def naive_matrix_bwt(text):
    """Rotation-matrix BWT by brute force, ties broken by starting position."""
    n = len(text)
    doubled = text + text
    starts = sorted(range(n), key=lambda i: doubled[i : i + n])
    return "".join(text[i - 1] for i in starts)


def coprimes(n):
    return [k for k in range(1, n) if gcd(k, n) == 1]


def iter_ap_perms(n):
    """Every arithmetically progressed permutation descriptor of length n."""
    if n == 1:
        yield APPerm(1, 1, 1)
        return
    for k in coprimes(n):
        for p1 in range(1, n + 1):
            yield APPerm(n, k, p1)


def all_strings(sigma, length):
    alphabet = "abcdefghijklmnopqrstuvwxyz"[:sigma]
    for tup in product(alphabet, repeat=length):
        yield "".join(tup)


def ap_census(n, sigma):
    """Map each AP permutation to the set of length-n strings over sigma ranks
    whose (naive-oracle) suffix array materializes it.

    One pass over all sigma**n strings, so per-permutation brute forcing is
    not repeated.
    """
    buckets = {}
    for text in all_strings(sigma, n):
        perm = ap_detect(list(naive_sa(text)))
        if perm is not None:
            buckets.setdefault(perm, set()).add(text)
    return buckets
