"""Lyndon-word predicates and factorizations, balanced words, Fibonacci words.

A Lyndon word is strictly least among its cyclic rotations, hence primitive
and border-free.  Besides the classic greedy (Duval) factorization, Lyndon
words admit a right factorization (split before the least proper suffix) and
a left factorization (split after the longest proper Lyndon prefix); words
where the two coincide at every recursion level are exactly the lower
Christoffel words.

>>> is_lyndon("abcac")
True
>>> [f for f in duval_factorization("babbabac").factors]
['b', 'abb', 'abac']
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import canonical_residue
from .errors import WrongParityError
from .textindex import bwt_from_matrix, suffix_array

__all__ = [
    "Factorization",
    "FibonacciWord",
    "is_lyndon",
    "duval_factorization",
    "right_factorization",
    "left_factorization",
    "is_balanced2",
    "balanced2_factorization",
    "is_balanced",
    "balanced_via_bwt",
    "fibonacci_word",
    "fibonacci_lengths",
    "fibonacci_closed_form",
    "fibonacci_swapped",
]


@dataclass(frozen=True)
class Factorization:
    """Factors of a word, with the kind of factorization that produced them.

    For kind "balanced2-tree" the two children carry the recursive structure
    down to single characters.
    """

    factors: tuple[str, ...]
    kind: str
    children: tuple["Factorization", ...] = ()

    @property
    def word(self) -> str:
        return "".join(self.factors)


def is_lyndon(w: str) -> bool:
    """True when w is strictly smaller than every nontrivial rotation of itself."""
    n = len(w)
    if n == 0:
        raise ValueError("empty word")
    doubled = w + w
    return all(w < doubled[i : i + n] for i in range(1, n))


def duval_factorization(w: str) -> Factorization:
    """Unique factorization into lexicographically nonincreasing Lyndon words."""
    if not w:
        raise ValueError("empty word")
    factors = []
    i, n = 0, len(w)
    while i < n:
        j, k = i + 1, i
        while j < n and w[k] <= w[j]:
            k = i if w[k] < w[j] else k + 1
            j += 1
        while i <= k:
            factors.append(w[i : i + j - k])
            i += j - k
    return Factorization(tuple(factors), "duval")


def right_factorization(w: str) -> Factorization:
    """Split a Lyndon word before its lexicographically least proper suffix.

    Both factors are Lyndon and the left one is smaller.  The least proper
    suffix of a Lyndon word starts at the second entry of its suffix array,
    since the word itself occupies the first.
    """
    if len(w) < 2:
        raise ValueError("need at least two characters to factorize")
    if not is_lyndon(w):
        raise ValueError(f"{w!r} is not a Lyndon word")
    sa = suffix_array(w).sa
    cut = sa[1] - 1
    return Factorization((w[:cut], w[cut:]), "right")


def left_factorization(w: str) -> Factorization:
    """Split a Lyndon word after its longest proper Lyndon prefix."""
    if len(w) < 2:
        raise ValueError("need at least two characters to factorize")
    if not is_lyndon(w):
        raise ValueError(f"{w!r} is not a Lyndon word")
    for length in range(len(w) - 1, 0, -1):
        if is_lyndon(w[:length]):
            return Factorization((w[:length], w[length:]), "left")
    raise AssertionError("unreachable: single characters are Lyndon")


def _balanced2_tree(w: str, memo: dict) -> Optional[Factorization]:
    if w in memo:
        return memo[w]
    if len(w) == 1:
        node = Factorization((w,), "balanced2-tree")
    elif not is_lyndon(w):
        node = None
    else:
        left = left_factorization(w).factors
        right = right_factorization(w).factors
        if left != right:
            node = None
        else:
            u, v = (_balanced2_tree(part, memo) for part in left)
            node = (
                Factorization(left, "balanced2-tree", (u, v))
                if u is not None and v is not None
                else None
            )
    memo[w] = node
    return node


def is_balanced2(w: str) -> bool:
    """True when the left and right factorizations coincide recursively.

    Single characters are balanced; multi-character non-Lyndon words are not
    (no error is raised for them).
    """
    if not w:
        raise ValueError("empty word")
    return _balanced2_tree(w, {}) is not None


def balanced2_factorization(w: str) -> Factorization:
    """The recursive coinciding factorization, down to single characters."""
    tree = _balanced2_tree(w, {})
    if tree is None:
        raise ValueError(f"{w!r} has no coinciding left/right factorization")
    return tree


def _check_binary(w: str) -> None:
    if not w:
        raise ValueError("empty word")
    if set(w) - {"a", "b"}:
        raise ValueError(f"expected a word over 'a','b', got {w!r}")


def is_balanced(w: str) -> bool:
    """Cyclic balance check, straight from the definition.

    For every window length, the 'a'-counts over all cyclic windows of that
    length may differ by at most one.  Quadratic on purpose: this is the
    test oracle.
    """
    _check_binary(w)
    n = len(w)
    doubled = w + w
    prefix = [0]
    for ch in doubled:
        prefix.append(prefix[-1] + (ch == "a"))
    for length in range(1, n + 1):
        counts = [prefix[i + length] - prefix[i] for i in range(n)]
        if max(counts) - min(counts) > 1:
            return False
    return True


def balanced_via_bwt(w: str) -> bool:
    """Balance check through the rotation-matrix BWT.

    A binary word is cyclically balanced exactly when its matrix BWT is
    perfectly clustered, all 'b's then all 'a's.
    """
    _check_binary(w)
    return "ab" not in bwt_from_matrix(w).chars


@dataclass(frozen=True)
class FibonacciWord:
    m: int
    word: str

    @property
    def length(self) -> int:
        return len(self.word)


def fibonacci_word(m: int) -> FibonacciWord:
    """The m-th Fibonacci word: F1 = b, F2 = a, Fm = F(m-1) F(m-2)."""
    if m < 1:
        raise ValueError(f"index must be at least 1, got {m}")
    prev, cur = "b", "a"  # F1, F2
    if m == 1:
        return FibonacciWord(1, prev)
    for _ in range(m - 2):
        prev, cur = cur, cur + prev
    return FibonacciWord(m, cur)


def fibonacci_lengths(m: int) -> list[int]:
    """Lengths [f1..fm] of the first m Fibonacci words."""
    if m < 1:
        raise ValueError(f"index must be at least 1, got {m}")
    out = [1, 1]
    while len(out) < m:
        out.append(out[-1] + out[-2])
    return out[:m]


def fibonacci_closed_form(m: int) -> str:
    """Even-index Fibonacci word by direct formula instead of recursion.

    Character i is 'a' exactly when 1 + i*f(m-2), reduced into [1..f(m)],
    is at most f(m-1).
    """
    if m % 2:
        raise WrongParityError(f"closed form applies to even indices, got {m}")
    if m < 4:
        raise ValueError(f"index must be at least 4, got {m}")
    f = fibonacci_lengths(m)
    fm, fm1, fm2 = f[m - 1], f[m - 2], f[m - 3]
    return "".join(
        "a" if canonical_residue(1 + i * fm2, fm) <= fm1 else "b"
        for i in range(1, fm + 1)
    )


_SWAP = str.maketrans("ab", "ba")


def fibonacci_swapped(m: int) -> str:
    """The m-th Fibonacci word with 'a' and 'b' exchanged."""
    return fibonacci_word(m).word.translate(_SWAP)
