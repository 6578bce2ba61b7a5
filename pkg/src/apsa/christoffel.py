"""Lower Christoffel words, their suffix arrays, BWT shape, and lattice geometry.

A lower Christoffel word for coprime (p, q) traces the staircase path from
(0, 0) to (p, q) just below the connecting segment: 'a' is a unit step right,
'b' a unit step up, and no lattice point lies strictly between path and
segment.  Generation uses the Cayley-graph form: character i is 'a' exactly
when (i-1)q mod0 n < iq mod0 n, with n = p + q and mod0 denoting plain
0-based residues.  The 0-based arithmetic is confined to this module; every
exported index follows the package's 1-based convention.

The suffix array of a lower Christoffel word is arithmetically progressed
with first entry 1 and ratio q^{-1} mod n, its BWT is b^q a^p, and its split
index equals p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import APPerm, canonical_residue, mod_inverse
from .errors import DegenerateSlopeError, NotCoprimeError
from .textindex import BwtProfile, suffix_array

__all__ = [
    "ChristoffelParams",
    "LatticePath",
    "christoffel_word",
    "christoffel_upper",
    "christoffel_sa_params",
    "christoffel_bwt",
    "christoffel_path",
    "factorization_index",
    "closest_path_point",
    "bwt_matrix_adjacent_diffs",
    "adjacent_diff_columns",
]


@dataclass(frozen=True)
class ChristoffelParams:
    """Coprime step counts: p moves along x ('a'), q along y ('b')."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError("step counts must be nonnegative")
        if math.gcd(self.p, self.q) != 1:
            raise NotCoprimeError(f"({self.p}, {self.q}) must be coprime")

    @property
    def n(self) -> int:
        return self.p + self.q


@dataclass(frozen=True)
class LatticePath:
    """Vertices of a staircase path, from (0, 0) to (p, q)."""

    points: tuple[tuple[int, int], ...]


def christoffel_word(p: int, q: int) -> str:
    """The lower Christoffel word with slope q/p, a Lyndon word of length p + q."""
    params = ChristoffelParams(p, q)
    n = params.n
    if q == 0:
        return "a" * p
    return "".join(
        "a" if ((i - 1) * q) % n < (i * q) % n else "b" for i in range(1, n + 1)
    )


def christoffel_upper(p: int, q: int) -> str:
    """The upper Christoffel word: the reversal of the lower one."""
    return christoffel_word(p, q)[::-1]


def _positive_slope(p: int, q: int) -> ChristoffelParams:
    params = ChristoffelParams(p, q)
    if p == 0 or q == 0:
        raise DegenerateSlopeError("both step counts must be positive here")
    return params


def christoffel_sa_params(p: int, q: int) -> APPerm:
    """Suffix-array descriptor of the lower Christoffel word: (p+q, q^{-1}, 1)."""
    params = _positive_slope(p, q)
    n = params.n
    return APPerm(n, mod_inverse(q, n) if n > 1 else 1, 1)


def christoffel_bwt(p: int, q: int) -> BwtProfile:
    """Predicted BWT shape b^q a^p."""
    _positive_slope(p, q)
    runs = tuple(r for r in (("b", q), ("a", p)) if r[1] > 0)
    return BwtProfile("b" * q + "a" * p, "predicted", runs)


def christoffel_path(p: int, q: int) -> LatticePath:
    """The staircase path induced by the word; stays weakly below the segment."""
    word = christoffel_word(p, q)
    x = y = 0
    points = [(0, 0)]
    for ch in word:
        if ch == "a":
            x += 1
        else:
            y += 1
        points.append((x, y))
    return LatticePath(tuple(points))


def factorization_index(p: int, q: int) -> int:
    """Length of the left factor of the coinciding two-way factorization.

    Computable in O(1) from the progression: with split index s = p, the
    answer is suffix-array entry (s + 2) reduced into [1..n].  For n = 2 the
    only split is after the first character.
    """
    params = _positive_slope(p, q)
    n = params.n
    if n < 2:
        raise ValueError("a single character has no two-factor factorization")
    k = mod_inverse(q, n)
    idx = canonical_residue(p + 2, n)
    return canonical_residue(1 + (idx - 1) * k, n)


def closest_path_point(p: int, q: int) -> int:
    """Prefix length whose path vertex is nearest to the segment, interior only.

    Distance of vertex (x, y) to the segment is |qx - py| / sqrt(p^2 + q^2);
    the integer numerator is minimized.  The minimizing vertex is unique and
    coincides with :func:`factorization_index`.
    """
    params = _positive_slope(p, q)
    points = christoffel_path(p, q).points
    best_i = None
    best = None
    for i in range(1, params.n):
        x, y = points[i]
        d = abs(q * x - p * y)
        if best is None or d < best:
            best, best_i = d, i
    return best_i


def adjacent_diff_columns(n: int, k: int, i: int) -> tuple[int, int]:
    """Predicted columns (1-based) where rotation-matrix rows i and i+1 differ."""
    c = canonical_residue(i * (n - k), n)
    return c, canonical_residue(c + 1, n)


def bwt_matrix_adjacent_diffs(word: str) -> list[tuple[int, int]]:
    """All (row, column) positions where adjacent sorted-rotation rows differ.

    Row i is the rotation starting at suffix-array entry i.  For a lower
    Christoffel word each adjacent pair differs in exactly two consecutive
    columns, at i(n-k) mod n and the next column; for other inputs the raw
    difference positions are returned and the caller judges the pattern.
    """
    n = len(word)
    if n < 2:
        raise ValueError("need at least two rotations to compare")
    sa = suffix_array(word).sa
    doubled = word + word
    rows = [doubled[start - 1 : start - 1 + n] for start in sa]
    diffs = []
    for i in range(n - 1):
        a, b = rows[i], rows[i + 1]
        for j in range(n):
            if a[j] != b[j]:
                diffs.append((i + 1, j + 1))
    return diffs
