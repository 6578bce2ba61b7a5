"""Construct strings whose suffix array is a given arithmetically progressed permutation.

The construction splits the materialized permutation P into consecutive
subarrays and assigns one character per subarray, smallest character first.
Two split positions are forced: right after the entry with value n - k, and
right after the entry with value (p1 - k - 1) mod n.  Depending on where the
first entry p1 sits, those positions collapse or fall at the end of P, which
is what makes one, two, or three characters necessary:

* p1 = n with k = n - 1: the reversal [n, ..., 1], one character suffices.
* p1 in {n, k+1, 1}: two characters suffice (cases binary1/2/3 below).
* anything else: three characters are necessary and the string is unique.

Split positions are handled in two coordinate systems: "after the entry with
value v" (value space) and "after index i of P" (index space).  Conversion
between them goes through :func:`apsa.core.ap_position_of`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Optional

from .core import APPerm, ap_materialize, ap_position_of, canonical_residue
from .errors import (
    AlphabetTooSmallError,
    InvalidSplitError,
    UnsupportedCaseError,
    WrongCaseError,
)

__all__ = [
    "SynthCase",
    "SplitSpec",
    "SynthResult",
    "classify",
    "required_splits",
    "synth",
    "synth_ternary",
    "synth_binary",
    "binary_closed_form",
    "synth_unary_family",
    "synth_general",
    "render_ranks",
]


class SynthCase(Enum):
    UNARY = "unary"
    BINARY1 = "binary1"  # p1 = n, k != n-1
    BINARY2 = "binary2"  # p1 = k+1
    BINARY3 = "binary3"  # p1 = 1
    TERNARY = "ternary"


@dataclass(frozen=True)
class SplitSpec:
    """Ordered boundary set partitioning P, plus the character rank per part.

    boundaries[j] = i means "split right after index i of P"; labels[j] is the
    rank (1 = smallest) assigned to the j-th subarray.
    """

    boundaries: tuple[int, ...]
    labels: tuple[int, ...]

    def sizes(self, n: int) -> tuple[int, ...]:
        edges = (0,) + self.boundaries + (n,)
        return tuple(b - a for a, b in zip(edges, edges[1:]))


@dataclass(frozen=True)
class SynthResult:
    text: str
    case: SynthCase
    split: SplitSpec
    s: Optional[int]  # split index: number of smallest-rank characters (binary cases)
    p_s: int  # position of the largest suffix starting with the smallest character
    predicted_period: Optional[int]


def classify(perm: APPerm) -> tuple[SynthCase, int]:
    """Case tag and minimal alphabet size for the permutation, from (n, k, p1) alone."""
    if perm.is_reversal:
        return SynthCase.UNARY, 1
    if perm.p1 == perm.n:
        return SynthCase.BINARY1, 2
    if perm.p1 == perm.k + 1:
        return SynthCase.BINARY2, 2
    if perm.p1 == 1:
        return SynthCase.BINARY3, 2
    return SynthCase.TERNARY, 3


def required_splits(perm: APPerm) -> frozenset[int]:
    """Values of P after which every valid construction must split.

    Returned in value space ("split after the entry with this value").  The
    set has sigma_min - 1 elements.
    """
    n, k, p1 = perm.n, perm.k, perm.p1
    if perm.is_reversal:
        return frozenset()
    if p1 == n:
        return frozenset({canonical_residue(p1 - k - 1, n)})
    if p1 in (1, k + 1):
        return frozenset({n - k})
    return frozenset({canonical_residue(p1 - k - 1, n), n - k})


def render_ranks(ranks: Iterable[int]) -> str:
    """Render a rank sequence as text: 'a', 'b', ... for ranks up to 26.

    Larger ranks fall back to dot-separated decimal tokens; the results are
    order-theoretic either way.
    """
    ranks = list(ranks)
    if all(r <= 26 for r in ranks):
        return "".join(chr(96 + r) for r in ranks)
    return ".".join(str(r) for r in ranks)


def _assemble(perm: APPerm, boundaries: tuple[int, ...], labels: tuple[int, ...]) -> str:
    """Text with rank labels[j] at the positions stored in the j-th subarray of P."""
    p = ap_materialize(perm)
    ranks = [0] * perm.n
    edges = (0,) + boundaries + (perm.n,)
    for j, (lo, hi) in enumerate(zip(edges, edges[1:])):
        label = labels[j]
        for i in range(lo, hi):
            ranks[p[i] - 1] = label
    return render_ranks(ranks)


def _split_boundaries(perm: APPerm, values: Iterable[int]) -> list[int]:
    """Index-space boundaries for value-space splits, dropping a split after the end."""
    idx = {ap_position_of(perm, v) for v in values}
    idx.discard(perm.n)
    return sorted(idx)


def synth_ternary(perm: APPerm) -> SynthResult:
    """The canonical string over at most three characters with suffix array P.

    Splits P after the entries n - k and (p1 - k - 1) mod n and labels the
    subarrays a, b, c in order.  For p1 in {1, n} one subarray vanishes and
    the output is binary; for the reversal the construction does not apply.
    """
    if perm.is_reversal:
        raise UnsupportedCaseError(
            "the reversal permutation is covered by the unary family"
        )
    n, k, p1 = perm.n, perm.k, perm.p1
    boundaries = tuple(
        _split_boundaries(perm, {n - k, canonical_residue(p1 - k - 1, n)})
    )
    labels = tuple(range(1, len(boundaries) + 2))
    text = _assemble(perm, boundaries, labels)
    case, _ = classify(perm)
    s = boundaries[0] if case in (SynthCase.BINARY1, SynthCase.BINARY3) else None
    p_s = ap_materialize(perm)[boundaries[0] - 1]
    period = n - k if case is SynthCase.BINARY1 else None
    return SynthResult(text, case, SplitSpec(boundaries, labels), s, p_s, period)


_BINARY_SPLIT_VALUE = {
    SynthCase.BINARY1: lambda n, k: n - k - 1,
    SynthCase.BINARY2: lambda n, k: n - k,
    SynthCase.BINARY3: lambda n, k: n - k,
}


def synth_binary(perm: APPerm) -> SynthResult:
    """The unique binary string with suffix array P, for p1 in {n, k+1, 1}.

    The first s entries of P (everything up to the case's split value) take
    'a', the rest 'b'.  Cases p1 = n and p1 = k+1 yield strings with period
    n - k; case p1 = 1 yields a Lyndon word.
    """
    case, _ = classify(perm)
    if case is SynthCase.UNARY:
        raise UnsupportedCaseError(
            "the reversal permutation is covered by the unary family"
        )
    if case is SynthCase.TERNARY:
        raise WrongCaseError(
            f"first entry {perm.p1} not in {{1, {perm.k + 1}, {perm.n}}};"
            " no binary string has this suffix array"
        )
    n, k = perm.n, perm.k
    split_value = _BINARY_SPLIT_VALUE[case](n, k)
    boundary = ap_position_of(perm, split_value)
    boundaries = (boundary,)
    text = _assemble(perm, boundaries, (1, 2))
    period = n - k if case in (SynthCase.BINARY1, SynthCase.BINARY2) else None
    return SynthResult(
        text, case, SplitSpec(boundaries, (1, 2)), boundary, split_value, period
    )


def binary_closed_form(perm: APPerm) -> str:
    """The binary string again, via the inverse-permutation threshold formula.

    Character i is 'a' exactly when the rank of suffix i, computed in closed
    form as (i - last) * k_inverse mod n, is at most the split index s.  This
    is an independent derivation of :func:`synth_binary` kept for
    cross-checking.
    """
    case, _ = classify(perm)
    if case not in (SynthCase.BINARY1, SynthCase.BINARY2, SynthCase.BINARY3):
        raise WrongCaseError(f"case {case.value} has no binary closed form")
    n = perm.n
    kinv = perm.k_inverse
    if case is SynthCase.BINARY2:
        s = canonical_residue(n - 1 - kinv, n)
    else:
        s = canonical_residue(n - kinv, n)
    last = perm.last
    ranks = [
        1 if canonical_residue((i - last) * kinv, n) <= s else 2
        for i in range(1, n + 1)
    ]
    return render_ranks(ranks)


def synth_unary_family(n: int, sigma: int) -> Iterator[str]:
    """All strings of descending character blocks, lazily, in lexicographic order.

    These are exactly the strings of length n over sigma ranks whose suffix
    array is [n, n-1, ..., 1]; there are C(n + sigma - 1, n) of them.
    """
    if n < 1:
        raise ValueError(f"length must be positive, got {n}")
    if sigma < 1:
        raise ValueError(f"alphabet size must be positive, got {sigma}")
    for combo in combinations_with_replacement(range(1, sigma + 1), n):
        yield render_ranks(reversed(combo))


def synth(perm: APPerm) -> SynthResult:
    """Canonical minimal-alphabet string for P, dispatching on the case."""
    case, _ = classify(perm)
    if case is SynthCase.UNARY:
        n = perm.n
        split = SplitSpec((), (1,))
        period = n - perm.k if perm.n > 1 else None
        return SynthResult("a" * n, case, split, None, 1, period)
    if case is SynthCase.TERNARY:
        return synth_ternary(perm)
    return synth_binary(perm)


def synth_general(
    perm: APPerm, sigma: int, split_after_values: Iterable[int] = ()
) -> SynthResult:
    """A string over at most sigma ranks with suffix array P.

    On top of the required splits, extra splits may be requested in value
    space ("after the entry with value v").  Free splits must be distinct
    from the required ones and must not fall after the final entry of P.
    Subarrays take consecutive ranks starting at 1; with no free splits and
    sigma equal to the case minimum this coincides with :func:`synth`.
    """
    case, sigma_min = classify(perm)
    if sigma < sigma_min:
        raise AlphabetTooSmallError(
            f"alphabet size {sigma} below the required minimum {sigma_min}"
        )
    required_values = required_splits(perm)
    required_idx = set(_split_boundaries(perm, required_values))
    free = list(split_after_values)
    if len(set(free)) != len(free):
        raise InvalidSplitError("duplicate split values")
    if len(free) > sigma - sigma_min:
        raise AlphabetTooSmallError(
            f"{len(free)} free splits need an alphabet of at least"
            f" {sigma_min + len(free)} characters"
        )
    free_idx = set()
    for v in free:
        if v in required_values:
            raise InvalidSplitError(f"split after value {v} is already required")
        i = ap_position_of(perm, v)
        if i == perm.n:
            raise InvalidSplitError(
                f"value {v} is the final entry; splitting after it has no effect"
            )
        free_idx.add(i)
    boundaries = tuple(sorted(required_idx | free_idx))
    labels = tuple(range(1, len(boundaries) + 2))
    text = _assemble(perm, boundaries, labels)
    if case is SynthCase.UNARY:
        p_s = 1
    else:
        p_s = ap_materialize(perm)[boundaries[0] - 1] if boundaries else 1
    return SynthResult(text, case, SplitSpec(boundaries, labels), None, p_s, None)
