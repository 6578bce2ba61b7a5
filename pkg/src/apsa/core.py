"""Modular arithmetic on 1-based residues and arithmetically progressed permutations.

Every public index and residue in this package is 1-based: the canonical
representative of x modulo n lies in [1..n], so a multiple of n reduces to n,
not 0.  All modular reduction funnels through :func:`canonical_residue` so the
convention lives in exactly one place.

An arithmetically progressed permutation of [1..n] steps by a constant ratio k
modulo n, including the wrap from the last entry back to the first.  Such a
permutation exists only when gcd(k, n) = 1, and is fully described by the
triple (n, k, first entry).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import pairwise
from typing import Iterable, Optional

from .errors import NotCoprimeError

__all__ = [
    "APPerm",
    "canonical_residue",
    "mod_inverse",
    "ap_materialize",
    "ap_detect",
    "ap_inverse",
    "ap_rotate",
    "ap_position_of",
]


def canonical_residue(x: int, n: int) -> int:
    """Reduce x to the unique representative in [1..n] congruent to x mod n."""
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    r = x % n
    return r if r else n


def mod_inverse(k: int, n: int) -> int:
    """Multiplicative inverse of k modulo n, as a residue in [1..n]."""
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if math.gcd(k, n) != 1:
        raise NotCoprimeError(f"{k} has no inverse modulo {n}")
    return canonical_residue(pow(k, -1, n), n)


@dataclass(frozen=True)
class APPerm:
    """Descriptor (n, k, p1) of an arithmetically progressed permutation.

    n is the length, k the ratio in [1..n-1] (k = 1 for the degenerate n = 1),
    and p1 the first entry.  gcd(k, n) = 1 is enforced on construction.
    """

    n: int
    k: int
    p1: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"length must be positive, got {self.n}")
        if not 1 <= self.p1 <= self.n:
            raise ValueError(f"first entry {self.p1} outside [1..{self.n}]")
        if self.n == 1:
            if self.k != 1:
                raise ValueError("the singleton permutation has ratio 1")
            return
        if not 1 <= self.k <= self.n - 1:
            raise ValueError(f"ratio {self.k} outside [1..{self.n - 1}]")
        if math.gcd(self.k, self.n) != 1:
            raise NotCoprimeError(
                f"ratio {self.k} and length {self.n} must be coprime"
            )

    @property
    def k_inverse(self) -> int:
        """Inverse of the ratio modulo n, in [1..n]."""
        return mod_inverse(self.k, self.n)

    @property
    def last(self) -> int:
        """The final entry, one ratio step before the first."""
        return canonical_residue(self.p1 - self.k, self.n)

    @property
    def is_reversal(self) -> bool:
        """True when the permutation materializes to [n, n-1, ..., 1]."""
        return self.n == 1 or (self.p1 == self.n and self.k == self.n - 1)


def ap_materialize(perm: APPerm) -> list[int]:
    """Expand the descriptor into the full permutation array."""
    n, k = perm.n, perm.k
    out = [perm.p1]
    for _ in range(n - 1):
        out.append(canonical_residue(out[-1] + k, n))
    return out


def ap_detect(values: Iterable[int]) -> Optional[APPerm]:
    """Recognize an arithmetically progressed permutation, if the array is one.

    Returns the (n, k, p1) descriptor, or None for anything else: arrays that
    are not permutations of [1..n], or permutations whose successive
    differences are not constant modulo n.  Checking the n-1 adjacent
    differences suffices because the cyclic wrap difference is forced (the n
    cyclic differences sum to 0 modulo n).
    """
    seq = list(values)
    n = len(seq)
    if n == 0:
        return None
    seen = bytearray(n)
    for v in seq:
        if not isinstance(v, int) or not 1 <= v <= n or seen[v - 1]:
            return None
        seen[v - 1] = 1
    if n == 1:
        return APPerm(1, 1, 1)
    k = (seq[1] - seq[0]) % n
    if math.gcd(k, n) != 1:
        return None
    for a, b in pairwise(seq):
        if (b - a) % n != k:
            return None
    return APPerm(n, k, seq[0])


def ap_inverse(perm: APPerm) -> APPerm:
    """Descriptor of the elementwise inverse permutation.

    The inverse progresses with the inverse ratio, and its first entry is
    (1 - last) * k_inverse reduced into [1..n].
    """
    if perm.n == 1:
        return perm
    kinv = perm.k_inverse
    p1 = canonical_residue((1 - perm.last) * kinv, perm.n)
    return APPerm(perm.n, kinv, p1)


def ap_rotate(perm: APPerm, m: int) -> APPerm:
    """Descriptor of the m-th left rotation of the materialized permutation."""
    if not 0 <= m < perm.n:
        raise ValueError(f"rotation amount {m} outside [0..{perm.n - 1}]")
    return APPerm(perm.n, perm.k, canonical_residue(perm.p1 + m * perm.k, perm.n))


def ap_position_of(perm: APPerm, value: int) -> int:
    """Index i (1-based) with materialized entry i equal to the given value."""
    if not 1 <= value <= perm.n:
        raise ValueError(f"value {value} outside [1..{perm.n}]")
    if perm.n == 1:
        return 1
    return canonical_residue((value - perm.p1) * perm.k_inverse + 1, perm.n)
