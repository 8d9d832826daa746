"""Colexicographic labeling of the unordered pair space of composite vertices.

For composite indices ``a < b`` the pair ``{a, b}`` sits at position
``b*(b-1)/2 + a``.  Row ``b`` of the pair space is therefore the contiguous
block ``[b*(b-1)/2, b*(b+1)/2)``.
"""

from __future__ import annotations

from math import isqrt

import numpy as np

from .errors import OutOfRangeError, SelfLoopError


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def pair_index(a: int, b: int, n: int) -> int:
    if a == b:
        raise SelfLoopError(f"self-pair {{{a}, {a}}} has no pair index")
    if not (0 <= a < n and 0 <= b < n):
        raise OutOfRangeError(f"pair ({a}, {b}) outside composite range [0, {n})")
    if a > b:
        a, b = b, a
    return b * (b - 1) // 2 + a


def pair_from_index(k: int, n: int) -> tuple[int, int]:
    if not 0 <= k < pair_count(n):
        raise OutOfRangeError(f"pair index {k} outside [0, {pair_count(n)})")
    # largest b with b(b-1)/2 <= k
    b = (1 + isqrt(1 + 8 * k)) // 2
    a = k - b * (b - 1) // 2
    return a, b


def pair_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Endpoint arrays ``(a, b)`` for every pair index, in pair-index order."""
    b = np.repeat(np.arange(n, dtype=np.int64), np.arange(n, dtype=np.int64))
    k = np.arange(pair_count(n), dtype=np.int64)
    a = k - b * (b - 1) // 2
    return a, b
