"""
Exact counts as Python integers.

Two independent routes to ``[b^M a^N]`` live in this package: the Stirling
closed form here, and the power-series oracle in :mod:`excedance.series`.
Everything else (arbitrary words, cycles, pattern avoidance) is brute force.
"""

from __future__ import annotations

import threading
from collections import Counter
from functools import lru_cache

from .permutation import (
    ExcedanceWord,
    Permutation,
    all_cycles,
    all_permutations,
    avoids_pattern_21_34,
    avoids_pattern_34_21,
    excedance_word,
    has_stretching_pair,
    validate_word,
)

__all__ = [
    "DEFAULT_BRUTE_FORCE_LIMIT", "BruteForceLimitError",
    "factorial", "stirling2", "word_distribution", "count_by_word_bruteforce",
    "count_block_word", "count_cstar", "count_cstar_bruteforce",
    "count_alpha_bruteforce",
]

DEFAULT_BRUTE_FORCE_LIMIT = 10


class BruteForceLimitError(ValueError):
    """Raised when an enumeration would exceed the configured size limit."""


def _check_limit(n: int, limit: int | None) -> None:
    limit = DEFAULT_BRUTE_FORCE_LIMIT if limit is None else limit
    if n > limit:
        raise BruteForceLimitError(f"n = {n} exceeds the brute-force limit {limit}")


_lock = threading.Lock()
_factorials = [1]
_stirling_rows = [[1]]  # row n holds S(n, 0..n)


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative number")
    with _lock:
        while len(_factorials) <= n:
            _factorials.append(_factorials[-1] * len(_factorials))
        return _factorials[n]


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k) from the standard recurrence."""
    if n < 0 or k < 0:
        raise ValueError("stirling2 needs n, k >= 0")
    if k > n:
        return 0
    with _lock:
        while len(_stirling_rows) <= n:
            prev = _stirling_rows[-1]
            m = len(prev)
            row = [0] * (m + 1)
            for j in range(1, m + 1):
                row[j] = j * (prev[j] if j < m else 0) + prev[j - 1]
            _stirling_rows.append(row)
        return _stirling_rows[n][k]


@lru_cache(maxsize=None)
def word_distribution(n: int, limit: int | None = None) -> dict[ExcedanceWord, int]:
    """Tally of excedance words over all of ``S_n`` (one enumeration pass)."""
    _check_limit(n, limit)
    return dict(Counter(excedance_word(p) for p in all_permutations(n)))


def count_by_word_bruteforce(word: ExcedanceWord, limit: int | None = None) -> int:
    """Number of permutations of ``S_{len(word)+1}`` whose excedance word is ``word``."""
    validate_word(word)
    return word_distribution(len(word) + 1, limit).get(word, 0)


def count_block_word(M: int, N: int) -> int:
    """
    ``[b^M a^N]``, the number of permutations of ``S_{M+N+1}`` with excedance
    set exactly ``{1, ..., M}``.

    >>> count_block_word(2, 2)
    31
    """
    if M < 0 or N < 0:
        raise ValueError("block exponents must be non-negative")
    return sum(
        stirling2(M + 1, i + 1) * stirling2(N + 1, i + 1) * factorial(i) * factorial(i + 1)
        for i in range(min(M, N) + 1)
    )


def count_cstar(m: int) -> int:
    """Number of m-cycles with no stretching pair, summed over block words."""
    if m < 2:
        raise ValueError("count_cstar needs m >= 2")
    n = m - 1
    return sum(count_block_word(k, n - 1 - k) for k in range(n))


def count_cstar_bruteforce(m: int, limit: int | None = None) -> int:
    _check_limit(m, limit)
    return sum(1 for c in all_cycles(m) if not has_stretching_pair(c))


def _avoids_both(p: Permutation) -> bool:
    return avoids_pattern_21_34(p) and avoids_pattern_34_21(p)


def count_alpha_bruteforce(n: int, limit: int | None = None) -> int:
    """Permutations of ``S_n`` avoiding both 21-34 and 34-21."""
    _check_limit(n, limit)
    return sum(1 for p in all_permutations(n) if _avoids_both(p))
