"""
Constructive maps between permutations and cycles.

- :func:`phi` sends excedance sets to descent-bottom sets.
- :func:`cycle_to_perm` unrolls an (n+1)-cycle backwards from 1.
- :func:`cln_phi` unrolls an (n+1)-cycle forwards from n+1.
- :func:`iota` injects cycles whose stretching pairs are all exceptional
  into stretching-pair-free cycles one size larger.
"""

from __future__ import annotations

from .permutation import (
    CycleDecomposition,
    Permutation,
    is_n_cycle,
    standard_cycle_decomposition,
    stretching_pairs,
)

__all__ = ["phi", "phi_inverse", "cycle_to_perm", "cln_phi", "is_in_E", "iota"]


def _require_cycle(c: Permutation) -> None:
    if not is_n_cycle(c):
        raise ValueError(f"{c} is not an {c.n}-cycle")


def phi(p: Permutation) -> Permutation:
    """
    Reverse every cycle of the standard cycle decomposition and concatenate.

    >>> str(phi(Permutation.from_cycles([(1, 5, 2, 8), (3, 6, 7), (4, 9)])))
    '8,2,5,1,7,6,3,9,4'
    """
    scd = standard_cycle_decomposition(p)
    return Permutation(tuple(v for cycle in scd.cycles for v in reversed(cycle)))


def phi_inverse(q: Permutation) -> Permutation:
    """Cut ``q`` after each successive minimum of the unused values and reverse the segments."""
    values = q.values
    used = [False] * (q.n + 2)
    smallest = 1  # smallest value not yet consumed
    cycles = []
    start = 0
    for k, v in enumerate(values):
        used[v] = True
        if v == smallest:
            cycles.append(tuple(reversed(values[start:k + 1])))
            start = k + 1
            while used[smallest]:
                smallest += 1
    return CycleDecomposition(tuple(cycles)).to_permutation()


def cycle_to_perm(c: Permutation) -> Permutation:
    """``p(i) = c^{n+1-i}(1) - 1`` for an (n+1)-cycle ``c``."""
    _require_cycle(c)
    m = c.n
    orbit = [1]  # orbit[k] = c^k(1)
    for _ in range(m - 1):
        orbit.append(c(orbit[-1]))
    n = m - 1
    return Permutation(tuple(orbit[n + 1 - i] - 1 for i in range(1, n + 1)))


def cln_phi(c: Permutation) -> Permutation:
    """Read ``n+1 -> a_1 -> ... -> a_n -> n+1`` off the cycle as ``(a_1, ..., a_n)``."""
    _require_cycle(c)
    m = c.n
    out = []
    k = c(m)
    while k != m:
        out.append(k)
        k = c(k)
    return Permutation(tuple(out))


def is_in_E(c: Permutation) -> bool:
    """True iff ``c`` has stretching pairs and every one of them is exceptional."""
    _require_cycle(c)
    pairs = stretching_pairs(c)
    return bool(pairs) and all(exceptional for _, _, exceptional in pairs)


def iota(c: Permutation) -> Permutation:
    """
    Send ``c`` in E_{n+1} to an (n+2)-cycle on ``{0, ..., n+1}`` by
    ``p(0) = n+1``, ``p(j0) = 0`` where ``c(j0) = n+1``, and ``p(i) = c(i)``
    elsewhere. The result is shifted up by one onto ``{1, ..., n+2}``.
    """
    if not is_in_E(c):
        raise ValueError(f"{c} has no stretching pair or a typical one")
    top = c.n  # n + 1
    j0 = c.inverse()(top)
    images = {0: top}
    for i in range(1, top + 1):
        images[i] = 0 if i == j0 else c(i)
    return Permutation(tuple(images[i] + 1 for i in range(top + 1)))
