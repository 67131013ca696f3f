"""
Exact bivariate power-series expansion of

    F(x, y) = e^{-y} / (e^{-x} + e^{-y} - 1) = sum A[r, s] x^r y^s

by truncated division in rationals. ``r! s! A[r, s]`` counts ``b^{r-1} a^s``,
which gives an oracle for block-word counts sharing no code with the Stirling
closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

__all__ = ["CoeffTable", "egf_coefficients", "coeff_to_count"]


@dataclass(frozen=True)
class CoeffTable:
    max_r: int
    max_s: int
    entries: tuple[tuple[Fraction, ...], ...]  # entries[r][s]

    def __getitem__(self, rs: tuple[int, int]) -> Fraction:
        r, s = rs
        if not (0 <= r <= self.max_r and 0 <= s <= self.max_s):
            raise IndexError(f"({r}, {s}) outside table of size ({self.max_r}, {self.max_s})")
        return self.entries[r][s]


def _exp_neg(k: int) -> Fraction:
    # k-th Taylor coefficient of e^{-t}
    return Fraction((-1) ** k, factorial(k))


def egf_coefficients(max_r: int, max_s: int) -> CoeffTable:
    if max_r < 0 or max_s < 0:
        raise ValueError("table bounds must be non-negative")
    # H = e^{-x} + e^{-y} - 1 has H[0,0] = 1 and no mixed terms, so
    # A[r,s] = G[r,s] - sum_{i>=1} H[i,0] A[r-i,s] - sum_{j>=1} H[0,j] A[r,s-j]
    # with G[0,s] = (-1)^s / s! and G[r,s] = 0 for r >= 1.
    hx = [_exp_neg(i) for i in range(max_r + 1)]
    hy = [_exp_neg(j) for j in range(max_s + 1)]
    A = [[Fraction(0)] * (max_s + 1) for _ in range(max_r + 1)]
    for r in range(max_r + 1):
        for s in range(max_s + 1):
            acc = hy[s] if r == 0 else Fraction(0)
            for i in range(1, r + 1):
                acc -= hx[i] * A[r - i][s]
            for j in range(1, s + 1):
                acc -= hy[j] * A[r][s - j]
            A[r][s] = acc
    return CoeffTable(max_r, max_s, tuple(tuple(row) for row in A))


def coeff_to_count(r: int, s: int, table: CoeffTable) -> int:
    """``r! s! A[r, s]``, i.e. the count of ``b^{r-1} a^s``."""
    if r < 1:
        raise ValueError("coeff_to_count needs r >= 1")
    value = factorial(r) * factorial(s) * table[r, s]
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"r! s! A[{r},{s}] = {value} is not a non-negative integer")
    return value.numerator
