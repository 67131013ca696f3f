"""
Permutations of ``[n] = {1, ..., n}`` in one-line notation and the
per-permutation statistics used throughout the package.

Positions and values are 1-based everywhere: ``p(i)`` is the image of ``i``.

>>> p = Permutation.parse("3,4,2,1")
>>> excedance_word(p)
'bba'
>>> str(standard_cycle_decomposition(p))
'(1 3 2 4)'
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

__all__ = [
    "Permutation", "CycleDecomposition", "ExcedanceWord",
    "all_permutations", "all_cycles", "validate_word", "block_word",
    "excedance_set", "excedance_word", "descent_bottoms",
    "has_stretching_pair", "stretching_pairs", "stretching_pairs_bruteforce",
    "avoids_pattern_21_34", "avoids_pattern_34_21",
    "standard_cycle_decomposition", "is_n_cycle",
]

# a word over {a, b}; letter i is 'b' iff i is an excedance
ExcedanceWord = str


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{1, ..., n}`` stored as the tuple ``(p(1), ..., p(n))``."""

    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if not values:
            raise ValueError("a permutation needs n >= 1")
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError(f"{values} is not a rearrangement of 1..{len(values)}")
        object.__setattr__(self, "values", values)

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Read comma-separated one-line notation such as ``"2,1,4,3"``."""
        parts = [t.strip() for t in text.strip().strip("()").split(",")]
        try:
            return cls(tuple(int(t) for t in parts if t))
        except ValueError as exc:
            raise ValueError(f"cannot parse permutation {text!r}: {exc}") from None

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], n: int | None = None) -> Permutation:
        """Build a permutation from cycle notation; omitted points are fixed."""
        if n is None:
            n = max((max(c) for c in cycles if c), default=0)
        images = list(range(n + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for k, v in enumerate(cycle):
                if v in seen or not 1 <= v <= n:
                    raise ValueError(f"invalid cycle entry {v}")
                seen.add(v)
                images[v] = cycle[(k + 1) % len(cycle)]
        return cls(tuple(images[1:]))

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __str__(self) -> str:
        return ",".join(map(str, self.values))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, v in enumerate(self.values, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))


@dataclass(frozen=True)
class CycleDecomposition:
    """Cycles written smallest-entry-first, ordered by their first entries."""

    cycles: tuple[tuple[int, ...], ...]

    def __str__(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles)

    def __len__(self) -> int:
        return len(self.cycles)

    def to_permutation(self) -> Permutation:
        n = sum(len(c) for c in self.cycles)
        return Permutation.from_cycles(self.cycles, n)


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of ``S_n`` in lexicographic order."""
    for values in itertools.permutations(range(1, n + 1)):
        yield Permutation(values)


def all_cycles(m: int) -> Iterator[Permutation]:
    """All ``(m-1)!`` m-cycles on ``{1, ..., m}``."""
    if m == 1:
        yield Permutation((1,))
        return
    for rest in itertools.permutations(range(2, m + 1)):
        yield Permutation.from_cycles([(1,) + rest], m)


def validate_word(word: str) -> ExcedanceWord:
    if any(c not in "ab" for c in word):
        raise ValueError(f"excedance words use only 'a' and 'b', got {word!r}")
    return word


def block_word(r: int, s: int) -> ExcedanceWord:
    """The word ``b^r a^s``."""
    if r < 0 or s < 0:
        raise ValueError("block exponents must be non-negative")
    return "b" * r + "a" * s


def excedance_set(p: Permutation) -> frozenset[int]:
    return frozenset(i for i, v in enumerate(p.values[:-1], start=1) if v > i)


def excedance_word(p: Permutation) -> ExcedanceWord:
    return "".join("b" if v > i else "a" for i, v in enumerate(p.values[:-1], start=1))


def descent_bottoms(p: Permutation) -> frozenset[int]:
    v = p.values
    return frozenset(v[k] for k in range(1, len(v)) if v[k] < v[k - 1])


def has_stretching_pair(p: Permutation) -> bool:
    # some deficient position precedes some excedance position
    # iff the first deficient position precedes the last excedance position
    first_deficient = next((i for i, v in enumerate(p.values, 1) if v < i), None)
    if first_deficient is None:
        return False
    last_excedance = max((i for i, v in enumerate(p.values, 1) if v > i), default=0)
    return first_deficient < last_excedance


def stretching_pairs(p: Permutation) -> list[tuple[int, int, bool]]:
    """
    All stretching pairs ``p(i) < i < j < p(j)`` as ``(i, j, exceptional)``.

    A pair is exceptional when ``p(j)`` is the largest element ``n`` of the
    ground set, and typical otherwise.
    """
    n = p.n
    deficient = [i for i, v in enumerate(p.values, 1) if v < i]
    excedant = [j for j, v in enumerate(p.values, 1) if v > j]
    return [(i, j, p(j) == n) for i in deficient for j in excedant if i < j]


def stretching_pairs_bruteforce(p: Permutation) -> list[tuple[int, int]]:
    """Quadratic scan straight from the definition; used as a test oracle."""
    n = p.n
    return [
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if p(i) < i < j < p(j)
    ]


def _avoids_vincular(values: tuple[int, ...], pattern: tuple[int, int, int, int]) -> bool:
    n = len(values)
    for i in range(n - 3):
        for j in range(i + 2, n - 1):
            quad = (values[i], values[i + 1], values[j], values[j + 1])
            ranks = tuple(sorted(quad).index(q) + 1 for q in quad)
            if ranks == pattern:
                return False
    return True


def avoids_pattern_21_34(p: Permutation) -> bool:
    """True iff no ``i + 1 < j`` makes ``p(i) p(i+1) p(j) p(j+1)`` order-isomorphic to 2134."""
    return _avoids_vincular(p.values, (2, 1, 3, 4))


def avoids_pattern_34_21(p: Permutation) -> bool:
    return _avoids_vincular(p.values, (3, 4, 2, 1))


def standard_cycle_decomposition(p: Permutation) -> CycleDecomposition:
    seen = [False] * (p.n + 1)
    cycles = []
    for start in range(1, p.n + 1):
        if seen[start]:
            continue
        cycle = []
        k = start
        while not seen[k]:
            seen[k] = True
            cycle.append(k)
            k = p(k)
        cycles.append(tuple(cycle))
    return CycleDecomposition(tuple(cycles))


def is_n_cycle(p: Permutation) -> bool:
    k, length = p(1), 1
    while k != 1:
        k, length = p(k), length + 1
    return length == p.n
