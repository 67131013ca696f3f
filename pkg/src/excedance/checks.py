"""
Exhaustive and sampled invariant suites.

Each suite returns a list of :class:`PropertyResult`; the ``check`` command
serialises them and the test-suite asserts on them.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from . import asymptotics as asy
from .bijections import cln_phi, cycle_to_perm, iota, is_in_E, phi, phi_inverse
from .counting import (
    count_alpha_bruteforce,
    count_block_word,
    count_by_word_bruteforce,
    count_cstar,
    count_cstar_bruteforce,
    factorial,
    word_distribution,
)
from .permutation import (
    Permutation,
    all_cycles,
    all_permutations,
    avoids_pattern_21_34,
    avoids_pattern_34_21,
    block_word,
    descent_bottoms,
    excedance_set,
    has_stretching_pair,
    is_n_cycle,
    stretching_pairs,
    stretching_pairs_bruteforce,
)
from .series import coeff_to_count, egf_coefficients

__all__ = ["PropertyResult", "SUITES", "run_suite", "sample_directions"]


@dataclass
class PropertyResult:
    name: str
    instances: int
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return asdict(self)


def _all_hold(name, items, predicate) -> PropertyResult:
    count = 0
    for item in items:
        count += 1
        if not predicate(item):
            return PropertyResult(name, count, False, f"fails at {item}")
    return PropertyResult(name, count, True)


def _prefix(k: int) -> frozenset[int]:
    return frozenset(range(1, k + 1))


# -- bijections -------------------------------------------------------------

def _phi_roundtrip(n_max):
    def perms():
        for n in range(1, n_max + 1):
            yield from all_permutations(n)

    return _all_hold(
        "phi: Exc(p) = DesBot(phi(p)) and phi_inverse(phi(p)) = p",
        perms(),
        lambda p: excedance_set(p) == descent_bottoms(phi(p)) and phi_inverse(phi(p)) == p,
    )


def _phi_example():
    p = Permutation.from_cycles([(1, 5, 2, 8), (3, 6, 7), (4, 9)])
    q = phi(p)
    ok = q.values == (8, 2, 5, 1, 7, 6, 3, 9, 4) and phi_inverse(q) == p
    return PropertyResult("phi: (1 5 2 8)(3 6 7)(4 9) -> 8,2,5,1,7,6,3,9,4", 1, ok)


def _cycle_to_perm_bijective(m_max):
    count, ok = 0, True
    for m in range(2, m_max + 1):
        n = m - 1
        images = set()
        for c in all_cycles(m):
            count += 1
            p = cycle_to_perm(c)
            images.add(p.values)
            exc, db = excedance_set(c), descent_bottoms(p)
            for ell in range(1, n + 1):
                if (exc == _prefix(ell)) != (db == _prefix(ell - 1)):
                    return PropertyResult("F: Exc(c) = [l] iff DesBot(F(c)) = [l-1]", count, False, f"fails at {c}")
        ok = ok and len(images) == factorial(n)
    return PropertyResult("F: bijection C_{n+1} -> S_n with Exc = [l] iff DesBot = [l-1]", count, ok)


def _cln_phi_avoidance(m_max):
    count, ok, detail = 0, True, ""
    for m in range(2, m_max + 1):
        n = m - 1
        images, members = set(), 0
        for c in all_cycles(m):
            count += 1
            p = cln_phi(c)
            images.add(p.values)
            in_union = not has_stretching_pair(c) or is_in_E(c)
            members += in_union
            if in_union != (avoids_pattern_21_34(p) and avoids_pattern_34_21(p)):
                return PropertyResult("phi_cln: c in C* u E iff image avoids both patterns", count, False, f"fails at {c}")
        if len(images) != factorial(n) or members != count_alpha_bruteforce(n):
            ok, detail = False, f"counting identity fails at n = {n}"
    return PropertyResult("phi_cln: bijection, c in C* u E iff image avoids both patterns", count, ok, detail)


def _iota_injective(m_max):
    count, ok = 0, True
    for m in range(2, m_max + 1):
        images = set()
        for c in all_cycles(m):
            if not is_in_E(c):
                continue
            count += 1
            q = iota(c)
            ok = ok and q.n == m + 1 and not has_stretching_pair(q) and is_n_cycle(q)
            images.add(q.values)
        ok = ok and len(images) == sum(1 for c in all_cycles(m) if is_in_E(c))
    return PropertyResult("iota: injective into stretching-pair-free cycles", count, ok)


def _stretching_scan(n_max):
    def perms():
        for n in range(1, n_max + 1):
            yield from all_permutations(n)

    def agree(p):
        fast = [(i, j) for i, j, _ in stretching_pairs(p)]
        slow = stretching_pairs_bruteforce(p)
        return sorted(fast) == slow and has_stretching_pair(p) == bool(slow)

    return _all_hold("stretching pairs: linear criterion = quadratic scan", perms(), agree)


def _fixed_point_free(m_max):
    def perms():
        for m in range(2, m_max + 1):
            for p in all_permutations(m):
                if all(v != i for i, v in enumerate(p.values, 1)):
                    yield p

    def holds(p):
        exc = excedance_set(p)
        prefix = any(exc == _prefix(ell) for ell in range(1, p.n))
        return (not has_stretching_pair(p)) == prefix

    return _all_hold("fixed-point-free: no stretching pair iff Exc = [l]", perms(), holds)


def bijections_suite(max_n: int = 7) -> list[PropertyResult]:
    return [
        _phi_example(),
        _phi_roundtrip(max_n),
        _cycle_to_perm_bijective(max_n),
        _cln_phi_avoidance(max_n),
        _iota_injective(max_n),
        _stretching_scan(max_n),
        _fixed_point_free(max_n),
    ]


# -- counting ---------------------------------------------------------------

def counting_suite(max_n: int = 7) -> list[PropertyResult]:
    results = []
    results.append(_all_hold(
        "sum over words of [w] = n!",
        range(1, max_n + 1),
        lambda n: sum(word_distribution(n).values()) == factorial(n),
    ))
    pairs = [(r, n - 1 - r) for n in range(1, max_n + 1) for r in range(n)]
    results.append(_all_hold(
        "[b^r a^s]: brute force = Stirling closed form",
        pairs,
        lambda rs: count_by_word_bruteforce(block_word(*rs)) == count_block_word(*rs),
    ))
    results.append(PropertyResult(
        "spot values [b1 a1] = 3, [b1 a2] = 7, [b2 a2] = 31", 3,
        (count_block_word(1, 1), count_block_word(1, 2), count_block_word(2, 2)) == (3, 7, 31),
    ))
    results.append(_all_hold(
        "|C*_m| summation = enumeration",
        range(2, max_n + 2),
        lambda m: count_cstar(m) == count_cstar_bruteforce(m),
    ))

    def sandwich(n):
        c1, c2 = count_cstar_bruteforce(n + 1), count_cstar_bruteforce(n + 2)
        alpha = count_alpha_bruteforce(n)
        return c1 <= alpha <= c1 + c2 <= 2 * c2

    results.append(_all_hold("|C*_{n+1}| <= alpha_n <= |C*_{n+1}| + |C*_{n+2}| <= 2|C*_{n+2}|",
                             range(1, max_n + 1), sandwich))
    results.append(_all_hold(
        "[b^M a^N] = [b^N a^M]",
        [(M, N) for M in range(21) for N in range(21)],
        lambda mn: count_block_word(*mn) == count_block_word(mn[1], mn[0]),
    ))

    def balanced_max(n):
        vals = [count_block_word(k, n - 1 - k) for k in range(n)]
        best = max(vals)
        return {k for k, v in enumerate(vals) if v == best} <= {(n - 1) // 2, n // 2}

    results.append(_all_hold("argmax_k [b^k a^{n-1-k}] is balanced", range(1, 31), balanced_max))
    return results


# -- series -----------------------------------------------------------------

def series_suite(max_n: int = 12) -> list[PropertyResult]:
    table = egf_coefficients(max_n, max_n)
    results = [
        PropertyResult(
            "A[0,0] = 1, A[0,s] = 0, A[r,0] = 1/r!",
            2 * max_n + 1,
            table[0, 0] == 1
            and all(table[0, s] == 0 for s in range(1, max_n + 1))
            and all(table[r, 0] == Fraction(1, math.factorial(r)) for r in range(max_n + 1)),
        ),
    ]
    pairs = [(r, s) for r in range(1, max_n + 1) for s in range(max_n + 1 - r)]
    results.append(_all_hold(
        "r! s! A[r,s] = [b^{r-1} a^s] (Stirling closed form)",
        pairs,
        lambda rs: coeff_to_count(rs[0], rs[1], table) == count_block_word(rs[0] - 1, rs[1]),
    ))
    return results


# -- minimality and analytic identities -------------------------------------

def sample_directions(count: int = 100, seed: int = 0, r_max: int = 10_000) -> list[tuple[int, int]]:
    """Random in-sector directions with ``r, s <= r_max``."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        r = int(rng.integers(1, r_max + 1))
        ratio = rng.uniform(asy.EPSILON_0, 1.0 / asy.EPSILON_0)
        s = int(round(r * ratio))
        if 1 <= s <= r_max and asy.in_sector(r, s):
            out.append((r, s))
    return out


def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def minimality_suite(max_n: int = 100) -> list[PropertyResult]:
    points = [asy.saddle_point(r, s) for r, s in sample_directions(max_n)]
    results = [
        _all_hold("variety residual <= 1e-10", points,
                  lambda sp: abs(sp.variety_residual) <= 1e-10
                  and abs(sp.y + math.log1p(-math.exp(-sp.x))) <= 1e-10),
        _all_hold("direction condition r y e^-y = s x e^-x to 1e-8", points,
                  lambda sp: sp.direction_residual() <= 1e-8),
        _all_hold("sector implies saddle in (0,1)^2", points,
                  lambda sp: 0 < sp.x < 1 and 0 < sp.y < 1),
        _all_hold("P > 0 and Q > 0 at saddle points", points,
                  lambda sp: asy.p_positivity(sp.x, sp.y) > 0 and asy.q_specialized(sp.x, sp.y) > 0),
        _all_hold("general Q = specialised Q to 1e-10", points,
                  lambda sp: _rel(asy.q_general(sp.x, sp.y), asy.q_specialized(sp.x, sp.y)) <= 1e-10),
    ]
    off_diag = (0.6, -math.log1p(-math.exp(-0.6)))
    strict = [(asy.LOG2, asy.LOG2), off_diag] + [(sp.x, sp.y) for sp in points[:3]]
    results.append(_all_hold("strict minimality on sampled tori", strict,
                             lambda ab: asy.strict_minimality_check(*ab, samples=10_000)))
    return results


# -- monotonicity of f ------------------------------------------------------

def monotone_suite(max_n: int = 10_000) -> list[PropertyResult]:
    grid = np.geomspace(1e-4, 1e4, max_n)
    values = np.array([asy.f(float(t)) for t in grid])
    results = [
        PropertyResult("f strictly decreasing on geometric grid [1e-4, 1e4]", len(grid),
                       bool(np.all(np.diff(values) < 0)) and bool(np.all(values > 0))),
    ]
    sample = grid[:: max(1, len(grid) // 200)]
    results.append(_all_hold(
        "f_inverse(f(t)) = t to 1e-10 relative", sample,
        lambda t: _rel(asy.f_inverse(asy.f(float(t))), float(t)) <= 1e-10,
    ))
    targets = np.geomspace(1e-3, 7e2, 200)
    results.append(_all_hold(
        "|f(f_inverse(v)) - v| <= 1e-12 max(1, v)", targets,
        lambda v: abs(asy.f(asy.f_inverse(float(v))) - v) <= 1e-12 * max(1.0, float(v)),
    ))
    return results


SUITES: dict[str, Callable[[int], list[PropertyResult]]] = {
    "bijections": bijections_suite,
    "counting": counting_suite,
    "minimality": minimality_suite,
    "series": series_suite,
    "monotone": monotone_suite,
}

DEFAULT_MAX_N = {"bijections": 7, "counting": 7, "minimality": 100, "series": 12, "monotone": 10_000}


def run_suite(name: str, max_n: int | None = None) -> list[PropertyResult]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](DEFAULT_MAX_N[name] if max_n is None else max_n)
