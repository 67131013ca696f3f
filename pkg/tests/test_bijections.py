import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from excedance.bijections import cln_phi, cycle_to_perm, iota, is_in_E, phi, phi_inverse
from excedance.counting import count_alpha_bruteforce, count_cstar
from excedance.permutation import (
    Permutation,
    all_cycles,
    all_permutations,
    avoids_pattern_21_34,
    avoids_pattern_34_21,
    descent_bottoms,
    excedance_set,
    has_stretching_pair,
    is_n_cycle,
    standard_cycle_decomposition,
    stretching_pairs,
)

P = Permutation
EXAMPLE = P.from_cycles([(1, 5, 2, 8), (3, 6, 7), (4, 9)])


def _prefix(k):
    return set(range(1, k + 1))


def test_phi_example():
    assert phi(EXAMPLE).values == (8, 2, 5, 1, 7, 6, 3, 9, 4)
    assert phi_inverse(P((8, 2, 5, 1, 7, 6, 3, 9, 4))) == EXAMPLE
    assert str(standard_cycle_decomposition(phi_inverse(P((8, 2, 5, 1, 7, 6, 3, 9, 4))))) == "(1 5 2 8)(3 6 7)(4 9)"


@pytest.mark.parametrize("n", [1, 4, 7])
def test_phi_identity(n):
    ident = P.identity(n)
    assert phi(ident) == ident
    assert phi_inverse(ident) == ident


def test_phi_small():
    assert phi(P((2, 1, 3))) == P((2, 1, 3))


@pytest.mark.parametrize("n", range(1, 8))
def test_phi_is_bijection_with_exc_to_desbot(n):
    images = set()
    for p in all_permutations(n):
        q = phi(p)
        images.add(q.values)
        assert excedance_set(p) == descent_bottoms(q)
        assert phi_inverse(q) == p
    assert len(images) == math.factorial(n)


@given(st.integers(1, 12).flatmap(lambda n: st.permutations(range(1, n + 1))))
def test_phi_inverse_is_left_and_right_inverse(values):
    q = P(tuple(values))
    assert phi(phi_inverse(q)) == q
    assert phi_inverse(phi(q)) == q


@pytest.mark.parametrize("c, expected", [((2, 3, 1), (2, 1)), ((3, 1, 2), (1, 2)), ((2, 1), (1,))])
def test_cycle_to_perm(c, expected):
    assert cycle_to_perm(P(c)).values == expected


def test_cycle_to_perm_definition_by_composition():
    # p(i) = c^{n+1-i}(1) - 1, computed by repeated application
    for c in all_cycles(6):
        n = c.n - 1
        expected = []
        for i in range(1, n + 1):
            k = 1
            for _ in range(n + 1 - i):
                k = c(k)
            expected.append(k - 1)
        assert cycle_to_perm(c).values == tuple(expected)


@pytest.mark.parametrize("m", range(2, 9))
def test_cycle_to_perm_bijection_and_prefix_property(m):
    n = m - 1
    images = set()
    for c in all_cycles(m):
        p = cycle_to_perm(c)
        images.add(p.values)
        exc, db = excedance_set(c), descent_bottoms(p)
        for ell in range(1, n + 1):
            assert (exc == _prefix(ell)) == (db == _prefix(ell - 1))
    assert len(images) == math.factorial(n)


@pytest.mark.parametrize("c, expected", [((2, 3, 1), (1, 2)), ((3, 1, 2), (2, 1)), ((2, 1), (1,))])
def test_cln_phi(c, expected):
    assert cln_phi(P(c)).values == expected


@pytest.mark.parametrize("f", [cycle_to_perm, cln_phi, is_in_E])
def test_cycle_maps_reject_non_cycles(f):
    with pytest.raises(ValueError):
        f(P((1, 2, 3)))
    with pytest.raises(ValueError):
        f(P((2, 1, 4, 3)))


@pytest.mark.parametrize("n", range(1, 8))
def test_cln_phi_sends_cstar_and_E_onto_avoiders(n):
    images = set()
    e_count = 0
    for c in all_cycles(n + 1):
        p = cln_phi(c)
        images.add(p.values)
        e_count += is_in_E(c)
        assert (not has_stretching_pair(c) or is_in_E(c)) == (avoids_pattern_21_34(p) and avoids_pattern_34_21(p))
    assert len(images) == math.factorial(n)
    assert count_alpha_bruteforce(n) == e_count + count_cstar(n + 1)


def test_E_and_cstar_disjoint_at_n_3():
    e4 = [c for c in all_cycles(4) if is_in_E(c)]
    cstar4 = [c for c in all_cycles(4) if not has_stretching_pair(c)]
    assert len(e4) == 1 and len(cstar4) == 5
    assert not set(e4) & set(cstar4)
    assert count_alpha_bruteforce(3) == 6


@pytest.mark.parametrize("c, expected", [((3, 1, 4, 2), True), ((2, 3, 4, 1), False)])
def test_is_in_E(c, expected):
    assert is_in_E(P(c)) is expected


def test_is_in_E_rejects_typical_pairs():
    # 1 -> 3 -> 4 -> 5 -> 2 -> 1: pair (2, 3) is typical, (2, 4) exceptional
    c = P((3, 1, 4, 5, 2))
    assert stretching_pairs(c) == [(2, 3, False), (2, 4, True)]
    assert not is_in_E(c)


def test_iota_example():
    q = iota(P((3, 1, 4, 2)))
    assert q.values == (5, 4, 2, 1, 3)
    assert is_n_cycle(q) and not has_stretching_pair(q)


def test_iota_rejects_outside_E():
    with pytest.raises(ValueError):
        iota(P((2, 3, 4, 1)))


@pytest.mark.parametrize("m", range(2, 8))
def test_iota_injective_into_cstar(m):
    sources = [c for c in all_cycles(m) if is_in_E(c)]
    images = [iota(c) for c in sources]
    assert len(set(images)) == len(images)
    for q in images:
        assert q.n == m + 1 and is_n_cycle(q) and not has_stretching_pair(q)
    assert len(sources) <= count_cstar(m + 1)
