import pytest
from hypothesis import given
from hypothesis import strategies as st

from excedance.permutation import (
    CycleDecomposition,
    Permutation,
    all_cycles,
    all_permutations,
    avoids_pattern_21_34,
    avoids_pattern_34_21,
    descent_bottoms,
    excedance_set,
    excedance_word,
    has_stretching_pair,
    is_n_cycle,
    standard_cycle_decomposition,
    stretching_pairs,
    stretching_pairs_bruteforce,
)

P = Permutation

# (1 5 2 8)(3 6 7)(4 9) in S_9
EXAMPLE = P.from_cycles([(1, 5, 2, 8), (3, 6, 7), (4, 9)])


@st.composite
def permutations(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    return P(tuple(draw(st.permutations(range(1, n + 1)))))


def test_rejects_non_permutations():
    for bad in [(), (1, 1), (0, 1), (2, 3)]:
        with pytest.raises(ValueError):
            P(bad)


def test_parse_and_print_round_trip():
    p = P.parse("2,1,4,3")
    assert p.values == (2, 1, 4, 3)
    assert str(p) == "2,1,4,3"
    assert P.parse(" 3, 1 ,2 ") == P((3, 1, 2))
    with pytest.raises(ValueError):
        P.parse("1,x")


def test_example_images():
    assert EXAMPLE.values == (5, 8, 6, 9, 2, 7, 3, 1, 4)
    assert str(standard_cycle_decomposition(EXAMPLE)) == "(1 5 2 8)(3 6 7)(4 9)"


@pytest.mark.parametrize("values, expected", [
    ((1, 2, 3), set()),
    ((2, 1, 3), {1}),
    (EXAMPLE.values, {1, 2, 3, 4, 6}),
])
def test_excedance_set(values, expected):
    assert excedance_set(P(values)) == expected


@pytest.mark.parametrize("values, expected", [
    ((1, 2, 3, 4), "aaa"),
    ((2, 1, 3), "ba"),
    ((3, 4, 2, 1), "bba"),
    ((1,), ""),
])
def test_excedance_word(values, expected):
    assert excedance_word(P(values)) == expected


@pytest.mark.parametrize("values, expected", [
    ((1, 2, 3), set()),
    ((8, 2, 5, 1, 7, 6, 3, 9, 4), {1, 2, 3, 4, 6}),
    ((2, 1), {1}),
])
def test_descent_bottoms(values, expected):
    assert descent_bottoms(P(values)) == expected


def test_last_position_never_an_excedance():
    for p in all_permutations(5):
        assert p.n not in excedance_set(p)


@given(permutations())
def test_word_matches_set(p):
    word = excedance_word(p)
    assert len(word) == p.n - 1
    assert {i for i, c in enumerate(word, 1) if c == "b"} == excedance_set(p)


@pytest.mark.parametrize("values, expected", [
    ((1, 2, 3, 4, 5), False),
    ((2, 1, 4, 3), True),
    ((3, 1, 4, 2), True),
])
def test_has_stretching_pair(values, expected):
    assert has_stretching_pair(P(values)) is expected


def test_stretching_pair_tags():
    assert stretching_pairs(P((3, 1, 4, 2))) == [(2, 3, True)]
    # 4 is the maximum of S_4, so this pair is exceptional as well
    assert stretching_pairs(P((2, 1, 4, 3))) == [(2, 3, True)]
    assert stretching_pairs(P((2, 1, 4, 3, 5))) == [(2, 3, False)]
    assert stretching_pairs(P((1, 2, 3))) == []


@pytest.mark.parametrize("n", range(1, 9))
def test_linear_stretching_criterion_matches_scan(n):
    for p in all_permutations(n):
        slow = stretching_pairs_bruteforce(p)
        assert has_stretching_pair(p) == bool(slow)
        assert sorted((i, j) for i, j, _ in stretching_pairs(p)) == slow


@pytest.mark.parametrize("m", range(2, 9))
def test_fixed_point_free_no_stretching_iff_prefix_excedances(m):
    for p in all_permutations(m):
        if any(v == i for i, v in enumerate(p.values, 1)):
            continue
        exc = excedance_set(p)
        prefix = any(exc == set(range(1, ell + 1)) for ell in range(1, m))
        assert (not has_stretching_pair(p)) == prefix


def test_patterns_short_permutations_avoid():
    for n in range(1, 4):
        for p in all_permutations(n):
            assert avoids_pattern_21_34(p) and avoids_pattern_34_21(p)


@pytest.mark.parametrize("values, avoid_2134, avoid_3421", [
    ((2, 1, 3, 4), False, True),
    ((3, 4, 2, 1), True, False),
    ((2, 1, 4, 3), True, True),
    # adjacency matters: 2,1 and 3,4 need a gap between the pairs
    ((2, 1, 5, 3, 4), False, True),
    ((5, 2, 1, 3, 4), False, True),
])
def test_patterns(values, avoid_2134, avoid_3421):
    p = P(values)
    assert avoids_pattern_21_34(p) is avoid_2134
    assert avoids_pattern_34_21(p) is avoid_3421


def test_pattern_oracle_against_subsequence_scan():
    # independent check: enumerate all position quadruples i < i+1 < j < j+1
    def oracle(values, pattern):
        n = len(values)
        for i in range(n):
            for j in range(i + 2, n - 1):
                quad = [values[i], values[i + 1], values[j], values[j + 1]]
                order = sorted(range(4), key=lambda k: quad[k])
                ranks = [0] * 4
                for rank, k in enumerate(order, 1):
                    ranks[k] = rank
                if tuple(ranks) == pattern:
                    return False
        return True

    for p in all_permutations(6):
        assert avoids_pattern_21_34(p) == oracle(p.values, (2, 1, 3, 4))
        assert avoids_pattern_34_21(p) == oracle(p.values, (3, 4, 2, 1))


def test_cycle_decomposition():
    scd = standard_cycle_decomposition(P((2, 3, 1)))
    assert scd.cycles == ((1, 2, 3),)
    assert is_n_cycle(P((2, 3, 1)))
    assert str(standard_cycle_decomposition(P((1, 2, 3)))) == "(1)(2)(3)"
    assert not is_n_cycle(P((1, 2, 3)))


@given(permutations())
def test_scd_round_trip_and_shape(p):
    scd = standard_cycle_decomposition(p)
    assert scd.to_permutation() == p
    firsts = [c[0] for c in scd.cycles]
    assert firsts == sorted(firsts)
    assert all(c[0] == min(c) for c in scd.cycles)
    assert sorted(v for c in scd.cycles for v in c) == list(range(1, p.n + 1))


def test_cycle_decomposition_from_text_values():
    scd = CycleDecomposition(((1, 5, 2, 8), (3, 6, 7), (4, 9)))
    assert scd.to_permutation() == EXAMPLE


@pytest.mark.parametrize("m, count", [(1, 1), (2, 1), (3, 2), (4, 6), (6, 120)])
def test_all_cycles(m, count):
    cycles = list(all_cycles(m))
    assert len(cycles) == count == len(set(cycles))
    assert all(is_n_cycle(c) for c in cycles)


@given(permutations())
def test_inverse(p):
    q = p.inverse()
    assert all(q(p(i)) == i for i in range(1, p.n + 1))
