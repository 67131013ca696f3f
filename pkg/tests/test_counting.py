import itertools
import math
from concurrent.futures import ThreadPoolExecutor

import pytest

from excedance.counting import (
    BruteForceLimitError,
    count_alpha_bruteforce,
    count_block_word,
    count_by_word_bruteforce,
    count_cstar,
    count_cstar_bruteforce,
    factorial,
    stirling2,
    word_distribution,
)
from excedance.permutation import block_word


def _stirling_by_surjections(n, k):
    # independent: inclusion-exclusion count of surjections / k!
    return sum((-1) ** j * math.comb(k, j) * (k - j) ** n for j in range(k + 1)) // math.factorial(k)


@pytest.mark.parametrize("word, expected", [("ba", 3), ("ab", 1), ("", 1), ("aa", 1), ("bb", 1)])
def test_count_by_word(word, expected):
    assert count_by_word_bruteforce(word) == expected


def test_count_by_word_limit():
    with pytest.raises(BruteForceLimitError):
        count_by_word_bruteforce("a" * 11)
    with pytest.raises(BruteForceLimitError):
        count_by_word_bruteforce("ab", limit=2)


def test_count_by_word_rejects_other_letters():
    with pytest.raises(ValueError):
        count_by_word_bruteforce("abc")


@pytest.mark.parametrize("n", range(1, 9))
def test_words_partition_s_n(n):
    dist = word_distribution(n)
    assert sum(dist.values()) == math.factorial(n)
    assert all(len(w) == n - 1 for w in dist)


def test_stirling_values():
    assert [stirling2(n, n) for n in range(8)] == [1] * 8
    assert stirling2(3, 2) == 3
    assert stirling2(4, 2) == 7
    assert stirling2(5, 0) == 0
    assert stirling2(0, 0) == 1
    assert stirling2(2, 5) == 0


def test_stirling_against_surjection_formula():
    for n in range(0, 25):
        for k in range(0, n + 1):
            assert stirling2(n, k) == _stirling_by_surjections(n, k)


def test_tables_under_concurrent_growth():
    def work(n):
        return [stirling2(n, k) for k in range(n + 1)], factorial(n)

    with ThreadPoolExecutor(8) as pool:
        results = list(pool.map(work, range(300, 0, -7)))
    for n, (row, fact) in zip(range(300, 0, -7), results):
        assert fact == math.factorial(n)
        assert row[n] == 1 and row[1] == (1 if n else 0)


@pytest.mark.parametrize("M, N, expected", [(0, 0, 1), (1, 1, 3), (1, 2, 7), (2, 2, 31)])
def test_block_word_values(M, N, expected):
    assert count_block_word(M, N) == expected


def test_block_word_symmetry():
    for M, N in itertools.product(range(21), repeat=2):
        assert count_block_word(M, N) == count_block_word(N, M)


@pytest.mark.parametrize("n", range(1, 9))
def test_block_word_formula_matches_brute_force(n):
    for r in range(n):
        s = n - 1 - r
        assert count_block_word(r, s) == count_by_word_bruteforce(block_word(r, s))


def test_balanced_block_word_is_maximal():
    for n in range(1, 31):
        vals = [count_block_word(k, n - 1 - k) for k in range(n)]
        argmax = {k for k, v in enumerate(vals) if v == max(vals)}
        assert argmax <= {(n - 1) // 2, n // 2}


@pytest.mark.parametrize("m, expected", [(2, 1), (3, 2), (4, 5), (5, 16), (6, 63), (7, 294), (8, 1585)])
def test_cstar(m, expected):
    assert count_cstar(m) == expected
    assert count_cstar_bruteforce(m) == expected


def test_cstar_five_term_by_term():
    assert [count_block_word(k, 3 - k) for k in range(4)] == [1, 7, 7, 1]


@pytest.mark.parametrize("n, expected", [(1, 1), (3, 6), (4, 22)])
def test_alpha(n, expected):
    assert count_alpha_bruteforce(n) == expected


@pytest.mark.parametrize("n", range(1, 8))
def test_alpha_sandwich(n):
    c1, c2 = count_cstar(n + 1), count_cstar(n + 2)
    alpha = count_alpha_bruteforce(n)
    assert c1 <= alpha <= c1 + c2 <= 2 * c2


def test_alpha_sandwich_instance():
    assert (count_cstar(4), count_alpha_bruteforce(3), count_cstar(4) + count_cstar(5)) == (5, 6, 21)


def test_large_counts_exact():
    # the balanced count for n = 200 is far beyond double range
    c = count_block_word(99, 100)
    assert c > 10 ** 300
    assert count_block_word(100, 99) == c
