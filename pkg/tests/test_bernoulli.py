"""Bernoulli values against an independent triangle-scheme oracle, the cache
file contract, and the exact identity lemmas."""

from fractions import Fraction

import pytest

from hclab.bernoulli import (
    BernoulliCache,
    bernoulli,
    check_kummer,
    check_lemma_binomial_sums,
    check_lemma_tangent_identity,
    check_lemma_weighted_sums,
    check_recurrence,
    faulhaber_sum,
    irregular_pairs,
    is_irregular_pair,
    von_staudt_denominator,
)
from hclab.errors import HypothesisViolated, IndexCeilingExceeded


def triangle_bernoulli(n: int) -> Fraction:
    """Independent oracle: the Akiyama-Tanigawa triangle (first-kind sign)."""
    if n == 1:
        return Fraction(-1, 2)
    row = [Fraction(1, j + 1) for j in range(n + 1)]
    for i in range(1, n + 1):
        row = [(j + 1) * (row[j] - row[j + 1]) for j in range(n + 1 - i)]
    return row[0]


def test_values_match_triangle_oracle(cache):
    for n in range(61):
        assert bernoulli(n, cache) == triangle_bernoulli(n)


def test_known_values(cache):
    assert bernoulli(0, cache) == 1
    assert bernoulli(1, cache) == Fraction(-1, 2)
    assert bernoulli(12, cache) == Fraction(-691, 2730)
    assert bernoulli(20, cache) == Fraction(-174611, 330)
    assert bernoulli(7, cache) == 0


def test_odd_vanish(cache):
    for n in range(3, 601, 2):
        assert bernoulli(n, cache) == 0


def test_von_staudt_denominators(cache):
    assert von_staudt_denominator(12) == 2730
    for n in range(2, 601, 2):
        assert bernoulli(n, cache).denominator == von_staudt_denominator(n)
    with pytest.raises(ValueError):
        von_staudt_denominator(3)


def test_recurrence_full_range(cache):
    for n in range(601):
        assert check_recurrence(n, cache)


def test_faulhaber_vs_brute_force(cache):
    for i in range(13):
        acc = 0
        for n in range(1, 201):
            acc += n**i
            assert faulhaber_sum(n, i, cache) == acc


def test_kummer(cache):
    assert check_kummer(2, 12, 11, cache)
    assert check_kummer(4, 14, 11, cache)
    with pytest.raises(HypothesisViolated):
        check_kummer(2, 11, 11, cache)
    with pytest.raises(HypothesisViolated):
        check_kummer(10, 20, 11, cache)


def test_binomial_sum_identities(cache):
    for k in range(1, 51):
        assert check_lemma_binomial_sums(k, cache)
        assert check_lemma_weighted_sums(k, cache)


def test_tangent_identity(cache):
    for k in range(1, 31):
        assert check_lemma_tangent_identity(k, cache)


def test_irregular_pairs_to_150(cache):
    expected = [(37, 32), (59, 44), (67, 58), (101, 68), (103, 24),
                (131, 22), (149, 130)]
    assert irregular_pairs(150, cache) == expected
    assert is_irregular_pair(691, 12, cache)
    assert not is_irregular_pair(37, 30, cache)
    assert not is_irregular_pair(5, 4, cache)  # p < 2k+3


def test_cache_file_roundtrip(tmp_path):
    path = tmp_path / "bern.cache"
    c1 = BernoulliCache(path=str(path))
    v = c1.get(20)
    text = path.read_text().splitlines()
    assert text[0] == "0 1/1"
    assert text[1] == "1 -1/2"
    assert text[3] == "3 0/1"
    assert text[20] == "20 -174611/330"
    c2 = BernoulliCache(path=str(path))
    assert c2.high_water == 20
    assert c2.get(20) == v
    # idempotence: re-asking a cached index returns the identical fraction
    assert c2.get(12) == Fraction(-691, 2730)
    assert len(path.read_text().splitlines()) == 21


def test_cache_rejects_corruption(tmp_path):
    path = tmp_path / "bad.cache"
    path.write_text("0 1/1\n1 -1/2\n2 1/5\n")
    with pytest.raises(ValueError):
        BernoulliCache(path=str(path))
    path.write_text("0 1/1\n2 1/6\n")
    with pytest.raises(ValueError):
        BernoulliCache(path=str(path))


def test_ceiling():
    c = BernoulliCache(ceiling=10)
    assert c.get(10) == Fraction(5, 66)
    with pytest.raises(IndexCeilingExceeded):
        c.get(11)
