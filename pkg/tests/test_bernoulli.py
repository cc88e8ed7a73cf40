from math import prod

import pytest

from todaprimes.arith import DomainError, factorize, isprime, sieve_primes
from todaprimes.bernoulli import (
    FAMILIES,
    check_family,
    check_general_conjecture,
    check_shift_lemma,
    check_t2_iff_d30,
    denominator,
    min_index,
    support,
)
from todaprimes.toda import toda_primes


def brute_support(two_m):
    return tuple(p for p in range(2, two_m + 2) if isprime(p) and two_m % (p - 1) == 0)


@pytest.mark.parametrize(
    "two_m, d",
    [(2, 6), (12, 2730), (20, 330), (60, 56786730), (220, 7590), (28, 870), (68, 30)],
)
def test_denominator_examples(two_m, d):
    assert denominator(two_m).denominator == d


def test_denominator_record():
    rec = denominator(2)
    assert rec.index == 2 and rec.support == (2, 3)
    assert denominator(28).support == (2, 3, 5, 29)
    assert denominator(68).support == (2, 3, 5)


@pytest.mark.parametrize("bad", [0, 1, 7, -4])
def test_denominator_domain(bad):
    with pytest.raises(DomainError):
        denominator(bad)


def test_support_matches_brute_force():
    for two_m in range(2, 2001, 2):
        assert support(two_m) == brute_support(two_m)


def test_denominator_invariants():
    for two_m in range(2, 10**4 + 1, 2):
        rec = denominator(two_m)
        assert {2, 3} <= set(rec.support)
        assert rec.denominator == prod(rec.support)
        assert all(isprime(p) and rec.denominator % (p * p) for p in rec.support)
        assert rec.denominator % 6 == 0


def test_min_index_examples():
    assert min_index(6, 10) == 2
    assert min_index(30, 100) == 4
    assert min_index(2730, 100) == 12
    assert min_index(7, 100) is None
    assert min_index(2730, 10) is None


def test_toda_sets_from_support():
    for n in range(1, 5001):
        from_support = {p for p in support(4 * n) if p % 2 and n % p}
        assert toda_primes(n).as_set() == from_support, n


def test_prime_denominator_trichotomy():
    for p in sieve_primes(10**5):
        if p >= 7:
            assert denominator(4 * p).denominator in (30, 30 * (2 * p + 1), 30 * (4 * p + 1)), p


def test_equal_denominators_equal_supports():
    for a in range(1, 301):
        da = denominator(4 * a)
        for b in range(2 * a, 3001, a):
            db = denominator(4 * b)
            if da.denominator == db.denominator:
                assert da.support == db.support


def test_t2_iff_d30_small():
    assert check_t2_iff_d30(30) == []
    assert len(toda_primes(17)) == 2 and denominator(68).denominator == 30
    assert len(toda_primes(7)) == 3 and denominator(28).denominator == 870


def test_t2_iff_d30_reports_violations():
    # p = 5 is the excluded exception: t(5) = 2 but D_20 = 330
    assert len(toda_primes(5)) == 2 and denominator(20).denominator == 330


@pytest.mark.parametrize("a, d, expected", FAMILIES)
def test_families(a, d, expected):
    assert denominator(4 * a).denominator == d
    assert toda_primes(a).as_set() == expected
    assert check_family(a, d, expected, 500 if a < 15 else 200) == []


def test_family_flags_wrong_expectation():
    bad = check_family(3, 2730, {5, 7}, 5)
    assert bad[0] == (1, (5, 7, 13))


def test_general_conjecture_tight_case():
    rep = check_general_conjecture(5, 11)
    assert 11 in rep.tight
    assert toda_primes(55).primes == (3, 23)
    assert denominator(220).denominator == 7590 != denominator(20).denominator


def test_general_conjecture_sweeps():
    rep = check_general_conjecture(3, 1000)
    assert rep.first_index
    assert rep.same_d_violations == () and rep.inequality_violations == ()
    rep = check_general_conjecture(1, 300)
    assert rep.base_denominator == 30 and rep.first_index
    assert min_index(30, 4) == 4


def test_general_conjecture_skips_when_not_first_index():
    # D_8 = 30 = D_4, so 4a = 8 is not the least index
    rep = check_general_conjecture(2, 50)
    assert not rep.first_index and rep.same_d_violations == ()


def test_shift_lemma_examples():
    found = check_shift_lemma(3)
    assert found[5] == (11, 31, 61)
    assert 29 in found[7]
    assert check_shift_lemma(1)[3] == (7, 13)
