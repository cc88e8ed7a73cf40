import random
from math import gcd, lcm, prod

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from todaprimes.arith import (
    DomainError,
    Factorization,
    FactorizationError,
    ResourceLimitError,
    divisors,
    factorize,
    first_primes,
    is_prime,
    isprime,
    isprime_array,
    sieve_primes,
)

from conftest import trial_division_isprime


def test_sieve_small():
    assert sieve_primes(10) == [2, 3, 5, 7]
    assert sieve_primes(1) == []
    assert sieve_primes(0) == []
    assert len(sieve_primes(100)) == 25


def test_sieve_cap():
    with pytest.raises(ResourceLimitError):
        sieve_primes(10**12)
    with pytest.raises(DomainError):
        sieve_primes(-1)


def test_sieve_matches_trial_division():
    assert sieve_primes(5000) == [n for n in range(5001) if trial_division_isprime(n)]


def test_first_primes():
    assert first_primes(5) == [2, 3, 5, 7, 11]
    assert first_primes(3, skip_two=True) == [3, 5, 7]
    assert len(first_primes(10_000)) == 10_000


def test_is_prime_examples():
    assert is_prime(2).prime
    assert not is_prime(1)
    assert not is_prime(0)
    assert bool(is_prime(56786729)) == trial_division_isprime(56786729)


def test_isprime_agrees_with_sieve():
    primes = set(sieve_primes(10**5))
    assert all(isprime(n) == (n in primes) for n in range(10**5 + 1))
    assert all(bool(is_prime(n)) == (n in primes) for n in range(0, 10**5 + 1, 7))


@pytest.mark.parametrize(
    "n, expected",
    [
        (2**61 - 1, True),
        (2**64 - 59, True),  # largest prime below 2**64
        (3215031751, False),  # strong pseudoprime to bases 2, 3, 5, 7
        (3825123056546413051, False),  # spsp to bases up to 23
        (318665857834031151167461, False),  # spsp to bases up to 37
        ((2**61 - 1) * (2**31 - 1), False),
    ],
)
def test_is_prime_hard_cases(n, expected):
    res = is_prime(n)
    assert res.prime is expected
    assert res.deterministic


def test_is_prime_large_is_flagged_probabilistic():
    m127 = 2**127 - 1
    res = is_prime(m127)
    assert res.prime and not res.deterministic
    assert res.error_exponent >= 128
    # composites are always proved composite
    res = is_prime(m127 * (2**89 - 1))
    assert not res.prime and res.deterministic


def test_isprime_array_matches_scalar():
    rng = np.random.default_rng(7)
    values = rng.integers(0, 2**32, 20_000, dtype=np.uint64)
    got = isprime_array(values)
    assert got.tolist() == [isprime(int(v)) for v in values]
    assert isprime_array([2, 4, 4759123141, 2**61 - 1]).tolist() == [True, False, False, True]


def test_divisors_examples():
    assert divisors(6) == [1, 2, 3, 6]
    assert divisors(1) == [1]
    assert len(divisors(2730)) == 32
    with pytest.raises(DomainError):
        divisors(0)


def test_divisors_brute_force():
    for n in range(1, 10**4 + 1):
        assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]


def test_factorize_examples():
    assert factorize(1).factors == ()
    assert factorize(2730).factors == ((2, 1), (3, 1), (5, 1), (7, 1), (13, 1))
    assert factorize(105).primes == (3, 5, 7)
    with pytest.raises(DomainError):
        factorize(0)


def test_factorization_invariants():
    f = factorize(2**5 * 3**2 * 1000003)
    assert f.omega() == 3
    assert not f.squarefree()
    assert f.tau() == len(f.divisors()) == 6 * 3 * 2
    assert factorize(30).squarefree()
    assert Factorization.from_primes([13, 3, 5]).factors == ((3, 1), (5, 1), (13, 1))
    assert Factorization.from_primes([3, 5]).times(3).n == 45
    with pytest.raises(DomainError):
        Factorization(10, ((5, 1), (2, 1)))
    with pytest.raises(DomainError):
        Factorization(11, ((2, 1), (5, 1)))


def test_factorize_random_roundtrip():
    rng = random.Random(20240601)
    for _ in range(10**4):
        n = rng.randint(1, 10**12)
        f = factorize(n)
        assert prod(p**e for p, e in f.factors) == n
        assert all(isprime(p) for p in f.primes)


def test_factorize_beyond_trial_division():
    p, q = 1000000007, 998244353
    assert factorize(p * q).primes == (q, p)
    assert factorize(10000019 * 1000000007 * 101).primes == (101, 10000019, 1000000007)
    big = 1000000000039 * 1000000000061 * 2**2
    assert factorize(big).factors == ((2, 2), (1000000000039, 1), (1000000000061, 1))


def test_factorize_effort_cap():
    # two 64-bit primes: far beyond a tiny rho budget
    n = (2**64 - 59) * (2**63 - 25)
    with pytest.raises(FactorizationError):
        factorize(n, effort=100)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 10**30), st.integers(1, 10**30))
def test_gcd_lcm(a, b):
    assert gcd(a, b) * lcm(a, b) == a * b


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**40))
def test_decimal_roundtrip(n):
    assert int(str(n)) == n
