"""Toda primes, Bernoulli denominators and germane primes."""
from .arith import Factorization, divisors, factorize, is_prime, isprime, sieve_primes
from .toda import TodaSet, candidate_set, toda_count, toda_primes, toda_primes_oracle

__version__ = "0.1.0"
