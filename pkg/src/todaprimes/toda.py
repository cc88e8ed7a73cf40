"""Toda primes.

An odd prime p is a Toda prime of n when ``p - 1`` divides ``4n`` and p is
coprime to the cofactor ``4n / (p - 1)``.  Writing ``p = 2d + 1``, the
first condition says d divides 2n, so T(n) is found by walking the divisors
of 2n and keeping the primes ``2d + 1`` that do not divide n.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterator

from .arith import DomainError, Factorization, factorize, isprime, prime_table, sieve_primes

__all__ = [
    "TodaSet",
    "OracleBoundError",
    "toda_primes",
    "toda_count",
    "candidate_set",
    "toda_primes_oracle",
    "cached_toda_primes",
    "disjoint_from_prime_factors",
    "product_contains_union",
    "prime_multiple_contains",
    "divisor_multiple_contains",
    "double_contains",
    "small_prime_membership",
    "matches_candidate_characterization",
    "toda_count_range",
]

ORACLE_BOUND = 10**5


class OracleBoundError(DomainError):
    pass


@dataclass(frozen=True)
class TodaSet:
    """T(n) with the cofactor ``4n / (p - 1)`` kept next to every prime."""

    n: int
    members: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.members)

    def as_set(self) -> frozenset[int]:
        return frozenset(self.primes)

    def count(self) -> int:
        return len(self.members)

    def cofactor(self, p: int) -> int:
        for q, k in self.members:
            if q == p:
                return k
        raise KeyError(p)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.primes)

    def __contains__(self, p: object) -> bool:
        return p in self.primes

    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self.primes)) + "}"


def _factorization(n: int | Factorization) -> Factorization:
    if isinstance(n, Factorization):
        if n.n < 1:
            raise DomainError("Toda primes are defined for n >= 1")
        return n
    if n < 1:
        raise DomainError("Toda primes are defined for n >= 1")
    return factorize(n)


def toda_primes(n: int | Factorization) -> TodaSet:
    """T(n), ascending, each prime paired with its cofactor.

    Accepts a :class:`Factorization` so callers that built n from known
    primes skip refactoring.
    """
    f = _factorization(n)
    n = f.n
    two_n = f.times(2)
    members = []
    for d in two_n.unsorted_divisors():
        q = 2 * d + 1
        if n % q and isprime(q):
            members.append((q, two_n.n // d))
    members.sort()
    return TodaSet(n, tuple(members))


def toda_count(n: int | Factorization) -> int:
    return len(toda_primes(n))


@lru_cache(maxsize=1 << 16)
def cached_toda_primes(n: int) -> TodaSet:
    return toda_primes(n)


def candidate_set(n: int | Factorization) -> list[int]:
    """Sorted ``{2d + 1 : d | 2n}``."""
    f = _factorization(n)
    return [2 * d + 1 for d in f.times(2).divisors()]


def toda_primes_oracle(n: int, bound: int = ORACLE_BOUND) -> TodaSet:
    """T(n) by scanning every odd prime up to 4n + 1 and testing the definition.

    Shares nothing with :func:`toda_primes` beyond the prime sieve; used to
    cross-check it.
    """
    if n < 1:
        raise DomainError("Toda primes are defined for n >= 1")
    if n > bound:
        raise OracleBoundError(f"n={n} above oracle bound {bound}")
    four_n = 4 * n
    members = []
    for p in sieve_primes(four_n + 1)[1:]:
        if four_n % (p - 1) == 0:
            k = four_n // (p - 1)
            if gcd(p, k) == 1:
                members.append((p, k))
    return TodaSet(n, tuple(members))


def prime_factors(n: int) -> frozenset[int]:
    return frozenset(factorize(n).primes)


# Structural relations between Toda sets.  Each returns True when the
# relation holds for the given arguments.

def disjoint_from_prime_factors(n: int) -> bool:
    return not (toda_primes(n).as_set() & prime_factors(n))


def product_contains_union(a: int, n: int) -> bool:
    union = toda_primes(a).as_set() | toda_primes(n).as_set()
    return toda_primes(a * n).as_set() >= union - prime_factors(a * n)


def prime_multiple_contains(p: int, n: int) -> bool:
    return toda_primes(p * n).as_set() >= toda_primes(n).as_set() - {p}


def divisor_multiple_contains(a: int, n: int) -> bool:
    if n % a:
        raise DomainError(f"{a} does not divide {n}")
    return toda_primes(a * n).as_set() >= toda_primes(n).as_set()


def double_contains(n: int) -> bool:
    return toda_primes(2 * n).as_set() >= toda_primes(n).as_set()


def small_prime_membership(n: int) -> bool:
    """3 and 5 are Toda primes of every n they do not divide."""
    t = toda_primes(n)
    return all(p in t for p in (3, 5) if n % p)


def matches_candidate_characterization(n: int) -> bool:
    expected = {q for q in candidate_set(n) if isprime(q) and n % q}
    return toda_primes(n).as_set() == expected


def toda_count_range(lo: int, hi: int) -> list[int]:
    """t(n) for every n in [lo, hi], using table lookups throughout."""
    if lo < 1:
        raise DomainError("range must start at 1 or above")
    prime_table.ensure(max(4 * hi + 1, hi))
    mask = prime_table.mask.tobytes()
    counts = []
    for n in range(lo, hi + 1):
        ds = factorize(n).times(2).unsorted_divisors()
        c = 0
        for d in ds:
            q = 2 * d + 1
            if mask[q] and n % q:
                c += 1
        counts.append(c)
    return counts
