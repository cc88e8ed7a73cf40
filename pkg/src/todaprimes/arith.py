"""Exact integer arithmetic: sieving, primality, factorization, divisors.

Integers are plain Python ``int`` (arbitrary precision).  A shared boolean
prime table answers primality for small inputs by lookup; larger inputs go
through Miller-Rabin.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import reduce
from math import gcd, isqrt, lcm
from typing import Iterable, Iterator

import numpy as np

__all__ = [
    "DomainError",
    "ResourceLimitError",
    "FactorizationError",
    "PrimalityResult",
    "Factorization",
    "sieve_primes",
    "first_primes",
    "prime_table",
    "isprime",
    "isprime_array",
    "is_prime",
    "factorize",
    "divisors",
    "gcd",
    "lcm",
]

# Hard cap on a single sieve allocation (entries, one byte each).
SIEVE_MEMORY_CAP = 2_000_000_000
# Size of the shared lookup table used by isprime() and factorize().
DEFAULT_TABLE_LIMIT = 1 << 22
# Trial division bound before switching to Pollard-rho.
TRIAL_DIVISION_LIMIT = 10**7

DETERMINISTIC_LIMIT = 1 << 64
PROBABILISTIC_ERROR_EXPONENT = 128

# Strong-pseudoprime witnesses; all 13 together are exact below 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_EXTRA_ROUNDS = PROBABILISTIC_ERROR_EXPONENT // 2  # 4**-64 = 2**-128
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


class DomainError(ValueError):
    """Argument outside the domain of the operation (e.g. n = 0)."""


class ResourceLimitError(RuntimeError):
    """Request exceeds a configured memory or effort cap."""


class FactorizationError(RuntimeError):
    """Factoring gave up within the configured effort; never a wrong answer."""

    def __init__(self, n: int, cofactor: int):
        super().__init__(f"could not factor {cofactor} (cofactor of {n}) within effort cap")
        self.n = n
        self.cofactor = cofactor


@dataclass(frozen=True)
class PrimalityResult:
    n: int
    prime: bool
    deterministic: bool
    # log2 of the false-positive bound when not deterministic
    error_exponent: int | None = None

    def __bool__(self) -> bool:
        return self.prime


def sieve_primes(limit: int) -> list[int]:
    """All primes <= limit in ascending order."""
    return _sieve_array(limit).tolist()


def _sieve_mask(limit: int) -> np.ndarray:
    if limit < 0:
        raise DomainError("limit must be non-negative")
    if limit + 1 > SIEVE_MEMORY_CAP:
        raise ResourceLimitError(f"sieve limit {limit} exceeds cap {SIEVE_MEMORY_CAP}")
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return mask


def _sieve_array(limit: int) -> np.ndarray:
    return np.flatnonzero(_sieve_mask(limit))


def first_primes(count: int, skip_two: bool = False) -> list[int]:
    """The first ``count`` primes (optionally the first ``count`` odd primes)."""
    if count <= 0:
        return []
    need = count + (1 if skip_two else 0)
    bound = 32
    while True:
        ps = sieve_primes(bound)
        if len(ps) >= need:
            start = 1 if skip_two else 0
            return ps[start : start + count]
        bound *= 2


class _PrimeTable:
    """Lazily built, growable shared table of primality and smallest factors."""

    def __init__(self, limit: int = DEFAULT_TABLE_LIMIT):
        self.limit = 0
        self.mask: np.ndarray | None = None
        self._spf: np.ndarray | None = None
        self._target = limit

    def ensure(self, limit: int) -> np.ndarray:
        if self.mask is None or limit > self.limit:
            self.limit = max(limit, self._target, self.limit)
            self.mask = _sieve_mask(self.limit)
        return self.mask

    @property
    def spf(self) -> np.ndarray:
        """Smallest prime factor for every integer up to the default table size."""
        if self._spf is None:
            n = self._target
            mask = self.ensure(n)[: n + 1]
            spf = np.zeros(n + 1, dtype=np.int64)
            for p in np.flatnonzero(mask[: isqrt(n) + 1]).tolist():
                block = spf[p * p :: p]
                block[block == 0] = p
            spf[mask] = np.flatnonzero(mask)
            self._spf = spf
        return self._spf


prime_table = _PrimeTable()


def _mr_round(n: int, d: int, s: int, a: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _miller_rabin(n: int) -> tuple[bool, bool]:
    """(verdict, deterministic) for odd n > 47 without small factors."""
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_BASES:
        if not _mr_round(n, d, s, a):
            return False, True
    if n < 3317044064679887385961981:
        return True, True
    # Seeded by n so repeated calls give identical verdicts.
    rng = random.Random(n)
    for _ in range(_MR_EXTRA_ROUNDS):
        if not _mr_round(n, d, s, rng.randrange(2, n - 1)):
            return False, True
    return True, False


def isprime(n: int) -> bool:
    """Fast boolean primality; the hot-path twin of :func:`is_prime`."""
    if n < 2:
        return False
    mask = prime_table.mask
    if mask is not None and n <= prime_table.limit:
        return bool(mask[n])
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < 2209:  # 47**2
        return True
    return _miller_rabin(n)[0]


def is_prime(n: int) -> PrimalityResult:
    if n < 2:
        return PrimalityResult(n, False, True)
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return PrimalityResult(n, n == p, True)
    if n < 2209:
        return PrimalityResult(n, True, True)
    verdict, exact = _miller_rabin(n)
    if exact or n < DETERMINISTIC_LIMIT:
        return PrimalityResult(n, verdict, True)
    return PrimalityResult(n, verdict, False, PROBABILISTIC_ERROR_EXPONENT)


# Bases 2, 7, 61 decide primality exactly below 4_759_123_141.
_ARRAY_BASES = (2, 7, 61)
_ARRAY_LIMIT = 1 << 32


def _powmod_array(base: np.ndarray, exp: np.ndarray, mod: np.ndarray) -> np.ndarray:
    result = np.ones_like(mod)
    base = base % mod
    exp = exp.copy()
    while exp.any():
        odd = (exp & 1).astype(bool)
        result = np.where(odd, result * base % mod, result)
        base = base * base % mod
        exp >>= 1
    return result


def isprime_array(values) -> np.ndarray:
    """Vectorized primality for an array of non-negative integers.

    Table lookup where possible, deterministic Miller-Rabin in uint64 below
    2**32, scalar :func:`isprime` beyond that.
    """
    ns = np.asarray(values, dtype=object if _too_big(values) else np.uint64)
    if ns.dtype == object:
        return np.array([isprime(int(v)) for v in ns.ravel()], dtype=bool).reshape(ns.shape)
    out = np.zeros(ns.shape, dtype=bool)
    mask = prime_table.mask
    small = ns <= prime_table.limit if mask is not None else np.zeros(ns.shape, dtype=bool)
    if small.any():
        out[small] = mask[ns[small].astype(np.int64)]
    big = ~small & (ns >= 2)
    if not big.any():
        return out
    n = ns[big]
    ok = np.ones(n.shape, dtype=bool)
    for p in _SMALL_PRIMES:
        ok &= (n % np.uint64(p) != 0) | (n == np.uint64(p))
    cand = ok & (n > np.uint64(_SMALL_PRIMES[-1]))
    m = n[cand]
    if m.size:
        d = m - np.uint64(1)
        s = np.zeros(m.shape, dtype=np.uint64)
        while True:
            even = (d & np.uint64(1)) == 0
            if not even.any():
                break
            d = np.where(even, d >> np.uint64(1), d)
            s += even
        prime = np.ones(m.shape, dtype=bool)
        for a in _ARRAY_BASES:
            base = np.full(m.shape, a, dtype=np.uint64)
            x = _powmod_array(base, d, m)
            passed = (x == 1) | (x == m - np.uint64(1)) | (base % m == 0)
            for r in range(1, int(s.max())):
                x = x * x % m
                passed |= (x == m - np.uint64(1)) & (np.uint64(r) < s)
            prime &= passed
        sub = ok.copy()
        sub[cand] = prime
        ok = sub
    out[big] = ok
    return out


def _too_big(values) -> bool:
    if isinstance(values, np.ndarray) and values.dtype.kind in "iu":
        return values.size > 0 and int(values.max()) >= _ARRAY_LIMIT
    arr = np.asarray(values, dtype=object)
    return arr.size > 0 and max(int(v) for v in arr.ravel()) >= _ARRAY_LIMIT


@dataclass(frozen=True)
class Factorization:
    """n together with its prime factorization, primes strictly ascending."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prev = 1
        prod = 1
        for p, e in self.factors:
            if p <= prev or e < 1:
                raise DomainError(f"malformed factor list {self.factors!r}")
            prev = p
            prod *= p**e
        if prod != self.n:
            raise DomainError(f"factors multiply to {prod}, not {self.n}")

    @classmethod
    def from_primes(cls, primes: Iterable[int]) -> "Factorization":
        """Build from a multiset of primes that are known to be prime."""
        counts: dict[int, int] = {}
        n = 1
        for p in primes:
            counts[p] = counts.get(p, 0) + 1
            n *= p
        return cls(n, tuple(sorted(counts.items())))

    def times(self, p: int, e: int = 1) -> "Factorization":
        """This factorization multiplied by the prime power p**e."""
        counts = dict(self.factors)
        counts[p] = counts.get(p, 0) + e
        return Factorization(self.n * p**e, tuple(sorted(counts.items())))

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def omega(self) -> int:
        return len(self.factors)

    def squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    def tau(self) -> int:
        return reduce(lambda acc, f: acc * (f[1] + 1), self.factors, 1)

    def divisors(self) -> list[int]:
        ds = [1]
        for p, e in self.factors:
            ds = [d * p**k for d in ds for k in range(e + 1)]
        ds.sort()
        return ds

    def unsorted_divisors(self) -> list[int]:
        ds = [1]
        for p, e in self.factors:
            pk = 1
            base = ds
            for _ in range(e):
                pk *= p
                ds = ds + [d * pk for d in base]
        return ds

    def __int__(self) -> int:
        return self.n


def _brent(n: int, max_iterations: int, rng: random.Random) -> int | None:
    """A non-trivial factor of composite odd n, or None if the budget runs out."""
    spent = 0
    while spent < max_iterations:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = 0
        while g == 1 and spent < max_iterations:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            spent += r
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    return None


def _trial_divide(n: int, counts: dict[int, int]) -> int:
    """Strip small prime factors into ``counts``; return the unfactored rest."""
    spf = prime_table.spf
    if n < len(spf):
        while n > 1:
            p = int(spf[n])
            counts[p] = counts.get(p, 0) + 1
            n //= p
        return 1
    for p in _primes_upto(min(isqrt(n), TRIAL_DIVISION_LIMIT)):
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            counts[p] = e
    else:
        return n
    if n > 1:
        counts[n] = counts.get(n, 0) + 1
    return 1


_primes_cache: list[int] = []


def _primes_upto(bound: int) -> list[int]:
    global _primes_cache
    if not _primes_cache or _primes_cache[-1] < bound:
        _primes_cache = sieve_primes(max(bound, 1 << 16))
    return _primes_cache


def factorize(n: int, effort: int = 1 << 22) -> Factorization:
    """Prime factorization of n >= 1.

    Trial division (table lookup for small n, then primes up to 10**7),
    followed by Pollard-rho with Brent's cycle detection.  ``effort`` caps the
    rho iterations per cofactor; exceeding it raises FactorizationError.
    """
    if isinstance(n, Factorization):
        return n
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    counts: dict[int, int] = {}
    rest = _trial_divide(n, counts)
    stack = [rest] if rest > 1 else []
    rng = random.Random(n)
    while stack:
        m = stack.pop()
        if isprime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        r = isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        f = _brent(m, effort, rng)
        if f is None:
            raise FactorizationError(n, m)
        stack += [f, m // f]
    return Factorization(n, tuple(sorted(counts.items())))


def divisors(n: int | Factorization) -> list[int]:
    """All positive divisors in ascending order, generated from the factorization."""
    if not isinstance(n, Factorization) and n < 1:
        raise DomainError("divisors are defined for n >= 1")
    return factorize(n).divisors()


def iter_primes(start: int = 2) -> Iterator[int]:
    """Unbounded ascending stream of primes >= start."""
    lo = max(start, 2)
    width = 1 << 16
    while True:
        hi = lo + width
        for p in range(lo, hi):
            if isprime(p):
                yield p
        lo = hi
