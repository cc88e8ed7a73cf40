"""Bernoulli denominators via von Staudt-Clausen.

The denominator of B_{2m} is the product of the primes p with ``p - 1 | 2m``.
Only denominators and their prime supports are computed here; the checks
below scan ranges for violations and return them instead of asserting.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .arith import DomainError, factorize, isprime, sieve_primes
from .toda import toda_primes

__all__ = [
    "DenominatorRecord",
    "ConjectureReport",
    "denominator",
    "support",
    "min_index",
    "check_t2_iff_d30",
    "check_family",
    "FAMILIES",
    "check_general_conjecture",
    "check_shift_lemma",
]


@dataclass(frozen=True)
class DenominatorRecord:
    index: int
    support: tuple[int, ...]
    denominator: int


def support(two_m: int) -> tuple[int, ...]:
    """Primes p with p - 1 dividing 2m, ascending."""
    if two_m < 2 or two_m % 2:
        raise DomainError(f"index must be a positive even integer, got {two_m}")
    return tuple(e + 1 for e in factorize(two_m).divisors() if isprime(e + 1))


def denominator(two_m: int) -> DenominatorRecord:
    ps = support(two_m)
    return DenominatorRecord(two_m, ps, prod(ps))


def min_index(d: int, bound: int) -> int | None:
    """Least 2m <= bound with D_{2m} = d, or None."""
    if bound < 2:
        raise DomainError("bound must be at least 2")
    if d % 6:
        return None
    for two_m in range(2, bound + 1, 2):
        if denominator(two_m).denominator == d:
            return two_m
    return None


def check_t2_iff_d30(p_max: int) -> list[tuple[int, int, int]]:
    """Primes p <= p_max, p != 5, where (t(p) == 2) and (D_{4p} == 30) disagree.

    Each violation is (p, t(p), D_{4p}).
    """
    out = []
    for p in sieve_primes(p_max):
        if p == 5:
            continue
        t = len(toda_primes(p))
        d = denominator(4 * p).denominator
        if (t == 2) != (d == 30):
            out.append((p, t, d))
    return out


# (a, D_{4a}, T(a)) for the three proved families.
FAMILIES = (
    (3, 2730, frozenset({5, 7, 13})),
    (5, 330, frozenset({3, 11})),
    (15, 56786730, frozenset({7, 11, 13, 31, 61})),
)


def check_family(a: int, target_d: int, expected: frozenset[int] | set[int], m_max: int) -> list[tuple[int, tuple[int, ...]]]:
    """m <= m_max with D_{4am} = target_d but T(am) != expected, as (m, T(am))."""
    expected = frozenset(expected)
    out = []
    for m in range(1, m_max + 1):
        if denominator(4 * a * m).denominator != target_d:
            continue
        ts = toda_primes(a * m)
        if ts.as_set() != expected:
            out.append((m, ts.primes))
    return out


@dataclass(frozen=True)
class ConjectureReport:
    a: int
    m_max: int
    base_denominator: int
    # False when 4a is not the first index with denominator D_{4a}
    first_index: bool
    same_d_violations: tuple[int, ...]
    inequality_violations: tuple[int, ...]
    # m with D_{4am} != D_{4a} and t(am) == t(a)
    tight: tuple[int, ...]


def check_general_conjecture(a: int, m_max: int) -> ConjectureReport:
    """Scan m <= m_max for both clauses.

    Equal denominators must give equal Toda sets (tested only when 4a is the
    least index with that denominator); different denominators must not
    lower t.
    """
    if a < 1:
        raise DomainError("a must be positive")
    d = denominator(4 * a).denominator
    first = min_index(d, 4 * a) == 4 * a
    ta = toda_primes(a)
    same, ineq, tight = [], [], []
    for m in range(1, m_max + 1):
        tam = toda_primes(a * m)
        if denominator(4 * a * m).denominator == d:
            if first and tam.as_set() != ta.as_set():
                same.append(m)
        else:
            if len(tam) < len(ta):
                ineq.append(m)
            elif len(tam) == len(ta):
                tight.append(m)
    return ConjectureReport(a, m_max, d, first, tuple(same), tuple(ineq), tuple(tight))


def check_shift_lemma(a: int) -> dict[int, tuple[int, ...]]:
    """For each p in T(a), the primes among {2pi + 1 : i | 2a}.

    An empty tuple means the hypothesis fails for that p.
    """
    if a < 1:
        raise DomainError("a must be positive")
    ds = factorize(2 * a).divisors()
    return {p: tuple(q for q in (2 * p * i + 1 for i in ds) if isprime(q)) for p in toda_primes(a)}
