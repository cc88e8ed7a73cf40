"""Counterexample searches around the lower bounds on t(n).

The central object is the family of odd squarefree multiples of 3 that are
divisible by exactly one of 5, 7, 13 (call it p) and avoid some prime
``q in T(3p) - {5, 7, 13}``.  :func:`upsilon` finds the least t(n) over such
n with a prescribed number of prime factors, enumerating n as 3p times
primes drawn one at a time from the Toda set of the running product.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .arith import DomainError, Factorization, factorize
from .toda import TodaSet, toda_count, toda_count_range, toda_primes

__all__ = [
    "BASIC_PRIMES",
    "HARD_OMEGA_CAP",
    "OmegaCapError",
    "CriteriaWitness",
    "SearchNode",
    "ScanReport",
    "UpsilonResult",
    "BoundReport",
    "satisfies_criteria",
    "enumerate_candidates",
    "upsilon",
    "scan_counts",
    "scan_min_toda",
    "lower_bound_report",
    "small_omega_families",
    "criteria_violations",
    "multiple_of_three_violations",
    "exhaustive_upsilon",
]

BASIC_PRIMES = (5, 7, 13)
HARD_OMEGA_CAP = 9
DEFAULT_CHUNK = 10_000


class OmegaCapError(DomainError):
    pass


def default_workers() -> int:
    env = os.environ.get("TODA_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


@dataclass(frozen=True)
class CriteriaWitness:
    n: int
    p: int
    q: int


@dataclass(frozen=True)
class SearchNode:
    primes: tuple[int, ...]
    toda: TodaSet

    @property
    def n(self) -> int:
        return self.toda.n

    @property
    def t(self) -> int:
        return len(self.toda)

    @property
    def factorization(self) -> Factorization:
        return Factorization.from_primes(self.primes)


@dataclass(frozen=True)
class ScanReport:
    lo: int
    hi: int
    threshold: int
    min_t: int
    argmin: tuple[int, ...]
    counterexamples: tuple[int, ...]


@dataclass(frozen=True)
class UpsilonResult:
    omega: int
    min_t: int
    argmin: tuple[SearchNode, ...]
    visited: int = field(default=0, compare=False)


@dataclass(frozen=True)
class BoundReport:
    n: int
    t: int
    # (clause, applies, holds)
    clauses: tuple[tuple[str, bool, bool], ...]

    @property
    def ok(self) -> bool:
        return all(holds for _, applies, holds in self.clauses if applies)


def _basic_toda(p: int) -> tuple[int, ...]:
    return tuple(q for q in toda_primes(3 * p).primes if q not in BASIC_PRIMES)


def satisfies_criteria(n: int | Factorization) -> CriteriaWitness | None:
    """Witness (p, q) that n meets the hypotheses, or None.

    The smallest admissible q is reported.
    """
    f = factorize(n)
    n = f.n
    if n < 1 or n % 2 == 0 or n % 3 or not f.squarefree():
        return None
    hits = [r for r in BASIC_PRIMES if n % r == 0]
    if len(hits) != 1:
        return None
    p = hits[0]
    for q in _basic_toda(p):
        if n % q:
            return CriteriaWitness(n, p, q)
    return None


def _check_omega(omega: int, cap: int) -> None:
    if omega < 2:
        raise DomainError("omega must be at least 2")
    if omega > cap:
        raise OmegaCapError(
            f"omega={omega} exceeds the cap of {cap}; the search space grows "
            "superexponentially with omega. "
            "Raise the cap explicitly to proceed."
        )


def _make_node(primes: tuple[int, ...]) -> SearchNode:
    return SearchNode(primes, toda_primes(Factorization.from_primes(primes)))


def _make_nodes(keys: Sequence[tuple[int, ...]]) -> list[SearchNode]:
    return [_make_node(k) for k in keys]


def _roots() -> list[SearchNode]:
    return [_make_node((3, p)) for p in BASIC_PRIMES]


def _child_keys(nodes: Iterable[SearchNode]) -> list[tuple[int, ...]]:
    keys = set()
    for node in nodes:
        for q in node.toda.primes:
            keys.add(tuple(sorted(node.primes + (q,))))
    return sorted(keys, key=lambda k: (_prod(k), k))


def _prod(ps: Iterable[int]) -> int:
    out = 1
    for p in ps:
        out *= p
    return out


def _parallel_nodes(keys: list[tuple[int, ...]], workers: int) -> list[SearchNode]:
    if workers <= 1 or len(keys) < 256:
        return _make_nodes(keys)
    size = max(64, len(keys) // (4 * workers))
    chunks = [keys[i : i + size] for i in range(0, len(keys), size)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        out: list[SearchNode] = []
        for part in pool.map(_make_nodes, chunks):
            out.extend(part)
    return out


def enumerate_candidates(
    omega: int, cap: int = HARD_OMEGA_CAP, workers: int = 1
) -> Iterator[SearchNode]:
    """All search nodes with ``omega`` prime factors, each exactly once, by ascending n.

    Level 2 is {3p : p in 5, 7, 13}; level k + 1 multiplies each level-k node
    by one prime from its own Toda set.  Adding several Toda primes of the
    same product at once reaches nothing new, since T(qm) contains T(m) - {q}.
    """
    _check_omega(omega, cap)
    level = _roots()
    for _ in range(omega - 2):
        level = _parallel_nodes(_child_keys(level), workers)
    yield from level


def _upsilon_full(omega: int, workers: int) -> UpsilonResult:
    level = _roots()
    for _ in range(omega - 2):
        level = _parallel_nodes(_child_keys(level), workers)
    best = None
    argmin: list[SearchNode] = []
    for node in level:
        if satisfies_criteria(node.factorization) is None:
            continue
        if best is None or node.t < best:
            best, argmin = node.t, [node]
        elif node.t == best:
            argmin.append(node)
    if best is None:
        raise RuntimeError(f"no admissible candidates at omega={omega}")
    return UpsilonResult(omega, best, tuple(argmin), len(level))


def _upsilon_pruned(omega: int) -> UpsilonResult:
    # Depth-first branch and bound.  Appending one prime lowers t by at most
    # one, so a node with ``remaining`` primes still to add cannot lead below
    # ``t - remaining``.  Ties are kept so the argmin set is complete.
    best = [None]
    argmin: list[SearchNode] = []
    seen: set[int] = set()

    def bounded(node: SearchNode, remaining: int) -> bool:
        return best[0] is not None and node.t - remaining > best[0]

    def visit(node: SearchNode, remaining: int) -> None:
        if remaining == 0:
            if satisfies_criteria(node.factorization) is None:
                return
            if best[0] is None or node.t < best[0]:
                best[0] = node.t
                argmin.clear()
            if node.t == best[0]:
                argmin.append(node)
            return
        if bounded(node, remaining):
            return
        children = []
        for q in node.toda.primes:
            n = node.n * q
            if n in seen:
                continue
            seen.add(n)
            children.append(_make_node(tuple(sorted(node.primes + (q,)))))
        children.sort(key=lambda c: (c.t, c.n))
        for child in children:
            visit(child, remaining - 1)

    for root in _roots():
        seen.add(root.n)
        visit(root, omega - 2)
    if best[0] is None:
        raise RuntimeError(f"no admissible candidates at omega={omega}")
    argmin.sort(key=lambda node: node.n)
    return UpsilonResult(omega, best[0], tuple(argmin), len(seen))


def upsilon(
    omega: int, prune: bool = False, cap: int = HARD_OMEGA_CAP, workers: int = 1
) -> UpsilonResult:
    """Least t(n) over admissible n with omega(n) = omega, with every minimizer."""
    _check_omega(omega, cap)
    if prune:
        return _upsilon_pruned(omega)
    return _upsilon_full(omega, workers)


def _chunks(lo: int, hi: int, size: int) -> list[tuple[int, int]]:
    return [(a, min(a + size - 1, hi)) for a in range(lo, hi + 1, size)]


def _count_chunk(bounds: tuple[int, int]) -> list[int]:
    return toda_count_range(*bounds)


def scan_counts(lo: int, hi: int, chunk_size: int = DEFAULT_CHUNK, workers: int = 1) -> list[int]:
    """t(n) for n = lo..hi, computed in fixed chunks and merged in order."""
    if lo < 1:
        raise DomainError("scan range must start at 1 or above")
    if hi < lo:
        raise DomainError(f"empty range [{lo}, {hi}]")
    chunks = _chunks(lo, hi, chunk_size)
    if workers <= 1 or len(chunks) == 1:
        parts = map(_count_chunk, chunks)
        return [t for part in parts for t in part]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return [t for part in pool.map(_count_chunk, chunks) for t in part]


def scan_min_toda(
    lo: int, hi: int, threshold: int = 2, chunk_size: int = DEFAULT_CHUNK, workers: int = 1
) -> ScanReport:
    counts = scan_counts(lo, hi, chunk_size, workers)
    return report_from_counts(lo, counts, threshold)


def report_from_counts(lo: int, counts: Sequence[int], threshold: int) -> ScanReport:
    min_t = min(counts)
    argmin = tuple(lo + i for i, t in enumerate(counts) if t == min_t)
    bad = tuple(lo + i for i, t in enumerate(counts) if t < threshold)
    return ScanReport(lo, lo + len(counts) - 1, threshold, min_t, argmin, bad)


def lower_bound_report(n: int) -> BoundReport:
    """Which of the bounds t >= 1, t >= 2 (5 ∤ n), t >= 3 (3 | n) apply, and whether they hold."""
    t = toda_count(n)
    clauses = (
        ("t>=1", True, t >= 1),
        ("5 does not divide n: t>=2", n % 5 != 0, t >= 2),
        ("3 divides n: t>=3", n % 3 == 0, t >= 3),
    )
    return BoundReport(n, t, clauses)


@dataclass(frozen=True)
class FamilyCheck:
    label: str
    bound: int
    # (prime factors of n, t(n))
    cases: tuple[tuple[tuple[int, ...], int], ...]

    @property
    def violations(self) -> tuple[tuple[tuple[int, ...], int], ...]:
        return tuple(c for c in self.cases if c[1] < self.bound)


def small_omega_families() -> list[FamilyCheck]:
    """The hand-enumerated three- and four-factor families behind the base cases."""

    def case(ps):
        ps = tuple(sorted(ps))
        return ps, toda_count(Factorization.from_primes(ps))

    three = [case((3, p, q)) for p in BASIC_PRIMES for q in toda_primes(3 * p)]
    two_basic = [
        case((3, p, q, r))
        for p, q in combinations(BASIC_PRIMES, 2)
        for r in toda_primes(3 * p * q)
    ]
    pair = [
        case((3, p, q, r))
        for p in BASIC_PRIMES
        for q, r in combinations(toda_primes(3 * p).primes, 2)
    ]
    chain = [
        case((3, p, q, r))
        for p in BASIC_PRIMES
        for q in toda_primes(3 * p)
        for r in toda_primes(3 * p * q)
    ]
    return [
        FamilyCheck("3pq, p basic, q in T(3p)", 4, tuple(three)),
        FamilyCheck("3pqr, p,q basic, r in T(3pq)", 9, tuple(two_basic)),
        FamilyCheck("3pqr, p basic, q,r in T(3p)", 7, tuple(pair)),
        FamilyCheck("3pqr, p basic, q in T(3p), r in T(3pq)", 5, tuple(chain)),
    ]


def criteria_violations(n_max: int) -> list[tuple[int, int]]:
    """Admissible n <= n_max with t(n) < 4, as (n, t)."""
    out = []
    for n in range(3, n_max + 1, 6):
        if satisfies_criteria(n) is not None:
            t = toda_count(n)
            if t < 4:
                out.append((n, t))
    return out


def multiple_of_three_violations(n_max: int) -> list[tuple[int, int]]:
    """Multiples of 3 up to n_max with t < 3, or t = 3 but T(n) != {5, 7, 13}."""
    out = []
    for n in range(3, n_max + 1, 3):
        ts = toda_primes(n)
        if len(ts) < 3 or (len(ts) == 3 and ts.as_set() != set(BASIC_PRIMES)):
            out.append((n, len(ts)))
    return out


def exhaustive_upsilon(omega: int, n_max: int) -> tuple[int | None, tuple[int, ...]]:
    """Least t(n) over *all* admissible n <= n_max with omega(n) = omega.

    No restriction to Toda-generated factors; a cross-check on
    :func:`upsilon` for small omega.
    """
    best = None
    argmin: list[int] = []
    for n in range(3, n_max + 1, 6):
        f = factorize(n)
        if f.omega() != omega or satisfies_criteria(f) is None:
            continue
        t = toda_count(f)
        if best is None or t < best:
            best, argmin = t, [n]
        elif t == best:
            argmin.append(n)
    return best, tuple(argmin)
