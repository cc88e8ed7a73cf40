"""Germane primes: primes of the form p(q - 1) + 1 with p and q prime.

p is the width and q the length.  The functions here produce the raw data
for width/length plots and for the distribution of w(r), the number of
widths a prime r admits.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arith import DomainError, factorize, first_primes, isprime, isprime_array

__all__ = [
    "GermaneDecomposition",
    "RatioRecord",
    "GridCell",
    "LevelSetRecord",
    "decompositions",
    "germane_count",
    "width_ratio",
    "width_ratios",
    "germane_grid",
    "level_sets",
]


@dataclass(frozen=True)
class GermaneDecomposition:
    value: int
    width: int
    length: int


@dataclass(frozen=True)
class RatioRecord:
    p: int
    n: int
    hits: int
    include_two: bool = False

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.hits, self.n)


@dataclass(frozen=True)
class GridCell:
    # 1-based positions in the ascending list of primes
    width_index: int
    length_index: int
    width: int
    length: int


@dataclass(frozen=True)
class LevelSetRecord:
    w: int
    count: int
    sample_size: int

    @property
    def frequency(self) -> Fraction:
        return Fraction(self.count, self.sample_size)


def decompositions(r: int) -> list[GermaneDecomposition]:
    """Every (width, length) with r = width * (length - 1) + 1, by width."""
    if r < 2 or not isprime(r):
        return []
    out = []
    for p in factorize(r - 1).primes:
        q = (r - 1) // p + 1
        if isprime(q):
            out.append(GermaneDecomposition(r, p, q))
    return out


def germane_count(r: int) -> int:
    """w(r): the number of prime widths r is germane to."""
    return len(decompositions(r))


def _lengths(n: int, include_two: bool) -> np.ndarray:
    return np.array(first_primes(n, skip_two=not include_two), dtype=np.uint64)


def width_ratio(p: int, n: int, include_two: bool = False) -> RatioRecord:
    """Hits of p(q - 1) + 1 being prime as q runs over the first n odd primes."""
    if not isprime(p):
        raise DomainError(f"width {p} is not prime")
    if n < 1:
        raise DomainError("need at least one length")
    qs = _lengths(n, include_two)
    return _ratio(p, qs, include_two)


def _ratio(p: int, qs: np.ndarray, include_two: bool) -> RatioRecord:
    if qs.size and p * int(qs[-1]) < 1 << 63:
        values = np.uint64(p) * (qs - np.uint64(1)) + np.uint64(1)
    else:
        values = [p * (int(q) - 1) + 1 for q in qs]
    hits = int(isprime_array(values).sum())
    return RatioRecord(p, len(qs), hits, include_two)


def width_ratios(num_widths: int, num_lengths: int, include_two: bool = False) -> list[RatioRecord]:
    """One record per width among the first ``num_widths`` (odd) primes."""
    qs = _lengths(num_lengths, include_two)
    return [_ratio(p, qs, include_two) for p in first_primes(num_widths, skip_two=not include_two)]


def germane_grid(num_widths: int, num_lengths: int) -> list[GridCell]:
    """Cells (i, j) where p_i (q_j - 1) + 1 is prime, primes counted from 2."""
    if num_widths < 1 or num_lengths < 1:
        raise DomainError("grid dimensions must be positive")
    ps = np.array(first_primes(num_widths), dtype=np.uint64)
    qs = np.array(first_primes(num_lengths), dtype=np.uint64)
    values = ps[:, None] * (qs[None, :] - np.uint64(1)) + np.uint64(1)
    hits = isprime_array(values)
    cells = []
    for i, j in zip(*np.nonzero(hits)):
        cells.append(GridCell(int(i) + 1, int(j) + 1, int(ps[i]), int(qs[j])))
    return cells


def level_sets(sample_size: int, width_bound: int | None = None) -> list[LevelSetRecord]:
    """Counts of w(r) over the first ``sample_size`` primes r.

    w(r) is always exact.  ``width_bound`` only merges buckets: every
    w >= width_bound is reported under w = width_bound.
    """
    if sample_size < 1:
        raise DomainError("sample_size must be positive")
    counts: Counter[int] = Counter()
    for r in first_primes(sample_size):
        w = germane_count(r)
        if width_bound is not None:
            w = min(w, width_bound)
        counts[w] += 1
    return [LevelSetRecord(w, c, sample_size) for w, c in sorted(counts.items())]
