"""Append-only on-disk cache of Toda sets, one ``n<TAB>t<TAB>p1;p2;...`` record per line."""
from __future__ import annotations

import logging
from pathlib import Path

from .toda import TodaSet, toda_primes

log = logging.getLogger(__name__)


class TodaCache:
    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._sets: dict[int, tuple[int, ...]] = {}
        if self.path.exists():
            self._load()

    def _load(self) -> None:
        with self.path.open(encoding="ascii", errors="replace") as fh:
            for line_no, line in enumerate(fh, 1):
                try:
                    n_s, t_s, ps_s = line.rstrip("\n").split("\t")
                    n, t = int(n_s), int(t_s)
                    primes = tuple(int(p) for p in ps_s.split(";")) if ps_s else ()
                    if len(primes) != t or n < 1:
                        raise ValueError("count mismatch")
                except ValueError:
                    log.warning("%s:%d: skipping corrupt cache line", self.path, line_no)
                    continue
                self._sets[n] = primes

    def __contains__(self, n: int) -> bool:
        return n in self._sets

    def __len__(self) -> int:
        return len(self._sets)

    def get(self, n: int) -> TodaSet | None:
        primes = self._sets.get(n)
        if primes is None:
            return None
        return TodaSet(n, tuple((p, 4 * n // (p - 1)) for p in primes))

    def put(self, ts: TodaSet) -> None:
        if ts.n in self._sets:
            return
        self._sets[ts.n] = ts.primes
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a", encoding="ascii") as fh:
            fh.write(f"{ts.n}\t{len(ts)}\t{';'.join(map(str, ts.primes))}\n")

    def toda_primes(self, n: int) -> TodaSet:
        ts = self.get(n)
        if ts is None:
            ts = toda_primes(n)
            self.put(ts)
        return ts
