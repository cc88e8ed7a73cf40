"""OEIS b-file reading and prefix comparisons against locally computed sequences."""
from __future__ import annotations

import re
import urllib.request
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterator

from .arith import iter_primes
from .search import upsilon
from .toda import toda_count

__all__ = ["BFile", "BFileError", "CheckResult", "parse_bfile", "read_bfile", "fetch_bfile", "check_sequence", "KINDS"]


class BFileError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class BFile:
    sequence_id: str
    entries: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.entries)

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)


def parse_bfile(text: str, sequence_id: str = "") -> BFile:
    entries: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileError(line_no, f"expected 'index value', got {raw!r}")
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileError(line_no, f"non-integer field in {raw!r}") from None
        if entries and index <= entries[-1][0]:
            raise BFileError(line_no, f"index {index} does not increase")
        entries.append((index, value))
    return BFile(sequence_id, tuple(entries))


def read_bfile(path: str | Path, sequence_id: str | None = None) -> BFile:
    path = Path(path)
    if sequence_id is None:
        m = re.match(r"b(\d{6})", path.name)
        sequence_id = f"A{m.group(1)}" if m else path.stem
    return parse_bfile(path.read_text(encoding="ascii", errors="replace"), sequence_id)


BFILE_URL = "https://oeis.org/{id}/b{num}.txt"


def fetch_bfile(sequence_id: str, directory: str | Path, timeout: float = 30.0) -> Path:
    """Download the b-file for ``sequence_id`` into ``directory`` unless already there.

    Nothing in the library or the tests calls this; network use is opt-in.
    """
    m = re.fullmatch(r"A(\d{6})", sequence_id)
    if not m:
        raise ValueError(f"bad sequence id {sequence_id!r}")
    dest = Path(directory) / f"b{m.group(1)}.txt"
    if dest.exists():
        return dest
    dest.parent.mkdir(parents=True, exist_ok=True)
    url = BFILE_URL.format(id=sequence_id, num=m.group(1))
    with urllib.request.urlopen(url, timeout=timeout) as resp:
        data = resp.read()
    tmp = dest.with_suffix(".part")
    tmp.write_bytes(data)
    tmp.replace(dest)
    return dest


@dataclass(frozen=True)
class CheckResult:
    sequence_id: str
    kind: str
    matched: int
    # (index, expected from b-file, computed)
    mismatch: tuple[int, int, int] | None = None

    @property
    def ok(self) -> bool:
        return self.mismatch is None


def primes_with_toda_count(t: int, start: int = 7) -> Iterator[int]:
    """Primes p >= start with t(p) == t, ascending."""
    for p in iter_primes(start):
        if toda_count(p) == t:
            yield p


def _compare_prefix(bfile: BFile, kind: str, generated: Iterator[int]) -> CheckResult:
    matched = 0
    for (index, expected), got in zip(bfile.entries, generated):
        if expected != got:
            return CheckResult(bfile.sequence_id, kind, matched, (index, expected, got))
        matched += 1
    return CheckResult(bfile.sequence_id, kind, matched)


def _check_upsilon_shift(bfile: BFile, max_omega: int = 7, cap: int = 9) -> CheckResult:
    # Upsilon(n) is compared with a(n + 4) - 1 wherever the b-file has a(n + 4).
    values = bfile.as_dict()
    matched = 0
    for omega in range(2, max_omega + 1):
        if omega + 4 not in values:
            continue
        got = upsilon(omega, prune=True, cap=cap).min_t
        expected = values[omega + 4] - 1
        if got != expected:
            return CheckResult(bfile.sequence_id, "upsilon-shift", matched, (omega + 4, expected, got))
        matched += 1
    return CheckResult(bfile.sequence_id, "upsilon-shift", matched)


KINDS: dict[str, Callable[..., CheckResult]] = {
    "t2-primes": lambda b, **_: _compare_prefix(b, "t2-primes", primes_with_toda_count(2)),
    "t3-primes": lambda b, **_: _compare_prefix(b, "t3-primes", primes_with_toda_count(3)),
    "upsilon-shift": lambda b, **kw: _check_upsilon_shift(b, **kw),
}


def check_sequence(bfile: BFile, kind: str, **options) -> CheckResult:
    """Compare the b-file against the sequence ``kind`` computed from scratch."""
    try:
        check = KINDS[kind]
    except KeyError:
        raise ValueError(f"unknown kind {kind!r}; choose from {sorted(KINDS)}") from None
    return check(bfile, **options)
