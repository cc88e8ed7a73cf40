"""Command line interface.

Exit codes: 0 success, 1 counterexample or mismatch found, 2 usage, parse
or resource error.
"""
from __future__ import annotations

import argparse
import csv
import os
import sys
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal
from fractions import Fraction
from pathlib import Path
from typing import Sequence, TextIO

from . import arith, bernoulli, germane, search
from .arith import DomainError, FactorizationError, ResourceLimitError
from .cache import TodaCache
from .oeis import BFileError, check_sequence, fetch_bfile, read_bfile
from .toda import ORACLE_BOUND, TodaSet, toda_primes, toda_primes_oracle

EXIT_OK, EXIT_FOUND, EXIT_USAGE = 0, 1, 2


@dataclass
class RunConfig:
    threads: int
    sieve_limit: int = 10**7
    oracle_bound: int = ORACLE_BOUND
    omega_cap: int = search.HARD_OMEGA_CAP
    cache_path: Path | None = None
    output: str = "human"

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        cap = args.omega_cap
        if args.allow_large_omega:
            cap = max(cap, 64)
        return cls(
            threads=args.threads,
            sieve_limit=args.sieve_limit,
            oracle_bound=args.oracle_bound,
            omega_cap=cap,
            cache_path=Path(args.cache) if args.cache else None,
            output=args.output,
        )


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _fixed6(x: Fraction) -> str:
    d = Decimal(x.numerator) / Decimal(x.denominator)
    return str(d.quantize(Decimal("0.000001"), rounding=ROUND_HALF_EVEN))


def _env_flag(name: str) -> bool:
    return os.environ.get(name, "").lower() in ("1", "true", "yes", "on")


def _writer(out: TextIO):
    return csv.writer(out, lineterminator="\n")


class App:
    def __init__(self, config: RunConfig, out: TextIO, err: TextIO):
        self.config = config
        self.out = out
        self.err = err
        self.cache = TodaCache(config.cache_path) if config.cache_path else None
        arith.TRIAL_DIVISION_LIMIT = config.sieve_limit

    def toda(self, n: int) -> TodaSet:
        if self.cache is not None:
            return self.cache.toda_primes(n)
        return toda_primes(n)

    def print(self, *parts) -> None:
        print(*parts, file=self.out)

    # -- commands ---------------------------------------------------------

    def cmd_toda(self, args) -> int:
        ts = self.toda(args.n)
        if args.oracle:
            slow = toda_primes_oracle(args.n, self.config.oracle_bound)
            if slow.as_set() != ts.as_set():
                print(f"oracle disagrees: {slow} vs {ts}", file=self.err)
                return EXIT_FOUND
        if self.config.output == "csv":
            w = _writer(self.out)
            w.writerow(["n", "t", "primes", "cofactors"])
            w.writerow([ts.n, len(ts), ";".join(map(str, ts.primes)), ";".join(str(k) for _, k in ts.members)])
            return EXIT_OK
        self.print(f"T({ts.n}) = {ts}; t({ts.n}) = {len(ts)}")
        self.print("cofactors: " + ", ".join(f"{p}:{k}" for p, k in ts.members))
        return EXIT_OK

    def cmd_table(self, args) -> int:
        w = _writer(self.out)
        w.writerow(["n", "t", "primes"])
        for n in range(1, args.max + 1):
            ts = self.toda(n)
            w.writerow([n, len(ts), ";".join(map(str, ts.primes))])
        return EXIT_OK

    def cmd_scan(self, args) -> int:
        if args.hi < args.lo:
            raise DomainError(f"empty range [{args.lo}, {args.hi}]")
        counts = search.scan_counts(args.lo, args.hi, args.chunk_size, self.config.threads)
        report = search.report_from_counts(args.lo, counts, args.threshold)
        sink = open(args.out, "w", encoding="ascii") if args.out else self.out
        try:
            w = _writer(sink)
            w.writerow(["n", "t"])
            for i, t in enumerate(counts):
                w.writerow([args.lo + i, t])
        finally:
            if args.out:
                sink.close()
        summary = self.err if not args.out else self.out
        argmin = report.argmin[:20]
        more = "" if len(report.argmin) <= 20 else f" ... ({len(report.argmin)} total)"
        print(f"range [{report.lo}, {report.hi}]: min_t = {report.min_t}", file=summary)
        print(f"argmin: {' '.join(map(str, argmin))}{more}", file=summary)
        print(f"counterexamples (t < {report.threshold}): {len(report.counterexamples)}", file=summary)
        for n in report.counterexamples[:50]:
            print(f"  {n}", file=summary)
        return EXIT_FOUND if report.counterexamples else EXIT_OK

    def cmd_upsilon(self, args) -> int:
        res = search.upsilon(args.omega, prune=args.prune, cap=self.config.omega_cap, workers=self.config.threads)
        if self.config.output == "csv":
            w = _writer(self.out)
            w.writerow(["omega", "min_t", "n", "primes"])
            for node in res.argmin:
                w.writerow([res.omega, res.min_t, node.n, ";".join(map(str, node.primes))])
            return EXIT_OK
        self.print(f"Upsilon({res.omega}) = {res.min_t}")
        for node in res.argmin:
            self.print(f"  n = {' * '.join(map(str, node.primes))}; T(n) = {node.toda}")
        return EXIT_OK

    def cmd_bernoulli(self, args) -> int:
        sub = args.bcmd
        if sub == "denom":
            self.print(bernoulli.denominator(args.index).denominator)
            return EXIT_OK
        if sub == "support":
            self.print(" ".join(map(str, bernoulli.support(args.index))))
            return EXIT_OK
        if sub == "findex":
            idx = bernoulli.min_index(args.d, args.bound)
            self.print("none" if idx is None else idx)
            return EXIT_OK if idx is not None else EXIT_FOUND
        if sub == "check-t2":
            bad = bernoulli.check_t2_iff_d30(args.max)
            for p, t, d in bad:
                self.print(f"violation p={p} t={t} D={d}")
            self.print(f"primes <= {args.max}: {len(bad)} violations")
            return EXIT_FOUND if bad else EXIT_OK
        if sub == "check-family":
            if args.a is None:
                families = [(a, d, s, args.m_max or (200 if a == 15 else 500)) for a, d, s in bernoulli.FAMILIES]
            else:
                if args.d is None or args.expected is None:
                    raise DomainError("--a needs --d and --expected")
                expected = frozenset(int(x) for x in args.expected.split(",") if x)
                families = [(args.a, args.d, expected, args.m_max or 500)]
            total = 0
            for a, d, expected, m_max in families:
                bad = bernoulli.check_family(a, d, expected, m_max)
                total += len(bad)
                for m, ps in bad:
                    self.print(f"violation a={a} m={m} T(am)={{{', '.join(map(str, ps))}}}")
                self.print(f"a={a} D={d} m<={m_max}: {len(bad)} violations")
            return EXIT_FOUND if total else EXIT_OK
        if sub == "check-conj":
            rep = bernoulli.check_general_conjecture(args.a, args.m_max)
            if rep.first_index:
                self.print(f"equal-denominator clause: {len(rep.same_d_violations)} violations {list(rep.same_d_violations)}")
            else:
                self.print(f"equal-denominator clause: skipped (4a={4 * args.a} is not the first index of D={rep.base_denominator})")
            self.print(f"inequality clause: {len(rep.inequality_violations)} violations {list(rep.inequality_violations)}")
            self.print(f"tight cases: {list(rep.tight)}")
            return EXIT_FOUND if rep.same_d_violations or rep.inequality_violations else EXIT_OK
        if sub == "check-shift":
            found = bernoulli.check_shift_lemma(args.a)
            for p, qs in found.items():
                self.print(f"p={p}: {' '.join(map(str, qs)) if qs else '(none)'}")
            return EXIT_OK if all(found.values()) else EXIT_FOUND
        raise AssertionError(sub)

    def cmd_germane(self, args) -> int:
        w = _writer(self.out)
        if args.gcmd == "ratios":
            w.writerow(["p", "hits", "total", "ratio"])
            for rec in germane.width_ratios(args.widths, args.lengths, args.include_two):
                w.writerow([rec.p, rec.hits, rec.n, _fixed6(rec.ratio)])
        elif args.gcmd == "grid":
            w.writerow(["p", "q"])
            for cell in germane.germane_grid(args.widths, args.lengths):
                w.writerow([cell.width, cell.length])
        else:
            w.writerow(["w", "count", "frequency"])
            for rec in germane.level_sets(args.sample, args.width_bound):
                w.writerow([rec.w, rec.count, _fixed6(rec.frequency)])
        return EXIT_OK

    def cmd_oeis_check(self, args) -> int:
        path = args.bfile
        if args.fetch:
            # bfile names a directory; download into it when the file is missing
            path = fetch_bfile(args.sequence_id, args.bfile)
        bfile = read_bfile(path, args.sequence_id)
        options = {}
        if args.kind == "upsilon-shift":
            options = {"max_omega": args.max_omega, "cap": self.config.omega_cap}
        res = check_sequence(bfile, args.kind, **options)
        if res.ok:
            self.print(f"{res.sequence_id} {res.kind}: matching prefix of length {res.matched}")
            return EXIT_OK
        index, expected, got = res.mismatch
        self.print(f"{res.sequence_id} {res.kind}: mismatch at index {index}: b-file {expected}, computed {got} (after {res.matched} matches)")
        return EXIT_FOUND


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toda", description="Toda primes and related sequences")
    parser.add_argument("--threads", type=_positive, default=search.default_workers())
    parser.add_argument("--output", choices=("human", "csv"), default="human")
    parser.add_argument("--cache", default=os.environ.get("TODA_CACHE"), metavar="PATH")
    parser.add_argument("--allow-large-omega", action="store_true", default=_env_flag("TODA_ALLOW_LARGE_OMEGA"))
    parser.add_argument("--omega-cap", type=_positive, default=search.HARD_OMEGA_CAP)
    parser.add_argument("--sieve-limit", type=_positive, default=10**7)
    parser.add_argument("--oracle-bound", type=_positive, default=ORACLE_BOUND)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("toda", help="print T(n), t(n) and cofactors")
    p.add_argument("n", type=_positive)
    p.add_argument("--oracle", action="store_true", help="cross-check against a direct prime scan")

    p = sub.add_parser("table", help="CSV n,t,primes for n = 1..max")
    p.add_argument("max", type=_positive)

    p = sub.add_parser("scan", help="CSV n,t over a range plus a summary")
    p.add_argument("lo", type=_positive)
    p.add_argument("hi", type=_positive)
    p.add_argument("--threshold", type=int, default=2)
    p.add_argument("--chunk-size", type=_positive, default=search.DEFAULT_CHUNK)
    p.add_argument("--out", metavar="PATH", help="write the CSV here instead of stdout")

    p = sub.add_parser("upsilon", help="least t(n) over admissible n with omega(n) = OMEGA")
    p.add_argument("omega", type=int)
    p.add_argument("--prune", action="store_true")

    p = sub.add_parser("bernoulli", help="Bernoulli denominators and checks")
    bsub = p.add_subparsers(dest="bcmd", required=True)
    q = bsub.add_parser("denom")
    q.add_argument("index", type=_positive)
    q = bsub.add_parser("support")
    q.add_argument("index", type=_positive)
    q = bsub.add_parser("findex")
    q.add_argument("d", type=_positive)
    q.add_argument("bound", type=_positive)
    q = bsub.add_parser("check-t2")
    q.add_argument("--max", type=_positive, default=10**5)
    q = bsub.add_parser("check-family")
    q.add_argument("--a", type=_positive)
    q.add_argument("--d", type=_positive)
    q.add_argument("--expected", help="comma-separated Toda set")
    q.add_argument("--m-max", type=_positive)
    q = bsub.add_parser("check-conj")
    q.add_argument("a", type=_positive)
    q.add_argument("m_max", type=_positive)
    q = bsub.add_parser("check-shift")
    q.add_argument("a", type=_positive)

    p = sub.add_parser("germane", help="germane prime data as CSV")
    gsub = p.add_subparsers(dest="gcmd", required=True)
    for name in ("ratios", "grid"):
        q = gsub.add_parser(name)
        q.add_argument("--widths", type=_positive, default=1000)
        q.add_argument("--lengths", type=_positive, default=10000 if name == "ratios" else 1000)
        if name == "ratios":
            q.add_argument("--include-two", action="store_true")
    q = gsub.add_parser("levels")
    q.add_argument("--sample", type=_positive, default=100000)
    q.add_argument("--width-bound", type=_positive)

    p = sub.add_parser("oeis-check", help="compare a computed sequence with a local b-file")
    p.add_argument("sequence_id")
    p.add_argument("bfile")
    p.add_argument("--kind", choices=("t2-primes", "t3-primes", "upsilon-shift"), required=True)
    p.add_argument("--max-omega", type=int, default=7)
    p.add_argument("--fetch", action="store_true", help="treat BFILE as a directory and download the b-file into it if missing")
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    config = RunConfig.from_args(args)
    app = App(config, out, err)
    handler = getattr(app, "cmd_" + args.command.replace("-", "_"))
    try:
        return handler(args)
    except (DomainError, ResourceLimitError, FactorizationError, BFileError, OSError) as exc:
        print(f"toda: error: {exc}", file=err)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
