"""Command-line orchestration.

Verbs: `sweep` (parity-unimodality over a rectangle of pairs),
`verify-paper` (the full golden suite), `figures` (tableau tables),
`poly` (print one polynomial with its verdict).

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import time
from dataclasses import asdict, dataclass, field

from qcatalan import __version__, combinatorics, goldens, qseries
from qcatalan.errors import NonCoprimeError
from qcatalan.laurent import UnimodalityReport

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_CONFIG = 3


@dataclass
class RunConfig:
    command: str
    m_range: tuple[int, int] | None = None
    n_range: tuple[int, int] | None = None
    x_order: int = 30
    q_ceiling: int | None = None
    jobs: int = 1
    output_path: str | None = None
    fmt: str = "text"
    resume: bool = False

    def __post_init__(self):
        if self.x_order < 1:
            raise ValueError("x_order must be >= 1")
        if self.q_ceiling is not None and self.q_ceiling <= 0:
            raise ValueError("q_ceiling must be positive")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")


@dataclass
class VerificationReport:
    suite: str
    cases: list[dict] = field(default_factory=list)
    elapsed: float = 0.0
    toolkit_version: str = __version__

    def add(self, case_id: str, passed: bool, detail: str = ""):
        self.cases.append(
            {"case_id": case_id, "passed": passed, "detail": detail}
        )

    @property
    def failed(self) -> list[dict]:
        return [c for c in self.cases if not c["passed"]]

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        return cls(
            suite=d["suite"],
            cases=list(d["cases"]),
            elapsed=d["elapsed"],
            toolkit_version=d["toolkit_version"],
        )

    def to_text(self) -> str:
        lines = [f"suite: {self.suite} (toolkit {self.toolkit_version})"]
        for c in self.cases:
            mark = "PASS" if c["passed"] else "FAIL"
            detail = f"  [{c['detail']}]" if c["detail"] else ""
            lines.append(f"  {mark}  {c['case_id']}{detail}")
        lines.append(
            f"{len(self.cases) - len(self.failed)}/{len(self.cases)} passed "
            f"in {self.elapsed:.2f}s"
        )
        return "\n".join(lines) + "\n"


def parse_range(text: str) -> tuple[int, int]:
    """'A..B' or a single 'A'; the range must be nonempty."""
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
    else:
        lo_s = hi_s = text
    try:
        lo, hi = int(lo_s), int(hi_s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}") from None
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"empty or invalid range {text!r}")
    return lo, hi


def _sweep_rows(cfg: RunConfig) -> list[UnimodalityReport]:
    return qseries.sweep_range(cfg.m_range, cfg.n_range, jobs=cfg.jobs)


def _row_dict(r: UnimodalityReport) -> dict:
    m, n = r.subject
    return {
        "m": m,
        "n": n,
        "gcd": math.gcd(m, n),
        "degree": r.degree,
        "parity_unimodal": r.parity_unimodal,
        "first_violation": r.first_violation,
    }


CSV_FIELDS = ["m", "n", "gcd", "degree", "parity_unimodal", "first_violation"]


def _emit(text: str, cfg: RunConfig):
    if cfg.output_path:
        with open(cfg.output_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_done_pairs(path: str) -> set[tuple[int, int]]:
    done = set()
    if not os.path.exists(path):
        return done
    with open(path) as fh:
        for row in csv.DictReader(fh):
            try:
                done.add((int(row["m"]), int(row["n"])))
            except (KeyError, ValueError):
                continue
    return done


def cmd_sweep(cfg: RunConfig) -> int:
    start = time.monotonic()
    if cfg.resume and cfg.fmt != "csv":
        print("--resume needs --format csv", file=sys.stderr)
        return EXIT_USAGE
    done: set[tuple[int, int]] = set()
    if cfg.resume and cfg.output_path:
        done = _load_done_pairs(cfg.output_path)
    rows = [_row_dict(r) for r in _sweep_rows(cfg)]
    fresh = [r for r in rows if (r["m"], r["n"]) not in done]
    failures = [r for r in rows if not r["parity_unimodal"]]
    if cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS)
        if not (cfg.resume and done):
            writer.writeheader()
        for r in fresh:
            writer.writerow(r)
        if cfg.resume and cfg.output_path and done:
            with open(cfg.output_path, "a") as fh:
                fh.write(buf.getvalue())
        else:
            _emit(buf.getvalue(), cfg)
    elif cfg.fmt == "json":
        report = VerificationReport(suite="sweep")
        for r in rows:
            report.add(
                f"pair ({r['m']}, {r['n']})",
                r["parity_unimodal"],
                ""
                if r["parity_unimodal"]
                else f"first violation at exponent {r['first_violation']}",
            )
        report.elapsed = time.monotonic() - start
        _emit(json.dumps(report.to_dict(), indent=2) + "\n", cfg)
    else:
        lines = [
            f"({r['m']}, {r['n']}) gcd={r['gcd']} degree={r['degree']} "
            + (
                "parity-unimodal"
                if r["parity_unimodal"]
                else f"VIOLATION at exponent {r['first_violation']}"
            )
            for r in rows
        ]
        lines.append(
            f"{len(rows) - len(failures)}/{len(rows)} pairs parity-unimodal "
            f"in {time.monotonic() - start:.2f}s"
        )
        _emit("\n".join(lines) + "\n", cfg)
    return EXIT_VERIFICATION if failures else EXIT_OK


def cmd_verify_paper(cfg: RunConfig) -> int:
    start = time.monotonic()
    try:
        goldens.load_closed_forms()
    except (FileNotFoundError, ValueError) as exc:
        print(f"closed-form data file unusable: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    report = VerificationReport(suite="verify-paper")
    for case in goldens.run_verify_paper(cfg.x_order):
        report.add(case.case_id, case.passed, case.detail)
    report.elapsed = time.monotonic() - start
    if cfg.fmt == "json":
        _emit(json.dumps(report.to_dict(), indent=2) + "\n", cfg)
    else:
        _emit(report.to_text(), cfg)
    return EXIT_VERIFICATION if report.failed else EXIT_OK


def cmd_figures(n: int, cfg: RunConfig) -> int:
    _emit(combinatorics.figure_table(n), cfg)
    return EXIT_OK


def cmd_poly(args, cfg: RunConfig) -> int:
    from qcatalan.laurent import is_parity_unimodal

    kind = args.kind
    try:
        if kind == "catalan":
            p = qseries.q_catalan(args.n)
        elif kind == "rational":
            p = qseries.rational_q_catalan(args.m, args.n)
        elif kind == "cbar":
            p = qseries.cbar(args.m, args.n).polynomial
        elif kind == "k":
            p = qseries.k_poly(args.n)
        else:
            raise ValueError(f"unknown polynomial kind {kind!r}")
    except NonCoprimeError:
        print(
            f"({args.m}, {args.n}) is not coprime, so the rational q-Catalan "
            f"quotient is not a polynomial; try: poly cbar {args.m} {args.n}",
            file=sys.stderr,
        )
        return EXIT_USAGE
    ok, _ = is_parity_unimodal(p)
    verdict = "yes" if ok else "no"
    _emit(f"{p} ; parity-unimodal: {verdict}\n", cfg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcatalan",
        description="Exact q-Catalan toolkit: sweeps, golden verification, "
        "figure tables, polynomial inspection.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="parity-unimodality sweep over pairs")
    sweep.add_argument("--m", type=parse_range, default=(1, 20), metavar="A..B")
    sweep.add_argument("--n", type=parse_range, default=(1, 20), metavar="A..B")
    verify = sub.add_parser("verify-paper", help="run the golden suites")
    figures = sub.add_parser("figures", help="tableau/statistics tables")
    figures.add_argument("n", type=int)
    poly = sub.add_parser("poly", help="print one polynomial and its verdict")
    poly_sub = poly.add_subparsers(dest="kind", required=True)
    pc = poly_sub.add_parser("catalan")
    pc.add_argument("n", type=int)
    pr = poly_sub.add_parser("rational")
    pr.add_argument("m", type=int)
    pr.add_argument("n", type=int)
    pb = poly_sub.add_parser("cbar")
    pb.add_argument("m", type=int)
    pb.add_argument("n", type=int)
    pk = poly_sub.add_parser("k")
    pk.add_argument("n", type=int)

    for p in (sweep, verify, figures, poly):
        p.add_argument("--x-order", type=int, default=30)
        p.add_argument("--q-ceiling", type=int, default=None)
        p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
        p.add_argument(
            "--format", choices=["text", "json", "csv"], default="text"
        )
        p.add_argument("--out", default=None)
        p.add_argument("--resume", action="store_true")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors and 0 for --help/--version
        return int(exc.code or 0)
    try:
        cfg = RunConfig(
            command=args.command,
            m_range=getattr(args, "m", None),
            n_range=getattr(args, "n", None),
            x_order=args.x_order,
            q_ceiling=args.q_ceiling,
            jobs=args.jobs,
            output_path=args.out,
            fmt=args.format,
            resume=args.resume,
        )
    except ValueError as exc:
        print(f"bad configuration: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.command == "sweep":
        return cmd_sweep(cfg)
    if args.command == "verify-paper":
        return cmd_verify_paper(cfg)
    if args.command == "figures":
        try:
            return cmd_figures(args.n, cfg)
        except ValueError as exc:
            print(str(exc), file=sys.stderr)
            return EXIT_USAGE
    if args.command == "poly":
        try:
            return cmd_poly(args, cfg)
        except ValueError as exc:
            print(str(exc), file=sys.stderr)
            return EXIT_USAGE
    print(f"unknown command {args.command!r}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
