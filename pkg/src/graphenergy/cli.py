"""Command-line front end.

Subcommands: `gen` writes a family graph as an edge-list file, `energy`
reports on one edge-list file, `ratio-table` emits a CSV ratio sweep, and
`verify` runs the invariant suites. Exit codes: 0 success, 1 validation
error or failed verification, 2 eigensolver non-convergence.
"""

from __future__ import annotations

import argparse
import re
import sys

from . import bounds, graphcore, spectral

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_NUMERICAL = 2

CSV_HEADER = "family,param,n,k,m,energy,e0,ratio,closed_ratio,paper_bound"

_RANGE_RE = re.compile(r"^(-?\d+)\.\.(-?\d+)$")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; route that through the
    # validation exit code instead (2 means numerical failure here).
    def error(self, message):
        raise _UsageError(message)


def _fmt(x: float) -> str:
    """12 significant digits, trailing zeros trimmed; stable across runs."""
    return f"{x:.12g}"


def _u64(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"seed must be an unsigned 64-bit integer, got {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"trials must be at least 1, got {text}")
    return value


def _parse_range(text: str) -> tuple[int, int]:
    match = _RANGE_RE.match(text)
    if not match:
        raise ValueError(f"range must look like `lo..hi`, got {text!r}")
    return int(match.group(1)), int(match.group(2))


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)


_GEN_BUILDERS = {
    "paley": graphcore.paley,
    "ring-clique": graphcore.ring_of_cliques,
    "complete": graphcore.complete,
    "cycle": graphcore.cycle,
}


def _cmd_gen(args) -> int:
    g = _GEN_BUILDERS[args.family](args.param)
    summary = f"n {g.n}\nm {g.m}\nk {g.regularity()}\n"
    if args.out is None:
        # edge list owns stdout; keep the summary out of the piped format
        sys.stdout.write(graphcore.format_edge_list(g))
        sys.stderr.write(summary)
    else:
        graphcore.write_edge_list(g, args.out)
        sys.stdout.write(summary)
    return EXIT_OK


def _cmd_energy(args) -> int:
    g = graphcore.read_edge_list(args.input)
    vals = spectral.eigenvalues(g)
    en = float(abs(vals).sum())
    k = g.regularity()
    lines = [f"n {g.n}", f"m {g.m}"]
    lines.append(f"k {k}" if k is not None else "k not regular")
    lines.append(f"energy {_fmt(en)}")
    lines.append(f"spectral_radius {_fmt(float(vals[0]))}")
    if k is not None and k >= 1:
        bound = bounds.e0(g.n, k)
        lines.append(f"e0 {_fmt(bound)}")
        lines.append(f"ratio {_fmt(en / bound)}")
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_ratio_table(args) -> int:
    lo, hi = _parse_range(args.range)
    if args.family == "paley":
        params = graphcore.paley_primes(lo, hi)
        family = "paley"
    else:
        params = [q for q in range(max(lo, 3), hi + 1)]
        family = "ring_of_cliques"
    if not params:
        raise ValueError(f"no valid {args.family} parameters in {lo}..{hi}")
    rows = bounds.ratio_table(family, params, use_closed_form=(args.mode == "closed"))
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            ",".join(
                [
                    r.family,
                    str(r.param),
                    str(r.n),
                    str(r.k),
                    str(r.m),
                    _fmt(r.energy),
                    _fmt(r.e0),
                    _fmt(r.ratio),
                    _fmt(r.closed_ratio) if r.closed_ratio is not None else "",
                    _fmt(r.paper_bound) if r.paper_bound is not None else "",
                ]
            )
        )
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    runners = {
        "lemma": lambda: bounds.lemma_suite(args.trials, args.seed),
        "trace": lambda: spectral.trace_suite(args.trials, args.seed),
        "closed-forms": lambda: spectral.closed_forms_suite(),
        "bounds": lambda: bounds.bounds_suite(),
    }
    names = list(runners) if args.suite == "all" else [args.suite]
    all_ok = True
    for name in names:
        result = runners[name]()
        sys.stdout.write(f"{result.name}: {result.passed}/{result.total} pass\n")
        for failure in result.failures:
            sys.stdout.write(f"  FAIL {failure}\n")
        all_ok = all_ok and result.ok
    return EXIT_OK if all_ok else EXIT_VALIDATION


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="graphenergy", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a family graph as an edge-list file")
    gen.add_argument("family", choices=sorted(_GEN_BUILDERS))
    gen.add_argument("param", type=int, help="p, q, or n depending on the family")
    gen.add_argument("--out", default=None, help="output path (default: stdout)")
    gen.set_defaults(func=_cmd_gen)

    energy = sub.add_parser("energy", help="energy report for an edge-list file")
    energy.add_argument("input", help="edge-list file to read")
    energy.set_defaults(func=_cmd_energy)

    table = sub.add_parser("ratio-table", help="CSV ratio sweep over a parameter range")
    table.add_argument("family", choices=["paley", "ring-clique"])
    table.add_argument("range", help="inclusive parameter range, e.g. 5..100")
    table.add_argument("--mode", choices=["numeric", "closed"], default="numeric")
    table.add_argument("--out", default=None, help="output path (default: stdout)")
    table.set_defaults(func=_cmd_ratio_table)

    verify = sub.add_parser("verify", help="run invariant suites")
    verify.add_argument("suite", choices=["lemma", "trace", "closed-forms", "bounds", "all"])
    verify.add_argument("--trials", type=_positive, default=100)
    verify.add_argument("--seed", type=_u64, default=0)
    verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_VALIDATION
    try:
        return args.func(args)
    except spectral.ConvergenceError as exc:
        sys.stderr.write(f"numerical failure: {exc}\n")
        return EXIT_NUMERICAL
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_VALIDATION


def main_entry() -> None:
    raise SystemExit(main())
