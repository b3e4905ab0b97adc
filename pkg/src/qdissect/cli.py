"""Command-line front end.

Subcommands:

  verify            run the identity registry (optionally filtered)
  table             residue-count table for ranks or cranks
  deviation         rational coefficients of a deviation series
  expand            dump a named series (J a m | Jbar a m | g a m | f0 | f1 | pq)
  dissect           like expand, restricted to one progression class
  check-congruence  the classical divisibility and equidistribution checks

Exit codes are the machine contract: 0 success, 1 verification failure,
2 usage error, 3 internal error.

Configuration comes from a flat key=value file (default ./qdissect.conf,
or the path named by QDISSECT_CONFIG); command-line flags win over it.
All numeric output is exact: integers and num/den rationals only.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass

from . import partitions, theta
from .identities import all_passed, report_json, report_text, verify_all
from .registry import build_registry
from .series import Series
from .theta import GSpec, ThetaAtom

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

DEFAULT_CONFIG_PATH = "qdissect.conf"
CONFIG_ENV_VAR = "QDISSECT_CONFIG"


@dataclass
class CliConfig:
    default_prec: int = 120
    enumeration_cap: int = partitions.DEFAULT_ENUMERATION_CAP
    output: str = "text"
    report_path: str = ""

    def __post_init__(self):
        if self.default_prec < 10:
            raise ValueError("default_prec must be at least 10")
        if self.output not in ("text", "json", "tsv"):
            raise ValueError(f"unknown output mode {self.output!r}")


def load_config(path: str | None = None) -> CliConfig:
    """Read the flat key=value config file; missing file means defaults."""
    if path is None:
        path = os.environ.get(CONFIG_ENV_VAR, DEFAULT_CONFIG_PATH)
    values = {}
    if os.path.exists(path):
        with open(path, encoding="utf-8") as handle:
            for raw in handle:
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                key, sep, value = line.partition("=")
                if not sep:
                    raise ValueError(f"bad config line: {raw.rstrip()}")
                values[key.strip()] = value.strip()
    kwargs = {}
    if "default_prec" in values:
        kwargs["default_prec"] = int(values["default_prec"])
    if "enumeration_cap" in values:
        kwargs["enumeration_cap"] = int(values["enumeration_cap"])
    if "output" in values:
        kwargs["output"] = values["output"]
    if "report_path" in values:
        kwargs["report_path"] = values["report_path"]
    return CliConfig(**kwargs)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qdissect",
        description="exact q-series toolkit for partition rank/crank dissections",
    )
    parser.add_argument("--config", help="path to a key=value config file")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run the identity registry")
    p_verify.add_argument("--id", dest="id_pattern", help="glob pattern of entry ids")
    p_verify.add_argument("--prec", type=int, help="override every entry's precision")
    p_verify.add_argument("--json", action="store_true", help="emit the JSON report")
    p_verify.add_argument("--report", help="also write the JSON report to this path")

    p_table = sub.add_parser("table", help="residue-count table")
    p_table.add_argument("stat", choices=["rank", "crank"])
    p_table.add_argument("--modulus", type=int, required=True)
    p_table.add_argument("--max-n", type=int, required=True)
    p_table.add_argument("--tsv", action="store_true")
    p_table.add_argument("--json", action="store_true")

    p_dev = sub.add_parser("deviation", help="deviation series coefficients")
    p_dev.add_argument("stat", choices=["rank", "crank"])
    p_dev.add_argument("--modulus", type=int, required=True)
    p_dev.add_argument("--a", type=int, required=True)
    p_dev.add_argument("--prec", type=int)
    p_dev.add_argument("--json", action="store_true")

    for name in ("expand", "dissect"):
        p = sub.add_parser(
            name,
            help="dump a named series"
            + (" restricted to a progression" if name == "dissect" else ""),
        )
        p.add_argument("target", choices=["J", "Jbar", "g", "f0", "f1", "pq"])
        p.add_argument("params", nargs="*", type=int, help="a m for J/Jbar/g")
        p.add_argument("--neg", action="store_true", help="g at -q^a instead of q^a")
        p.add_argument("--prec", type=int)
        p.add_argument("--json", action="store_true")
        if name == "dissect":
            p.add_argument("--t", type=int, required=True)
            p.add_argument("--r", type=int, required=True)
            p.add_argument("--deflate", action="store_true",
                           help="also compress the progression onto q^n")

    p_cong = sub.add_parser("check-congruence", help="classical congruence checks")
    p_cong.add_argument("modulus", type=int, choices=[5, 7, 11])
    p_cong.add_argument("--max", type=int, default=200, dest="max_arg")

    return parser


def _expand_target(args, config: CliConfig) -> Series:
    prec = args.prec if args.prec is not None else config.default_prec
    if args.target in ("J", "Jbar"):
        if len(args.params) != 2:
            raise ValueError(f"{args.target} takes two integers: a m")
        a, m = args.params
        return theta.theta_j(ThetaAtom(1 if args.target == "J" else -1, a, m), prec)
    if args.target == "g":
        if len(args.params) != 2:
            raise ValueError("g takes two integers: a m")
        a, m = args.params
        return theta.mock_g(GSpec(-1 if args.neg else 1, a, m), prec)
    if args.params:
        raise ValueError(f"{args.target} takes no parameters")
    if args.target in ("f0", "f1"):
        return theta.eulerian_sum(args.target, prec)
    return partitions.partition_series(prec)


def _print_series(series: Series, as_json: bool, out) -> None:
    if as_json:
        json.dump(series.to_json_obj(), out)
        out.write("\n")
    else:
        out.write(series.to_text())
        out.write("\n")


def _cmd_verify(args, config: CliConfig, out) -> int:
    registry = build_registry()
    reports = verify_all(registry, prec=args.prec, id_filter=args.id_pattern)
    payload = report_json(
        reports,
        prec_default=args.prec if args.prec is not None else config.default_prec,
        timestamp=time.strftime("%Y-%m-%dT%H:%M:%S"),
    )
    report_path = args.report or config.report_path
    if report_path:
        with open(report_path, "w", encoding="utf-8") as handle:
            json.dump(payload, handle, indent=2)
            handle.write("\n")
    if args.json or config.output == "json":
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        out.write(report_text(reports))
        out.write("\n")
    return EXIT_OK if all_passed(reports) else EXIT_VERIFY_FAILED


def _cmd_table(args, config: CliConfig, out) -> int:
    M, max_n = args.modulus, args.max_n
    series = partitions.count_series(args.stat, M, max_n + 1)
    rows = []
    for n in range(max_n + 1):
        rows.append((n, list(series.coeff(n).counts), partitions.partition_count(n)))
    if args.json or config.output == "json":
        json.dump(
            {"stat": args.stat, "modulus": M,
             "rows": [{"n": n, "counts": c, "p": p} for n, c, p in rows]},
            out,
        )
        out.write("\n")
        return EXIT_OK
    header = ["n"] + [f"a={a}" for a in range(M)] + ["p(n)"]
    cells = [[str(n)] + [str(c) for c in counts] + [str(p)] for n, counts, p in rows]
    if args.tsv or config.output == "tsv":
        out.write("\t".join(header) + "\n")
        for row in cells:
            out.write("\t".join(row) + "\n")
    else:
        widths = [max(len(h), *(len(r[i]) for r in cells)) for i, h in enumerate(header)]
        out.write("  ".join(h.rjust(w) for h, w in zip(header, widths)) + "\n")
        for row in cells:
            out.write("  ".join(c.rjust(w) for c, w in zip(row, widths)) + "\n")
    return EXIT_OK


def _cmd_deviation(args, config: CliConfig, out) -> int:
    prec = args.prec if args.prec is not None else config.default_prec
    series = partitions.deviation_series(args.stat, args.a, args.modulus, prec)
    _print_series(series, args.json or config.output == "json", out)
    return EXIT_OK


def _cmd_expand(args, config: CliConfig, out) -> int:
    series = _expand_target(args, config)
    if args.command == "dissect":
        series = series.dissect(args.t, args.r)
        if args.deflate:
            series = series.deflate(args.t, args.r)
    _print_series(series, args.json or config.output == "json", out)
    return EXIT_OK


def _cmd_congruence(args, config: CliConfig, out) -> int:
    M = args.modulus
    residue, offset = {5: (4, 5), 7: (5, 7), 11: (6, 11)}[M]
    ok = True
    checked = 0
    n = residue
    prec = args.max_arg + 1
    while n <= args.max_arg:
        p = partitions.partition_count(n)
        if p % M:
            out.write(f"FAIL p({n}) = {p} is not divisible by {M}\n")
            ok = False
        stats = ["crank"] if M == 11 else ["rank", "crank"]
        for stat in stats:
            counts = partitions.count_series(stat, M, prec).coeff(n).counts
            if any(c * M != p for c in counts):
                out.write(f"FAIL {stat} counts at n={n} are not all p(n)/{M}: {counts}\n")
                ok = False
        checked += 1
        n += offset
    letter = {5: "5n+4", 7: "7n+5", 11: "11n+6"}[M]
    status = "ok" if ok else "FAILED"
    out.write(
        f"congruence mod {M} on {letter}: {checked} arguments up to "
        f"{args.max_arg}: {status}\n"
    )
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def run_cli(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    try:
        config = load_config(args.config)
        handler = {
            "verify": _cmd_verify,
            "table": _cmd_table,
            "deviation": _cmd_deviation,
            "expand": _cmd_expand,
            "dissect": _cmd_expand,
            "check-congruence": _cmd_congruence,
        }[args.command]
        return handler(args, config, out)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
