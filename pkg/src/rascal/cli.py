"""Command-line front end.

Exit codes: 0 success / all checks pass, 1 verification failure,
2 usage error, 3 resource limit.  All output is deterministic: the
same invocation always produces byte-identical bytes (JSON verify
reports carry wall-clock timings and are the one exception).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import identities, maps
from .errors import (
    DomainViolation,
    ResourceLimit,
    UnknownBijection,
    UnknownIdentity,
)
from .generate import (
    ascent_sequences,
    avoiders,
    restricted_subsets,
    words_with_ascents,
)
from .limits import check_cells
from .numbers import e_defect, rascal_gen_value, rascal_value, triangle_rows
from .words import as_word, is_pattern, word_str

FORMATS = ("table", "json", "csv", "bfile")


def _flatten_bfile(values, offset: int) -> str:
    return "".join(f"{offset + i} {v}\n" for i, v in enumerate(values))


# ---------------------------------------------------------------------------
# value


def _cmd_value(args) -> int:
    if args.method == "multiplicative":
        if args.j != 1:
            print("the multiplicative route is defined for j = 1 only", file=sys.stderr)
            return 2
        value = rascal_value(args.n, args.k, "multiplicative")
    else:
        value = rascal_gen_value(args.n, args.k, args.j, args.method)
    print(value)
    return 0


# ---------------------------------------------------------------------------
# triangle


def _cmd_triangle(args) -> int:
    rows = triangle_rows(args.n_max, args.j, method=args.method)
    if args.format == "table":
        for row in rows:
            print(" ".join(str(v) for v in row))
    elif args.format == "json":
        print(json.dumps({"j": args.j, "n_max": args.n_max, "rows": rows}))
    elif args.format == "csv":
        print("n,k,value")
        for n, row in enumerate(rows):
            for k, v in enumerate(row):
                print(f"{n},{k},{v}")
    else:
        sys.stdout.write(
            _flatten_bfile((v for row in rows for v in row), args.offset)
        )
    return 0


# ---------------------------------------------------------------------------
# enumerate


def _parse_patterns(raw: str):
    patterns = []
    for chunk in raw.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        p = as_word(chunk)
        if not is_pattern(p):
            raise DomainViolation(f"{chunk} is not a pattern (not self-reduced)")
        patterns.append(p)
    return tuple(patterns)


def _enumerate_items(args):
    if args.family == "words":
        if args.n is None:
            raise DomainViolation("words needs --n")
        if args.k is None:
            merged = []
            for k in range(args.n + 1):
                merged.extend(words_with_ascents(args.n, k, args.j))
            merged.sort()
            return [word_str(w) for w in merged], len(merged)
        expected = rascal_gen_value(args.n, args.k, args.j)
        check_cells(expected, "word listing")
        items = list(words_with_ascents(args.n, args.k, args.j))
        return [word_str(w) for w in items], len(items)
    if args.family == "ascseq":
        if args.n is None:
            raise DomainViolation("ascseq needs --n")
        cap = args.cap if args.cap is not None else 12
        items = list(ascent_sequences(args.n, cap=cap))
        return [word_str(w) for w in items], len(items)
    if args.family == "avoiders":
        if args.n is None:
            raise DomainViolation("avoiders needs --n")
        patterns = _parse_patterns(args.patterns) if args.patterns else ()
        cap = args.cap if args.cap is not None else 12
        items = list(avoiders(args.n, patterns, args.k, cap=cap))
        return [word_str(w) for w in items], len(items)
    if args.family == "subsets":
        if args.n is None or args.k is None:
            raise DomainViolation("subsets needs --n and --k")
        items = list(restricted_subsets(args.n, args.k, args.j))
        return [" ".join(str(e) for e in s.elements) for s in items], len(items)
    raise DomainViolation(f"unknown family {args.family!r}")


def _cmd_enumerate(args) -> int:
    lines, count = _enumerate_items(args)
    if args.count_only:
        print(count)
    else:
        for line in lines:
            print(line)
    return 0


# ---------------------------------------------------------------------------
# verify


def _apply_overrides(grid: dict[str, tuple[int, int]], args) -> dict[str, tuple[int, int]]:
    overrides = {
        "n": args.n_max,
        "k": args.k_max,
        "r": args.r_max,
        "m": args.m_max,
        "j": args.j_max,
    }
    out = dict(grid)
    for param, cap in overrides.items():
        if cap is not None and param in out:
            lo, _hi = out[param]
            out[param] = (lo, cap)
    return out


def _print_report_table(report: identities.IdentityReport) -> None:
    status = "PASS" if report.passed else "FAIL"
    line = f"{report.identity}: {status} cells={report.cells} grid[{report.grid}]"
    if report.corrected_passed is not None:
        line += f" corrected={'PASS' if report.corrected_passed else 'FAIL'}"
    print(line)
    for params, lhs, rhs in report.failures:
        where = ", ".join(f"{p}={v}" for p, v in params)
        print(f"  stated fails at {where}: lhs={lhs} rhs={rhs}")
    for params, lhs, rhs in report.corrected_failures or ():
        where = ", ".join(f"{p}={v}" for p, v in params)
        print(f"  corrected fails at {where}: lhs={lhs} rhs={rhs}")


def _cmd_verify(args) -> int:
    grids = identities.default_grids()
    if args.name == "all":
        names = identities.identity_names()
    else:
        identities.get_identity(args.name)  # raises UnknownIdentity
        names = [args.name]
    reports = []
    for name in names:
        grid = _apply_overrides(grids[name], args)
        reports.append(identities.verify_range(name, grid, oracle=args.oracle))
    if args.format == "json":
        payload = [r.to_dict(timing=args.timing) for r in reports]
        print(json.dumps(payload[0] if args.name != "all" else payload))
    else:
        for report in reports:
            _print_report_table(report)
        failed = [r for r in reports if not r.passed or r.corrected_passed is False]
        print(f"{len(reports) - len(failed)}/{len(reports)} identities pass")
    ok = all(r.passed and r.corrected_passed is not False for r in reports)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# bijection


def _cmd_bijection(args) -> int:
    name = args.name
    if name == "sym":
        report = maps.verify_sym(args.n_max)
    elif name == "strip":
        report = maps.verify_strip(args.n_max)
    elif name == "ascseq":
        report = maps.verify_ascseq(args.n_max)
    elif name == "subset":
        report = maps.verify_subset(args.n_max, args.j_max)
    elif name == "divider":
        report = maps.verify_divider(args.n_max, args.j_max)
    elif name == "ratio":
        report = maps.verify_ratio(args.n, args.k)
        print(
            f"image {report['image_size']} of {report['target_size']}, "
            f"missed: {', '.join(report['missed'])}"
        )
    elif name == "altbin":
        report = maps.verify_altbin(args.r, args.n, args.k)
        print(f"signed sum {report['signed_sum']}")
    elif name == "genalt":
        report = maps.verify_genalt(args.n, args.j)
        print(f"signed sum {report['signed_sum']}")
    else:
        raise UnknownBijection(f"no bijection named {name!r}")
    for line in report["details"]:
        print(line)
    print(f"{name}: {'PASS' if report['ok'] else 'FAIL'} ({report['checked']} checks)")
    return 0 if report["ok"] else 1


# ---------------------------------------------------------------------------
# etable


def _cmd_etable(args) -> int:
    check_cells(
        (args.j_max + 1) * (args.n_max + 1) * (args.n_max + 2) // 2, "E table"
    )
    tables = {
        j: [[e_defect(n, k, j) for k in range(n + 1)] for n in range(args.n_max + 1)]
        for j in range(args.j_max + 1)
    }
    negatives = [
        (n, k, j)
        for j, rows in tables.items()
        for n, row in enumerate(rows)
        for k, v in enumerate(row)
        if v < 0
    ]
    if args.format == "table":
        for j, rows in tables.items():
            print(f"# j={j}")
            for row in rows:
                print(" ".join(str(v) for v in row))
        for n, k, j in negatives:
            print(f"NEGATIVE: E({n},{k},{j}) = {tables[j][n][k]}")
    elif args.format == "json":
        print(
            json.dumps(
                {
                    "n_max": args.n_max,
                    "j_max": args.j_max,
                    "tables": {str(j): rows for j, rows in tables.items()},
                    "negatives": [
                        {"n": n, "k": k, "j": j, "value": tables[j][n][k]}
                        for n, k, j in negatives
                    ],
                }
            )
        )
    elif args.format == "csv":
        print("n,k,j,value")
        for j, rows in tables.items():
            for n, row in enumerate(rows):
                for k, v in enumerate(row):
                    print(f"{n},{k},{j},{v}")
    else:
        values = [v for rows in tables.values() for row in rows for v in row]
        sys.stdout.write(_flatten_bfile(values, args.offset))
    if negatives and args.format != "table":
        print(f"negative entries: {len(negatives)}", file=sys.stderr)
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rascal",
        description="Rascal triangle toolkit: values, word families, bijections, identities",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("value", help="one triangle entry")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--j", type=int, default=1, help="ascent bound (default 1)")
    p.add_argument(
        "--method",
        choices=("closed", "multiplicative", "linear", "enumeration"),
        default="closed",
    )
    p.set_defaults(func=_cmd_value)

    p = sub.add_parser("triangle", help="rows 0..n_max")
    p.add_argument("n_max", type=int)
    p.add_argument("--j", type=int, default=1)
    p.add_argument(
        "--method",
        choices=("closed", "multiplicative", "linear", "enumeration"),
        default="closed",
    )
    p.add_argument("--format", choices=FORMATS, default="table")
    p.add_argument("--offset", type=int, default=0, help="first index in bfile output")
    p.set_defaults(func=_cmd_triangle)

    p = sub.add_parser("enumerate", help="list or count a word family")
    p.add_argument("family", choices=("words", "ascseq", "avoiders", "subsets"))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--j", type=int, default=1)
    p.add_argument("--patterns", help="comma-separated patterns, e.g. 001,210")
    p.add_argument("--cap", type=int, help="raise the generation length cap")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="check identities over parameter grids")
    p.add_argument("name", help="identity name or 'all'")
    p.add_argument("--oracle", action="store_true", help="enumeration-backed left sides")
    p.add_argument("--n-max", type=int)
    p.add_argument("--k-max", type=int)
    p.add_argument("--r-max", type=int)
    p.add_argument("--m-max", type=int)
    p.add_argument("--j-max", type=int)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--timing", action="store_true", help="real elapsed_ms in JSON output")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bijection", help="exhaustively check one constructive map")
    p.add_argument(
        "name",
        choices=("sym", "strip", "ascseq", "subset", "divider", "ratio", "altbin", "genalt"),
    )
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--j", type=int, default=1)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--j-max", type=int, default=2)
    p.set_defaults(func=_cmd_bijection)

    p = sub.add_parser("etable", help="tabulate the product-recurrence defect E(n,k,j)")
    p.add_argument("n_max", type=int)
    p.add_argument("j_max", type=int)
    p.add_argument("--format", choices=FORMATS, default="table")
    p.add_argument("--offset", type=int, default=0)
    p.set_defaults(func=_cmd_etable)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except (UnknownIdentity, UnknownBijection) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DomainViolation, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
