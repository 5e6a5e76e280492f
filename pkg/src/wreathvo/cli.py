"""Command-line front end: ``wreathvo {chartable,mckay,verify,fock}``.

Results go to --out (or stdout) and are byte-identical for identical
arguments; timings are written to stderr only.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import re
import sys
import time
from fractions import Fraction

from wreathvo import suites
from wreathvo.groups import GroupError, build_group, make_xi
from wreathvo.lattice import FockVec, LatticeError, VertexEngine, character_table
from wreathvo.lattice import parse_fockvec as _parse_fockvec
from wreathvo.mckay import McKayError, mckay_summary
from wreathvo.partitions import partfn_to_string
from wreathvo.scalar import cyclo
from wreathvo.wreath import Z

log = logging.getLogger("wreathvo")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--group", default="cyclic:2", help='group descriptor, e.g. "trivial", "cyclic:3", "bd:8", "bt"')
    common.add_argument("--n", type=int, default=2, help="wreath product rank")
    common.add_argument("--xi", choices=["trivial", "mckay"], default="trivial")
    common.add_argument("--degree", type=_fraction, default=Fraction(2), help="truncation degree D")
    common.add_argument("--modes", type=_fraction, default=Fraction(2), help="mode bound M")
    common.add_argument("--format", choices=["json", "csv", "pretty"], default="json")
    common.add_argument("--out", help="output file (default: stdout)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("-v", "--verbose", action="store_true")

    p = _Parser(prog="wreathvo", description="Wreath product characters and vertex operators, in exact arithmetic.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("chartable", parents=[common], help="character table of G_n")
    sub.add_parser("mckay", parents=[common], help="affine Cartan data of a finite subgroup of SU(2)")
    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=list(suites.SUITES) + ["all"])
    f = sub.add_parser("fock", parents=[common], help="apply operators to a Fock space vector")
    f.add_argument("vector", help='e.g. "(1) a[-1](g1)^1 e^(0,0)" or a bare monomial')
    f.add_argument("--apply", action="append", default=[], metavar="OP",
                   help='operator applied in the given order: "a[m](gI)", "a[m](c0,c1,...)", "X[m](c0,c1,...)", "e(c0,c1,...)"')
    f.add_argument("--pair", metavar="VECTOR", help="also report the bilinear form against this vector")
    return p


# -- output helpers -----------------------------------------------------------------

def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _pretty_table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(r[k]) for r in [header] + rows) for k in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in [header] + rows]
    return "\n".join(lines) + "\n"


def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _csv_path(out: str) -> str:
    return re.sub(r"\.json$", "", out) + ".csv"


# -- subcommands -------------------------------------------------------------------

def chartable_payload(group_spec: str, n: int):
    grp = build_group(group_spec)
    rows, cols, values = character_table(grp, n)
    payload = {
        "group": group_spec,
        "n": n,
        "rows": [partfn_to_string(lam, "g") for lam in rows],
        "cols": [partfn_to_string(mu, "c") for mu in cols],
        "Z": [Z(grp, mu) for mu in cols],
        "values": [[str(x) for x in row] for row in values],
    }
    bad = suites._orthogonality(grp, n, values, rows, cols)
    return payload, bad


def cmd_chartable(args) -> int:
    if args.xi != "trivial":
        raise UsageError("chartable requires --xi trivial")
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    if args.n == 0:
        payload, bad = {"group": args.group, "n": 0, "rows": ["-"], "cols": ["-"], "Z": [1], "values": [["1"]]}, 0
    else:
        payload, bad = chartable_payload(args.group, args.n)
    header = ["lambda \\ rho"] + payload["cols"]
    body = [[r] + vals for r, vals in zip(payload["rows"], payload["values"])]
    if args.format == "json":
        _emit(_dump_json(payload), args.out)
        if args.out:
            with open(_csv_path(args.out), "w", encoding="utf-8", newline="") as fh:
                fh.write(_csv_text(header, [["Z"] + [str(z) for z in payload["Z"]]] + body))
    elif args.format == "csv":
        _emit(_csv_text(header, [["Z"] + [str(z) for z in payload["Z"]]] + body), args.out)
    else:
        _emit(_pretty_table(header, [["Z"] + [str(z) for z in payload["Z"]]] + body), args.out)
    if bad:
        log.error("orthogonality failed in %d instances", bad)
        return EXIT_FAIL
    return EXIT_OK


def cmd_mckay(args) -> int:
    summary = mckay_summary(args.group)
    if args.format == "pretty":
        lines = [
            f"group      {summary['group']}",
            f"type       {summary['label']}",
            f"delta      {summary['delta']}",
            f"roots      {summary['root_count']}",
            "cartan",
        ] + ["  " + " ".join(f"{x:>3}" for x in row) for row in summary["cartan"]]
        lines += [f"{r['name']:<10} {'pass' if r['passed'] else 'FAIL'}" for r in summary["reports"]]
        _emit("\n".join(lines) + "\n", args.out)
    elif args.format == "csv":
        rows = [[str(x) for x in row] for row in summary["cartan"]]
        _emit(_csv_text([f"g{i}" for i in range(len(rows))], rows), args.out)
    else:
        _emit(_dump_json(summary), args.out)
    return EXIT_OK if summary["passed"] else EXIT_FAIL


def run_suite(name: str, args):
    g, D, M = args.group, args.degree, args.modes
    if D < 0:
        raise UsageError("--degree must be non-negative")
    if name == "isometry":
        return suites.suite_isometry(g, args.n, args.xi)
    if name == "heisenberg":
        return suites.suite_heisenberg(g, args.xi, int(D), int(M))
    if name == "genfun":
        return suites.suite_genfun(g, args.n)
    if name == "ope":
        return suites.suite_ope(g, args.xi, int(D))
    if name == "clifford":
        return suites.suite_clifford(g, M, int(D))
    if name == "chartable":
        return suites.suite_chartable(g, args.n)
    if name == "toroidal":
        return suites.suite_toroidal(g, int(M), int(D))
    if name == "schur":
        return suites.suite_schur(g, int(D))
    if name == "mckay":
        return suites.suite_mckay()
    if name == "basic_rep":
        return suites.suite_basic_rep(g, int(D))
    raise UsageError(f"unknown suite {name!r}")


def cmd_verify(args) -> int:
    names = list(suites.SUITES) if args.suite == "all" else [args.suite]
    results = []
    for name in names:
        start = time.perf_counter()
        rep = run_suite(name, args)
        print(f"{name}: {'pass' if rep.passed else 'FAIL'} ({time.perf_counter() - start:.2f}s)", file=sys.stderr)
        results.append(rep.to_json())
    ok = all(r["passed"] for r in results)
    if args.format == "pretty":
        _emit("".join(f"{r['name']:<12} {'pass' if r['passed'] else 'FAIL'}\n" for r in results), args.out)
    elif args.format == "csv":
        _emit(_csv_text(["suite", "passed"], [[r["name"], str(r["passed"]).lower()] for r in results]), args.out)
    else:
        _emit(_dump_json({"group": args.group, "seed": args.seed, "suites": results, "passed": ok}), args.out)
    return EXIT_OK if ok else EXIT_FAIL


_OP = re.compile(r"^(a|X)\[([-\d/]+)\]\((.*)\)$|^e\((.*)\)$")


def parse_fockvec(text: str, r: int) -> FockVec:
    try:
        return _parse_fockvec(text, r)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _coords(text: str, r: int) -> tuple:
    try:
        vals = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise UsageError(f"bad lattice coordinates {text!r}") from exc
    if len(vals) != r:
        raise UsageError(f"expected {r} coordinates, got {text!r}")
    return vals


def apply_op(eng: VertexEngine, op: str, v: FockVec) -> FockVec:
    m = _OP.match(op.replace(" ", ""))
    if not m:
        raise UsageError(f"malformed operator {op!r}")
    if m.group(4) is not None:
        return eng.apply_exp(_coords(m.group(4), eng.r), v)
    kind, mode, arg = m.group(1), Fraction(m.group(2)), m.group(3)
    if arg.startswith("g"):
        gamma = eng.lat.basis(int(arg[1:]))
    else:
        gamma = _coords(arg, eng.r)
    if kind == "a":
        if mode.denominator != 1:
            raise UsageError("Heisenberg modes are integers")
        return eng.apply_heis(int(mode), gamma, v)
    if not eng.valid_mode(gamma, mode):
        raise UsageError(f"mode {mode} is not allowed for X({','.join(map(str, gamma))})")
    return eng.apply_X(gamma, mode, v)


def cmd_fock(args) -> int:
    grp = build_group(args.group)
    eng = VertexEngine(make_xi(grp, args.xi))
    v = parse_fockvec(args.vector, eng.r)
    for op in args.apply:
        v = apply_op(eng, op, v)
    result = {"group": args.group, "xi": args.xi, "vector": v.to_string()}
    if args.pair:
        result["pairing"] = str(eng.inner(v, parse_fockvec(args.pair, eng.r)))
    if args.format == "json":
        _emit(_dump_json(result), args.out)
    else:
        _emit(result["vector"] + ("\n" + result["pairing"] if args.pair else "") + "\n", args.out)
    return EXIT_OK


COMMANDS = {"chartable": cmd_chartable, "mckay": cmd_mckay, "verify": cmd_verify, "fock": cmd_fock}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"wreathvo: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(message)s")
    start = time.perf_counter()
    try:
        code = COMMANDS[args.command](args)
    except (UsageError, GroupError, McKayError, LatticeError, ValueError) as exc:
        print(f"wreathvo: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"wreathvo: {exc}", file=sys.stderr)
        return EXIT_USAGE
    log.info("%s finished in %.2fs", args.command, time.perf_counter() - start)
    return code


if __name__ == "__main__":
    sys.exit(main())
