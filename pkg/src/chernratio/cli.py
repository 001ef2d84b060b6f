"""Command-line front end.

Every subcommand builds a JSON-able payload; ``--format table`` renders the
same payload as aligned text. Exit status: 0 on success, 2 for invalid
requests, 3 when the obstruction polynomial is identically zero.
"""

import argparse
import json
import re
import sys

from . import branched_cover as bc
from .chern_calculus import (
    ChernData,
    cpn_data,
    pontrjagin_class,
    pontrjagin_number,
    ratio_cpn,
)
from .exact_algebra import Partition, as_rational, iter_partitions, partitions_of
from .hirzebruch_genera import alpha_expansion, l_polynomial, proportionality_constant, signature
from .power_series import sign_series

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_DEGENERATE = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _partition_arg(text):
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational_arg(text):
    try:
        return as_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational_list_arg(text):
    try:
        return tuple(as_rational(tok) for tok in text.split(",") if tok.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _require_even(n):
    if n % 2:
        raise ValueError(f"n must be even, got {n}")


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise ValueError(f"input file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def _load_data(args):
    if args.data:
        raw = _load_json(args.data)
        try:
            return ChernData.from_json(raw)
        except (KeyError, TypeError) as exc:
            raise ValueError(f"{args.data}: malformed ChernData ({exc})") from None
    if args.n is None:
        raise ValueError("give either --n or --data")
    if args.n < 1:
        raise ValueError("--n must be positive")
    return cpn_data(args.n)


# -- table rendering --

def _cell(value):
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        if all(isinstance(v, int) for v in value):
            return "[" + ",".join(map(str, value)) + "]"
        return " ".join(_cell(v) for v in value) if value else "(none)"
    return str(value)


def _records_table(records):
    headers = list(records[0])
    rows = [[_cell(r[h]) for h in headers] for r in records]
    widths = [max(len(h), *(len(row[i]) for row in rows)) for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows)
    return lines


def render_table(payload):
    scalars = []
    blocks = []
    for key, value in payload.items():
        if isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
            blocks.append((key, _records_table(value)))
        elif isinstance(value, dict):
            blocks.append((key, render_table(value).splitlines()))
        else:
            scalars.append((key, _cell(value)))
    lines = []
    if scalars:
        width = max(len(k) for k, _ in scalars)
        lines.extend(f"{k.ljust(width)}  {v}" for k, v in scalars)
    for key, block in blocks:
        if lines:
            lines.append("")
        lines.append(f"{key}:")
        lines.extend("  " + line for line in block)
    return "\n".join(lines)


def _emit(payload, args, out):
    if args.format == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write(render_table(payload) + "\n")


# -- subcommands --

def cmd_partitions(args, out):
    if args.n < 0:
        raise ValueError("--n must be non-negative")
    if args.format == "json":
        parts = [p.to_json() for p in partitions_of(args.n)]
        _emit({"n": args.n, "count": len(parts), "partitions": parts}, args, out)
        return EXIT_OK
    # stream: p(n) grows quickly
    out.write(f"n      {args.n}\n\npartitions:\n")
    count = 0
    for part in iter_partitions(args.n):
        out.write(f"  {part}\n")
        count += 1
    out.write(f"\ncount  {count}\n")
    return EXIT_OK


def cmd_chern_cpn(args, out):
    if args.n < 1:
        raise ValueError("--n must be positive")
    data = cpn_data(args.n)
    payload = {
        "n": args.n,
        "euler_characteristic": str(data.euler_characteristic),
        "chern_numbers": [{"partition": p.to_json(), "value": str(v)} for p, v in data.items()],
    }
    _emit(payload, args, out)
    return EXIT_OK


def cmd_ratios(args, out):
    for label, part in (("--num", args.num), ("--den", args.den)):
        if part.weight != args.n:
            raise ValueError(f"{label} {part} is not a partition of {args.n}")
    ratio = ratio_cpn(args.n, args.num, args.den)
    if args.format == "json":
        _emit({"n": args.n, "num": args.num.to_json(), "den": args.den.to_json(),
               "ratio": str(ratio)}, args, out)
    else:
        out.write(f"{ratio}\n")
    return EXIT_OK


def cmd_pontryagin(args, out):
    data = _load_data(args)
    n = data.n
    _require_even(n)
    classes = [
        {"k": k, "chern_polynomial": str(pontrjagin_class(k, n))}
        for k in range(1, n // 2 + 1)
    ]
    numbers = [
        {"partition": p.to_json(), "value": str(pontrjagin_number(p, data))}
        for p in partitions_of(n // 2)
    ]
    _emit({"n": n, "classes": classes, "pontrjagin_numbers": numbers}, args, out)
    return EXIT_OK


def cmd_l_genus(args, out):
    if args.k < 1:
        raise ValueError("--k must be positive")
    poly = l_polynomial(args.k)
    payload = {"k": args.k, "polynomial": str(poly), "terms": poly.to_json()}
    _emit(payload, args, out)
    return EXIT_OK


def cmd_signature(args, out):
    data = _load_data(args)
    n = data.n
    _require_even(n)
    sig = signature(data)
    chi = data.euler_characteristic
    payload = {
        "n": n,
        "signature": str(sig),
        "euler_characteristic": str(chi),
        "proportionality_constant": str(proportionality_constant(n)),
        "signature_times_n_plus_1_minus_chi": str(sig * (n + 1) - chi),
    }
    if args.alpha:
        payload["alpha_expansion"] = alpha_expansion(n).to_json()
    _emit(payload, args, out)
    return EXIT_OK


def cmd_sign_series(args, out):
    if args.order < 0:
        raise ValueError("--order must be non-negative")
    series = sign_series(args.d, args.order)
    payload = {
        "d": args.d,
        "order": args.order,
        "coefficients": [{"degree": k, "coefficient": str(c)} for k, c in enumerate(series)],
    }
    _emit(payload, args, out)
    return EXIT_OK


def _cover_input(args):
    if args.input:
        raw = _load_json(args.input)
        try:
            return bc.CoverInput.from_json(raw)
        except (KeyError, TypeError) as exc:
            raise ValueError(f"{args.input}: malformed CoverInput ({exc})") from None
    missing = [flag for flag, value in (("--n", args.n), ("--d", args.d),
                                        ("--chi-m", args.chi_m), ("--chi-n", args.chi_n))
               if value is None]
    if missing:
        raise ValueError(f"missing {', '.join(missing)} (or pass --input)")
    return bc.CoverInput(
        n=args.n, d=args.d, m=args.m, chi_M=args.chi_m, chi_N=args.chi_n,
        normal_chern=args.normal_chern, sigma_M=args.sigma_m,
    )


def _check_scan_bound(args):
    if args.scan_bound < 2:
        raise ValueError("--scan-bound must be >= 2")


def cmd_cover(args, out):
    inp = _cover_input(args)
    _check_scan_bound(args)
    report = bc.cover_report(inp, args.scan_bound)
    _emit(report.to_json(), args, out)
    return EXIT_DEGENERATE if report.obstruction_identically_zero else EXIT_OK


def cmd_obstruction(args, out):
    inp = _cover_input(args)
    _check_scan_bound(args)
    poly = bc.obstruction_polynomial(inp, args.scan_bound)
    payload = {
        "input": inp.to_json(),
        "identically_zero": poly.identically_zero,
        "degree": None if poly.identically_zero else poly.degree,
        "coefficients": [{"power": k, "coefficient": str(c)} for k, c in enumerate(poly.coefficients)],
        "scan_bound": args.scan_bound,
        "roots": list(poly.roots),
    }
    _emit(payload, args, out)
    if poly.identically_zero:
        args.err.write("chernratio: obstruction polynomial is identically zero\n")
        return EXIT_DEGENERATE
    return EXIT_OK


def build_parser():
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("table", "json"), default="table")

    parser = _Parser(prog="chernratio", description="Exact Chern-number and branched-cover calculations.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("partitions", parents=[fmt], help="list the partitions of n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("chern-cpn", parents=[fmt], help="Chern numbers of CP^n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_chern_cpn)

    p = sub.add_parser("ratios", parents=[fmt], help="ratio c_I(CP^n) / c_J(CP^n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--num", type=_partition_arg, required=True, help="partition I, e.g. 3,1")
    p.add_argument("--den", type=_partition_arg, required=True, help="partition J")
    p.set_defaults(func=cmd_ratios)

    for name, func, helptext in (
        ("pontryagin", cmd_pontryagin, "Pontrjagin classes and numbers"),
        ("signature", cmd_signature, "signature from Chern numbers"),
    ):
        p = sub.add_parser(name, parents=[fmt], help=helptext)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--n", type=int, help="use CP^n")
        src.add_argument("--data", help="ChernData JSON file")
        if name == "signature":
            p.add_argument("--alpha", action="store_true", help="also print the Chern-number expansion")
        p.set_defaults(func=func)

    p = sub.add_parser("l-genus", parents=[fmt], help="the k-th L-polynomial")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_l_genus)

    p = sub.add_parser("sign-series", parents=[fmt], help="expansion of sign(t)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--order", type=int, default=8)
    p.set_defaults(func=cmd_sign_series)

    for name, func, helptext in (
        ("cover", cmd_cover, "invariants of a cyclic branched cover"),
        ("obstruction", cmd_obstruction, "obstruction polynomial in d and its integer roots"),
    ):
        p = sub.add_parser(name, parents=[fmt], help=helptext)
        p.add_argument("--input", help="CoverInput JSON file")
        p.add_argument("--n", type=int)
        p.add_argument("--d", type=int)
        p.add_argument("--m", type=int, default=1)
        p.add_argument("--chi-m", type=_rational_arg)
        p.add_argument("--chi-n", type=_rational_arg)
        p.add_argument("--normal-chern", type=_rational_list_arg,
                       help="c_k((N'_k)^perp) for k = 1..n/2, comma separated")
        p.add_argument("--sigma-m", type=_rational_arg, help="signature of M (default chi(M)/(n+1))")
        p.add_argument("--scan-bound", type=int, default=1000)
        p.set_defaults(func=func)

    return parser


def _glue_negative_lists(argv):
    # argparse would read "--normal-chern -8,3" as an unknown option "-8,3"
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--normal-chern":
            nxt = next(it, None)
            if nxt is not None and _NUMBER_LIST.match(nxt):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(tok)
    return out


_NUMBER_LIST = re.compile(r"^-[\d/,\s-]+$")


def run(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_negative_lists(argv))
        args.err = err
        return args.func(args, out)
    except (UsageError, ValueError, ZeroDivisionError) as exc:
        err.write(f"chernratio: error: {str(exc).splitlines()[0]}\n")
        return EXIT_INVALID


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
