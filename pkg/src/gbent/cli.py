"""Command-line front end.

Exit codes: 0 success / gbent, 1 not gbent, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import construct as C
from .boolean import BoolFn, anf_to_table, format_anf, format_table, parse_anf, parse_table, table_to_anf
from .enumeration import DEFAULT_BUDGET, BudgetExceeded, enumerate_gbent
from .spectral import (
    GenFn,
    format_genfn,
    format_gwht,
    format_wht,
    fwht,
    gwht,
    is_power_of_two,
    parse_genfn,
)
from .verify import build_family, check, format_report, is_gbent_direct, report_table

EXIT_OK, EXIT_NOT_GBENT, EXIT_USAGE = 0, 1, 2


class CliError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def _write(text: str, output: str | None) -> None:
    if output in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(output).write_text(text)


def _load_genfn(path: str) -> GenFn:
    try:
        return parse_genfn(_read(path))
    except ValueError as exc:
        raise CliError(f"{path}: {exc}") from None


def cmd_construct(args) -> int:
    if args.random is not None:
        k, p = args.random
        spec = C.random_spec(k, p, args.seed)
    elif args.preset:
        if args.preset not in C.PRESETS:
            raise CliError(f"unknown preset {args.preset!r}; known: {', '.join(C.PRESETS)}")
        spec = C.PRESETS[args.preset]
    elif args.spec:
        try:
            spec = C.parse_spec(_read(args.spec))
        except ValueError as exc:
            raise CliError(f"{args.spec}: {exc}") from None
    else:
        raise CliError("give a spec file, --preset NAME or --random K P")
    _write(format_genfn(C.construct_gbent_odd(spec)), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_genfn(args.file)
    component_ok = is_power_of_two(g.q) and g.q >= 4
    use_components = args.components or (not args.direct and component_ok)
    use_direct = args.direct or not args.components
    if (use_components or args.table) and not component_ok:
        raise CliError(f"component-based check needs q = 2^p with p >= 2 (got q={g.q})")

    results = []
    out = []
    if use_components:
        fam = build_family(g)
        verdict = check(fam)
        results.append(verdict.is_gbent)
        out.append(f"components: {verdict.summary()}")
    if use_direct:
        ok = is_gbent_direct(g)
        results.append(ok)
        how = "exact" if is_power_of_two(g.q) else "floating"
        out.append(f"direct ({how}): {'gbent' if ok else 'not gbent'}")
    if len(set(results)) > 1:
        out.append("warning: component and direct verdicts disagree")
    gbent = all(results)
    out.append(f"verdict: {'gbent' if gbent else 'not gbent'}")
    if args.table:
        out.append(format_report(report_table(build_family(g))).rstrip("\n"))
    print("\n".join(out))
    return EXIT_OK if gbent else EXIT_NOT_GBENT


def cmd_spectrum(args) -> int:
    g = _load_genfn(args.file)
    if g.q == 2:
        text = format_wht(fwht(BoolFn(g.n, g.values)))
    else:
        text = format_gwht(gwht(g))
    _write(text, args.output)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    try:
        res = enumerate_gbent(
            args.n,
            args.q,
            cross_check=args.components,
            collect=args.list,
            budget=args.budget,
            workers=args.workers,
        )
    except (BudgetExceeded, ValueError) as exc:
        raise CliError(str(exc)) from None
    print(f"n={res.n} q={res.q} total={res.total} gbent={res.gbent_count}")
    if args.components:
        print(f"component check: compared={res.compared} disagreements={len(res.disagreements)}")
    if args.list:
        for t in res.tables:
            print(" ".join(map(str, t)))
    return EXIT_OK if not res.disagreements else EXIT_NOT_GBENT


def cmd_convert(args) -> int:
    text = _read(args.file)
    try:
        if args.to == "anf":
            out = format_anf(table_to_anf(parse_table(text)))
        else:
            out = format_table(anf_to_table(parse_anf(text)))
    except ValueError as exc:
        raise CliError(f"{args.file}: {exc}") from None
    _write(out, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gbent", description="Construct and verify generalized bent functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a gbent function on 2k+1 variables")
    p.add_argument("spec", nargs="?", help="spec file (key=value or JSON)")
    p.add_argument("--preset", help=f"named spec, one of: {', '.join(C.PRESETS)}")
    p.add_argument("--random", nargs=2, type=int, metavar=("K", "P"), help="random spec with given k and p")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="decide whether a function file is gbent")
    p.add_argument("file", help="function file, '-' for stdin")
    p.add_argument("--table", action="store_true", help="print the W(u) report")
    p.add_argument("--direct", action="store_true", help="use the GWHT magnitude test only")
    p.add_argument("--components", action="store_true", help="use the component-family test only")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("spectrum", help="dump the WHT (q=2) or GWHT")
    p.add_argument("file")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("enumerate", help="exhaustively count gbent functions")
    p.add_argument("n", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max number of functions to scan")
    p.add_argument("--components", action="store_true", help="cross-check against the component test")
    p.add_argument("--list", action="store_true", help="print every gbent function found")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("convert", help="truth table <-> ANF")
    p.add_argument("file")
    p.add_argument("--to", choices=("anf", "table"), required=True)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_convert)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
