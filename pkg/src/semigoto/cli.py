"""Command-line entry point: ``semigoto <command> ...``.

Exit codes: 0 success, 1 a verification failed, 2 bad input or usage.
"""

from __future__ import annotations

import argparse
import configparser
import json
import sys
from typing import List, Optional

from . import census
from ._kernel import MAX_GENUS
from .constructions import chain_report, fiber_report, hull_semigroup, idealization_report
from .errors import SemigroupError
from .fixtures import run_all
from .herzog import emit_matrix, goto_rank_via_theorem, herzog_data
from .report import analyze, render, render_chain, table
from .semigroup import NumericalSemigroup, from_generators, parse_generators

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

CONFIG_KEYS = {
    "genus_max": int,
    "frobenius_max": int,
    "multiplicity_max": int,
    "workers": int,
    "filter": str,
    "out": str,
    "format": str,
}


def _semigroup(text: str) -> NumericalSemigroup:
    return from_generators(parse_generators(text))


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, ensure_ascii=False))


def cmd_analyze(args) -> int:
    bundle = analyze(_semigroup(args.generators))
    if args.json:
        _emit(bundle.to_dict())
    else:
        print(render(bundle))
    return EXIT_FAIL if bundle.inconsistencies() else EXIT_OK


def cmd_chain(args) -> int:
    rep = chain_report(_semigroup(args.generators))
    if args.json:
        _emit(rep.to_dict())
    else:
        print(render_chain(rep))
    return EXIT_OK


def cmd_construct(args) -> int:
    sg = _semigroup(args.generators)
    if args.kind == "idealization":
        if args.other is not None:
            raise SemigroupError("idealization takes one semigroup; give the extension with --ext")
        over = _semigroup(args.ext) if args.ext else hull_semigroup(sg)
        rep = idealization_report(sg, over)
    else:
        if args.other is None:
            raise SemigroupError("fiber needs two semigroups")
        rep = fiber_report(sg, _semigroup(args.other))
    if args.json:
        _emit(rep.to_dict())
    else:
        rows = [("construction", rep.kind)]
        rows += [(f"input {i + 1}", str(item)) for i, item in enumerate(rep.inputs)]
        rows += [("derived rank", rep.derived_rank), ("rule", rep.rule)]
        print(table(rows))
    return EXIT_OK


def cmd_herzog(args) -> int:
    sg = _semigroup(args.generators)
    order = parse_generators(args.order) if args.order else None
    data = herzog_data(sg, order)
    if args.json:
        _emit(dict(data.to_dict(), closed_form_rank=goto_rank_via_theorem(sg) if order is None else None))
    else:
        print(emit_matrix(sg, order))
        if order is None:
            rank = goto_rank_via_theorem(sg)
            print("closed-form rank:", "not Goto" if rank is None else rank)
    return EXIT_OK


def _load_config(path: Optional[str]) -> dict:
    if not path:
        return {}
    parser = configparser.ConfigParser()
    try:
        with open(path, encoding="utf-8") as fh:
            parser.read_string("[census]\n" + fh.read())
    except (OSError, configparser.Error) as exc:
        raise SemigroupError(f"cannot read config {path}: {exc}") from exc
    out = {}
    for key, value in parser["census"].items():
        if key not in CONFIG_KEYS:
            raise SemigroupError(f"unknown config key {key!r} in {path}")
        try:
            out[key] = CONFIG_KEYS[key](value)
        except ValueError as exc:
            raise SemigroupError(f"bad value for {key} in {path}: {value!r}") from exc
    return out


def cmd_census(args) -> int:
    conf = _load_config(args.config)

    def pick(flag, key, default=None):
        return flag if flag is not None else conf.get(key, default)

    g_max = pick(args.genus_max, "genus_max", 10)
    if not 0 <= g_max <= MAX_GENUS:
        raise SemigroupError(f"--genus-max must lie in 0..{MAX_GENUS}")
    fmt = "csv" if args.csv else conf.get("format", "jsonl")
    out_path = pick(args.out, "out")
    sink = open(out_path, "w", encoding="utf-8", newline="") if out_path else sys.stdout
    try:
        summary = census.run_census(
            sink,
            g_max,
            expr=pick(args.filter, "filter"),
            fmt=fmt,
            f_max=pick(args.frobenius_max, "frobenius_max"),
            e_max=pick(args.multiplicity_max, "multiplicity_max"),
            workers=pick(args.workers, "workers", 1),
        )
    finally:
        if out_path:
            sink.close()
    text = json.dumps(summary.to_dict())
    print(text, file=sys.stdout if out_path else sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_all()
    failed = sum(1 for _, ok, _ in results if not ok)
    if args.json:
        _emit([{"fixture": name, "passed": ok, "observed": obs} for name, ok, obs in results])
    else:
        width = max(len(name) for name, _, _ in results)
        for name, ok, obs in results:
            line = f"{'PASS' if ok else 'FAIL'}  {name:<{width}}"
            if not ok:
                line += f"  got {obs}"
            print(line)
        print(f"{len(results) - failed}/{len(results)} fixtures passed")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="semigoto", description="Goto-rank classification of numerical semigroup rings.")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze_cmd = sub.add_parser("analyze", help="classify one semigroup and print every invariant")
    analyze_cmd.add_argument("generators", help="comma-separated generators, e.g. 7,10,22")
    analyze_cmd.add_argument("--json", action="store_true")
    analyze_cmd.set_defaults(func=cmd_analyze)

    chain_cmd = sub.add_parser("chain", help="blow-up chain with per-step ranks")
    chain_cmd.add_argument("generators")
    chain_cmd.add_argument("--json", action="store_true")
    chain_cmd.set_defaults(func=cmd_chain)

    construct_cmd = sub.add_parser("construct", help="rank of an idealization or a fiber product")
    construct_cmd.add_argument("kind", choices=["idealization", "fiber"])
    construct_cmd.add_argument("generators")
    construct_cmd.add_argument("other", nargs="?", help="second factor (fiber only)")
    construct_cmd.add_argument("--ext", help="generators of the over-semigroup for idealization (default: the hull R[K])")
    construct_cmd.add_argument("--json", action="store_true")
    construct_cmd.set_defaults(func=cmd_construct)

    herzog_cmd = sub.add_parser("herzog", help="Herzog matrix of a nonsymmetric 3-generated semigroup")
    herzog_cmd.add_argument("generators")
    herzog_cmd.add_argument("--order", help="explicit role order a1,a2,a3")
    herzog_cmd.add_argument("--json", action="store_true")
    herzog_cmd.set_defaults(func=cmd_herzog)

    census_cmd = sub.add_parser("census", help="classify every semigroup up to a genus bound")
    census_cmd.add_argument("--genus-max", type=int)
    census_cmd.add_argument("--frobenius-max", type=int)
    census_cmd.add_argument("--multiplicity-max", type=int)
    census_cmd.add_argument("--filter", help="e.g. 'e == 3 and min_mult' (aliases e v f g r n)")
    fmt = census_cmd.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON lines (default)")
    fmt.add_argument("--csv", action="store_true")
    census_cmd.add_argument("--out", help="record file; the summary then goes to stdout")
    census_cmd.add_argument("--workers", type=int)
    census_cmd.add_argument("--config", help="key = value file with census defaults")
    census_cmd.set_defaults(func=cmd_census)

    verify_cmd = sub.add_parser("verify-paper", help="check every published reference value")
    verify_cmd.add_argument("--json", action="store_true")
    verify_cmd.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SemigroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
