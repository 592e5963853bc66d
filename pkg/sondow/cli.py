#!/usr/bin/env python3
"""
Sondow command line

Usage:
    python -m sondow check 1806 --mu 1
    python -m sondow search --mu -1 --from 2 --to 100000 --composite-only
    python -m sondow conjecture1 --mu-range=-1000..1000

Exit codes: 0 success, 1 predicate false (check), 2 input error,
3 factoring budget or oracle bound exceeded.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from .catalog import SondowCatalog
from .corpus import load_bfile
from .errors import BudgetError, SondowError
from .search import search_range, write_jsonl

logger = logging.getLogger("sondow")

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _integer(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a decimal integer")


def _mu_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}")
    a, b = _integer(lo), _integer(hi)
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(a, b + 1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sondow", description="mu-Sondow, Giuga and weak primary pseudoperfect numbers")
    parser.add_argument("--log-level", default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser("check", help="classify n against mu")
    check.add_argument("n", type=_integer)
    check.add_argument("--mu", type=_integer, required=True)
    check.add_argument("--factors", help="known factorization, e.g. 2,3,5 or 2^3,7")
    check.add_argument("--json", action="store_true")

    mu_of = commands.add_parser("mu-of", help="canonical mu of n")
    mu_of.add_argument("n", type=_integer)
    mu_of.add_argument("--factors")
    mu_of.add_argument("--json", action="store_true")

    derive = commands.add_parser("derive", help="arithmetic derivative of n")
    derive.add_argument("n", type=_integer)
    derive.add_argument("--factors")
    derive.add_argument("--json", action="store_true")

    search = commands.add_parser("search", help="scan a range for mu-Sondow numbers")
    search.add_argument("--mu", type=_integer, required=True)
    search.add_argument("--from", dest="lo", type=_integer, required=True)
    search.add_argument("--to", dest="hi", type=_integer, required=True)
    search.add_argument("--composite-only", action="store_true")
    search.add_argument("--jobs", type=_integer, default=1)
    search.add_argument("--checkpoint", help="checkpoint file, resumed when it exists")
    search.add_argument("--jsonl", help="write records here instead of stdout")

    conj1 = commands.add_parser("conjecture1", help="look for members in [2, |mu|]")
    conj1.add_argument("--mu-range", type=_mu_range, required=True, help="a..b (use --mu-range=-a..b for negatives)")
    conj1.add_argument("--json", action="store_true")

    conj2 = commands.add_parser("conjecture2", help="look for members in (|mu|, bound]")
    conj2.add_argument("--mu", type=_integer, required=True)
    conj2.add_argument("--bound", type=_integer, required=True)
    conj2.add_argument("--json", action="store_true")

    residues = commands.add_parser("residues", help="values reduced modulo m")
    residues.add_argument("--mod", dest="modulus", type=_integer, default=288)
    source = residues.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", help="one integer per line, or an OEIS b-file")
    source.add_argument("--family", choices=["giuga", "primary_ppp"])
    residues.add_argument("--json", action="store_true")

    xcheck = commands.add_parser("xcheck", help="check a b-file against a predicate")
    xcheck.add_argument("--bfile", required=True, help="path, or A007850 / A054377 for the vendored files")
    xcheck.add_argument("--predicate", required=True, choices=["giuga", "weak_ppp", "primary_ppp", "sondow"])
    xcheck.add_argument("--mu", type=_integer, help="mu for the sondow predicate")
    xcheck.add_argument("--hints", help="factor hints file (JSON list or JSON Lines)")
    xcheck.add_argument("--json", action="store_true")

    return parser


def _read_values(path: str) -> List[int]:
    text = Path(path).read_text()
    rows = [line.split() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    if rows and all(len(row) == 2 for row in rows):
        return [entry.value for entry in load_bfile(path)]
    if any(len(row) != 1 for row in rows):
        raise SondowError(f"{path}: expected one integer per line or 'index value' pairs")
    try:
        return [int(row[0]) for row in rows]
    except ValueError as e:
        raise SondowError(f"{path}: {e}")


def _print(result: Dict[str, Any], as_json: bool, lines: Sequence[str]) -> None:
    if as_json:
        print(json.dumps(result, indent=2))
    else:
        print("\n".join(lines))


def _cmd_check(catalog: SondowCatalog, args) -> int:
    result = catalog.check(args.n, args.mu, args.factors)
    status = "member" if result["member"] else "not a member"
    lines = [f"{result['n']} = {result['factorization']} is {status} of S_{result['mu']}"]
    for w in result["witnesses"]:
        mark = "ok" if w["residue"] == "0" else "FAIL"
        lines.append(f"  p={w['prime']} s={w['exponent']}: (n/p + mu) mod p^s = {w['residue']} [{mark}]")
    lines.append("  flags: " + ", ".join(
        f"{name}={'-' if value is None else value}" for name, value in result["flags"].items()
    ))
    lines.append(f"  canonical mu: {result['canonical_mu']} (also {result['negative_mu']})")
    lines.append(f"  giuga={result['giuga']} weak_ppp={result['weak_ppp']} primary_ppp={result['primary_ppp']}")
    _print(result, args.json, lines)
    return EXIT_OK if result["member"] else EXIT_FALSE


def _cmd_mu_of(catalog: SondowCatalog, args) -> int:
    result = catalog.mu_of(args.n, args.factors)
    _print(result, args.json, [result["canonical_mu"]])
    return EXIT_OK


def _cmd_derive(catalog: SondowCatalog, args) -> int:
    result = catalog.derive(args.n, args.factors)
    _print(result, args.json, [result["derivative"]])
    return EXIT_OK


def _cmd_search(catalog: SondowCatalog, args) -> int:
    records = search_range(
        args.mu, args.lo, args.hi,
        composite_only=args.composite_only,
        jobs=args.jobs,
        checkpoint=args.checkpoint,
        config=catalog.config,
    )
    if args.jsonl:
        count = write_jsonl(records, args.jsonl)
        logger.info(f"Wrote {count} record(s) to {args.jsonl}")
    else:
        for record in records:
            print(record.to_json(), flush=True)
    return EXIT_OK


def _cmd_conjecture1(catalog: SondowCatalog, args) -> int:
    result = catalog.conjecture1(args.mu_range)
    lines = [
        f"mu={r['mu']}: " + (f"witness {r['witness']}" if r["witness"] else f"exhausted [2, {r['interval'][1]}]")
        for r in result["reports"]
    ]
    lines.append(f"{result['checked']} checked, exhausted at: {', '.join(result['exhausted']) or 'none'}")
    _print(result, args.json, lines)
    return EXIT_OK


def _cmd_conjecture2(catalog: SondowCatalog, args) -> int:
    result = catalog.conjecture2(args.mu, args.bound)
    lo, hi = result["interval"]
    if result["exhausted"]:
        line = f"mu={result['mu']}: no member in ({lo}, {hi}] ({result['wall_time']}s)"
    else:
        line = f"mu={result['mu']}: witness {result['witness']} in ({lo}, {hi}]"
    _print(result, args.json, [line])
    return EXIT_OK


def _cmd_residues(catalog: SondowCatalog, args) -> int:
    values = catalog.known_values(args.family) if args.family else _read_values(args.input)
    result = catalog.residues(values, args.modulus)
    _print(result, args.json, [", ".join(result["residues"])])
    return EXIT_OK


def _cmd_xcheck(catalog: SondowCatalog, args) -> int:
    if args.predicate == "sondow" and args.mu is None:
        raise SondowError("--predicate sondow needs --mu")
    if args.hints:
        catalog.add_hints(args.hints)
    result = catalog.crosscheck(args.bfile, args.predicate, args.mu)
    lines = [result["summary"]]
    if result["failed"]:
        lines.append("failed: " + ", ".join(result["failed"]))
    if result["skipped"]:
        lines.append("skipped (no factorization): " + ", ".join(result["skipped"]))
    _print(result, args.json, lines)
    return EXIT_OK if result["ok"] else EXIT_FALSE


COMMANDS = {
    "check": _cmd_check,
    "mu-of": _cmd_mu_of,
    "derive": _cmd_derive,
    "search": _cmd_search,
    "conjecture1": _cmd_conjecture1,
    "conjecture2": _cmd_conjecture2,
    "residues": _cmd_residues,
    "xcheck": _cmd_xcheck,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="[%(asctime)s] %(levelname)s - %(name)s - %(message)s",
        stream=sys.stderr,
    )
    try:
        catalog = SondowCatalog()
        return COMMANDS[args.command](catalog, args)
    except BudgetError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
