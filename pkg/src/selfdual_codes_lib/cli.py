"""selfdual: factor x^n - a, classify self-dual codes, run the claims report.

Exit codes: 0 success, 2 invalid parameters, 3 negacyclic query in
characteristic 2, 4 engine/oracle disagreement, 5 corrupt catalog.
"""
from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path
from typing import Any

from .catalog import append_records, build_record, catalog_keys
from .claims import ClaimsConfig, format_claims_table, has_engine_oracle_mismatch, run_claims_report
from .codes import (
    count_selfdual_cyclic,
    count_selfdual_negacyclic,
    enumerate_selfdual_cyclic,
    enumerate_selfdual_negacyclic,
)
from .config import default_catalog_path, load_env_from_repo_root, oracle_limits
from .cyclo import cosets, factor_xn_minus_a, mult_order
from .errors import (
    CatalogCorruptError,
    CharacteristicTwoUnsupported,
    InvalidInput,
    NegacyclicTrivialInCharTwo,
    OracleRangeExceeded,
)
from .gf import make_field
from .oracle import oracle_selfdual_search
from .poly import format_poly
from .serde import canonical_json, factorization_to_dict, field_to_dict

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_CHAR_TWO = 3
EXIT_MISMATCH = 4
EXIT_CATALOG = 5


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    Path(out).write_text(text, encoding="utf-8", newline="\n")


def cmd_factor(args: argparse.Namespace) -> int:
    field = make_field(args.p, args.s)
    # x^n + 1 = x^n - 1 in characteristic 2
    constant = 1 if field.p == 2 else args.constant
    fz = factor_xn_minus_a(field, args.n, constant)
    if args.json:
        print(canonical_json(factorization_to_dict(fz)))
        return EXIT_OK
    print(f"{format_poly(fz.target)} over {field.label} (n = {fz.core} * {field.p}^{fz.r})")
    for i, (f, mult) in enumerate(fz.factors):
        print(f"  [{i}] ({format_poly(f)})^{mult}  {fz.pairing_label(i)}")
    print(f"s={fz.s} t={fz.t}")
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    """Shared handler of exists, count, enumerate and verify."""
    field = make_field(args.p, args.s)
    a = args.constant
    if a == -1:
        if field.p == 2:
            raise NegacyclicTrivialInCharTwo("negacyclic codes over characteristic 2 are cyclic codes; use --constant 1")
        count_fn, list_fn = count_selfdual_negacyclic, enumerate_selfdual_negacyclic
    else:
        count_fn, list_fn = count_selfdual_cyclic, enumerate_selfdual_cyclic
    count = count_fn(field, args.n)

    report: dict[str, Any] = {"field": field_to_dict(field), "n": args.n, "a": a, "exists": count > 0, "count": count}
    want_list = args.command == "enumerate" or args.enumerate
    want_oracle = args.command == "verify" or args.verify
    if want_list:
        report["generators"] = [format_poly(g) for g in list_fn(field, args.n)]
    status = EXIT_OK
    if want_oracle:
        found = oracle_selfdual_search(field, args.n, a, verbose=args.verbose)
        agree = len(found) == count
        report["oracle_count"] = len(found)
        report["oracle_agrees"] = agree
        if not agree:
            status = EXIT_MISMATCH

    if args.catalog is not None:
        if a != -1:
            raise InvalidInput("the catalog stores negacyclic classifications; use --constant -1")
        record = build_record(field, args.n, verify=want_oracle, verbose=args.verbose)
        append_records(args.catalog or default_catalog_path(), [record], verbose=args.verbose)

    if args.json:
        print(canonical_json(report))
    else:
        kind = "negacyclic" if a == -1 else "cyclic"
        print(f"self-dual {kind} codes of length {args.n} over {field.label}")
        print(f"exists: {'true' if report['exists'] else 'false'}")
        print(f"count: {count}")
        for g in report.get("generators", []):
            print(f"  {g}")
        if want_oracle:
            print(f"oracle: {report['oracle_count']} ({'agrees' if report['oracle_agrees'] else 'DISAGREES'})")
    return status


def cmd_order(args: argparse.Namespace) -> int:
    modulus = 2 * args.m if args.odd else args.m
    subset = "odd" if args.odd else "all"
    cs = cosets(args.q, modulus, subset)
    print(f"ord_{modulus}({args.q}) = {mult_order(args.q, modulus)}")
    for c in cs:
        mark = "self-paired" if c.is_self_paired else ""
        print(f"  {c} {mark}".rstrip())
    return EXIT_OK


def cmd_claims(args: argparse.Namespace) -> int:
    config = ClaimsConfig(
        max_n=args.max_n,
        oracle_max_n=args.oracle_max_n,
        include_sweeps=not args.no_sweeps,
        limits=oracle_limits(),
        verbose=args.verbose,
    )
    verdicts = run_claims_report(config)
    if args.json:
        text = "".join(v.to_json() + "\n" for v in verdicts)
    else:
        text = format_claims_table(verdicts)
    _emit(text, args.out)
    return EXIT_MISMATCH if has_engine_oracle_mismatch(verdicts) else EXIT_OK


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise InvalidInput(f"expected a comma separated list of integers, got {text!r}") from e


def cmd_sweep(args: argparse.Namespace) -> int:
    primes = _parse_int_list(args.p_list)
    if 2 in primes:
        raise NegacyclicTrivialInCharTwo("the sweep classifies negacyclic codes; drop p=2")
    catalog = args.catalog or default_catalog_path()
    known = catalog_keys(catalog)
    written = 0
    for p in primes:
        for s in range(1, args.s_max + 1):
            field = make_field(p, s)
            batch = [
                build_record(field, n, verify=args.verify, verbose=args.verbose)
                for n in range(1, args.n_max + 1)
                if (p, s, n, -1) not in known
            ]
            # each field's records are on disk before the next field starts
            written += len(append_records(catalog, batch, verbose=args.verbose))
    if args.verbose:
        print(f"[Sweep] {written} new records, {len(known)} already catalogued in {catalog}")
    return EXIT_OK


def _field_args(parser: argparse.ArgumentParser, constant_default: int) -> None:
    parser.add_argument("--p", type=int, required=True, help="characteristic")
    parser.add_argument("--s", type=int, default=1, help="extension degree")
    parser.add_argument("--n", type=int, required=True, help="code length")
    parser.add_argument("--constant", type=int, choices=(1, -1), default=constant_default)
    parser.add_argument("--json", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="selfdual", description="Self-dual cyclic and negacyclic codes over F_{p^s}")
    parser.add_argument("--env-file", default=".env", help="dotenv file searched from the working directory up")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verbose", action="store_true")

    p_factor = sub.add_parser("factor", parents=[common], help="factor x^n - a with its reciprocal pairing")
    _field_args(p_factor, constant_default=-1)
    p_factor.set_defaults(handler=cmd_factor)

    for name, help_text in (
        ("exists", "existence and count of self-dual codes"),
        ("count", "number of self-dual codes"),
        ("enumerate", "list the self-dual generators"),
        ("verify", "cross-check the count with the brute-force oracle"),
    ):
        p_cls = sub.add_parser(name, parents=[common], help=help_text)
        _field_args(p_cls, constant_default=-1)
        p_cls.add_argument("--enumerate", action="store_true")
        p_cls.add_argument("--verify", action="store_true")
        p_cls.add_argument("--catalog", nargs="?", const="", default=None,
                           help="append to FILE, or to $SELFDUAL_CATALOG when FILE is omitted")
        p_cls.set_defaults(handler=cmd_classify)

    p_order = sub.add_parser("order", parents=[common], help="multiplicative order and cyclotomic cosets")
    p_order.add_argument("--q", type=int, required=True)
    p_order.add_argument("--m", type=int, required=True)
    p_order.add_argument("--odd", action="store_true", help="odd residues modulo 2m")
    p_order.set_defaults(handler=cmd_order)

    p_claims = sub.add_parser("claims", parents=[common], help="verdict table for every claim instance")
    p_claims.add_argument("--max-n", type=int, default=40)
    p_claims.add_argument("--oracle-max-n", type=int, default=72)
    p_claims.add_argument("--no-sweeps", action="store_true")
    p_claims.add_argument("--json", action="store_true")
    p_claims.add_argument("--out", default=None)
    p_claims.set_defaults(handler=cmd_claims)

    p_sweep = sub.add_parser("sweep", parents=[common], help="classify a parameter range into the catalog")
    p_sweep.add_argument("--p-list", required=True, help="comma separated odd primes")
    p_sweep.add_argument("--s-max", type=int, default=1)
    p_sweep.add_argument("--n-max", type=int, required=True)
    p_sweep.add_argument("--verify", action="store_true")
    p_sweep.add_argument("--catalog", default=None)
    p_sweep.set_defaults(handler=cmd_sweep)
    return parser


def _fail(code: int, message: str) -> int:
    print(f"selfdual: {message}", file=sys.stderr)
    return code


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INVALID

    load_env_from_repo_root(args.env_file, verbose=args.verbose)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            code = args.handler(args)
        except CatalogCorruptError as e:
            code = _fail(EXIT_CATALOG, str(e))
        except CharacteristicTwoUnsupported as e:
            code = _fail(EXIT_CHAR_TWO, str(e))
        except AssertionError as e:
            code = _fail(EXIT_MISMATCH, str(e).partition("\n")[0])
        except (ValueError, TypeError, ArithmeticError, OracleRangeExceeded, OSError) as e:
            code = _fail(EXIT_INVALID, str(e))
    if args.verbose:
        for w in caught:
            print(f"[Warning] {w.message}")
    return code


if __name__ == "__main__":
    sys.exit(main())
