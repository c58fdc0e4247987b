"""Command-line surface: verify identities, print sequence tables, run
involution certificates, and enumerate the weighted families.

Exit codes: 0 all checks pass, 1 usage or configuration error, 2 a
mathematical check failed.  All output is exact: rationals render as "p/q"
(or "p" when integral) and polynomials as low-degree-first coefficient lists.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import combinat, identities, sequences, series
from .exact_core import PolySeries, QPolynomial

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2


def _frac_str(f) -> str:
    f = Fraction(f)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def _value_repr(v):
    if isinstance(v, QPolynomial):
        return [_frac_str(c) for c in v.coeffs]
    if isinstance(v, PolySeries):
        return [[_frac_str(c) for c in p.coeffs] for p in v.coeffs]
    return _frac_str(v)


def _value_text(v) -> str:
    r = _value_repr(v)
    return json.dumps(r) if isinstance(r, list) else r


def _emit_check(result, fmt: str):
    if fmt == "json":
        print(
            json.dumps(
                {
                    "identity": result.identity,
                    "n": result.n,
                    "lhs": _value_repr(result.lhs),
                    "rhs": _value_repr(result.rhs),
                    "equal": result.equal,
                }
            )
        )
    else:
        status = "ok" if result.equal else "MISMATCH"
        print(
            f"{result.identity} n={result.n} "
            f"lhs={_value_text(result.lhs)} rhs={_value_text(result.rhs)} {status}"
        )


def _cmd_verify(args) -> int:
    max_n = args.max_n
    if max_n < 0:
        print("verify: --max-n must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    if args.identity == "all":
        tags = identities.IDENTITY_TAGS
    else:
        if args.identity not in identities.IDENTITY_TAGS:
            print(
                f"verify: unknown identity {args.identity!r}; choose one of "
                + ", ".join(identities.IDENTITY_TAGS)
                + " or 'all'",
                file=sys.stderr,
            )
            return EXIT_USAGE
        tags = (args.identity,)
        if max_n < identities.identity_min_n(args.identity):
            print(
                f"verify: identity {args.identity} requires n >= "
                f"{identities.identity_min_n(args.identity)}",
                file=sys.stderr,
            )
            return EXIT_USAGE

    results = []
    for tag in tags:
        for n in range(identities.identity_min_n(tag), max_n + 1):
            results.append(identities.check_identity(tag, n))
    if args.identity == "all":
        for n in range(1, max_n + 1):
            results.append(identities.integral_representation_check(n))
        if max_n >= 1:
            results.append(series.omega_closed_form_check(max_n))
            results.append(series.omega_composition_check("first", max_n))
            results.append(series.omega_composition_check("second", max_n))
        results.append(series.legendre_gf_check(max_n))
        for n in range(max_n + 1):
            for k in range(n + 1):
                results.append(series.lagrange_coefficient_check(n, k))

    all_equal = True
    for result in results:
        _emit_check(result, args.format)
        all_equal = all_equal and result.equal
    return EXIT_OK if all_equal else EXIT_MISMATCH


_POLY_SEQUENCES = ("narayana_poly", "legendre", "narayana_number")
_SCALAR_SEQUENCES = ("catalan", "schroeder", "pell", "fibonacci", "lucas")


def _table_rows(sequence: str, max_n: int):
    if sequence == "catalan":
        for n in range(max_n + 1):
            yield n, _frac_str(sequences.catalan(n))
    elif sequence == "schroeder":
        for n in range(max_n + 1):
            yield n, _frac_str(sequences.narayana_poly(n)(2))
    elif sequence in ("pell", "fibonacci", "lucas"):
        for n in range(-1, max_n + 1):
            yield n, str(sequences.recurrence_seq(sequence, n))
    elif sequence == "narayana_poly":
        for n in range(max_n + 1):
            p = sequences.narayana_poly(n)
            yield n, [_frac_str(p.coefficient(i)) for i in range(n + 1)]
    elif sequence == "narayana_number":
        for n in range(max_n + 1):
            yield n, [
                _frac_str(sequences.narayana_number(n, k)) for k in range(n + 1)
            ]
    elif sequence == "legendre":
        for n in range(max_n + 1):
            p = sequences.legendre_poly(n, "standard")
            yield n, [_frac_str(p.coefficient(i)) for i in range(n + 1)]
    else:
        raise ValueError(sequence)


def _cmd_table(args) -> int:
    if args.max_n < 0:
        print("table: --max-n must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    known = _POLY_SEQUENCES + _SCALAR_SEQUENCES
    if args.sequence not in known:
        print(
            f"table: unknown sequence {args.sequence!r}; choose one of "
            + ", ".join(known),
            file=sys.stderr,
        )
        return EXIT_USAGE
    for n, value in _table_rows(args.sequence, args.max_n):
        if args.format == "json":
            key = "coefficients" if isinstance(value, list) else "value"
            print(json.dumps({"n": n, key: value}))
        else:
            cells = value if isinstance(value, list) else [value]
            print(",".join([str(n)] + cells))
    return EXIT_OK


def _cmd_involution(args) -> int:
    try:
        report = combinat.involution_verify(
            args.family, args.n, collect_pairs=args.emit_pairs
        )
    except combinat.EnumerationCapError as exc:
        print(f"involution: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(
        f"family={report.family} n={report.n} "
        f"elements={report.size} fixed={report.fixed_count}"
    )
    for name, passed in report.certificates.items():
        print(f"certificate {name}: {'pass' if passed else 'FAIL'}")
    print(
        f"total_weight={_value_text(report.total_weight)} "
        f"fixed_weight={_value_text(report.fixed_weight)}"
    )
    if args.emit_pairs:
        for a, b in report.pairs:
            print(f"pair: {a} <-> {b}")
    if not report.certified:
        if report.counterexample:
            print(f"counterexample: {report.counterexample}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    n = args.n
    try:
        if args.family == "dyck":
            for p in combinat.enumerate_dyck(n):
                print(p if p else "(empty)")
        elif args.family == "D":
            ks = [args.k] if args.k is not None else range(n + 1)
            for k in ks:
                for e in combinat.enumerate_family_D(n, k):
                    print(combinat.serialize_path(combinat.flatten(e)))
        elif args.family in ("P", "Q"):
            enum = (
                combinat.enumerate_family_P
                if args.family == "P"
                else combinat.enumerate_family_Q
            )
            ks = [args.k] if args.k is not None else range(n + 1)
            for k in ks:
                for t in enum(n, k):
                    print(combinat.serialize_tree(t))
        else:
            print(f"enumerate: unknown family {args.family!r}", file=sys.stderr)
            return EXIT_USAGE
    except combinat.EnumerationCapError as exc:
        print(f"enumerate: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="narayana",
        description="Exact verification of Narayana/Catalan/Legendre identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="check identities exactly")
    p_verify.add_argument("--identity", required=True)
    p_verify.add_argument("--max-n", type=int, required=True, dest="max_n")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.set_defaults(func=_cmd_verify)

    p_table = sub.add_parser("table", help="print a sequence/polynomial table")
    p_table.add_argument("--sequence", required=True)
    p_table.add_argument("--max-n", type=int, required=True, dest="max_n")
    p_table.add_argument("--format", choices=("csv", "json"), default="csv")
    p_table.set_defaults(func=_cmd_table)

    p_inv = sub.add_parser("involution", help="run involution certificates")
    p_inv.add_argument("--family", choices=("D", "P", "Q"), required=True)
    p_inv.add_argument("--n", type=int, required=True)
    p_inv.add_argument("--emit-pairs", action="store_true", dest="emit_pairs")
    p_inv.set_defaults(func=_cmd_involution)

    p_enum = sub.add_parser("enumerate", help="list family elements")
    p_enum.add_argument("--family", choices=("dyck", "D", "P", "Q"), required=True)
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--k", type=int, default=None)
    p_enum.set_defaults(func=_cmd_enumerate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors; remap to the usage code
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
