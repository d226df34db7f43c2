"""Command-line front end.

Group names::

    Sn:<N>  G:<r>,1,<n>  G:<r>,<r>,<n>  I2:<r>  C:<r>  X:<exceptional name>

Exit codes: 0 success, 1 usage or parse error, 2 verification failure,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from math import gcd

from coxfact import groups
from coxfact.counting import (
    brute_counts,
    closed_form_egf,
    egf_coefficient,
    frobenius_count,
    frobenius_egf,
)
from coxfact.exceptional import TYPE_NAMES, load_type, resolve_name, sanity_checks, table_egf, verify_type
from coxfact.groups import CapExceeded, GroupSpec

EXIT_OK, EXIT_USAGE, EXIT_FAIL, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_spec(text: str, data_dir=None):
    """Turn a group name into a GroupSpec or a loaded exceptional (type, rows) pair."""
    if ":" not in text:
        raise UsageError(f"group name {text!r} needs a family prefix (Sn:, G:, I2:, C:, X:)")
    fam, _, arg = text.partition(":")
    fam = fam.strip()
    try:
        if fam == "X":
            try:
                return load_type(resolve_name(arg), data_dir)
            except KeyError as exc:
                raise UsageError(str(exc.args[0])) from None
        nums = [int(x) for x in arg.split(",")]
    except ValueError as exc:
        raise UsageError(f"cannot parse {text!r}: {exc}") from None
    try:
        if fam == "Sn" and len(nums) == 1:
            return groups.symmetric(nums[0])
        if fam == "C" and len(nums) == 1:
            return groups.cyclic(nums[0])
        if fam == "I2" and len(nums) == 1:
            return groups.dihedral(nums[0])
        if fam == "G" and len(nums) == 3:
            r, p, n = nums
            if r < 2:
                raise UsageError("G:1,1,n is not irreducible; use Sn:<n> for the symmetric group")
            if p == 1:
                return groups.gr1n(r, n)
            if p == r:
                return groups.grrn(r, n)
            raise UsageError(f"G({r},{p},{n}) with 1 < p < r is not well-generated")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    raise UsageError(f"cannot parse group name {text!r}")


def _is_exceptional(obj) -> bool:
    return isinstance(obj, tuple)


def _summary(obj) -> dict:
    if _is_exceptional(obj):
        return obj[0].summary()
    return obj.summary()


def _parse_zeta(text: str | None, h: int) -> Fraction | None:
    if text is None:
        return None
    try:
        k_s, h_s = text.split("/")
        k, hh = int(k_s), int(h_s)
    except ValueError:
        raise UsageError(f"--zeta expects k/h, got {text!r}") from None
    if hh != h:
        raise UsageError(f"--zeta denominator must be the Coxeter number h = {h}")
    if gcd(k, h) != 1:
        raise UsageError(f"{k}/{h} is not a primitive {h}-th root (gcd({k},{h}) != 1)")
    return Fraction(k % h, h)


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


# -- commands ------------------------------------------------------------------


def cmd_info(args) -> int:
    obj = parse_spec(args.spec, args.data_dir)
    s = _summary(obj)
    payload = {"command": "info", "spec": args.spec, "results": s}
    lines = [
        f"group        {s['spec']}",
        f"rank n       {s['n']}",
        f"order |W|    {s['order']}",
        f"h            {s['h']}",
        f"degrees      {', '.join(map(str, s['degrees']))}",
        f"codegrees    {', '.join(map(str, s['codegrees']))}",
        f"|R|          {s['refl']}",
        f"|R*|         {s['corefl']}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def _counts(obj, length: int, method: str, exponent) -> dict[str, int]:
    out: dict[str, int] = {}
    if _is_exceptional(obj):
        ext, rows = obj
        if method == "brute":
            raise UsageError("brute force is not available for exceptional types (no group model)")
        if method in ("frobenius", "all"):
            if exponent is not None and exponent != Fraction(1, ext.h):
                raise UsageError("exceptional tables only cover zeta = 1/h")
            value = egf_coefficient(table_egf(ext, rows), length).as_rational()
            out["frobenius"] = int(value) if value is not None and value.denominator == 1 else value
        if method in ("closed", "all"):
            out["closed-form"] = int(egf_coefficient(closed_form_egf(ext), length).as_rational())
        return out
    spec: GroupSpec = obj
    if method in ("brute", "all"):
        c = groups.canonical_coxeter(spec, exponent)
        out["brute"] = brute_counts(spec, c, length)[-1]
    if method in ("frobenius", "all"):
        out["frobenius"] = frobenius_count(spec, length, exponent).count
    if method in ("closed", "all"):
        out["closed-form"] = int(egf_coefficient(closed_form_egf(spec), length).as_rational())
    return out


def cmd_count(args) -> int:
    obj = parse_spec(args.spec, args.data_dir)
    summary = _summary(obj)
    exponent = _parse_zeta(args.zeta, summary["h"])
    if args.len < 0:
        raise UsageError("--len must be non-negative")
    t0 = time.perf_counter()
    counts = _counts(obj, args.len, args.method, exponent)
    agree = len(set(counts.values())) == 1
    payload = {
        "command": "count",
        "spec": summary,
        "results": {
            "length": args.len,
            "zeta": str(exponent if exponent is not None else Fraction(1, summary["h"])),
            "counts": {k: str(v) for k, v in counts.items()},
            "agree": agree,
        },
        "elapsed_s": round(time.perf_counter() - t0, 6),
    }
    lines = [f"{summary['spec']}  length {args.len}"]
    lines += [f"  {k:<12} {v}" for k, v in counts.items()]
    if len(counts) > 1:
        lines.append("  agreement" if agree else "  MISMATCH")
    _emit(args, payload, lines)
    return EXIT_OK if agree else EXIT_FAIL


def cmd_verify(args) -> int:
    obj = parse_spec(args.spec, args.data_dir)
    if _is_exceptional(obj):
        raise UsageError("use verify-exceptional for X: types")
    spec: GroupSpec = obj
    max_len = args.max_len if args.max_len is not None else spec.rank + 6
    t0 = time.perf_counter()
    closed = closed_form_egf(spec)
    expected = [int(egf_coefficient(closed, ell).as_rational()) for ell in range(max_len + 1)]
    rows = []
    ok = True
    for q in groups.coxeter_exponents(spec):
        c = groups.canonical_coxeter(spec, q)
        brute = brute_counts(spec, c, max_len)
        frob = [frobenius_count(spec, ell, q).count for ell in range(max_len + 1)]
        egf_ok = frobenius_egf(spec, q) == closed
        agree = brute == frob == expected
        ok = ok and agree and egf_ok
        rows.append({"zeta": str(q), "triple_agreement": agree, "egf_identity": egf_ok,
                     "brute": [str(x) for x in brute], "frobenius": [str(x) for x in frob]})
    payload = {
        "command": "verify",
        "spec": spec.summary(),
        "results": {"max_len": max_len, "pass": ok, "closed_form": [str(x) for x in expected], "classes": rows},
        "elapsed_s": round(time.perf_counter() - t0, 6),
    }
    lines = [f"{spec.name}: lengths 0..{max_len}"]
    lines.append(f"  {'zeta':<8} {'counts':<8} {'egf':<6}")
    for row in rows:
        lines.append(f"  {row['zeta']:<8} {'ok' if row['triple_agreement'] else 'FAIL':<8} {'ok' if row['egf_identity'] else 'FAIL':<6}")
    lines.append(f"  counts: {' '.join(map(str, expected))}")
    lines.append("PASS" if ok else "FAIL")
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify_exceptional(args) -> int:
    if args.all == bool(args.name):
        raise UsageError("give either --all or one type name")
    names = list(TYPE_NAMES) if args.all else [resolve_name(args.name)]
    reports = []
    for name in names:
        rep = verify_type(name, args.data_dir)
        sanity = sanity_checks(name, args.data_dir)
        data = rep.to_json()
        data["sanity"] = sanity
        data["pass"] = rep.passed and sanity["pass"]
        reports.append(data)
    passed = sum(1 for r in reports if r["pass"])
    payload = {"command": "verify-exceptional", "results": {"passed": passed, "total": len(reports), "types": reports}}
    lines = [f"  {r['type']:<5} n={r['n']} |W|={r['order']:<10} {'pass' if r['pass'] else 'FAIL'}" for r in reports]
    lines.append(f"{passed}/{len(reports)} pass")
    _emit(args, payload, lines)
    return EXIT_OK if passed == len(reports) else EXIT_FAIL


# -- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--data-dir", help="directory holding the exceptional <name>.tsv tables")

    parser = _Parser(prog="coxfact", description="Count reflection factorizations of Coxeter elements.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("info", parents=[common], help="degrees, codegrees and reflection counts")
    p.add_argument("spec")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("count", parents=[common], help="count factorizations of a given length")
    p.add_argument("spec")
    p.add_argument("--len", type=int, required=True)
    p.add_argument("--method", choices=["brute", "frobenius", "closed", "all"], default="closed")
    p.add_argument("--zeta", help="Coxeter class as k/h (default 1/h)")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", parents=[common], help="cross-check all three methods")
    p.add_argument("spec")
    p.add_argument("--max-len", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("verify-exceptional", parents=[common], help="check the exceptional character tables")
    p.add_argument("name", nargs="?")
    p.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_verify_exceptional)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"coxfact: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (KeyError, FileNotFoundError) as exc:
        print(f"coxfact: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"coxfact: resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        # data or arithmetic inconsistency surfaced by a check
        print(f"coxfact: verification error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
