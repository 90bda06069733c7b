"""Command-line surface: characters, verify, lseries, identity, primes.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
3 resource limit.  Output is a human table on a terminal and JSON when
piped; --format overrides.  Identical invocations print identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .arith import euler_phi
from .characters import (
    character_by_tuple,
    classify,
    enumerate_characters,
)
from .lseries import (
    divergence_profile,
    euler_product,
    fundamental_identity_check,
    l_at_one,
    l_direct,
    log_l_expansion,
)
from .primes import ResourceLimitError, count_in_progression, kronecker_search, pnt_ap_ratio, sieve
from .suites import SUITE_NAMES, run_suite

RESIDUAL_LIMIT = 1e-9


def _sig(x: float) -> str:
    return f"{float(x):.12g}"


def _emit(payload: str, out: str | None) -> None:
    sys.stdout.write(payload)
    if not payload.endswith("\n"):
        sys.stdout.write("\n")
    if out:
        with open(out, "w") as fh:
            fh.write(payload)
            if not payload.endswith("\n"):
                fh.write("\n")


def _pick_format(fmt: str | None) -> str:
    if fmt:
        return fmt
    return "table" if sys.stdout.isatty() else "json"


def _character_records(k: int) -> list[dict]:
    records = []
    for i, chi in enumerate(enumerate_characters(k)):
        records.append({
            "index": i,
            "tuple": list(chi.exponent_tuple),
            "class": classify(chi).value,
            "values": chi.value_strings(),
        })
    return records


def cmd_characters(args) -> int:
    k = args.modulus
    if k < 1:
        raise ValueError("modulus must be >= 1")
    records = _character_records(k)
    fmt = _pick_format(args.format)
    if fmt == "json":
        payload = json.dumps({"modulus": k, "characters": records}, indent=2)
    elif fmt == "csv":
        lines = ["modulus,index,class,tuple,values"]
        for r in records:
            tup = ";".join(str(x) for x in r["tuple"])
            vals = ";".join(r["values"])
            lines.append(f"{k},{r['index']},{r['class']},{tup},{vals}")
        payload = "\n".join(lines)
    else:
        width = max(len(v) for r in records for v in r["values"])
        lines = [f"characters mod {k}  (phi = {euler_phi(k)})"]
        header = "idx  class      tuple        " + " ".join(
            f"{n:>{width}}" for n in range(k))
        lines.append(header)
        for r in records:
            tup = "(" + ",".join(str(x) for x in r["tuple"]) + ")"
            vals = " ".join(f"{v:>{width}}" for v in r["values"])
            lines.append(f"{r['index']:<4} {r['class']:<10} {tup:<12} {vals}")
        payload = "\n".join(lines)
    _emit(payload, args.out)
    return 0


def _parse_range(text: str) -> list[int]:
    if ":" in text:
        lo, hi = text.split(":", 1)
        lo, hi = int(lo), int(hi)
    else:
        lo = hi = int(text)
    if lo < 1 or hi < lo:
        raise ValueError(f"bad modulus range {text!r}")
    return list(range(lo, hi + 1))


def cmd_verify(args) -> int:
    ks = _parse_range(args.k_range)
    results = run_suite(args.suite, ks, seed=args.seed)
    total = 0
    for res in results:
        if not res.ok:
            print(f"k={res.k} FAIL after {res.checks} checks: {res.counterexample}")
            print(json.dumps({"suite": args.suite, "pass": False, "k": res.k,
                              "counterexample": res.counterexample}))
            return 1
        total += res.checks
        print(f"k={res.k} ok ({res.checks} checks)")
    print(json.dumps({"suite": args.suite, "pass": True,
                      "moduli": len(ks), "checks": total}))
    return 0


def _resolve_character(args):
    k = args.modulus
    if k < 1:
        raise ValueError("modulus must be >= 1")
    if args.tuple is not None:
        t = tuple(int(x) for x in args.tuple.split(",")) if args.tuple else ()
        return character_by_tuple(k, t)
    index = args.index or 0
    chars = enumerate_characters(k)
    if not 0 <= index < len(chars):
        raise ValueError(f"character index out of range 0..{len(chars) - 1}")
    return chars[index]


def cmd_lseries(args) -> int:
    chi = _resolve_character(args)
    s = args.s
    if s < 1:
        raise ValueError("s must be >= 1")
    row = {"modulus": chi.modulus, "tuple": list(chi.exponent_tuple), "s": s,
           "mode": args.mode}
    if s == 1:
        if chi.is_principal():
            raise ValueError("principal L-series has a simple pole at s = 1")
        ev = l_at_one(chi, tol=args.tol)
        row["mode"] = "at-one"
    elif args.mode == "euler":
        ev = euler_product(s, chi, args.prime_bound)
    elif args.mode == "log":
        main, higher = log_l_expansion(s, chi, args.prime_bound, args.terms)
        row.update({
            "main_re": _sig(main.real), "main_im": _sig(main.imag),
            "higher_re": _sig(higher.real), "higher_im": _sig(higher.imag),
            "truncation": args.prime_bound, "terms": args.terms,
        })
        ev = None
    else:
        ev = l_direct(s, chi, tol=args.tol)
    if ev is not None:
        row.update({
            "value_re": _sig(ev.value.real), "value_im": _sig(ev.value.imag),
            "truncation": ev.truncation, "tail_bound": _sig(ev.tail_bound),
        })
    fmt = _pick_format(args.format)
    if fmt == "json":
        payload = json.dumps(row, indent=2)
    elif fmt == "csv":
        keys = list(row)
        payload = ",".join(keys) + "\n" + ",".join(str(row[key]) for key in keys)
    else:
        payload = "\n".join(f"{key} = {row[key]}" for key in row)
    _emit(payload, args.out)
    return 0


def cmd_identity(args) -> int:
    k, m = args.modulus, args.m
    fmt = _pick_format(args.format)
    if args.profile:
        s_list = [float(x) for x in args.profile.split(",")]
        rows = divergence_profile(k, m, s_list, args.prime_bound)
        out_rows = [{"k": k, "m": m, "s": _sig(s), "value": _sig(v),
                     "truncation": args.prime_bound, "tail_bound": "0"}
                    for s, v in rows]
        exit_code = 0
    else:
        if args.s is None:
            raise ValueError("identity check needs s (or use --profile)")
        lhs, rhs, residual = fundamental_identity_check(
            k, m, args.s, args.prime_bound, args.terms)
        out_rows = [{"k": k, "m": m, "s": _sig(args.s), "value": _sig(rhs),
                     "truncation": args.prime_bound, "tail_bound": _sig(residual)}]
        exit_code = 0 if residual < RESIDUAL_LIMIT else 1
    if fmt == "json":
        payload = json.dumps(out_rows, indent=2)
    else:
        lines = ["k,m,s,value,truncation,tail_bound"]
        for r in out_rows:
            lines.append(f"{r['k']},{r['m']},{r['s']},{r['value']},"
                         f"{r['truncation']},{r['tail_bound']}")
        payload = "\n".join(lines)
    _emit(payload, args.out)
    return exit_code


def cmd_primes(args) -> int:
    fmt = _pick_format(args.format)
    if args.action == "search":
        res = kronecker_search(args.x, args.k, args.m)
        row = {"mu": args.x, "k": args.k, "m": args.m,
               "prime": res.prime, "interval": res.interval}
        if fmt == "json":
            payload = json.dumps(row)
        elif fmt == "csv":
            payload = "mu,k,m,prime,interval\n" + \
                f"{args.x},{args.k},{args.m},{res.prime},{res.interval}"
        else:
            payload = f"first prime > {args.x} congruent to {args.m} mod {args.k}: " \
                f"{res.prime} (interval {res.interval})"
        _emit(payload, args.out)
        return 0
    table = sieve(max(args.x, 2))
    count = count_in_progression(args.x, args.k, args.m, table=table)
    row = {"x": args.x, "k": args.k, "m": args.m, "count": count}
    if args.action == "ratio":
        row["ratio"] = _sig(pnt_ap_ratio(args.x, args.k, args.m, table=table))
    else:
        row["ratio"] = ""
    if fmt == "json":
        payload = json.dumps(row)
    elif fmt == "csv":
        payload = "x,k,m,count,ratio\n" + \
            f"{row['x']},{row['k']},{row['m']},{row['count']},{row['ratio']}"
    else:
        tail = f", ratio {row['ratio']}" if row["ratio"] else ""
        payload = f"{count} primes <= {args.x} congruent to {args.m} mod {args.k}{tail}"
    _emit(payload, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dirchar",
        description="Dirichlet characters, L-series, and primes in progressions")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("table", "json", "csv"))
        p.add_argument("--out", help="also write the payload to this path")

    p = sub.add_parser("characters", help="exact character table mod k")
    p.add_argument("modulus", type=int)
    common(p)
    p.set_defaults(func=cmd_characters)

    p = sub.add_parser("verify", help="run an invariant suite over moduli")
    p.add_argument("suite", choices=SUITE_NAMES)
    p.add_argument("--k-range", default="1:50", help="inclusive range, e.g. 1:100")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lseries", help="L(s, chi) by direct sum, product, or log")
    p.add_argument("modulus", type=int)
    p.add_argument("s", type=float)
    p.add_argument("--tuple", help="character by canonical tuple, e.g. 1,0")
    p.add_argument("--index", type=int, help="character by enumeration index")
    p.add_argument("--mode", choices=("direct", "euler", "log"), default="direct")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--prime-bound", type=int, default=10**5)
    p.add_argument("--terms", type=int, default=40)
    common(p)
    p.set_defaults(func=cmd_lseries)

    p = sub.add_parser("identity", help="character-sum identity residual, or divergence profile")
    p.add_argument("modulus", type=int)
    p.add_argument("m", type=int)
    p.add_argument("s", type=float, nargs="?")
    p.add_argument("--prime-bound", type=int, default=10**4)
    p.add_argument("--terms", type=int, default=30)
    p.add_argument("--profile", help="comma-separated s values for the divergence table")
    common(p)
    p.set_defaults(func=cmd_identity)

    p = sub.add_parser("primes", help="counts, searches, and density ratios")
    p.add_argument("action", choices=("count", "search", "ratio"))
    p.add_argument("x", type=int, help="bound x, or threshold mu for search")
    p.add_argument("k", type=int)
    p.add_argument("m", type=int)
    common(p)
    p.set_defaults(func=cmd_primes)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except ArithmeticError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
