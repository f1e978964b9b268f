"""``parkfn`` command line.

Exit codes: 0 success, 1 predicate or verification failure, 2 usage or
parse error, 3 enumeration limit exceeded.  Big integers and rationals go
out as decimal strings.  Record streams (``enumerate``, ``sample``) default
to CSV rows without a header; everything else defaults to JSON.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from contextlib import contextmanager
from fractions import Fraction
from typing import Iterable, Iterator, TextIO

from parkfn import core, expectation, genfun, lukasiewicz as lk, verify
from parkfn.errors import ConsistencyError, InvalidInputError, LimitExceeded, ParkfnError, PoleError
from parkfn.poly import fraction_str
from parkfn.rotation import SampleConfig, difference_sample, kalikow_sample

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3

STATS = ("displacement", "des", "asc", "ties", "ones", "fdiff")


class UsageError(ParkfnError):
    pass


def parse_prefs(text: str) -> core.PrefVector:
    try:
        vals = tuple(int(tok) for tok in text.replace(" ", "").split(","))
    except ValueError:
        raise UsageError(f"cannot parse preferences {text!r}; expected comma-separated positive integers") from None
    try:
        return core.as_prefs(vals)
    except InvalidInputError as exc:
        raise UsageError(str(exc)) from None


def _sorted(s: Iterable[int]) -> list[int]:
    return sorted(s)


def _dump(obj, out: TextIO) -> None:
    out.write(json.dumps(obj, sort_keys=False) + "\n")


def _csv_rows(rows: Iterable[Iterable], out: TextIO) -> None:
    w = csv.writer(out, lineterminator="\n")
    for row in rows:
        w.writerow(row)


def _format(args, default: str = "json") -> str:
    return args.format or default


# ---------------------------------------------------------------------------
# subcommands


def cmd_check(args, out: TextIO) -> int:
    p = parse_prefs(args.prefs)
    parking = core.is_parking_function(p)
    prime = parking and core.is_prime_parking_function(p)
    prof = core.stat_profile(p)
    verdict = {
        "prefs": list(p),
        "parking": parking,
        "prime": prime,
        "displacement": core.displacement(p) if parking else None,
        "stats": {
            "descent_set": _sorted(prof.descent_set),
            "ascent_set": _sorted(prof.ascent_set),
            "tie_set": _sorted(prof.tie_set),
            "ones": prof.ones_count,
            "forward_differences": list(core.forward_differences(p)),
        },
    }
    if _format(args) == "csv":
        _csv_rows([["parking", "prime", "displacement"],
                   [parking, prime, "" if verdict["displacement"] is None else verdict["displacement"]]], out)
    else:
        _dump(verdict, out)
    ok = prime if args.prime else parking
    return EXIT_OK if ok else EXIT_FAIL


def _stat_values(p: core.PrefVector, stats: list[str]) -> list:
    vals: list = []
    for s in stats:
        if s == "displacement":
            vals.append(core.displacement(p))
        elif s == "des":
            vals.append(len(core.descent_set(p)))
        elif s == "asc":
            vals.append(len(core.ascent_set(p)))
        elif s == "ties":
            vals.append(len(core.tie_set(p)))
        elif s == "ones":
            vals.append(p.count(1))
        elif s == "fdiff":
            d = core.forward_differences(p)
            vals.append([d.count(ell) for ell in range(len(p) - 1)])
    return vals


def cmd_enumerate(args, out: TextIO) -> int:
    gen = core.enumerate_ppf if args.prime else core.enumerate_pf
    if args.prime and args.n < 1:
        raise UsageError("need n >= 1")
    stats = args.stat or []
    fmt = _format(args, "csv")
    for p in gen(args.n, limit=args.limit):
        vals = _stat_values(p, stats)
        if fmt == "csv":
            row = list(p)
            for v in vals:
                row.extend(v if isinstance(v, list) else [v])
            _csv_rows([row], out)
        else:
            _dump({"prefs": list(p), **dict(zip(stats, vals))}, out)
    return EXIT_OK


def cmd_count(args, out: TextIO) -> int:
    n = args.n
    if args.first is not None and args.ones is not None:
        if args.prime:
            raise UsageError("--first with --ones is only defined for parking functions")
        value = core.f_n_jk(n, args.first, args.ones)
        what = "pf_first_ones"
    elif args.first is not None:
        value = core.count_ppf_first(n, args.first) if args.prime else core.count_pf_first(n, args.first)
        what = "ppf_first" if args.prime else "pf_first"
    elif args.ones is not None:
        if args.prime:
            raise UsageError("--ones is only defined for parking functions")
        value = core.count_pf_ones(n, args.ones)
        what = "pf_ones"
    elif args.method == "enumerate":
        gen = core.enumerate_ppf if args.prime else core.enumerate_pf
        value = sum(1 for _ in gen(n, limit=args.limit))
        what = "ppf" if args.prime else "pf"
    elif args.method == "paths":
        value = lk.count_by_paths(n, args.prime, limit=args.limit)
        what = "ppf" if args.prime else "pf"
    else:
        value = core.count_ppf(n) if args.prime else core.count_pf(n)
        what = "ppf" if args.prime else "pf"
    rec = {"n": n, "kind": what, "first": args.first, "ones": args.ones, "method": args.method, "count": str(value)}
    if _format(args) == "csv":
        _csv_rows([[n, what, "" if args.first is None else args.first, "" if args.ones is None else args.ones, value]], out)
    else:
        _dump(rec, out)
    return EXIT_OK


def cmd_sample(args, out: TextIO) -> int:
    cfg = SampleConfig(args.n, args.samples, args.seed)
    if args.report:
        report = expectation.monte_carlo_report(cfg)
        if _format(args) == "csv":
            rows = [["stat", "mean", "se", "exact", "z"]]
            for key, e in report["stats"].items():
                rows.append([key, repr(e["mean"]), repr(e["se"]), e["exact"], "" if e["z"] is None else repr(e["z"])])
            _csv_rows(rows, out)
        else:
            out.write(expectation.report_json(report) + "\n")
        return EXIT_OK
    gen = difference_sample if args.method == "difference" else kalikow_sample
    fmt = _format(args, "csv")
    for p in gen(cfg):
        if fmt == "csv":
            _csv_rows([p], out)
        else:
            _dump(list(p), out)
    return EXIT_OK


def _expect_entry(exact: Fraction | None, value: float, asym: float | None) -> dict:
    e = {"exact": fraction_str(exact) if exact is not None else None, "decimal": value}
    if asym is not None:
        e["asymptotic"] = asym
        e["abs_error"] = abs(value - asym)
    return e


def cmd_expect(args, out: TextIO) -> int:
    n = args.n
    if n < 1:
        raise UsageError("need n >= 1")
    exact_ok = n <= expectation.EXACT_LIMIT
    pi1 = expectation.expected_pi1_exact(n) if exact_ok else None
    dis = expectation.expected_displacement_exact(n) if exact_ok else None
    rec = {
        "n": n,
        "ppf_length": n + 1,
        "pi1": _expect_entry(pi1, expectation.expected_pi1_float(n),
                             expectation.expected_pi1_asymptotic(n) if args.asymptotic else None),
        "displacement": _expect_entry(dis, expectation.expected_displacement_float(n),
                                      expectation.expected_displacement_asymptotic(n) if args.asymptotic else None),
    }
    if _format(args) == "csv":
        rows = []
        for key in ("pi1", "displacement"):
            e = rec[key]
            row = [key, e["exact"] or "", repr(e["decimal"])]
            if args.asymptotic:
                row += [repr(e["asymptotic"]), repr(e["abs_error"])]
            rows.append(row)
        _csv_rows(rows, out)
    else:
        _dump(rec, out)
    return EXIT_OK


def cmd_disp_enum(args, out: TextIO) -> int:
    if args.method == "paths":
        poly = genfun.displacement_enumerator_paths(args.n, limit=args.limit)
    elif args.method == "prime-paths":
        poly = genfun.displacement_enumerator_prime_paths(args.n, limit=args.limit)
    else:
        poly = genfun.displacement_enumerator_brute(args.n, limit=args.limit)
    if _format(args) == "csv":
        _csv_rows([[d, str(c)] for d, c in enumerate(poly.coeffs) if c], out)
    else:
        _dump({"n": args.n, "method": args.method, "poly": str(poly), **poly.to_dict()}, out)
    return EXIT_OK


def cmd_genfun(args, out: TextIO) -> int:
    n = args.n
    if args.m is None:
        ell = 0 if args.ell is None else args.ell
        brute = genfun.ell_genfun(n, ell, limit=args.limit)
        closed = genfun.ell_genfun_closed(n)
        rec = {"n": n, "ell": ell, "poly": str(brute), "closed": str(closed), "equal": brute == closed,
               "brute": brute.to_dict()}
    else:
        ell = 0 if args.ell is None else args.ell
        brute = genfun.mixed_genfun(n, ell, args.m, limit=args.limit)
        closed = genfun.mixed_genfun_closed(n)
        rec = {"n": n, "ell": ell, "m": args.m, "poly": str(brute), "closed": str(closed), "equal": brute == closed,
               "brute": brute.to_dict()}
    if _format(args) == "csv":
        _csv_rows([[rec["poly"], rec["closed"], rec["equal"]]], out)
    else:
        _dump(rec, out)
    return EXIT_OK if rec["equal"] else EXIT_FAIL


def _bijection_record(p: core.PrefVector) -> dict:
    path = lk.labeled_path_from_pf(p)
    dyck = lk.dyck_from_labeled_lukas(path)
    alpha = lk.alpha_permutation(path)
    des, asc, tie = lk.path_stat_sets(path)
    return {
        "prefs": list(p),
        "path": path.to_dict(),
        "heights": list(path.word.heights),
        "prime": path.word.is_prime,
        "area": lk.area(path.word),
        "dyck": dyck.to_dict(),
        "alpha": list(alpha),
        "alpha_inverse": list(lk.inverse_permutation(alpha)),
        "descent_set": _sorted(des),
        "ascent_set": _sorted(asc),
        "tie_set": _sorted(tie),
        "roundtrip": lk.pf_from_labeled_path(path) == p and lk.pf_from_labeled_dyck(dyck) == p,
    }


def cmd_bijection(args, out: TextIO) -> int:
    if args.prefs is None and args.n is None:
        raise UsageError("give preferences or --n")
    if args.prefs is not None:
        p = parse_prefs(args.prefs)
        if not core.is_parking_function(p):
            raise UsageError(f"{p} is not a parking function")
        items: Iterator[core.PrefVector] = iter([p])
    else:
        items = core.enumerate_pf(args.n, limit=args.limit)
    ok = True
    fmt = _format(args)
    for p in items:
        rec = _bijection_record(p)
        ok &= rec["roundtrip"]
        if fmt == "csv":
            _csv_rows([[" ".join(map(str, p)), " ".join(map(str, rec["path"]["word"])), rec["dyck"]["word"],
                        " ".join(map(str, rec["alpha"])), rec["area"]]], out)
        else:
            _dump(rec, out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args, out: TextIO) -> int:
    params = {"n": args.n, "limit": args.limit}
    for key in ("ell", "m", "vars", "pairs", "seed"):
        val = getattr(args, key)
        if val is not None:
            params[key] = val
    if args.theorem not in verify.THEOREMS:
        raise UsageError(f"unknown theorem id {args.theorem!r}; choose from {', '.join(verify.THEOREMS)}")
    check = verify.run(args.theorem, **params)
    if _format(args) == "csv":
        _csv_rows([[check.theorem, args.n, check.passed]], out)
    else:
        _dump(check.to_dict(), out)
    return EXIT_OK if check.passed else EXIT_FAIL


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse rational {text!r}") from None


def cmd_abel(args, out: TextIO) -> int:
    x, y = _parse_fraction(args.x), _parse_fraction(args.y)
    value = genfun.abel_sum(args.n, x, y, args.p, args.q)
    checks = genfun.check_abel(args.n, x, y, args.p, args.q)
    rec = {"n": args.n, "x": fraction_str(x), "y": fraction_str(y), "p": args.p, "q": args.q,
           "value": fraction_str(value), "recurrences": checks}
    if (args.p, args.q) == (-1, 0):
        rec["closed"] = fraction_str(genfun.abel_closed_p_minus1_q0(args.n, x, y))
    elif (args.p, args.q) == (-1, 1):
        rec["closed"] = fraction_str(genfun.abel_closed_p_minus1_q1(args.n, x, y))
    ok = all(checks.values()) and rec.get("closed", rec["value"]) == rec["value"]
    if _format(args) == "csv":
        _csv_rows([[args.n, rec["x"], rec["y"], args.p, args.q, rec["value"], ok]], out)
    else:
        _dump(rec, out)
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--limit", type=int, default=None,
                        help=f"largest n to enumerate (default ${core.LIMIT_ENV} or {core.DEFAULT_LIMIT})")
    common.add_argument("--format", choices=("json", "csv"), default=None)
    common.add_argument("--output", "-o", default=None, help="write to this file instead of standard output")

    ap = argparse.ArgumentParser(prog="parkfn", description="Parking functions, prime parking functions, and their statistics.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="test a preference sequence")
    p.add_argument("prefs", help="comma-separated preferences, e.g. 3,2,1,1")
    p.add_argument("--prime", action="store_true", help="exit status reflects primality")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", parents=[common], help="list PF_n or PPF_n in lexicographic order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--prime", action="store_true")
    p.add_argument("--stat", action="append", choices=STATS, help="append a statistic column (repeatable)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", parents=[common], help="exact counts, optionally by first entry or number of ones")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--prime", action="store_true")
    p.add_argument("--first", type=int)
    p.add_argument("--ones", type=int)
    p.add_argument("--method", choices=("formula", "enumerate", "paths"), default="formula")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("sample", parents=[common], help="uniform prime parking functions by circular rotation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--method", choices=("rotation", "difference"), default="rotation")
    p.add_argument("--report", action="store_true", help="print means and standard errors against exact values")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("expect", parents=[common], help="expected first entry and displacement over PPF_{n+1}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--asymptotic", action="store_true")
    p.set_defaults(func=cmd_expect)

    p = sub.add_parser("disp-enum", parents=[common], help="displacement enumerator of PPF_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("brute", "paths", "prime-paths"), default="brute")
    p.set_defaults(func=cmd_disp_enum)

    p = sub.add_parser("genfun", parents=[common], help="forward-difference generating functions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int)
    p.add_argument("--m", type=int)
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("bijection", parents=[common], help="labeled path and Dyck path of a parking function")
    p.add_argument("prefs", nargs="?")
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("verify", parents=[common], help="check an identity against brute force")
    p.add_argument("--theorem", required=True, help=", ".join(verify.THEOREMS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--vars", type=int)
    p.add_argument("--pairs", type=int, help="random (x, y) pairs for abel")
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("abel", parents=[common], help="evaluate A_n(x, y; p, q) exactly")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--p", type=int, default=-1)
    p.add_argument("--q", type=int, default=0)
    p.set_defaults(func=cmd_abel)
    return ap


@contextmanager
def _sink(path: str | None) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with _sink(args.output) as out:
            return args.func(args, out)
    except LimitExceeded as exc:
        print(f"parkfn: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (UsageError, InvalidInputError, PoleError) as exc:
        print(f"parkfn: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError as exc:
        print(f"parkfn: internal check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ParkfnError as exc:
        print(f"parkfn: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
