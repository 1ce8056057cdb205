"""Command-line surface: vanishing indices, Whittaker tables, Gauss sums,
cusp data, global products, and the verification harness.

Exit codes: 0 success, 1 domain error, 2 verification failure (the witness
is printed), 3 malformed JSON (with its line number).  Output is byte-stable
for fixed inputs; timings never reach stdout.  CUSPVAN_TOL overrides the
default 1e-9 zero threshold.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from .cusps import cusps_of_denominator, delta, width
from .errors import CuspvanError, DomainMismatch
from .gauss_eps import classify_gauss, gauss_sum
from .global_forms import (
    Rationality,
    e_f,
    elliptic_local_profiles,
    elliptic_ramification,
    newform_from_json,
)
from .local_reps import (
    conductor,
    descriptor_from_json,
    vanishing_index_oracle,
    vanishing_index_table,
)
from .padic_chars import char_from_json
from .verify_suites import SUITES, run_suites
from .whittaker_eval import c_table


class _MalformedJSON(Exception):
    """Carries the offending location so main can exit with code 3."""

    def __init__(self, where, lineno, msg):
        super().__init__(f"{where}:{lineno}: malformed JSON: {msg}")


def _parse_json(text, where):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise _MalformedJSON(where, e.lineno, e.msg)


def _read_jsonl(path):
    rows = []
    try:
        fh = open(path)
    except OSError as e:
        raise CuspvanError(f"cannot read {path}: {e.strerror or e}")
    with fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                rows.append((lineno, json.loads(line)))
            except json.JSONDecodeError as e:
                raise _MalformedJSON(path, lineno, e.msg)
    return rows


def _load_descriptor(args):
    if getattr(args, "abstract", None):
        return descriptor_from_json(_parse_json(args.abstract, "--abstract"))
    if getattr(args, "descriptor", None):
        try:
            with open(args.descriptor) as fh:
                text = fh.read()
        except OSError as e:
            raise CuspvanError(f"cannot read {args.descriptor}: {e.strerror or e}")
        return descriptor_from_json(_parse_json(text, args.descriptor))
    raise CuspvanError("need --abstract JSON or --descriptor FILE")


def _newform_at(lineno, path, obj):
    try:
        return newform_from_json(obj)
    except CuspvanError as e:
        raise CuspvanError(f"{path}:{lineno}: {e}")


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def _exp_column(exps):
    parts = [f"{p}:{e}" for p, e in sorted(exps.items())]
    return ",".join(parts) if parts else "-"


# ---------------------------------------------------------------------------
# subcommands


def cmd_vanishing(args):
    d = _load_descriptor(args)
    p = getattr(d, "p", args.p)
    if p != args.p:
        raise DomainMismatch(f"descriptor lives over p={p}, flag says {args.p}")
    print(vanishing_index_table(d, args.p, args.l))
    return 0


def cmd_oracle(args):
    d = _load_descriptor(args)
    if args.p is not None and getattr(d, "p", args.p) != args.p:
        raise DomainMismatch(f"descriptor lives over p={d.p}, flag says {args.p}")
    print(vanishing_index_oracle(d, args.l))
    return 0


def cmd_whittaker(args):
    d = _load_descriptor(args)
    table = c_table(d, args.l, t_max=args.t_max)
    if args.v is not None:
        rows = []
        for t in range(table.t_min, table.t_max + 1):
            w = table.value(t, args.v)
            rows.append((t, w.real, w.imag))
        if args.format == "json":
            doc = {
                "p": table.p,
                "l": table.l,
                "v": args.v,
                "values": [[t, re, im] for t, re, im in rows],
            }
            print(json.dumps(doc))
        else:
            for t, re, im in rows:
                print(f"{t}\t{re!r}\t{im!r}")
        return 0
    if args.format == "json":
        cols = []
        for mu, col in zip(table.mus, table.columns):
            coeffs = [[t, c.real, c.imag] for t, c in sorted(col.items())]
            cols.append({"exponents": list(mu.exponents), "coeffs": coeffs})
        doc = {
            "p": table.p,
            "l": table.l,
            "t_min": table.t_min,
            "t_max": table.t_max,
            "columns": cols,
        }
        print(json.dumps(doc))
    else:
        for i, (mu, col) in enumerate(zip(table.mus, table.columns)):
            exps = ",".join(str(e) for e in mu.exponents) or "-"
            for t, c in sorted(col.items()):
                print(f"{i}\t{exps}\t{t}\t{c.real!r}\t{c.imag!r}")
    return 0


def cmd_gauss(args):
    mu = char_from_json(_parse_json(args.mu, "--mu"))
    g = gauss_sum(args.p, args.v, args.r, mu)
    print(f"value\t{g.value.real!r}\t{g.value.imag!r}")
    print(f"modulus\t{abs(g.value)!r}")
    print(f"classification\t{classify_gauss(args.p, args.v, args.r, mu)}")
    return 0


def cmd_cusps(args):
    if args.N < 1:
        raise CuspvanError(f"N must be a positive integer, got {args.N}")
    denominators = [args.L] if args.L else _divisors(args.N)
    for L in denominators:
        w = width(args.N, L)
        dl = delta(args.N, 1, L)
        for c in cusps_of_denominator(args.N, L):
            print(json.dumps({"a": c.a, "L": c.L, "width": w, "delta": dl}))
    return 0


def cmd_ef(args):
    rows = _read_jsonl(args.input)
    print("N\tL\te_p\te_f\tuniform")
    for lineno, obj in rows:
        data = _newform_at(lineno, args.input, obj)
        rep = e_f(data, args.L)
        print(f"{rep.N}\t{rep.L}\t{_exp_column(rep.exponents)}\t{rep.e_f}\t{rep.uniform}")
    return 0


def cmd_elliptic(args):
    rows = _read_jsonl(args.input)
    print("N\tL\te_p\te_f\tuniform")
    for lineno, obj in rows:
        data = _newform_at(lineno, args.input, obj)
        if data.rationality is Rationality.UNKNOWN:
            data = replace(data, rationality=Rationality.RATIONAL_COEFFICIENTS)
        for L in [args.L] if args.L else _divisors(data.N):
            value = elliptic_ramification(data, L)
            rep = e_f(data, L)
            assert value == rep.e_f
            print(f"{data.N}\t{L}\t{_exp_column(rep.exponents)}\t{value}\t{rep.uniform}")
    return 0


def cmd_verify(args):
    wanted = args.suites or ["all"]
    unknown = [n for n in wanted if n != "all" and n not in SUITES]
    if unknown:
        raise CuspvanError(
            f"unknown suite {unknown[0]!r}; choose from {', '.join(SUITES)} or all"
        )
    if "all" in wanted:
        names = list(SUITES)
    else:
        names = [n for n in SUITES if n in set(wanted)]
    failed = False
    for r in run_suites(names):
        line = f"{r.name}\t{'pass' if r.passed else 'FAIL'}\t{r.cases} cases"
        if r.note:
            line += f"\t{r.note}"
        if not r.passed:
            line += f"\twitness={r.witness!r}"
            failed = True
        print(line)
    return 2 if failed else 0


def cmd_table(args):
    def local_cases(p, max_n):
        cases = {(0, 0, 0)}
        for prof in elliptic_local_profiles(p, max_n):
            n = conductor(prof)
            for l in range(n + 1):
                cases.add((n, l, vanishing_index_table(prof, p, l)))
        return sorted(cases)

    rows = set()
    for n2, l2, e2 in local_cases(2, args.max_n2):
        for n3, l3, e3 in local_cases(3, args.max_n3):
            rows.add((2**n2 * 3**n3, 2**l2 * 3**l3, e2, e3))
    print("N\tL\te_p\te_f\tuniform")
    for N, L, e2, e3 in sorted(rows):
        exps = {p: e for p, e in ((2, e2), (3, e3)) if N % p == 0}
        print(f"{N}\t{L}\t{_exp_column(exps)}\t{2**e2 * 3**e3}\tall")
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_descriptor_flags(p, need_p=True):
    p.add_argument("--abstract", help="inline descriptor JSON")
    p.add_argument("--descriptor", help="path to a descriptor JSON file")
    p.add_argument("--p", type=int, required=need_p, help="residue prime")
    p.add_argument("--l", type=int, required=True, help="cusp denominator exponent")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="cuspvan",
        description="Vanishing orders of newforms at cusps from local data.",
        epilog="CUSPVAN_TOL overrides the 1e-9 zero threshold.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("vanishing", help="closed-form vanishing index e_pi(l)")
    _add_descriptor_flags(p)
    p.set_defaults(func=cmd_vanishing)

    p = sub.add_parser("oracle", help="character-search vanishing index")
    _add_descriptor_flags(p, need_p=False)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("whittaker", help="Whittaker coefficient table")
    p.add_argument("--abstract", help="inline descriptor JSON")
    p.add_argument("--descriptor", help="path to a descriptor JSON file")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--t-max", type=int, default=None, dest="t_max")
    p.add_argument("--v", type=int, default=None, help="evaluate at this unit")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=cmd_whittaker)

    p = sub.add_parser("gauss", help="averaged Gauss sum and its branch")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--mu", required=True, help="character JSON")
    p.add_argument("--v", type=int, default=1)
    p.set_defaults(func=cmd_gauss)

    p = sub.add_parser("cusps", help="cusps of X_0(N) with widths and periods")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--L", type=int, default=None)
    p.set_defaults(func=cmd_cusps)

    p = sub.add_parser("ef", help="e_f(L) for newform records (JSON lines)")
    p.add_argument("--input", required=True)
    p.add_argument("--L", type=int, required=True)
    p.set_defaults(func=cmd_ef)

    p = sub.add_parser("elliptic", help="modular parametrization ramification")
    p.add_argument("--input", required=True)
    p.add_argument("--L", type=int, default=None)
    p.set_defaults(func=cmd_elliptic)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument(
        "suites",
        nargs="*",
        metavar="SUITE",
        help=f"any of {', '.join(SUITES)}, or all (the default)",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="tabulate elliptic e values by (N, L)")
    p.add_argument("--max-n2", type=int, default=8, dest="max_n2")
    p.add_argument("--max-n3", type=int, default=5, dest="max_n3")
    p.set_defaults(func=cmd_table)

    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _MalformedJSON as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except CuspvanError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
