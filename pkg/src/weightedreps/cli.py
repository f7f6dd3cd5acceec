"""Command-line front end.

    weightedreps verify thm1 --n-max 2000 --format json
    weightedreps verify all --jobs 4
    weightedreps table r_eo --n-max 20 --format csv
    weightedreps extract --h 1 --N 2 --order 100
    weightedreps km-demo --n-max 10

Exit status: 0 when every report passes, 1 when any fails, 2 on usage or
parameter errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from concurrent.futures import ProcessPoolExecutor

from . import arith, identities
from .counts import PartSystem, build_signed_counts
from .errors import InputTooLarge, ParamsOutOfRange
from .report import IDENTITY_IDS, IdentityReport, dumps
from .series import lambert_series
from .theta import ThetaParams, exponent_table

SEQUENCES = ("r_eo", "t_eo_plus", "p_eo", "r_hn", "c", "e", "f", "e_prime", "lambert")


class UsageError(Exception):
    pass


def _run_one(entry) -> IdentityReport:
    identity, params, n_max = entry
    return identities.verify_identity(identity, params, n_max)


def _params_from(args) -> dict:
    return {k: v for k, v in (("h", args.h), ("N", args.N), ("k", args.k)) if v is not None}


def _reports_text(reports) -> str:
    lines = []
    for r in reports:
        lines.append(r.summary())
        for f in r.failures[:20]:
            lines.append(f"    n={f.n}: lhs={f.lhs} rhs={f.rhs}")
        if len(r.failures) > 20:
            lines.append(f"    ... {len(r.failures) - 20} more")
    return "\n".join(lines) + "\n"


def _reports_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["identity", "params", "lo", "hi", "status", "failures", "elapsed_ms"])
    for r in reports:
        params = ";".join(f"{k}={v}" for k, v in sorted(r.params.items()))
        w.writerow([r.identity, params, r.range[0], r.range[1], r.status, len(r.failures), r.elapsed_ms])
    return buf.getvalue()


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_verify(args) -> int:
    name = args.identity.replace("-", "_")
    if name == "all":
        entries = list(identities.ACCEPTANCE_MATRIX)
    else:
        if name not in IDENTITY_IDS:
            raise UsageError(f"unknown identity {args.identity!r}; choose from all, {', '.join(IDENTITY_IDS)}")
        n_max = args.order if args.order is not None else args.n_max
        entries = [(name, identities.validate(name, _params_from(args)), n_max)]
    for _, _, n in entries:
        if n < 1:
            raise UsageError("--n-max/--order must be at least 1")

    if args.jobs > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_run_one, entries))
    else:
        reports = [_run_one(e) for e in entries]
    reports.sort(key=IdentityReport.sort_key)

    if args.format == "json":
        docs = [r.to_dict() for r in reports]
        text = dumps(docs[0] if len(docs) == 1 and name != "all" else docs)
    elif args.format == "csv":
        text = _reports_csv(reports)
    else:
        text = _reports_text(reports)
    _emit(text, args.output)
    return 0 if all(r.passed for r in reports) else 1


def sequence_rows(name: str, n_max: int, h=None, N=None, k=None) -> list[tuple[int, int]]:
    """(n, value) rows for the table command."""

    def need(*vals):
        if any(v is None for v in vals):
            raise UsageError(f"sequence {name!r} needs " + {
                "p_eo": "--k", "e_prime": "--k", "f": "--h",
            }.get(name, "--h and --N"))

    if name in ("r_eo", "t_eo_plus", "p_eo", "r_hn"):
        if name == "r_eo":
            sys_ = PartSystem.squares()
        elif name == "t_eo_plus":
            sys_ = PartSystem.triangular()
        elif name == "p_eo":
            need(k)
            sys_ = PartSystem.kgonal(k)
        else:
            need(h, N)
            sys_ = PartSystem.congruence(h, N)
        return list(enumerate(build_signed_counts(sys_, n_max).values))
    if name == "c":
        w = arith.weights("c", N if N is not None else 1)
    elif name == "e":
        need(h, N)
        w = arith.weights("e", h, N)
    elif name == "f":
        need(h)
        w = arith.weights("f", abs(h))
    elif name == "e_prime":
        need(k)
        w = arith.weights("e_prime", k)
    elif name == "lambert":
        need(h, N)
        p = ThetaParams(h, N)
        s = lambert_series(exponent_table(p), n_max + 1) + p.h * p.h
        return list(enumerate(s))
    else:
        raise UsageError(f"unknown sequence {name!r}; choose from {', '.join(SEQUENCES)}")
    return [(n, w(n)) for n in range(1, n_max + 1)]


def _rows_out(rows, fmt: str, columns=("n", "value")) -> str:
    if fmt == "json":
        return dumps([{c: (str(v) if c != "n" else v) for c, v in zip(columns, row)} for row in rows])
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        w.writerows(rows)
        return buf.getvalue()
    return "".join(" ".join(str(x) for x in row) + "\n" for row in rows)


def cmd_table(args) -> int:
    if args.n_max < 1:
        raise UsageError("--n-max must be at least 1")
    rows = sequence_rows(args.sequence, args.n_max, args.h, args.N, args.k)
    _emit(_rows_out(rows, args.format), args.output)
    return 0


def cmd_extract(args) -> int:
    if args.h is None or args.N is None:
        raise UsageError("extract needs --h and --N")
    if args.N < 1 or args.order < 2:
        raise UsageError("need N >= 1 and --order >= 2")
    rep = identities.extract_exponents_roundtrip(args.h, args.N, args.order)
    got = rep.extra.get("recovered", [])
    table = exponent_table(ThetaParams(args.h, args.N))
    if args.format == "json":
        text = dumps(rep.to_dict())
    else:
        rows = [(n, int(a), table(n)) for n, a in enumerate(got, start=1)]
        text = _rows_out(rows, args.format, ("n", "recovered", "expected"))
        if args.format == "text":
            text += rep.summary() + "\n"
    _emit(text, args.output)
    return 0 if rep.passed else 1


def cmd_km_demo(args) -> int:
    rows = identities.km_rows(args.n_max)
    ok = True
    out = []
    for r in rows:
        i_ok = r["S"] == r["partial_product"]
        ii_ok = r["c_recovered"] == r["c"]
        ok = ok and i_ok and ii_ok
        out.append((r["n"], r["S"], r["u"], r["c_recovered"], r["two_a_minus_S"],
                    "ok" if i_ok else "FAIL", "ok" if ii_ok else "FAIL"))
    cols = ("n", "S", "u", "c", "two_a_minus_S", "identity_i", "identity_ii")
    if args.format == "json":
        text = dumps([{c: (v if c in ("n", "identity_i", "identity_ii") else str(v))
                       for c, v in zip(cols, row)} for row in out])
    elif args.format == "csv":
        text = _rows_out(out, "csv", cols)
    else:
        text = _rows_out([cols] + out, "text")
        text += ("PASS" if ok else "FAIL") + " km_recursion identities (i) and (ii)\n"
    _emit(text, args.output)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weightedreps",
        description="Verify weighted representation-count identities for sums of squares "
                    "and polygonal numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_default="text"):
        p.add_argument("--h", type=int)
        p.add_argument("--N", type=int)
        p.add_argument("--k", type=int)
        p.add_argument("--format", choices=("json", "csv", "text"), default=fmt_default)
        p.add_argument("--output", metavar="PATH")

    p = sub.add_parser("verify", help="run one identity sweep, or 'all' for the acceptance matrix")
    p.add_argument("identity")
    p.add_argument("--n-max", type=int, default=100)
    p.add_argument("--order", type=int, help="order for the series-level checks (overrides --n-max)")
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="print a sequence: " + ", ".join(SEQUENCES))
    p.add_argument("sequence")
    p.add_argument("--n-max", type=int, default=20)
    common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("extract", help="recover product exponents from theta coefficients")
    p.add_argument("--order", type=int, default=100)
    common(p)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("km-demo", help="multinomial-sum cancellation demo for c_n")
    p.add_argument("--n-max", type=int, default=10)
    common(p)
    p.set_defaults(func=cmd_km_demo)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (UsageError, ParamsOutOfRange, InputTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
