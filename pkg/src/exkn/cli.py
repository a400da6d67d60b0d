"""Command-line interface: ``exkn <command> [options]``.

Rationals are written "a/b" on input and output. Every exact column ``c`` is
accompanied by a lossy ``c_float`` column unless ``--no-floats`` is given.
Exit codes: 0 ok, 2 usage error, 3 domain error, 4 verification failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .conjecture import hull_weights, v_nm, verify_extremes
from .eppf import PUBLISHED_HULL_COUNTS, hull_count_table, sharp_bound_detail
from .errors import DomainError, VerificationError
from .exact_geom import QuadraticNumber
from .figures import FIGURES
from .k3_region import region_status
from .paintbox import INF, RankedDiscreteDistribution, law_of_kn
from .sampler import sample_crp, sample_dirichlet_uniform, sample_paintbox
from .two_param import ParamsAT, dual_params, h, inverse_map, k3_law_at

SCHEMA_VERSION = "1"

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY = 0, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def rational(text: str) -> Fraction:
    try:
        if any(c in text for c in ".eE"):
            raise ValueError
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"malformed rational {text!r}") from None


def rational_list(text: str) -> list[Fraction]:
    return [rational(t) for t in text.split(",") if t.strip()]


def m_value(text: str):
    if text.lower() in ("inf", "infinity", "oo"):
        return INF
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed m {text!r}") from None


# -- output -------------------------------------------------------------------

def _cell(v, precision):
    """(exact string, float string or None)."""
    if isinstance(v, bool):
        return str(v).lower(), None
    if isinstance(v, int):
        return str(v), None
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}", f"{float(v):.{precision}g}"
    if isinstance(v, QuadraticNumber):
        return str(v), f"{float(v):.{precision}g}"
    if isinstance(v, float):
        return None, f"{v:.{precision}g}"
    if v is None:
        return "", None
    return str(v), None


def render(command, parameters, rows, fmt="csv", precision=12, floats=True) -> str:
    columns: list[str] = []
    lossy: list[str] = []
    out_rows = []
    for row in rows:
        out = {}
        for key, v in row.items():
            exact, approx = _cell(v, precision)
            if exact is not None:
                out[key] = exact
                if key not in columns:
                    columns.append(key)
            if approx is not None and (floats or exact is None):
                fk = f"{key}_float" if exact is not None else key
                out[fk] = approx
                if fk not in columns:
                    columns.append(fk)
                if fk not in lossy:
                    lossy.append(fk)
        out_rows.append(out)
    if fmt == "json":
        record = {
            "schema_version": SCHEMA_VERSION,
            "command": command,
            "parameters": {k: _cell(v, precision)[0] or _cell(v, precision)[1] for k, v in parameters.items()},
            "columns": columns,
            "lossy_columns": lossy,
            "rows": out_rows,
        }
        return json.dumps(record, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\r\n", restval="")
    writer.writeheader()
    writer.writerows(out_rows)
    return buf.getvalue()


# -- commands -----------------------------------------------------------------

def cmd_vnm(args):
    v = v_nm(args.n, args.m)
    rows = [{"k": k, "prob": p} for k, p in enumerate(v.law, 1)]
    return {"n": args.n, "m": "inf" if args.m == INF else args.m}, rows, EXIT_OK


def cmd_law(args):
    p = RankedDiscreteDistribution(tuple(args.atoms))
    law = law_of_kn(p, args.n)
    rows = [{"k": k, "prob": q} for k, q in enumerate(law, 1)]
    return {"n": args.n, "atoms": ",".join(map(str, p.atoms)), "dust": p.dust}, rows, EXIT_OK


def cmd_region_check(args):
    st = region_status(args.q1, args.q3)
    row = {
        "inside": st.inside,
        "segments": " ".join(map(str, st.segments)),
        "tight": " ".join(map(str, st.tight)),
        "reason": st.reason,
    }
    return {"q1": args.q1, "q3": args.q3}, [row], EXIT_OK


def cmd_verify_extremes(args):
    rep = verify_extremes(args.n, args.m_max, workers=args.workers)
    rows = [{"m": m, "extreme": ok} for m, ok in rep.verdicts.items()]
    params = {"n": args.n, "m_max": args.m_max, "note": rep.note}
    return params, rows, EXIT_OK if rep.all_extreme else EXIT_VERIFY


def cmd_hull_member(args):
    w = hull_weights(args.law, args.n, args.m_max)
    verdict = "inside" if w is not None else "not reached by truncated family (inconclusive)"
    witness = "" if w is None else ";".join(
        f"{'inf' if m == INF else m}:{x.numerator}/{x.denominator}" for m, x in w.items()
    )
    row = {"label": "EVIDENCE", "inside": w is not None, "verdict": verdict, "witness": witness}
    return {"n": args.n, "m_max": args.m_max, "law": ",".join(map(str, args.law))}, [row], EXIT_OK


def cmd_sn_table(args):
    table = hull_count_table(args.m_min, args.m_max)
    rows = []
    bad = False
    for m, s in table.items():
        row = {"m": m, "s_m": s}
        if args.check:
            ref = PUBLISHED_HULL_COUNTS.get(m)
            row["published"] = ref
            row["match"] = ref == s if ref is not None else None
            bad |= ref is not None and ref != s
        rows.append(row)
    return {"m_min": args.m_min, "m_max": args.m_max}, rows, EXIT_VERIFY if bad else EXIT_OK


def cmd_sharp_bound(args):
    value, lam = sharp_bound_detail(args.n)
    closed = Fraction(max(4, args.n - 1), args.n + 1)
    row = {"n": args.n, "bound": value, "partition": ",".join(map(str, lam)), "closed_form": closed}
    return {"n": args.n}, [row], EXIT_OK if value == closed else EXIT_VERIFY


def _params(args):
    return ParamsAT(args.alpha, args.theta)


def cmd_two_param(args):
    p = _params(args)
    q1, q2, q3 = k3_law_at(p)
    row = {"regime": p.regime, "q1": q1, "q2": q2, "q3": q3, "h": h(q1, q3)}
    if p.regime == "MAIN":
        row["m"] = p.ray
    return {"alpha": p.alpha, "theta": p.theta}, [row], EXIT_OK


def cmd_dual(args):
    p = _params(args)
    d = dual_params(p)
    rows = []
    for label, params in (("input", p), ("dual", d)):
        q1, q2, q3 = k3_law_at(params)
        rows.append({"which": label, "alpha": params.alpha, "theta": params.theta, "q1": q1, "q2": q2, "q3": q3})
    return {"alpha": p.alpha, "theta": p.theta}, rows, EXIT_OK


def cmd_inverse(args):
    p = inverse_map(args.q1, args.q3)
    return {"q1": args.q1, "q3": args.q3}, [{"alpha": p.alpha, "theta": p.theta}], EXIT_OK


def cmd_sample(args):
    if args.model == "crp":
        if args.alpha is None or args.theta is None:
            raise UsageError("crp needs --alpha and --theta")
        rep = sample_crp(ParamsAT(args.alpha, args.theta), args.n, args.reps, args.seed, args.workers)
    elif args.model == "paintbox":
        if args.atoms is None:
            raise UsageError("paintbox needs --atoms")
        rep = sample_paintbox(RankedDiscreteDistribution(tuple(args.atoms)), args.n, args.reps, args.seed, args.workers)
    else:
        if args.m is None or args.neg_alpha is None:
            raise UsageError("dirichlet needs --m and --neg-alpha")
        rep = sample_dirichlet_uniform(args.m, args.neg_alpha, args.n, args.reps, args.seed, args.workers)
    rows = [
        {"k": k, "empirical": e, "exact": p, "sigma": rep.cell_sigma(k)}
        for k, (e, p) in enumerate(zip(rep.empirical, rep.exact), 1)
    ]
    params = {
        "model": args.model,
        "n": rep.n,
        "reps": rep.reps,
        "seed": rep.seed,
        "generator": rep.generator,
        "max_abs_deviation": rep.max_abs_deviation,
        "sigma_bound": rep.sigma_bound,
        "within_4_sigma": rep.within(4),
    }
    return params, rows, EXIT_OK


def cmd_figure(args):
    rows = FIGURES[args.id]()
    return {"id": args.id}, rows, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--precision", type=int, default=12, help="significant digits of float columns")
    common.add_argument("--no-floats", dest="floats", action="store_false", help="omit lossy float columns")
    common.add_argument("--out", help="write output to this path instead of stdout")

    parser = _Parser(prog="exkn", description="Exact laws of the number of distinct values K_n.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=fn)
        return p

    p = add("vnm", cmd_vnm, "law of K_n under uniform sampling on m values")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=m_value, required=True)

    p = add("law", cmd_law, "law of K_n for a paintbox")
    p.add_argument("--atoms", type=rational_list, required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("region-check", cmd_region_check, "is (q1, q3) an achievable law of K_3")
    p.add_argument("--q1", type=rational, required=True)
    p.add_argument("--q3", type=rational, required=True)

    p = add("verify-extremes", cmd_verify_extremes, "exact extreme-point check of v_{n,m}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m-max", type=int, default=30)
    p.add_argument("--workers", type=int, default=None)

    p = add("hull-member", cmd_hull_member, "membership of a law in the truncated hull (evidence)")
    p.add_argument("--law", type=rational_list, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m-max", type=int, default=30)

    p = add("sn-table", cmd_sn_table, "extreme-point counts of the finite-m K_3 regions")
    p.add_argument("--m-min", type=int, default=3)
    p.add_argument("--m-max", type=int, default=41)
    p.add_argument("--check", action="store_true", help="compare with the published counts")

    p = add("sharp-bound", cmd_sharp_bound, "max P(K_n = n-1) for partitions of [n+1]")
    p.add_argument("--n", type=int, required=True)

    for name, fn, help in (
        ("two-param", cmd_two_param, "K_3 law of an (alpha, theta) pair"),
        ("dual", cmd_dual, "dual parameters swapping q1 and q3"),
    ):
        p = add(name, fn, help)
        p.add_argument("--alpha", type=rational, required=True)
        p.add_argument("--theta", type=rational, required=True)

    p = add("inverse", cmd_inverse, "(alpha, theta) from (q1, q3)")
    p.add_argument("--q1", type=rational, required=True)
    p.add_argument("--q3", type=rational, required=True)

    p = add("sample", cmd_sample, "Monte Carlo law of K_n against the exact law")
    p.add_argument("--model", choices=("crp", "paintbox", "dirichlet"), required=True)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--reps", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--alpha", type=rational)
    p.add_argument("--theta", type=rational)
    p.add_argument("--atoms", type=rational_list)
    p.add_argument("--m", type=int)
    p.add_argument("--neg-alpha", type=rational)

    p = add("figure", cmd_figure, "data series behind a figure")
    p.add_argument("--id", type=int, choices=sorted(FIGURES), required=True)

    return parser


def _fail(code, kind, message):
    print(f"error\t{kind}\t{message}", file=sys.stderr)
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        params, rows, code = args.func(args)
    except UsageError as e:
        return _fail(EXIT_USAGE, "usage", str(e).replace("\n", " "))
    except DomainError as e:
        return _fail(EXIT_DOMAIN, "domain", str(e).replace("\n", " "))
    except VerificationError as e:
        return _fail(EXIT_VERIFY, "verification", str(e).replace("\n", " "))
    text = render(args.command, params, rows, args.format, args.precision, args.floats)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
