"""Command line front end.

One subcommand per capability, machine-readable JSON by default, a text
rendering behind ``--format text``.  All output is deterministic for a
fixed seed: orderings are canonical everywhere.  Exit codes: 0 success,
1 domain error, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import counting, derivation, eigen, io, moments, monoid, rational
from .errors import RotinvError


def _dumps(obj):
    return json.dumps(obj, separators=(",", ":"))


def _parse_range(text):
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    v = int(text)
    return v, v


def _parse_angles(text):
    return tuple(float(a) for a in text.split(",") if a.strip())


def _form_to_json(n, s):
    form = eigen.eigenvector(n, s)
    return {
        "n": n,
        "s": s,
        "coefficients": [[int(c.re), int(c.im)] for c in form.coefficients],
        "text": form.to_poly().to_text(),
    }


def _cmd_eigen(args, out):
    rows = []
    for n in range(2, args.d + 1):
        for s in reversed(eigen.spectrum(n)):
            rows.append(_form_to_json(n, s))
    if args.format == "json":
        out.write(_dumps(rows) + "\n")
    else:
        for r in rows:
            lam = "0" if r["s"] == 0 else f"{r['s']}i"
            out.write(f"e_{r['n']}({lam}) = {r['text']}\n")
    return 0


def _generator_json(ev, kind=None):
    row = {"monomial": ev.to_json(), "degree": ev.degree()}
    if kind is not None:
        row["kind"] = kind
    return row


def _cmd_generators(args, out):
    if args.kind == "polynomial":
        gens = monoid.polynomial_generators(args.d, degree_cap=args.degree_cap)
        rows = [_generator_json(ev) for ev, _ in gens]
        labels = [ev.label() for ev, _ in gens]
    else:
        p, q = _anchor(args)
        gens = rational.rational_generators(args.d, p, q)
        rows = [_generator_json(g.factors, g.kind) for g in gens]
        labels = [g.label() for g in gens]
    if args.format == "json":
        out.write(_dumps(rows) + "\n")
    else:
        for row, label in zip(rows, labels):
            kind = f" [{row['kind']}]" if "kind" in row else ""
            out.write(f"deg {row['degree']}: {label}{kind}\n")
    return 0


def _cmd_dims(args, out):
    lo, hi = args.n
    values = [counting.dim_invariants(args.d, n) for n in range(lo, hi + 1)]
    out.write(_dumps(values) + "\n")
    return 0


def _cmd_poincare(args, out):
    data = counting.poincare_series(args.d, args.terms)
    out.write(_dumps(list(data.coefficients)) + "\n")
    return 0


def _cmd_character(args, out):
    char = derivation.character(args.d)
    if args.format == "json":
        out.write(_dumps({str(k): v for k, v in sorted(char.items())}) + "\n")
    else:
        parts = []
        for k, v in sorted(char.items()):
            coef = "" if v == 1 else f"{v}*"
            if k == 0:
                parts.append(str(v))
            else:
                parts.append(f"{coef}q^{k}" if k != 1 else f"{coef}q")
        out.write(" + ".join(parts) + "\n")
    return 0


def _cmd_check_closed_form(args, out):
    ok = counting.closed_form_check(args.d, args.terms)
    out.write(_dumps({"d": args.d, "terms": args.terms, "match": ok}) + "\n")
    return 0 if ok else 1


def _load_source(path):
    if path.endswith(".pgm"):
        return io.read_pgm(path)
    if path.endswith(".csv"):
        return io.read_point_cloud_csv(path)
    raise RotinvError(f"cannot sniff input format from extension: {path}")


def _anchor(args):
    if args.p is not None or args.q is not None:
        if args.p is None or args.q is None:
            raise RotinvError("--p and --q must be given together")
        return args.p, args.q
    return rational.default_anchor(args.d)


def _generators_from_file(path):
    with open(path, "r", encoding="utf-8") as fh:
        rows = json.load(fh)
    out = []
    for row in rows:
        ev = eigen.ExponentVector.make(
            {(m["n"], m["s"]): m["e"] for m in row["monomial"]}
        )
        out.append((ev, row.get("kind")))
    return out


def _cmd_features(args, out):
    src = _load_source(args.input)
    if args.generators_file:
        loaded = _generators_from_file(args.generators_file)
        items = [ev for ev, _ in loaded]
        kinds = [k for _, k in loaded]
        d = max(sym.n for ev in items for sym, _ in ev.exponents)
        anchor = None
        names = [("b" if k else "g") + str(i + 1) for i, k in enumerate(kinds)]
        labels = [ev.label() for ev in items]
    else:
        p, q = _anchor(args)
        gens = rational.rational_generators(args.d, p, q)
        items = gens
        d = args.d
        anchor = [p, q]
        names = [f"b{i + 1}" for i in range(len(gens))]
        labels = [g.label() for g in gens]
    eta = moments.moment_pipeline(src, d)
    features = []
    for name, label, item in zip(names, labels, items):
        value = moments.evaluate_invariant(item, eta)
        features.append(
            {
                "name": name,
                "label": label,
                "value": [value.real, value.imag],
                "im_residue": abs(value.imag),
            }
        )
    out.write(_dumps({"d": d, "anchor": anchor, "features": features}) + "\n")
    return 0


def _cmd_verify(args, out):
    p, q = _anchor(args)
    result = {"d": args.d, "anchor": [p, q]}
    expected = eigen.dim_moment_space(args.d) - 1
    gens = rational.rational_generators(args.d, p, q)
    ok = rational.independence_check(gens, args.d, trials=args.trials, seed=args.seed)
    result["independence"] = {
        "trials": args.trials,
        "seed": args.seed,
        "expected_rank": expected,
        "pass": ok,
    }
    if args.input:
        src = _load_source(args.input)
        report = moments.verify_invariance(src, args.d, p, q, args.angles)
        result["invariance"] = report.to_json()
    out.write(_dumps(result) + "\n")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rotinv",
        description="Exact rotation moment invariants: construction, counting "
        "and numeric evaluation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--format", choices=("json", "text"), default="json")
        return p

    p = add("eigen", _cmd_eigen, help="eigenforms of orders 2..d")
    p.add_argument("--d", type=int, required=True)

    p = add("generators", _cmd_generators, help="minimal generating sets")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--kind", choices=("polynomial", "rational"), default="polynomial")
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--degree-cap", type=int, default=monoid.DEFAULT_DEGREE_CAP)

    p = add("dims", _cmd_dims, help="dimensions of homogeneous invariants")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=_parse_range, required=True, metavar="A..B")

    p = add("poincare", _cmd_poincare, help="Poincare series coefficients")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--terms", type=int, required=True)

    p = add("character", _cmd_character, help="weight multiplicities")
    p.add_argument("--d", type=int, required=True)

    p = add(
        "check-closed-form",
        _cmd_check_closed_form,
        help="compare the counting DP against the printed rational forms",
    )
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--terms", type=int, default=20)

    p = add("features", _cmd_features, help="evaluate invariants on an input")
    p.add_argument("--input", required=True)
    p.add_argument("--d", type=int, default=4)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--generators-file")

    p = add("verify", _cmd_verify, help="independence and invariance checks")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--input")
    p.add_argument("--angles", type=_parse_angles, default=(0.3, 1.0, 2.5))
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)

    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args, out)
    except RotinvError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    raise SystemExit(run())
