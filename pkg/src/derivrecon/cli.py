"""Command line entry point.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 when verify-theorem
finds a certified hypothesis without a unique reconstruction.
"""

import argparse
import json
import os
import sys

from .derivspace import apolar_pair, catalecticant, derivative, e_dim, e_space
from .errors import DerivError
from .exactla import Subspace
from .genericity import (DEFAULT_BOUND, ExperimentConfig, KINDS, certify_generic,
                         fingerprint, profile, run_experiment, sample)
from .multiindex import dim_S, format_index, parse_index
from .polyring import euler_lhs, infer_n, parse, to_text
from .reconstruct import (check_symmetry, descend, extract_relations,
                          solve_from_span, verify_theorem)

THEOREM_VIOLATION = 3


def _index(text):
    try:
        return parse_index(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _default_seed():
    raw = os.environ.get("DERIVSPACE_SEED")
    if raw is None:
        return 0
    try:
        return int(raw, 0)
    except ValueError:
        raise SystemExit(f"error: DERIVSPACE_SEED={raw!r} is not an integer")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("-o", "--output", help="write output to this path")

    poly = argparse.ArgumentParser(add_help=False)
    src = poly.add_mutually_exclusive_group()
    src.add_argument("-p", "--poly", help="polynomial text")
    src.add_argument("-f", "--file", help="file holding the polynomial text")
    poly.add_argument("-n", type=int, help="number of variables minus one (inferred if omitted)")

    parser = argparse.ArgumentParser(
        prog="derivrecon",
        description="Derivative spaces of homogeneous polynomials and reconstruction from them.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("dims", parents=[common], help="dimension of S_{n,d}")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-d", type=int, required=True)

    p = sub.add_parser("diff", parents=[common, poly], help="partial derivative D_I f")
    p.add_argument("-I", dest="index", type=_index, required=True)

    p = sub.add_parser("apolar", parents=[common, poly], help="apolar pairing <P, f>")
    p.add_argument("-P", dest="dual", required=True, help="dual polynomial in y0..yn")

    for name, helptext in (("cat-matrix", "catalecticant matrix"),
                           ("ek-dim", "dim E_k(f)"),
                           ("span", "E_k(f) as subspace JSON"),
                           ("certify", "is dim E_k(f) maximal"),
                           ("fingerprint", "fingerprint of E_k(f)"),
                           ("verify-theorem", "reconstruct f from E_k(f) and certify")):
        p = sub.add_parser(name, parents=[common, poly], help=helptext)
        p.add_argument("-k", type=int, required=True)

    sub.add_parser("profile", parents=[common, poly], help="dims of E_k(f) for all k")

    p = sub.add_parser("verify-prop1", parents=[common, poly],
                       help="relation extraction, symmetry check and descent for (f, g)")
    gsrc = p.add_mutually_exclusive_group(required=True)
    gsrc.add_argument("-g", dest="other", help="second polynomial text")
    gsrc.add_argument("-G", dest="other_file", help="file holding the second polynomial")
    p.add_argument("-k", type=int, required=True)

    p = sub.add_parser("reconstruct", parents=[common], help="solve E_k(g) in V")
    p.add_argument("-V", dest="span", required=True, help="subspace JSON file")
    p.add_argument("-n", type=int)
    p.add_argument("-d", type=int)
    p.add_argument("-k", type=int, required=True)

    seeded = argparse.ArgumentParser(add_help=False)
    seeded.add_argument("-n", type=int, required=True)
    seeded.add_argument("-d", type=int, required=True)
    seeded.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    seeded.add_argument("--seed", type=lambda s: int(s, 0), default=None)

    sub.add_parser("sample", parents=[common, seeded], help="seeded random polynomial")

    p = sub.add_parser("collide", parents=[common, seeded], help="fingerprint collision search")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--timings", action="store_true")

    p = sub.add_parser("experiment", parents=[common, seeded], help="run an experiment")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--timings", action="store_true",
                   help="record elapsed_ms (reports are then not byte-reproducible)")
    return parser


def _read_poly(text, path, n, parser):
    if text is None and path is None:
        parser.error("one of -p/--poly or -f/--file is required")
    if text is None:
        with open(path) as fh:
            text = fh.read()
    return parse(text, infer_n(text) if n is None else n)


def _emit(text, args):
    if not text.endswith("\n"):
        text += "\n"
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(data):
    return json.dumps(data, indent=2)


def _matrix_text(rows):
    return "\n".join(" ".join(str(x) for x in row) for row in rows)


def _experiment(args, kind):
    cfg = ExperimentConfig(kind=kind, n=args.n, d=args.d, k=args.k, trials=args.trials,
                           bound=args.bound, seed=args.seed, timings=args.timings)
    report = run_experiment(cfg)
    if args.format == "csv":
        return report.to_csv(), 0
    if args.format == "json":
        return report.to_json(), 0
    lines = [f"{kind} n={cfg.n} d={cfg.d} k={cfg.k} trials={cfg.trials} seed={cfg.seed}"]
    lines += [f"{key}: {value}" for key, value in report.summary.items()]
    return "\n".join(lines), 0


def _run(args, parser):
    fmt = args.format
    cmd = args.command
    needs_poly = cmd in ("diff", "apolar", "cat-matrix", "ek-dim", "span", "certify",
                         "fingerprint", "verify-theorem", "profile", "verify-prop1")
    f = _read_poly(args.poly, args.file, args.n, parser) if needs_poly else None

    if cmd == "dims":
        value = dim_S(args.n, args.d)
        return (_dump({"n": args.n, "d": args.d, "dim": value}) if fmt == "json"
                else str(value)), 0

    if cmd == "diff":
        out = derivative(f, args.index)
        if fmt == "json":
            return _dump({"f": to_text(f), "I": format_index(args.index),
                          "result": to_text(out)}), 0
        return to_text(out), 0

    if cmd == "apolar":
        P = parse(args.dual, f.n, var="y")
        out = apolar_pair(P, f)
        if fmt == "json":
            return _dump({"P": to_text(P, "y"), "f": to_text(f), "result": to_text(out)}), 0
        return to_text(out), 0

    if cmd == "cat-matrix":
        cat = catalecticant(f, args.k)
        if fmt == "json":
            return _dump(cat.to_dict()), 0
        if fmt == "csv":
            return "\n".join(",".join(str(x) for x in row) for row in cat.matrix), 0
        return _matrix_text(cat.matrix), 0

    if cmd == "ek-dim":
        r = e_dim(f, args.k)
        return (_dump({"k": args.k, "dim": r, "max": dim_S(f.n, args.k)}) if fmt == "json"
                else str(r)), 0

    if cmd == "span":
        return json.dumps(e_space(f, args.k).to_dict(), indent=2), 0

    if cmd == "certify":
        ok = certify_generic(f, args.k)
        return (_dump({"k": args.k, "certified": ok}) if fmt == "json"
                else str(ok).lower()), 0

    if cmd == "profile":
        prof = profile(f)
        if fmt == "json":
            return _dump(prof.to_dict()), 0
        return "\n".join(f"k={k} dim={r} max={dim_S(f.n, k)} member={str(m).lower()}"
                         for k, (r, m) in enumerate(zip(prof.dims, prof.member))), 0

    if cmd == "fingerprint":
        fp = fingerprint(f, args.k)
        if fmt == "json":
            return _dump({"n": fp.n, "d": fp.d, "k": fp.k, "digest": fp.digest,
                          "canonical": fp.canonical.to_dict()}), 0
        return fp.digest, 0

    if cmd == "verify-theorem":
        rep = verify_theorem(f, args.k)
        code = THEOREM_VIOLATION if rep.contradiction else 0
        if fmt == "json":
            return _dump(rep.to_dict()), code
        lines = [f"hypothesis dim E_{args.k + 1} = dim S_{args.k + 1}: {str(rep.hypothesis).lower()}",
                 f"within k <= d/2 - 1: {str(rep.within_bound).lower()}",
                 "dims: " + " ".join(str(r) for r in rep.dims),
                 f"solution_dim: {rep.solution_dim}",
                 f"verdict: {rep.verdict}"]
        if rep.witness is not None:
            lines.append(f"basis = {rep.witness} * f")
        if rep.contradiction:
            lines.append("THEOREM VIOLATION")
        return "\n".join(lines), code

    if cmd == "verify-prop1":
        g = _read_poly(args.other, args.other_file, f.n, parser)
        a = extract_relations(f, g, args.k)
        ok, violations = check_symmetry(a)
        data = {"relations": a.to_dict(), "symmetry_ok": ok,
                "violations": len(violations)}
        if ok and args.k >= 1:
            lower = descend(f, a, args.k)
            deg = f.d - args.k + 1
            data["descent_matches"] = all(derivative(g, K) == h for K, h in lower.items())
            data["euler_ok"] = all(euler_lhs(derivative(g, K)) == derivative(g, K).scale(deg)
                                   for K in lower)
            data["descent"] = {format_index(K): to_text(h) for K, h in lower.items()}
        if fmt == "json":
            return _dump(data), 0
        return "\n".join(f"{key}: {value}" for key, value in data.items()
                         if key not in ("relations", "descent")), 0

    if cmd == "reconstruct":
        with open(args.span) as fh:
            V = Subspace.from_json(fh.read())
        n = V.n if args.n is None else args.n
        d = V.e + args.k if args.d is None else args.d
        res = solve_from_span(V, n, d, args.k)
        if fmt == "json":
            return _dump(res.to_dict()), 0
        return "\n".join([f"verdict: {res.verdict}", f"solution_dim: {res.solution_dim}"]
                         + [to_text(g) for g in res.basis]), 0

    if cmd == "sample":
        f = sample(args.n, args.d, args.bound, args.seed)
        return (_dump({"seed": args.seed, "poly": to_text(f)}) if fmt == "json"
                else to_text(f)), 0

    if cmd == "collide":
        return _experiment(args, "collision")

    if cmd == "experiment":
        return _experiment(args, args.kind)

    parser.error(f"unknown command {cmd}")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", 0) is None:
        args.seed = _default_seed()
    try:
        text, code = _run(args, parser)
    except DerivError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(text, args)
    return code


if __name__ == "__main__":
    sys.exit(main())
