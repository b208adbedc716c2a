"""Command line interface.

Subcommands:
  algebra     build a classical or map superalgebra, print JSON
  module      build a module over an inline-specified algebra
  cohomology  H^p(L, C) (or with a module file) for an algebra
  ext         Ext^p between evaluation modules over a map algebra
  lhs         low-degree spectral sequence data for an ideal
  verify      run the verification suite
  blocks      block decomposition of an evaluation-module family

All output is JSON on stdout (sorted keys); errors are JSON on stderr.
Exit codes: 0 success, 2 validation error, 3 size guard exceeded,
4 oracle mismatch.
"""

import argparse
import json
import sys

from .scalars import parse_scalar
from .superlie import (LieSuperalgebra, GuardExceeded, ValidationError,
                       build_classical, root_data)
from .commalg import build_multipoint
from .mapalg import tensor_algebra, slot_index
from .reps import (Representation, trivial_rep, adjoint_rep, defining_rep,
                   osp12_irrep, evaluation_rep, tensor_rep)
from .cohomology import (cohomology_dims, ext_dims, lhs_low_degree,
                         cocycle_representatives, OracleMismatch)
from . import theorems


def _emit(data, args):
    indent = 1 if getattr(args, "pretty", False) else None
    text = json.dumps(data, indent=indent, sort_keys=True)
    out = getattr(args, "output", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _fail(code, kind, message):
    print(json.dumps({"error": kind, "message": message}, sort_keys=True),
          file=sys.stderr)
    return code


def _parse_points(text):
    """'0:2,1:2' -> [(0, 2), (1, 2)]; exact scalars allowed."""
    out = []
    for part in text.split(","):
        val, _, mult = part.partition(":")
        out.append((parse_scalar(val), int(mult) if mult else 1))
    return out


def _build_algebra(args):
    g = build_classical(args.kind, m=args.m, n=args.n,
                        guard_dim=args.guard_dim)
    if getattr(args, "points", None):
        basis = args.basis or ("blocks" if "," in args.points
                               else "monomial")
        ring = build_multipoint(_parse_points(args.points), basis=basis)
        return tensor_algebra(g, ring, guard_dim=args.guard_dim), g, ring
    return g, g, None


def _load_algebra(args):
    if getattr(args, "algebra", None):
        return LieSuperalgebra.load(args.algebra), None, None
    return _build_algebra(args)


def cmd_algebra(args):
    alg, _, _ = _build_algebra(args)
    data = alg.to_json()
    if args.roots:
        rd = root_data(alg)
        data["root_data"] = {
            "roots": [[[str(x) for x in w], p, m] for w, p, m in rd.roots],
            "positive": [[str(x) for x in w] for w in rd.positive],
            "weight_lattice": [list(v) for v in (rd.weight_lattice or [])],
            "root_lattice": [list(v) for v in rd.root_lattice],
            "quotient_divisors": rd.divisors,
        }
    _emit(data, args)
    return 0


def _module_over(alg, base, ring, spec):
    if spec in (None, "triv", "trivial"):
        return trivial_rep(alg)
    if spec == "adjoint":
        return adjoint_rep(alg)
    if spec == "defining":
        return defining_rep(alg)
    if spec.startswith("ev:"):
        if ring is None:
            raise ValidationError("evaluation modules need a map algebra")
        _, point, lam = spec.split(":")
        return evaluation_rep(alg, int(point),
                              osp12_irrep(base, int(lam)))
    if spec.startswith("irrep:"):
        return osp12_irrep(base, int(spec.split(":")[1]))
    raise ValidationError("unknown module spec %r" % spec)


def cmd_module(args):
    alg, base, ring = _build_algebra(args)
    rep = _module_over(alg, base, ring, args.spec)
    _emit(rep.to_json(), args)
    return 0


def cmd_cohomology(args):
    alg, base, ring = _load_algebra(args)
    if args.module and args.module.endswith(".json"):
        with open(args.module) as fh:
            rep = Representation.from_json(alg, json.load(fh))
    else:
        rep = _module_over(alg, base, ring, args.module)
    rep.validate()
    report = {"degree": args.degree}
    dims = cohomology_dims(alg, rep, args.degree)
    report["even_dim"] = dims["even"]
    report["odd_dim"] = dims["odd"]
    if args.cocycles:
        reps_, basis = cocycle_representatives(alg, rep, args.degree)
        report["cocycles"] = [
            sorted([[list(S), list(T), m, str(v)]
                    for (S, T, m), v in
                    ((basis[k], val) for k, val in z.items())])
            for z in reps_]
    _emit(report, args)
    return 0


def cmd_ext(args):
    alg, base, ring = _build_algebra(args)
    v1 = _module_over(alg, base, ring, args.module1)
    v2 = _module_over(alg, base, ring, args.module2)
    dims = ext_dims(alg, v1, v2, args.degree)
    _emit({"degree": args.degree, "even_dim": dims["even"],
           "odd_dim": dims["odd"]}, args)
    return 0


def cmd_lhs(args):
    alg, base, ring = _build_algebra(args)
    specs = [s for s in args.modules.split(",")]
    if ring is None or len(specs) != len(ring.points):
        raise ValidationError("need one local module per point")
    lams = [int(s) for s in specs]
    rep, pred, per_point, case = theorems.thm_main_instance(
        base, lams, mults=[(a, n) for a, n in ring.points])
    data = rep.to_json()
    data["per_point_prediction"] = per_point
    data["case"] = case
    _emit(data, args)
    return 0


def cmd_verify(args):
    reports = theorems.run_suite(scale=args.scale, jobs=args.jobs)
    ok = all(r["pass"] for r in reports)
    _emit({"reports": reports, "all_pass": ok}, args)
    return 0 if ok else 1


def cmd_blocks(args):
    lams = tuple(int(x) for x in args.lams.split(","))
    report, table = theorems.verify_block_decomposition(lams=lams,
                                                        jobs=args.jobs)
    report["ext_table"] = [[a, b, v] for (a, b), v in sorted(table.items())
                           if a <= b]
    _emit(report, args)
    return 0 if report["pass"] else 1


def _add_algebra_flags(p):
    p.add_argument("--kind", default="osp",
                   choices=["gl", "sl", "osp", "p", "q"])
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--points", help="map algebra points, e.g. '0:2,1:2'")
    p.add_argument("--basis", choices=["monomial", "blocks"])
    p.add_argument("--guard-dim", type=int, default=None,
                   help="override the dimension guard "
                        "(default 200, env SUPEREXT_GUARD_DIM)")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="superext",
        description="Exact Lie superalgebra cohomology and Ext groups")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("algebra", help="build an algebra")
    _add_algebra_flags(p)
    p.add_argument("--roots", action="store_true")
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--output")
    p.set_defaults(fn=cmd_algebra)

    p = sub.add_parser("module", help="build a module")
    _add_algebra_flags(p)
    p.add_argument("--spec", default="triv",
                   help="triv | adjoint | defining | irrep:L | ev:PT:L")
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--output")
    p.set_defaults(fn=cmd_module)

    p = sub.add_parser("cohomology", help="H^p(L, M)")
    _add_algebra_flags(p)
    p.add_argument("--algebra", help="algebra JSON file (alternative "
                                     "to the inline flags)")
    p.add_argument("--module", default="triv")
    p.add_argument("--degree", type=int, default=1)
    p.add_argument("--cocycles", action="store_true")
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--output")
    p.set_defaults(fn=cmd_cohomology)

    p = sub.add_parser("ext", help="Ext^p(V, U)")
    _add_algebra_flags(p)
    p.add_argument("--module1", required=True)
    p.add_argument("--module2", required=True)
    p.add_argument("--degree", type=int, default=1)
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--output")
    p.set_defaults(fn=cmd_ext)

    p = sub.add_parser("lhs", help="low-degree spectral sequence data")
    _add_algebra_flags(p)
    p.add_argument("--modules", required=True,
                   help="comma-separated local highest weights, one "
                        "per point, e.g. '2,0'")
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--output")
    p.set_defaults(fn=cmd_lhs)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--suite", default="all")
    p.add_argument("--scale", default="small",
                   choices=["tiny", "small"])
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--output")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("blocks", help="block decomposition of a family")
    p.add_argument("--lams", default="0,1,2")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--output")
    p.set_defaults(fn=cmd_blocks)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except GuardExceeded as exc:
        return _fail(3, "guard_exceeded", str(exc))
    except OracleMismatch as exc:
        return _fail(4, "oracle_mismatch", str(exc))
    except (ValidationError, ValueError, OSError) as exc:
        return _fail(2, "validation_error", str(exc))


if __name__ == "__main__":
    sys.exit(main())
