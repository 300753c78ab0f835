"""Command-line front end: catalog listing, K-group and homology
computations, boundary and exactness checks, verification suites, and
cache management.  One JSON object per invocation on stdout; diagnostics
as JSON on stderr.  Exit codes: 0 success, 2 verification failed,
3 budget exceeded, 4 bad input."""

import argparse
import hashlib
import json
import sys
import time

from . import cache, catalog, cone, excision, homology, kone, kzero, toeplitz
from .errors import (AxiomViolation, BadInput, BudgetExceeded, FieldTooSmall,
                     IdentityFailed, KlowError, LiftMismatch, NotInIdeal,
                     NotInvertible, NotUnital, UnitalInput)

VERIFY_DEFAULTS = {
    "cone": ("F2", "Z4"),
    "toeplitz": ("F3", "Z4"),
    "whitehead": ("Z5", "F4"),
    "structural": ("F2", "F3", "Z4"),
}


class _Args(argparse.ArgumentParser):
    def error(self, message):
        raise BadInput(message)


def _parser():
    p = _Args(prog="klow", description=__doc__)
    p.add_argument("--config", help="JSON config file "
                   '({"budgets": {...}, "cache_dir": path})')
    p.add_argument("--cache-dir", help="cache directory (overrides config "
                   "and KLOW_CACHE)")
    p.add_argument("--timing", action="store_true",
                   help="include wall-clock timing in the report")
    sub = p.add_subparsers(dest="command", required=True)

    ring = sub.add_parser("ring", help="catalog of finite rings")
    ringsub = ring.add_subparsers(dest="ring_command", required=True)
    ringsub.add_parser("list")
    show = ringsub.add_parser("show")
    show.add_argument("name")

    k0 = sub.add_parser("k0", help="K0 of a catalog ring")
    k0.add_argument("ring")
    k0.add_argument("--nmax", type=int, default=2)

    k1 = sub.add_parser("k1", help="K1 of a catalog ring")
    k1.add_argument("ring")
    k1.add_argument("--levels", default="2",
                    help="comma-separated matrix sizes, e.g. 1,2")

    bd = sub.add_parser("boundary",
                        help="boundary class of an invertible matrix over "
                        "the quotient of an extension")
    bd.add_argument("--extension", required=True)
    bd.add_argument("--element", required=True,
                    help="JSON matrix over the quotient ring, e.g. [[2]]")

    ex = sub.add_parser("exactness",
                        help="six-term exactness for an extension")
    ex.add_argument("--extension", required=True)
    ex.add_argument("--level", type=int, default=2)

    sw = sub.add_parser("swan", help="the triangular-ring counterexample "
                        "to split exactness of K1")
    sw.add_argument("--field", required=True)

    hc = sub.add_parser("hc", help="cyclic homology of a catalog algebra")
    hc.add_argument("algebra")
    hc.add_argument("--nmax", type=int, default=4)

    hb = sub.add_parser("hbar", help="bar homology of a catalog algebra")
    hb.add_argument("algebra")
    hb.add_argument("--nmax", type=int, default=4)

    ev = sub.add_parser("excision-verdict",
                        help="bar-homology obstruction to K-excision")
    ev.add_argument("algebra")
    ev.add_argument("--ncheck", type=int, default=3)

    vf = sub.add_parser("verify", help="identity verification suites")
    vf.add_argument("suite",
                    choices=["cone", "toeplitz", "whitehead", "structural",
                             "all"])
    vf.add_argument("--ring", help="restrict the suite to one catalog ring")
    vf.add_argument("--window", type=int, default=64)
    vf.add_argument("--samples", type=int, default=200)

    ca = sub.add_parser("cache", help="result cache management")
    ca.add_argument("cache_command", choices=["clear"])
    return p


def _levels(text):
    try:
        levels = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise BadInput(f"bad --levels value {text!r}")
    if not levels or any(n < 1 for n in levels):
        raise BadInput(f"bad --levels value {text!r}")
    return levels


def _suite_rings(suite, override):
    return (override,) if override else VERIFY_DEFAULTS[suite]


def _run_suite(suite, args, budgets):
    out = {}
    for name in _suite_rings(suite, args.ring):
        r = catalog.ring(name)
        if suite == "cone":
            out[name] = cone.verify_cone(r, window=args.window)
        elif suite == "toeplitz":
            out[name] = toeplitz.verify_toeplitz(r)
        elif suite == "whitehead":
            out[name] = kone.whitehead_sample_check(r, args.samples)
        elif suite == "structural":
            out[name] = kone.structural_identities_check(r)
    return out


def _dispatch(args, budgets):
    flags = {}
    if args.command == "ring":
        if args.ring_command == "list":
            return {"rings": catalog.ring_names()}, flags
        r = catalog.ring(args.name)
        return {"name": r.name, "order": r.order,
                "unital": r.one is not None,
                "commutative": all(
                    r.mul_table[a][b] == r.mul_table[b][a]
                    for a in range(r.order) for b in range(r.order)),
                "digest": r.digest()}, flags

    if args.command == "k0":
        rep = kzero.k0_report(catalog.ring(args.ring), n_max=args.nmax,
                              budget=budgets["gl_candidates"])
        flags["finite_truncation"] = True
        flags["stabilization_caveat"] = not rep.monoid.stabilized
        return rep.to_json(), flags

    if args.command == "k1":
        rep = kone.k1_report(catalog.ring(args.ring), _levels(args.levels),
                             budget=budgets["gl_candidates"])
        flags["finite_truncation"] = True
        flags["stabilization_caveat"] = rep.stable is not True
        top = rep.levels[-1][1]
        out = rep.to_json()
        out["k1"] = top.describe()
        return out, flags

    if args.command == "boundary":
        ext = catalog.extension(args.extension)
        try:
            g = tuple(tuple(row) for row in json.loads(args.element))
        except (ValueError, TypeError):
            raise BadInput(f"bad --element value {args.element!r}")
        vec, k0a = excision.boundary_class(ext, g)
        flags["finite_truncation"] = True
        return {"extension": ext.name, "element": [list(r) for r in g],
                "class_vector": list(vec),
                "k0_ideal": k0a.presented.describe()}, flags

    if args.command == "exactness":
        ext = catalog.extension(args.extension)
        nodes, groups, _maps = excision.six_term_check(ext, level=args.level)
        flags["finite_truncation"] = True
        result = {"extension": ext.name,
                  "nodes": nodes,
                  "groups": {k: v.describe() for k, v in groups.items()},
                  "exact": all(n["exact"] for n in nodes)}
        if not result["exact"]:
            raise IdentityFailed("six-term exactness", result)
        return result, flags

    if args.command == "swan":
        k = catalog.ring(args.field)
        res = dict(excision.swan_check(k))
        res["relative_k1"] = res["relative_k1"].describe()
        res["ideal_k1"] = res["ideal_k1"].describe()
        return res, flags

    if args.command == "hc":
        alg = catalog.algebra(args.algebra)
        cx = homology.build_connes_complex(alg, n_max=args.nmax + 1,
                                           budget=budgets["tensor_dim"])
        dims = homology.homology_ranks(cx)[:args.nmax + 1]
        oracle = homology.hc0_oracle(alg)
        if dims[0] != oracle:
            raise IdentityFailed("HC_0 = A/[A,A]", (dims[0], oracle))
        return {"algebra": alg.name, "hc": dims, "hc0_oracle": oracle}, flags

    if args.command == "hbar":
        alg = catalog.algebra(args.algebra)
        cx = homology.build_bar_complex(alg, n_max=args.nmax + 1,
                                        budget=budgets["tensor_dim"])
        dims = homology.homology_ranks(cx)[:args.nmax + 1]
        return {"algebra": alg.name, "hbar": dims}, flags

    if args.command == "excision-verdict":
        alg = catalog.algebra(args.algebra)
        try:
            return homology.excisiveness_verdict(alg, n_check=args.ncheck), \
                flags
        except UnitalInput:
            out = homology.unital_bar_check(alg, n_check=args.ncheck)
            out["rerouted"] = True
            out["verdict"] = "unital: K-excisive"
            return out, flags

    if args.command == "verify":
        suites = ["cone", "toeplitz", "whitehead", "structural"] \
            if args.suite == "all" else [args.suite]
        return {s: _run_suite(s, args, budgets) for s in suites}, flags

    if args.command == "cache":
        return {"cleared": cache.clear()}, flags

    raise BadInput(f"unknown command {args.command!r}")


def _inputs_digest(args):
    payload = {k: v for k, v in sorted(vars(args).items())
               if k not in ("config", "cache_dir", "timing")}
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def dispatch(argv):
    try:
        args = _parser().parse_args(argv)
        budgets = {"gl_candidates": kone.DEFAULT_GL_BUDGET,
                   "tensor_dim": homology.DEFAULT_TENSOR_BUDGET}
        if args.config:
            with open(args.config) as f:
                conf = json.load(f)
            budgets.update(conf.get("budgets", {}))
            if conf.get("cache_dir"):
                cache.configure(conf["cache_dir"])
        if args.cache_dir:
            cache.configure(args.cache_dir)
        t0 = time.time()
        results, flags = _dispatch(args, budgets)
        report = {
            "command": list(argv),
            "version": cache.VERSION,
            "inputs_digest": _inputs_digest(args),
            "flags": flags,
            "results": results,
        }
        if args.timing:
            report["timing_s"] = round(time.time() - t0, 3)
        print(json.dumps(report, sort_keys=True, indent=2))
        return 0
    except (IdentityFailed, LiftMismatch) as e:
        _err(e)
        return 2
    except BudgetExceeded as e:
        _err(e)
        return 3
    except (BadInput, FieldTooSmall, NotUnital, NotInvertible, NotInIdeal,
            UnitalInput, AxiomViolation, OSError, KlowError) as e:
        _err(e)
        return 4


def _err(e):
    print(json.dumps({"error": type(e).__name__, "message": str(e)},
                     sort_keys=True), file=sys.stderr)


def main():
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
