"""Command-line front end.

Exit codes: 0 success, 1 an identity or check failed, 2 usage error.
JSON goes to stdout; ``--pretty`` switches to plain text.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import __version__

# Size budgets per feature; override with --budget NAME=VALUE.
BUDGETS = {
    "count": 16,         # vertices for hp / hc
    "acyclic": 12,       # vertices for the chromatic polynomial
    "planeq": 12,        # vertices for --count
    "planeq-list": 9,    # vertices for --list and cyclic counts
    "avoiders": 9,       # n for permutation filters
    "identities": 7,     # max-n for identity sweeps
    "koszul": 6,         # vertices for Koszul complexes
    "multipartite": 12,  # k + |lambda|
    "young": 8,          # total weight of Young series
    "series": 20,        # order of univariate series
}


IDENTITY_ALIASES = {"theorem5": "recurrences"}


class UsageError(Exception):
    pass


def _budget(args, name, value):
    limit = args.budgets[name]
    if value > limit:
        raise UsageError(f"{name}: {value} exceeds the budget of {limit} (raise with --budget {name}=N)")


def _frac(x) -> dict:
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


def _emit(args, payload, text=None):
    if args.pretty and text is not None:
        print(text)
    else:
        print(json.dumps(payload, sort_keys=False))


def _graph(args):
    from .graph import is_connected, parse_graph_spec

    try:
        g = parse_graph_spec(args.graph)
    except (ValueError, OSError) as exc:
        raise UsageError(f"bad --graph: {exc}") from None
    if not is_connected(g):
        raise UsageError(f"graph {args.graph!r} is not connected")
    return g


# --- subcommands ---------------------------------------------------------------

def cmd_count(args):
    from .graph import acyclic_orientation_count
    from .hamiltonian import hc, hp

    g = _graph(args)
    if args.what == "acyclic":
        _budget(args, "acyclic", g.n)
        value = acyclic_orientation_count(g)
    else:
        _budget(args, "count", g.n)
        value = hp(g) if args.what == "hp" else hc(g)
    if args.format == "json":
        _emit(args, {"graph": args.graph, "what": args.what, "value": value})
    else:
        _emit(args, value, f"{args.what.upper()}({args.graph}) = {value}")
    return 0


def cmd_planeq(args):
    from . import planeq as Q

    g = _graph(args)
    if args.list:
        _budget(args, "planeq-list", g.n)
        items = Q.cyceq_classes(g) if args.cyclic else Q.planeq_tuples(g)
        _emit(args, [list(s) for s in items], "\n".join(" ".join(map(str, s)) for s in items))
    else:
        if args.cyclic:
            _budget(args, "planeq-list", g.n)
            value = Q.cyceq_count(g)
        else:
            _budget(args, "planeq", g.n)
            value = Q.planeq_count(g)
        _emit(args, value, f"{'CE' if args.cyclic else 'PE'}({args.graph}) = {value}")
    return 0


def cmd_avoiders(args):
    from . import planeq as Q

    _budget(args, "avoiders", args.n)
    try:
        if args.patterns.strip().upper() == "BC":
            pats = Q.b_c_patterns()
        else:
            pats = [Q.parse_pattern(p) for p in args.patterns.split(",") if p.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --patterns: {exc}") from None
    if args.list:
        items = Q.avoiders_list(args.n, pats)
        _emit(args, [list(s) for s in items], "\n".join("".join(map(str, s)) for s in items))
    else:
        value = Q.avoiders(args.n, pats)
        _emit(args, value, f"|Av_{args.n}| = {value}")
    return 0


def cmd_verify(args):
    from .graphic import IDENTITY_NAMES, verify_identities

    _budget(args, "identities", args.max_n)
    names = [IDENTITY_ALIASES.get(x, x) for x in args.identity] if args.identity else list(IDENTITY_NAMES)
    t0 = time.perf_counter()
    report = verify_identities(
        args.max_n,
        names,
        jobs=args.jobs,
        sample_n7=args.sample,
        seed=args.seed,
        full_n7=args.full_n7,
    )
    elapsed = time.perf_counter() - t0
    report = {"command": "verify-identities", "version": __version__, **report}
    if args.dump and report["counterexamples"]:
        with open(args.dump, "w") as fh:
            json.dump(report["counterexamples"], fh, indent=1)
    lines = [
        f"{label}: {'PASS' if s['failed'] == 0 else 'FAIL'} ({s['checked']} graphs, {s['failed']} failed)"
        for label, s in report["identities"].items()
    ]
    for ce in report["counterexamples"][:5]:
        lines.append(f"counterexample [{ce['identity']}]: lhs={ce['lhs']} rhs={ce['rhs']}\n{ce['edge_list']}")
    _emit(args, report, "\n".join(lines))
    print(f"elapsed {elapsed:.1f}s", file=sys.stderr)
    return 0 if report["passed"] else 1


def cmd_koszul(args):
    from . import koszul as K
    from .hamiltonian import hc

    g = _graph(args)
    _budget(args, "koszul", g.n)
    c = K.build_ham_koszul(g) if args.module == "ham" else K.build_cycham_koszul(g)
    square_zero = c.check_square_zero()
    betti = K.homology_ranks(c) if square_zero else None
    if args.module == "ham":
        expected = [1] if g.n == 1 else [0] * len(c.bases)
    else:
        expected = [hc(g)] + [0] * (len(c.bases) - 1)
    if args.dump_matrices:
        with open(args.dump_matrices, "w") as fh:
            fh.write(c.dump())
    ok = square_zero and betti == expected
    report = {
        "command": "koszul-check",
        "version": __version__,
        "graph": args.graph,
        "module": args.module,
        "dims": c.dims(),
        "square_zero": square_zero,
        "homology": betti,
        "expected": expected,
        "passed": ok,
    }
    text = f"{args.module} complex of {args.graph}: dims {c.dims()}, homology {betti}, expected {expected}: {'PASS' if ok else 'FAIL'}"
    _emit(args, report, text)
    return 0 if ok else 1


def _partition_arg(text):
    text = text.strip()
    if not text:
        return ()
    try:
        lam = tuple(sorted((int(x) for x in text.split(",")), reverse=True))
    except ValueError:
        raise UsageError(f"bad --lambda {text!r}") from None
    if any(x <= 0 for x in lam):
        raise UsageError("--lambda parts must be positive")
    return lam


def cmd_multipartite(args):
    from . import symfun as S
    from .hamiltonian import hc, hp

    lam = _partition_arg(args.lam)
    if args.k < 0:
        raise UsageError("--k must be non-negative")
    _budget(args, "multipartite", args.k + sum(lam))
    try:
        value = S.hp_multipartite(args.k, lam) if args.what == "hp" else S.hc_multipartite(args.k, lam)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = {"k": args.k, "lambda": list(lam), "what": args.what, "value": value}
    code = 0
    if args.check:
        g = S.multipartite_graph(args.k, lam)
        brute = hp(g) if args.what == "hp" else hc(g)
        report["brute_force"] = brute
        report["passed"] = brute == value
        code = 0 if brute == value else 1
    _emit(args, report, f"{args.what.upper()}(K_(1^{args.k}) U {list(lam)}) = {value}")
    return code


def cmd_young(args):
    from . import symfun as S
    from .graphic import C, HC, HP, P

    _budget(args, "young", args.max_weight)
    f = {"hp": HP, "hc": HC, "p": P, "c": C}[args.f]
    closed = {
        "hp": lambda N: S.hp_series_closed(N) - 1 - S.SymSeries("m", N, {(0, (1,)): 1}),
        "hc": S.hc_series_closed,
        "p": S.p_series_closed,
        "c": S.c_series_closed,
    }[args.f]
    N = args.max_weight
    ser = S.young_generating(f, N)
    matches = ser == closed(N)
    rows = [
        {"n": k, "lambda": list(lam), **_frac(c)}
        for (k, lam), c in sorted(ser.terms.items(), key=lambda kv: (kv[0][0] + sum(kv[0][1]), kv[0][0], kv[0][1]))
    ]
    if args.format == "csv":
        print("n,lambda,num,den")
        for r in rows:
            print(f"{r['n']},{' '.join(map(str, r['lambda']))},{r['num']},{r['den']}")
    else:
        _emit(
            args,
            {"f": args.f, "max_weight": N, "basis": "m", "matches_closed_form": matches, "terms": rows},
            "\n".join(f"z^{r['n']} m{r['lambda']}: {r['num']}/{r['den']}" for r in rows)
            + f"\nmatches closed form: {matches}",
        )
    return 0 if matches else 1


def cmd_series(args):
    from .series import cyclic_counts, named_series

    _budget(args, "series", args.order)
    s = named_series(args.name, args.order)
    if args.name in ("cyclic-hertzsprung", "fc-pe"):
        values = cyclic_counts(s)  # undo the t^n/n weighting
    else:
        values = s.c[1:]
    if args.format == "json":
        _emit(args, {"name": args.name, "order": args.order, "coefficients": [_frac(v) for v in values]})
    else:
        print(",".join(str(v) for v in values))
    return 0


# --- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="contractad-lab", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="plain-text output instead of JSON")
    common.add_argument(
        "--budget", action="append", default=[], metavar="NAME=VALUE", help="override a size budget"
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("count", parents=[common], help="count Hamiltonian paths/cycles or acyclic orientations")
    s.add_argument("--graph", required=True, help="P5, C6, K4, K2,2,1, ~P5 (complement) or an edge-list file")
    s.add_argument("--what", choices=["hp", "hc", "acyclic"], required=True)
    s.add_argument("--format", choices=["int", "json"], default="int")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("planeq", parents=[common], help="PlanEq / CycEq of a graph")
    s.add_argument("--graph", required=True)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--count", action="store_true", default=True)
    g.add_argument("--list", action="store_true")
    s.add_argument("--cyclic", action="store_true", help="CycEq instead of PlanEq")
    s.set_defaults(func=cmd_planeq)

    s = sub.add_parser("avoiders", parents=[common], help="count permutations avoiding patterns")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--patterns", required=True, help="comma-separated, e.g. 2413,3142; BC for the cycle family")
    s.add_argument("--list", action="store_true")
    s.set_defaults(func=cmd_avoiders)

    s = sub.add_parser("verify-identities", parents=[common], help="sweep graphic-function identities")
    s.add_argument("--max-n", type=int, default=6)
    s.add_argument(
        "--identity",
        action="append",
        choices=["hp-inverse", "hc-inverse", "perm", "cycperm", "recurrences", "theorem5"],
        help="repeatable; default all (theorem5 is an alias of recurrences)",
    )
    s.add_argument("--jobs", type=int, default=int(os.environ.get("CONTRACTAD_LAB_JOBS", "1") or 1))
    s.add_argument("--seed", type=int, default=0, help="seed for the sampled n = 7 layer")
    s.add_argument("--sample", type=int, default=1000, help="graphs in the sampled n = 7 layer")
    s.add_argument("--full-n7", action="store_true", help="sweep all 1866256 connected graphs at n = 7")
    s.add_argument("--dump", metavar="PATH", help="write counterexamples here as JSON")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("koszul-check", parents=[common], help="homology of a Koszul complex")
    s.add_argument("--graph", required=True)
    s.add_argument("--module", choices=["ham", "cycham"], required=True)
    s.add_argument("--dump-matrices", metavar="PATH")
    s.set_defaults(func=cmd_koszul)

    s = sub.add_parser("multipartite", parents=[common], help="closed-form HP/HC of K_(1^k) U lambda")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--lambda", dest="lam", default="", help="comma-separated parts, e.g. 3,2")
    s.add_argument("--what", choices=["hp", "hc"], required=True)
    s.add_argument("--check", action="store_true", help="compare with brute-force enumeration")
    s.set_defaults(func=cmd_multipartite)

    s = sub.add_parser("young-series", parents=[common], help="Young generating function of hp, hc, p or c")
    s.add_argument("--f", choices=["hp", "hc", "p", "c"], required=True)
    s.add_argument("--max-weight", type=int, default=6)
    s.add_argument("--format", choices=["json", "csv"], default="json")
    s.set_defaults(func=cmd_young)

    s = sub.add_parser("series", parents=[common], help="univariate series coefficients for n = 1..order")
    s.add_argument("--name", choices=["hertzsprung", "cyclic-hertzsprung", "schroder", "fp-hp", "fc-pe"], required=True)
    s.add_argument("--order", type=int, default=10)
    s.add_argument("--format", choices=["csv", "json"], default="csv")
    s.set_defaults(func=cmd_series)
    return p


def _parse_budgets(items):
    budgets = dict(BUDGETS)
    for item in items:
        name, sep, value = item.partition("=")
        if not sep or name not in budgets:
            raise UsageError(f"bad --budget {item!r}; names: {', '.join(BUDGETS)}")
        try:
            budgets[name] = int(value)
        except ValueError:
            raise UsageError(f"bad --budget value {value!r}") from None
    return budgets


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses 2 for usage errors
        return int(exc.code or 0)
    try:
        args.budgets = _parse_budgets(args.budget)
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be at least 1")
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:  # limits enforced inside the library
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
