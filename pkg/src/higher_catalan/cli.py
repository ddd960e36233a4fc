"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 size guard
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalan as cat
from . import gluing, lattice, maps, verify
from .errors import SizeGuardError
from .series import as_list, series_pow, solve_z

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3

GUARD_DEFAULTS = {
    "max_steps": lattice.MAX_PATH_STEPS,
    "max_faces": lattice.MAX_DISSECTION_FACES,
    "max_darts": gluing.MAX_DARTS,
}


class UsageError(Exception):
    pass


def _catalan_values(nu: int, j_max: int, method: str, guards: dict) -> list[int]:
    if method == "formula":
        return [cat.higher_catalan(nu, j) for j in range(j_max + 1)]
    if method == "recursion":
        return cat.catalan_by_recursion(nu, j_max)
    if method == "series":
        return [int(x) for x in solve_z(nu, j_max)]
    if method == "paths":
        lattice.check_guard("nu*jmax", nu * j_max, guards["max_steps"])
        return [len(lattice.enumerate_dyck_paths(nu, j, guards["max_steps"])) for j in range(j_max + 1)]
    if method == "dissections":
        lattice.check_guard("jmax", j_max, guards["max_faces"])
        return [1] + [len(lattice.enumerate_dissections(nu, j, guards["max_faces"])) for j in range(1, j_max + 1)]
    raise UsageError(f"unknown method {method!r}")


def cmd_catalan(args, guards) -> int:
    print(" ".join(str(v) for v in _catalan_values(args.nu, args.jmax, args.method, guards)))
    return EXIT_OK


def _formula_counts(nu: int, j: int, genus: int | None) -> dict[int, int]:
    if genus is not None and genus not in (0, 1):
        raise UsageError(f"no closed form in scope for genus {genus} (formulas cover genus 0 and 1)")
    fns = {0: maps.kappa0, 1: maps.kappa1}
    wanted = [genus] if genus is not None else [0, 1]
    return {g: fns[g](nu, j) for g in wanted}


def _fmt_counts(counts: dict[int, int]) -> str:
    return "{" + ", ".join(f"g{g}: {c}" for g, c in sorted(counts.items())) + "}"


def cmd_maps(args, guards) -> int:
    nu, j, genus = args.nu, args.j, args.genus
    if genus is not None and genus < 0:
        raise UsageError("genus must be >= 0")
    formula = oracle = table = None
    if args.method in ("formula", "both"):
        formula = _formula_counts(nu, j, genus)
    if args.method in ("oracle", "both"):
        table = gluing.count_maps_oracle(nu, j, guards["max_darts"], workers=args.workers)
        oracle = dict(table.counts) if genus is None else {genus: table.count(genus)}
    if args.json:
        doc = {"nu": nu, "j": j}
        if formula is not None:
            doc["formula"] = {str(g): str(c) for g, c in formula.items()}
        if table is not None:
            doc["oracle"] = table.to_dict()
        if formula is not None and oracle is not None:
            doc["match"] = all(oracle.get(g) == c for g, c in formula.items())
        print(json.dumps(doc, indent=2))
    elif args.method == "both":
        print(f"formula: {_fmt_counts(formula)}")
        print(f"oracle:  {_fmt_counts(oracle)}")
    else:
        counts = formula if formula is not None else oracle
        print(counts[genus] if genus is not None else _fmt_counts(counts))
    if formula is not None and oracle is not None:
        match = all(oracle.get(g) == c for g, c in formula.items())
        if not args.json:
            print("match: yes" if match else "match: NO")
        return EXIT_OK if match else EXIT_FAIL
    return EXIT_OK


def cmd_series(args, guards) -> int:
    nu, order = args.nu, args.order
    if args.what == "z":
        s = solve_z(nu, order)
    elif args.what == "e0":
        s = maps.e0_series(nu, order)
    elif args.what == "e1":
        s = maps.e1_series(nu, order)
    else:
        if args.alpha is None:
            raise UsageError("--what zpow needs --alpha")
        s = series_pow(solve_z(nu, order), Fraction(args.alpha))
    print(", ".join(as_list(s)))
    return EXIT_OK


def cmd_paths(args, guards) -> int:
    paths = lattice.enumerate_dyck_paths(args.nu, args.j, guards["max_steps"])
    if args.count:
        print(len(paths))
    else:
        for p in paths:
            print(p)
    return EXIT_OK


def cmd_queues(args, guards) -> int:
    nu, j = args.nu, args.j
    if args.split:
        print(lattice.split_queue(tuple(args.split), nu, args.lines))
        return EXIT_OK
    arrangements = lattice.enumerate_queue_arrangements(nu, args.lines, j, guards["max_steps"])
    if args.count:
        print(len(arrangements))
        return EXIT_OK
    for q in arrangements:
        if args.merge:
            print(f"{q} -> {''.join(lattice.merge_queues(q))}")
        else:
            print(q)
    return EXIT_OK


def cmd_polygons(args, guards) -> int:
    ds = lattice.enumerate_dissections(args.nu, args.j, guards["max_faces"])
    if args.count:
        print(len(ds))
    else:
        for d in ds:
            print(d)
    return EXIT_OK


def cmd_verify(args, guards) -> int:
    try:
        report = verify.run(args.suite, mutate=args.mutate)
    except KeyError as e:
        raise UsageError(e.args[0]) from None
    if args.format == "table":
        print(verify.format_table(report))
    else:
        print(json.dumps(report, indent=1))
    return EXIT_OK if report["ok"] else EXIT_FAIL


def _nu(text: str) -> int:
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError("nu must be >= 2")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _pos(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="higher-catalan",
        description="Higher Catalan numbers, their combinatorial models, and genus 0/1 map counts.",
    )
    p.add_argument("--config", help="JSON file setting max_steps, max_faces and/or max_darts")
    p.add_argument("--max-steps", type=int, help=f"path/queue guard on nu*j (default {lattice.MAX_PATH_STEPS})")
    p.add_argument("--max-faces", type=int, help=f"dissection guard on j (default {lattice.MAX_DISSECTION_FACES})")
    p.add_argument("--max-darts", type=int, help=f"gluing oracle guard on 2*nu*j (default {gluing.MAX_DARTS})")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("catalan", help="print zeta_0 .. zeta_jmax")
    s.add_argument("--nu", type=_nu, required=True)
    s.add_argument("--jmax", type=_nonneg, required=True)
    s.add_argument("--method", choices=["formula", "recursion", "series", "paths", "dissections"], default="formula")
    s.set_defaults(func=cmd_catalan)

    s = sub.add_parser("maps", help="genus-0/1 map counts by formula and/or brute-force gluing")
    s.add_argument("--nu", type=_nu, required=True)
    s.add_argument("--j", type=_pos, required=True)
    s.add_argument("--method", choices=["formula", "oracle", "both"], default="formula")
    s.add_argument("--genus", type=int)
    s.add_argument("--workers", type=_pos, default=1, help="processes for the oracle shards")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_maps)

    s = sub.add_parser("series", help="coefficients 0..order as exact rationals")
    s.add_argument("--what", choices=["z", "e0", "e1", "zpow"], required=True)
    s.add_argument("--nu", type=_nu, required=True)
    s.add_argument("--order", type=_nonneg, required=True)
    s.add_argument("--alpha", help="exponent for zpow, e.g. 3 or 1/2")
    s.set_defaults(func=cmd_series)

    s = sub.add_parser("paths", help="list higher Dyck paths")
    s.add_argument("--nu", type=_nu, required=True)
    s.add_argument("--j", type=_nonneg, required=True)
    s.add_argument("--count", action="store_true")
    s.set_defaults(func=cmd_paths)

    s = sub.add_parser("queues", help="list exact-change queue arrangements")
    s.add_argument("--nu", type=_nu, required=True)
    s.add_argument("--j", type=_pos, default=1)
    s.add_argument("--lines", type=_pos, default=1)
    s.add_argument("--merge", action="store_true", help="also show the merged single line")
    s.add_argument("--split", help="split this merged line (over 1/N) into --lines lines")
    s.add_argument("--count", action="store_true")
    s.set_defaults(func=cmd_queues)

    s = sub.add_parser("polygons", help="list dissections of the marked polygon")
    s.add_argument("--nu", type=_nu, required=True)
    s.add_argument("--j", type=_pos, required=True)
    s.add_argument("--count", action="store_true")
    s.set_defaults(func=cmd_polygons)

    suites = ", ".join(["all", *verify.SUITES])
    s = sub.add_parser(
        "verify",
        help="run cross-verification suites",
        description=(
            f"Suites: {suites}. Default ranges: chain nu 2..4 with nu*j <= 16; series nu 2..5, j <= 30; "
            "star nu 2..6, j <= 40; eta i <= 5, j <= 20 plus queues for nu=2, j <= 5; "
            "psg alpha <= 5 to order 25; assembly nu 2..6, j <= 20; maps oracle for 2*nu*j <= 16."
        ),
    )
    s.add_argument("--suite", default="all", help=suites)
    s.add_argument("--format", choices=["json", "table"], default="json")
    s.add_argument("--mutate", metavar="SUITE", help="perturb one value in SUITE (or all) to check the harness fails")
    s.set_defaults(func=cmd_verify)
    return p


def _guards(args) -> dict:
    guards = dict(GUARD_DEFAULTS)
    if args.config:
        try:
            with open(args.config) as fh:
                cfg = json.load(fh)
        except (OSError, json.JSONDecodeError) as e:
            raise UsageError(f"cannot read config {args.config}: {e}") from None
        unknown = set(cfg) - set(guards)
        if unknown:
            raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
        guards.update({k: int(v) for k, v in cfg.items()})
    for key in guards:
        if getattr(args, key) is not None:
            guards[key] = getattr(args, key)
    return guards


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, _guards(args))
    except SizeGuardError as e:
        print(f"error: size guard exceeded: {e}", file=sys.stderr)
        return EXIT_GUARD
    except (UsageError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
