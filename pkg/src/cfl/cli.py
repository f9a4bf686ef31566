"""Command-line front end: lattice file reports, rank computations, suites.

Exit codes: 0 success, 1 input or validation error, 2 property failure.
The CFL_RING environment variable overrides the default coefficient ring.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .catalog import catalog_entries
from .exact import parse_ring
from .functor import gamma_span_rank, theta_rank, total_rank_formula
from .lattices import (CapExceeded, LatticeError, ideal_lattice, irreducibles,
                       is_distributive, lattice_from_json, lattice_to_json,
                       mobius, poset_from_json)
from .morphisms import e_t, max_tuple_size, p_tuples, tot_basis
from .suite import Limits, list_checks, run_suite, suite_names


class _InputError(Exception):
    pass


def _input_error(message):
    return _InputError(message)


def _load_json(path):
    try:
        with open(path) as handle:
            return json.load(handle)
    except OSError as err:
        raise _input_error(f"cannot read {path}: {err.strerror}")
    except json.JSONDecodeError as err:
        raise _input_error(f"{path}: JSON parse error: {err}")


def _load_lattice(path):
    try:
        return lattice_from_json(_load_json(path))
    except LatticeError as err:
        raise _input_error(f"{path}: {err}")


def _load_poset(path):
    try:
        return poset_from_json(_load_json(path))
    except LatticeError as err:
        raise _input_error(f"{path}: {err}")


def _ring_from(args):
    spec = args.ring or os.environ.get("CFL_RING") or "rat"
    try:
        return parse_ring(spec)
    except ValueError as err:
        raise _input_error(str(err))


def _emit(payload, as_json):
    if as_json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")


def _cmd_lattice_check(args):
    lat = _load_lattice(args.file)
    info = lattice_to_json(lat)
    info["irreducible_count"] = len(info["irreducibles"])
    if args.json:
        print(json.dumps(info, sort_keys=True))
    else:
        shape = "distributive" if info["distributive"] else "not distributive"
        print(f"lattice on {lat.n} elements: {shape}, "
              f"{info['irreducible_count']} irreducibles "
              f"(bottom={lat.bottom}, top={lat.top})")
    return 0


def _cmd_lattice_ideals(args):
    poset = _load_poset(args.file)
    lat, enc = ideal_lattice(poset, args.direction)
    payload = lattice_to_json(lat)
    payload["encodings"] = list(enc)
    payload["direction"] = args.direction
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"{args.direction} ideals: {lat.n} of a {poset.n}-point order")
        members = [[e for e in range(poset.n) if m >> e & 1] for m in enc]
        for i, m in enumerate(members):
            print(f"  {i}: {{{', '.join(map(str, m))}}}")
    return 0


def _cmd_lattice_mobius(args):
    lat = _load_lattice(args.file)
    table = mobius(lat)
    if args.json:
        print(json.dumps({"size": lat.n,
                          "mobius": [[a, b, v] for (a, b), v in sorted(table.items())]},
                         sort_keys=True))
    else:
        for (a, b), v in sorted(table.items()):
            print(f"mu({a},{b}) = {v}")
    return 0


def _cmd_lattice_endo(args):
    lat = _load_lattice(args.file)
    sizes = [len(p_tuples(lat, n)) for n in range(max_tuple_size(lat) + 1)]
    payload = {
        "size": lat.n,
        "tuple_counts": sizes,
        "chain_image_endomorphisms": len(tot_basis(lat)),
        "central_idempotent_terms": len(e_t(lat).terms),
        "matrix_unit_dimension": sum(s * s for s in sizes),
    }
    _emit(payload, args.json)
    return 0


def _cmd_rank(args):
    path = args.file or args.lattice
    if not path:
        raise _input_error("rank needs a lattice file (positional or --lattice)")
    if args.file and args.lattice and args.file != args.lattice:
        raise _input_error("two different lattice files given")
    lat = _load_lattice(path)
    ring = _ring_from(args)
    cap = args.cap
    try:
        if args.method == "theta":
            value = theta_rank(lat, args.points, ring, cap)
        elif args.method == "gamma":
            value = gamma_span_rank(lat, args.points, ring, cap)
        else:
            if not lat.is_chain():
                raise _input_error(
                    "--method formula applies only to totally ordered lattices")
            value = total_rank_formula(lat.n - 1, args.points)
    except CapExceeded as cap_err:
        raise _input_error(str(cap_err))
    if args.json:
        print(json.dumps({"rank": value, "points": args.points,
                          "method": args.method, "ring": ring.name,
                          "exact": bool(getattr(ring, "exact", True))},
                         sort_keys=True))
    else:
        note = "" if getattr(ring, "exact", True) else "  (probabilistic ring)"
        print(f"{value}{note}")
    return 0


def _cmd_verify(args):
    if args.list:
        for name, anchor, suites in list_checks():
            print(f"{name} [{', '.join(suites)}]: {anchor}")
        return 0
    ring = _ring_from(args)
    limits = Limits(max_lattice=args.max_lattice, max_points=args.max_points,
                    samples=args.samples)
    try:
        report = run_suite(args.suite, limits, args.seed, ring)
    except ValueError as err:
        raise _input_error(str(err))
    if args.json:
        print(json.dumps(report.to_json(), sort_keys=True))
    else:
        print(report.to_text())
    return 0 if report.passed else 2


def _cmd_catalog(args):
    entries = catalog_entries(args.max_size, args.exhaustive)
    if args.json:
        payload = [{"name": name, "size": lat.n,
                    "distributive": is_distributive(lat),
                    "irreducibles": len(irreducibles(lat)[0])}
                   for name, lat in entries]
        print(json.dumps(payload, sort_keys=True))
    else:
        for name, lat in entries:
            shape = "distributive" if is_distributive(lat) else "not distributive"
            print(f"{name:10} n={lat.n:2}  {shape}")
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="cfl",
        description="Exact computations on finite lattices and relations")
    sub = parser.add_subparsers(dest="command", required=True)

    lat = sub.add_parser("lattice", help="reports on a lattice or poset file")
    lat_sub = lat.add_subparsers(dest="subcommand", required=True)
    for name, fn, needs_direction in (
            ("check", _cmd_lattice_check, False),
            ("ideals", _cmd_lattice_ideals, True),
            ("mobius", _cmd_lattice_mobius, False),
            ("endo", _cmd_lattice_endo, False)):
        p = lat_sub.add_parser(name)
        p.add_argument("file")
        p.add_argument("--json", action="store_true")
        if needs_direction:
            p.add_argument("--direction", choices=("lower", "upper"),
                           default="lower")
        p.set_defaults(fn=fn)

    rank = sub.add_parser("rank", help="rank of the quotient module at a point count")
    rank.add_argument("file", nargs="?")
    rank.add_argument("--lattice")
    rank.add_argument("--points", type=int, required=True)
    rank.add_argument("--method", choices=("theta", "gamma", "formula"),
                      default="theta")
    rank.add_argument("--ring")
    rank.add_argument("--cap", type=int, default=20000)
    rank.add_argument("--json", action="store_true")
    rank.set_defaults(fn=_cmd_rank)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("--suite", default="all",
                        help=f"one of: {', '.join(suite_names())}")
    verify.add_argument("--max-lattice", type=int, default=5)
    verify.add_argument("--max-points", type=int, default=2)
    verify.add_argument("--samples", type=int, default=200)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--ring")
    verify.add_argument("--json", action="store_true")
    verify.add_argument("--list", action="store_true",
                        help="list the claim-to-check map and exit")
    verify.set_defaults(fn=_cmd_verify)

    cat = sub.add_parser("catalog", help="list the built-in lattice catalog")
    cat.add_argument("--max-size", type=int, default=None)
    cat.add_argument("--exhaustive", type=int, default=0)
    cat.add_argument("--json", action="store_true")
    cat.set_defaults(fn=_cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except _InputError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
