"""Command-line surface.

Subcommands:

* ``check``    decide descent for one triple and print the verdict
* ``tables``   emit the theta/d table or the Gamma catalog
* ``mult``     triple invariant dimension and the scaling probe
* ``explore``  per-pair generic stabilizer lattices over W x W
* ``stab``     structure of the torus subgroup killed by a set of roots
* ``selftest`` run the embedded example suite

Exit codes: 0 success, 1 usage or input error, 2 resource bound exceeded,
3 selftest failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import selftest as _selftest_mod
from .descent import (
    generic_pair_lattice,
    pairing_character,
    stabilizer_structure,
    verdict,
)
from .errors import RESOURCE_ERRORS, GitDescentError, InvalidType
from .gamma import gamma_lattice, root_lattice
from .lattice import INFINITE, contains, index_in
from .reps import semistable_probe, triple_invariant_dim
from .rootsys import RootCoords, RootSystem, Weight, parse_type, root_to_weight_coords
from .weyl import enumerate_weyl_group, weyl_order

TABLE_TYPES = [
    "A1", "A2", "A3", "A4", "A5",
    "B3", "B4", "B5",
    "C2", "C3", "C4",
    "D4", "D5", "D6",
    "G2", "F4",
    "E6", "E7", "E8",
]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _parse_vector(text: str, rank: int, what: str) -> tuple[int, ...]:
    try:
        coords = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise _UsageError(f"cannot parse {what} {text!r} as comma-separated integers")
    if len(coords) != rank:
        raise _UsageError(f"{what} has {len(coords)} coordinates, expected {rank}")
    return coords


def _parse_weight(rs: RootSystem, text: str, what: str, basis: str) -> Weight:
    coords = _parse_vector(text, rs.rank, what)
    if basis == "root":
        return root_to_weight_coords(rs, RootCoords(coords))
    return Weight(coords)


def _parse_root_item(rs: RootSystem, item: str) -> RootCoords:
    item = item.strip()
    if item.startswith("a") and item[1:].isdigit():
        k = int(item[1:])
        if not 1 <= k <= rs.rank:
            raise _UsageError(f"simple root a{k} outside 1..{rs.rank}")
        return rs.simple_root(k)
    try:
        coords = tuple(int(p) for p in item.split(":"))
    except ValueError:
        raise _UsageError(f"cannot parse root {item!r}: use aK or colon-separated coordinates")
    if len(coords) != rs.rank:
        raise _UsageError(f"root {item!r} has {len(coords)} coordinates, expected {rs.rank}")
    return RootCoords(coords)


def format_root_combination(r: RootCoords) -> str:
    """Render a root-coordinate vector like ``a1 + 2 a2 + 2 a3``."""
    parts = []
    for i, c in enumerate(r.coords, start=1):
        if c == 0:
            continue
        parts.append(f"a{i}" if c == 1 else f"{c} a{i}")
    return " + ".join(parts) if parts else "0"


def theta_table_rows(*, full: bool = False) -> list[dict]:
    rows = []
    for name in TABLE_TYPES:
        rs = parse_type(name)
        row = {
            "type": name,
            "theta_root_coords": list(rs.theta.coords),
            "theta": format_root_combination(rs.theta),
            "d": rs.d,
        }
        if full:
            row["root_system"] = rs.to_json_dict()
        rows.append(row)
    return rows


def theta_table_text() -> str:
    rows = theta_table_rows()
    width = max(len(r["theta"]) for r in rows)
    lines = [f"{r['type']:<4} theta = {r['theta']:<{width}}   d = {r['d']}" for r in rows]
    return "\n".join(lines)


def gamma_table_rows() -> list[dict]:
    rows = []
    for name in TABLE_TYPES:
        rs = parse_type(name)
        gam = gamma_lattice(rs)
        rows.append(
            {
                "type": name,
                "index_in_q": index_in(gam, root_lattice(rs)),
                "basis": [list(b) for b in gam.hnf_basis],
            }
        )
    return rows


def gamma_table_text() -> str:
    rows = gamma_table_rows()
    width = max(len(str(r["index_in_q"])) for r in rows)
    lines = []
    for r in rows:
        basis = "; ".join(" ".join(str(x) for x in row) for row in r["basis"])
        lines.append(f"{r['type']:<4} index_in_Q = {r['index_in_q']:<{width}}   basis = [{basis}]")
    return "\n".join(lines)


def _cmd_check(args) -> int:
    rs = parse_type(args.type)
    lam = _parse_weight(rs, args.lam, "--lambda", args.basis)
    mu = _parse_weight(rs, args.mu, "--mu", args.basis)
    nu = _parse_weight(rs, args.nu, "--nu", args.basis)
    v = verdict(
        rs, lam, mu, nu,
        n_max=args.n_max, size_bound=args.size_bound, run_probe=args.probe,
    )
    if args.output == "json":
        print(json.dumps(v.to_json_dict(), indent=2))
    else:
        print(f"{v.type_name}  lambda={lam.coords} mu={mu.coords} nu={nu.coords}")
        print(f"outcome: {v.outcome}")
        for r in v.reasons:
            shown = {True: "true", False: "false", None: "n/a"}[r.result]
            print(f"  {r.rule}: {shown}  {r.witness}")
        if v.probe is not None:
            print(f"probe: {v.probe!r}")
    return 0


def _cmd_tables(args) -> int:
    if args.what == "theta":
        if args.output == "json":
            print(json.dumps({"what": "theta", "rows": theta_table_rows(full=True)}, indent=2))
        else:
            print(theta_table_text())
    else:
        if args.output == "json":
            print(json.dumps({"what": "gamma", "rows": gamma_table_rows()}, indent=2))
        else:
            print(gamma_table_text())
    return 0


def _cmd_mult(args) -> int:
    rs = parse_type(args.type)
    lam = _parse_weight(rs, args.lam, "--lambda", args.basis)
    mu = _parse_weight(rs, args.mu, "--mu", args.basis)
    nu = _parse_weight(rs, args.nu, "--nu", args.basis)
    dim = triple_invariant_dim(rs, lam, mu, nu)
    probe = None
    if all(w.is_dominant_regular for w in (lam, mu, nu)):
        probe = semistable_probe(rs, lam, mu, nu, args.n_max)
    if args.output == "json":
        print(
            json.dumps(
                {
                    "type": rs.type_name,
                    "lambda": list(lam.coords),
                    "mu": list(mu.coords),
                    "nu": list(nu.coords),
                    "invariant_dim": dim,
                    "probe": None
                    if probe is None
                    else {"nonempty": probe.nonempty, "n": probe.n},
                },
                indent=2,
            )
        )
    else:
        print(f"dim of invariants in V(lambda) x V(mu) x V(nu): {dim}")
        if probe is None:
            print("probe: skipped (weights not dominant regular)")
        else:
            print(f"probe: {probe!r}")
    return 0


def _cmd_explore(args) -> int:
    rs = parse_type(args.type)
    lam = _parse_weight(rs, args.lam, "--lambda", args.basis)
    mu = _parse_weight(rs, args.mu, "--mu", args.basis)
    nu = _parse_weight(rs, args.nu, "--nu", args.basis)
    order = weyl_order(rs)
    if order * order > args.size_bound:
        from .errors import GroupTooLarge

        raise GroupTooLarge(order * order, args.size_bound)
    elements = list(enumerate_weyl_group(rs, args.size_bound))
    q = root_lattice(rs)
    rows = []
    for w1 in elements:
        for w2 in elements:
            lat = generic_pair_lattice(rs, w1, w2)
            idx = index_in(lat, q) if lat.rank == rs.rank else INFINITE
            chi = pairing_character(rs, lam, mu, nu, w1, w2)
            rows.append(
                {
                    "w1": list(w1.word),
                    "w2": list(w2.word),
                    "basis": [list(b) for b in lat.hnf_basis],
                    "index_in_q": "infinite" if idx == INFINITE else idx,
                    "character": list(chi.coords),
                    "character_in_lattice": contains(lat, chi),
                }
            )
    if args.output == "json":
        print(json.dumps({"type": rs.type_name, "pairs": rows}, indent=2))
    else:
        for r in rows:
            w1 = ".".join(map(str, r["w1"])) or "e"
            w2 = ".".join(map(str, r["w2"])) or "e"
            basis = "; ".join(" ".join(str(x) for x in row) for row in r["basis"])
            mark = "yes" if r["character_in_lattice"] else "no"
            print(
                f"({w1}, {w2})  index_in_Q={r['index_in_q']}  "
                f"char={','.join(str(c) for c in r['character'])} in_lattice={mark}  basis=[{basis}]"
            )
    return 0


def _cmd_stab(args) -> int:
    rs = parse_type(args.type)
    roots = [_parse_root_item(rs, item) for item in args.roots.split(",")]
    st = stabilizer_structure(rs, roots)
    if args.output == "json":
        print(
            json.dumps(
                {
                    "type": rs.type_name,
                    "roots": [list(r.coords) for r in roots],
                    "torus_rank": st.torus_rank,
                    "finite_factors": list(st.finite_factors),
                    "divisible": st.divisible,
                },
                indent=2,
            )
        )
    else:
        print(f"torus_rank = {st.torus_rank}")
        print(f"finite_factors = {list(st.finite_factors)}")
        print(f"divisible = {st.divisible}")
    return 0


def _cmd_selftest(args) -> int:
    failures = _selftest_mod.run(sys.stdout)
    return 3 if failures else 0


def _build_parser() -> _Parser:
    p = _Parser(prog="gitdescent", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add_weight_args(sp):
        sp.add_argument("--type", required=True, help="simple type, e.g. B3")
        sp.add_argument("--lambda", dest="lam", required=True, help="comma-separated coordinates")
        sp.add_argument("--mu", required=True)
        sp.add_argument("--nu", required=True)
        sp.add_argument(
            "--basis",
            choices=("weight", "root"),
            default="weight",
            help="coordinate basis of the inputs (default: fundamental weights)",
        )

    sp = sub.add_parser("check", help="decide descent for one triple")
    add_weight_args(sp)
    sp.add_argument("--n-max", type=int, default=8)
    sp.add_argument("--size-bound", type=int, default=10**6)
    sp.add_argument("--probe", action="store_true", help="attach the semistability probe")
    sp.add_argument("--output", choices=("text", "json"), default="text")
    sp.set_defaults(func=_cmd_check)

    sp = sub.add_parser("tables", help="emit the theta/d table or the Gamma catalog")
    sp.add_argument("--what", choices=("theta", "gamma"), required=True)
    sp.add_argument("--output", choices=("text", "json"), default="text")
    sp.set_defaults(func=_cmd_tables)

    sp = sub.add_parser("mult", help="triple invariant dimension and probe")
    add_weight_args(sp)
    sp.add_argument("--n-max", type=int, default=8)
    sp.add_argument("--output", choices=("text", "json"), default="text")
    sp.set_defaults(func=_cmd_mult)

    sp = sub.add_parser("explore", help="generic pair lattices over W x W")
    add_weight_args(sp)
    sp.add_argument("--size-bound", type=int, default=10**6)
    sp.add_argument("--output", choices=("text", "json"), default="text")
    sp.set_defaults(func=_cmd_explore)

    sp = sub.add_parser("stab", help="torus stabilizer structure for a root subset")
    sp.add_argument("--type", required=True)
    sp.add_argument(
        "--roots",
        required=True,
        help="comma-separated: aK for simple roots, or colon-separated root coordinates like 1:1",
    )
    sp.add_argument("--output", choices=("text", "json"), default="text")
    sp.set_defaults(func=_cmd_stab)

    sp = sub.add_parser("selftest", help="run the embedded example suite")
    sp.set_defaults(func=_cmd_selftest)

    return p


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except RESOURCE_ERRORS as exc:
        print(f"resource bound exceeded: {exc}", file=sys.stderr)
        return 2
    except (GitDescentError, InvalidType) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
