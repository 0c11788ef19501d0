"""Command line front end.

Exit codes: 0 success, 1 usage error, 2 invalid (n, m), 3 point not realizable,
4 verification failure, 5 internal mismatch.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from . import __version__
from .builder import ConstructionFailed, NotRealizable, build_witness
from .core import ChemPolytopeError, InvalidOrderSize, OrderSize, Point3
from .engine import EngineMismatch, NonIntegerVertex, UnrealizableVertex, build_polytope, classify
from .facets import EXTRA_FAMILIES, FACET_FAMILIES, OutOfRegime, active_facets
from .optimize import REGISTRY, custom_index, get_index, optimize
from .realizability import check_point
from .vertices import VERTEX_FAMILIES, candidate_vertices, group_by_point

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_NOT_REALIZABLE, EXIT_VERIFY, EXIT_INTERNAL = range(6)

log = logging.getLogger("chempolytope")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("CHEMPOLYTOPE_THREADS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="chempolytope",
                description="Polytopes of edge-type vectors of chemical graphs (max degree 3).")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="count", default=0)
    p.add_argument("--threads", type=int, default=_default_jobs(),
                   help="worker processes for sweeps (default: $CHEMPOLYTOPE_THREADS or 1)")
    p.add_argument("--out", help="write the report to FILE instead of stdout")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def nm(sp):
        sp.add_argument("--n", type=int, required=True, help="order (number of vertices)")
        sp.add_argument("--m", type=int, required=True, help="size (number of edges)")

    sp = sub.add_parser("polytope", help="facets and extreme points for one (n, m)")
    nm(sp)
    sp.add_argument("--format", choices=("json", "text"), default="json")

    sp = sub.add_parser("optimize", help="extremal values of a degree-based index")
    sp.add_argument("--n", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--sweep", help="range of orders N1..N2; one row per valid (n, m)")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--index", help="registered index name (see 'indices list')")
    g.add_argument("--coeffs", help="c12,c13,c22,c23,c33")
    sp.add_argument("--direction", choices=("min", "max"), default="min")
    sp.add_argument("--witnesses", action="store_true", help="attach a graph per optimal point")
    sp.add_argument("--format", choices=("json", "text"), default="json")

    sp = sub.add_parser("realize", help="witness graph for a realizable point")
    nm(sp)
    sp.add_argument("--point", required=True, help="m12,m13,m33")
    sp.add_argument("--check-only", action="store_true", help="only report the realizability verdict")
    sp.add_argument("--format", choices=("graph6", "dot", "edgelist", "json"), default="graph6")

    sp = sub.add_parser("verify", help="compare the analytic description with exhaustive enumeration")
    sp.add_argument("--max-n", type=int, default=8)
    sp.add_argument("--min-n", type=int, default=3)
    sp.add_argument("--oracle-cap", type=int, default=10, help="largest n enumerated (hard cap 12)")
    sp.add_argument("--report", choices=("json", "text"), default="text")

    sp = sub.add_parser("catalog", help="dump facet or vertex families")
    sp.add_argument("what", choices=("facets", "vertices"))
    sp.add_argument("--n", type=int)
    sp.add_argument("--m", type=int)

    sp = sub.add_parser("indices", help="registered topological indices")
    sp.add_argument("action", choices=("list",))
    return p


# -- formatting ----------------------------------------------------------------------------

def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _term(coef: int, name: str, first: bool) -> str:
    if coef == 0:
        return ""
    sign = "-" if coef < 0 else ("" if first else "+")
    mag = abs(coef)
    body = name if mag == 1 else f"{mag}{name}"
    return f"{sign}{body}" if first else f" {sign} {body}"


def _lhs(a12, a13, a33) -> str:
    out = ""
    for coef, name in ((a12, "m12"), (a13, "m13"), (a33, "m33")):
        out += _term(coef, name, not out)
    return out or "0"


def polytope_text(desc) -> str:
    ns = desc.order_size
    head = f"n={ns.n} m={ns.m} dimension={desc.dimension} regime={desc.regime}"
    if desc.label:
        head += f" type={desc.label}"
    lines = [head]
    if desc.equalities:
        lines.append("equalities:")
        lines += [f"  {_lhs(e.a12, e.a13, e.a33)} = {e.rhs}" for e in desc.equalities]
    lines.append(f"facets ({len(desc.facets)}):")
    lines += [f"  {f.id:<6} {_lhs(f.a12, f.a13, f.a33)} >= {f.rhs}" for f in desc.facets]
    lines.append(f"extreme points ({len(desc.vertices)}):")
    for v in desc.vertices:
        fam = "=".join(v.families) or "-"
        lines.append(f"  {v.point.render():<14} {fam:<24} on {','.join(v.supports)}")
    return "\n".join(lines) + "\n"


def optimize_text(res) -> str:
    d = res.as_dict()
    lines = [f"n={d['n']} m={d['m']} index={d['index']} direction={d['direction']}",
             f"optimal value: {d['optimal_value']} (reduced {d['reduced_value']})",
             "optimal extreme points:"]
    lines += [f"  ({','.join(map(str, v['point']))}) {'='.join(v['families']) or '-'}"
              for v in d["optimal_vertices"]]
    lines.append("optimal lattice points: " + " ".join(
        f"({','.join(map(str, p))})" for p in d["optimal_lattice_points"]))
    if not d["lattice_complete"]:
        lines.append("  (face too large to scan; only extreme points listed)")
    for k, g6 in d.get("witnesses", {}).items():
        lines.append(f"  witness ({k}): {g6}")
    return "\n".join(lines) + "\n"


# -- commands ------------------------------------------------------------------------------

def _order_size(args) -> OrderSize:
    if args.n is None or args.m is None:
        raise UsageError("--n and --m are required")
    return OrderSize(args.n, args.m)


def _parse_point(text: str) -> Point3:
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"--point expects three integers a,b,c, got {text!r}") from None
    if len(parts) != 3:
        raise UsageError(f"--point expects three integers a,b,c, got {text!r}")
    return Point3.of(*parts)


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        return int(lo), int(hi)
    except ValueError:
        raise UsageError(f"--sweep expects N1..N2, got {text!r}") from None


def cmd_polytope(args) -> tuple[int, str]:
    desc = build_polytope(_order_size(args))
    return EXIT_OK, _dump(desc.as_dict()) if args.format == "json" else polytope_text(desc)


def _index(args):
    if args.index:
        return get_index(args.index)
    parts = args.coeffs.split(",")
    if len(parts) != 5:
        raise UsageError("--coeffs expects five values c12,c13,c22,c23,c33")
    try:
        return custom_index(parts)
    except ValueError as exc:
        raise UsageError(f"--coeffs: {exc}") from None


def cmd_optimize(args) -> tuple[int, str]:
    try:
        idx = _index(args)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    if args.sweep:
        lo, hi = _parse_range(args.sweep)
        rows = [optimize(ns, idx, args.direction, args.witnesses)
                for ns in OrderSize.all_valid(hi, min_n=max(3, lo))]
        if args.format == "json":
            return EXIT_OK, _dump([r.as_dict() for r in rows])
        return EXIT_OK, "".join(optimize_text(r) for r in rows)
    res = optimize(_order_size(args), idx, args.direction, args.witnesses)
    return EXIT_OK, _dump(res.as_dict()) if args.format == "json" else optimize_text(res)


def cmd_realize(args) -> tuple[int, str]:
    ns = _order_size(args)
    p = _parse_point(args.point)
    if args.check_only:
        verdict = check_point(ns, p)
        out = {"n": ns.n, "m": ns.m, "point": list(p), **verdict.as_dict()}
        return (EXIT_OK if verdict.realizable else EXIT_NOT_REALIZABLE), _dump(out)
    g = build_witness(ns, p)
    if args.format == "graph6":
        return EXIT_OK, g.to_graph6() + "\n"
    if args.format == "dot":
        return EXIT_OK, g.to_dot()
    if args.format == "edgelist":
        return EXIT_OK, g.to_edgelist()
    return EXIT_OK, _dump({"point": list(p), **g.as_dict()})


def verify_pair(n: int, m: int, cap: int) -> dict:
    from .oracle import enumerate_realizable
    from .realizability import realizable_points_in_box

    ns = OrderSize(n, m)
    row = {"n": n, "m": m, "regime": classify(ns)}
    try:
        desc = build_polytope(ns)
    except ChemPolytopeError as exc:
        row.update(ok=False, error=f"{exc.code}: {exc}")
        return row
    rs = enumerate_realizable(ns, limit=cap)
    hull = rs.hull()
    checks = {
        "vertices": hull.vertex_set() == desc.point_set(),
        "dimension": hull.dimension == desc.dimension,
        "facets_valid": all(desc.contains(p) for p in rs.points),
        "realizability": realizable_points_in_box(ns) == set(rs.points),
    }
    row.update(ok=all(checks.values()), checks=checks, graphs=rs.graph_count,
               points=len(rs.points))
    return row


def _verify_n(job) -> list[dict]:
    n, cap = job
    return [verify_pair(ns.n, ns.m, cap) for ns in OrderSize.all_valid(n, min_n=n)]


def cmd_verify(args) -> tuple[int, str]:
    cap = min(args.oracle_cap, 12)
    if args.max_n > cap:
        raise UsageError(f"--max-n {args.max_n} exceeds the oracle cap {cap}")
    jobs = [(n, cap) for n in range(max(3, args.min_n), args.max_n + 1)]
    if args.threads > 1:
        with ProcessPoolExecutor(max_workers=args.threads) as pool:
            chunks = list(pool.map(_verify_n, jobs))
    else:
        chunks = [_verify_n(j) for j in jobs]
    rows = [r for chunk in chunks for r in chunk]
    passed = all(r["ok"] for r in rows)
    if args.report == "json":
        text = _dump({"max_n": args.max_n, "passed": passed, "results": rows})
    else:
        lines = [f"{'PASS' if r['ok'] else 'FAIL'} n={r['n']} m={r['m']} {r['regime']}"
                 + (f" {r['error']}" if "error" in r else
                    "" if r["ok"] else " " + ",".join(k for k, v in r["checks"].items() if not v))
                 for r in rows]
        lines.append(f"{sum(r['ok'] for r in rows)}/{len(rows)} pairs passed")
        text = "\n".join(lines) + "\n"
    return (EXIT_OK if passed else EXIT_VERIFY), text


def cmd_catalog(args) -> tuple[int, str]:
    if (args.n is None) != (args.m is None):
        raise UsageError("give both --n and --m, or neither")
    if args.n is None:
        fams = FACET_FAMILIES + EXTRA_FAMILIES if args.what == "facets" else VERTEX_FAMILIES
        return EXIT_OK, _dump([f.as_dict() for f in fams])
    ns = OrderSize(args.n, args.m)
    if args.what == "facets":
        return EXIT_OK, _dump([f.as_dict() for f in active_facets(ns)])
    if not ns.in_general_regime():
        raise OutOfRegime(f"(n,m)=({ns.n},{ns.m}) is outside the general regime; "
                          "use 'polytope' for the small-case catalog")
    grouped = group_by_point(candidate_vertices(ns))
    return EXIT_OK, _dump([{"point": list(k), "families": v} for k, v in sorted(grouped.items())])


def cmd_indices(args) -> tuple[int, str]:
    rows = [{"name": idx.name, "description": idx.description,
             "coefficients": {k: (v if isinstance(v, (int, float)) else str(v))
                              for k, v in zip(("c12", "c13", "c22", "c23", "c33"), idx.coeffs())}}
            for idx in REGISTRY.values()]
    return EXIT_OK, _dump(rows)


COMMANDS = {
    "polytope": cmd_polytope,
    "optimize": cmd_optimize,
    "realize": cmd_realize,
    "verify": cmd_verify,
    "catalog": cmd_catalog,
    "indices": cmd_indices,
}


def run(argv: Optional[list[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        status, text = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"chempolytope: usage error: {exc}", file=stderr)
        return EXIT_USAGE
    except InvalidOrderSize as exc:
        print(f"chempolytope: error [{exc.code}]: {exc}", file=stderr)
        return EXIT_INVALID
    except NotRealizable as exc:
        print(f"chempolytope: error [{exc.code}]: {exc}", file=stderr)
        return EXIT_NOT_REALIZABLE
    except OutOfRegime as exc:
        print(f"chempolytope: error [{exc.code}]: {exc}", file=stderr)
        return EXIT_INVALID
    except (EngineMismatch, NonIntegerVertex, UnrealizableVertex, ConstructionFailed) as exc:
        print(f"chempolytope: error [{exc.code}]: {exc}", file=stderr)
        return EXIT_INTERNAL
    except ChemPolytopeError as exc:
        print(f"chempolytope: error [{exc.code}]: {exc}", file=stderr)
        return EXIT_INTERNAL
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
