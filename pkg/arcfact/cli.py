"""
Command-line surface for arcfact.

    arcfact [global flags] <subcommand> ...

Subcommands: ppd, ppart, group, fact, homfact, digraph, repro.
"""

import argparse
import contextlib
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from arcfact import __version__
from arcfact.core.config import REPORTS_DIR, configure
from arcfact.core.errors import ArcfactError, InternalInvariantError
from arcfact.core.parsing import parse_permutation
from arcfact.digraph import (
    StabilizerChainAlongArc,
    build,
    s_arc_criterion,
    s_arc_orbit_size,
    s_arcs_direct,
    vertex_primitivity,
)
from arcfact.factor import MODES, homogeneous_search, is_factorization
from arcfact.groups import build_group, build_subgroup
from arcfact.numtheory import factorial_p_part, p_part, ppd
from arcfact.perm import is_primitive
from arcfact.repro import CASES, run_repro

USAGE_EXIT = 3
DIGRAPH_METHODS = ("direct", "criterion", "orbit", "both")


class ArcfactArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that exits with the usage code instead of argparse's 2 (2 means resource limit here)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"[ERROR] {message}", file=sys.stderr)
        sys.exit(USAGE_EXIT)


def _parse_check(text: str) -> int:
    """--check s=K -> K"""
    key, sep, value = text.partition("=")
    if sep != "=" or key.strip() != "s" or not value.strip().isdigit():
        raise argparse.ArgumentTypeError(f"expected s=<int>, got {text!r}")
    return int(value)


def build_parser() -> argparse.ArgumentParser:
    parser = ArcfactArgumentParser(
        prog="arcfact",
        description="Group factorizations and s-arc-transitivity of coset digraphs",
    )
    parser.add_argument("--version", action="version", version=f"arcfact {__version__}")
    parser.add_argument("--json", action="store_true", help="Print JSON on stdout (progress goes to stderr)")
    parser.add_argument("--profile", choices=["desk", "extended"], help="Bounds profile")
    parser.add_argument("--bound-elements", type=int, help="Element enumeration bound")
    parser.add_argument("--bound-subgroups", type=int, help="Subgroup enumeration bound (group order)")
    parser.add_argument("--bound-points", type=int, help="Coset action degree bound")
    parser.add_argument("--seed", type=int, help="Seed for randomized chain construction")

    sub = parser.add_subparsers(dest="command", required=True, parser_class=ArcfactArgumentParser)

    p = sub.add_parser("ppd", help="Primitive prime divisors of a^m - 1")
    p.add_argument("a", type=int)
    p.add_argument("m", type=int)

    p = sub.add_parser("ppart", help="p-part of n (or of n! with --factorial)")
    p.add_argument("n", type=int)
    p.add_argument("p", type=int)
    p.add_argument("--factorial", action="store_true", help="Use n! and check the p^(n/(p-1)) bound")

    p = sub.add_parser("group", help="Order, orbits, transitivity and primitivity of a group")
    p.add_argument("spec", help='Group spec, e.g. "PSL2:9", "wr(S:3,2)", "gens(6:(1,2);(1,2,3,4,5,6))"')

    p = sub.add_parser("fact", help="Decide G = HK")
    p.add_argument("--group", required=True)
    p.add_argument("--h", required=True, help="Subgroup spec on the points of G")
    p.add_argument("--k", required=True, help="Subgroup spec on the points of G")
    p.add_argument("--cross-check", action="store_true", help="Evaluate every criterion and insist they agree")

    p = sub.add_parser("homfact", help="Search for homogeneous factorizations")
    p.add_argument("--gv", required=True, help="Group to factor (a subgroup spec of --ambient if given)")
    p.add_argument("--ambient", help="Overgroup for conjugacy mode")
    p.add_argument("--mode", choices=list(MODES) + ["both"], default="iso")
    p.add_argument("--min-index", type=int, default=2)

    p = sub.add_parser("digraph", help="Build Cos(G, H, g) and test s-arc-transitivity")
    p.add_argument("--group", required=True)
    p.add_argument("--h", required=True, help="Vertex stabilizer spec on the points of G")
    p.add_argument("--g", required=True, help="Connecting element as a cycle string")
    p.add_argument("--check", type=_parse_check, action="append", default=[], metavar="s=K")
    p.add_argument("--method", choices=DIGRAPH_METHODS, default="both")

    p = sub.add_parser("repro", help="Run the built-in reproduction cases")
    p.add_argument("filter", nargs="?", help="Comma-separated glob over case ids")
    p.add_argument("--list", action="store_true", help="List case ids and exit")
    p.add_argument("--out", type=Path, help=f"Write the JSON report (e.g. {REPORTS_DIR / 'repro.json'})")

    return parser


def _gens(X) -> List[str]:
    return [g.to_cycle_string() for g in X.generators]


def cmd_ppd(args) -> Dict[str, Any]:
    result = ppd(args.a, args.m).as_dict()
    print(f"ppd({args.a},{args.m}) = {{{', '.join(map(str, result['primes']))}}}"
          + (" (exceptional)" if result["exceptional"] else ""))
    return result


def cmd_ppart(args) -> Dict[str, Any]:
    if args.factorial:
        part = factorial_p_part(args.n, args.p)
        result = {"n": args.n, "p": args.p, "factorial": True, "value": part.value,
                  "exponent": part.exponent, "bound_holds": part.bound_holds}
        print(f"({args.n}!)_{args.p} = {args.p}^{part.exponent}; bound {'holds' if part.bound_holds else 'FAILS'}")
    else:
        value = p_part(args.n, args.p)
        result = {"n": args.n, "p": args.p, "factorial": False, "value": value}
        print(f"({args.n})_{args.p} = {value}")
    return result


def cmd_group(args) -> Dict[str, Any]:
    G = build_group(args.spec)
    # primitivity is only defined for transitive groups
    prim = is_primitive(G) if G.is_transitive() else None
    result = {
        "spec": args.spec,
        "degree": G.degree,
        "order": G.order,
        "generators": _gens(G),
        "orbits": [len(o) for o in G.orbits()],
        "transitivity_degree": G.transitivity_degree(),
        "primitivity": prim.as_dict() if prim is not None else None,
    }
    print(f"{args.spec}: order {G.order} on {G.degree} points")
    print(f"  orbits: {result['orbits']}")
    print(f"  transitivity degree: {result['transitivity_degree']}")
    print(f"  primitive: {prim.primitive if prim is not None else 'n/a (intransitive)'}")
    return result


def cmd_fact(args) -> Dict[str, Any]:
    G = build_group(args.group)
    H, K = build_subgroup(G, args.h), build_subgroup(G, args.k)
    cert = is_factorization(G, H, K, cross_check=args.cross_check)
    print(f"G = HK: {cert.verdict}  (|G|={cert.order_g}, |H|={cert.order_h}, |K|={cert.order_k}, "
          f"|H∩K|={cert.order_intersection})")
    print(f"  criteria: {', '.join(cert.criteria_checked)}")
    return cert.as_dict()


def cmd_homfact(args) -> Dict[str, Any]:
    if args.ambient:
        ambient = build_group(args.ambient)
        Gv = build_subgroup(ambient, args.gv)
    else:
        Gv = build_group(args.gv)
        ambient = Gv
    modes = list(MODES) if args.mode == "both" else [args.mode]
    reports = []
    for mode in modes:
        report = homogeneous_search(Gv, ambient=ambient, mode=mode, min_index=args.min_index, group_id=args.gv)
        print(f"[{mode}] {len(report.pairs)} pair(s) with index >= {args.min_index} in a group of order {Gv.order}")
        for pair in report.pairs:
            print(f"  |A|=|B|={pair.a.order}  |A∩B|={pair.intersection_order}  index {pair.index}")
        reports.append(report.as_dict())
    return {"reports": reports}


def cmd_digraph(args) -> Dict[str, Any]:
    G = build_group(args.group)
    H = build_subgroup(G, args.h)
    g = parse_permutation(args.g, G.degree)
    digraph = build(G, H, g)
    result: Dict[str, Any] = {
        **digraph.as_dict(),
        "primitive": vertex_primitivity(digraph).primitive,
        "s_results": [],
    }
    print(f"Cos(G,H,g): {digraph.order} vertices, valency {digraph.valency}, connected {digraph.connected}")

    if args.check:
        chain = StabilizerChainAlongArc(digraph, max(args.check))
        for s in args.check:
            certificates: Dict[str, Any] = {}
            if args.method in ("direct", "both"):
                certificates["direct"] = s_arcs_direct(digraph, s, chain=chain).as_dict()
            if args.method in ("criterion", "both"):
                certificates["criterion"] = s_arc_criterion(digraph, s, chain=chain).as_dict()
            if args.method == "orbit":
                size = s_arc_orbit_size(digraph, s)
                n_arcs = digraph.order * digraph.valency**s
                certificates["orbit"] = {"orbit_size": size, "n_arcs": n_arcs, "transitive": size == n_arcs}
            verdicts = {c["transitive"] for c in certificates.values()}
            if len(verdicts) > 1:
                raise InternalInvariantError(f"verifiers disagree on {s}-arc-transitivity")
            transitive = verdicts.pop()
            print(f"  {s}-arc-transitive: {transitive}")
            result["s_results"].append(
                {"s": s, "transitive": transitive, "method": args.method, "certificates": certificates}
            )
    return result


def cmd_repro(args) -> Dict[str, Any]:
    if args.list:
        for case in sorted(CASES, key=lambda c: c.id):
            print(f"{case.id:34s} {case.stage:14s} {case.provenance:8s} {case.description}")
        return {"cases": [c.describe() for c in sorted(CASES, key=lambda c: c.id)]}
    code, report = run_repro(args.filter, out=args.out)
    print("Summary:")
    for status, count in report["summary"].items():
        print(f"  {status}: {count}")
    for case in report["cases"]:
        if case["status"] != "pass":
            print(f"  [{case['status']}] {case['id']}: {case['message'] or case['observed']}")
    print(f"  fingerprint: {report['fingerprint']}")
    report["exit_code"] = code
    return report


def _is_order_key(key: Any) -> bool:
    return isinstance(key, str) and (key == "order" or key.startswith("order_") or key.endswith(("_order", "_orders")))


def orders_as_strings(data: Any, key: Optional[str] = None) -> Any:
    """Group orders in a JSON payload rendered as decimal strings."""
    if isinstance(data, dict):
        return {k: orders_as_strings(v, k) for k, v in data.items()}
    if isinstance(data, list):
        return [orders_as_strings(v, key) for v in data]
    if _is_order_key(key) and isinstance(data, int) and not isinstance(data, bool):
        return str(data)
    return data


COMMANDS = {
    "ppd": cmd_ppd,
    "ppart": cmd_ppart,
    "group": cmd_group,
    "fact": cmd_fact,
    "homfact": cmd_homfact,
    "digraph": cmd_digraph,
    "repro": cmd_repro,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        configure(
            profile=args.profile,
            elements=args.bound_elements,
            subgroups=args.bound_subgroups,
            points=args.bound_points,
            seed=args.seed,
        )
        # --json keeps stdout for the payload
        target = sys.stderr if args.json else sys.stdout
        with contextlib.redirect_stdout(target):
            payload = COMMANDS[args.command](args)
    except ArcfactError as e:
        if args.json:
            print(json.dumps({"error": {"kind": e.kind, "message": str(e), "exit_code": e.exit_code}}))
        else:
            print(f"[ERROR] {e}", file=sys.stderr)
        return e.exit_code

    if args.json:
        print(json.dumps(orders_as_strings(payload), indent=2, sort_keys=True, default=str))
    return payload.get("exit_code", 0) if isinstance(payload, dict) else 0


if __name__ == "__main__":
    sys.exit(main())
