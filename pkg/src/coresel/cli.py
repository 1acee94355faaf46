"""Command-line scenario runner.

Every subcommand produces a list of records. Records print as one TSV line
each (values only, in field order) or, with ``--json``, as a JSON array of
objects carrying the same values.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable, Sequence

from .cores import broadcast_pds, build_core_table, select_candidates
from .dvr import RoutingState, compute_dvr
from .locality import ed, select_core
from .pseudo import pd_broadcast
from .reference import reproduce
from .topology import Topology, TopologyError, read_topology, reference_topology
from .tree import MulticastGroup, build_shared_tree, deliver, to_dot, tree_path_cost

EXIT_USAGE = 1
EXIT_TOPOLOGY = 2
EXIT_MISMATCH = 3

Record = dict[str, Any]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _router(t: Topology, token: str) -> int:
    try:
        return t.resolve(token)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None


def _path(t: Topology, path) -> str:
    return "-".join(t.label(r) for r in path)


def cmd_dvr(t: Topology, state: RoutingState, args) -> list[Record]:
    return [
        {"owner": t.label(owner), "dest": t.label(e.dest), "next": t.label(e.next), "cost": e.cost}
        for owner in t.routers
        for e in state[owner]
    ]


def cmd_pd(t: Topology, state: RoutingState, args) -> list[Record]:
    pds = broadcast_pds(state, simulate=not args.fast)
    return [{"router": t.label(r), "pd": pds[r]} for r in t.routers]


def _core_table(state: RoutingState, args):
    table = build_core_table(broadcast_pds(state, simulate=not args.fast))
    try:
        sc = select_candidates(table, args.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return table, sc


def cmd_cores(t: Topology, state: RoutingState, args) -> list[Record]:
    table, sc = _core_table(state, args)
    out = [
        {"kind": "core", "rank": i, "router": t.label(r), "pd": pd}
        for i, (r, pd) in enumerate(table.rows, 1)
    ]
    out += [
        {"kind": "candidate", "rank": i, "router": t.label(r), "pd": table.pd(r)}
        for i, r in enumerate(sc, 1)
    ]
    return out


def cmd_select(t: Topology, state: RoutingState, args) -> list[Record]:
    table, sc = _core_table(state, args)
    sender = _router(t, args.sender)
    out = []
    for core in sc:
        est = ed(state, table, sender, core)
        out.append({
            "kind": "ed", "sender": t.label(sender), "core": t.label(core),
            "cost_to_core": est.cost_to_core, "core_pd": est.core_pd, "ed": est.ed,
        })
    chosen, est = select_core(state, table, sc, sender)
    out.append({
        "kind": "chosen", "sender": t.label(sender), "core": t.label(chosen),
        "cost_to_core": est.cost_to_core, "core_pd": est.core_pd, "ed": est.ed,
    })
    return out


def cmd_tree(t: Topology, state: RoutingState, args) -> list[Record] | str:
    core = _router(t, args.core)
    members = [_router(t, tok) for tok in args.group.split(",") if tok.strip()]
    if not members:
        raise UsageError("--group needs at least one router")
    tree = build_shared_tree(state, core, MulticastGroup(args.group, members))
    if args.dot:
        return to_dot(t, tree)
    out = [
        {"kind": "edge", "child": t.label(c), "parent": t.label(p), "cost": t.link_cost(c, p)}
        for c, p in tree.edges()
    ]
    out += [
        {"kind": "member", "member": t.label(g), "path": _path(t, tree.path_to_core(g)),
         "cost": tree_path_cost(t, tree, g)}
        for g in sorted(tree.members)
    ]
    if args.sender is not None:
        sender = _router(t, args.sender)
        out += [
            {"kind": "delay", "sender": t.label(sender), "member": t.label(g), "delay": d}
            for g, d in deliver(state, tree, sender).items()
        ]
    return out


def cmd_broadcast(t: Topology, state: RoutingState, args) -> list[Record]:
    source = _router(t, args.source)
    trace = pd_broadcast(state, source, args.payload.encode())
    return [
        {"router": t.label(d.router), "path": _path(t, d.path), "spent": d.spent,
         "remaining": d.remaining}
        for d in trace.deliveries
    ]


def cmd_check(t: Topology, state: RoutingState, args) -> list[Record]:
    return [
        {"check": r.name, "status": "PASS" if r.ok else "FAIL", "detail": r.detail}
        for r in reproduce(t)
    ]


COMMANDS: dict[str, Callable] = {
    "dvr": cmd_dvr,
    "pd": cmd_pd,
    "cores": cmd_cores,
    "select": cmd_select,
    "tree": cmd_tree,
    "broadcast": cmd_broadcast,
    "check": cmd_check,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("--fixture", action="store_true", help="use the built-in eight-router network")
    src.add_argument("--topology", metavar="PATH", help="topology file")
    common.add_argument("--json", action="store_true", help="emit JSON instead of TSV")

    parser = _Parser(prog="coresel", description="Pseudo-diameter core selection for shared-tree multicast.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("dvr", parents=[common], help="converged distance-vector tables")
    p = sub.add_parser("pd", parents=[common], help="pseudo-diameter of every router")
    p.add_argument("--fast", action="store_true", help="read values from tables, skip the broadcast")
    for name, help_ in (("cores", "sorted core table and candidate set"),
                        ("select", "ED table and chosen core for a sender")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--m", type=int, default=3, help="candidate set size (default 3)")
        p.add_argument("--fast", action="store_true", help="read values from tables, skip the broadcast")
        if name == "select":
            p.add_argument("--sender", required=True)
    p = sub.add_parser("tree", parents=[common], help="shared tree for a core and group")
    p.add_argument("--core", required=True)
    p.add_argument("--group", required=True, help="comma-separated routers")
    p.add_argument("--sender")
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    p = sub.add_parser("broadcast", parents=[common], help="pseudo-diameter budgeted broadcast")
    p.add_argument("--source", required=True)
    p.add_argument("--payload", default="", help="payload text")
    sub.add_parser("check", parents=[common], help="reproduce the eight-router worked example")
    return parser


def render(records: list[Record], as_json: bool) -> str:
    if as_json:
        return json.dumps(records, indent=2) + "\n"
    return "".join("\t".join(str(v) for v in rec.values()) + "\n" for rec in records)


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0

    try:
        topo = reference_topology() if args.fixture else read_topology(args.topology)
    except OSError as exc:
        print(f"coresel: cannot read topology: {exc}", file=stderr)
        return EXIT_TOPOLOGY
    except TopologyError as exc:
        print(f"coresel: invalid topology: {exc}", file=stderr)
        return EXIT_TOPOLOGY

    state = compute_dvr(topo)
    try:
        result = COMMANDS[args.command](topo, state, args)
    except UsageError as exc:
        print(f"coresel: {exc}", file=stderr)
        return EXIT_USAGE

    stdout.write(result if isinstance(result, str) else render(result, args.json))
    if args.command == "check" and any(r["status"] != "PASS" for r in result):
        return EXIT_MISMATCH
    return 0


def main() -> None:
    sys.exit(run())
