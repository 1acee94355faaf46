"""Core-rooted shared multicast trees built from unicast next hops."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .dvr import RoutingState
from .topology import Topology


@dataclass(frozen=True)
class MulticastGroup:
    id: str
    members: frozenset[int]

    def __init__(self, id: str, members: Iterable[int]):
        object.__setattr__(self, "id", id)
        object.__setattr__(self, "members", frozenset(members))


@dataclass(frozen=True)
class SharedTree:
    core: int
    parent: Mapping[int, int]
    on_tree: frozenset[int]
    members: frozenset[int]

    def edges(self) -> list[tuple[int, int]]:
        """(child, parent) pairs, sorted by child."""
        return sorted(self.parent.items())

    def path_to_core(self, router: int) -> list[int]:
        path = [router]
        while path[-1] != self.core:
            path.append(self.parent[path[-1]])
            if len(path) > len(self.on_tree):
                raise RuntimeError(f"cycle in shared tree at {path}")
        return path


def build_shared_tree(state: RoutingState, core: int, group: MulticastGroup) -> SharedTree:
    """Join each member toward ``core`` hop by hop until it meets the tree."""
    if not group.members:
        raise ValueError(f"group {group.id!r} has no members")
    for r in (core, *group.members):
        if r not in state.topology:
            raise KeyError(f"unknown router {r}")

    parent: dict[int, int] = {}
    on_tree = {core}
    for member in sorted(group.members):
        here = member
        while here not in on_tree:
            hop = state[here].next_hop(core)
            parent[here] = hop
            on_tree.add(here)
            here = hop
    return SharedTree(core, dict(sorted(parent.items())), frozenset(on_tree), group.members)


def tree_path_cost(topology: Topology, tree: SharedTree, router: int) -> int:
    path = tree.path_to_core(router)
    return sum(topology.link_cost(a, b) for a, b in zip(path, path[1:]))


def deliver(state: RoutingState, tree: SharedTree, sender: int) -> dict[int, int]:
    """Per-member delay: unicast sender -> core, then down the tree."""
    to_core = state[sender].cost(tree.core)
    return {
        g: to_core + tree_path_cost(state.topology, tree, g) for g in sorted(tree.members)
    }


def to_dot(topology: Topology, tree: SharedTree | None = None) -> str:
    """Graphviz DOT text for the topology with tree edges drawn bold."""
    on_edges = set()
    if tree is not None:
        on_edges = {(min(a, b), max(a, b)) for a, b in tree.parent.items()}

    def quoted(text: str) -> str:
        return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'

    def node(r: int) -> str:
        return quoted(topology.label(r))

    lines = ["graph topology {"]
    for r in topology.routers:
        attrs = [f"label={node(r)}"]
        if tree is not None and r == tree.core:
            attrs.append("shape=doublecircle")
        elif tree is not None and r in tree.members:
            attrs += ["style=filled", "fillcolor=lightblue"]
        elif tree is not None and r in tree.on_tree:
            attrs += ["style=filled", "fillcolor=lightgrey"]
        lines.append(f"  {node(r)} [{', '.join(attrs)}];")
    for lk in topology.links:
        attrs = [f'label="{lk.cost}"']
        if lk.key in on_edges:
            attrs += ["penwidth=3", "color=red"]
        lines.append(f"  {node(lk.a)} -- {node(lk.b)} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
