"""Network topology: routers, weighted undirected links, text I/O."""

from __future__ import annotations

import heapq
import random
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

MAX_ROUTER_ID = 2**32 - 1


class TopologyError(ValueError):
    """Raised when a topology violates a structural rule."""


class TopologyParseError(TopologyError):
    def __init__(self, lineno: int, line: str, reason: str):
        self.lineno = lineno
        self.line = line
        super().__init__(f"line {lineno}: {reason}: {line.strip()!r}")


@dataclass(frozen=True, order=True)
class Link:
    a: int
    b: int
    cost: int

    @classmethod
    def make(cls, a: int, b: int, cost: int) -> "Link":
        """Build a link with endpoints in canonical (low, high) order."""
        if a == b:
            raise TopologyError(f"self-loop on router {a}")
        if cost < 1:
            raise TopologyError(f"link {a}-{b} has non-positive cost {cost}")
        return cls(min(a, b), max(a, b), cost)

    @property
    def key(self) -> tuple[int, int]:
        return (self.a, self.b)


@dataclass(frozen=True)
class Topology:
    """Immutable, validated network graph.

    ``routers`` is sorted ascending and ``links`` sorted by endpoint pair, so
    two topologies describing the same network compare equal.
    """

    routers: tuple[int, ...]
    links: tuple[Link, ...]
    names: Mapping[int, str] = field(default_factory=dict, hash=False)
    _adj: dict = field(init=False, repr=False, compare=False)

    def __init__(
        self,
        routers: Iterable[int],
        links: Iterable[Link | tuple[int, int, int]],
        names: Mapping[int, str] | None = None,
    ):
        routers = list(routers)
        seen: set[int] = set()
        for r in routers:
            if not 0 <= r <= MAX_ROUTER_ID:
                raise TopologyError(f"router id {r} outside 32-bit unsigned range")
            if r in seen:
                raise TopologyError(f"duplicate router {r}")
            seen.add(r)
        if not routers:
            raise TopologyError("topology has no routers")

        canon: dict[tuple[int, int], Link] = {}
        for lk in links:
            if not isinstance(lk, Link):
                lk = Link.make(*lk)
            else:
                lk = Link.make(lk.a, lk.b, lk.cost)
            for end in lk.key:
                if end not in seen:
                    raise TopologyError(f"link {lk.a}-{lk.b} references unknown router {end}")
            if lk.key in canon:
                raise TopologyError(f"duplicate link {lk.a}-{lk.b}")
            canon[lk.key] = lk

        names = dict(names or {})
        for r in names:
            if r not in seen:
                raise TopologyError(f"label {names[r]!r} given for unknown router {r}")
        if len(set(names.values())) != len(names):
            raise TopologyError("router labels must be unique")

        adj: dict[int, dict[int, int]] = {r: {} for r in routers}
        for lk in canon.values():
            adj[lk.a][lk.b] = lk.cost
            adj[lk.b][lk.a] = lk.cost

        object.__setattr__(self, "routers", tuple(sorted(routers)))
        object.__setattr__(self, "links", tuple(sorted(canon.values())))
        object.__setattr__(self, "names", {r: names[r] for r in sorted(names)})
        object.__setattr__(self, "_adj", adj)

        unreachable = set(self.routers) - _reachable(adj, self.routers[0])
        if unreachable:
            raise TopologyError(
                f"topology is disconnected: router {min(unreachable)} unreachable from {self.routers[0]}"
            )

    def __len__(self) -> int:
        return len(self.routers)

    def __contains__(self, router: object) -> bool:
        return router in self._adj

    def neighbors(self, router: int) -> list[tuple[int, int]]:
        """(neighbor, cost) pairs in ascending neighbor order."""
        return sorted(self._adj[router].items())

    def link_cost(self, a: int, b: int) -> int:
        try:
            return self._adj[a][b]
        except KeyError:
            raise KeyError(f"no link between {a} and {b}") from None

    def label(self, router: int) -> str:
        return self.names.get(router, str(router))

    def resolve(self, token: str | int) -> int:
        """Map a label or numeric id to a RouterId."""
        if isinstance(token, int):
            if token in self:
                return token
            raise KeyError(f"unknown router {token}")
        for r, name in self.names.items():
            if name == token:
                return r
        try:
            r = int(token)
        except ValueError:
            raise KeyError(f"unknown router {token!r}") from None
        if r not in self:
            raise KeyError(f"unknown router {token!r}")
        return r


def _reachable(adj: Mapping[int, Mapping[int, int]], start: int) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def load_topology(text: str) -> Topology:
    """Parse the line-oriented topology format.

    ``router <id> [<label>]`` and ``link <idA> <idB> <cost>``; ``#`` starts a
    comment. Link endpoints may be given by id or by label.
    """
    routers: list[int] = []
    known: set[int] = set()
    names: dict[int, str] = {}
    pending: list[tuple[int, str, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        parts = line.split()
        if not parts:
            continue
        kind, args = parts[0], parts[1:]
        if kind == "router":
            if len(args) not in (1, 2):
                raise TopologyParseError(lineno, raw, "expected 'router <id> [<label>]'")
            rid = _parse_int(lineno, raw, args[0], "router id")
            if rid in known:
                raise TopologyParseError(lineno, raw, f"duplicate router {rid}")
            routers.append(rid)
            known.add(rid)
            if len(args) == 2:
                if args[1] in names.values():
                    raise TopologyParseError(lineno, raw, f"duplicate label {args[1]!r}")
                names[rid] = args[1]
        elif kind == "link":
            if len(args) != 3:
                raise TopologyParseError(lineno, raw, "expected 'link <idA> <idB> <cost>'")
            pending.append((lineno, raw, args))
        else:
            raise TopologyParseError(lineno, raw, f"unknown directive {kind!r}")

    by_label = {v: k for k, v in names.items()}

    def endpoint(lineno: int, raw: str, tok: str) -> int:
        if tok in by_label:
            return by_label[tok]
        rid = _parse_int(lineno, raw, tok, "router id")
        if rid not in known:
            raise TopologyParseError(lineno, raw, f"unknown router {tok}")
        return rid

    links = []
    seen_pairs: set[tuple[int, int]] = set()
    for lineno, raw, (ta, tb, tc) in pending:
        a, b = endpoint(lineno, raw, ta), endpoint(lineno, raw, tb)
        cost = _parse_int(lineno, raw, tc, "cost")
        try:
            lk = Link.make(a, b, cost)
        except TopologyError as exc:
            raise TopologyParseError(lineno, raw, str(exc)) from None
        if lk.key in seen_pairs:
            raise TopologyParseError(lineno, raw, f"duplicate link {lk.a}-{lk.b}")
        seen_pairs.add(lk.key)
        links.append(lk)

    return Topology(routers, links, names)


def _parse_int(lineno: int, raw: str, tok: str, what: str) -> int:
    try:
        return int(tok, 10)
    except ValueError:
        raise TopologyParseError(lineno, raw, f"bad {what} {tok!r}") from None


def read_topology(path: str | Path) -> Topology:
    return load_topology(Path(path).read_text())


def export(t: Topology) -> str:
    out = []
    for r in t.routers:
        out.append(f"router {r} {t.names[r]}" if r in t.names else f"router {r}")
    for lk in t.links:
        out.append(f"link {lk.a} {lk.b} {lk.cost}")
    return "\n".join(out) + "\n"


# Edge set of the eight-router worked example; every pairwise shortest path
# reproduces the published routing tables.
_REFERENCE_LINKS = [
    ("A", "B", 30), ("A", "C", 40), ("B", "D", 30), ("B", "E", 50), ("C", "E", 20),
    ("C", "F", 50), ("D", "G", 20), ("E", "G", 20), ("E", "H", 20), ("F", "H", 20),
]


def reference_topology() -> Topology:
    """The eight-router example network, labelled A..H with ids 1..8 (H highest)."""
    ids = {label: i for i, label in enumerate("ABCDEFGH", 1)}
    links = [(ids[a], ids[b], c) for a, b, c in _REFERENCE_LINKS]
    return Topology(ids.values(), links, {v: k for k, v in ids.items()})


def shortest_costs_from(t: Topology, source: int) -> dict[int, int]:
    """Dijkstra from one router."""
    dist = {source: 0}
    heap = [(0, source)]
    done: set[int] = set()
    while heap:
        d, u = heapq.heappop(heap)
        if u in done:
            continue
        done.add(u)
        for v, c in t.neighbors(u):
            nd = d + c
            if nd < dist.get(v, nd + 1):
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    return dist


def diameter(t: Topology) -> int:
    return max(max(shortest_costs_from(t, r).values()) for r in t.routers)


def random_topology(
    n: int,
    rng: random.Random,
    *,
    max_cost: int = 100,
    extra_links: int | None = None,
) -> Topology:
    """Random connected topology: a random spanning tree plus extra links.

    Router ids are drawn sparsely from the 32-bit range so that id order is
    unrelated to construction order.
    """
    ids = rng.sample(range(1, MAX_ROUTER_ID), n)
    order = ids[:]
    rng.shuffle(order)
    links: dict[tuple[int, int], int] = {}
    for i in range(1, n):
        a, b = order[i], order[rng.randrange(i)]
        links[(min(a, b), max(a, b))] = rng.randint(1, max_cost)
    if extra_links is None:
        extra_links = rng.randint(0, n)
    max_links = n * (n - 1) // 2
    target = min(max_links, len(links) + extra_links)
    while len(links) < target:
        a, b = rng.sample(ids, 2)
        key = (min(a, b), max(a, b))
        if key not in links:
            links[key] = rng.randint(1, max_cost)
    return Topology(ids, [(a, b, c) for (a, b), c in links.items()])
