"""Undirected simple graphs underlying lattices and synthetic families."""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

Edge = tuple[int, int]


@dataclass(frozen=True)
class SimpleGraph:
    """Loop-free undirected graph on vertices 0..vertex_count-1."""

    vertex_count: int
    edges: frozenset[Edge]
    labels: Optional[tuple[str, ...]] = None
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self,
            "edges",
            frozenset(tuple(sorted(e)) for e in self.edges),
        )
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise ValueError(f"edge ({a},{b}) out of range")
        if self.labels is not None and len(self.labels) != self.vertex_count:
            raise ValueError("label count does not match vertex count")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for a, b in sorted(self.edges):
            adj[a].append(b)
            adj[b].append(a)
        for nbrs in adj:
            nbrs.sort()
        return adj

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def subgraph_with_edges(self, edges: Iterable[Edge]) -> "SimpleGraph":
        return SimpleGraph(self.vertex_count, frozenset(edges))


def graph_from_edges(vertex_count: int, edges: Iterable[Edge]) -> SimpleGraph:
    return SimpleGraph(vertex_count, frozenset(tuple(sorted(e)) for e in edges))


def path_graph(n: int) -> SimpleGraph:
    return graph_from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return graph_from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> SimpleGraph:
    return graph_from_edges(
        n, ((i, j) for i in range(n) for j in range(i + 1, n))
    )


def complete_bipartite(a: int, b: int) -> SimpleGraph:
    return graph_from_edges(
        a + b, ((i, a + j) for i in range(a) for j in range(b))
    )


def cartesian_product(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    """Cartesian product: copies of h indexed by g's vertices, wired along g."""
    if g.vertex_count == 0 or h.vertex_count == 0:
        raise ValueError("cartesian product needs nonempty factors")
    nh = h.vertex_count
    edges = set()
    for u in range(g.vertex_count):
        for a, b in h.edges:
            edges.add((u * nh + a, u * nh + b))
    for a, b in g.edges:
        for v in range(nh):
            edges.add((a * nh + v, b * nh + v))
    labels = None
    if g.labels is not None and h.labels is not None:
        labels = tuple(
            f"({la},{lb})" for la in g.labels for lb in h.labels
        )
    return SimpleGraph(g.vertex_count * nh, frozenset(edges), labels=labels)


@dataclass(frozen=True)
class GraphMetrics:
    connected: bool
    girth: float  # math.inf for forests
    bipartite: bool


def connected_components(g: SimpleGraph) -> list[list[int]]:
    adj = g.adjacency()
    seen = bytearray(g.vertex_count)
    comps = []
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        seen[start] = 1
        comp = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = 1
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def graph_metrics(g: SimpleGraph) -> GraphMetrics:
    adj = g.adjacency()
    n = g.vertex_count
    connected = len(connected_components(g)) <= 1

    # 2-colorability
    color = [-1] * n
    bipartite = True
    for start in range(n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue and bipartite:
            v = queue.popleft()
            for w in adj[v]:
                if color[w] == -1:
                    color[w] = color[v] ^ 1
                    queue.append(w)
                elif color[w] == color[v]:
                    bipartite = False
                    break
        if not bipartite:
            break

    # girth via BFS from every vertex; the minimum over roots is exact
    girth = math.inf
    for root in range(n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if dist[v] * 2 >= girth:
                continue
            for w in adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    girth = min(girth, dist[v] + dist[w] + 1)
    return GraphMetrics(connected=connected, girth=girth, bipartite=bipartite)


# ---------------------------------------------------------------------------
# DOT interchange (the structural subset: node and edge statements)
# ---------------------------------------------------------------------------


def to_dot(g: SimpleGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.vertex_count):
        if g.labels is not None:
            lines.append(f'  {v} [label="{g.labels[v]}"];')
        else:
            lines.append(f"  {v};")
    for a, b in g.sorted_edges():
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


_DOT_EDGE = re.compile(r"^(\w+)\s*--\s*(\w+)$")
_DOT_NODE = re.compile(r"^(\w+)$")


def from_dot(text: str) -> SimpleGraph:
    body = text[text.index("{") + 1 : text.rindex("}")]
    names: dict[str, int] = {}
    labels: dict[int, str] = {}
    edges = set()

    def vertex(token: str) -> int:
        if token not in names:
            names[token] = len(names)
        return names[token]

    for raw in body.replace("\n", ";").split(";"):
        stmt = raw.strip()
        label = None
        if "[" in stmt:
            attrs = stmt[stmt.index("[") + 1 : stmt.rindex("]")]
            m = re.search(r'label="([^"]*)"', attrs)
            if m:
                label = m.group(1)
            stmt = stmt[: stmt.index("[")].strip()
        if not stmt:
            continue
        m = _DOT_EDGE.match(stmt)
        if m:
            a, b = vertex(m.group(1)), vertex(m.group(2))
            if a != b:
                edges.add(tuple(sorted((a, b))))
            continue
        m = _DOT_NODE.match(stmt)
        if m and m.group(1) not in ("graph", "strict"):
            v = vertex(m.group(1))
            if label is not None:
                labels[v] = label

    n = len(names)
    label_tuple = None
    if labels:
        label_tuple = tuple(labels.get(v, str(v)) for v in range(n))
    return SimpleGraph(n, frozenset(edges), labels=label_tuple)
