"""Planarity, outer-planarity, and Hasse-planarity with certificates.

The decision procedure is the left-right (LR) planarity test in Brandes's
formulation, run per connected component with an Euler-bound cutoff. A
planar verdict carries a rotation system; a negative verdict carries a
forbidden-subdivision witness obtained by shrinking the graph to an
edge-minimal non-planar subgraph, which by Kuratowski's theorem is exactly
a subdivision of K5 or K33 (K4 or K23 in the outer-planar case).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graphs import Edge, SimpleGraph, connected_components
from .lattice import SubgroupLattice, bounded_graph

K5 = "K5"
K33 = "K33"
K4 = "K4"
K23 = "K23"

_BRANCH_COUNT = {K5: 5, K33: 6, K4: 4, K23: 5}


@dataclass(frozen=True)
class ForbiddenWitness:
    """A subdivision certificate: designated branch vertices plus the
    internally-disjoint paths realizing each subdivided edge.

    Branch vertex order is structural: for K33 the two parts are the first
    and last three entries; for K23 the degree-3 side comes first.
    """

    kind: str
    branch_vertices: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class PlanarityVerdict:
    """Outcome of a planarity-style query.

    ``planar`` reports the queried property (planarity or outer-planarity).
    Exactly one of ``embedding`` (a rotation system: cyclic neighbor order
    per vertex) and ``witness`` is present.
    """

    planar: bool
    embedding: Optional[tuple[tuple[int, ...], ...]] = None
    witness: Optional[ForbiddenWitness] = None


def required_pairs(kind: str, branch: Sequence[int]) -> list[frozenset[int]]:
    if kind == K5:
        return [frozenset((a, b)) for i, a in enumerate(branch) for b in branch[i + 1 :]]
    if kind == K4:
        return [frozenset((a, b)) for i, a in enumerate(branch) for b in branch[i + 1 :]]
    if kind == K33:
        return [frozenset((a, b)) for a in branch[:3] for b in branch[3:]]
    if kind == K23:
        return [frozenset((a, b)) for a in branch[:2] for b in branch[2:]]
    raise ValueError(f"unknown witness kind {kind!r}")


# ---------------------------------------------------------------------------
# LR planarity test
# ---------------------------------------------------------------------------


class _Interval:
    __slots__ = ("low", "high")

    def __init__(self, low=None, high=None):
        self.low = low
        self.high = high

    def empty(self) -> bool:
        return self.low is None and self.high is None


class _ConflictPair:
    __slots__ = ("left", "right")

    def __init__(self, left=None, right=None):
        self.left = left if left is not None else _Interval()
        self.right = right if right is not None else _Interval()

    def swap(self) -> None:
        self.left, self.right = self.right, self.left


class _NonPlanar(Exception):
    pass


class _LRPlanarity:
    """One connected component; vertices are local indices 0..n-1."""

    def __init__(self, n: int, adj: list[list[int]]):
        self.n = n
        self.adj = adj
        self.height = [-1] * n
        self.parent_edge: list[Optional[Edge]] = [None] * n
        self.dfs_order: list[int] = []
        self.out_edges: list[list[Edge]] = [[] for _ in range(n)]
        self.lowpt: dict[Edge, int] = {}
        self.lowpt2: dict[Edge, int] = {}
        self.nesting: dict[Edge, int] = {}
        self.ordered: list[list[Edge]] = [[] for _ in range(n)]
        # testing state
        self.stack: list[_ConflictPair] = []
        self.stack_bottom: dict[Edge, Optional[_ConflictPair]] = {}
        self.lowpt_edge: dict[Edge, Edge] = {}
        self.ref: dict[Edge, Optional[Edge]] = {}
        self.side: dict[Edge, int] = {}

    # -- phase 1: orientation ------------------------------------------------

    def orient(self) -> None:
        self.height[0] = 0
        self.dfs_order.append(0)
        stack = [(0, 0)]
        while stack:
            v, i = stack[-1]
            if i < len(self.adj[v]):
                stack[-1] = (v, i + 1)
                w = self.adj[v][i]
                pe = self.parent_edge[v]
                if pe is not None and pe[0] == w:
                    continue
                if self.height[w] == -1:
                    e = (v, w)
                    self.parent_edge[w] = e
                    self.height[w] = self.height[v] + 1
                    self.dfs_order.append(w)
                    self.out_edges[v].append(e)
                    self.lowpt[e] = self.height[v]
                    self.lowpt2[e] = self.height[v]
                    stack.append((w, 0))
                elif self.height[w] < self.height[v]:
                    e = (v, w)
                    self.out_edges[v].append(e)
                    self.lowpt[e] = self.height[w]
                    self.lowpt2[e] = self.height[v]
                # edges to descendants were oriented from the other side
            else:
                stack.pop()

        # propagate lowpoints to parent edges, children before parents
        for v in reversed(self.dfs_order):
            pe = self.parent_edge[v]
            for e in self.out_edges[v]:
                lp, lp2 = self.lowpt[e], self.lowpt2[e]
                self.nesting[e] = 2 * lp + (1 if lp2 < self.height[e[0]] else 0)
                if pe is not None:
                    if lp < self.lowpt[pe]:
                        self.lowpt2[pe] = min(self.lowpt[pe], lp2)
                        self.lowpt[pe] = lp
                    elif lp > self.lowpt[pe]:
                        self.lowpt2[pe] = min(self.lowpt2[pe], lp)
                    else:
                        self.lowpt2[pe] = min(self.lowpt2[pe], lp2)
        for v in range(self.n):
            self.ordered[v] = sorted(
                self.out_edges[v], key=lambda e: (self.nesting[e], e[1])
            )

    # -- phase 2: testing ------------------------------------------------------

    def _is_tree(self, e: Edge) -> bool:
        return self.parent_edge[e[1]] == e

    def _conflicting(self, interval: _Interval, b: Edge) -> bool:
        return not interval.empty() and self.lowpt[interval.high] > self.lowpt[b]

    def _lowest(self, pair: _ConflictPair) -> int:
        if pair.left.empty():
            return self.lowpt[pair.right.low]
        if pair.right.empty():
            return self.lowpt[pair.left.low]
        return min(self.lowpt[pair.left.low], self.lowpt[pair.right.low])

    def test(self) -> bool:
        for v in self.dfs_order:
            for e in self.ordered[v]:
                self.side[e] = 1
                self.ref[e] = None
        try:
            self._test_iterative()
        except _NonPlanar:
            return False
        return True

    def _test_iterative(self) -> None:
        ENTER, INTEGRATE, LEAVE = 0, 1, 2
        stack: list[tuple[int, int, int]] = [(ENTER, 0, 0)]
        while stack:
            action, v, i = stack.pop()
            if action == ENTER:
                if i >= len(self.ordered[v]):
                    stack.append((LEAVE, v, 0))
                    continue
                ei = self.ordered[v][i]
                self.stack_bottom[ei] = self.stack[-1] if self.stack else None
                stack.append((INTEGRATE, v, i))
                if self._is_tree(ei):
                    stack.append((ENTER, ei[1], 0))
                else:
                    self.lowpt_edge[ei] = ei
                    pair = _ConflictPair(right=_Interval(ei, ei))
                    self.stack.append(pair)
            elif action == INTEGRATE:
                ei = self.ordered[v][i]
                stack.append((ENTER, v, i + 1))
                if self.lowpt[ei] < self.height[v]:  # ei has a return edge
                    e = self.parent_edge[v]
                    if i == 0:
                        if e is not None:
                            self.lowpt_edge[e] = self.lowpt_edge[ei]
                    else:
                        self._add_constraints(ei, e)
            else:  # LEAVE
                e = self.parent_edge[v]
                if e is not None:
                    self._trim_back_edges(e)

    def _add_constraints(self, ei: Edge, e: Optional[Edge]) -> None:
        pair = _ConflictPair()
        # merge return edges of ei into pair.right
        bottom = self.stack_bottom[ei]
        while self.stack and (self.stack[-1] is not bottom):
            q = self.stack.pop()
            if not q.left.empty():
                q.swap()
            if not q.left.empty():
                raise _NonPlanar
            if e is not None and self.lowpt[q.right.low] > self.lowpt[e]:
                if pair.right.empty():
                    pair.right.high = q.right.high
                else:
                    self.ref[pair.right.low] = q.right.high
                pair.right.low = q.right.low
            else:
                # align with the parent's lowpoint edge
                if e is not None:
                    self.ref[q.right.low] = self.lowpt_edge[e]
        # merge conflicting return edges of earlier siblings into pair.left
        while self.stack and (
            self._conflicting(self.stack[-1].left, ei)
            or self._conflicting(self.stack[-1].right, ei)
        ):
            q = self.stack.pop()
            if self._conflicting(q.right, ei):
                q.swap()
            if self._conflicting(q.right, ei):
                raise _NonPlanar
            if pair.right.low is not None:
                if q.right.high is not None:
                    self.ref[pair.right.low] = q.right.high
            elif q.right.high is not None:
                pair.right.high = q.right.high
            if q.right.low is not None:
                pair.right.low = q.right.low
            if pair.left.empty():
                pair.left.high = q.left.high
            else:
                self.ref[pair.left.low] = q.left.high
            pair.left.low = q.left.low
        if not (pair.left.empty() and pair.right.empty()):
            self.stack.append(pair)

    def _trim_back_edges(self, e: Edge) -> None:
        u = e[0]
        # drop entire conflict pairs whose lowest return is at u
        while self.stack and self._lowest(self.stack[-1]) == self.height[u]:
            pair = self.stack.pop()
            if pair.left.low is not None:
                self.side[pair.left.low] = -1
        if self.stack:
            pair = self.stack.pop()
            while pair.left.high is not None and pair.left.high[1] == u:
                pair.left.high = self.ref[pair.left.high]
            if pair.left.high is None and pair.left.low is not None:
                self.ref[pair.left.low] = pair.right.low
                self.side[pair.left.low] = -1
                pair.left.low = None
            while pair.right.high is not None and pair.right.high[1] == u:
                pair.right.high = self.ref[pair.right.high]
            if pair.right.high is None and pair.right.low is not None:
                self.ref[pair.right.low] = pair.left.low
                self.side[pair.right.low] = -1
                pair.right.low = None
            self.stack.append(pair)
        # keep a reference from e to the highest return edge still on the stack
        if self.lowpt[e] < self.height[u] and self.stack:
            hl = self.stack[-1].left.high
            hr = self.stack[-1].right.high
            if hl is not None and (hr is None or self.lowpt[hl] > self.lowpt[hr]):
                self.ref[e] = hl
            else:
                self.ref[e] = hr

    # -- phase 3: embedding ----------------------------------------------------

    def _sign(self, e: Edge) -> int:
        chain = []
        cur: Optional[Edge] = e
        while cur is not None and self.ref.get(cur) is not None:
            chain.append(cur)
            cur = self.ref[cur]
        result = self.side.get(cur, 1) if cur is not None else 1
        for edge in reversed(chain):
            self.side[edge] = self.side.get(edge, 1) * result
            self.ref[edge] = None
            result = self.side[edge]
        return result

    def embed(self) -> list[list[int]]:
        for v in self.dfs_order:
            for e in self.ordered[v]:
                self.nesting[e] *= self._sign(e)
        for v in range(self.n):
            self.ordered[v] = sorted(
                self.ordered[v], key=lambda e: (self.nesting[e], e[1])
            )
        rotation: list[list[int]] = [[] for _ in range(self.n)]
        left_ref: dict[int, int] = {}
        right_ref: dict[int, int] = {}
        stack = [(0, 0)]
        while stack:
            v, i = stack[-1]
            if i >= len(self.ordered[v]):
                stack.pop()
                continue
            stack[-1] = (v, i + 1)
            e = self.ordered[v][i]
            w = e[1]
            if self._is_tree(e):
                rotation[w].insert(0, v)  # parent edge leads the child's rotation
                rotation[v].append(w)
                left_ref[v] = w
                right_ref[v] = w
                stack.append((w, 0))
            else:
                rotation[v].append(w)
                if self.side.get(e, 1) == 1:
                    anchor = right_ref.get(w)
                    if anchor is not None and anchor in rotation[w]:
                        rotation[w].insert(rotation[w].index(anchor) + 1, v)
                    else:
                        rotation[w].append(v)
                else:
                    anchor = left_ref.get(w)
                    if anchor is not None and anchor in rotation[w]:
                        rotation[w].insert(rotation[w].index(anchor), v)
                    else:
                        rotation[w].append(v)
                    left_ref[w] = v
        return rotation


def _component_rotation(n: int, adj: list[list[int]]) -> Optional[list[list[int]]]:
    """Rotation system for one connected component, or None if non-planar."""
    edge_count = sum(len(a) for a in adj) // 2
    if n > 2 and edge_count > 3 * n - 6:
        return None
    if edge_count == 0:
        return [[] for _ in range(n)]
    lr = _LRPlanarity(n, adj)
    lr.orient()
    if not lr.test():
        return None
    return lr.embed()


def _component_planar(n: int, adj: list[list[int]]) -> bool:
    edge_count = sum(len(a) for a in adj) // 2
    if n > 2 and edge_count > 3 * n - 6:
        return False
    if edge_count == 0:
        return True
    lr = _LRPlanarity(n, adj)
    lr.orient()
    return lr.test()


def _split_components(vertex_count: int, edges: Iterable[Edge]):
    g = SimpleGraph(vertex_count, frozenset(edges))
    comps = connected_components(g)
    adj = g.adjacency()
    for comp in comps:
        local = {v: i for i, v in enumerate(comp)}
        local_adj = [[local[w] for w in adj[v]] for v in comp]
        yield comp, local_adj


def planar_bool(vertex_count: int, edges: Iterable[Edge]) -> bool:
    """Planarity decision without certificate extraction."""
    edges = list(edges)
    if vertex_count > 2 and len(edges) > 3 * vertex_count - 6:
        return False
    for comp, local_adj in _split_components(vertex_count, edges):
        if not _component_planar(len(comp), local_adj):
            return False
    return True


def planar_rotation(g: SimpleGraph) -> Optional[tuple[tuple[int, ...], ...]]:
    """Full rotation system if planar, else None."""
    if g.vertex_count > 2 and g.edge_count > 3 * g.vertex_count - 6:
        return None
    rotation: list[tuple[int, ...]] = [()] * g.vertex_count
    for comp, local_adj in _split_components(g.vertex_count, g.edges):
        local_rot = _component_rotation(len(comp), local_adj)
        if local_rot is None:
            return None
        for i, v in enumerate(comp):
            rotation[v] = tuple(comp[j] for j in local_rot[i])
    return tuple(rotation)


# ---------------------------------------------------------------------------
# Witness extraction
# ---------------------------------------------------------------------------


def _shrink_to_minimal(
    vertex_count: int, edges: list[Edge], still_bad
) -> list[Edge]:
    """Remove edges while the predicate holds; ends edge-minimal.

    Chunked removal keeps the number of predicate evaluations near-linear in
    practice; the final chunk size 1 pass guarantees minimality.
    """
    edges = sorted(edges)
    chunk = max(1, len(edges) // 2)
    while chunk >= 1:
        i = 0
        while i + chunk <= len(edges):
            trial = edges[:i] + edges[i + chunk :]
            if still_bad(trial):
                edges = trial
            else:
                i += chunk
        chunk //= 2
    return edges


def _minimal_nonplanar_edges(vertex_count: int, edges: Iterable[Edge]) -> list[Edge]:
    edges = sorted(edges)
    bound = 3 * vertex_count - 6
    if vertex_count > 2 and len(edges) > bound + 1:
        # any subgraph keeping bound+1 edges is still non-planar
        edges = edges[: bound + 1]
    return _shrink_to_minimal(
        vertex_count, edges, lambda es: not planar_bool(vertex_count, es)
    )


def _walk_subdivision_paths(
    adj: list[list[int]], branch: set[int]
) -> list[tuple[int, ...]]:
    paths = []
    seen_darts: set[tuple[int, int]] = set()
    for b in sorted(branch):
        for nb in adj[b]:
            if (b, nb) in seen_darts:
                continue
            seen_darts.add((b, nb))
            path = [b]
            prev, cur = b, nb
            while cur not in branch:
                path.append(cur)
                nxt = [x for x in adj[cur] if x != prev]
                if len(nxt) != 1:  # pragma: no cover - minimality violated
                    raise RuntimeError("internal vertex of witness has degree != 2")
                prev, cur = cur, nxt[0]
            path.append(cur)
            seen_darts.add((cur, prev))
            paths.append(tuple(path))
    canonical = []
    for p in paths:
        canonical.append(p if p[0] <= p[-1] else tuple(reversed(p)))
    canonical.sort()
    return canonical


def _decompose_kuratowski(vertex_count: int, edges: list[Edge]) -> ForbiddenWitness:
    """Split an edge-minimal non-planar graph into a K5 or K33 witness."""
    sub = SimpleGraph(vertex_count, frozenset(edges))
    adj = sub.adjacency()
    degrees = [len(a) for a in adj]
    branch = sorted(v for v in range(vertex_count) if degrees[v] >= 3)
    paths = _walk_subdivision_paths(adj, set(branch))
    if len(branch) == 5 and all(degrees[v] == 4 for v in branch):
        return ForbiddenWitness(K5, tuple(branch), tuple(paths))
    if len(branch) == 6 and all(degrees[v] == 3 for v in branch):
        keys = {frozenset((p[0], p[-1])) for p in paths}
        first = branch[0]
        part_a = [first] + [
            v for v in branch[1:] if frozenset((first, v)) not in keys
        ]
        part_b = [v for v in branch if v not in part_a]
        if len(part_a) == 3 and len(part_b) == 3:
            return ForbiddenWitness(K33, tuple(part_a + part_b), tuple(paths))
    raise RuntimeError(  # pragma: no cover - shrinking guarantees the shape
        f"minimal non-planar graph is not a Kuratowski subdivision: {edges}"
    )


def _decompose_outer(vertex_count: int, edges: list[Edge]) -> ForbiddenWitness:
    """Split an edge-minimal non-outer-planar graph into K4 or K23."""
    sub = SimpleGraph(vertex_count, frozenset(edges))
    adj = sub.adjacency()
    degrees = [len(a) for a in adj]
    branch = sorted(v for v in range(vertex_count) if degrees[v] >= 3)
    if len(branch) == 4 and all(degrees[v] == 3 for v in branch):
        paths = _walk_subdivision_paths(adj, set(branch))
        return ForbiddenWitness(K4, tuple(branch), tuple(paths))
    if len(branch) == 2:
        a, b = branch
        long_paths = _walk_subdivision_paths(adj, {a, b})
        if (
            len(long_paths) == 3
            and all(len(p) >= 3 for p in long_paths)
            and all(p[0] == a and p[-1] == b for p in long_paths)
        ):
            # split each a-b path at an interior vertex; those become the
            # degree-2 side of the K23
            mids = []
            paths = []
            for p in long_paths:
                cut = len(p) // 2
                mids.append(p[cut])
                half1 = p[: cut + 1]
                half2 = p[cut:]
                paths.append(half1 if half1[0] <= half1[-1] else tuple(reversed(half1)))
                paths.append(half2 if half2[0] <= half2[-1] else tuple(reversed(half2)))
            return ForbiddenWitness(K23, (a, b, *mids), tuple(sorted(paths)))
    raise RuntimeError(  # pragma: no cover - shrinking guarantees the shape
        f"minimal non-outer-planar graph is not a K4/K23 subdivision: {edges}"
    )


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------


def is_planar(g: SimpleGraph) -> PlanarityVerdict:
    """Planarity with a rotation system or a K5/K33 subdivision witness."""
    rotation = planar_rotation(g)
    if rotation is not None:
        return PlanarityVerdict(True, embedding=rotation)
    minimal = _minimal_nonplanar_edges(g.vertex_count, g.edges)
    witness = _decompose_kuratowski(g.vertex_count, minimal)
    return PlanarityVerdict(False, witness=witness)


def _apex_edges(vertex_count: int, edges: Iterable[Edge]) -> list[Edge]:
    apex = vertex_count
    out = list(edges)
    out.extend((v, apex) for v in range(vertex_count))
    return out


def outerplanar_bool(vertex_count: int, edges: Iterable[Edge]) -> bool:
    """A graph is outer-planar iff adding an apex joined to every vertex
    leaves it planar."""
    return planar_bool(vertex_count + 1, _apex_edges(vertex_count, edges))


def is_outerplanar(g: SimpleGraph) -> PlanarityVerdict:
    """Outer-planarity; witnesses are K4/K23 subdivisions found within g."""
    apex_graph = SimpleGraph(
        g.vertex_count + 1, frozenset(_apex_edges(g.vertex_count, g.edges))
    )
    rotation = planar_rotation(apex_graph)
    if rotation is not None:
        apex = g.vertex_count
        trimmed = tuple(
            tuple(w for w in rotation[v] if w != apex) for v in range(g.vertex_count)
        )
        return PlanarityVerdict(True, embedding=trimmed)
    minimal = _shrink_to_minimal(
        g.vertex_count,
        sorted(g.edges),
        lambda es: not outerplanar_bool(g.vertex_count, es),
    )
    witness = _decompose_outer(g.vertex_count, minimal)
    return PlanarityVerdict(False, witness=witness)


def is_hasse_planar(L: SubgroupLattice) -> PlanarityVerdict:
    """Platt's criterion: planarity of the bound-augmented subgroup graph."""
    return is_planar(bounded_graph(L))


def validate_witness(g: SimpleGraph, w: ForbiddenWitness) -> bool:
    """Check a witness against a graph: structure, disjointness, edges."""
    if w.kind not in _BRANCH_COUNT:
        return False
    branch = w.branch_vertices
    if len(branch) != _BRANCH_COUNT[w.kind]:
        return False
    if len(set(branch)) != len(branch):
        return False
    if any(not 0 <= v < g.vertex_count for v in branch):
        return False
    needed = required_pairs(w.kind, branch)
    seen_pairs: list[frozenset[int]] = []
    internal_seen: set[int] = set()
    branch_set = set(branch)
    for path in w.paths:
        if len(path) < 2 or len(set(path)) != len(path):
            return False
        if path[0] not in branch_set or path[-1] not in branch_set:
            return False
        for a, b in zip(path, path[1:]):
            if tuple(sorted((a, b))) not in g.edges:
                return False
        interior = path[1:-1]
        for v in interior:
            if v in branch_set or v in internal_seen:
                return False
            if not 0 <= v < g.vertex_count:
                return False
        internal_seen.update(interior)
        seen_pairs.append(frozenset((path[0], path[-1])))
    return sorted(seen_pairs, key=sorted) == sorted(needed, key=sorted)


# ---------------------------------------------------------------------------
# Faces and serialization
# ---------------------------------------------------------------------------


def trace_faces(
    g: SimpleGraph, rotation: Sequence[Sequence[int]]
) -> list[tuple[int, ...]]:
    """Face boundaries of a rotation system (next-after-predecessor rule)."""
    position = [
        {w: i for i, w in enumerate(rot)} for rot in rotation
    ]
    faces = []
    seen: set[tuple[int, int]] = set()
    for a, b in g.sorted_edges():
        for dart in ((a, b), (b, a)):
            if dart in seen:
                continue
            face = []
            u, v = dart
            while (u, v) not in seen:
                seen.add((u, v))
                face.append(u)
                rot = rotation[v]
                idx = position[v][u]
                w = rot[(idx + 1) % len(rot)]
                u, v = v, w
            faces.append(tuple(face))
    return faces


def euler_formula_holds(g: SimpleGraph, rotation: Sequence[Sequence[int]]) -> bool:
    """V - E + F == 2C with faces traced per connected component."""
    comps = connected_components(g)
    faces = trace_faces(g, rotation)
    isolated = sum(1 for c in comps if len(c) == 1)
    return (
        g.vertex_count - g.edge_count + len(faces) + isolated == 2 * len(comps)
    )


def witness_to_json(w: ForbiddenWitness) -> dict:
    return {
        "kind": w.kind,
        "branch_vertices": list(w.branch_vertices),
        "paths": [list(p) for p in w.paths],
    }


def witness_from_json(data: dict) -> ForbiddenWitness:
    return ForbiddenWitness(
        data["kind"],
        tuple(data["branch_vertices"]),
        tuple(tuple(p) for p in data["paths"]),
    )


def embedding_to_json(embedding: Sequence[Sequence[int]]) -> dict:
    return {"rotation": [list(r) for r in embedding]}
