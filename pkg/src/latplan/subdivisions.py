"""Brute-force forbidden-subdivision search.

Independent of the LR planarity machinery on purpose: these routines decide
planarity and outer-planarity purely by looking for subdivisions of the
forbidden graphs (K5/K33, and K4/K23 for the outer-planar criterion), via
exhaustive branch-vertex placement and backtracking over internally disjoint
paths. Exponential, so only usable on small graphs; the test suite uses it
as the ground-truth oracle.
"""

from __future__ import annotations

from itertools import combinations
from typing import Optional

from .graphs import SimpleGraph
from .planarity import K4, K5, K23, K33, ForbiddenWitness


def _adjacency(g: SimpleGraph) -> list[list[int]]:
    return g.adjacency()


def _paths_between(
    adj: list[list[int]],
    start: int,
    goal: int,
    blocked: set[int],
    min_internal: int,
):
    """Yield simple start-goal paths whose internal vertices avoid ``blocked``."""
    path = [start]
    on_path = {start}

    def extend(v: int):
        for w in adj[v]:
            if w == goal:
                if len(path) - 1 >= min_internal:
                    yield tuple(path) + (goal,)
                continue
            if w in blocked or w in on_path:
                continue
            path.append(w)
            on_path.add(w)
            yield from extend(w)
            path.pop()
            on_path.remove(w)

    yield from extend(start)


def _realize(
    adj: list[list[int]],
    pairs: list[tuple[int, int]],
    branch: set[int],
    used: set[int],
    min_internal: int,
) -> Optional[list[tuple[int, ...]]]:
    if not pairs:
        return []
    a, b = pairs[0]
    blocked = (branch - {a, b}) | used
    for path in _paths_between(adj, a, b, blocked, min_internal):
        interior = set(path[1:-1])
        rest = _realize(adj, pairs[1:], branch, used | interior, min_internal)
        if rest is not None:
            return [path] + rest
    return None


def _search_complete(g: SimpleGraph, k: int, kind: str) -> Optional[ForbiddenWitness]:
    """Subdivision of the complete graph K_k (k = 4 or 5)."""
    adj = _adjacency(g)
    degrees = [len(a) for a in adj]
    candidates = [v for v in range(g.vertex_count) if degrees[v] >= k - 1]
    for branch in combinations(candidates, k):
        pairs = [(a, b) for i, a in enumerate(branch) for b in branch[i + 1 :]]
        paths = _realize(adj, pairs, set(branch), set(), 0)
        if paths is not None:
            return ForbiddenWitness(kind, tuple(branch), tuple(sorted(paths)))
    return None


def _search_k33(g: SimpleGraph) -> Optional[ForbiddenWitness]:
    adj = _adjacency(g)
    degrees = [len(a) for a in adj]
    candidates = [v for v in range(g.vertex_count) if degrees[v] >= 3]
    for six in combinations(candidates, 6):
        first, rest = six[0], six[1:]
        for others in combinations(rest, 2):
            part_a = (first,) + others
            part_b = tuple(v for v in rest if v not in others)
            pairs = [(a, b) for a in part_a for b in part_b]
            paths = _realize(adj, pairs, set(six), set(), 0)
            if paths is not None:
                return ForbiddenWitness(
                    K33, part_a + part_b, tuple(sorted(paths))
                )
    return None


def _search_k23(g: SimpleGraph) -> Optional[ForbiddenWitness]:
    adj = _adjacency(g)
    degrees = [len(a) for a in adj]
    candidates = [v for v in range(g.vertex_count) if degrees[v] >= 3]
    for a, b in combinations(candidates, 2):
        # three internally disjoint a-b paths, each with at least one
        # interior vertex (K23 subdivisions have no direct a-b edge)
        paths = _realize(adj, [(a, b)] * 3, {a, b}, set(), 1)
        if paths is not None:
            mids = [p[len(p) // 2] for p in paths]
            split = []
            for p in paths:
                cut = len(p) // 2
                h1, h2 = p[: cut + 1], p[cut:]
                split.append(h1 if h1[0] <= h1[-1] else tuple(reversed(h1)))
                split.append(h2 if h2[0] <= h2[-1] else tuple(reversed(h2)))
            return ForbiddenWitness(K23, (a, b, *mids), tuple(sorted(split)))
    return None


def find_forbidden_subdivision(g: SimpleGraph) -> Optional[ForbiddenWitness]:
    """First K33 or K5 subdivision found by exhaustive search, if any."""
    return _search_k33(g) or _search_complete(g, 5, K5)


def find_outer_forbidden_subdivision(g: SimpleGraph) -> Optional[ForbiddenWitness]:
    """First K23 or K4 subdivision found by exhaustive search, if any."""
    return _search_k23(g) or _search_complete(g, 4, K4)


def oracle_planar(g: SimpleGraph) -> bool:
    return find_forbidden_subdivision(g) is None


def oracle_outerplanar(g: SimpleGraph) -> bool:
    return find_outer_forbidden_subdivision(g) is None
