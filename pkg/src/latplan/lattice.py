"""Complete subgroup enumeration and the subgroup graph.

Enumeration seeds with all cyclic subgroups and closes under joins; every
subgroup is a join of cyclic ones, so joining against the seed set until
fixpoint reaches the full lattice. Subgroups are canonically ordered by
(order, member bit-set), which pins vertex numbering for all downstream
output.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import OrderCapExceeded
from .graphs import SimpleGraph
from .groups import FiniteGroup, Subgroup, _closure_elems, _iter_mask

DEFAULT_LATTICE_CAP = 200

BOUND_EDGE_COINCIDES = "bound-edge-coincides-with-cover"


@dataclass(frozen=True)
class SubgroupLattice:
    """All subgroups of a group with inclusion covers.

    ``covers`` holds pairs (i, j) meaning subgroup i is maximal in subgroup j.
    """

    group: FiniteGroup
    subgroups: tuple[Subgroup, ...]
    covers: frozenset[tuple[int, int]]
    bottom: int
    top: int

    @cached_property
    def index_by_mask(self) -> dict[int, int]:
        return {s.mask: i for i, s in enumerate(self.subgroups)}

    def maximal_subgroups(self) -> tuple[int, ...]:
        return tuple(sorted(i for (i, j) in self.covers if j == self.top))

    def contained_in(self, i: int, j: int) -> bool:
        a, b = self.subgroups[i], self.subgroups[j]
        return a.mask & b.mask == a.mask

    def join(self, i: int, j: int) -> int:
        union = self.subgroups[i].mask | self.subgroups[j].mask
        if union == self.subgroups[i].mask:
            return i
        if union == self.subgroups[j].mask:
            return j
        gens = list(_iter_mask(union))
        _, mask = _closure_elems(self.group, gens)
        return self.index_by_mask[mask]

    def meet(self, i: int, j: int) -> int:
        return self.index_by_mask[self.subgroups[i].mask & self.subgroups[j].mask]


def all_subgroups(G: FiniteGroup, order_cap: int = DEFAULT_LATTICE_CAP) -> SubgroupLattice:
    """Enumerate every subgroup of G and the covering relation."""
    if G.order > order_cap:
        raise OrderCapExceeded(
            f"order {G.order} exceeds lattice cap {order_cap}", order_cap, G.order
        )
    table = G.table
    orders = G.element_orders
    seeds = G.cyclic_subgroups  # canonical order
    # a true generator: an element whose order equals the subgroup order
    seed_data = [
        (s.mask, min(e for e in s.elements() if orders[e] == s.order))
        for s in seeds
        if s.order > 1
    ]

    # state per discovered subgroup: (mask, elements list, generator list)
    trivial_mask = 1 << G.identity
    states: dict[int, tuple[list[int], list[int]]] = {
        trivial_mask: ([G.identity], [])
    }
    for (seed_mask, seed_gen), s in zip(seed_data, (s for s in seeds if s.order > 1)):
        if seed_mask not in states:
            states[seed_mask] = (list(s.elements()), [seed_gen])

    queue = list(states.keys())
    while queue:
        mask = queue.pop()
        elems, gens = states[mask]
        for seed_mask, seed_gen in seed_data:
            if seed_mask & ~mask == 0:
                continue
            new_elems, new_mask = _extend_closed(
                G.order, table, elems, gens, seed_gen
            )
            if new_mask not in states:
                states[new_mask] = (new_elems, gens + [seed_gen])
                queue.append(new_mask)

    subs = sorted(
        (Subgroup(mask, len(state[0])) for mask, state in states.items()),
        key=lambda s: (s.order, s.mask),
    )
    covers = _covering_pairs(subs)
    return SubgroupLattice(
        group=G,
        subgroups=tuple(subs),
        covers=frozenset(covers),
        bottom=0,
        top=len(subs) - 1,
    )


def _extend_closed(order, table, elems, gens, g):
    """Close ``elems`` (a subgroup) under one extra generator, Dimino-style."""
    base = elems
    out = list(elems)
    member = bytearray(order)
    for e in elems:
        member[e] = 1
    active = gens + [g]
    reps = [g]
    while reps:
        rep = reps.pop()
        if member[rep]:
            continue
        coset_new = []
        for h in base:
            t = table[h][rep]
            if not member[t]:
                member[t] = 1
                out.append(t)
                coset_new.append(t)
        for t in coset_new:
            row = table[t]
            for s in active:
                u = row[s]
                if not member[u]:
                    reps.append(u)
    out_mask = 0
    for e in out:
        out_mask |= 1 << e
    return out, out_mask


def _covering_pairs(subs: list[Subgroup]) -> list[tuple[int, int]]:
    """Transitive reduction of inclusion, computed per upper subgroup."""
    pairs = []
    n = len(subs)
    for j in range(n):
        upper = subs[j]
        contained = [
            i
            for i in range(j)
            if upper.order % subs[i].order == 0
            and subs[i].mask & upper.mask == subs[i].mask
            and subs[i].mask != upper.mask
        ]
        # walk largest-first: anything inside an already-kept maximal is not maximal
        contained.sort(key=lambda i: -subs[i].order)
        maximal: list[int] = []
        for i in contained:
            mi = subs[i].mask
            if not any(mi & subs[m].mask == mi for m in maximal):
                maximal.append(i)
        pairs.extend((i, j) for i in sorted(maximal))
    return pairs


def subgroup_graph(L: SubgroupLattice) -> SimpleGraph:
    """Covers viewed as an undirected graph; vertices carry subgroup orders."""
    edges = frozenset(tuple(sorted(p)) for p in L.covers)
    labels = tuple(str(s.order) for s in L.subgroups)
    return SimpleGraph(len(L.subgroups), edges, labels=labels)


def bounded_graph(L: SubgroupLattice) -> SimpleGraph:
    """Subgroup graph plus a bottom-top edge (the Hasse-planarity gadget).

    For groups of prime order the extra edge coincides with an existing
    cover; the graph stays simple and the coincidence is flagged in
    ``notes``.
    """
    g = subgroup_graph(L)
    if L.bottom == L.top:
        return g
    extra = tuple(sorted((L.bottom, L.top)))
    if extra in g.edges:
        return SimpleGraph(
            g.vertex_count, g.edges, labels=g.labels, notes=(BOUND_EDGE_COINCIDES,)
        )
    return SimpleGraph(g.vertex_count, g.edges | {extra}, labels=g.labels)


def frattini(L: SubgroupLattice) -> Subgroup:
    """Intersection of all maximal subgroups; the whole group if none exist."""
    maximal = L.maximal_subgroups()
    if not maximal:
        return L.subgroups[L.top]
    mask = L.subgroups[L.top].mask
    for i in maximal:
        mask &= L.subgroups[i].mask
    return L.subgroups[L.index_by_mask[mask]]


def lattice_to_json(L: SubgroupLattice) -> dict:
    return {
        "subgroups": [list(s.elements()) for s in L.subgroups],
        "covers": sorted(list(p) for p in L.covers),
        "bottom": L.bottom,
        "top": L.top,
    }
