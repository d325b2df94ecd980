"""Finite groups given by multiplication tables, and their basic invariants.

A group of order n is stored as an n x n table of element indices; row g,
column h holds g*h. Index 0 is not required to be the identity for external
input; the identity is located during validation. All objects are treated as
immutable after construction, so they are safe to share between threads.
"""

from __future__ import annotations

import itertools
import math
from array import array
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    InvalidPermutation,
    NoIdentity,
    NoInverse,
    NotASubgroup,
    NotAssociative,
    NotLatinSquare,
    OrderCapExceeded,
)

# Caps: lattice-level work is far more expensive than construction, so the
# two have separate defaults. Exceeding a cap raises, never truncates.
DEFAULT_CONSTRUCTION_CAP = 512
DEFAULT_ISO_CAP = 64

_ASSOC_CHUNK_CELLS = 4_000_000


def _row_array(order: int, values: Iterable[int]) -> array:
    typecode = "H" if order <= 0xFFFF else "I"
    return array(typecode, values)


@dataclass(frozen=True)
class Subgroup:
    """Subset of element indices closed under the group operation.

    ``mask`` is a bit-set over element indices (bit e set iff element e is a
    member); ``order`` is its cardinality.
    """

    mask: int
    order: int

    @classmethod
    def from_members(cls, members: Iterable[int]) -> "Subgroup":
        mask = 0
        for e in members:
            mask |= 1 << e
        return cls(mask, bin(mask).count("1"))

    def elements(self) -> tuple[int, ...]:
        return tuple(_iter_mask(self.mask))

    def contains(self, element: int) -> bool:
        return bool(self.mask >> element & 1)

    def is_subset_of(self, other: "Subgroup") -> bool:
        return self.mask & other.mask == self.mask


def _iter_mask(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FiniteGroup:
    """A finite group on dense indices 0..order-1 with display labels."""

    def __init__(
        self,
        table: Sequence[array],
        identity: int,
        labels: tuple[str, ...],
        source: str = "table",
    ):
        self.order: int = len(table)
        self.table = table
        self.identity: int = identity
        self.labels = labels
        self.source = source

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"FiniteGroup(order={self.order}, source={self.source!r})"

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def elements(self) -> range:
        return range(self.order)

    @cached_property
    def inverses(self) -> array:
        e = self.identity
        inv = _row_array(self.order, [0] * self.order)
        for g in range(self.order):
            row = self.table[g]
            for h in range(self.order):
                if row[h] == e:
                    inv[g] = h
                    break
        return inv

    @cached_property
    def element_orders(self) -> array:
        """Order of every element, computed one cyclic subgroup at a time.

        Walking <x> gives the orders of all its powers at once (the order of
        x^k is d/gcd(d,k)), so each cyclic subgroup is traversed only when one
        of its generators is first met.
        """
        orders = array("I", [0] * self.order)
        orders[self.identity] = 1
        table = self.table
        for x in range(self.order):
            if orders[x]:
                continue
            powers = [x]
            y = x
            while y != self.identity:
                y = table[y][x]
                powers.append(y)
            d = len(powers)
            for k, y in enumerate(powers[:-1], start=1):
                if not orders[y]:
                    orders[y] = d // math.gcd(d, k)
        return orders

    @cached_property
    def is_abelian(self) -> bool:
        if self.order > 512:
            t = np.asarray(self.table)
            return bool(np.array_equal(t, t.T))
        table = self.table
        for g in range(self.order):
            row = table[g]
            for h in range(g + 1, self.order):
                if row[h] != table[h][g]:
                    return False
        return True

    @cached_property
    def center(self) -> Subgroup:
        if self.is_abelian:
            return Subgroup((1 << self.order) - 1, self.order)
        table = self.table
        members = [
            g
            for g in range(self.order)
            if all(table[g][h] == table[h][g] for h in range(self.order))
        ]
        return Subgroup.from_members(members)

    @cached_property
    def cyclic_subgroups(self) -> tuple[Subgroup, ...]:
        """All distinct cyclic subgroups, canonically ordered."""
        table = self.table
        seen: set[int] = set()
        out = []
        done_generators = bytearray(self.order)
        for x in range(self.order):
            if done_generators[x]:
                continue
            powers = [self.identity]
            y = x
            while y != self.identity:
                powers.append(y)
                y = table[y][x]
            d = len(powers)
            mask = 0
            for p in powers:
                mask |= 1 << p
            # every generator of <x> would rebuild the same subgroup
            for k in range(1, d):
                if math.gcd(k, d) == 1:
                    done_generators[powers[k]] = 1
            if mask not in seen:
                seen.add(mask)
                out.append(Subgroup(mask, d))
        out.sort(key=lambda s: (s.order, s.mask))
        return tuple(out)

    @cached_property
    def spectrum(self) -> frozenset[int]:
        return frozenset(self.element_orders)

    def label_of(self, element: int) -> str:
        return self.labels[element]


# ---------------------------------------------------------------------------
# Construction and validation
# ---------------------------------------------------------------------------


def from_cayley_table(
    table: Sequence[Sequence[int]],
    labels: Optional[Sequence[str]] = None,
    order_cap: int = DEFAULT_CONSTRUCTION_CAP,
) -> FiniteGroup:
    """Validate an externally supplied table and wrap it as a group.

    Checks, in order: shape and entry range, the Latin-square property,
    existence of a two-sided identity, two-sided inverses, associativity.
    Each failure names the offending cell or triple.
    """
    n = len(table)
    if n == 0:
        raise NotLatinSquare("table is empty")
    if n > order_cap:
        raise OrderCapExceeded(
            f"table side {n} exceeds construction cap {order_cap}", order_cap, n
        )
    rows = []
    for g, row in enumerate(table):
        if len(row) != n:
            raise NotLatinSquare(f"row {g} has length {len(row)}, expected {n}")
        for h, v in enumerate(row):
            if not isinstance(v, (int, np.integer)) or not 0 <= v < n:
                raise NotLatinSquare(f"cell ({g},{h}) holds {v!r}, expected 0..{n - 1}")
        rows.append(_row_array(n, row))

    full = set(range(n))
    for g in range(n):
        if set(rows[g]) != full:
            dup = _first_duplicate(rows[g])
            raise NotLatinSquare(f"row {g} repeats value {dup}")
    for h in range(n):
        col = [rows[g][h] for g in range(n)]
        if set(col) != full:
            dup = _first_duplicate(col)
            raise NotLatinSquare(f"column {h} repeats value {dup}")

    identity = None
    for e in range(n):
        if all(rows[e][g] == g for g in range(n)) and all(
            rows[g][e] == g for g in range(n)
        ):
            identity = e
            break
    if identity is None:
        raise NoIdentity("no element acts as a two-sided identity")

    for g in range(n):
        right = next(h for h in range(n) if rows[g][h] == identity)
        if rows[right][g] != identity:
            raise NoInverse(f"element {g}: right inverse {right} is not a left inverse")

    _check_associativity(rows)

    if labels is None:
        labels = tuple(f"g{i}" for i in range(n))
    else:
        if len(labels) != n:
            raise NotLatinSquare(f"{len(labels)} labels for {n} elements")
        labels = tuple(str(x) for x in labels)
    return FiniteGroup(rows, identity, labels, source="table")


def _first_duplicate(values: Iterable[int]) -> int:
    seen: set[int] = set()
    for v in values:
        if v in seen:
            return v
        seen.add(v)
    return -1


def _check_associativity(rows: Sequence[array]) -> None:
    n = len(rows)
    t = np.asarray(rows, dtype=np.int64)
    chunk = max(1, _ASSOC_CHUNK_CELLS // (n * n))
    for start in range(0, n, chunk):
        gs = slice(start, min(start + chunk, n))
        lhs = t[t[gs]]  # (g*h)*k
        rhs = t[gs][:, t]  # g*(h*k)
        if not np.array_equal(lhs, rhs):
            g_off, h, k = np.argwhere(lhs != rhs)[0]
            g = start + int(g_off)
            raise NotAssociative(
                f"({g}*{int(h)})*{int(k)} != {g}*({int(h)}*{int(k)})"
            )


def from_permutations(
    degree: int,
    generators: Sequence[Sequence[int]],
    order_cap: int = DEFAULT_CONSTRUCTION_CAP,
) -> FiniteGroup:
    """Close a set of permutations (image sequences) under composition.

    Element 0 of the result is the identity permutation; the remaining
    elements appear in breadth-first order, which makes the construction
    deterministic.
    """
    if degree < 1:
        raise InvalidPermutation("degree must be positive")
    gens: list[tuple[int, ...]] = []
    for idx, g in enumerate(generators):
        img = tuple(int(v) for v in g)
        if sorted(img) != list(range(degree)):
            raise InvalidPermutation(
                f"generator {idx} is not a permutation of 0..{degree - 1}: {list(g)}"
            )
        gens.append(img)

    ident = tuple(range(degree))
    elems: list[tuple[int, ...]] = [ident]
    index: dict[tuple[int, ...], int] = {ident: 0}
    frontier = [ident]
    while frontier:
        new_frontier = []
        for w in frontier:
            for g in gens:
                prod = tuple(w[g[i]] for i in range(degree))
                if prod not in index:
                    if len(elems) >= order_cap:
                        raise OrderCapExceeded(
                            f"closure exceeds order cap {order_cap}",
                            order_cap,
                            len(elems) + 1,
                        )
                    index[prod] = len(elems)
                    elems.append(prod)
                    new_frontier.append(prod)
        frontier = new_frontier

    n = len(elems)
    rows = []
    for a in elems:
        rows.append(_row_array(n, (index[tuple(a[b[i]] for i in range(degree))] for b in elems)))
    labels = tuple(_cycle_notation(p) for p in elems)
    return FiniteGroup(rows, 0, labels, source="permutations")


def _cycle_notation(perm: tuple[int, ...]) -> str:
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = perm[nxt]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) if parts else "e"


def direct_product(
    g: FiniteGroup, h: FiniteGroup, order_cap: int = DEFAULT_CONSTRUCTION_CAP
) -> FiniteGroup:
    """Componentwise product; element (a, b) gets index a*|H| + b."""
    n = g.order * h.order
    if n > order_cap:
        raise OrderCapExceeded(
            f"product order {n} exceeds cap {order_cap}", order_cap, n
        )
    ng, nh = g.order, h.order
    typecode = "H" if n <= 0xFFFF else "I"
    dtype = "<u2" if typecode == "H" else "<u4"
    tg = np.asarray(g.table, dtype=np.int64)
    th = np.asarray(h.table, dtype=np.int64)
    rows = []
    for a1 in range(ng):
        scaled = tg[a1][:, None] * nh
        for b1 in range(nh):
            row = array(typecode)
            row.frombytes((scaled + th[b1][None, :]).astype(dtype).tobytes())
            rows.append(row)
    labels = tuple(
        f"({la},{lb})" for la in g.labels for lb in h.labels
    )
    identity = g.identity * nh + h.identity
    return FiniteGroup(rows, identity, labels, source="product")


# ---------------------------------------------------------------------------
# Generated subgroups
# ---------------------------------------------------------------------------


def generated_subgroup(G: FiniteGroup, generators: Iterable[int]) -> Subgroup:
    """Subgroup generated by the given elements."""
    elems, mask = _closure_elems(G, list(generators))
    return Subgroup(mask, len(elems))


def _closure_elems(G: FiniteGroup, generators: list[int]) -> tuple[list[int], int]:
    """Dimino-style closure: new generators extend the subgroup coset-wise.

    Cost is proportional to the size of the result times the number of
    generators, not to its square.
    """
    table = G.table
    member = bytearray(G.order)
    member[G.identity] = 1
    elems = [G.identity]
    active: list[int] = []
    for g in generators:
        if member[g]:
            continue
        active.append(g)
        base = list(elems)  # subgroup before adding g; cosets are base*t
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
                    elems.append(t)
                    coset_new.append(t)
            for t in coset_new:
                row = table[t]
                for s in active:
                    u = row[s]
                    if not member[u]:
                        reps.append(u)
    mask = 0
    for e in elems:
        mask |= 1 << e
    return elems, mask


def join_subgroups(G: FiniteGroup, a: Subgroup, b: Subgroup) -> Subgroup:
    """Smallest subgroup containing both (the lattice join)."""
    if b.mask & ~a.mask == 0:
        return a
    if a.mask & ~b.mask == 0:
        return b
    gens = list(_iter_mask(a.mask)) + list(_iter_mask(b.mask))
    return generated_subgroup(G, gens)


def subgroup_from_members(G: FiniteGroup, members: Iterable[int]) -> Subgroup:
    """Wrap a member set as a Subgroup, verifying closure."""
    s = Subgroup.from_members(members)
    _require_subgroup(G, s)
    return s


def _require_subgroup(G: FiniteGroup, s: Subgroup) -> None:
    if not s.contains(G.identity):
        raise NotASubgroup("member set does not contain the identity")
    elems = s.elements()
    table = G.table
    for a in elems:
        row = table[a]
        for b in elems:
            if not s.contains(row[b]):
                raise NotASubgroup(
                    f"not closed: {a}*{b} = {row[b]} is outside the member set"
                )


# ---------------------------------------------------------------------------
# Invariants
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GroupInvariants:
    order: int
    is_abelian: bool
    is_nilpotent: bool
    center: Subgroup
    spectrum: frozenset[int]
    prime_spectrum: frozenset[int]
    abelian_invariants: tuple[int, ...]
    min_generators: int


def invariants(G: FiniteGroup) -> GroupInvariants:
    """All stock invariants, computed exactly."""
    spectrum = G.spectrum
    primes = frozenset(p for p in spectrum if _is_prime(p))
    return GroupInvariants(
        order=G.order,
        is_abelian=G.is_abelian,
        is_nilpotent=is_nilpotent(G),
        center=G.center,
        spectrum=spectrum,
        prime_spectrum=primes,
        abelian_invariants=abelian_invariants(G),
        min_generators=min_generators(G),
    )


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def abelian_invariants(G: FiniteGroup) -> tuple[int, ...]:
    """Invariant factors d1 >= d2 >= ... (each dividing the previous).

    Empty for non-abelian groups. Derived from order statistics: within the
    Sylow p-part, #{x : x^(p^k) = 1} determines the partition of exponents.
    """
    if G.order == 1:
        return ()
    if not G.is_abelian:
        return ()
    orders = G.element_orders
    factors_by_prime: list[list[int]] = []
    for p, a in sorted(_factorize(G.order).items()):
        counts = []
        for k in range(1, a + 1):
            pk = p**k
            counts.append(sum(1 for x in orders if pk % x == 0))
        exps = [round(_int_log(c, p)) for c in counts]
        heights = [exps[0]] + [exps[k] - exps[k - 1] for k in range(1, len(exps))]
        # conjugate partition: lambda_i = #{k : heights[k] >= i}
        lam = []
        i = 1
        while True:
            cnt = sum(1 for h in heights if h >= i)
            if cnt == 0:
                break
            lam.append(cnt)
            i += 1
        lam_sorted = sorted(lam, reverse=True)
        factors_by_prime.append([p**e for e in lam_sorted])
    width = max(len(f) for f in factors_by_prime)
    invariant_factors = []
    for j in range(width):
        d = 1
        for fs in factors_by_prime:
            if j < len(fs):
                d *= fs[j]
        invariant_factors.append(d)
    return tuple(invariant_factors)


def _int_log(value: int, base: int) -> int:
    e = 0
    while value > 1:
        value //= base
        e += 1
    return e


def is_nilpotent(G: FiniteGroup) -> bool:
    """Lower central series reaches the trivial subgroup."""
    if G.is_abelian:
        return True
    table = G.table
    inv = G.inverses
    current = Subgroup((1 << G.order) - 1, G.order)
    while True:
        commutators = set()
        for g in range(G.order):
            gi = inv[g]
            row_gi = table[gi]
            for h in _iter_mask(current.mask):
                # [g,h] = g^-1 h^-1 g h
                c = table[table[row_gi[inv[h]]][g]][h]
                commutators.add(c)
        nxt = generated_subgroup(G, commutators)
        if nxt.order == 1:
            return True
        if nxt.mask == current.mask:
            return False
        current = nxt


def min_generators(G: FiniteGroup) -> int:
    """Size of a smallest generating set.

    Abelian groups need exactly one generator per invariant factor, and for
    p-groups the count is the index of the Frattini subgroup (Burnside basis
    theorem); both agree with the exhaustive search below and keep large
    elementary-abelian cases tractable. The general case searches joins of
    maximal cyclic subgroups, which suffices because any generating set can
    be enlarged element-by-element to maximal cyclic subgroups.
    """
    if G.order == 1:
        return 0
    if G.is_abelian:
        return len(abelian_invariants(G))
    factors = _factorize(G.order)
    if len(factors) == 1:
        (p, _), = factors.items()
        frattini = _pgroup_frattini(G, p)
        return _int_log(G.order // frattini.order, p)

    cyclics = G.cyclic_subgroups
    maximal = [
        c
        for c in cyclics
        if not any(
            c.mask != d.mask and c.mask & d.mask == c.mask for d in cyclics
        )
    ]
    full = (1 << G.order) - 1
    level = {c.mask: c for c in maximal}
    k = 1
    while True:
        if any(mask == full for mask in level):
            return k
        nxt: dict[int, Subgroup] = {}
        for s in level.values():
            for c in maximal:
                if c.mask & ~s.mask == 0:
                    continue
                j = join_subgroups(G, s, c)
                nxt.setdefault(j.mask, j)
        k += 1
        level = nxt


def _pgroup_frattini(G: FiniteGroup, p: int) -> Subgroup:
    """Frattini subgroup of a p-group: generated by p-th powers and commutators."""
    table = G.table
    inv = G.inverses
    gens = set()
    for g in range(G.order):
        y = g
        for _ in range(p - 1):
            y = table[y][g]
        gens.add(y)
    for g in range(G.order):
        row_gi = table[inv[g]]
        for h in range(g + 1, G.order):
            gens.add(table[table[row_gi[inv[h]]][g]][h])
    return generated_subgroup(G, gens)


# ---------------------------------------------------------------------------
# Conjugation
# ---------------------------------------------------------------------------


def conjugacy_classes(G: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    """Partition of the element indices into conjugacy classes."""
    if G.is_abelian:
        return tuple((x,) for x in range(G.order))
    table = G.table
    inv = G.inverses
    assigned = bytearray(G.order)
    classes = []
    for x in range(G.order):
        if assigned[x]:
            continue
        orbit = set()
        for g in range(G.order):
            orbit.add(table[table[g][x]][inv[g]])
        cls = tuple(sorted(orbit))
        for y in cls:
            assigned[y] = 1
        classes.append(cls)
    return tuple(classes)


def conjugacy_class_of(G: FiniteGroup, x: int) -> tuple[int, ...]:
    table = G.table
    inv = G.inverses
    return tuple(sorted({table[table[g][x]][inv[g]] for g in range(G.order)}))


def centralizer_of_subgroup(G: FiniteGroup, H: Subgroup) -> Subgroup:
    """Elements commuting with every member of H."""
    _require_subgroup(G, H)
    table = G.table
    members = H.elements()
    out = [
        g
        for g in range(G.order)
        if all(table[g][h] == table[h][g] for h in members)
    ]
    return Subgroup.from_members(out)


def center_of_subgroup(G: FiniteGroup, H: Subgroup) -> Subgroup:
    """Members of H commuting with every member of H."""
    table = G.table
    members = H.elements()
    out = [
        g for g in members if all(table[g][h] == table[h][g] for h in members)
    ]
    return Subgroup.from_members(out)


def is_normal(G: FiniteGroup, H: Subgroup) -> bool:
    table = G.table
    inv = G.inverses
    for g in range(G.order):
        row_g = table[g]
        gi = inv[g]
        for h in _iter_mask(H.mask):
            if not H.contains(table[row_g[h]][gi]):
                return False
    return True


def subgroup_as_group(G: FiniteGroup, H: Subgroup) -> FiniteGroup:
    """Reindex a subgroup as a standalone group (labels carried over)."""
    elems = list(H.elements())
    pos = {e: i for i, e in enumerate(elems)}
    table = G.table
    rows = [
        _row_array(len(elems), (pos[table[a][b]] for b in elems)) for a in elems
    ]
    labels = tuple(G.labels[e] for e in elems)
    return FiniteGroup(rows, pos[G.identity], labels, source="subgroup")


# ---------------------------------------------------------------------------
# Isomorphism testing
# ---------------------------------------------------------------------------


def _class_size_by_element(G: FiniteGroup) -> dict[int, int]:
    sizes = {}
    for cls in conjugacy_classes(G):
        for x in cls:
            sizes[x] = len(cls)
    return sizes


def generating_sequence(G: FiniteGroup) -> tuple[int, ...]:
    """A short (greedy, not necessarily minimum) generating sequence."""
    if G.order == 1:
        return ()
    orders = G.element_orders
    first = max(range(G.order), key=lambda x: (orders[x], -x))
    gens = [first]
    sub = generated_subgroup(G, gens)
    while sub.order < G.order:
        nxt = next(x for x in range(G.order) if not sub.contains(x))
        gens.append(nxt)
        sub = generated_subgroup(G, gens)
    return tuple(gens)


def are_isomorphic(
    G: FiniteGroup, H: FiniteGroup, order_cap: int = DEFAULT_ISO_CAP
) -> bool:
    """Brute-force isomorphism with invariant pre-screening.

    Searches images for a generating sequence of G among order- and
    class-size-compatible elements of H, extending each candidate through
    the multiplication tables.
    """
    if G.order != H.order:
        return False
    if G.order > order_cap:
        raise OrderCapExceeded(
            f"order {G.order} exceeds isomorphism cap {order_cap}",
            order_cap,
            G.order,
        )
    if G.is_abelian != H.is_abelian:
        return False
    if G.is_abelian:
        return abelian_invariants(G) == abelian_invariants(H)
    if Counter(G.element_orders) != Counter(H.element_orders):
        return False
    if G.center.order != H.center.order:
        return False
    g_sizes = _class_size_by_element(G)
    h_sizes = _class_size_by_element(H)
    if Counter(g_sizes.values()) != Counter(h_sizes.values()):
        return False

    gens = generating_sequence(G)
    g_orders = G.element_orders
    h_orders = H.element_orders
    candidate_lists = []
    for g in gens:
        cands = [
            y
            for y in range(H.order)
            if h_orders[y] == g_orders[g] and h_sizes[y] == g_sizes[g]
        ]
        if not cands:
            return False
        candidate_lists.append(cands)

    for images in itertools.product(*candidate_lists):
        if _extends_to_isomorphism(G, H, gens, images):
            return True
    return False


def _extends_to_isomorphism(
    G: FiniteGroup, H: FiniteGroup, gens: tuple[int, ...], images: tuple[int, ...]
) -> bool:
    phi = {G.identity: H.identity}
    frontier = [G.identity]
    tg, th = G.table, H.table
    while frontier:
        new = []
        for x in frontier:
            fx = phi[x]
            for g, hg in zip(gens, images):
                y = tg[x][g]
                fy = th[fx][hg]
                known = phi.get(y)
                if known is None:
                    phi[y] = fy
                    new.append(y)
                elif known != fy:
                    return False
        frontier = new
    if len(phi) != G.order:
        return False
    return len(set(phi.values())) == H.order


# ---------------------------------------------------------------------------
# Text and JSON interchange
# ---------------------------------------------------------------------------


def parse_cayley_text(text: str) -> list[list[int]]:
    """First line n, then n lines of n space-separated 0-based indices."""
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise NotLatinSquare("empty table file")
    n = int(lines[0])
    if len(lines) != n + 1:
        raise NotLatinSquare(f"expected {n} table rows, found {len(lines) - 1}")
    return [[int(v) for v in ln.split()] for ln in lines[1:]]


def parse_permutations_text(text: str) -> tuple[int, list[list[int]]]:
    """First line degree, then one generator per line as image lists."""
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise InvalidPermutation("empty permutation file")
    degree = int(lines[0])
    gens = [[int(v) for v in ln.split()] for ln in lines[1:]]
    return degree, gens


def group_to_json(G: FiniteGroup) -> dict:
    return {
        "order": G.order,
        "table": [list(row) for row in G.table],
        "labels": list(G.labels),
        "source_spec": G.source,
    }


def group_from_json(data: dict, order_cap: int = DEFAULT_CONSTRUCTION_CAP) -> FiniteGroup:
    g = from_cayley_table(data["table"], data.get("labels"), order_cap=order_cap)
    return FiniteGroup(g.table, g.identity, g.labels, source=data.get("source_spec", "table"))
