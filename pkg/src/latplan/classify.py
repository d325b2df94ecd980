"""Recognition of the finite planar-group families, and finite truncations
of the planar infinite abelian families.

Recognition is screen-then-confirm: candidate families are selected by
order shape and abelian invariants, then confirmed by an isomorphism test
against a concretely constructed candidate. Abelian groups are decided by
invariant factors alone, which is a complete isomorphism invariant.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .errors import InvalidParameters, OrderCapExceeded
from .families import (
    Cyclic,
    FrobeniusP2Q,
    GeneralizedQuaternion,
    MetacyclicPQ,
    Modular,
    Semidihedral16,
    canonical_frobenius_matrix,
    canonical_metacyclic_i,
    construct_family,
    parse_family_spec,
)
from .graphs import SimpleGraph, graph_from_edges
from .groups import (
    DEFAULT_CONSTRUCTION_CAP,
    FiniteGroup,
    _factorize,
    _is_prime,
    abelian_invariants,
    are_isomorphic,
    direct_product,
)
from .lattice import DEFAULT_LATTICE_CAP

TRIVIAL = "Trivial"
CYCLIC_PRIME_POWER = "CyclicPrimePower"
CYCLIC_PM_QN = "CyclicPmQn"
CYCLIC_PM_Q_R = "CyclicPmQR"
PM_TIMES_P = "PmTimesP"
Q8_FAMILY = "Q8"
Q16_FAMILY = "Q16"
QD16_FAMILY = "QD16"
MODULAR = "Modular"
METACYCLIC_PQN = "MetacyclicPQn"
FROBENIUS_P2Q = "FrobeniusP2Q"
NOT_IN_LIST = "NotInList"


@dataclass(frozen=True)
class FamilyTag:
    family: str
    parameters: tuple[tuple[str, int], ...] = ()

    def param(self, name: str) -> int:
        for key, value in self.parameters:
            if key == name:
                return value
        raise KeyError(name)

    def to_json(self) -> dict:
        return {"family": self.family, "parameters": dict(self.parameters)}


def _tag(family: str, **params: int) -> FamilyTag:
    return FamilyTag(family, tuple(sorted(params.items())))


def classify(G: FiniteGroup, order_cap: int = DEFAULT_LATTICE_CAP) -> FamilyTag:
    """Match G against the finite planar-group families."""
    if G.order > order_cap:
        raise OrderCapExceeded(
            f"order {G.order} exceeds classification cap {order_cap}",
            order_cap,
            G.order,
        )
    if G.order == 1:
        return _tag(TRIVIAL)
    if G.is_abelian:
        return _classify_abelian(G)
    return _classify_nonabelian(G)


def _classify_abelian(G: FiniteGroup) -> FamilyTag:
    inv = abelian_invariants(G)
    if len(inv) == 1:
        factors = sorted(_factorize(inv[0]).items())  # [(prime, exponent)]
        if len(factors) == 1:
            (p, m), = factors
            return _tag(CYCLIC_PRIME_POWER, p=p, m=m)
        if len(factors) == 2:
            # canonical choice: the p^m part carries the larger exponent
            (p1, m1), (p2, m2) = factors
            if m2 > m1:
                (p1, m1), (p2, m2) = (p2, m2), (p1, m1)
            return _tag(CYCLIC_PM_QN, p=p1, m=m1, q=p2, n=m2)
        if len(factors) == 3:
            exps = sorted(factors, key=lambda it: (-it[1], it[0]))
            (p, m), (q, eq), (r, er) = exps
            if eq == 1 and er == 1:
                if q > r:
                    q, r = r, q
                return _tag(CYCLIC_PM_Q_R, p=p, m=m, q=q, r=r)
        return _tag(NOT_IN_LIST)
    if len(inv) == 2:
        d1, d2 = inv
        if _is_prime(d2):
            factors = _factorize(d1)
            if len(factors) == 1 and d2 in factors:
                return _tag(PM_TIMES_P, p=d2, m=factors[d2])
    return _tag(NOT_IN_LIST)


def _candidate_specs(order: int):
    """Non-abelian family candidates matching the order shape, in the
    fixed confirmation order."""
    if order == 8:
        yield _tag(Q8_FAMILY), GeneralizedQuaternion(8)
    if order == 16:
        yield _tag(Q16_FAMILY), GeneralizedQuaternion(16)
        yield _tag(QD16_FAMILY), Semidihedral16()
    factors = sorted(_factorize(order).items())
    if len(factors) == 1:
        (p, m), = factors
        if m >= 3:
            yield _tag(MODULAR, p=p, m=m), Modular(p, m)
    if len(factors) == 2:
        for (p, ep), (q, eq) in (factors, factors[::-1]):
            if ep == 1 and (p - 1) % q == 0 and q >= 2:
                i = canonical_metacyclic_i(p, q)
                yield (
                    _tag(METACYCLIC_PQN, p=p, q=q, n=eq),
                    MetacyclicPQ(p, q, eq, i),
                )
        for (p, ep), (q, eq) in (factors, factors[::-1]):
            if ep == 2 and eq == 1 and q > 2 and (p + 1) % q == 0:
                mat = canonical_frobenius_matrix(p, q)
                yield (
                    _tag(FROBENIUS_P2Q, p=p, q=q),
                    FrobeniusP2Q(p, q, *mat),
                )


def _classify_nonabelian(G: FiniteGroup) -> FamilyTag:
    for tag, spec in _candidate_specs(G.order):
        candidate = construct_family(spec, order_cap=max(G.order, DEFAULT_CONSTRUCTION_CAP))
        if are_isomorphic(G, candidate, order_cap=max(G.order, 64)):
            return tag
    return _tag(NOT_IN_LIST)


def predicted_planar(tag: FamilyTag) -> bool:
    """Theorem-level prediction: recognized families are exactly the planar ones."""
    return tag.family != NOT_IN_LIST


def predicted_outerplanar(tag: FamilyTag) -> bool:
    """Outer-planar families: trivial, cyclic prime power, and Z_{p^m q}."""
    if tag.family in (TRIVIAL, CYCLIC_PRIME_POWER):
        return True
    return tag.family == CYCLIC_PM_QN and tag.param("n") == 1


# ---------------------------------------------------------------------------
# Truncations of the planar infinite families
# ---------------------------------------------------------------------------

PRUFER = "Prufer"
PRUFER_TIMES_P = "PruferTimesP"
PRUFER_TIMES_QM = "PruferTimesQm"
PRUFER_TIMES_PRUFER = "PruferTimesPrufer"
PRUFER_TIMES_Q_TIMES_R = "PruferTimesQTimesR"
TARSKI_LATTICE = "TarskiLattice"

GROUP_FAMILIES = (
    PRUFER,
    PRUFER_TIMES_P,
    PRUFER_TIMES_QM,
    PRUFER_TIMES_PRUFER,
    PRUFER_TIMES_Q_TIMES_R,
)


@dataclass(frozen=True)
class InfiniteFamilySpec:
    """A planar infinite family plus a truncation depth."""

    family: str
    level: int
    p: int = 0
    q: int = 0
    r: int = 0
    m: int = 0


def _check_infinite_spec(spec: InfiniteFamilySpec) -> None:
    if spec.level < 1:
        raise InvalidParameters("truncation level must be at least 1")
    if spec.family == TARSKI_LATTICE:
        return
    if spec.family not in GROUP_FAMILIES:
        raise InvalidParameters(f"unknown infinite family {spec.family!r}")
    primes = [spec.p]
    if spec.family in (PRUFER_TIMES_QM, PRUFER_TIMES_PRUFER, PRUFER_TIMES_Q_TIMES_R):
        primes.append(spec.q)
    if spec.family == PRUFER_TIMES_Q_TIMES_R:
        primes.append(spec.r)
    for p in primes:
        if not _is_prime(p):
            raise InvalidParameters(f"{p} is not prime")
    if len(set(primes)) != len(primes):
        raise InvalidParameters(f"primes must be distinct, got {primes}")
    if spec.family == PRUFER_TIMES_QM and spec.m < 1:
        raise InvalidParameters("exponent m must be at least 1")


def truncation_order(spec: InfiniteFamilySpec) -> int:
    n = spec.level
    if spec.family == PRUFER:
        return spec.p**n
    if spec.family == PRUFER_TIMES_P:
        return spec.p ** (n + 1)
    if spec.family == PRUFER_TIMES_QM:
        return spec.p**n * spec.q**spec.m
    if spec.family == PRUFER_TIMES_PRUFER:
        return spec.p**n * spec.q**n
    if spec.family == PRUFER_TIMES_Q_TIMES_R:
        return spec.p**n * spec.q * spec.r
    raise InvalidParameters(f"{spec.family!r} does not truncate to a group")


def truncate_infinite_family(
    spec: InfiniteFamilySpec, order_cap: int = DEFAULT_CONSTRUCTION_CAP
) -> Union[FiniteGroup, SimpleGraph]:
    """Level-n member of the tower; Tarski truncations come back as graphs
    (no finite group realizes that lattice shape)."""
    _check_infinite_spec(spec)
    if spec.family == TARSKI_LATTICE:
        return tarski_truncation_graph(spec.level)
    n = truncation_order(spec)
    if n > order_cap:
        raise OrderCapExceeded(
            f"truncation order {n} exceeds cap {order_cap}", order_cap, n
        )
    level = spec.level
    if spec.family == PRUFER:
        return construct_family(Cyclic(spec.p**level), order_cap=order_cap)
    if spec.family == PRUFER_TIMES_P:
        return direct_product(
            construct_family(Cyclic(spec.p**level), order_cap=order_cap),
            construct_family(Cyclic(spec.p), order_cap=order_cap),
            order_cap=order_cap,
        )
    if spec.family == PRUFER_TIMES_QM:
        return direct_product(
            construct_family(Cyclic(spec.p**level), order_cap=order_cap),
            construct_family(Cyclic(spec.q**spec.m), order_cap=order_cap),
            order_cap=order_cap,
        )
    if spec.family == PRUFER_TIMES_PRUFER:
        return direct_product(
            construct_family(Cyclic(spec.p**level), order_cap=order_cap),
            construct_family(Cyclic(spec.q**level), order_cap=order_cap),
            order_cap=order_cap,
        )
    # PruferTimesQTimesR
    pq = direct_product(
        construct_family(Cyclic(spec.p**level), order_cap=order_cap),
        construct_family(Cyclic(spec.q), order_cap=order_cap),
        order_cap=order_cap,
    )
    return direct_product(
        pq, construct_family(Cyclic(spec.r), order_cap=order_cap), order_cap=order_cap
    )


def tarski_truncation_graph(n_atoms: int) -> SimpleGraph:
    """Bottom, top, and n atoms: every atom covers bottom and is covered by
    top, the K_{2,n} shape of a Tarski group's subgroup graph."""
    if n_atoms < 1:
        raise InvalidParameters("need at least one atom")
    bottom, top = 0, n_atoms + 1
    edges = set()
    for i in range(1, n_atoms + 1):
        edges.add((bottom, i))
        edges.add((i, top))
    labels = ("1",) + tuple(f"C{i}" for i in range(1, n_atoms + 1)) + ("T",)
    return SimpleGraph(n_atoms + 2, frozenset(edges), labels=labels)


# ---------------------------------------------------------------------------
# Spec strings
# ---------------------------------------------------------------------------

_INFINITE_HEADS = {
    "prufer": PRUFER,
    "prufer_times_p": PRUFER_TIMES_P,
    "prufer_times_qm": PRUFER_TIMES_QM,
    "prufer_times_prufer": PRUFER_TIMES_PRUFER,
    "prufer_times_q_times_r": PRUFER_TIMES_Q_TIMES_R,
    "tarski": TARSKI_LATTICE,
}


def parse_infinite_spec(text: str) -> InfiniteFamilySpec:
    """Parse e.g. ``prufer:p=2,level=3`` or ``tarski:level=4``."""
    head, _, rest = text.strip().lower().partition(":")
    if head not in _INFINITE_HEADS:
        raise InvalidParameters(f"unknown infinite family {head!r}")
    kv: dict[str, int] = {}
    for part in filter(None, (s.strip() for s in rest.split(","))):
        key, _, val = part.partition("=")
        try:
            kv[key.strip()] = int(val)
        except ValueError as exc:
            raise InvalidParameters(f"bad value in spec {text!r}") from exc
    level = kv.get("level", kv.get("n", 0))
    spec = InfiniteFamilySpec(
        family=_INFINITE_HEADS[head],
        level=level,
        p=kv.get("p", 0),
        q=kv.get("q", 0),
        r=kv.get("r", 0),
        m=kv.get("m", 0),
    )
    _check_infinite_spec(spec)
    return spec


def parse_any_spec(text: str):
    """Family spec or infinite-family spec, whichever parses."""
    head = text.strip().lower().partition(":")[0]
    if head in _INFINITE_HEADS:
        return parse_infinite_spec(text)
    return parse_family_spec(text)
