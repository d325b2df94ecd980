"""Named group families and their normal-form constructions.

Every two-generator family here is materialized on normal forms a^s b^t
(index s*M + t) with multiplication derived from the defining relation
b a b^-1 = a^r and b^M = a^w, so no generic presentation solver is needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .errors import InvalidParameters, OrderCapExceeded
from .groups import DEFAULT_CONSTRUCTION_CAP, FiniteGroup, _is_prime, _row_array


@dataclass(frozen=True)
class Cyclic:
    n: int


@dataclass(frozen=True)
class Dihedral:
    order: int  # 2n


@dataclass(frozen=True)
class GeneralizedQuaternion:
    order: int  # 2^m, m >= 3


@dataclass(frozen=True)
class Semidihedral16:
    pass


@dataclass(frozen=True)
class Modular:
    p: int
    m: int  # order p^m, m >= 3


@dataclass(frozen=True)
class MetacyclicPQ:
    """Z_p x| Z_{q^n} with b a b^-1 = a^i, where ord_p(i) = q and q | p-1."""

    p: int
    q: int
    n: int
    i: int


@dataclass(frozen=True)
class FrobeniusP2Q:
    """(Z_p x Z_p) x| Z_q; the matrix (i j; k l) has order q > 2 in GL2(p)."""

    p: int
    q: int
    i: int
    j: int
    k: int
    l: int


FamilySpec = Union[
    Cyclic, Dihedral, GeneralizedQuaternion, Semidihedral16, Modular, MetacyclicPQ, FrobeniusP2Q
]


def family_order(spec: FamilySpec) -> int:
    if isinstance(spec, Cyclic):
        return spec.n
    if isinstance(spec, (Dihedral, GeneralizedQuaternion)):
        return spec.order
    if isinstance(spec, Semidihedral16):
        return 16
    if isinstance(spec, Modular):
        return spec.p**spec.m
    if isinstance(spec, MetacyclicPQ):
        return spec.p * spec.q**spec.n
    if isinstance(spec, FrobeniusP2Q):
        return spec.p * spec.p * spec.q
    raise InvalidParameters(f"unknown family spec {spec!r}")


def spec_string(spec: FamilySpec) -> str:
    if isinstance(spec, Cyclic):
        return f"cyclic:{spec.n}"
    if isinstance(spec, Dihedral):
        return f"dihedral:{spec.order}"
    if isinstance(spec, GeneralizedQuaternion):
        return f"quaternion:{spec.order}"
    if isinstance(spec, Semidihedral16):
        return "qd16"
    if isinstance(spec, Modular):
        return f"modular:p={spec.p},m={spec.m}"
    if isinstance(spec, MetacyclicPQ):
        return f"metacyclic:p={spec.p},q={spec.q},n={spec.n},i={spec.i}"
    return (
        f"frobenius:p={spec.p},q={spec.q},"
        f"i={spec.i},j={spec.j},k={spec.k},l={spec.l}"
    )


def construct_family(
    spec: FamilySpec, order_cap: int = DEFAULT_CONSTRUCTION_CAP
) -> FiniteGroup:
    """Build the group presented by ``spec``; labels are normal-form words."""
    _validate(spec)
    n = family_order(spec)
    if n > order_cap:
        raise OrderCapExceeded(
            f"family order {n} exceeds construction cap {order_cap}", order_cap, n
        )
    if isinstance(spec, Cyclic):
        return _cyclic_group(spec.n, spec_string(spec))
    if isinstance(spec, FrobeniusP2Q):
        return _frobenius_group(spec)
    big_n, m, r, w = _presentation_constants(spec)
    return _metacyclic_table(big_n, m, r, w, spec_string(spec))


def _validate(spec: FamilySpec) -> None:
    if isinstance(spec, Cyclic):
        if spec.n < 1:
            raise InvalidParameters("cyclic order must be at least 1")
    elif isinstance(spec, Dihedral):
        if spec.order < 2 or spec.order % 2:
            raise InvalidParameters("dihedral order must be even and at least 2")
    elif isinstance(spec, GeneralizedQuaternion):
        o = spec.order
        if o < 8 or o & (o - 1):
            raise InvalidParameters(
                "generalized quaternion order must be a power of two, at least 8"
            )
    elif isinstance(spec, Modular):
        if not _is_prime(spec.p):
            raise InvalidParameters(f"{spec.p} is not prime")
        if spec.m < 3:
            raise InvalidParameters("modular groups need exponent m >= 3")
    elif isinstance(spec, MetacyclicPQ):
        p, q, nn, i = spec.p, spec.q, spec.n, spec.i
        if not (_is_prime(p) and _is_prime(q)) or p == q:
            raise InvalidParameters(f"need distinct primes, got p={p}, q={q}")
        if nn < 1:
            raise InvalidParameters("exponent n must be at least 1")
        if (p - 1) % q:
            raise InvalidParameters(f"q={q} does not divide p-1={p - 1}")
        if multiplicative_order(i, p) != q:
            raise InvalidParameters(
                f"ord_{p}({i}) = {multiplicative_order(i, p)}, expected {q}"
            )
    elif isinstance(spec, FrobeniusP2Q):
        p, q = spec.p, spec.q
        if not (_is_prime(p) and _is_prime(q)) or p == q:
            raise InvalidParameters(f"need distinct primes, got p={p}, q={q}")
        if q <= 2:
            raise InvalidParameters("the acting matrix must have order q > 2")
        if (p + 1) % q:
            raise InvalidParameters(f"q={q} does not divide p+1={p + 1}")
        mat = ((spec.i % p, spec.j % p), (spec.k % p, spec.l % p))
        o = _matrix_order(mat, p)
        if o != q:
            raise InvalidParameters(
                f"matrix {mat} has order {o} in GL2({p}), expected {q}"
            )


def multiplicative_order(i: int, p: int) -> int:
    i %= p
    if i == 0:
        return 0
    k, x = 1, i
    while x != 1:
        x = x * i % p
        k += 1
    return k


def _mat_mul(a, b, p):
    return (
        (
            (a[0][0] * b[0][0] + a[0][1] * b[1][0]) % p,
            (a[0][0] * b[0][1] + a[0][1] * b[1][1]) % p,
        ),
        (
            (a[1][0] * b[0][0] + a[1][1] * b[1][0]) % p,
            (a[1][0] * b[0][1] + a[1][1] * b[1][1]) % p,
        ),
    )


def _matrix_order(mat, p) -> int:
    det = (mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]) % p
    if det == 0:
        return 0
    ident = ((1, 0), (0, 1))
    x = mat
    k = 1
    bound = (p * p - 1) * (p * p - p)
    while x != ident:
        x = _mat_mul(x, mat, p)
        k += 1
        if k > bound:  # pragma: no cover - unreachable for invertible matrices
            return 0
    return k


@lru_cache(maxsize=None)
def canonical_frobenius_matrix(p: int, q: int) -> tuple[int, int, int, int]:
    """Lexicographically first matrix of order q in GL2(p)."""
    for i in range(p):
        for j in range(p):
            for k in range(p):
                for l in range(p):
                    if _matrix_order(((i, j), (k, l)), p) == q:
                        return (i, j, k, l)
    raise InvalidParameters(f"GL2({p}) has no element of order {q}")


def canonical_metacyclic_i(p: int, q: int) -> int:
    """Smallest i with multiplicative order exactly q mod p."""
    for i in range(2, p):
        if multiplicative_order(i, p) == q:
            return i
    raise InvalidParameters(f"no residue of order {q} mod {p}")


def _presentation_constants(spec: FamilySpec) -> tuple[int, int, int, int]:
    """(N, M, r, w) for normal forms a^s b^t: b a b^-1 = a^r, b^M = a^w."""
    if isinstance(spec, Dihedral):
        n = spec.order // 2
        return n, 2, (n - 1) % n, 0
    if isinstance(spec, GeneralizedQuaternion):
        n = spec.order // 2
        return n, 2, n - 1, n // 2
    if isinstance(spec, Semidihedral16):
        return 8, 2, 3, 0
    if isinstance(spec, Modular):
        n = spec.p ** (spec.m - 1)
        return n, spec.p, spec.p ** (spec.m - 2) + 1, 0
    if isinstance(spec, MetacyclicPQ):
        return spec.p, spec.q**spec.n, spec.i % spec.p, 0
    raise InvalidParameters(f"no presentation constants for {spec!r}")


def _metacyclic_table(big_n: int, m: int, r: int, w: int, source: str) -> FiniteGroup:
    order = big_n * m
    r_pow = [1] * m
    for t in range(1, m):
        r_pow[t] = r_pow[t - 1] * r % big_n
    rows = []
    for s1 in range(big_n):
        for t1 in range(m):
            rp = r_pow[t1]
            row = _row_array(
                order,
                (
                    ((s1 + s2 * rp + w * ((t1 + t2) // m)) % big_n) * m
                    + (t1 + t2) % m
                    for s2 in range(big_n)
                    for t2 in range(m)
                ),
            )
            rows.append(row)
    labels = tuple(
        _word_label((("a", s), ("b", t))) for s in range(big_n) for t in range(m)
    )
    return FiniteGroup(rows, 0, labels, source=source)


def _cyclic_group(n: int, source: str) -> FiniteGroup:
    rows = [_row_array(n, ((i + j) % n for j in range(n))) for i in range(n)]
    labels = tuple(_word_label((("a", i),)) for i in range(n))
    return FiniteGroup(rows, 0, labels, source=source)


def _frobenius_group(spec: FrobeniusP2Q) -> FiniteGroup:
    p, q = spec.p, spec.q
    mat = ((spec.i % p, spec.j % p), (spec.k % p, spec.l % p))
    powers = [((1, 0), (0, 1))]
    for _ in range(1, q):
        powers.append(_mat_mul(powers[-1], mat, p))
    order = p * p * q

    def index(x: int, y: int, z: int) -> int:
        return (x * p + y) * q + z

    rows = []
    for x1 in range(p):
        for y1 in range(p):
            for z1 in range(q):
                mz = powers[z1]
                row = _row_array(
                    order,
                    (
                        index(
                            (x1 + x2 * mz[0][0] + y2 * mz[1][0]) % p,
                            (y1 + x2 * mz[0][1] + y2 * mz[1][1]) % p,
                            (z1 + z2) % q,
                        )
                        for x2 in range(p)
                        for y2 in range(p)
                        for z2 in range(q)
                    ),
                )
                rows.append(row)
    labels = tuple(
        _word_label((("a", x), ("b", y), ("c", z)))
        for x in range(p)
        for y in range(p)
        for z in range(q)
    )
    return FiniteGroup(rows, 0, labels, source=spec_string(spec))


def _word_label(parts: tuple[tuple[str, int], ...]) -> str:
    words = []
    for sym, e in parts:
        if e == 1:
            words.append(sym)
        elif e > 1:
            words.append(f"{sym}^{e}")
    return " ".join(words) if words else "e"


# ---------------------------------------------------------------------------
# Spec strings ("cyclic:30", "modular:p=2,m=4", ...)
# ---------------------------------------------------------------------------


def parse_family_spec(text: str) -> FamilySpec:
    """Parse a family spec string as used by the CLI and corpus files."""
    head, _, rest = text.strip().lower().partition(":")
    kv = _parse_kv(rest)
    try:
        if head in ("cyclic", "z"):
            return Cyclic(kv.get("n", _sole_int(rest)))
        if head in ("dihedral", "d"):
            return Dihedral(kv.get("order", _sole_int(rest)))
        if head in ("quaternion", "q"):
            return GeneralizedQuaternion(kv.get("order", _sole_int(rest)))
        if head in ("qd16", "semidihedral16"):
            return Semidihedral16()
        if head == "modular":
            return Modular(kv["p"], kv["m"])
        if head == "metacyclic":
            p, q = kv["p"], kv["q"]
            return MetacyclicPQ(p, q, kv.get("n", 1), kv.get("i", canonical_metacyclic_i(p, q)))
        if head == "frobenius":
            p, q = kv["p"], kv["q"]
            if all(c in kv for c in "ijkl"):
                return FrobeniusP2Q(p, q, kv["i"], kv["j"], kv["k"], kv["l"])
            mat = canonical_frobenius_matrix(p, q)
            return FrobeniusP2Q(p, q, *mat)
    except (KeyError, ValueError) as exc:
        raise InvalidParameters(f"bad family spec {text!r}: {exc}") from exc
    raise InvalidParameters(f"unknown family {head!r} in spec {text!r}")


def _parse_kv(rest: str) -> dict[str, int]:
    out: dict[str, int] = {}
    for part in filter(None, (s.strip() for s in rest.split(","))):
        if "=" in part:
            key, _, val = part.partition("=")
            out[key.strip()] = int(val)
    return out


def _sole_int(rest: str) -> int:
    value = rest.strip()
    if not value or "=" in value or "," in value:
        raise ValueError(f"expected a single integer, got {rest!r}")
    return int(value)
