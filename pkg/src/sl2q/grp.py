"""Concrete SL2(q): matrices, enumeration, orders and conjugacy classes.

The class representatives are the standard system

    1, z = -1, c = [[1,0],[1,1]], d = [[1,0],[nu,1]], zc, zd,
    a^l (a = diag(nu, nu^-1), 1 <= l <= (q-3)/2),
    b^m (b an element of order q+1,   1 <= m <= (q-1)/2),

nu the smallest primitive root mod q.  That gives q+4 classes with sizes
1, 1, (q^2-1)/2 (four times), q(q+1) per a-class and q(q-1) per b-class.

Two gauges are involved and both are harmless: any generator nu works
(we fix the smallest), and any element of order q+1 works as b (we fix
the first in a lexicographic scan of matrix entries); changing either
permutes the a-/b-class labels coherently, and every quantity checked
against brute force is invariant under that relabeling.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .fq import FqElem, inverse, is_odd_prime, is_quadratic_residue, primitive_root

__all__ = [
    "GroupElem", "ClassLabel", "ConjClass",
    "ONE", "Z", "C", "D", "ZC", "ZD", "A", "B",
    "identity", "rep_z", "rep_c", "rep_d", "rep_zc", "rep_zd", "rep_a",
    "find_b", "element_order", "enumerate_group", "representatives",
    "class_of", "conjugacy_partition", "class_label_lookup",
    "parse_class_label", "DEFAULT_MAX_ENUM",
]

DEFAULT_MAX_ENUM = 50


class GroupElem:
    """A 2x2 matrix over F_q with determinant 1, rows (a b / c d)."""

    __slots__ = ("q", "a", "b", "c", "d")

    def __init__(self, q: int, a: int, b: int, c: int, d: int):
        if not is_odd_prime(q):
            raise ValueError(f"q must be an odd prime, got {q}")
        a %= q; b %= q; c %= q; d %= q
        if (a * d - b * c) % q != 1:
            raise ValueError(f"determinant must be 1: ({a},{b},{c},{d}) mod {q}")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, val):
        raise AttributeError("GroupElem is immutable")

    def __mul__(self, other: "GroupElem") -> "GroupElem":
        if self.q != other.q:
            raise ValueError(f"mixed moduli {self.q} and {other.q}")
        q = self.q
        return GroupElem(
            q,
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "GroupElem":
        return GroupElem(self.q, self.d, -self.b, -self.c, self.a)

    def __pow__(self, n: int) -> "GroupElem":
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        out = identity(self.q)
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate_by(self, h: "GroupElem") -> "GroupElem":
        return h * self * h.inverse()

    @property
    def trace(self) -> int:
        return (self.a + self.d) % self.q

    def entries(self) -> tuple[FqElem, FqElem, FqElem, FqElem]:
        q = self.q
        return (FqElem(self.a, q), FqElem(self.b, q),
                FqElem(self.c, q), FqElem(self.d, q))

    def to_tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __eq__(self, other):
        return (isinstance(other, GroupElem) and self.q == other.q
                and self.a == other.a and self.b == other.b
                and self.c == other.c and self.d == other.d)

    def __hash__(self):
        return hash((self.q, self.a, self.b, self.c, self.d))

    def __repr__(self):
        return f"GroupElem({self.q}, {self.a}, {self.b}, {self.c}, {self.d})"


@dataclass(frozen=True)
class ClassLabel:
    """Conjugacy-class name: one of 1, z, c, d, zc, zd, a^l, b^m."""
    kind: str
    index: int = 0

    _KINDS = ("1", "z", "c", "d", "zc", "zd", "a", "b")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown class kind {self.kind!r}")
        if self.kind in ("a", "b"):
            if self.index < 1:
                raise ValueError(f"{self.kind}-class index must be >= 1")
        elif self.index:
            raise ValueError(f"class {self.kind!r} carries no index")

    def __str__(self):
        if self.kind in ("a", "b"):
            return f"{self.kind}^{self.index}"
        return self.kind


def parse_class_label(s: str) -> ClassLabel:
    if "^" in s:
        kind, _, idx = s.partition("^")
        return ClassLabel(kind, int(idx))
    return ClassLabel(s)


ONE = ClassLabel("1")
Z = ClassLabel("z")
C = ClassLabel("c")
D = ClassLabel("d")
ZC = ClassLabel("zc")
ZD = ClassLabel("zd")


def A(l: int) -> ClassLabel:
    return ClassLabel("a", l)


def B(m: int) -> ClassLabel:
    return ClassLabel("b", m)


def class_labels(q: int) -> list[ClassLabel]:
    """All q+4 labels, in table order."""
    return ([ONE, Z, C, D, ZC, ZD]
            + [A(l) for l in range(1, (q - 3) // 2 + 1)]
            + [B(m) for m in range(1, (q - 1) // 2 + 1)])


@dataclass(frozen=True)
class ConjClass:
    label: ClassLabel
    representative: GroupElem
    size: int
    element_order: int


# ---------------------------------------------------------------------------
# fixed elements

def identity(q: int) -> GroupElem:
    return GroupElem(q, 1, 0, 0, 1)


def rep_z(q: int) -> GroupElem:
    return GroupElem(q, -1, 0, 0, -1)


def rep_c(q: int) -> GroupElem:
    return GroupElem(q, 1, 0, 1, 1)


def rep_d(q: int) -> GroupElem:
    nu = primitive_root(q).value
    return GroupElem(q, 1, 0, nu, 1)


def rep_zc(q: int) -> GroupElem:
    return rep_z(q) * rep_c(q)


def rep_zd(q: int) -> GroupElem:
    return rep_z(q) * rep_d(q)


def rep_a(q: int) -> GroupElem:
    nu = primitive_root(q)
    return GroupElem(q, nu.value, 0, 0, inverse(nu).value)


def element_order(g: GroupElem) -> int:
    n = 1
    e = identity(g.q)
    h = g
    while h != e:
        h = h * g
        n += 1
    return n


def _lex_tuples(q: int):
    """All determinant-1 tuples (a,b,c,d), ascending lexicographically."""
    inv = [0] * q
    for x in range(1, q):
        inv[x] = pow(x, -1, q)
    for a in range(q):
        if a == 0:
            # bc = -1, d free
            for b in range(1, q):
                c = (-inv[b]) % q
                for d in range(q):
                    yield (0, b, c, d)
        else:
            inv_a = inv[a]
            for b in range(q):
                for c in range(q):
                    yield (a, b, c, (1 + b * c) * inv_a % q)


@lru_cache(maxsize=8)
def enumerate_group(q: int, max_enum: int = DEFAULT_MAX_ENUM) -> tuple[GroupElem, ...]:
    """Every element of SL2(q), exactly once, in a fixed deterministic order."""
    if not is_odd_prime(q):
        raise ValueError(f"q must be an odd prime, got {q}")
    if q > max_enum:
        raise ValueError(
            f"q={q} exceeds the enumeration bound {max_enum}; "
            f"raise it explicitly if you really want the full group "
            f"({q ** 3 - q} elements)")
    return tuple(GroupElem(q, *t) for t in _lex_tuples(q))


@lru_cache(maxsize=None)
def find_b(q: int) -> GroupElem:
    """First element of order q+1 in the lexicographic scan.

    The scan is lazy, so this works far beyond the enumeration bound.
    """
    if not is_odd_prime(q):
        raise ValueError(f"q must be an odd prime, got {q}")
    for t in _lex_tuples(q):
        g = GroupElem(q, *t)
        if element_order(g) == q + 1:
            return g
    raise AssertionError(f"no element of order {q + 1} in SL2({q})")  # unreachable


@lru_cache(maxsize=None)
def representatives(q: int) -> tuple[ConjClass, ...]:
    """The q+4 conjugacy classes: label, representative, size, element order.

    Sizes come from the classical closed forms; orders are computed from
    the actual representatives (and double-checked against the closed
    forms by the verification suite).
    """
    if not is_odd_prime(q):
        raise ValueError(f"q must be an odd prime, got {q}")
    half = (q * q - 1) // 2
    a = rep_a(q)
    b = find_b(q)
    out = [
        ConjClass(ONE, identity(q), 1, 1),
        ConjClass(Z, rep_z(q), 1, 2),
        ConjClass(C, rep_c(q), half, q),
        ConjClass(D, rep_d(q), half, q),
        ConjClass(ZC, rep_zc(q), half, 2 * q),
        ConjClass(ZD, rep_zd(q), half, 2 * q),
    ]
    for l in range(1, (q - 3) // 2 + 1):
        out.append(ConjClass(A(l), a ** l, q * (q + 1), (q - 1) // gcd(l, q - 1)))
    for m in range(1, (q - 1) // 2 + 1):
        out.append(ConjClass(B(m), b ** m, q * (q - 1), (q + 1) // gcd(m, q + 1)))
    return tuple(out)


# ---------------------------------------------------------------------------
# classification

@lru_cache(maxsize=8)
def _class_tables(q: int, max_enum: int):
    """Trace lookups for the split/non-split families plus the orbit of c.

    Non-central elements with trace != +-2 are pinned down by their trace
    alone (eigenvalue pairs are distinct across a- and b-classes); trace
    +-2 splits into two classes of equal size which no polynomial
    invariant separates, so membership in the precomputed conjugation
    orbit of c decides.
    """
    a = rep_a(q)
    b = find_b(q)
    trace_a = {}
    for l in range(1, (q - 3) // 2 + 1):
        trace_a[(a ** l).trace] = l
    trace_b = {}
    for m in range(1, (q - 1) // 2 + 1):
        trace_b[(b ** m).trace] = m
    cg = rep_c(q)
    orbit_c = frozenset(cg.conjugate_by(h) for h in enumerate_group(q, max_enum))
    return trace_a, trace_b, orbit_c


def class_of(g: GroupElem, max_enum: int = DEFAULT_MAX_ENUM) -> ClassLabel:
    """The label of the conjugacy class containing g."""
    q = g.q
    if g.b == 0 and g.c == 0:
        if g.a == 1:
            return ONE
        if g.a == q - 1:
            return Z
    trace_a, trace_b, orbit_c = _class_tables(q, max_enum)
    t = g.trace
    if t == 2:
        return C if g in orbit_c else D
    if t == q - 2:
        return ZC if (rep_z(q) * g) in orbit_c else ZD
    if t in trace_a:
        label = A(trace_a[t])
    elif t in trace_b:
        label = B(trace_b[t])
    else:  # every non-central trace belongs to exactly one family
        raise AssertionError(f"unclassifiable trace {t} mod {q}")
    # consistency: split classes have square discriminant, non-split don't
    disc = (t * t - 4) % q
    assert is_quadratic_residue(FqElem(disc, q)) == (label.kind == "a")
    return label


@lru_cache(maxsize=8)
def conjugacy_partition(q: int, max_enum: int = DEFAULT_MAX_ENUM):
    """Orbit partition {label: frozenset of elements} by direct expansion."""
    G = enumerate_group(q, max_enum)
    pairs = [(h, h.inverse()) for h in G]
    out = {}
    for cls in representatives(q):
        rep = cls.representative
        out[cls.label] = frozenset(h * rep * hinv for h, hinv in pairs)
    return out


@lru_cache(maxsize=8)
def class_label_lookup(q: int, max_enum: int = DEFAULT_MAX_ENUM):
    """Element -> label map derived from the brute-force partition."""
    return {g: label
            for label, orbit in conjugacy_partition(q, max_enum).items()
            for g in orbit}
