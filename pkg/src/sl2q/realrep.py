"""Real-representation structure of SL2(q): Frobenius-Schur indicators,
real conjugacy classes, and the table of irreducible real characters.

The indicator of each irreducible complex character chi is
    iota(chi) = |G|^{-1} sum_g chi(g^2),
computed three independent ways (a closed form, a class-grouped sum via
the square map on classes, and optionally a raw elementwise sum in the
verification module).  The trichotomy:

  * iota = 1 (orthogonal): 1, psi, chi_i and theta_j for even index,
    plus xi_1, xi_2 when q = 1 mod 4;
  * iota = -1 (quaternionic): chi_i, theta_j for odd index, plus
    eta_1, eta_2 when q = 1 mod 4;
  * iota = 0 (complex): all of xi_1, xi_2, eta_1, eta_2 when q = 3 mod 4.

Real irreducible characters are then: the orthogonal rows unchanged,
the quaternionic rows doubled, and each complex-conjugate pair summed.
Since conjugation swaps xi_1 with xi_2 (and eta_1 with eta_2) when
q = 3 mod 4, the paired rows are xi_1 + xi_2 = 2 Re xi_1 and
eta_1 + eta_2 = 2 Re eta_1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from functools import lru_cache

from .chars import (
    CharLabel, CharTable, Chi, ETA1, ETA2, PSI, TRIV, Theta, XI1, XI2,
    complex_table, sym_add, sym_scale, sym_str,
)
from .cyclo import CycNum
from .grp import (
    A, B, C, D, ONE, Z, ZC, ZD,
    ClassLabel, ConjClass, GroupElem, class_labels, class_of,
    DEFAULT_MAX_ENUM,
)

__all__ = [
    "RealCharLabel", "RealCharTable", "RealClassPartition",
    "square_class_map", "inverse_class_map", "real_classes",
    "fs_indicator_brute", "fs_indicator_closed", "fs_indicator_raw",
    "real_table",
    "real_char_labels", "parse_real_char_label",
    "RTRIV", "RPSI", "RXI1", "RXI2", "RTWO_ETA1", "RTWO_ETA2",
    "RTWO_RE_XI1", "RTWO_RE_ETA1",
    "RChiEven", "RTwoChiOdd", "RThetaEven", "RTwoThetaOdd",
]


# ---------------------------------------------------------------------------
# class-level square and inverse maps

def _fold_a(q: int, k: int) -> ClassLabel:
    # exponent k on the torus generator a, |a| = q-1, a^{(q-1)/2} = z
    k %= q - 1
    if k == 0:
        return ONE
    if 2 * k == q - 1:
        return Z
    return A(min(k, q - 1 - k))


def _fold_b(q: int, k: int) -> ClassLabel:
    k %= q + 1
    if k == 0:
        return ONE
    if 2 * k == q + 1:
        return Z
    return B(min(k, q + 1 - k))


@lru_cache(maxsize=None)
def square_class_map(q: int) -> dict:
    """label -> class label of g^2 for g in that class."""
    sq: dict[ClassLabel, ClassLabel] = {ONE: ONE, Z: ONE}
    # unipotent classes: g^2 has trace 2; it lands back in the class of c
    # exactly when 2 is a square mod q, otherwise in the class of d.
    from .fq import FqElem, is_quadratic_residue
    two_qr = is_quadratic_residue(FqElem(2, q))
    sq[C] = C if two_qr else D
    sq[D] = D if two_qr else C
    sq[ZC] = sq[C]
    sq[ZD] = sq[D]
    for l in range(1, (q - 3) // 2 + 1):
        sq[A(l)] = _fold_a(q, 2 * l)
    for m in range(1, (q - 1) // 2 + 1):
        sq[B(m)] = _fold_b(q, 2 * m)
    return sq


@lru_cache(maxsize=None)
def inverse_class_map(q: int) -> dict:
    """label -> class label of g^{-1}.

    Every class is inverse-closed except that c, d (and zc, zd) swap
    when q = 3 mod 4, because -1 is then a non-residue.
    """
    inv = {lab: lab for lab in class_labels(q)}
    if q % 4 == 3:
        inv[C], inv[D] = D, C
        inv[ZC], inv[ZD] = ZD, ZC
    return inv


@dataclass(frozen=True)
class RealClassPartition:
    """Orbits of the inversion map on conjugacy classes."""
    q: int
    blocks: tuple  # tuple[frozenset[ClassLabel], ...] in table order

    @property
    def count(self) -> int:
        return len(self.blocks)


@lru_cache(maxsize=None)
def real_classes(q: int) -> RealClassPartition:
    inv = inverse_class_map(q)
    seen: set[ClassLabel] = set()
    blocks = []
    for lab in class_labels(q):
        if lab in seen:
            continue
        block = frozenset({lab, inv[lab]})
        seen |= block
        blocks.append(block)
    return RealClassPartition(q, tuple(blocks))


# ---------------------------------------------------------------------------
# Frobenius-Schur indicators

def _indicator_from_total(total: CycNum, order: int) -> int:
    v = (total / order).as_rational()
    if v is None or v.denominator != 1 or v not in (-1, 0, 1):
        raise ValueError(f"indicator came out as {v!r}, expected -1, 0 or 1")
    return int(v)


def fs_indicator_brute(table: CharTable, char: CharLabel) -> int:
    """Indicator via the square map on classes:
    sum over classes of |class| * chi(square of the class)."""
    q = table.q
    sq = square_class_map(q)
    acc = None
    for cls in table.classes:
        term = table.value(char, sq[cls.label]) * cls.size
        acc = term if acc is None else acc + term
    return _indicator_from_total(acc, q ** 3 - q)


@lru_cache(maxsize=8)
def _square_label_counts(q: int, max_enum: int):
    """How many g in the whole group have g^2 in each class."""
    from collections import Counter
    from .grp import class_label_lookup, enumerate_group
    lookup = class_label_lookup(q, max_enum)
    return dict(Counter(lookup[g * g] for g in enumerate_group(q, max_enum)))


def fs_indicator_raw(table: CharTable, char: CharLabel,
                     max_enum: int = DEFAULT_MAX_ENUM) -> int:
    """Ground-truth indicator: sum of chi(g^2) over every group element,
    classified through the brute-force orbit partition."""
    q = table.q
    acc = None
    for lab, cnt in _square_label_counts(q, max_enum).items():
        term = table.value(char, lab) * cnt
        acc = term if acc is None else acc + term
    return _indicator_from_total(acc, q ** 3 - q)


def fs_indicator_closed(table: CharTable, char: CharLabel) -> int:
    """Closed-form indicator.

    Grouping the elementwise sum by the square-map fibres gives
      iota = (2 chi(1) + K chi(z) + (q^2-1)(chi(c) + chi(d))
              + 2q(q+1) sum_{l<= (q-3)/4} chi(a^{2l})
              + 2q(q-1) sum_{m<= (q-1)/4} chi(b^{2m})) / (q^3 - q)
    with K = q^2+q for q = 1 mod 4 and K = q^2-q for q = 3 mod 4.
    """
    q = table.q
    K = q * q + q if q % 4 == 1 else q * q - q
    val = table.value
    acc = (val(char, ONE) * 2 + val(char, Z) * K
           + (val(char, C) + val(char, D)) * (q * q - 1))
    for l in range(1, (q - 3) // 4 + 1):
        acc = acc + val(char, A(2 * l)) * (2 * q * (q + 1))
    for m in range(1, (q - 1) // 4 + 1):
        acc = acc + val(char, B(2 * m)) * (2 * q * (q - 1))
    return _indicator_from_total(acc, q ** 3 - q)


# ---------------------------------------------------------------------------
# real character labels

@dataclass(frozen=True)
class RealCharLabel:
    """Row name in the real table.

    Kinds: "triv", "psi", "chi_even", "two_chi_odd", "theta_even",
    "two_theta_odd", "xi1", "xi2", "two_eta1", "two_eta2",
    "two_re_xi1", "two_re_eta1".  For the chi/theta kinds ``index`` is
    the index of the underlying complex character.
    """
    kind: str
    index: int = 0

    _KINDS = ("triv", "psi", "chi_even", "two_chi_odd",
              "theta_even", "two_theta_odd",
              "xi1", "xi2", "two_eta1", "two_eta2",
              "two_re_xi1", "two_re_eta1")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown real character kind {self.kind!r}")
        if self.kind in ("chi_even", "theta_even"):
            if self.index < 2 or self.index % 2:
                raise ValueError(f"{self.kind} needs an even index >= 2")
        elif self.kind in ("two_chi_odd", "two_theta_odd"):
            if self.index < 1 or self.index % 2 == 0:
                raise ValueError(f"{self.kind} needs an odd index >= 1")
        elif self.index:
            raise ValueError(f"real character {self.kind!r} carries no index")

    def __str__(self):
        return {
            "triv": "1", "psi": "psi",
            "chi_even": f"chi_{self.index}",
            "two_chi_odd": f"2chi_{self.index}",
            "theta_even": f"theta_{self.index}",
            "two_theta_odd": f"2theta_{self.index}",
            "xi1": "xi_1", "xi2": "xi_2",
            "two_eta1": "2eta_1", "two_eta2": "2eta_2",
            "two_re_xi1": "2Re(xi_1)", "two_re_eta1": "2Re(eta_1)",
        }[self.kind]


def parse_real_char_label(s: str) -> RealCharLabel:
    fixed = {"1": "triv", "psi": "psi", "xi_1": "xi1", "xi_2": "xi2",
             "2eta_1": "two_eta1", "2eta_2": "two_eta2",
             "2Re(xi_1)": "two_re_xi1", "2Re(eta_1)": "two_re_eta1"}
    if s in fixed:
        return RealCharLabel(fixed[s])
    for prefix, even_kind, odd_kind in (
            ("chi_", "chi_even", None), ("2chi_", None, "two_chi_odd"),
            ("theta_", "theta_even", None), ("2theta_", None, "two_theta_odd")):
        if s.startswith(prefix):
            idx = int(s[len(prefix):])
            kind = even_kind if idx % 2 == 0 else odd_kind
            if kind is None:
                raise ValueError(f"index parity does not match in {s!r}")
            return RealCharLabel(kind, idx)
    raise ValueError(f"cannot parse real character label {s!r}")


RTRIV = RealCharLabel("triv")
RPSI = RealCharLabel("psi")
RXI1 = RealCharLabel("xi1")
RXI2 = RealCharLabel("xi2")
RTWO_ETA1 = RealCharLabel("two_eta1")
RTWO_ETA2 = RealCharLabel("two_eta2")
RTWO_RE_XI1 = RealCharLabel("two_re_xi1")
RTWO_RE_ETA1 = RealCharLabel("two_re_eta1")


def RChiEven(i: int) -> RealCharLabel:
    return RealCharLabel("chi_even", i)


def RTwoChiOdd(i: int) -> RealCharLabel:
    return RealCharLabel("two_chi_odd", i)


def RThetaEven(j: int) -> RealCharLabel:
    return RealCharLabel("theta_even", j)


def RTwoThetaOdd(j: int) -> RealCharLabel:
    return RealCharLabel("two_theta_odd", j)


def real_char_labels(q: int) -> list[RealCharLabel]:
    """Row labels of the real table, in table order."""
    chi_max = (q - 3) // 2
    theta_max = (q - 1) // 2
    rows = [RTRIV, RPSI]
    rows += [RChiEven(i) for i in range(2, chi_max + 1, 2)]
    rows += [RTwoChiOdd(i) for i in range(1, chi_max + 1, 2)]
    rows += [RThetaEven(j) for j in range(2, theta_max + 1, 2)]
    rows += [RTwoThetaOdd(j) for j in range(1, theta_max + 1, 2)]
    if q % 4 == 1:
        rows += [RXI1, RXI2, RTWO_ETA1, RTWO_ETA2]
    else:
        rows += [RTWO_RE_XI1, RTWO_RE_ETA1]
    return rows


# ---------------------------------------------------------------------------

class RealCharTable:
    """Characters of the irreducible real representations.

    Values are recorded on all q+4 complex class labels; when q = 3
    mod 4 they are constant on the merged real classes {c,d} and
    {zc,zd}.  ``source`` maps each row to the complex characters (with
    multiplicities) it is built from.
    """

    def __init__(self, q: int, epsilon: int, conductor: int,
                 classes: tuple[ConjClass, ...],
                 labels: tuple[RealCharLabel, ...],
                 values: dict, symbolic: dict | None, source: dict):
        self.q = q
        self.epsilon = epsilon
        self.conductor = conductor
        self.classes = classes
        self.labels = labels
        self.values = values
        self.symbolic = symbolic
        self.source = source

    def value(self, char: RealCharLabel, label: ClassLabel) -> CycNum:
        return self.values[(char, label)]

    def degree(self, char: RealCharLabel) -> int:
        return self.value(char, ONE).as_integer()

    def value_at(self, char: RealCharLabel, g: GroupElem,
                 max_enum: int = DEFAULT_MAX_ENUM) -> CycNum:
        if g.q != self.q:
            raise ValueError(f"element of SL2({g.q}) in a table for SL2({self.q})")
        return self.value(char, class_of(g, max_enum))

    @property
    def class_order(self) -> list[ClassLabel]:
        return [cls.label for cls in self.classes]

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "epsilon": self.epsilon,
            "conductor": self.conductor,
            "classes": [
                {"label": str(c.label),
                 "representative": list(c.representative.to_tuple()),
                 "size": c.size, "order": c.element_order}
                for c in self.classes
            ],
            "chars": [str(ch) for ch in self.labels],
            "values": {
                str(ch): {str(lab): self.value(ch, lab).to_json()
                          for lab in self.class_order}
                for ch in self.labels
            },
            "symbolic": None if self.symbolic is None else {
                str(ch): {str(lab): sym_str(self.symbolic[(ch, lab)])
                          for lab in self.class_order}
                for ch in self.labels
            },
            "source": {str(ch): [[str(c), m] for c, m in self.source[ch]]
                       for ch in self.labels},
        }

    @classmethod
    def from_json(cls, obj: dict) -> "RealCharTable":
        from .chars import parse_char_label
        from .grp import parse_class_label
        q = obj["q"]
        classes = tuple(
            ConjClass(parse_class_label(c["label"]),
                      GroupElem(q, *c["representative"]),
                      c["size"], c["order"])
            for c in obj["classes"])
        labels = tuple(parse_real_char_label(s) for s in obj["chars"])
        values = {
            (ch, cls.label): CycNum.from_json(obj["values"][str(ch)][str(cls.label)])
            for ch in labels for cls in classes
        }
        source = {ch: tuple((parse_char_label(c), m)
                            for c, m in obj["source"][str(ch)])
                  for ch in labels}
        return cls(q, obj["epsilon"], obj["conductor"], classes, labels,
                   values, None, source)

    def __eq__(self, other):
        if not isinstance(other, RealCharTable):
            return NotImplemented
        return (self.q == other.q and self.classes == other.classes
                and self.labels == other.labels
                and all(self.value(ch, lab) == other.value(ch, lab)
                        for ch in self.labels for lab in self.class_order))


@lru_cache(maxsize=None)
def real_table(q: int) -> RealCharTable:
    ct = complex_table(q)
    labels = tuple(real_char_labels(q))
    # each real row = sum of complex rows with multiplicity
    recipe: dict[RealCharLabel, tuple] = {}
    for lab in labels:
        if lab.kind == "triv":
            recipe[lab] = ((TRIV, 1),)
        elif lab.kind == "psi":
            recipe[lab] = ((PSI, 1),)
        elif lab.kind == "chi_even":
            recipe[lab] = ((Chi(lab.index), 1),)
        elif lab.kind == "two_chi_odd":
            recipe[lab] = ((Chi(lab.index), 2),)
        elif lab.kind == "theta_even":
            recipe[lab] = ((Theta(lab.index), 1),)
        elif lab.kind == "two_theta_odd":
            recipe[lab] = ((Theta(lab.index), 2),)
        elif lab.kind == "xi1":
            recipe[lab] = ((XI1, 1),)
        elif lab.kind == "xi2":
            recipe[lab] = ((XI2, 1),)
        elif lab.kind == "two_eta1":
            recipe[lab] = ((ETA1, 2),)
        elif lab.kind == "two_eta2":
            recipe[lab] = ((ETA2, 2),)
        elif lab.kind == "two_re_xi1":
            recipe[lab] = ((XI1, 1), (XI2, 1))
        elif lab.kind == "two_re_eta1":
            recipe[lab] = ((ETA1, 1), (ETA2, 1))
        else:  # pragma: no cover
            raise AssertionError(lab.kind)

    values = {}
    symbolic = {}
    for lab in labels:
        for cls_lab in class_labels(q):
            acc_v = None
            acc_s = None
            for src, mult in recipe[lab]:
                v = ct.value(src, cls_lab) * mult
                s = sym_scale(ct.symbolic[(src, cls_lab)], mult)
                acc_v = v if acc_v is None else acc_v + v
                acc_s = s if acc_s is None else sym_add(acc_s, s)
            values[(lab, cls_lab)] = acc_v
            symbolic[(lab, cls_lab)] = acc_s

    return RealCharTable(q, ct.epsilon, ct.conductor, ct.classes, labels,
                         values, symbolic, recipe)
