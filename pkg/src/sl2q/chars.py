"""The complex irreducible character table of SL2(q), exactly.

Rows (the classical table, see Dornhoff, Group Representation Theory,
Thm 38.1): the trivial character, the Steinberg character psi of degree
q, principal-series chi_i of degree q+1, discrete-series theta_j of
degree q-1, and the four half-degree characters xi_1, xi_2 (degree
(q+1)/2) and eta_1, eta_2 (degree (q-1)/2).

Every value is an exact CycNum embedded in the working conductor
N = lcm(q, q-1, q+1).  The zc/zd columns follow from the central
character of z: chi(zc) = chi(z)/chi(1) * chi(c), and chi(z)/chi(1) is
always +-1.

The xi_1 / xi_2 (and eta_1 / eta_2) labels are a gauge: they swap under
the other choice of square root of eps*q.  We pin the gauge by defining
xi_1 as the row whose value at class c is (1 + g)/2 with g the quadratic
Gauss sum.

Each cell also carries a small symbolic form (a tagged tuple) used by
the text and LaTeX renderers; the exact CycNum is the value of record.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclo import CycNum, nu, rational, root_of_unity, sqrt_eps_q, working_conductor
from .fq import is_odd_prime
from .grp import (
    A, B, C, D, ONE, Z, ZC, ZD,
    ClassLabel, ConjClass, GroupElem, class_labels, class_of, representatives,
    DEFAULT_MAX_ENUM,
)

__all__ = [
    "CharLabel", "CharTable", "complex_table", "value_at",
    "TRIV", "PSI", "XI1", "XI2", "ETA1", "ETA2", "Chi", "Theta",
    "char_labels", "parse_char_label",
]


@dataclass(frozen=True)
class CharLabel:
    """Row name: one of 1, psi, chi_i, theta_j, xi_1, xi_2, eta_1, eta_2."""
    kind: str
    index: int = 0

    _KINDS = ("1", "psi", "chi", "theta", "xi1", "xi2", "eta1", "eta2")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown character kind {self.kind!r}")
        if self.kind in ("chi", "theta"):
            if self.index < 1:
                raise ValueError(f"{self.kind} index must be >= 1")
        elif self.index:
            raise ValueError(f"character {self.kind!r} carries no index")

    def __str__(self):
        if self.kind in ("chi", "theta"):
            return f"{self.kind}_{self.index}"
        if self.kind in ("xi1", "xi2", "eta1", "eta2"):
            return f"{self.kind[:-1]}_{self.kind[-1]}"
        return self.kind


def parse_char_label(s: str) -> CharLabel:
    if s in ("1", "psi"):
        return CharLabel(s)
    base, _, idx = s.partition("_")
    if base in ("chi", "theta"):
        return CharLabel(base, int(idx))
    if base in ("xi", "eta"):
        return CharLabel(base + idx)
    raise ValueError(f"cannot parse character label {s!r}")


TRIV = CharLabel("1")
PSI = CharLabel("psi")
XI1 = CharLabel("xi1")
XI2 = CharLabel("xi2")
ETA1 = CharLabel("eta1")
ETA2 = CharLabel("eta2")


def Chi(i: int) -> CharLabel:
    return CharLabel("chi", i)


def Theta(j: int) -> CharLabel:
    return CharLabel("theta", j)


def char_labels(q: int) -> list[CharLabel]:
    """All q+4 row labels in table order."""
    return ([TRIV, PSI]
            + [Chi(i) for i in range(1, (q - 3) // 2 + 1)]
            + [Theta(j) for j in range(1, (q - 1) // 2 + 1)]
            + [XI1, XI2, ETA1, ETA2])


# ---------------------------------------------------------------------------
# symbolic cells: ("rat", Fraction) | ("nu", coef, r, s) | ("gauss", a, b, D)
# where ("gauss", a, b, D) means a + b*sqrt(D), all coefficients Fraction.

def sym_rat(v) -> tuple:
    return ("rat", Fraction(v))


def sym_scale(sym: tuple, k) -> tuple:
    k = Fraction(k)
    tag = sym[0]
    if tag == "rat":
        return ("rat", sym[1] * k)
    if tag == "nu":
        return ("nu", sym[1] * k, sym[2], sym[3])
    if tag == "gauss":
        return ("gauss", sym[1] * k, sym[2] * k, sym[3])
    raise ValueError(f"bad symbolic cell {sym!r}")


def sym_add(s1: tuple, s2: tuple) -> tuple:
    """Addition for the combinations the real table needs."""
    if s1[0] == "rat" and s2[0] == "rat":
        return ("rat", s1[1] + s2[1])
    if s1[0] == "gauss" and s2[0] == "gauss" and s1[3] == s2[3]:
        a, b = s1[1] + s2[1], s1[2] + s2[2]
        return ("rat", a) if b == 0 else ("gauss", a, b, s1[3])
    if s1[0] == "nu" and s2[0] == "nu" and s1[2:] == s2[2:]:
        return ("nu", s1[1] + s2[1], s1[2], s1[3])
    raise ValueError(f"cannot add symbolic cells {s1!r} and {s2!r}")


def _frac_str(v: Fraction) -> str:
    return str(v)


def sym_str(sym: tuple) -> str:
    """Stable text mini-grammar: "3", "-1/2", "2*nu(14,3)", "(1+sqrt(5))/2",
    "-1+sqrt(-7)" and the like."""
    tag = sym[0]
    if tag == "rat":
        return _frac_str(sym[1])
    if tag == "nu":
        coef, r, s = sym[1], sym[2], sym[3]
        if coef == 0:
            return "0"
        core = f"nu({r},{s})"
        if coef == 1:
            return core
        if coef == -1:
            return f"-{core}"
        return f"{_frac_str(coef)}*{core}"
    if tag == "gauss":
        a, b, disc = sym[1], sym[2], sym[3]
        if b == 0:
            return _frac_str(a)
        root = f"sqrt({disc})"
        if a.denominator == 2 and b.denominator == 2:
            na, nb = a.numerator, b.numerator
            head = f"{na}" if na else ""
            if nb == 1:
                mid = f"+{root}" if head else root
            elif nb == -1:
                mid = f"-{root}"
            else:
                mid = f"{'+' if nb > 0 and head else ''}{nb}*{root}"
            return f"({head}{mid})/2"
        head = _frac_str(a) if a else ""
        if b == 1:
            mid = f"+{root}" if head else root
        elif b == -1:
            mid = f"-{root}"
        else:
            mid = f"{'+' if b > 0 and head else ''}{_frac_str(b)}*{root}"
        return f"{head}{mid}"
    raise ValueError(f"bad symbolic cell {sym!r}")


def sym_latex(sym: tuple) -> str:
    tag = sym[0]

    def frac_tex(v: Fraction) -> str:
        if v.denominator == 1:
            return str(v.numerator)
        s = "-" if v < 0 else ""
        return f"{s}\\tfrac{{{abs(v.numerator)}}}{{{v.denominator}}}"

    if tag == "rat":
        return frac_tex(sym[1])
    if tag == "nu":
        coef, r, s = sym[1], sym[2], sym[3]
        if coef == 0:
            return "0"
        core = f"\\nu_{{{r}}}^{{{s}}}"
        if coef == 1:
            return core
        if coef == -1:
            return f"-{core}"
        return f"{frac_tex(coef)}{core}"
    if tag == "gauss":
        a, b, disc = sym[1], sym[2], sym[3]
        root = f"\\sqrt{{{disc}}}"
        if b == 0:
            return frac_tex(a)
        if a.denominator == 2 and b.denominator == 2:
            na, nb = a.numerator, b.numerator
            inner = f"{na}" if na else ""
            if nb == 1:
                inner += "+" + root if inner else root
            elif nb == -1:
                inner += "-" + root
            else:
                inner += f"{'+' if nb > 0 and inner else ''}{nb}{root}"
            return f"\\tfrac{{{inner}}}{{2}}"
        inner = frac_tex(a) if a else ""
        if b == 1:
            inner += "+" + root if inner else root
        elif b == -1:
            inner += "-" + root
        else:
            inner += f"{'+' if b > 0 and inner else ''}{frac_tex(b)}{root}"
        return inner
    raise ValueError(f"bad symbolic cell {sym!r}")


# ---------------------------------------------------------------------------

class CharTable:
    """Exact character table: rows CharLabel, columns ClassLabel.

    ``values`` maps (CharLabel, ClassLabel) to CycNum at the working
    conductor; ``symbolic`` carries the display cells (None on tables
    rebuilt from JSON; the exact values are the record).
    """

    def __init__(self, q: int, epsilon: int, conductor: int,
                 classes: tuple[ConjClass, ...], chars: tuple[CharLabel, ...],
                 values: dict, symbolic: dict | None):
        self.q = q
        self.epsilon = epsilon
        self.conductor = conductor
        self.classes = classes
        self.chars = chars
        self.values = values
        self.symbolic = symbolic

    def value(self, char: CharLabel, label: ClassLabel) -> CycNum:
        return self.values[(char, label)]

    def degree(self, char: CharLabel) -> int:
        return self.value(char, ONE).as_integer()

    def value_at(self, char: CharLabel, g: GroupElem,
                 max_enum: int = DEFAULT_MAX_ENUM) -> CycNum:
        if g.q != self.q:
            raise ValueError(f"element of SL2({g.q}) in a table for SL2({self.q})")
        return self.value(char, class_of(g, max_enum))

    @property
    def class_order(self) -> list[ClassLabel]:
        return [cls.label for cls in self.classes]

    def size(self, label: ClassLabel) -> int:
        for cls in self.classes:
            if cls.label == label:
                return cls.size
        raise KeyError(str(label))

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
            "chars": [str(ch) for ch in self.chars],
            "values": {
                str(ch): {str(lab): self.value(ch, lab).to_json()
                          for lab in self.class_order}
                for ch in self.chars
            },
            "symbolic": None if self.symbolic is None else {
                str(ch): {str(lab): sym_str(self.symbolic[(ch, lab)])
                          for lab in self.class_order}
                for ch in self.chars
            },
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CharTable":
        from .grp import parse_class_label
        q = obj["q"]
        classes = tuple(
            ConjClass(parse_class_label(c["label"]),
                      GroupElem(q, *c["representative"]),
                      c["size"], c["order"])
            for c in obj["classes"])
        chars = tuple(parse_char_label(s) for s in obj["chars"])
        values = {
            (ch, cls.label): CycNum.from_json(obj["values"][str(ch)][str(cls.label)])
            for ch in chars for cls in classes
        }
        return cls(q, obj["epsilon"], obj["conductor"], classes, chars,
                   values, None)

    def __eq__(self, other):
        if not isinstance(other, CharTable):
            return NotImplemented
        return (self.q == other.q and self.epsilon == other.epsilon
                and self.conductor == other.conductor
                and self.classes == other.classes
                and self.chars == other.chars
                and all(self.value(ch, lab) == other.value(ch, lab)
                        for ch in self.chars for lab in self.class_order))


# ---------------------------------------------------------------------------

def _fold_exponent(r: int, s: int) -> int:
    s %= r
    return min(s, r - s)


@lru_cache(maxsize=None)
def complex_table(q: int) -> CharTable:
    if not is_odd_prime(q):
        raise ValueError(f"q must be an odd prime, got {q}")
    eps = 1 if q % 4 == 1 else -1
    N = working_conductor(q)
    disc = eps * q
    gauss = sqrt_eps_q(q).promote(N)
    classes = representatives(q)
    a_range = range(1, (q - 3) // 2 + 1)
    b_range = range(1, (q - 1) // 2 + 1)

    def rat_cell(v):
        v = Fraction(v)
        return (rational(v, N), sym_rat(v))

    def nu_cell(r, s, coef=1):
        val = (nu(r, s) * coef).promote(N)
        rv = val.as_rational()
        if rv is not None:
            return (val, sym_rat(rv))
        return (val, ("nu", Fraction(coef), r, _fold_exponent(r, s)))

    def gauss_cell(a, b):
        a, b = Fraction(a), Fraction(b)
        return (rational(a, N) + gauss * b, ("gauss", a, b, disc))

    rows: dict[CharLabel, dict[ClassLabel, tuple]] = {}

    def fill(char, one, z, c, d, a_of, b_of):
        """Assemble one row; the zc/zd columns follow from the z-ratio."""
        row = {ONE: one, Z: z, C: c, D: d}
        sz = z[0].as_rational() / one[0].as_rational()
        assert sz in (1, -1)
        row[ZC] = (c[0] * sz, sym_scale(c[1], sz))
        row[ZD] = (d[0] * sz, sym_scale(d[1], sz))
        for l in a_range:
            row[A(l)] = a_of(l)
        for m in b_range:
            row[B(m)] = b_of(m)
        rows[char] = row

    fill(TRIV, rat_cell(1), rat_cell(1), rat_cell(1), rat_cell(1),
         lambda l: rat_cell(1), lambda m: rat_cell(1))
    fill(PSI, rat_cell(q), rat_cell(q), rat_cell(0), rat_cell(0),
         lambda l: rat_cell(1), lambda m: rat_cell(-1))
    for i in a_range:
        sign = (-1) ** i
        fill(Chi(i), rat_cell(q + 1), rat_cell(sign * (q + 1)),
             rat_cell(1), rat_cell(1),
             lambda l, i=i: nu_cell(q - 1, i * l),
             lambda m: rat_cell(0))
    for j in b_range:
        sign = (-1) ** j
        fill(Theta(j), rat_cell(q - 1), rat_cell(sign * (q - 1)),
             rat_cell(-1), rat_cell(-1),
             lambda l: rat_cell(0),
             lambda m, j=j: nu_cell(q + 1, j * m, coef=-1))
    half = Fraction(1, 2)
    fill(XI1, rat_cell(Fraction(q + 1, 2)), rat_cell(Fraction(eps * (q + 1), 2)),
         gauss_cell(half, half), gauss_cell(half, -half),
         lambda l: rat_cell((-1) ** l), lambda m: rat_cell(0))
    fill(XI2, rat_cell(Fraction(q + 1, 2)), rat_cell(Fraction(eps * (q + 1), 2)),
         gauss_cell(half, -half), gauss_cell(half, half),
         lambda l: rat_cell((-1) ** l), lambda m: rat_cell(0))
    fill(ETA1, rat_cell(Fraction(q - 1, 2)), rat_cell(Fraction(-eps * (q - 1), 2)),
         gauss_cell(-half, half), gauss_cell(-half, -half),
         lambda l: rat_cell(0), lambda m: rat_cell((-1) ** (m + 1)))
    fill(ETA2, rat_cell(Fraction(q - 1, 2)), rat_cell(Fraction(-eps * (q - 1), 2)),
         gauss_cell(-half, -half), gauss_cell(-half, half),
         lambda l: rat_cell(0), lambda m: rat_cell((-1) ** (m + 1)))

    chars = tuple(char_labels(q))
    values = {(ch, lab): rows[ch][lab][0]
              for ch in chars for lab in class_labels(q)}
    symbolic = {(ch, lab): rows[ch][lab][1]
                for ch in chars for lab in class_labels(q)}
    return CharTable(q, eps, N, classes, chars, values, symbolic)


def value_at(table: CharTable, char: CharLabel, g: GroupElem,
             max_enum: int = DEFAULT_MAX_ENUM) -> CycNum:
    return table.value_at(char, g, max_enum)
