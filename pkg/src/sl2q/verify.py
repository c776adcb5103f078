"""Brute-force reconciliation of every closed form in the package.

``verify_all(q)`` enumerates SL2(q) and runs eleven independent checks,
from the group order up through fixed-point dimensions.  Each check is
crash-isolated: a failure (or an exception) is recorded and the rest of
the suite still runs.  The raw Frobenius-Schur sum in check 7
deliberately walks all q^3-q elements through the orbit partition
rather than trusting the fast classifier; it is the ground-truth layer
under the two closed computations.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .chars import CharLabel, ETA1, ETA2, XI1, XI2, complex_table
from .fixdim import fixed_dim_closed, subgroup_key_of
from .grp import (
    class_label_lookup, class_labels, conjugacy_partition, element_order,
    enumerate_group, find_b, rep_a, rep_z, rep_zc, rep_zd,
    representatives, DEFAULT_MAX_ENUM,
)
from .realrep import (
    fs_indicator_brute, fs_indicator_closed, fs_indicator_raw,
    inverse_class_map, real_classes, real_table, square_class_map,
)

__all__ = ["VerificationCheck", "VerificationReport", "verify_all"]


@dataclass(frozen=True)
class VerificationCheck:
    name: str
    passed: bool
    details: str


@dataclass(frozen=True)
class VerificationReport:
    q: int
    checks: tuple  # tuple[VerificationCheck, ...]

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "checks": [{"name": c.name, "pass": c.passed, "details": c.details}
                       for c in self.checks],
            "overall": self.overall,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "VerificationReport":
        return cls(obj["q"],
                   tuple(VerificationCheck(c["name"], c["pass"], c["details"])
                         for c in obj["checks"]))

    def to_text(self) -> str:
        lines = [f"verification of SL2({self.q})"]
        for c in self.checks:
            tag = "PASS" if c.passed else "FAIL"
            lines.append(f"[{tag}] {c.name}: {c.details}")
        lines.append(f"overall: {'PASS' if self.overall else 'FAIL'}")
        return "\n".join(lines)

    def __str__(self):
        return self.to_text()


def _fail_list(bad: list, limit: int = 4) -> str:
    shown = "; ".join(str(x) for x in bad[:limit])
    more = f" (+{len(bad) - limit} more)" if len(bad) > limit else ""
    return shown + more


def verify_all(q: int, max_enum: int = DEFAULT_MAX_ENUM) -> VerificationReport:
    """Run the whole suite; q must lie within the enumeration bound."""
    if q > max_enum:
        raise ValueError(
            f"q={q} exceeds the enumeration bound {max_enum}; "
            f"verification needs the full group")
    G = enumerate_group(q, max_enum)
    order = q ** 3 - q
    checks: list[VerificationCheck] = []

    def run(name, fn):
        try:
            ok, details = fn()
        except Exception as exc:  # isolate: one crash must not stop the suite
            ok, details = False, f"crashed: {exc!r}"
        checks.append(VerificationCheck(name, ok, details))

    # (1) group order
    def check_group_order():
        n, ndist = len(G), len(set(G))
        ok = n == order == ndist
        return ok, f"|SL2({q})| = {n}, expected {order}, distinct {ndist}"
    run("group_order", check_group_order)

    # (2) conjugacy partition: q+4 classes, expected sizes and orders
    def check_partition():
        part = conjugacy_partition(q, max_enum)
        reps = representatives(q)
        bad = []
        if set(part) != set(class_labels(q)):
            bad.append("label set mismatch")
        if len(part) != q + 4:
            bad.append(f"{len(part)} classes, expected {q + 4}")
        union = set()
        total = 0
        for cls in reps:
            orbit = part[cls.label]
            if len(orbit) != cls.size:
                bad.append(f"|{cls.label}| = {len(orbit)}, expected {cls.size}")
            if cls.representative not in orbit:
                bad.append(f"representative of {cls.label} not in its orbit")
            if element_order(cls.representative) != cls.element_order:
                bad.append(f"order of {cls.label} rep is "
                           f"{element_order(cls.representative)}, "
                           f"expected {cls.element_order}")
            union |= orbit
            total += len(orbit)
        if not (total == len(union) == order):
            bad.append(f"orbits cover {len(union)} of {order} elements")
        if bad:
            return False, _fail_list(bad)
        sizes = ",".join(str(c.size) for c in reps)
        return True, f"{q + 4} classes, disjoint cover; sizes {sizes}"
    run("class_partition", check_partition)

    # (3) unique involution, and where it sits in the torus chains
    def check_involution():
        z = rep_z(q)
        invs = [g for g in G if element_order(g) == 2]
        ok = invs == [z] or set(invs) == {z}
        ok = ok and len(invs) == 1
        ok = ok and rep_a(q) ** ((q - 1) // 2) == z
        ok = ok and find_b(q) ** ((q + 1) // 2) == z
        side = ("a^((q-1)/2) = z (z lies in the split torus chain)"
                if q % 4 == 1 else
                "b^((q+1)/2) = z (z lies in the non-split torus chain)")
        return ok, f"unique involution is z; {side}; both torus midpoints checked"
    run("unique_involution", check_involution)

    # (4) square and inverse class maps, elementwise
    def check_maps():
        lookup = class_label_lookup(q, max_enum)
        sq = square_class_map(q)
        inv = inverse_class_map(q)
        bad = []
        for g in G:
            lab = lookup[g]
            if lookup[g * g] != sq[lab]:
                bad.append(f"square map wrong on {g!r}")
            if lookup[g.inverse()] != inv[lab]:
                bad.append(f"inverse map wrong on {g!r}")
        if bad:
            return False, _fail_list(bad)
        return True, f"g -> g^2 and g -> g^-1 agree classwise for all {order} elements"
    run("square_inverse_maps", check_maps)

    ct = complex_table(q)
    labels = ct.class_order
    sizes = {cls.label: cls.size for cls in ct.classes}
    # everything at the working conductor up front, so the products below
    # reuse the memoized integer forms instead of re-promoting per pair
    val = {(ch, lab): ct.value(ch, lab).promote(ct.conductor)
           for ch in ct.chars for lab in labels}
    conj_val = {key: v.conjugate() for key, v in val.items()}
    conj_sized = {(ch, lab): conj_val[(ch, lab)] * sizes[lab]
                  for ch in ct.chars for lab in labels}

    # (5) orthogonality, rows and columns, exact
    def check_orthogonality():
        bad = []
        for i, ch1 in enumerate(ct.chars):
            for ch2 in ct.chars[i:]:
                acc = None
                for lab in labels:
                    term = val[(ch1, lab)] * conj_sized[(ch2, lab)]
                    acc = term if acc is None else acc + term
                want = order if ch1 == ch2 else 0
                if acc != want:
                    bad.append(f"<{ch1},{ch2}> != {want}")
        for i, l1 in enumerate(labels):
            for l2 in labels[i:]:
                acc = None
                for ch in ct.chars:
                    term = val[(ch, l1)] * conj_val[(ch, l2)]
                    acc = term if acc is None else acc + term
                want = order // sizes[l1] if l1 == l2 else 0
                if acc != want:
                    bad.append(f"column <{l1},{l2}> != {want}")
        if bad:
            return False, _fail_list(bad)
        return True, (f"{len(ct.chars)} rows and {len(labels)} columns "
                      f"orthogonal at conductor {ct.conductor}")
    run("orthogonality", check_orthogonality)

    # (6) sum of squared degrees
    def check_degree_sum():
        s = sum(ct.degree(ch) ** 2 for ch in ct.chars)
        degs = ",".join(str(ct.degree(ch)) for ch in ct.chars)
        return s == order, f"sum deg^2 = {s}, expected {order} (degrees {degs})"
    run("degree_sum", check_degree_sum)

    # (7) Frobenius-Schur indicators three ways, plus the trichotomy
    def check_fs():
        bad = []
        got = {}
        for ch in ct.chars:
            closed = fs_indicator_closed(ct, ch)
            grouped = fs_indicator_brute(ct, ch)
            raw = fs_indicator_raw(ct, ch, max_enum)
            if not (closed == grouped == raw):
                bad.append(f"{ch}: closed {closed}, grouped {grouped}, raw {raw}")
            got[ch] = closed
        expect_plus = {CharLabel("1"), CharLabel("psi")}
        expect_minus = set()
        for i in range(1, (q - 3) // 2 + 1):
            (expect_plus if i % 2 == 0 else expect_minus).add(CharLabel("chi", i))
        for j in range(1, (q - 1) // 2 + 1):
            (expect_plus if j % 2 == 0 else expect_minus).add(CharLabel("theta", j))
        if q % 4 == 1:
            expect_plus |= {XI1, XI2}
            expect_minus |= {ETA1, ETA2}
        for ch in ct.chars:
            want = 1 if ch in expect_plus else -1 if ch in expect_minus else 0
            if got[ch] != want:
                bad.append(f"{ch}: indicator {got[ch]}, expected {want}")
        if bad:
            return False, _fail_list(bad)
        n1 = sum(1 for v in got.values() if v == 1)
        n_1 = sum(1 for v in got.values() if v == -1)
        n0 = sum(1 for v in got.values() if v == 0)
        return True, (f"closed = grouped = raw for all {len(got)} characters; "
                      f"{n1} orthogonal, {n_1} quaternionic, {n0} complex")
    run("fs_indicators", check_fs)

    # (8) conjugation permutation on rows: trace q+4 or q
    def check_conjugation_trace():
        rows = {ch: tuple(ct.value(ch, lab) for lab in labels) for ch in ct.chars}
        perm = {}
        for ch in ct.chars:
            conj_row = tuple(conj_val[(ch, lab)] for lab in labels)
            matches = [ch2 for ch2 in ct.chars if rows[ch2] == conj_row]
            if len(matches) != 1:
                return False, f"conjugate of {ch} matches {len(matches)} rows"
            perm[ch] = matches[0]
        if sorted(map(str, perm.values())) != sorted(map(str, ct.chars)):
            return False, "conjugation is not a permutation of the rows"
        trace = sum(1 for ch, im in perm.items() if ch == im)
        moved = sorted(str(ch) for ch, im in perm.items() if ch != im)
        want_trace = q + 4 if q % 4 == 1 else q
        want_moved = [] if q % 4 == 1 else sorted(map(str, (XI1, XI2, ETA1, ETA2)))
        ok = trace == want_trace and moved == want_moved
        return ok, (f"trace {trace}, expected {want_trace}; "
                    f"non-real rows {moved or 'none'}")
    run("conjugation_trace", check_conjugation_trace)

    # (9) real table: conjugation-fixed rows, one per real class block
    def check_real_table():
        rt = real_table(q)
        blocks = real_classes(q)
        bad = []
        for ch in rt.labels:
            for lab in labels:
                v = rt.value(ch, lab)
                if v.conjugate() != v:
                    bad.append(f"{ch} not real at {lab}")
        for block in blocks.blocks:
            if len(block) == 1:
                continue
            l1, l2 = sorted(block, key=str)
            for ch in rt.labels:
                if rt.value(ch, l1) != rt.value(ch, l2):
                    bad.append(f"{ch} differs across merged block {l1},{l2}")
        if len(rt.labels) != blocks.count:
            bad.append(f"{len(rt.labels)} rows vs {blocks.count} real classes")
        want = q + 4 if q % 4 == 1 else q + 2
        if blocks.count != want:
            bad.append(f"{blocks.count} real classes, expected {want}")
        if bad:
            return False, _fail_list(bad)
        note = ""
        if q == 3:
            note = ("; literature-note: at q=3 the b-range is m=1 only, "
                    "so the count is q+2 = 5")
        return True, f"{len(rt.labels)} real rows = {blocks.count} real classes{note}"
    run("real_table_rows", check_real_table)

    # (10) fixed dims: closed = average for <g> over every group element
    def check_fixed_dims():
        rt = real_table(q)
        lookup = class_label_lookup(q, max_enum)
        degrees = {ch: rt.degree(ch) for ch in rt.labels}
        # the average depends on <g> only through its class-label counts,
        # so conjugate subgroups share one exact computation
        avg_cache: dict[tuple, dict] = {}
        subgroups = set()
        bad = []
        for g in G:
            elts = [g]
            h = g * g
            while h != g:
                elts.append(h)
                h = h * g
            subgroups.add(frozenset(elts))
            n = len(elts)
            counts = Counter(lookup[h] for h in elts)
            sig = tuple(sorted((str(lab), cnt) for lab, cnt in counts.items()))
            if sig not in avg_cache:
                avgs = {}
                for ch in rt.labels:
                    acc = None
                    for lab, cnt in counts.items():
                        term = rt.value(ch, lab) * cnt
                        acc = term if acc is None else acc + term
                    v = (acc / n).as_rational()
                    if v is None or v.denominator != 1 or not 0 <= v <= degrees[ch]:
                        bad.append(f"average of {ch} over <{g!r}> is {v!r}")
                        v = -1
                    avgs[ch] = int(v)
                avg_cache[sig] = avgs
            skey = subgroup_key_of(g, max_enum)
            avgs = avg_cache[sig]
            for ch in rt.labels:
                closed = fixed_dim_closed(q, ch, skey)
                if closed != avgs[ch]:
                    bad.append(f"dim {ch}^{skey}: closed {closed}, "
                               f"average {avgs[ch]} (generator {g!r})")
        if bad:
            return False, _fail_list(bad)
        return True, (f"{len(subgroups)} distinct cyclic subgroups from "
                      f"{order} generators ({len(avg_cache)} class profiles); "
                      f"every average integral, in range, and equal to the "
                      f"closed form")
    run("fixed_dims", check_fixed_dims)

    # (11) order-2q subgroups are conjugates of <zc> or <zd>
    def check_order_2q():
        def closure(g):
            elts = [g]
            h = g * g
            while h != g:
                elts.append(h)
                h = h * g
            return frozenset(elts)

        base = [closure(rep_zc(q)), closure(rep_zd(q))]
        target = set()
        for S in base:
            for h in G:
                hinv = h.inverse()
                target.add(frozenset(h * x * hinv for x in S))
        n = 0
        bad = []
        for g in G:
            if element_order(g) != 2 * q:
                continue
            n += 1
            if closure(g) not in target:
                bad.append(f"<{g!r}> not conjugate to <zc> or <zd>")
        if bad:
            return False, _fail_list(bad)
        return True, (f"{n} elements of order {2 * q}, {len(target)} subgroup "
                      f"conjugates, all accounted for")
    run("order_2q_subgroups", check_order_2q)

    return VerificationReport(q, tuple(checks))
