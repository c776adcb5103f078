"""SL2(q): elements, conjugacy classes, and the class-label machinery."""
import pytest

from sl2q.grp import (A, B, C, D, ONE, Z, ZC, ZD, GroupElem, class_label_lookup,
                      class_labels, class_of, conjugacy_partition,
                      element_order, enumerate_group, find_b, identity,
                      parse_class_label, rep_a, rep_c, rep_d, rep_z, rep_zc,
                      rep_zd, representatives)

Q_SMALL = [3, 5, 7, 11, 13]


def test_elem_requires_determinant_one():
    g = GroupElem(5, 2, 1, 1, 1)
    assert (g.a, g.b, g.c, g.d) == (2, 1, 1, 1)
    with pytest.raises(ValueError):
        GroupElem(5, 1, 0, 0, 2)
    with pytest.raises(ValueError):
        GroupElem(9, 1, 0, 0, 1)


def test_elem_group_operations():
    g = GroupElem(7, 1, 2, 3, 0)
    h = GroupElem(7, 0, 1, 6, 4)
    assert (g * h).to_tuple() == ((1 * 0 + 2 * 6) % 7, (1 * 1 + 2 * 4) % 7,
                                  (3 * 0 + 0 * 6) % 7, (3 * 1 + 0 * 4) % 7)
    assert g * g.inverse() == identity(7)
    assert g ** 0 == identity(7)
    assert g ** -2 == (g.inverse()) ** 2
    assert g ** element_order(g) == identity(7)
    assert h.conjugate_by(g) == g * h * g.inverse()
    assert g.trace == 1
    with pytest.raises(ValueError):
        g * GroupElem(5, 1, 0, 0, 1)


def test_elem_immutable_hashable():
    g = rep_c(5)
    with pytest.raises(AttributeError):
        g.a = 0
    assert len({g, rep_c(5), rep_d(5)}) == 2


def test_class_labels_shape():
    assert [str(l) for l in class_labels(5)] == [
        "1", "z", "c", "d", "zc", "zd", "a^1", "b^1", "b^2"]
    assert [str(l) for l in class_labels(3)] == [
        "1", "z", "c", "d", "zc", "zd", "b^1"]
    for q in Q_SMALL:
        assert len(class_labels(q)) == q + 4


@pytest.mark.parametrize("s", ["1", "z", "zc", "a^2", "b^11"])
def test_parse_class_label_round_trip(s):
    assert str(parse_class_label(s)) == s


def test_parse_class_label_rejects_junk():
    for s in ["e", "a", "a^", "b^x", "zz", ""]:
        with pytest.raises(ValueError):
            parse_class_label(s)


def test_enumerate_group():
    elems = enumerate_group(5)
    assert len(elems) == 120 and len(set(elems)) == 120
    assert all((g.a * g.d - g.b * g.c) % 5 == 1 for g in elems)
    assert len(enumerate_group(3)) == 24
    with pytest.raises(ValueError):
        enumerate_group(97)  # past the default enumeration bound


def test_standard_representative_orders():
    for q in Q_SMALL:
        assert element_order(identity(q)) == 1
        assert element_order(rep_z(q)) == 2
        assert element_order(rep_c(q)) == q
        assert element_order(rep_d(q)) == q
        assert element_order(rep_zc(q)) == 2 * q
        assert element_order(rep_zd(q)) == 2 * q
        assert element_order(rep_a(q)) == q - 1
        assert element_order(find_b(q)) == q + 1


@pytest.mark.parametrize("q", Q_SMALL)
def test_class_sizes_and_orders(q):
    classes = representatives(q)
    assert [c.label for c in classes] == class_labels(q)
    sizes = sorted(c.size for c in classes)
    expected = sorted([1, 1] + [(q * q - 1) // 2] * 4
                      + [q * (q + 1)] * ((q - 3) // 2)
                      + [q * (q - 1)] * ((q - 1) // 2))
    assert sizes == expected
    assert sum(c.size for c in classes) == q ** 3 - q
    for c in classes:
        assert c.element_order == element_order(c.representative)
        assert class_of(c.representative) == c.label


@pytest.mark.parametrize("q", [5, 7, 11])
def test_partition_agrees_with_closed_sizes(q):
    classes = conjugacy_partition(q)
    reps = {c.label: c for c in representatives(q)}
    seen = set()
    for label, members in classes.items():
        assert len(members) == reps[label].size
        assert seen.isdisjoint(members)
        seen.update(members)
    assert len(seen) == q ** 3 - q


def test_class_of_central_elements():
    assert class_of(identity(7)) == ONE
    assert class_of(rep_z(7)) == Z


def test_square_of_c_depends_on_residue_of_two():
    # 2 is a square mod 7 but not mod 5, so c^2 stays in (c) at q = 7
    # and crosses to (d) at q = 5
    assert class_of(rep_c(7) * rep_c(7)) == C
    assert class_of(rep_c(5) * rep_c(5)) == D
    assert class_of(rep_zc(7) ** 2) == C
    assert class_of(rep_zd(5) ** 2) == C


def test_torus_midpoints():
    # a has order q-1, so its half-power is the involution when the
    # exponent lands there; same for b with order q+1
    assert rep_a(13) ** 6 == rep_z(13)
    assert rep_a(5) ** 2 == rep_z(5)
    assert find_b(7) ** 4 == rep_z(7)
    assert find_b(11) ** 6 == rep_z(11)


def test_inverse_power_folds_back():
    q = 13
    a = rep_a(q)
    for l in range(1, (q - 3) // 2 + 1):
        assert class_of(a ** (q - 1 - l)) == A(l)
    b = find_b(q)
    for m in range(1, (q - 1) // 2 + 1):
        assert class_of(b ** (q + 1 - m)) == B(m)


def test_class_label_lookup_matches_class_of():
    q = 5
    lookup = class_label_lookup(q)
    assert len(lookup) == 120
    for g in enumerate_group(q):
        assert lookup[g] == class_of(g)


def test_class_of_rejects_oversized_q():
    with pytest.raises(ValueError):
        class_of(GroupElem(101, 1, 1, 0, 1))
