"""Exact cyclotomic arithmetic.

The ring axioms run as hypothesis properties over random small operands;
the named identities (vanishing geometric sums, nu symmetries, Gauss
sums) pin down the values the character tables are built from.
"""
from fractions import Fraction

import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st

from sl2q.cyclo import (CycNum, cyclotomic_polynomial, nu, rational,
                        root_of_unity, sqrt_eps_q, working_conductor)

# small conductors with interesting lcm structure; lcm of any three is
# at most 2520, so even the worst promotion stays cheap
CONDUCTORS = [1, 3, 4, 5, 6, 8, 9, 12]


@st.composite
def cyc_numbers(draw):
    N = draw(st.sampled_from(CONDUCTORS))
    phi = len(cyclotomic_polynomial(N)) - 1
    nums = draw(st.lists(st.integers(-9, 9), min_size=phi, max_size=phi))
    den = draw(st.sampled_from([1, 1, 2, 3]))
    return CycNum(N, [Fraction(n, den) for n in nums])


@seed(20240601)
@settings(max_examples=1000, deadline=None)
@given(x=cyc_numbers(), y=cyc_numbers(), z=cyc_numbers())
def test_ring_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + 0 == x
    assert x * 1 == x
    assert x - x == 0


@seed(20240602)
@settings(max_examples=200, deadline=None)
@given(x=cyc_numbers(), r=st.fractions(min_value=-5, max_value=5).filter(bool))
def test_rational_scalars_commute_with_division(x, r):
    assert (x * r) / r == x
    assert x * r == r * x


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(7) == (1,) * 7
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    # Phi_105 is the first with a coefficient of magnitude 2
    assert min(cyclotomic_polynomial(105)) == -2


@pytest.mark.parametrize("n", [2, 3, 5, 7, 8, 12])
def test_geometric_sum_vanishes(n):
    # sum over i of zeta_n^(ik) is 0 for k nonzero mod n, so the sum
    # starting at i = 1 is -1; this is the engine behind every
    # fixed-point average over a cyclic subgroup
    for k in range(1, n):
        total = rational(0, n)
        for i in range(1, n):
            total = total + root_of_unity(n, i * k)
        assert total == -1


def test_root_of_unity_basics():
    assert root_of_unity(2, 1) == -1
    assert root_of_unity(4, 1) * root_of_unity(4, 1) == -1
    assert root_of_unity(5, 7) == root_of_unity(5, 2)
    z = root_of_unity(12, 1)
    assert z ** 12 == 1
    assert z ** 6 == -1
    assert root_of_unity(3, 1).promote(12) == root_of_unity(12, 4)


@pytest.mark.parametrize("r", [3, 4, 5, 6, 7, 8, 12, 14])
def test_nu_reflection_symmetry(r):
    for s in range(r + 1):
        assert nu(r, r - s) == nu(r, s)
        assert nu(r, -s) == nu(r, s)


def test_nu_boundary_values():
    # nu(r, s) = 2 exactly at s = 0 mod r, and -2 exactly at the
    # half-turn, which exists only for even r
    for r in [3, 4, 5, 6, 8, 12]:
        for s in range(r):
            v = nu(r, s)
            assert (v == 2) is (s == 0)
            assert (v == -2) is (r % 2 == 0 and s == r // 2)


def test_nu_is_real():
    for r, s in [(5, 1), (7, 2), (12, 5), (13, 4)]:
        v = nu(r, s)
        assert v.conjugate() == v
        assert abs(v.approx().imag) < 1e-12


@pytest.mark.parametrize("q", [3, 5, 7, 11, 13])
def test_gauss_sum_squares_to_eps_q(q):
    eps = 1 if q % 4 == 1 else -1
    g = sqrt_eps_q(q)
    assert g * g == eps * q
    # classical sign: sqrt(q) on the positive real axis for q = 1 mod 4,
    # i*sqrt(q) on the positive imaginary axis for q = 3 mod 4
    a = g.approx()
    if eps == 1:
        assert a.real > 0 and abs(a.imag) < 1e-9
    else:
        assert a.imag > 0 and abs(a.real) < 1e-9


def test_gauss_sum_conjugate():
    assert sqrt_eps_q(5).conjugate() == sqrt_eps_q(5)
    assert sqrt_eps_q(7).conjugate() == -sqrt_eps_q(7)


def test_conjugate_inverts_roots():
    for n, k in [(5, 1), (7, 3), (12, 5)]:
        assert root_of_unity(n, k).conjugate() == root_of_unity(n, -k)


def test_as_rational_and_as_integer():
    assert rational(Fraction(3, 2), 12).as_rational() == Fraction(3, 2)
    assert root_of_unity(5, 1).as_rational() is None
    assert (root_of_unity(5, 1) * 0).as_rational() == 0
    assert rational(4, 7).as_integer() == 4
    with pytest.raises(ValueError):
        rational(Fraction(1, 2)).as_integer()
    with pytest.raises(ValueError):
        root_of_unity(5, 1).as_integer()
    # an irrational-looking combination that collapses to an integer
    assert (nu(5, 1) + nu(5, 2)).as_integer() == -1


def test_division_rules():
    x = root_of_unity(7, 1) + 3
    assert (x * 2) / 2 == x
    assert x / rational(2) == x * Fraction(1, 2)
    with pytest.raises(TypeError):
        x / root_of_unity(7, 1)
    with pytest.raises(ZeroDivisionError):
        x / 0


def test_mixed_conductor_equality():
    assert rational(5, 1) == rational(5, 12)
    assert root_of_unity(6, 1) == nu(6, 1) - root_of_unity(6, -1)
    assert nu(6, 1) == 1


def test_immutability():
    x = root_of_unity(5, 1)
    with pytest.raises(AttributeError):
        x.coeffs = ()


def test_json_round_trip():
    x = nu(12, 1) * Fraction(1, 2) + root_of_unity(12, 5)
    obj = x.to_json()
    assert obj["conductor"] == 12
    assert isinstance(obj["coeffs"][0], str)
    assert abs(obj["approx"]["re"] - x.approx().real) < 1e-12
    assert CycNum.from_json(obj) == x


@pytest.mark.parametrize("q,N", [(3, 12), (5, 60), (7, 168), (11, 660),
                                 (13, 1092)])
def test_working_conductor(q, N):
    assert working_conductor(q) == N
    # every ingredient embeds: zeta_q, nu at q-1, nu at q+1
    assert N % q == 0 and N % (q - 1) == 0 and N % (q + 1) == 0
