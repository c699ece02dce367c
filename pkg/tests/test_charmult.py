import itertools
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from osp_annihilator import charmult, weyl
from osp_annihilator.errors import DomainError, LatticeError
from osp_annihilator.rootdata import Weight, build_root_system, from_simple_coords, height

from conftest import dominant


def b_type_dimension(lam):
    """Weyl dimension formula for so(2l+1) with the same highest weight.

    osp(1,2l) and so(2l+1) modules with equal highest weights have equal
    dimensions, which makes this an independent check on the alternating sum.
    """
    l = len(lam)
    rho_b = [sympy.Rational(2 * (l - i) - 1, 2) for i in range(l)]
    pos = []
    for i in range(l):
        for j in range(i + 1, l):
            pos.append({i: 1, j: -1})
            pos.append({i: 1, j: 1})
        pos.append({i: 1})
    num = sympy.prod([sum((lam[k] + rho_b[k]) * c for k, c in a.items()) for a in pos])
    den = sympy.prod([sum(rho_b[k] * c for k, c in a.items()) for a in pos])
    return num / den


def naive_partitions(l, nu, odd_cap=None):
    R = build_root_system(l)
    roots = list(R.even_pos) + list(R.odd_pos)
    h = int(height(nu))
    count = 0
    ranges = []
    for i, a in enumerate(roots):
        top = h // int(height(a))
        if odd_cap is not None and i >= len(R.even_pos):
            top = min(top, odd_cap)
        ranges.append(range(top + 1))
    for ks in itertools.product(*ranges):
        s = Weight.zero(l)
        for k, a in zip(ks, roots):
            s = s + k * a
        count += s == nu
    return count


def test_partition_examples():
    assert charmult.kostant_tau(2, Weight([0, 0])) == 1
    assert charmult.kostant_tau(1, Weight([2])) == 2
    assert charmult.kostant_tau(1, Weight([-1])) == 0
    assert charmult.super_partition(2, Weight([0, 0])) == 1
    assert charmult.super_partition(1, Weight([2])) == 1
    assert charmult.super_partition(1, Weight([3])) == 1
    with pytest.raises(LatticeError):
        charmult.kostant_tau(1, Weight([Fraction(1, 2)]))


@given(st.lists(st.integers(0, 4), min_size=2, max_size=2))
def test_partitions_match_enumeration(c):
    nu = from_simple_coords(c)
    assert charmult.kostant_tau(2, nu) == naive_partitions(2, nu)
    assert charmult.super_partition(2, nu) == naive_partitions(2, nu, odd_cap=1)


def test_rank_one_modules():
    for n in range(8):
        t = charmult.full_table(Weight([n]))
        assert t.entries == {Weight([k]): 1 for k in range(-n, n + 1)}
        assert charmult.h_total_multiplicity(Weight([n])) == 1


def test_multiplicity_examples():
    assert charmult.full_table(Weight([0, 0])).entries == {Weight([0, 0]): 1}
    w1 = charmult.full_table(Weight([1, 0]))
    assert len(w1.entries) == 5 and set(w1.entries.values()) == {1}
    assert charmult.h_total_multiplicity(Weight([1, 0])) == 1
    assert charmult.h_total_multiplicity(Weight([0, 0])) == 1
    with pytest.raises(DomainError):
        charmult.weight_multiplicity(Weight([0, 1]), Weight([0, 0]))


@pytest.mark.parametrize("l,top", [(2, 3), (3, 2)])
def test_dimensions_match_b_type(l, top):
    for lam in charmult.dominant_weights(l, top):
        assert charmult.full_table(lam).dimension() == b_type_dimension(lam)


@given(dominant(2), st.sampled_from(weyl.enumerate_weyl(2)))
def test_multiplicities_are_weyl_invariant(lam, w):
    t = charmult.full_table(lam)
    assert t[lam] == 1
    for mu, m in t.entries.items():
        assert t[weyl.act(w, mu)] == m


def b2_character(lam) -> dict:
    """Weyl character of the so(5) module V(lam), by exact polynomial division."""
    x, y = sympy.symbols("x y")
    rb = Weight([Fraction(3, 2), Fraction(1, 2)])

    def alternant(v, shift):
        # exponents doubled so that half-integers become integers
        s = 0
        for w in weyl.enumerate_weyl(2):
            u = weyl.act(w, v)
            s += w.sign * x ** int(2 * u[0] + shift) * y ** int(2 * u[1] + shift)
        return sympy.Poly(s, x, y)

    q, r = sympy.div(alternant(Weight(lam) + rb, 20), alternant(rb, 8))
    assert r.is_zero
    return {Weight([(a - 12) // 2, (b - 12) // 2]): int(c) for (a, b), c in q.terms()}


@pytest.mark.parametrize("lam", [[1, 0], [1, 1], [2, 1], [2, 2], [3, 1]])
def test_characters_match_b2(lam):
    assert charmult.full_table(Weight(lam)).entries == b2_character(lam)


def test_frozen_multiplicities():
    # frozen from the so(5) character oracle above
    t = charmult.full_table(Weight([2, 1]))
    assert t.dimension() == 35
    assert [t[Weight(m)] for m in ([2, 1], [1, 1], [1, 0], [0, 0], [2, 0])] == [1, 2, 3, 3, 1]
    t = charmult.full_table(Weight([3, 1]))
    assert [t[Weight(m)] for m in ([2, 1], [1, 1], [1, 0], [0, 0], [2, 0])] == [2, 4, 4, 5, 3]


def test_hesselink_examples():
    assert charmult.trim(charmult.hesselink_series(Weight([0]), 8)) == [1]
    assert charmult.trim(charmult.hesselink_series(Weight([0, 0]), 8)) == [1]
    assert charmult.hesselink_series_alt(Weight([4]), 3) == [0, 0, 1, 0]
    assert charmult.hesselink_series(Weight([1]), 3) == [0, 0, 1, 0]
    assert charmult.hesselink_series(Weight([2]), 3) == [0, 1, 0, 0]
    for l in (1, 2, 3):
        w1 = build_root_system(l).fundamental[0]
        assert charmult.trim(charmult.hesselink_series(w1, 2 * l + 2)) == [0] * (2 * l) + [1]


@pytest.mark.parametrize("l", [1, 2])
def test_two_routes_agree(l):
    for lam in charmult.dominant_weights(l, 3):
        assert charmult.hesselink_series(lam, 10) == charmult.hesselink_series_alt(lam, 10)


def test_two_routes_agree_rank_three():
    for lam in charmult.dominant_weights(3, 1)[:2]:
        assert charmult.hesselink_series(lam, 6) == charmult.hesselink_series_alt(lam, 6)


@pytest.mark.parametrize("l", [1, 2])
def test_coefficient_sum_is_zero_weight_multiplicity(l):
    for lam in charmult.dominant_weights(l, 3):
        n = charmult.stabilization_order(lam)
        p = charmult.hesselink_series_alt(lam, n + 4)
        assert not any(p[n + 1 :])
        assert sum(p) == charmult.weight_multiplicity(lam, Weight.zero(l))


def test_hesselink_coefficient_outside_cone():
    assert charmult.hesselink_coefficient(2, Weight([-1, 0]), 3) == 0
    assert charmult.hesselink_coefficient(2, Weight([Fraction(1, 2), 0]), 3) == 0
    assert charmult.hesselink_coefficient(1, Weight([1]), 2) == 1
    assert charmult.hesselink_coefficient(1, Weight([1]), 1) == 0


def test_poly_helpers():
    assert charmult.trim([1, 0, 2, 0, 0]) == [1, 0, 2]
    assert charmult.trim([0, 0]) == [0]
    assert charmult.poly_eval_at_one([1, 2, 3]) == 6
    assert charmult.poly_derivative_at_one([1, 2, 3]) == 8
