from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from osp_annihilator.errors import DomainError, RankError
from osp_annihilator.rootdata import (
    Weight,
    bilinear,
    build_root_system,
    delta_lambda,
    format_weight,
    from_simple_coords,
    height,
    in_root_cone,
    in_root_lattice,
    integral_pairing,
    is_dominant,
    is_dominant_integral,
    parse_rational,
    parse_weight,
    to_simple_coords,
    verma_is_simple,
)

from conftest import rationals, weights

H = Fraction(1, 2)


def W(*xs):
    return Weight(xs)


def test_rank_one_lists():
    R = build_root_system(1)
    assert R.even_pos == (W(2),)
    assert R.odd_pos == (W(1),)
    assert R.even_bar_pos == ()
    assert R.rho == W(H)


def test_rank_two_lists():
    R = build_root_system(2)
    assert R.rho == W(Fraction(3, 2), H)
    assert R.odd_pos == (W(1, 0), W(0, 1))
    assert R.even_bar_pos == (W(1, -1), W(1, 1))
    assert R.simple == (W(1, -1), W(0, 1))
    assert R.fundamental == (W(1, 0), W(1, 1))


@pytest.mark.parametrize("l", [1, 2, 3, 4, 5])
def test_root_counts(l):
    R = build_root_system(l)
    assert len(R.even_pos) == l * l
    assert len(R.odd_pos) == l
    assert len(R.even_bar_pos) == l * (l - 1)
    # every positive root is a natural combination of the simple roots
    assert all(in_root_cone(a) and not a.is_zero() for a in R.positive)
    # rho is half the even sum minus half the odd sum
    assert 2 * R.rho == sum(R.even_pos, Weight.zero(l)) - sum(R.odd_pos, Weight.zero(l))
    assert all(bilinear(R.rho, b) == l - i + H for i, b in enumerate(R.odd_pos, 1))


@pytest.mark.parametrize("l", [0, -1])
def test_invalid_rank(l):
    with pytest.raises(RankError):
        build_root_system(l)


def test_pairings():
    b1 = W(1, 0)
    assert bilinear(b1, b1) == 1
    assert bilinear(W(3, 1), Weight.zero(2)) == 0
    assert integral_pairing(b1, b1) == 2
    assert integral_pairing(build_root_system(2).rho, W(1, -1)) == 1
    with pytest.raises(ZeroDivisionError):
        integral_pairing(b1, Weight.zero(2))


@given(weights(2))
def test_pairing_with_doubled_root_is_half(mu):
    assert integral_pairing(mu, W(0, 2)) == integral_pairing(mu, W(0, 1)) / 2


def test_rank_mismatch():
    with pytest.raises(RankError):
        W(1, 2) + W(1)


def test_dominant_integral_examples():
    assert is_dominant_integral(W(0, 0))
    assert is_dominant_integral(W(1))
    assert is_dominant_integral(W(2, 1))
    assert not is_dominant_integral(W(H, 0))
    assert not is_dominant_integral(W(1, 2))
    assert not is_dominant_integral(W(-1))


@given(st.lists(st.integers(0, 4), min_size=3, max_size=3))
def test_dominant_integral_is_natural_span_of_fundamentals(ks):
    R = build_root_system(3)
    lam = Weight.zero(3)
    for k, w in zip(ks, R.fundamental):
        lam = lam + k * w
    assert is_dominant_integral(lam)


def test_is_dominant_examples():
    R = build_root_system(1)
    assert is_dominant(W(0))
    assert not is_dominant(W(-2))
    assert is_dominant(-R.rho)
    assert is_dominant(-build_root_system(3).rho)


def test_verma_simple_examples():
    assert verma_is_simple(-build_root_system(1).rho)
    assert not verma_is_simple(W(0))
    rho2 = build_root_system(2).rho
    assert verma_is_simple(W(Fraction(1, 3), Fraction(1, 7)) - rho2)


def test_delta_lambda_examples():
    assert delta_lambda(W(0, 0)) == [(W(1, -1), 1), (W(1, 1), 2), (W(1, 0), 3), (W(0, 1), 1)]
    assert delta_lambda(W(0)) == [(W(1), 1)]


@given(weights(2, rationals(4, 4)))
def test_delta_lambda_empty_iff_simple(lam):
    assert (delta_lambda(lam) == []) == verma_is_simple(lam)


def test_parse_and_format():
    assert parse_weight("3/2,1/2") == W(Fraction(3, 2), H)
    assert parse_weight(" -1 , 2/4 ") == W(-1, H)
    assert format_weight(W(Fraction(3, 2), 0)) == "3/2,0"
    assert parse_rational("-7/3") == Fraction(-7, 3)
    for bad in ("0.5", "1e3", "", "1,,2", "abc", "1/0.5"):
        with pytest.raises(DomainError):
            parse_weight(bad)
    with pytest.raises(RankError):
        parse_weight("1,2", rank=3)


@given(weights(3))
def test_format_roundtrip(w):
    assert parse_weight(format_weight(w)) == w


@given(st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_simple_coordinates_roundtrip(c):
    nu = from_simple_coords(c)
    assert tuple(to_simple_coords(nu)) == tuple(c)
    assert in_root_lattice(nu)
    assert height(nu) == sum(c)
    assert in_root_cone(nu) == all(x >= 0 for x in c)


def test_half_integral_weights_outside_lattice():
    assert not in_root_lattice(W(H, 0))
    assert in_root_lattice(W(1, -3))
