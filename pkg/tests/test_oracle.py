import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from osp_annihilator import determinants as det, oracle, weyl
from osp_annihilator.errors import DomainError, ResourceCapError
from osp_annihilator.rootdata import Weight, build_root_system, verma_is_simple

from conftest import dominant, half_integers, weights

H = Fraction(1, 2)


def test_oracle_examples():
    assert oracle.annihilator_centrally_generated(Weight([0, 0]))
    for l in (1, 2, 3):
        assert not oracle.annihilator_centrally_generated(-build_root_system(l).rho)
    assert not oracle.annihilator_centrally_generated(Weight([0, -H]))


@given(weights(2, half_integers()), st.sampled_from(weyl.enumerate_weyl(2)))
def test_oracle_constant_on_dot_orbits(mu, w):
    assert oracle.annihilator_centrally_generated(weyl.dot_act(w, mu)) == oracle.annihilator_centrally_generated(mu)


@given(weights(2, half_integers()), dominant(2, 2))
def test_exotic_factors_vanish_exactly_on_hyperplanes(mu, lam):
    exotic = [f for f, e, fam in det.prv_factorization(lam).factors if fam == det.EXOTIC]
    if exotic:
        assert any(f(mu) == 0 for f in exotic) == (not oracle.annihilator_centrally_generated(mu))


@given(weights(2, half_integers()), dominant(2, 2))
def test_no_vanishing_at_simple_weights_off_hyperplanes(mu, lam):
    if oracle.annihilator_centrally_generated(mu) and verma_is_simple(mu):
        assert det.evaluate_factored(det.prv_factorization(lam), mu).vanishing_order == 0


def test_corank_lower_bound():
    w1 = Weight([1, 0])
    assert oracle.corank_lower_bound(w1, Weight([1, -H])) == 1
    assert oracle.corank_lower_bound(w1, Weight([0, 0])) == 0
    assert oracle.corank_lower_bound(Weight([3]), -build_root_system(1).rho) == 1
    with pytest.raises(DomainError):
        oracle.corank_lower_bound(Weight([0, 1]), Weight([0, 0]))


def test_rank_one_answers():
    assert oracle.l1_h_decomposition(0) == [0]
    assert oracle.l1_h_decomposition(1) == [2]
    assert oracle.l1_h_decomposition(4) == [8, 5]
    with pytest.raises(DomainError):
        oracle.l1_h_decomposition(-1)
    assert oracle.l1_annihilator_in_H(Weight([-H])) == oracle.ANN_ODD
    assert oracle.l1_annihilator_in_H(Weight([0])) == oracle.ANN_ZERO
    assert oracle.l1_annihilator_in_H(Weight([5])) == oracle.ANN_ZERO
    with pytest.raises(DomainError):
        oracle.l1_annihilator_in_H(Weight([0, 0]))


@pytest.mark.parametrize("l,depth,order", [(1, 8, 10), (2, 6, 8)])
def test_suite_passes(l, depth, order):
    report = oracle.verify_suite(l, depth, order)
    assert report.all_pass, report.lines()
    names = [c.name for c in report.checks]
    assert names == sorted(names)
    assert json.loads(json.dumps(report.to_json()))["allPass"] is True


def test_suite_is_deterministic():
    a = oracle.verify_suite(1, 4, 6).to_json()
    b = oracle.verify_suite(1, 4, 6).to_json()
    assert json.dumps(a) == json.dumps(b)


def test_mutated_rho_is_caught():
    # shifting rho breaks the J-identity; the witness names a q-degree and a weight
    bad = build_root_system(2).rho + Weight([H, 0])
    report = oracle.verify_suite(2, 2, 4, rho_override=bad)
    assert not report.all_pass
    [failed] = report.failures()
    assert failed.name == "hesprop"
    assert failed.witness.startswith("q^")


@pytest.mark.parametrize("l", [1, 2, 3])
def test_hesprop_to_order_12(l):
    assert oracle.check_hesprop(l, 12).passed


def test_resource_limits():
    with pytest.raises(ResourceCapError):
        oracle.verify_suite(7, 2, 2)
    with pytest.raises(ResourceCapError):
        oracle.verify_suite(1, 2, oracle.MAX_ORDER + 1)


def test_poincare_product():
    assert oracle.poincare_product(2) == [1, 2, 2, 2, 1]
    for l in (1, 2, 3, 4):
        assert oracle.check_poincare(l).passed


def test_partition_oracle_check():
    assert oracle.check_partition_oracles(2, 8).passed
    assert len(oracle.cone_weights(2, 2)) == 6
