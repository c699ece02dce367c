"""Partition functions, Kac-character multiplicities and the Hesselink series.

Two independent routes compute ``P_lambda(q) = sum_n [H^n : V(lambda)] q^n``:

* :func:`hesselink_series` expands ``Q_lambda(q)`` in the truncated series
  ring and reads off the coefficient of ``e^0``;
* :func:`hesselink_series_alt` sums ``sgn(w) P_n(w.lambda)`` over the dot
  orbit, where ``P_n(nu)`` is a direct count of exponent vectors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import DomainError, LatticeError
from .formal import Factor, GroupRingElement, QSeries, expand_product, j_apply
from .rootdata import (
    Weight,
    build_root_system,
    format_weight,
    from_simple_coords,
    height,
    in_root_lattice,
    is_dominant_integral,
    to_simple_coords,
)
from .weyl import DEFAULT_CAP, act, dot_act, enumerate_weyl

# ---------------------------------------------------------------- partitions


@lru_cache(maxsize=None)
def _roots_simple(l: int):
    R = build_root_system(l)
    even = tuple(tuple(int(c) for c in to_simple_coords(a)) for a in R.even_pos)
    odd = tuple(tuple(int(c) for c in to_simple_coords(b)) for b in R.odd_pos)
    return even, odd


def _lattice_coords(l: int, nu) -> tuple:
    nu = Weight(nu)
    if len(nu) != l:
        raise LatticeError(f"weight {format_weight(nu)} has rank {len(nu)}, expected {l}", weight=nu)
    if not in_root_lattice(nu):
        raise LatticeError(f"{format_weight(nu)} is not in the root lattice Z pi", weight=nu)
    return tuple(int(c) for c in to_simple_coords(nu))


@lru_cache(maxsize=None)
def _count(roots: tuple, caps: tuple, i: int, c: tuple) -> int:
    # number of ways to write c with roots[i:], root j used at most caps[j] times (-1 = unbounded)
    if i == len(roots):
        return 1 if not any(c) else 0
    r = roots[i]
    cap = caps[i]
    total = 0
    k = 0
    cur = c
    while True:
        total += _count(roots, caps, i + 1, cur)
        k += 1
        if cap >= 0 and k > cap:
            break
        cur = tuple(a - b for a, b in zip(cur, r))
        if any(a < 0 for a in cur):
            break
    return total


def kostant_tau(l: int, nu) -> int:
    """Kostant partition function over all of Delta^+ (odd roots unrestricted)."""
    c = _lattice_coords(l, nu)
    if any(x < 0 for x in c):
        return 0
    even, odd = _roots_simple(l)
    roots = even + odd
    return _count(roots, (-1,) * len(roots), 0, c)


def super_partition(l: int, nu) -> int:
    """Coefficient of ``e^{-nu}`` in ``prod (1 - e^{-alpha})^{-1} prod (1 + e^{-beta})``."""
    c = _lattice_coords(l, nu)
    if any(x < 0 for x in c):
        return 0
    even, odd = _roots_simple(l)
    return _count(even + odd, (-1,) * len(even) + (1,) * len(odd), 0, c)


@lru_cache(maxsize=None)
def _graded_even(l: int, i: int, c: tuple, k: int) -> int:
    # ways to write c as a sum of exactly k even positive roots drawn from even[i:]
    even, _ = _roots_simple(l)
    if i == len(even):
        return 1 if k == 0 and not any(c) else 0
    r = even[i]
    total = 0
    cur = c
    for used in range(k + 1):
        if any(a < 0 for a in cur):
            break
        total += _graded_even(l, i + 1, cur, k - used)
        cur = tuple(a - b for a, b in zip(cur, r))
    return total


def hesselink_coefficient(l: int, nu, r: int) -> int:
    """``P_r(nu)``: coefficient of ``e^nu q^r`` in
    ``prod_{Delta_0^+}(1 - q e^alpha)^{-1} (1 + q^{2l} e^{beta_1}) prod_{i>=2}(1 + e^{beta_i})``.

    Zero outside ``N pi`` (including non-lattice weights).
    """
    nu = Weight(nu)
    if r < 0 or not in_root_lattice(nu):
        return 0
    c = tuple(int(x) for x in to_simple_coords(nu))
    if any(x < 0 for x in c):
        return 0
    _, odd = _roots_simple(l)
    total = 0
    for eps in itertools.product((0, 1), repeat=l):
        k = r - 2 * l * eps[0]
        if k < 0:
            continue
        rest = c
        for e, b in zip(eps, odd):
            if e:
                rest = tuple(a - x for a, x in zip(rest, b))
        if any(a < 0 for a in rest):
            continue
        total += _graded_even(l, 0, rest, k)
    return total


# ------------------------------------------------------------ multiplicities


def _require_dominant(lam) -> Weight:
    lam = Weight(lam)
    if not is_dominant_integral(lam):
        raise DomainError(f"lambda={format_weight(lam)} is not in P+(pi)", weight=lam)
    return lam


@lru_cache(maxsize=None)
def _mult(lam: Weight, mu: Weight) -> int:
    l = len(lam)
    if not in_root_lattice(lam - mu):
        return 0
    r = build_root_system(l).rho
    lr = lam + r
    mr = mu + r
    return sum(w.sign * super_partition(l, act(w, lr) - mr) for w in enumerate_weyl(l))


def weight_multiplicity(lam, mu) -> int:
    """``dim V(lam)_mu`` from the Kac character, as an alternating tau-bar sum."""
    lam = _require_dominant(lam)
    mu = Weight(mu)
    if len(mu) != len(lam):
        raise DomainError(f"mu={format_weight(mu)} has the wrong rank", weight=mu)
    return _mult(lam, mu)


@dataclass(frozen=True)
class MultiplicityTable:
    lam: Weight
    entries: dict = field(hash=False)

    def dimension(self) -> int:
        return sum(self.entries.values())

    def __getitem__(self, mu) -> int:
        return self.entries.get(Weight(mu), 0)

    def as_group_ring(self) -> GroupRingElement:
        return GroupRingElement(self.entries)


def _cone_below(bound: tuple):
    return itertools.product(*(range(b + 1) for b in bound))


def full_table(lam) -> MultiplicityTable:
    """All nonzero multiplicities; candidates ``mu = lam - nu`` with ``0 <= nu <= 2 lam``."""
    lam = _require_dominant(lam)
    bound = tuple(int(c) for c in to_simple_coords(2 * lam))
    entries = {}
    for c in _cone_below(bound):
        mu = lam - from_simple_coords(c)
        m = _mult(lam, mu)
        if m:
            entries[mu] = m
    return MultiplicityTable(lam, entries)


def h_total_multiplicity(lam) -> int:
    """``[H : V(lam)] = dim V(lam)_0``."""
    lam = _require_dominant(lam)
    return _mult(lam, Weight.zero(len(lam)))


def stabilization_order(lam) -> int:
    """Order at which ``P_lam(q)`` is taken as complete: ``height(2 lam) + 2l``.

    Heuristic; the test suite checks it empirically against a larger order.
    """
    lam = Weight(lam)
    return int(height(2 * lam)) + 2 * len(lam)


# --------------------------------------------------------- Hesselink series


def hesselink_tail(l: int, order: int) -> QSeries:
    """``prod_{Delta_0^+}(1 - q e^{-alpha})^{-1} (1 + q^{2l} e^{-beta_1}) prod_{i>=2}(1 + e^{-beta_i})``."""
    R = build_root_system(l)
    fs = [Factor(-a, 1, -1, True) for a in R.even_pos]
    fs.append(Factor(-R.odd_pos[0], 2 * l))
    fs += [Factor(-b, 0) for b in R.odd_pos[1:]]
    return expand_product(fs, order)


def q_lambda(lam, order: int, cap: int = DEFAULT_CAP) -> QSeries:
    """``Q_lam(q) = e^{-rho} J(e^{lam+rho}) * hesselink_tail``, truncated."""
    lam = Weight(lam)
    l = len(lam)
    r = build_root_system(l).rho
    num = j_apply(GroupRingElement.monomial(lam + r), l, cap) * GroupRingElement.monomial(-r)
    return hesselink_tail(l, order) * num


def hesselink_series(lam, order: int, cap: int = DEFAULT_CAP) -> list:
    """Coefficient of ``e^0`` in ``Q_lam(q)``, degrees ``0..order``."""
    lam = _require_dominant(lam)
    return q_lambda(lam, order, cap).project(Weight.zero(len(lam)))


def hesselink_series_alt(lam, order: int, cap: int = DEFAULT_CAP) -> list:
    """``[H^n : V(lam)] = sum_w (-1)^{l(w)} P_n(w.lam)`` for ``n = 0..order``."""
    lam = _require_dominant(lam)
    l = len(lam)
    out = [0] * (order + 1)
    for w in enumerate_weyl(l, cap):
        nu = dot_act(w, lam)
        for n in range(order + 1):
            p = hesselink_coefficient(l, nu, n)
            if p:
                out[n] += w.sign * p
    return out


def trim(poly) -> list:
    """Drop trailing zeros (keeps at least one entry)."""
    p = list(poly)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def dominant_weights(l: int, max_coord: int) -> list:
    """``P^+(pi)`` in beta-coordinates: weakly decreasing naturals bounded by ``max_coord``."""
    out = []
    for t in itertools.product(range(max_coord + 1), repeat=l):
        if all(t[i] >= t[i + 1] for i in range(l - 1)):
            out.append(Weight(t))
    return out


def poly_eval_at_one(poly) -> int:
    return sum(poly)


def poly_derivative_at_one(poly) -> int:
    return sum(i * c for i, c in enumerate(poly))
