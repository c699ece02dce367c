"""Sparse group ring Z[h*] and its q-truncated power series ring.

``GroupRingElement`` holds ``{Weight: int}`` with no zero entries.
``QSeries`` holds one group-ring element per q-degree ``0..order``; every
operation discards degrees above ``order`` (the smaller order wins when two
series are combined).

Two truncation regimes exist for :func:`expand_product`:

* q-order truncation, valid when every inverted factor carries a positive
  power of q (all graded characters below are of this kind);
* height truncation in the negative root cone, for q-free products such as
  the Kac denominator, where every factor must shift into ``-N pi``.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction

from .errors import RankError, TruncationError
from .rootdata import Weight, build_root_system, format_rational, height, in_root_cone
from .weyl import DEFAULT_CAP, act, enumerate_weyl, poincare_polynomial

_add = operator.add


def _wadd(x, y):
    return Weight._raw(tuple(map(_add, x, y)))


def _sort_key(w):
    return (-sum(w), tuple(-c for c in w))


def _accumulate(dst: dict, a: dict, b: dict, scale: int = 1):
    for x, cx in a.items():
        cx *= scale
        for y, cy in b.items():
            k = _wadd(x, y)
            v = dst.get(k, 0) + cx * cy
            if v:
                dst[k] = v
            else:
                dst.pop(k, None)


class GroupRingElement:
    """Finite sum ``sum c_lambda e^lambda`` with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for k, v in dict(terms).items():
                if v:
                    k = k if isinstance(k, Weight) else Weight(k)
                    clean[k] = clean.get(k, 0) + int(v)
            clean = {k: v for k, v in clean.items() if v}
        self.terms = clean

    @classmethod
    def _wrap(cls, terms: dict) -> "GroupRingElement":
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def monomial(cls, weight, coeff: int = 1) -> "GroupRingElement":
        return cls({Weight(weight): coeff})

    @classmethod
    def one(cls, rank: int) -> "GroupRingElement":
        return cls._wrap({Weight.zero(rank): 1})

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, GroupRingElement):
            return self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return GroupRingElement._wrap(out)

    def __neg__(self):
        return GroupRingElement._wrap({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return GroupRingElement()
            return GroupRingElement._wrap({k: v * other for k, v in self.terms.items()})
        if isinstance(other, GroupRingElement):
            out = {}
            _accumulate(out, self.terms, other.terms)
            return GroupRingElement._wrap(out)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def coeff(self, mu) -> int:
        return self.terms.get(Weight(mu), 0)

    def map_weights(self, f) -> "GroupRingElement":
        out = {}
        for k, v in self.terms.items():
            k2 = f(k)
            s = out.get(k2, 0) + v
            if s:
                out[k2] = s
            else:
                out.pop(k2, None)
        return GroupRingElement._wrap(out)

    def sorted_items(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: _sort_key(kv[0]))

    def to_json(self) -> list:
        return [{"w": [format_rational(c) for c in k], "c": v} for k, v in self.sorted_items()]

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = [f"{v}*e^({','.join(format_rational(c) for c in k)})" for k, v in self.sorted_items()]
        return " + ".join(parts)


class QSeries:
    """Power series in q over the group ring, exact up to ``q^order``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=()):
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = [c if isinstance(c, GroupRingElement) else GroupRingElement(c) for c in list(coeffs)[: order + 1]]
        cs += [GroupRingElement() for _ in range(order + 1 - len(cs))]
        self.order = order
        self.coeffs = cs

    @classmethod
    def constant(cls, a: GroupRingElement, order: int) -> "QSeries":
        return cls(order, [a])

    @classmethod
    def monomial(cls, weight, q_power: int, order: int, coeff: int = 1) -> "QSeries":
        cs = [GroupRingElement() for _ in range(order + 1)]
        if q_power <= order:
            cs[q_power] = GroupRingElement.monomial(weight, coeff)
        return cls(order, cs)

    @classmethod
    def from_int_poly(cls, poly, rank: int, order: int) -> "QSeries":
        """A series with scalar (``e^0``) coefficients."""
        z = Weight.zero(rank)
        return cls(order, [GroupRingElement({z: c}) for c in poly])

    def truncate(self, order: int) -> "QSeries":
        return QSeries(min(order, self.order), self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def _coerce(self, other):
        if isinstance(other, QSeries):
            return other
        if isinstance(other, GroupRingElement):
            return QSeries.constant(other, self.order)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        return QSeries(n, [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    __radd__ = __add__

    def __neg__(self):
        return QSeries(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries(self.order, [c * other for c in self.coeffs])
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        out = [dict() for _ in range(n + 1)]
        for i in range(n + 1):
            a = self.coeffs[i].terms
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j].terms
                if b:
                    _accumulate(out[i + j], a, b)
        return QSeries(n, [GroupRingElement._wrap(d) for d in out])

    __rmul__ = __mul__

    def map_weights(self, f) -> "QSeries":
        return QSeries(self.order, [c.map_weights(f) for c in self.coeffs])

    def project(self, mu) -> list:
        """Coefficient of ``e^mu`` in each q-degree."""
        mu = Weight(mu)
        return [c.coeff(mu) for c in self.coeffs]

    def term_count(self) -> int:
        return sum(len(c) for c in self.coeffs)

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [{"q": r, "terms": c.to_json()} for r, c in enumerate(self.coeffs)]}

    def __repr__(self):
        parts = [f"q^{r}*({c!r})" for r, c in enumerate(self.coeffs) if c]
        return f"QSeries(order={self.order}: " + (" + ".join(parts) or "0") + ")"


def _rank_of(a, l):
    if l is not None:
        return l
    terms = a.terms if isinstance(a, GroupRingElement) else next((c.terms for c in a.coeffs if c), {})
    if not terms:
        raise RankError("cannot infer rank of the zero element; pass l")
    return len(next(iter(terms)))


def weyl_apply(w, a):
    """``w(e^lambda) = e^{w lambda}``, q fixed."""
    f = lambda k: act(w, k)  # noqa: E731
    return a.map_weights(f)


def j_apply(a, l: int | None = None, cap: int = DEFAULT_CAP):
    """The signed symmetrizer ``J = sum_w sgn(w) w``."""
    l = _rank_of(a, l) if (a or l is not None) else None
    if l is None:
        return a
    W = enumerate_weyl(l, cap)

    def sym(terms: dict) -> dict:
        out = {}
        for k, v in terms.items():
            for w in W:
                k2 = act(w, k)
                s = out.get(k2, 0) + (v if w.sign > 0 else -v)
                if s:
                    out[k2] = s
                else:
                    out.pop(k2, None)
        return out

    if isinstance(a, GroupRingElement):
        return GroupRingElement._wrap(sym(a.terms))
    return QSeries(a.order, [GroupRingElement._wrap(sym(c.terms)) for c in a.coeffs])


def project_coeff(a, mu):
    """``pi_mu``: an integer for a group-ring element, a list per q-degree for a series."""
    if isinstance(a, GroupRingElement):
        return a.coeff(mu)
    return a.project(mu)


def iota(a):
    """``e^lambda -> e^{-lambda}``."""
    return a.map_weights(operator.neg)


@dataclass(frozen=True)
class Factor:
    """``(1 + sign * q^q_power * e^shift) ** (-1 if inverted else 1)``."""

    shift: Weight
    q_power: int = 0
    sign: int = 1
    inverted: bool = False


def _series_of_factor(f: Factor, order: int, height_bound):
    rank = len(f.shift)
    z = Weight.zero(rank)
    cs = [dict() for _ in range(order + 1)]
    cs[0][z] = 1
    if not f.inverted:
        if f.q_power <= order:
            d = cs[f.q_power]
            d[f.shift] = d.get(f.shift, 0) + f.sign
            if not d[f.shift]:
                del d[f.shift]
        return cs
    # (1 + s x)^{-1} = sum_k (-s)^k x^k
    if f.q_power >= 1:
        kmax = order // f.q_power
    else:
        kmax = int(Fraction(height_bound) // height(-f.shift))
    if f.q_power >= 1 and height_bound is not None and not f.shift.is_zero():
        kmax = min(kmax, int(Fraction(height_bound) // height(-f.shift)))
    w = z
    c = 1
    for k in range(1, kmax + 1):
        w = _wadd(w, f.shift)
        c *= -f.sign
        d = cs[k * f.q_power]
        d[w] = d.get(w, 0) + c
    return cs


def expand_product(factors, order: int, height_bound=None) -> QSeries:
    """Truncated expansion of a product of binomial factors and their inverses.

    Inverted factors need ``q_power >= 1``; otherwise a ``height_bound`` must
    be given, in which case every factor must shift into the negative root
    cone and terms deeper than the bound are discarded.
    """
    factors = list(factors)
    if not factors:
        raise ValueError("expand_product needs at least one factor (to fix the rank)")
    rank = len(factors[0].shift)
    if height_bound is not None:
        for f in factors:
            if not in_root_cone(-f.shift):
                raise TruncationError(f"height truncation needs shifts in -N pi; got {f.shift!r}")
            if f.inverted and f.shift.is_zero():
                raise TruncationError("inverted factor with zero shift has no height grading")
    for f in factors:
        if len(f.shift) != rank:
            raise RankError("factors of different ranks")
        if f.inverted and f.q_power < 1 and height_bound is None:
            raise TruncationError(
                f"inverted factor (1{f.sign:+d}e^{f.shift!r})^-1 carries no q and no height bound was supplied"
            )
    acc = [dict() for _ in range(order + 1)]
    acc[0][Weight.zero(rank)] = 1
    for f in factors:
        fs = _series_of_factor(f, order, height_bound)
        out = [dict() for _ in range(order + 1)]
        for i in range(order + 1):
            if not acc[i]:
                continue
            for j in range(order + 1 - i):
                if fs[j]:
                    _accumulate(out[i + j], acc[i], fs[j])
        if height_bound is not None:
            hb = Fraction(height_bound)
            out = [{k: v for k, v in d.items() if height(k) >= -hb} for d in out]
        acc = out
    return QSeries(order, [GroupRingElement._wrap(d) for d in acc])


# graded characters


def chq_exterior_odd(l: int, order: int) -> QSeries:
    """``ch_q Lambda g_1 = prod_{beta in Delta_1} (1 + q e^beta)``."""
    R = build_root_system(l)
    fs = [Factor(b, 1) for b in R.odd_pos] + [Factor(-b, 1) for b in R.odd_pos]
    return expand_product(fs, order)


def chq_sym_even(l: int, order: int, direction: int = 1) -> QSeries:
    """``prod_{alpha in Delta_0^+} (1 - q e^{direction * alpha})^{-1}``."""
    R = build_root_system(l)
    return expand_product([Factor(direction * a, 1, -1, True) for a in R.even_pos], order)


def chq_sym_n(l: int, order: int, direction: int = 1) -> QSeries:
    """``ch_q S(n^+)`` (direction 1) or ``ch_q S(n^-)`` (direction -1)."""
    R = build_root_system(l)
    fs = [Factor(direction * a, 1, -1, True) for a in R.even_pos]
    fs += [Factor(direction * b, 1) for b in R.odd_pos]
    return expand_product(fs, order)


def poincare_series(l: int, order: int, cap: int = DEFAULT_CAP) -> QSeries:
    return QSeries.from_int_poly(poincare_polynomial(l, cap), l, order)


def build_chq_H(l: int, order: int, cap: int = DEFAULT_CAP) -> QSeries:
    """``prod_{alpha in Delta_0} (1 - q e^alpha)^{-1} * ch_q Lambda g_1 * sum_w q^{l(w)}``."""
    R = build_root_system(l)
    fs = [Factor(a, 1, -1, True) for a in R.even_pos]
    fs += [Factor(-a, 1, -1, True) for a in R.even_pos]
    fs += [Factor(b, 1) for b in R.odd_pos] + [Factor(-b, 1) for b in R.odd_pos]
    return expand_product(fs, order) * poincare_series(l, order, cap)


def kac_denominator(l: int, height_bound) -> GroupRingElement:
    """``prod_{Delta_0^+} (1 - e^{-alpha})^{-1} prod_{Delta_1^+} (1 + e^{-beta})`` to depth ``height_bound``."""
    R = build_root_system(l)
    fs = [Factor(-a, 0, -1, True) for a in R.even_pos] + [Factor(-b, 0) for b in R.odd_pos]
    return expand_product(fs, 0, height_bound=height_bound).coeffs[0]


def exterior_power_chars(l: int) -> list:
    """``ch Lambda^r g_1`` for ``r = 0..2l`` (the q-coefficients of ch_q Lambda g_1)."""
    return list(chq_exterior_odd(l, 2 * l).coeffs)
