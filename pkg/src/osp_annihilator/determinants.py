"""Shapovalov and PRV determinants as multisets of linear factors.

A :class:`LinearFactor` ``(alpha, c)`` is the affine functional
``mu -> (alpha, mu) + c``, written ``phi(alpha) + c``.  Determinants are
defined up to a nonzero scalar, so two of them are equal when their factor
multisets agree.  No matrices are built.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .charmult import kostant_tau, weight_multiplicity
from .errors import ConeError, DomainError, RankError
from .rootdata import (
    Weight,
    bilinear,
    build_root_system,
    format_rational,
    format_weight,
    height,
    in_root_cone,
    is_dominant_integral,
)

EVEN = "even-standard"
ODD = "odd-standard"
EXOTIC = "exotic"
_FAMILY_ORDER = {EVEN: 0, ODD: 1, EXOTIC: 2}


@dataclass(frozen=True)
class LinearFactor:
    alpha: Weight
    c: Fraction

    def __post_init__(self):
        if Weight(self.alpha).is_zero():
            raise DomainError("linear factor with alpha = 0")

    def __call__(self, mu) -> Fraction:
        return bilinear(self.alpha, mu) + self.c

    def render(self) -> str:
        return f"φ({_root_name(self.alpha)}){_signed(self.c)}"


def _signed(c: Fraction) -> str:
    if c == 0:
        return ""
    return f"+{format_rational(c)}" if c > 0 else f"-{format_rational(-c)}"


def _root_name(alpha) -> str:
    parts = []
    for i, x in enumerate(alpha):
        if not x:
            continue
        coef = "" if abs(x) == 1 else format_rational(abs(x))
        sign = "-" if x < 0 else ("+" if parts else "")
        parts.append(f"{sign}{coef}β{i + 1}")
    return "".join(parts)


@dataclass(frozen=True)
class FactoredDeterminant:
    kind: str  # "shapovalov" | "prv"
    label: Weight
    factors: tuple  # of (LinearFactor, exponent, family), merged and sorted

    @classmethod
    def build(cls, kind, label, items) -> "FactoredDeterminant":
        exps = Counter()
        fam = {}
        for f, e, family in items:
            if e:
                exps[f] += e
                fam.setdefault(f, family)
        keyed = sorted(exps, key=lambda f: (_FAMILY_ORDER.get(fam[f], 3), tuple(-x for x in f.alpha), -f.c))
        merged = tuple((f, exps[f], fam[f]) for f in keyed if exps[f])
        return cls(kind, Weight(label), merged)

    def multiset(self) -> dict:
        return {f: e for f, e, _ in self.factors}

    def __eq__(self, other):
        if not isinstance(other, FactoredDeterminant):
            return NotImplemented
        return self.multiset() == other.multiset()

    __hash__ = None

    def degree(self) -> int:
        return sum(e for _, e, _ in self.factors)

    def family_degree(self, family: str) -> int:
        return sum(e for _, e, fam in self.factors if fam == family)

    def render(self) -> str:
        if not self.factors:
            return "1"
        return " · ".join(f"({f.render()})^{e}" for f, e, _ in self.factors)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "label": [format_rational(x) for x in self.label],
            "factors": [
                {"alpha": [format_rational(x) for x in f.alpha], "c": format_rational(f.c), "exp": e, "family": fam}
                for f, e, fam in self.factors
            ],
        }


def from_multiset(kind: str, label, pairs) -> FactoredDeterminant:
    """Build from ``(LinearFactor, exponent)`` pairs; family left blank."""
    return FactoredDeterminant.build(kind, label, [(f, e, "") for f, e in pairs])


def shapovalov_factorization(l: int, nu) -> FactoredDeterminant:
    """``det S_nu`` with exponents given verbatim by the Kostant function tau."""
    nu = Weight(nu)
    if len(nu) != l:
        raise RankError(f"nu={format_weight(nu)} does not have rank {l}", weight=nu)
    if not in_root_cone(nu):
        raise ConeError(f"nu={format_weight(nu)} is not in N pi", weight=nu)
    R = build_root_system(l)
    h = height(nu)
    items = []
    for a in R.even_bar_pos:
        m = 1
        while m * height(a) <= h:
            c = bilinear(R.rho, a) - Fraction(m, 2) * bilinear(a, a)
            items.append((LinearFactor(a, c), kostant_tau(l, nu - m * a), EVEN))
            m += 1
    for b in R.odd_pos:
        m = 1
        while (2 * m - 1) * height(b) <= h:
            c = bilinear(R.rho, b) - Fraction(2 * m - 1, 2) * bilinear(b, b)
            items.append((LinearFactor(b, c), kostant_tau(l, nu - (2 * m - 1) * b), ODD))
            m += 1
    return FactoredDeterminant.build("shapovalov", nu, items)


def _require_dominant(lam) -> Weight:
    lam = Weight(lam)
    if not is_dominant_integral(lam):
        raise DomainError(f"lambda={format_weight(lam)} is not in P+(pi)", weight=lam)
    return lam


def _max_multiple(lam: Weight, alpha: Weight) -> int:
    # weights of V(lam) satisfy |mu_i| <= lam_1, so m*alpha is outside beyond this m
    top = max(abs(x) for x in alpha)
    return int(lam[0] // top) if lam else 0


def exotic_exponent(lam, beta=None) -> int:
    """``sum_{m>=1} (-1)^{m+1} dim V(lam)_{m beta}`` (beta defaults to beta_1)."""
    lam = _require_dominant(lam)
    R = build_root_system(len(lam))
    beta = R.odd_pos[0] if beta is None else Weight(beta)
    if beta not in R.odd_pos:
        raise DomainError(f"{format_weight(beta)} is not a positive odd root", weight=beta)
    total = 0
    for m in range(1, _max_multiple(lam, beta) + 1):
        d = weight_multiplicity(lam, m * beta)
        total += d if m % 2 else -d
    return total


def prv_factorization(lam) -> FactoredDeterminant:
    """``det PRV^lam``: standard factors for reduced even and odd roots plus exotic factors."""
    lam = _require_dominant(lam)
    R = build_root_system(len(lam))
    items = []
    for a in R.even_bar_pos:
        for m in range(1, _max_multiple(lam, a) + 1):
            c = bilinear(R.rho, a) - Fraction(m, 2) * bilinear(a, a)
            items.append((LinearFactor(a, c), weight_multiplicity(lam, m * a), EVEN))
    for b in R.odd_pos:
        for m in range(1, (_max_multiple(lam, b) + 1) // 2 + 1):
            c = bilinear(R.rho, b) - Fraction(2 * m - 1, 2) * bilinear(b, b)
            items.append((LinearFactor(b, c), weight_multiplicity(lam, (2 * m - 1) * b), ODD))
        items.append((LinearFactor(b, bilinear(R.rho, b)), exotic_exponent(lam, b), EXOTIC))
    return FactoredDeterminant.build("prv", lam, items)


def prv_degree_bound(lam) -> int:
    """Upper bound on ``deg det PRV^lam`` from the derivative of the Hesselink series at 1."""
    lam = _require_dominant(lam)
    l = len(lam)
    R = build_root_system(l)
    b1 = R.odd_pos[0]
    total = 0
    top = int(lam[0]) if lam else 0
    for m in range(1, top + 1):
        total += sum(weight_multiplicity(lam, m * a) for a in R.even_pos)
        d = weight_multiplicity(lam, m * b1)
        total += 2 * l * (d if m % 2 else -d)
    return total


@dataclass(frozen=True)
class Evaluation:
    value: Fraction  # only meaningful up to the determinant's overall scalar
    vanishing_order: int
    scalar_normalized: bool = True


def evaluate_factored(d: FactoredDeterminant, mu) -> Evaluation:
    mu = Weight(mu)
    value = Fraction(1)
    order = 0
    for f, e, _ in d.factors:
        if len(f.alpha) != len(mu):
            raise RankError(f"mu={format_weight(mu)} has rank {len(mu)}, determinant has {len(f.alpha)}", weight=mu)
        v = f(mu)
        if v == 0:
            order += e
        value *= v**e
    return Evaluation(value, order)
