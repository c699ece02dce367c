"""Root data of osp(1, 2l) in the orthonormal basis beta_1, ..., beta_l.

Weights are exact rational vectors.  All lattice conditions (integrality of
pairings, membership in N, odd N, ...) are tested on :class:`fractions.Fraction`
values, never on floats.

Root lists are emitted in a fixed order: the reduced even roots
``beta_i - beta_j, beta_i + beta_j`` lexicographically in ``(i, j)``, then the
doubled odd roots ``2 beta_i``, then the odd roots ``beta_i``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .errors import DomainError, RankError

_RATIONAL = re.compile(r"^\s*[+-]?\d+(\s*/\s*[+-]?\d+)?\s*$")


class Weight(tuple):
    """Exact rational vector in beta-coordinates.

    A tuple subclass so that weights hash and compare at C speed when used
    as group-ring keys.  ``+``, ``-`` and scalar ``*`` are vector operations,
    not tuple concatenation/repetition.
    """

    __slots__ = ()

    def __new__(cls, coords: Iterable = ()):
        return tuple.__new__(cls, (Fraction(c) for c in coords))

    @classmethod
    def _raw(cls, fractions: tuple) -> "Weight":
        # caller guarantees Fraction entries
        return tuple.__new__(cls, fractions)

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls._raw((Fraction(0),) * rank)

    @classmethod
    def basis(cls, rank: int, i: int, scale=1) -> "Weight":
        """``scale * beta_{i+1}`` (0-based index ``i``)."""
        coords = [Fraction(0)] * rank
        coords[i] = Fraction(scale)
        return cls._raw(tuple(coords))

    @property
    def rank(self) -> int:
        return len(self)

    def _check(self, other):
        if not isinstance(other, tuple) or len(other) != len(self):
            raise RankError(
                f"rank mismatch: {format_weight(self)} vs {other!r}", weight=self
            )

    def __add__(self, other):
        self._check(other)
        return Weight._raw(tuple(a + b for a, b in zip(self, other)))

    def __sub__(self, other):
        self._check(other)
        return Weight._raw(tuple(a - b for a, b in zip(self, other)))

    def __neg__(self):
        return Weight._raw(tuple(-a for a in self))

    def __mul__(self, scalar):
        if isinstance(scalar, tuple):
            return NotImplemented
        s = Fraction(scalar)
        return Weight._raw(tuple(s * a for a in self))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self)

    def __repr__(self):
        return f"Weight({format_weight(self)})"


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; decimals and floats are rejected."""
    if not _RATIONAL.match(text):
        raise DomainError(f"not an exact rational: {text!r}")
    return Fraction(text.replace(" ", ""))


def parse_weight(text: str, rank: int | None = None) -> Weight:
    """Parse the comma-separated beta-coordinate format, e.g. ``"3/2,1/2"``."""
    parts = [p for p in text.split(",")]
    if not text.strip() or any(not p.strip() for p in parts):
        raise DomainError(f"malformed weight: {text!r}")
    w = Weight(parse_rational(p) for p in parts)
    if rank is not None and w.rank != rank:
        raise RankError(f"weight {text!r} has {w.rank} coordinates, expected l={rank}", weight=w)
    return w


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def format_weight(w) -> str:
    return ",".join(format_rational(c) for c in w)


@dataclass(frozen=True)
class RootSystem:
    rank: int
    even_pos: tuple  # Delta_0^+
    odd_pos: tuple  # Delta_1^+
    even_bar_pos: tuple  # Delta_0^+ minus 2 Delta_1^+
    simple: tuple  # pi
    rho: Weight
    rho0: Weight
    rho1: Weight
    fundamental: tuple  # omega_1 .. omega_l

    @property
    def positive(self) -> tuple:
        """All positive roots Delta^+ (even then odd)."""
        return self.even_pos + self.odd_pos

    @property
    def irr_pos(self) -> tuple:
        """Irreducible positive roots: reduced even roots and odd roots."""
        return self.even_bar_pos + self.odd_pos


@lru_cache(maxsize=None)
def build_root_system(l: int) -> RootSystem:
    if not isinstance(l, int) or l < 1:
        raise RankError(f"invalid rank l={l!r}; need l >= 1")
    b = [Weight.basis(l, i) for i in range(l)]
    even_bar = []
    for i in range(l):
        for j in range(i + 1, l):
            even_bar.append(b[i] - b[j])
            even_bar.append(b[i] + b[j])
    doubled = [2 * b[i] for i in range(l)]
    even = even_bar + doubled
    odd = list(b)
    simple = [b[i] - b[i + 1] for i in range(l - 1)] + [b[l - 1]]
    half = Fraction(1, 2)
    rho0 = half * sum(even, Weight.zero(l))
    rho1 = half * sum(odd, Weight.zero(l))
    fundamental = []
    acc = Weight.zero(l)
    for i in range(l):
        acc = acc + b[i]
        fundamental.append(acc)
    return RootSystem(
        rank=l,
        even_pos=tuple(even),
        odd_pos=tuple(odd),
        even_bar_pos=tuple(even_bar),
        simple=tuple(simple),
        rho=rho0 - rho1,
        rho0=rho0,
        rho1=rho1,
        fundamental=tuple(fundamental),
    )


def rho(l: int) -> Weight:
    return build_root_system(l).rho


def bilinear(lam, mu) -> Fraction:
    """The invariant form; the beta_i are orthonormal."""
    if len(lam) != len(mu):
        raise RankError(f"rank mismatch: {len(lam)} vs {len(mu)}", weight=lam)
    return sum((Fraction(a) * Fraction(b) for a, b in zip(lam, mu)), Fraction(0))


def integral_pairing(lam, mu) -> Fraction:
    """``<lam, mu> = 2 (lam, mu) / (mu, mu)``."""
    norm = bilinear(mu, mu)
    if norm == 0:
        raise ZeroDivisionError("integral_pairing: second argument is the zero weight")
    return 2 * bilinear(lam, mu) / norm


def _is_nat(x: Fraction) -> bool:
    return x.denominator == 1 and x >= 0


def _is_pos_nat(x: Fraction) -> bool:
    return x.denominator == 1 and x >= 1


def _is_pos_odd(x: Fraction) -> bool:
    return x.denominator == 1 and x >= 1 and x.numerator % 2 == 1


def is_dominant_integral(lam) -> bool:
    """Membership in P^+(pi): <lam, beta_l> in 2N and <lam, beta_i - beta_{i+1}> in N."""
    R = build_root_system(len(lam))
    last = integral_pairing(lam, R.simple[-1])
    if not (_is_nat(last) and last.numerator % 2 == 0):
        return False
    return all(_is_nat(integral_pairing(lam, a)) for a in R.simple[:-1])


def is_dominant(lam) -> bool:
    R = build_root_system(len(lam))
    shifted = Weight(lam) + R.rho
    for a in R.even_bar_pos:
        if _is_pos_nat(-integral_pairing(shifted, a)):
            return False
    for b in R.odd_pos:
        if _is_pos_odd(-integral_pairing(shifted, b)):
            return False
    return True


def delta_lambda(lam) -> list:
    """Roots (with witness <lam+rho, alpha>) cutting out the largest proper submodule."""
    R = build_root_system(len(lam))
    shifted = Weight(lam) + R.rho
    out = []
    for a in R.even_bar_pos:
        m = integral_pairing(shifted, a)
        if _is_pos_nat(m):
            out.append((a, int(m)))
    for b in R.odd_pos:
        m = integral_pairing(shifted, b)
        if _is_pos_odd(m):
            out.append((b, int(m)))
    return out


def verma_is_simple(lam) -> bool:
    R = build_root_system(len(lam))
    shifted = Weight(lam) + R.rho
    if any(_is_pos_nat(integral_pairing(shifted, a)) for a in R.even_bar_pos):
        return False
    return not any(_is_pos_odd(integral_pairing(shifted, b)) for b in R.odd_pos)


# simple-root coordinates: nu = sum_k c_k alpha_k with c_k = nu_1 + ... + nu_k


def to_simple_coords(nu) -> tuple:
    out = []
    acc = Fraction(0)
    for x in nu:
        acc += Fraction(x)
        out.append(acc)
    return tuple(out)


def from_simple_coords(c) -> Weight:
    prev = Fraction(0)
    coords = []
    for x in c:
        x = Fraction(x)
        coords.append(x - prev)
        prev = x
    return Weight._raw(tuple(coords))


def height(nu) -> Fraction:
    return sum(to_simple_coords(nu), Fraction(0))


def in_root_lattice(nu) -> bool:
    return all(Fraction(x).denominator == 1 for x in nu)


def in_root_cone(nu) -> bool:
    """``nu`` in N pi."""
    return all(_is_nat(c) for c in to_simple_coords(nu))


def leq(lam, mu) -> bool:
    """The standard order: lam <= mu iff mu - lam in N pi."""
    return in_root_cone(Weight(mu) - Weight(lam))
