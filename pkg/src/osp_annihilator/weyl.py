"""The Weyl group of osp(1, 2l): signed permutations of beta_1..beta_l.

An element is stored in one-line notation: ``images[i] = +-(j+1)`` means
``beta_{i+1} -> +-beta_{j+1}``.  It prints as ``[+2,-1]``.

Composition: ``u * v`` applies ``v`` first, then ``u``, so the word
``s_1 s_2 ... s_r`` acts on a weight by applying ``s_r`` first.

Simple reflections are numbered ``s_i <-> beta_i - beta_{i+1}`` for ``i < l``
and ``s_l <-> beta_l``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from .errors import RankError, ResourceCapError
from .rootdata import Weight, build_root_system

DEFAULT_CAP = 6


def _is_negative(vec) -> bool:
    # positive roots of type B/C have a positive first nonzero coordinate
    for x in vec:
        if x:
            return x < 0
    return False


@dataclass(frozen=True)
class WeylElement:
    images: tuple

    @property
    def rank(self) -> int:
        return len(self.images)

    @property
    def perm(self) -> tuple:
        """0-based target index of each beta_i."""
        return tuple(abs(x) - 1 for x in self.images)

    @property
    def signs(self) -> tuple:
        return tuple(1 if x > 0 else -1 for x in self.images)

    @cached_property
    def length(self) -> int:
        """Minimal word length, by greedy descent.

        ``l(w s_i) < l(w)`` exactly when ``w(alpha_i)`` is a negative root, so
        strip such an ``s_i`` until none is left.
        """
        l = self.rank
        w = self
        n = 0
        while True:
            for i in range(l):
                if w._right_descent(i):
                    w = w * simple_reflection(l, i + 1)
                    n += 1
                    break
            else:
                return n

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def _right_descent(self, i: int) -> bool:
        l = self.rank
        img = [0] * l
        a = self.images[i]
        img[abs(a) - 1] += 1 if a > 0 else -1
        if i < l - 1:
            b = self.images[i + 1]
            img[abs(b) - 1] -= 1 if b > 0 else -1
        return _is_negative(img)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if not isinstance(other, WeylElement):
            return NotImplemented
        if other.rank != self.rank:
            raise RankError(f"cannot compose rank {self.rank} with rank {other.rank}")
        out = []
        for x in other.images:
            y = self.images[abs(x) - 1]
            out.append(y if x > 0 else -y)
        return WeylElement(tuple(out))

    def inverse(self) -> "WeylElement":
        out = [0] * self.rank
        for i, x in enumerate(self.images):
            out[abs(x) - 1] = (i + 1) if x > 0 else -(i + 1)
        return WeylElement(tuple(out))

    def matrix(self) -> list:
        """Signed permutation matrix M with M @ coords == act(self, coords)."""
        l = self.rank
        m = [[0] * l for _ in range(l)]
        for i, x in enumerate(self.images):
            m[abs(x) - 1][i] = 1 if x > 0 else -1
        return m

    def __str__(self):
        return "[" + ",".join(f"{x:+d}" for x in self.images) + "]"


def identity(l: int) -> WeylElement:
    return WeylElement(tuple(range(1, l + 1)))


def simple_reflection(l: int, i: int) -> WeylElement:
    """``s_i`` for ``1 <= i <= l``."""
    if not 1 <= i <= l:
        raise RankError(f"no simple reflection s_{i} in rank {l}")
    img = list(range(1, l + 1))
    if i < l:
        img[i - 1], img[i] = img[i], img[i - 1]
    else:
        img[l - 1] = -l
    return WeylElement(tuple(img))


def from_word(l: int, word) -> WeylElement:
    """Product ``s_{word[0]} s_{word[1]} ...`` (rightmost acts first)."""
    w = identity(l)
    for i in word:
        w = w * simple_reflection(l, i)
    return w


def parse_element(text: str) -> WeylElement:
    body = text.strip().strip("[]")
    images = tuple(int(t) for t in body.split(","))
    if sorted(abs(x) for x in images) != list(range(1, len(images) + 1)):
        raise RankError(f"not a signed permutation: {text!r}")
    return WeylElement(images)


def act(w: WeylElement, lam) -> Weight:
    if len(lam) != w.rank:
        raise RankError(f"rank mismatch: element of rank {w.rank}, weight of rank {len(lam)}")
    out = [Fraction(0)] * w.rank
    for i, x in enumerate(w.images):
        c = lam[i]
        out[abs(x) - 1] = c if x > 0 else -c
    return Weight._raw(tuple(out))


def dot_act(w: WeylElement, lam) -> Weight:
    """``w.lam = w(lam + rho) - rho``."""
    r = build_root_system(w.rank).rho
    return act(w, Weight(lam) + r) - r


def _check_cap(l: int, cap: int):
    if l < 1:
        raise RankError(f"invalid rank l={l}")
    if l > cap:
        raise ResourceCapError(f"Weyl enumeration at l={l} exceeds cap {cap} ({2 ** l} * {l}! elements)")


@lru_cache(maxsize=None)
def _enumerate(l: int) -> tuple:
    out = []
    for p in itertools.permutations(range(1, l + 1)):
        for s in itertools.product((1, -1), repeat=l):
            out.append(WeylElement(tuple(a * b for a, b in zip(p, s))))
    return tuple(out)


def enumerate_weyl(l: int, cap: int = DEFAULT_CAP) -> tuple:
    """All ``2^l l!`` elements.  The result is cached and immutable."""
    _check_cap(l, cap)
    return _enumerate(l)


def stabilizer(lam, cap: int = DEFAULT_CAP) -> list:
    """Brute-force ``Stab_W(lam)``."""
    lam = Weight(lam)
    return [w for w in enumerate_weyl(len(lam), cap) if act(w, lam) == lam]


def stabilizer_trivial(lam) -> bool:
    """Trivial stabilizer iff the ``|lam_i|`` are nonzero and pairwise distinct."""
    mags = [abs(Fraction(c)) for c in lam]
    return all(mags) and len(set(mags)) == len(mags)


def poincare_polynomial(l: int, cap: int = DEFAULT_CAP) -> list:
    """Coefficients of ``sum_w q^{l(w)}``, index = degree."""
    coeffs = [0] * (l * l + 1)
    for w in enumerate_weyl(l, cap):
        coeffs[w.length] += 1
    return coeffs


def parabolic_elements(l: int, cap: int = DEFAULT_CAP) -> list:
    """``W_bullet``: the subgroup generated by ``s_2, ..., s_l`` (fixes beta_1)."""
    return [w for w in enumerate_weyl(l, cap) if w.images[0] == 1]


def gamma_bullet(l: int) -> list:
    """``Gamma_bullet = {sum_{i>=2} k_i beta_i : k_i in {0,1}}``."""
    out = []
    for ks in itertools.product((0, 1), repeat=l - 1):
        out.append(Weight((0,) + ks))
    return out


def heslem_word(l: int, r: int) -> list:
    if r == 0:
        return []
    if r < l:
        return list(range(1, r + 1))
    # s_1 ... s_l followed by s_{l-1} ... s_{2l-r}; the tail is empty at r = l
    return list(range(1, l + 1)) + list(range(l - 1, 2 * l - r - 1, -1))


def heslem_data(l: int, r: int):
    """``(gamma_r, w_r)`` with ``rho - r beta_1 + gamma_r = w_r(rho)`` and sign ``(-1)^r``.

    Raises ``AssertionError`` if the tabulated pair fails its defining property.
    """
    if not 0 <= r <= 2 * l - 1:
        raise RankError(f"r={r} outside [0, {2 * l - 1}]")
    if r == 0:
        top = 1
    elif r < l:
        top = r + 1
    else:
        top = 2 * l - r
    gamma = Weight([0] + [1 if 2 <= i <= top else 0 for i in range(2, l + 1)])
    w = from_word(l, heslem_word(l, r))
    rho_ = build_root_system(l).rho
    target = rho_ - r * Weight.basis(l, 0) + gamma
    assert act(w, rho_) == target, (l, r, str(w))
    assert w.sign == (-1) ** r, (l, r, w.length)
    return gamma, w


def heslem_brute_force(l: int, r: int) -> list:
    """Every ``gamma`` in Gamma_bullet giving a trivial stabilizer for ``rho - r beta_1 + gamma``."""
    rho_ = build_root_system(l).rho
    base = rho_ - r * Weight.basis(l, 0)
    return [g for g in gamma_bullet(l) if stabilizer_trivial(base + g)]
