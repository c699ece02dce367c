from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

from osp_annihilator.rootdata import Weight

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def half_integers(bound=4):
    return st.integers(-2 * bound, 2 * bound).map(lambda k: Fraction(k, 2))


def rationals(bound=6, den=6):
    return st.builds(Fraction, st.integers(-bound * den, bound * den), st.integers(1, den))


@st.composite
def weights(draw, l, elems=None):
    elems = rationals() if elems is None else elems
    return Weight(draw(st.lists(elems, min_size=l, max_size=l)))


@st.composite
def dominant(draw, l, top=3):
    coords = sorted(draw(st.lists(st.integers(0, top), min_size=l, max_size=l)), reverse=True)
    return Weight(coords)
