from fractions import Fraction

from hypothesis import settings, strategies as st

from tbinom.polyalg import PolyT, PolyXT
from tbinom.series import TruncSeries

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_ints = st.integers(min_value=-9, max_value=9)
rationals = st.builds(Fraction, st.integers(-30, 30), st.integers(1, 12))
polys = st.lists(rationals, max_size=5).map(PolyT)
polys_xt = st.lists(polys, max_size=4).map(PolyXT)


def series_st(order: int, unit: bool = False):
    head = st.just(PolyT.const(1)) if unit else polys
    return st.builds(
        lambda h, rest: TruncSeries([h, *rest], order),
        head,
        st.lists(polys, min_size=order, max_size=order),
    )
