"""Hypothesis strategies shared by the property tests."""

from fractions import Fraction

from hypothesis import strategies as st

from sixvertex.coeffring import QQ, GammaPoly, OmegaLaurent, QuadExtSqrt5
from sixvertex.series import TruncSeries

small_int = st.integers(-9, 9)
rationals = st.builds(Fraction, small_int, st.integers(1, 6))
nonzero_rationals = rationals.filter(bool)

gamma_polys = st.lists(rationals, max_size=4).map(GammaPoly)
omega_laurents = st.dictionaries(st.integers(-4, 4), rationals, max_size=4).map(OmegaLaurent)
sqrt5s = st.builds(QuadExtSqrt5, rationals, rationals)


@st.composite
def qq_series(draw, order=8, valuation=st.integers(-1, 2)):
    v = draw(valuation)
    cs = draw(st.lists(rationals, min_size=1, max_size=order - v if order > v else 1))
    return TruncSeries(QQ, cs, v, order)


@st.composite
def unit_linear_series(draw, order=9):
    """q + O(q^2) with random higher coefficients."""
    tail = draw(st.lists(rationals, min_size=order - 2, max_size=order - 2))
    return TruncSeries(QQ, [Fraction(1)] + tail, 1, order)
