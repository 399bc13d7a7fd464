from fractions import Fraction

import pytest
from hypothesis import given

from sixvertex.coeffring import GAMMA, QQ, GammaPoly
from sixvertex.errors import BadValuation, NonUnitLeading, PositiveValuationRequired, TruncationError
from sixvertex.series import TruncSeries, ps_compose, ps_d_by, ps_inv, ps_mul, ps_qlogderiv, ps_revert

from strategies import qq_series, unit_linear_series

K = 8
q = TruncSeries.gen(QQ, K)
one = TruncSeries.constant(QQ, 1, K)


def coeffs(f, start=0, stop=None):
    return [f[n] for n in range(start, f.order if stop is None else stop)]


def test_mul_examples():
    assert ps_mul(q + q * q, 1 - q) == (q - q**3)
    assert ps_mul(q, TruncSeries.zero(QQ, K)).is_zero()


def test_truncation_is_a_hard_error():
    f = TruncSeries(QQ, [1, 2], 0, 2)
    assert f[1] == 2 and f[-3] == 0
    with pytest.raises(TruncationError):
        f[2]


def test_order_bookkeeping():
    f = TruncSeries(QQ, [1, 1], 0, 5)
    g = TruncSeries(QQ, [1], 2, 6)
    assert (f * g).order == 6  # min(5 + 2, 6 + 0)
    assert (f + g).order == 5


def test_inverse_examples():
    assert coeffs(ps_inv(1 - q)) == [1] * K
    inv = ps_inv(q * (1 + q))
    assert inv.valuation == -1
    assert coeffs(inv, -1, 4) == [1, -1, 1, -1, 1]
    with pytest.raises(NonUnitLeading):
        ps_inv(TruncSeries.zero(QQ, 3))


def test_inverse_over_gamma():
    g = GammaPoly.gen()
    f = TruncSeries(GAMMA, [GammaPoly.constant(1), 3 * (1 + g)], 0, 4)
    assert ps_inv(f)[1] == -3 * (1 + g)
    with pytest.raises(NonUnitLeading):
        ps_inv(TruncSeries(GAMMA, [g + 2], 0, 4))


def test_compose_examples():
    assert ps_compose(q * q, q + q * q) == (q**2 + 2 * q**3 + q**4)
    f = TruncSeries(QQ, [3, Fraction(1, 2), -1, 7], 0, K)
    assert ps_compose(f, q) == f
    with pytest.raises(PositiveValuationRequired):
        ps_compose(f, 1 + q)


def test_revert_examples():
    assert ps_revert(q) == q
    catalan = ps_revert(q - q * q)
    assert coeffs(catalan, 1, 6) == [1, 1, 2, 5, 14]
    with pytest.raises(BadValuation):
        ps_revert(q * q)


def test_qlogderiv_examples():
    assert ps_qlogderiv(q) == q
    assert ps_qlogderiv(one * 5).is_zero()
    pole = ps_inv(q)
    assert ps_qlogderiv(pole)[-1] == -1


def test_d_by_examples():
    f = q + 3 * q**2
    d = ps_d_by(f, f)
    assert d[0] == 1 and all(d[n] == 0 for n in range(1, d.order))
    assert ps_d_by(f * f, f).agrees_with(2 * f)


def test_json_round_trip():
    f = TruncSeries(QQ, [Fraction(1, 3), 0, -2], -1, 6)
    assert TruncSeries.from_json(QQ, f.to_json()) == f


@given(unit_linear_series())
def test_reversion_round_trip(f):
    g = ps_revert(f)
    for h in (ps_compose(f, g), ps_compose(g, f)):
        assert h[1] == 1
        assert all(h[n] == 0 for n in range(2, h.order))


@given(qq_series())
def test_inverse_round_trip(f):
    if f.is_zero():
        return
    p = f * ps_inv(f)
    assert p[0] == 1 and all(p[n] == 0 for n in range(1, p.order))


@given(qq_series(), qq_series())
def test_derivation_law(f, g):
    lhs = ps_qlogderiv(f * g)
    rhs = ps_qlogderiv(f) * g + f * ps_qlogderiv(g)
    assert lhs.agrees_with(rhs)


@given(qq_series(), qq_series(), qq_series())
def test_series_ring_axioms(a, b, c):
    assert ((a * b) * c).agrees_with(a * (b * c))
    assert (a * (b + c)).agrees_with(a * b + a * c)
    assert (a * b).agrees_with(b * a)
