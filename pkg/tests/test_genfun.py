from fractions import Fraction

import pytest

from sixvertex.coeffring import GammaPoly, QuadExtSqrt5
from sixvertex.genfun import (
    GenFunBundle,
    Q_of_t,
    check_ode_A,
    check_ode_t,
    dt_dR,
    parse_gamma,
    series_by_name,
    specialize,
)
from sixvertex.series import ps_compose, ps_revert

g = GammaPoly.gen()


@pytest.fixture(scope="module")
def sym():
    return GenFunBundle(None, 12)


def head(f, n=4, start=0):
    return [f[k] for k in range(start, n)]


def test_parse_gamma():
    assert parse_gamma("symbolic") is None
    assert parse_gamma("2/5") == Fraction(2, 5)
    assert parse_gamma("golden-ratio") == QuadExtSqrt5.golden_ratio()
    with pytest.raises(ValueError):
        GenFunBundle(Fraction(-2), 5)
    with pytest.raises(ValueError):
        GenFunBundle(None, 1)


def test_t_of_q(sym):
    assert head(sym.t_q) == [0, 1, -6 * (g + 1), 3 * (9 * g * g + 20 * g + 8)]
    assert head(GenFunBundle(Fraction(1), 6).t_q) == [0, 1, -12, 111]


def test_R_of_q(sym):
    assert head(sym.R_q) == [0, 1, -(7 * g + 8), 37 * g * g + 90 * g + 44]
    assert head(GenFunBundle(Fraction(1), 6).R_q) == [0, 1, -15, 171]


def test_q_of_t_and_R_of_t(sym):
    assert head(sym.q_t) == [0, 1, 6 * (g + 1), 3 * (15 * g * g + 28 * g + 16)]
    assert head(sym.R_t) == [0, 1, -(g + 2), -2 * (g + 2) * (g + 1)]


def test_q_of_R_and_t_of_R(sym):
    # computed independently by reversion and composition
    q_R = ps_revert(sym.R_q)
    assert head(q_R) == [0, 1, 7 * g + 8, 61 * g * g + 134 * g + 84]
    t_R = ps_compose(sym.t_q, q_R)
    assert head(t_R) == [0, 1, g + 2, 2 * (g + 2) * (2 * g + 3)]


def test_Q_symbolic(sym):
    Q = sym.Q_t
    assert Q[0] == 0
    assert Q[1] == 2 * (g + 1)
    assert Q[2] == 9 * g * g + 16 * g + 10
    assert Q[3] == 54 * g**3 + 132 * g * g + 150 * g + 66
    assert Q[4] == 378 * g**4 + 1152 * g**3 + 1812 * g * g + 1488 * g + 504


def test_Q_at_one():
    Q = Q_of_t(Fraction(1), 8)
    assert head(Q, 6) == [0, 4, 35, 402, 5334, 77472]


def test_specialize_commutes_with_the_pipeline(sym):
    for x in (Fraction(1), Fraction(0), Fraction(-1), Fraction(2, 5)):
        direct = GenFunBundle(x, 12).Q_t
        assert specialize(sym.Q_t, x) == direct


def test_Ahat_and_S(sym):
    assert head(sym.Ahat_q, 2) == [1, 2 * g + 4]
    S = sym.S_q
    assert S.valuation == -1
    assert S[-1] == 2 * g + 4
    assert S[0] == 36 * g * g + 120 * g + 96
    assert GenFunBundle(Fraction(1), 6).S_q[-1] == 6
    assert GenFunBundle(Fraction(1), 6).S_q[0] == 252


def test_dt_dR_leading(sym):
    assert dt_dR(sym)[0] == 1


@pytest.mark.parametrize("gamma", [None, Fraction(1), Fraction(0), Fraction(-1), Fraction(2, 5)])
def test_odes(gamma):
    K = 16
    b = GenFunBundle(gamma, K)
    for res in (check_ode_t(gamma, K, b), check_ode_A(gamma, K, b)):
        assert res.is_zero() and res.order >= K - 2


def test_series_by_name():
    with pytest.raises(KeyError):
        series_by_name("nope", None, 5)
    assert series_by_name("t(q)", Fraction(1), 5)[2] == -12
