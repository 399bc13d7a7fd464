from fractions import Fraction

import pytest

from sixvertex.coeffring import GammaPoly
from sixvertex.errors import ParityMismatch
from sixvertex.modular import eta_pow_series
from sixvertex.theta import ThetaKind, cheb_P, cheb_Q, reduced_theta

g = GammaPoly.gen()


def test_chebyshev_like_polynomials():
    assert cheb_P(0) == 1
    assert cheb_P(1) == 1 - g
    assert cheb_P(2) == g * g - g - 1
    assert cheb_Q(1) == -1 - g
    for n in range(2, 8):
        assert cheb_P(n) == -g * cheb_P(n - 1) - cheb_P(n - 2)
        assert cheb_Q(n) == -g * cheb_Q(n - 1) - cheb_Q(n - 2)


def test_s_type_k0():
    s0 = reduced_theta(ThetaKind.S, 0, 6)
    assert [s0[n] for n in range(6)] == [1, -(1 - g), 0, g * g - g - 1, 0, 0]


def test_c_type_k1():
    c1 = reduced_theta(ThetaKind.C, 1, 6)
    assert [c1[n] for n in range(6)] == [1, 3 * (1 + g), 0, 5 * (g * g + g - 1), 0, 0]


def test_z_type_is_eta_cubed():
    z1 = reduced_theta(ThetaKind.Z, 1, 10)
    assert [z1[n] for n in (0, 1, 3, 6)] == [1, -3, 5, -7]
    eta3 = eta_pow_series(1, 30).series ** 3
    assert reduced_theta(ThetaKind.Z, 1, 30) == eta3


def test_constant_term_and_degree_bound():
    for kind, k in ((ThetaKind.S, 2), (ThetaKind.C, 3), (ThetaKind.C, 1)):
        f = reduced_theta(kind, k, 56)
        assert f[0] == 1
        for n in range(10):
            assert f[n * (n + 1) // 2].degree <= n


def test_numeric_gamma_matches_symbolic():
    sym = reduced_theta(ThetaKind.C, 3, 25)
    num = reduced_theta(ThetaKind.C, 3, 25, Fraction(2, 5))
    assert all(sym[n](Fraction(2, 5)) == num[n] for n in range(25))


def test_parity_mismatch():
    with pytest.raises(ParityMismatch):
        reduced_theta(ThetaKind.S, 1, 5)
    with pytest.raises(ParityMismatch):
        reduced_theta(ThetaKind.C, 2, 5)
