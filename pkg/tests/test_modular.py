import json
from fractions import Fraction
from pathlib import Path

import pytest

from sixvertex.coeffring import QQ
from sixvertex.errors import AmbiguousRelation, BadParameter, NoRelation, OffsetMismatch
from sixvertex.genfun import GenFunBundle
from sixvertex.modular import (
    CASE_GAMMA,
    NEWTON_POLYGON_N5,
    OffsetQSeries,
    RelationCandidate,
    certify_relation,
    eta_pow_series,
    eta_quotient,
    f21_series,
    find_poly_relation,
    hauptmodul,
    lattice_theta_sum,
    relation_for_case,
    rogers_ramanujan_product,
    verify_case,
)
from sixvertex.series import TruncSeries

GOLDEN = Path(__file__).parent / "golden" / "relation_golden_ratio.json"


def head(f, n):
    return [f[k] for k in range(n)]


def test_eta_series():
    e1 = eta_pow_series(1, 16)
    assert e1.offset == Fraction(1, 24)
    assert [k for k in range(16) if e1.series[k]] == [0, 1, 2, 5, 7, 12, 15]
    assert [e1.series[k] for k in (0, 1, 2, 5, 7, 12, 15)] == [1, -1, -1, 1, 1, -1, -1]
    e3 = eta_pow_series(3, 16)
    assert [k for k in range(16) if e3.series[k]] == [0, 3, 6, 15]
    cube = (e1**3).series
    assert [cube[k] for k in (0, 1, 2, 3, 6)] == [1, -3, 0, 5, -7]


def test_offsets():
    assert eta_quotient({4: 8, 1: -8}, 5).offset == 1
    half = eta_pow_series(1, 5) ** 12
    with pytest.raises(OffsetMismatch):
        half.to_series()
    with pytest.raises(OffsetMismatch):
        eta_quotient({4: 8, 1: -8}, 5).to_series(expected_offset=2)


def test_hauptmoduls():
    assert head(hauptmodul(3, 3), 3) == [0, 1, 12]
    for N in (3, 4, 5, 6):
        h = hauptmodul(N, 10)
        assert h.valuation == 1 and h[1] == 1
    assert head(rogers_ramanujan_product(4), 4) == [0, 1, -1, 1]
    # the Gamma_1(5) Hauptmodul is the fifth power of that product
    assert head(hauptmodul(5, 6), 6) == [0, 1, -5, 15, -30, 40]
    assert hauptmodul(5, 20) == (rogers_ramanujan_product(24).shift(-1) ** 5).shift(1).truncate(20)
    with pytest.raises(ValueError):
        hauptmodul(7, 10)


def test_f21():
    f = f21_series(Fraction(1, 3), Fraction(2, 3), 2, 27, 5)
    assert f[0] == 1 and f[1] == 3
    assert f21_series(Fraction(1, 2), Fraction(1, 2), 2, 16, 3)[1] == 2
    with pytest.raises(BadParameter):
        f21_series(1, 1, -2, 1, 3)


def test_lattice_sums():
    assert head(lattice_theta_sum("hex", 5), 5) == [1, 6, 0, 6, 6]
    assert head(lattice_theta_sum("square", 5), 5) == [1, 4, 4, 0, 4]
    with pytest.raises(ValueError):
        lattice_theta_sum("cubic", 5)


def test_toy_relation():
    q = TruncSeries.gen(QQ, 12)
    rel = find_poly_relation(q, q * q, [(2, 0), (0, 1)])
    assert rel.as_dict() == {(0, 1): 1, (2, 0): -1}
    with pytest.raises(NoRelation):
        find_poly_relation(q, q * q * q + q * q, [(2, 0), (0, 1)])
    with pytest.raises(AmbiguousRelation):
        find_poly_relation(q, q * q, [(0, 0), (2, 0), (0, 1), (4, 0), (2, 1), (0, 2)])


def test_relation_gamma_minus_one():
    rel = relation_for_case(6)
    assert rel.as_dict() == {
        (4, 2): 256, (3, 2): -264, (2, 2): 3, (2, 1): 128,
        (1, 2): 5, (1, 1): -64, (0, 1): -10, (0, 0): 16,
    }
    assert certify_relation(rel, CASE_GAMMA[6], 2 * rel.certified_order).is_zero()


def test_relation_golden_ratio_matches_golden_file():
    rel = relation_for_case(5)
    assert set(rel.support) <= NEWTON_POLYGON_N5
    golden = RelationCandidate.from_json(json.loads(GOLDEN.read_text()))
    assert rel.as_dict() == golden.as_dict()


@pytest.mark.parametrize("N", [3, 4, 6])
def test_verify_case_all_pass(N):
    report = verify_case(N, 24)
    assert report and all(r.passed for r in report), [r.to_json() for r in report if not r.passed]


def test_verify_case_golden_ratio():
    report = {r.identity_name: r for r in verify_case(5, 24)}
    assert report["R = h(1-phi h)/(1+(2+sqrt5)h)^3"].passed
    assert report["S = (5+sqrt5)(1+(2+sqrt5)h)^6/(h(...))"].passed
    assert report["ODE in h (derived from R(h), S(h))"].passed
    assert report["Q(t, conj gamma) = conj Q(t, gamma)"].passed
    # the quoted equation does not annihilate t
    quoted = report["ODE in h (quoted form)"]
    assert not quoted.passed and quoted.residual_valuation == 0


def test_square_lattice_identity_gamma_zero():
    A = GenFunBundle(Fraction(0), 30).Ahat_q
    ratio = A / lattice_theta_sum("square", 30)
    assert ratio[0] == 1 and all(ratio[n] == 0 for n in range(1, ratio.order))


def test_offset_series_products():
    a = OffsetQSeries(Fraction(1, 3), TruncSeries.constant(QQ, 1, 4))
    assert (a * a * a).to_series(1)[1] == 1
