from sixvertex.coeffring import GammaPoly, OmegaLaurent, omega_to_gamma
from sixvertex.tutte import C_of_t, compare_C_Q, iterate_WH, slices_to_json, verify_back_substitution

w = OmegaLaurent({1: 1})
wi = OmegaLaurent({-1: 1})


def test_first_slices():
    W, H = iterate_WH(2)
    assert W[0].poly == [OmegaLaurent({0: 1})]
    assert H[0].poly == {(0, 0): OmegaLaurent({0: 1})}
    assert W[1].coeff(2) == 1 and W[1].coeff(1) == w + wi and W[1].coeff(0) == 0
    assert H[1].coeff(1, 0) == 2 * w + wi
    assert H[1].coeff(0, 1) == w + 2 * wi
    assert H[1].coeff(0, 0) == OmegaLaurent({2: 2, 0: 2, -2: 2})


def test_C_low_order():
    C = C_of_t(3)
    assert C[0] == 1
    assert omega_to_gamma(C[1]) == 2 * GammaPoly.gen() + 2


def test_back_substitution_and_symmetry():
    verify_back_substitution(*iterate_WH(6, verify=False))


def test_matches_closed_form():
    res = compare_C_Q(7)
    assert res.match, res.first_mismatch
    assert res.C_gamma[0] == 1 and res.one_plus_Q[0] == 1


def test_json_shape():
    data = slices_to_json(*iterate_WH(1))
    assert data["W"][0] == {"k": 0, "poly": [{"0": "1/1"}]}
