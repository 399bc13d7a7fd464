import pytest

from sixvertex.coeffring import GammaPoly
from sixvertex.errors import CapExceeded
from sixvertex.genfun import Q_of_t
from sixvertex.maps import (
    count_EO_gamma,
    enumerate_maps,
    eulerian_orientations,
    gen_quartic_maps,
    rooted_quartic_planar_count,
)

g = GammaPoly.gen()


@pytest.mark.parametrize("n, expected", [(1, 2), (2, 9), (3, 54)])
def test_planar_map_counts(n, expected):
    assert len(gen_quartic_maps(n)) == expected == rooted_quartic_planar_count(n)


def test_one_vertex_maps():
    assert len(gen_quartic_maps(1, genus=1)) == 1
    assert count_EO_gamma(1) == 2 * g + 2
    assert count_EO_gamma(1)(1) == 4
    assert enumerate_maps(1, genus=1).to_json() == {"n": 1, "genus": 1, "map_count": 1, "polynomial": ["2/1"]}


def test_maps_are_connected_with_root_outgoing():
    for m in gen_quartic_maps(3):
        assert m.is_connected()
        for outs in eulerian_orientations(m):
            assert 0 in outs


@pytest.mark.parametrize("n", [1, 2, 3])
def test_brute_force_matches_closed_form(n):
    assert count_EO_gamma(n) == Q_of_t(None, n + 3)[n]


def test_cap():
    with pytest.raises(CapExceeded):
        gen_quartic_maps(5)
    with pytest.raises(CapExceeded):
        gen_quartic_maps(6, allow_slow=True)
