import pytest

from cp2trisect.catalog import (
    CP2_SEED_FACETS,
    build_cp2_9,
    enumerate_small_surfaces,
)
from cp2trisect.complex import classify_closed_surface, f_vector, is_isomorphic, link
from cp2trisect.errors import SearchLimitError
from cp2trisect.labels import make_simplex, parse_compact


def test_cp2_counts(cp2):
    assert f_vector(cp2) == ((9, 36, 84, 90, 36), 3)
    assert len(CP2_SEED_FACETS) == 12
    assert build_cp2_9() == cp2


def test_cp2_is_three_neighborly(cp2):
    # every triple of vertices spans a triangle
    assert len(cp2.faces_of_dim(2)) == 84


def test_cp2_edge_links_are_circles(cp2):
    for e in cp2.faces_of_dim(1):
        lk = link(cp2, e)
        assert lk.dim == 2
        assert classify_closed_surface(lk).name == "sphere"


def test_small_catalog_surfaces(rp2, t27):
    assert f_vector(rp2) == ((6, 15, 10), 1)
    assert f_vector(t27) == ((7, 21, 14), 0)
    assert make_simplex(parse_compact("26[147]")) in t27.facet_set()


@pytest.mark.parametrize(
    "n, target, count",
    [(4, "sphere", 1), (5, "sphere", 1), (6, "sphere", 2), (4, "rp2", 0), (5, "rp2", 0),
     (6, "rp2", 1), (7, "torus", 1), (6, "torus", 0)],
)
def test_enumeration_counts(n, target, count):
    assert len(enumerate_small_surfaces(n, target)) == count


def test_enumerated_survivors_match_catalog(rp2, t27):
    (p,) = enumerate_small_surfaces(6, "projective plane")
    (t,) = enumerate_small_surfaces(7, (True, 0))
    assert is_isomorphic(p, rp2) and is_isomorphic(t, t27)


def test_enumeration_limits():
    with pytest.raises(SearchLimitError):
        enumerate_small_surfaces(8, "torus")
    with pytest.raises(ValueError):
        enumerate_small_surfaces(5, "pretzel")
