import pytest

from cp2trisect.catalog import build_rp2_6
from cp2trisect.complex import SimplicialComplex, classify_closed_surface
from cp2trisect.errors import PurityError
from cp2trisect.labels import make_simplex, original, parse_compact
from cp2trisect.subdivision import (
    barycentric_chains,
    find_cracks,
    relative_rank,
    relative_subdivide,
    subdivide_facet,
)

D = {original(i) for i in (1, 4, 7)}


def s(text):
    return make_simplex(parse_compact(text))


@pytest.mark.parametrize("facet, rank", [("15289", 1), ("14256", 2), ("14726", 3)])
def test_rank(facet, rank):
    assert relative_rank(s(facet), D) == rank


def test_rank1_untouched():
    assert subdivide_facet(s("15289"), D) == [s("15289")]


def test_rank2_pieces():
    assert sorted(subdivide_facet(s("14256"), D)) == sorted([s("1[14]256"), s("4[14]256")])


def test_rank3_pieces():
    expected = ["1[14][147]26", "1[17][147]26", "4[14][147]26", "4[47][147]26", "7[17][147]26", "7[47][147]26"]
    assert sorted(subdivide_facet(s("14726"), D)) == sorted(s(x) for x in expected)


def test_barycentric_chain_count():
    assert len(barycentric_chains(s("1234"))) == 24


def test_cp2_subdivision(sub, cp2):
    assert len(sub.facets) == 78
    assert len(sub.vertices) == 13
    assert all(sum(v in D for v in f) == 1 for f in sub.facets)
    assert find_cracks(cp2, D) == []


def test_real_case():
    rp2 = build_rp2_6()
    d = {original(i) for i in (1, 2, 3)}
    real = relative_subdivide(rp2, d)
    assert len(real.facets) == 18
    assert all(sum(v in d for v in f) == 1 for f in real.facets)
    assert classify_closed_surface(real).name == "projective plane"


def test_non_pure_input_rejected():
    c = SimplicialComplex.from_facets([[1, 2, 3], [3, 4]])
    with pytest.raises(PurityError):
        relative_subdivide(c, D)
