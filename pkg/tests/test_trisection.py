import pytest

from cp2trisect.errors import MalformedSimplexError
from cp2trisect.labels import derived
from cp2trisect.trisection import (
    pair_intersection,
    split_b14,
    trisection_checks,
    verify_central_torus,
    verify_cone_structure,
    verify_solid_torus,
)


def test_pieces(tri):
    assert [len(tri.piece(j).facets) for j in (1, 4, 7)] == [26, 26, 26]


def test_trisection_table(sub, tri):
    rows = trisection_checks(sub, tri)
    assert len(rows) == 13
    assert all(r.passed for r in rows), [r for r in rows if not r.passed]


def test_cone_structure(tri):
    assert all(r.passed for r in verify_cone_structure(tri))


def test_solid_torus_certificate(tri):
    cert = verify_solid_torus(tri.pair(1, 4))
    assert cert.all_pass, [c for c in cert.checks if not c.passed]
    assert cert.homology.betti == (1, 1, 0, 0)
    assert cert.boundary.name == "torus"
    assert len(cert.split[0]) == 3 and len(cert.split[1]) == 10


def test_each_pair_is_a_solid_torus(tri):
    # the other two pairs are images of B14 under S, with the apex moved
    for (a, b) in ((1, 7), (4, 7)):
        b_ab = pair_intersection(tri, a, b)
        apex = derived((a, b))
        one, two = split_b14(b_ab, apex)
        assert len(one.facets) == 3 and len(two.facets) == 10


def test_central_torus(tri):
    rows = verify_central_torus(tri, with_enumeration=False)
    assert all(r.passed for r in rows)


def test_split_rejects_bad_apex(tri):
    with pytest.raises(MalformedSimplexError):
        split_b14(tri.pair(1, 4), derived((4, 7)))
    with pytest.raises(ValueError):
        pair_intersection(tri, 1, 1)
