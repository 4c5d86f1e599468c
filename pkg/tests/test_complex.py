from itertools import combinations

import pytest

from cp2trisect.complex import (
    SimplicialComplex,
    boundary_complex,
    check_orientable,
    classify_closed_surface,
    closure_from_facets,
    cone_over,
    f_vector,
    is_isomorphic,
    iter_isomorphisms,
    join,
    link,
    relabel,
)
from cp2trisect.errors import LabelCollisionError, NotAFaceError, PurityError
from cp2trisect.labels import derived, make_simplex, original


def cx(*rows):
    return SimplicialComplex.from_facets([[int(ch) for ch in r] for r in rows])


def simplex_boundary(n):
    # the n-sphere as the boundary of an (n+1)-simplex
    return closure_from_facets([make_simplex(f) for f in combinations(range(1, n + 3), n + 1)])


def test_closure_and_f_vector():
    c = cx("123")
    assert f_vector(c) == ((3, 3, 1), 1)
    assert c.facets == (make_simplex([1, 2, 3]),)


def test_closure_demotes_contained_facets():
    c = closure_from_facets([make_simplex([1, 2]), make_simplex([1, 2, 3])])
    assert len(c.facets) == 1


def test_sphere_boundaries():
    for n in range(1, 5):
        counts, chi = f_vector(simplex_boundary(n))
        assert chi == 1 + (-1) ** n


def test_link_of_vertex_in_octahedron():
    octa = cx("135", "136", "145", "146", "235", "236", "245", "246")
    lk = link(octa, [original(1)])
    assert sorted(lk.vertices) == [original(i) for i in (3, 4, 5, 6)]
    assert len(lk.facets) == 4
    with pytest.raises(NotAFaceError):
        link(octa, [original(1), original(2)])


def test_boundary_of_simplex():
    b = boundary_complex(cx("1234"))
    assert f_vector(b)[0] == (4, 6, 4)
    with pytest.raises(PurityError):
        boundary_complex(cx("123", "34"))


def test_cone_and_join():
    circle = cx("12", "23", "13")
    disk = cone_over(circle, derived((1, 2, 3)))
    assert f_vector(disk)[1] == 1
    assert boundary_complex(disk) == circle
    j = join(cx("12"), cx("34"))
    assert j == cx("1234")
    with pytest.raises(LabelCollisionError):
        cone_over(circle, original(1))
    with pytest.raises(LabelCollisionError):
        join(circle, circle)


def test_isomorphism_finds_relabeling():
    a = cx("123", "134", "145", "156", "162", "235", "356", "362", "245", "246")
    perm = {original(i): original(j) for i, j in zip(range(1, 7), (4, 6, 1, 2, 3, 5))}
    b = relabel(a, perm)
    m = is_isomorphic(a, b)
    assert m is not None
    assert relabel(a, m) == b


def test_isomorphism_rejects_non_isomorphic():
    assert is_isomorphic(cx("123", "134"), cx("123", "345")) is None


def test_iter_isomorphisms_counts_automorphisms_of_tetrahedron_boundary():
    c = simplex_boundary(2)
    assert sum(1 for _ in iter_isomorphisms(c, c)) == 24


def test_orientability(rp2, t27):
    assert check_orientable(t27)[0]
    assert not check_orientable(rp2)[0]
    ok, signs = check_orientable(simplex_boundary(3))
    assert ok and set(signs.values()) <= {1, -1}


def test_surface_classification(rp2, t27):
    assert classify_closed_surface(simplex_boundary(2)).name == "sphere"
    assert classify_closed_surface(t27).name == "torus"
    assert classify_closed_surface(rp2).name == "projective plane"
    pinched = classify_closed_surface(cx("123", "124", "134", "234", "156", "157", "167", "567"))
    assert not pinched.is_surface
    assert "vertex 1" in pinched.failure
