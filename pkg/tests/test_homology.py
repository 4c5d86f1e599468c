import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from cp2trisect.complex import SimplicialComplex
from cp2trisect.errors import DimensionError
from cp2trisect.homology import boundary_matrix, homology_groups, smith_normal_form


def oracle(rows):
    d = sympy_snf(Matrix(rows), domain=ZZ)
    return sorted(abs(int(d[i, i])) for i in range(min(d.shape)) if d[i, i] != 0)


matrices = st.integers(1, 6).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_snf_agrees_with_sympy(rows):
    mine = smith_normal_form(rows)
    assert sorted(mine) == oracle(rows)
    assert all(b % a == 0 for a, b in zip(mine, mine[1:]))


def test_snf_known_cases():
    assert smith_normal_form([[2, 4], [6, 8]]) == [2, 4]
    assert smith_normal_form([[0, 0], [0, 0]]) == []
    assert smith_normal_form([[6]]) == [6]


def test_boundary_squares_to_zero(cp2):
    for k in range(2, cp2.dim + 1):
        prod = boundary_matrix(cp2, k - 1).dot(boundary_matrix(cp2, k))
        assert not np.any(prod)
    with pytest.raises(DimensionError):
        boundary_matrix(cp2, 0)


def test_known_homology(cp2, rp2, t27):
    assert str(homology_groups(cp2)) == "(Z, 0, Z, 0, Z)"
    assert str(homology_groups(rp2)) == "(Z, Z/2, 0)"
    assert str(homology_groups(t27)) == "(Z, Z^2, Z)"


def test_disjoint_circles():
    c = SimplicialComplex.from_facets([[1, 2], [2, 3], [1, 3], [4, 5], [5, 6], [4, 6]])
    h = homology_groups(c)
    assert h.betti == (2, 2)
    assert h.euler == 0
