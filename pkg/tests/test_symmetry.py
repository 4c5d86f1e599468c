from itertools import permutations

import networkx as nx
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from networkx.algorithms.isomorphism import GraphMatcher

from cp2trisect.catalog import S_PERM, T_PERM
from cp2trisect.errors import PermutationError
from cp2trisect.labels import derived, original
from cp2trisect.symmetry import (
    Permutation,
    apply_permutation,
    automorphism_group,
    geometric_fixed_set,
    orbit_closure,
)

S = Permutation.from_cycles(S_PERM)
T = Permutation.from_cycles(T_PERM)

perms = st.permutations(range(1, 10)).map(
    lambda img: Permutation({original(i + 1): original(j) for i, j in enumerate(img)})
)


def incidence_automorphisms(c):
    """Independent count: automorphisms of the vertex/facet incidence graph."""
    g = nx.Graph()
    for v in c.vertices:
        g.add_node(("v", v), kind="v")
    for f in c.facets:
        g.add_node(("f", f), kind="f")
        g.add_edges_from((("f", f), ("v", v)) for v in f)
    gm = GraphMatcher(g, g, node_match=lambda a, b: a["kind"] == b["kind"])
    return sum(1 for _ in gm.isomorphisms_iter())


def brute_force_automorphisms(c):
    """Independent count: try all 9! vertex permutations on facet bitmasks."""
    verts = list(c.vertices)
    pos = {v: i for i, v in enumerate(verts)}
    perm = np.array(list(permutations(range(len(verts)))), dtype=np.int64)
    target = np.sort([sum(1 << pos[v] for v in f) for f in c.facets])
    images = np.stack([(1 << perm[:, [pos[v] for v in f]]).sum(axis=1) for f in c.facets], axis=1)
    return int((np.sort(images, axis=1) == target).all(axis=1).sum())


@given(perms, perms, perms)
def test_group_laws(a, b, c):
    assert (a @ b) @ c == a @ (b @ c)
    assert a @ a.inverse() == Permutation.from_cycles("()")
    assert (a @ b).inverse() == b.inverse() @ a.inverse()


@given(perms)
def test_order_and_power(a):
    assert a.power(a.order()).is_identity()
    assert a.power(-1) == a.inverse()


def test_cycle_notation():
    assert S.order() == 3 and T.order() == 2
    assert str(S) == "(147)(258)(369)"
    assert S(derived((1, 4))) == derived((4, 7))
    assert S @ T == T @ S
    with pytest.raises(PermutationError):
        Permutation.from_cycles("(12)(23)")


def test_aut_cp2_matches_brute_force(cp2):
    group = automorphism_group(cp2)
    assert len(group) == 54 == brute_force_automorphisms(cp2)
    assert S in group and T in group
    assert all(apply_permutation(cp2, g) == cp2 for g in group)


def test_aut_small_surfaces(rp2, t27):
    assert len(automorphism_group(rp2)) == incidence_automorphisms(rp2) == 60
    assert len(automorphism_group(t27)) == incidence_automorphisms(t27) == 42


def test_orbit_closure(cp2):
    seed = [cp2.facets[0]]
    orbit = orbit_closure(seed, [S, T])
    assert 1 <= len(orbit) <= 6
    assert all(f in cp2.facet_set() for f in orbit)


def test_fixed_set(cp2):
    fix = geometric_fixed_set(cp2, T)
    names = {str(v) for v in fix.vertices}
    assert names == {"1", "4", "7", "[23]", "[56]", "[89]"}
    assert len(fix.facets) == 10
    with pytest.raises(PermutationError):
        geometric_fixed_set(cp2, S)
