"""Named complexes and a brute-force enumerator of small closed surfaces."""

from __future__ import annotations

from itertools import combinations

from .complex import (
    SimplicialComplex,
    SurfaceDescriptor,
    classify_closed_surface,
    closure_from_facets,
    is_isomorphic,
)
from .errors import SearchLimitError
from .labels import make_simplex, parse_compact
from .symmetry import Permutation, orbit_closure

__all__ = [
    "CP2_SEED_FACETS",
    "CP2_EXTRA_FACETS",
    "RP2_6_FACETS",
    "T2_7_FACETS",
    "S_PERM",
    "T_PERM",
    "build_cp2_9",
    "build_rp2_6",
    "build_t2_7",
    "enumerate_small_surfaces",
    "SURFACE_TARGETS",
]

S_PERM = "(147)(258)(369)"
T_PERM = "(23)(56)(89)"

CP2_SEED_FACETS = (
    "15289", "12389", "13689",
    "45289", "42389", "43689",
    "14256", "14356", "14259", "14368",
    "14726", "14768",
)
# must appear in the S-orbit of the seeds
CP2_EXTRA_FACETS = ("14783", "14735", "14759", "14792")

# The fixed set of T on CP2_9 has vertices 1, 4, 7, [23], [56], [89]; relabeled
# 1..6 in that order it is this list, and (123)(456) acts on it the way S does.
RP2_6_FACETS = ("123", "125", "134", "146", "156", "236", "245", "246", "345", "356")

# boundary of the trisection's solid torus B14, literally
T2_7_FACETS = (
    "238", "239", "256", "258", "356", "369", "589", "689",
    "26[147]", "29[147]", "35[147]", "38[147]", "59[147]", "68[147]",
)


def _complex(rows) -> SimplicialComplex:
    return closure_from_facets([make_simplex(parse_compact(r)) for r in rows])


def build_rp2_6() -> SimplicialComplex:
    return _complex(RP2_6_FACETS)


def build_t2_7() -> SimplicialComplex:
    return _complex(T2_7_FACETS)


def build_cp2_9() -> SimplicialComplex:
    """The 36-facet orbit of the 12 seed facets under ``S``."""
    s = Permutation.from_cycles(S_PERM)
    seeds = [make_simplex(parse_compact(r)) for r in CP2_SEED_FACETS]
    facets = orbit_closure(seeds, [s])
    assert len(facets) == 36, f"seed data gives {len(facets)} facets, expected 36"
    for r in CP2_EXTRA_FACETS:
        assert make_simplex(parse_compact(r)) in facets, f"{r} missing from the orbit"
    return closure_from_facets(sorted(facets))


SURFACE_TARGETS = {
    "sphere": (True, 2),
    "torus": (True, 0),
    "projective plane": (False, 1),
    "rp2": (False, 1),
    "klein bottle": (False, 0),
}


def _target(target) -> tuple[bool, int]:
    if isinstance(target, SurfaceDescriptor):
        return bool(target.orientable), target.euler
    if isinstance(target, tuple):
        return target
    try:
        return SURFACE_TARGETS[str(target).lower()]
    except KeyError:
        raise ValueError(f"unknown surface type {target!r}") from None


def enumerate_small_surfaces(n_vertices: int, target) -> list[SimplicialComplex]:
    """Closed connected surfaces on exactly ``n_vertices`` labeled vertices, up to isomorphism.

    ``target`` is a name from :data:`SURFACE_TARGETS`, an ``(orientable,
    euler)`` pair or a :class:`SurfaceDescriptor`. The search grows a triangle
    set from the fixed triangle 123, always closing the smallest edge that
    lies in only one triangle, and rejects states where an edge is in three
    triangles or a vertex link has branched.
    """
    if n_vertices > 7:
        raise SearchLimitError(f"refusing to enumerate surfaces on {n_vertices} > 7 vertices")
    orientable, euler = _target(target)
    n = n_vertices
    if n < 4:
        return []
    verts = list(range(1, n + 1))
    n_tri = 2 * (n - euler)  # V - E + F = euler with 3F = 2E
    if n_tri <= 0:
        return []
    found: list[SimplicialComplex] = []

    def edges(t):
        return ((t[0], t[1]), (t[0], t[2]), (t[1], t[2]))

    def link_ok(tris: list, v: int) -> bool:
        # link of v must be a disjoint union of paths or a single cycle
        deg: dict[int, int] = {}
        adj: dict[int, list] = {}
        for t in tris:
            if v in t:
                a, b = (x for x in t if x != v)
                for x, y in ((a, b), (b, a)):
                    deg[x] = deg.get(x, 0) + 1
                    adj.setdefault(x, []).append(y)
        if any(d > 2 for d in deg.values()):
            return False
        # a closed cycle must use every link vertex
        seen = set()
        for start in adj:
            if start in seen:
                continue
            comp, stack = [], [start]
            seen.add(start)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            if all(deg[x] == 2 for x in comp) and len(comp) != len(adj):
                return False
        return True

    def record(tris):
        c = closure_from_facets([make_simplex(t) for t in tris])
        if len(c.vertices) != n:
            return
        d = classify_closed_surface(c)
        if not d.is_surface or bool(d.orientable) != orientable or d.euler != euler:
            return
        for prev in found:
            if is_isomorphic(prev, c) is not None:
                return
        found.append(c)

    all_tris = list(combinations(verts, 3))

    def extend(tris: list, count: dict):
        if len(tris) > n_tri:
            return
        open_edges = [e for e, k in count.items() if k == 1]
        if not open_edges:
            if len(tris) == n_tri:
                record(tris)
            return
        e = min(open_edges)
        for t in all_tris:
            if e[0] not in t or e[1] not in t or t in tris:
                continue
            # canonical growth: only triangles that close the chosen edge
            if any(count.get(f, 0) >= 2 for f in edges(t)):
                continue
            tris.append(t)
            for f in edges(t):
                count[f] = count.get(f, 0) + 1
            if all(link_ok(tris, v) for v in t):
                extend(tris, count)
            for f in edges(t):
                count[f] -= 1
                if not count[f]:
                    del count[f]
            tris.pop()

    start = (1, 2, 3)
    extend([start], {f: 1 for f in edges(start)})
    return found

