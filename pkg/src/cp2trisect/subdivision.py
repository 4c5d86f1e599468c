"""Subdivision relative to a distinguished vertex set.

A facet ``s`` whose distinguished part ``F`` has ``k`` vertices is replaced by
the ``k!`` facets ``tau * (s - F)``, with ``tau`` running over the barycentric
subdivision of ``F``. Each new facet keeps exactly one distinguished vertex.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterable

from .complex import SimplicialComplex, closure_from_facets
from .errors import PurityError
from .labels import Label, Simplex, derived

__all__ = [
    "barycentric_chains",
    "find_cracks",
    "relative_rank",
    "relative_subdivide",
    "subdivide_facet",
]


def relative_rank(s: Iterable[Label], distinguished: Iterable[Label]) -> int:
    return len(set(s) & set(distinguished))


def _barycenter(face: tuple[Label, ...]) -> Label:
    return face[0] if len(face) == 1 else derived(face)


def barycentric_chains(face: tuple[Label, ...]) -> list[Simplex]:
    """Top simplices of the barycentric subdivision of ``face``.

    One per ordering ``v1, v2, ...`` of the vertices, spanned by the
    barycenters of ``{v1}``, ``{v1, v2}``, and so on.
    """
    out = []
    for order in permutations(face):
        chain = [_barycenter(tuple(sorted(order[: i + 1]))) for i in range(len(order))]
        out.append(tuple(sorted(chain)))
    return sorted(set(out))


def subdivide_facet(s: Simplex, distinguished: set) -> list[Simplex]:
    f = tuple(v for v in s if v in distinguished)
    rest = tuple(v for v in s if v not in distinguished)
    if len(f) <= 1:
        return [tuple(s)]
    return [tuple(sorted(tau + rest)) for tau in barycentric_chains(f)]


def relative_subdivide(c: SimplicialComplex, distinguished: Iterable[Label]) -> SimplicialComplex:
    if not c.is_pure():
        raise PurityError("relative subdivision needs a pure complex")
    dist = set(distinguished)
    facets = []
    for s in c.facets:
        facets.extend(subdivide_facet(s, dist))
    return closure_from_facets(facets)


def find_cracks(c: SimplicialComplex, distinguished: Iterable[Label]) -> list[tuple[Simplex, Simplex]]:
    """Adjacent facet pairs whose pieces disagree on the shared face.

    The pieces of a facet restricted to a face ``r`` are the pieces whose
    vertices all lie over ``r`` (a derived label lies over ``r`` when its
    children do). Both facets must induce the same subdivision of ``r``.
    """
    dist = set(distinguished)

    def over(lab: Label, r: set) -> bool:
        return lab.leaves() <= r

    pieces = {s: subdivide_facet(s, dist) for s in c.facets}
    bad = []
    for a, b in combinations(c.facets, 2):
        r = set(a) & set(b)
        if len(r) < 2:
            continue
        induced = []
        for s in (a, b):
            faces = set()
            for p in pieces[s]:
                sub = tuple(v for v in p if over(v, r))
                faces.add(sub)
            maximal = {x for x in faces if not any(set(x) < set(y) for y in faces)}
            induced.append(maximal)
        if induced[0] != induced[1]:
            bad.append((a, b))
    return bad
