"""Bistellar flips and a flip-based sphere recognizer.

A bistellar move on a closed combinatorial d-manifold picks a face ``A`` whose
link is the boundary of a simplex ``B`` that is not itself a face, and replaces
the star ``A * dB`` by ``dA * B``. The number of facets changes by
``|A| - |B|``.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .complex import SimplicialComplex, closure_from_facets
from .errors import NonPseudomanifoldError
from .labels import Label, derived

__all__ = [
    "BistellarMove",
    "SphereVerdict",
    "apply_move",
    "available_moves",
    "random_flips",
    "recognize_sphere_bistellar",
]

DEFAULT_FLIP_BUDGET = 100_000


@dataclass(frozen=True)
class BistellarMove:
    removed_face: frozenset  # A
    added_face: frozenset  # B

    @property
    def facet_change(self) -> int:
        return len(self.removed_face) - len(self.added_face)


@dataclass(frozen=True)
class SphereVerdict:
    is_sphere: bool
    dim: int
    flips: int
    path: tuple[BistellarMove, ...] = ()

    def __str__(self) -> str:
        return f"Sphere({self.dim})" if self.is_sphere else "Unknown"


def _facets_as_sets(c: SimplicialComplex | Iterable) -> set[frozenset]:
    facets = c.facets if isinstance(c, SimplicialComplex) else c
    return {frozenset(f) for f in facets}


def _check_closed_pseudomanifold(facets: set[frozenset]) -> int:
    dims = {len(f) - 1 for f in facets}
    if len(dims) != 1:
        raise NonPseudomanifoldError("complex is not pure")
    d = dims.pop()
    count: dict[frozenset, int] = defaultdict(int)
    for f in facets:
        for v in f:
            count[f - {v}] += 1
    bad = [r for r, n in count.items() if n != 2]
    if bad:
        r = sorted(bad[0])
        raise NonPseudomanifoldError(
            f"ridge {' '.join(map(str, r))} lies in {count[bad[0]]} facets (need exactly 2)"
        )
    return d


def _is_face(facets: set[frozenset], s: frozenset) -> bool:
    return any(s <= f for f in facets)


def _fresh_label(vertices: set) -> Label:
    # a derived label that cannot collide with anything present
    base = sorted(vertices)
    lab = derived(base[:2]) if len(base) >= 2 else derived([1, 2])
    while lab in vertices:
        lab = derived([lab, base[0]])
    return lab


def available_moves(facets: set[frozenset], max_removed: int | None = None) -> list[BistellarMove]:
    """Every legal move, optionally only those with ``|A| <= max_removed``.

    Moves that add a vertex (``|A| = d + 1``) are included only when
    ``max_removed`` allows it; their new vertex is chosen by :func:`apply_move`.
    """
    d = len(next(iter(facets))) - 1
    star: dict[frozenset, list[frozenset]] = defaultdict(list)
    top = d + 1 if max_removed is None else min(max_removed, d + 1)
    for f in facets:
        for k in range(1, top + 1):
            for a in combinations(sorted(f), k):
                star[frozenset(a)].append(f)
    moves = []
    for a, fs in star.items():
        k = len(a)
        need = d + 2 - k  # |B|
        if k == d + 1:
            moves.append(BistellarMove(a, frozenset()))
            continue
        if len(fs) != need:
            continue
        b = frozenset().union(*fs) - a
        if len(b) != need:
            continue
        if _is_face(facets, b):
            continue
        moves.append(BistellarMove(a, b))
    moves.sort(key=lambda m: (len(m.removed_face), sorted(m.removed_face), sorted(m.added_face)))
    return moves


def apply_move(facets: set[frozenset], move: BistellarMove) -> tuple[set[frozenset], BistellarMove]:
    a, b = move.removed_face, move.added_face
    if not b:
        vertices = set().union(*facets)
        b = frozenset((_fresh_label(vertices),))
        move = BistellarMove(a, b)
    old = {a | (b - {x}) for x in b}
    if not old <= facets:
        raise ValueError("move is not applicable")
    new = {(a - {x}) | b for x in a}
    return (facets - old) | new, move


def _is_simplex_boundary(facets: set[frozenset], d: int) -> bool:
    if len(facets) != d + 2:
        return False
    vertices = set().union(*facets)
    return len(vertices) == d + 2


def recognize_sphere_bistellar(
    c: SimplicialComplex,
    flip_budget: int = DEFAULT_FLIP_BUDGET,
    rng_seed: int = 0,
    plateau_length: int = 8,
) -> SphereVerdict:
    """Look for a flip sequence reducing ``c`` to the boundary of a simplex.

    Greedy descent: among facet-reducing moves the steepest ones are taken,
    ties broken at random. When no reducing move exists a short random walk of
    non-reducing moves is made. A positive verdict is a proof; ``Unknown`` is
    not a refutation.
    """
    facets = _facets_as_sets(c)
    d = _check_closed_pseudomanifold(facets)
    rng = random.Random(rng_seed)
    path: list[BistellarMove] = []
    flips = 0
    while flips <= flip_budget:
        if _is_simplex_boundary(facets, d):
            return SphereVerdict(True, d, flips, tuple(path))
        if flips == flip_budget:
            break
        reducing = available_moves(facets, max_removed=(d + 1) // 2)
        reducing = [m for m in reducing if m.facet_change < 0]
        if reducing:
            steepest = min(m.facet_change for m in reducing)
            choice = rng.choice([m for m in reducing if m.facet_change == steepest])
            facets, done = apply_move(facets, choice)
            path.append(done)
            flips += 1
            continue
        # plateau: take a few random non-reducing moves (excluding vertex insertions)
        for _ in range(plateau_length):
            if flips >= flip_budget:
                break
            options = [m for m in available_moves(facets, max_removed=d) if m.facet_change >= 0]
            if not options:
                options = available_moves(facets)
            small = min(m.facet_change for m in options)
            choice = rng.choice([m for m in options if m.facet_change == small])
            facets, done = apply_move(facets, choice)
            path.append(done)
            flips += 1
            if any(m.facet_change < 0 for m in available_moves(facets, max_removed=(d + 1) // 2)):
                break
    return SphereVerdict(False, d, flips, tuple(path))


def random_flips(c: SimplicialComplex, n: int, rng_seed: int = 0) -> SimplicialComplex:
    """Apply ``n`` uniformly chosen legal moves (vertex insertions included)."""
    facets = _facets_as_sets(c)
    _check_closed_pseudomanifold(facets)
    rng = random.Random(rng_seed)
    for _ in range(n):
        moves = available_moves(facets)
        facets, _ = apply_move(facets, rng.choice(moves))
    return closure_from_facets([tuple(sorted(f)) for f in facets])
