"""Abstract simplicial complexes over :class:`~cp2trisect.labels.Label`.

Complexes are immutable. Every face is stored explicitly; the complexes this
package deals with have at most a few thousand faces.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Mapping

from .errors import (
    LabelCollisionError,
    MalformedSimplexError,
    NonPseudomanifoldError,
    NotAFaceError,
    PurityError,
)
from .labels import Label, Simplex, make_simplex

__all__ = [
    "SimplicialComplex",
    "SurfaceDescriptor",
    "boundary_complex",
    "check_orientable",
    "classify_closed_surface",
    "closure_from_facets",
    "cone_over",
    "f_vector",
    "is_isomorphic",
    "iter_isomorphisms",
    "join",
    "link",
    "relabel",
]


def _subfaces(s: Simplex) -> Iterator[Simplex]:
    for k in range(1, len(s) + 1):
        yield from combinations(s, k)


class SimplicialComplex:
    """A finite downward-closed set of simplices.

    Build one with :func:`closure_from_facets` or :meth:`from_facets`; the
    constructor trusts that ``faces`` is already closed.
    """

    __slots__ = ("faces", "facets", "vertices", "_by_dim", "_hash")

    def __init__(self, faces: Iterable[Simplex]):
        faces = frozenset(faces)
        by_dim: dict[int, list[Simplex]] = defaultdict(list)
        for f in faces:
            by_dim[len(f) - 1].append(f)
        for d in by_dim:
            by_dim[d].sort()
        covered: set[Simplex] = set()
        for d in sorted(by_dim, reverse=True):
            for f in by_dim[d]:
                if len(f) > 1:
                    covered.update(combinations(f, len(f) - 1))
        facets = tuple(sorted((f for f in faces if f not in covered), key=lambda f: (-len(f), f)))
        self.faces = faces
        self.facets = facets
        self.vertices = tuple(f[0] for f in by_dim.get(0, ()))
        self._by_dim = {d: tuple(v) for d, v in by_dim.items()}
        self._hash = hash(faces)

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable]) -> SimplicialComplex:
        return closure_from_facets([make_simplex(f) for f in facets])

    @property
    def dim(self) -> int:
        return max(self._by_dim, default=-1)

    def faces_of_dim(self, k: int) -> tuple[Simplex, ...]:
        """All ``k``-faces in canonical order."""
        return self._by_dim.get(k, ())

    def is_pure(self) -> bool:
        d = self.dim
        return all(len(f) == d + 1 for f in self.facets)

    def __contains__(self, s) -> bool:
        return tuple(s) in self.faces

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and self.faces == other.faces

    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return len(self.faces)

    def __repr__(self) -> str:
        fv = ",".join(str(len(self.faces_of_dim(k))) for k in range(self.dim + 1))
        return f"<SimplicialComplex dim={self.dim} f=({fv})>"

    def facet_set(self) -> frozenset[Simplex]:
        return frozenset(self.facets)


def closure_from_facets(facets: Iterable[Simplex]) -> SimplicialComplex:
    """Downward closure of a list of simplices.

    Input facets contained in other input facets are demoted to faces.
    """
    facets = list(facets)
    if not facets:
        raise MalformedSimplexError("need at least one facet")
    faces: set[Simplex] = set()
    for f in facets:
        f = tuple(f)
        if len(set(f)) != len(f):
            raise MalformedSimplexError(f"repeated vertex in facet {f}")
        if list(f) != sorted(f):
            f = tuple(sorted(f))
        if f in faces:
            continue
        faces.update(_subfaces(f))
    return SimplicialComplex(faces)


def f_vector(c: SimplicialComplex) -> tuple[tuple[int, ...], int]:
    """Face counts per dimension and the Euler characteristic."""
    counts = tuple(len(c.faces_of_dim(k)) for k in range(c.dim + 1))
    chi = sum((-1) ** k * n for k, n in enumerate(counts))
    return counts, chi


def link(c: SimplicialComplex, f: Iterable[Label]) -> SimplicialComplex:
    f = tuple(sorted(f))
    if f not in c.faces:
        raise NotAFaceError(f"{' '.join(map(str, f))} is not a face")
    fs = set(f)
    out = []
    for g in c.faces:
        if len(g) > len(f) and fs.issubset(g):
            rest = tuple(v for v in g if v not in fs)
            out.append(rest)
    return SimplicialComplex(out)


def star_facets(c: SimplicialComplex, v: Label) -> list[Simplex]:
    return [f for f in c.facets if v in f]


def boundary_complex(c: SimplicialComplex) -> SimplicialComplex:
    """Complex generated by the codimension-one faces lying in exactly one facet."""
    if not c.is_pure():
        raise PurityError("boundary of a non-pure complex is undefined")
    count: dict[Simplex, int] = defaultdict(int)
    for f in c.facets:
        for r in combinations(f, len(f) - 1):
            count[r] += 1
    ridges = [r for r, n in count.items() if n == 1 and r]
    if not ridges:
        return SimplicialComplex(())
    return closure_from_facets(ridges)


def cone_over(c: SimplicialComplex, apex: Label) -> SimplicialComplex:
    if not c.faces:
        raise MalformedSimplexError("cannot cone over the empty complex")
    if apex in c.vertices:
        raise LabelCollisionError(f"apex {apex} is already a vertex")
    faces = set(c.faces)
    faces.add((apex,))
    for f in c.faces:
        faces.add(tuple(sorted(f + (apex,))))
    return SimplicialComplex(faces)


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    if set(a.vertices) & set(b.vertices):
        raise LabelCollisionError("join needs disjoint vertex sets")
    faces = set(a.faces) | set(b.faces)
    for f in a.faces:
        for g in b.faces:
            faces.add(tuple(sorted(f + g)))
    return SimplicialComplex(faces)


def relabel(c: SimplicialComplex, mapping: Mapping[Label, Label]) -> SimplicialComplex:
    return SimplicialComplex(tuple(sorted(mapping[v] for v in f)) for f in c.faces)


# --------------------------------------------------------------------------
# isomorphism search


def _vertex_invariants(c: SimplicialComplex) -> dict[Label, tuple]:
    per_vertex: dict[Label, list[int]] = {v: [0] * (c.dim + 1) for v in c.vertices}
    for f in c.faces:
        for v in f:
            per_vertex[v][len(f) - 1] += 1
    facet_deg = defaultdict(int)
    for f in c.facets:
        for v in f:
            facet_deg[v] += 1
    return {v: (facet_deg[v], tuple(cnt)) for v, cnt in per_vertex.items()}


def iter_isomorphisms(a: SimplicialComplex, b: SimplicialComplex) -> Iterator[dict[Label, Label]]:
    """Yield every vertex bijection carrying the faces of ``a`` onto those of ``b``.

    Backtracking over vertex images, pruned by per-vertex face counts and by
    checking every fully assigned face as soon as its last vertex is placed.
    """
    if f_vector(a) != f_vector(b) or len(a.vertices) != len(b.vertices):
        return
    inv_a = _vertex_invariants(a)
    inv_b = _vertex_invariants(b)
    if sorted(inv_a.values()) != sorted(inv_b.values()):
        return
    if not a.vertices:
        yield {}
        return

    adjacency: dict[Label, set[Label]] = defaultdict(set)
    for e in a.faces_of_dim(1):
        adjacency[e[0]].add(e[1])
        adjacency[e[1]].add(e[0])

    # order vertices so each new one is as connected as possible to earlier ones
    order: list[Label] = []
    remaining = set(a.vertices)
    while remaining:
        best = max(
            sorted(remaining),
            key=lambda v: (len(adjacency[v] & set(order)), inv_a[v]),
        )
        order.append(best)
        remaining.remove(best)
    position = {v: i for i, v in enumerate(order)}

    # faces whose last vertex (in search order) is v
    closing: dict[Label, list[Simplex]] = defaultdict(list)
    for f in a.faces:
        if len(f) > 1:
            closing[max(f, key=position.__getitem__)].append(f)

    candidates = {v: [w for w in b.vertices if inv_b[w] == inv_a[v]] for v in order}
    b_faces = b.faces
    image: dict[Label, Label] = {}
    used: set[Label] = set()

    def extend(i: int) -> Iterator[dict[Label, Label]]:
        if i == len(order):
            yield dict(image)
            return
        v = order[i]
        for w in candidates[v]:
            if w in used:
                continue
            image[v] = w
            ok = True
            for f in closing[v]:
                if tuple(sorted(image[x] for x in f)) not in b_faces:
                    ok = False
                    break
            if ok:
                used.add(w)
                yield from extend(i + 1)
                used.discard(w)
            del image[v]

    yield from extend(0)


def is_isomorphic(a: SimplicialComplex, b: SimplicialComplex) -> dict[Label, Label] | None:
    """First vertex bijection ``a -> b`` found, or ``None``.

    The returned witness is re-verified against the full face sets.
    """
    for g in iter_isomorphisms(a, b):
        if relabel(a, g) == b:
            return g
    return None


# --------------------------------------------------------------------------
# orientability and surfaces


def _ridge_index(c: SimplicialComplex) -> dict[Simplex, list[Simplex]]:
    ridges: dict[Simplex, list[Simplex]] = defaultdict(list)
    for f in c.facets:
        for r in combinations(f, len(f) - 1):
            ridges[r].append(f)
    return ridges


def check_orientable(c: SimplicialComplex) -> tuple[bool, dict[Simplex, int] | None]:
    """Try to orient all facets coherently.

    Returns ``(True, signs)`` with a +1/-1 sign per facet (relative to sorted
    vertex order) such that facets sharing a ridge induce opposite
    orientations on it, or ``(False, None)``.
    """
    if not c.is_pure():
        raise PurityError("orientability needs a pure complex")
    ridges = _ridge_index(c)
    for r, fs in ridges.items():
        if len(fs) > 2:
            raise NonPseudomanifoldError(f"ridge {' '.join(map(str, r))} lies in {len(fs)} facets")

    def induced(f: Simplex, r: Simplex) -> int:
        missing = next(i for i, v in enumerate(f) if v not in r)
        return -1 if missing % 2 else 1

    signs: dict[Simplex, int] = {}
    for start in c.facets:
        if start in signs:
            continue
        signs[start] = 1
        queue = deque([start])
        while queue:
            f = queue.popleft()
            for r in combinations(f, len(f) - 1):
                for g in ridges[r]:
                    if g == f:
                        continue
                    need = -signs[f] * induced(f, r) * induced(g, r)
                    if g in signs:
                        if signs[g] != need:
                            return False, None
                    else:
                        signs[g] = need
                        queue.append(g)
    return True, signs


def _connected_components(c: SimplicialComplex) -> int:
    parent = {v: v for v in c.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in c.faces_of_dim(1):
        parent[find(e[0])] = find(e[1])
    return len({find(v) for v in c.vertices})


@dataclass(frozen=True)
class SurfaceDescriptor:
    """Result of :func:`classify_closed_surface`.

    ``failure`` is ``None`` for a connected closed surface and otherwise says
    which edge or vertex breaks the surface condition.
    """

    is_surface: bool
    orientable: bool | None
    euler: int
    n_triangles: int
    failure: str | None = None

    @property
    def name(self) -> str:
        if not self.is_surface:
            return "not a surface"
        if self.orientable:
            genus = (2 - self.euler) // 2
            return {0: "sphere", 1: "torus"}.get(genus, f"orientable genus {genus}")
        k = 2 - self.euler
        return {1: "projective plane", 2: "klein bottle"}.get(k, f"non-orientable genus {k}")


def classify_closed_surface(c: SimplicialComplex) -> SurfaceDescriptor:
    """Decide whether ``c`` is a connected closed surface and which one."""
    counts, chi = f_vector(c)
    n_tri = len(c.faces_of_dim(2))
    if c.dim != 2 or not c.is_pure():
        return SurfaceDescriptor(False, None, chi, n_tri, "not a pure 2-complex")
    ridges = _ridge_index(c)
    for e in c.faces_of_dim(1):
        n = len(ridges[e])
        if n != 2:
            return SurfaceDescriptor(
                False, None, chi, n_tri, f"edge {e[0]} {e[1]} lies in {n} triangles"
            )
    for v in c.vertices:
        lk = link(c, (v,))
        if lk.dim != 1 or _connected_components(lk) != 1:
            return SurfaceDescriptor(False, None, chi, n_tri, f"link of vertex {v} is not a single cycle")
    if _connected_components(c) != 1:
        return SurfaceDescriptor(False, None, chi, n_tri, "surface is disconnected")
    orientable, _ = check_orientable(c)
    return SurfaceDescriptor(True, orientable, chi, n_tri)
