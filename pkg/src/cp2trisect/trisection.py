"""Three-piece decomposition of the subdivided complex and its certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .bistellar import recognize_sphere_bistellar
from .catalog import S_PERM, build_t2_7
from .complex import (
    SimplicialComplex,
    boundary_complex,
    check_orientable,
    classify_closed_surface,
    closure_from_facets,
    cone_over,
    f_vector,
    is_isomorphic,
    join,
    link,
)
from .errors import MalformedSimplexError
from .homology import HomologySummary, homology_groups
from .labels import Label, derived, format_simplex, make_simplex, original, parse_compact
from .report import Check, check
from .symmetry import Permutation, apply_permutation

__all__ = [
    "B14_TETRAHEDRA",
    "SolidTorusCertificate",
    "Trisection",
    "pair_intersection",
    "split_b14",
    "trisect",
    "trisection_checks",
    "verify_central_torus",
    "verify_cone_structure",
    "verify_solid_torus",
]

B14_TETRAHEDRA = (
    "5289", "2389", "3689",
    "[14]256", "[14]356", "[14]259", "[14]368",
    "[14][147]26", "[14][147]68", "[14][147]83", "[14][147]35", "[14][147]59", "[14][147]92",
)
PATH_5236 = ("52", "23", "36")
EDGE_89 = ("89",)
GREY_TRIANGLES = ("259", "368")


def _cx(rows: Iterable[str]) -> SimplicialComplex:
    return closure_from_facets([make_simplex(parse_compact(r)) for r in rows])


def _intersect(*cs: SimplicialComplex) -> SimplicialComplex:
    faces = set(cs[0].faces)
    for c in cs[1:]:
        faces &= c.faces
    return SimplicialComplex(faces)


def _union(*cs: SimplicialComplex) -> SimplicialComplex:
    faces: set = set()
    for c in cs:
        faces |= c.faces
    return SimplicialComplex(faces)


def _fmt(facets) -> str:
    return " ".join(format_simplex(f, "") for f in facets)


@dataclass(frozen=True)
class Trisection:
    distinguished: tuple[Label, ...]
    pieces: dict  # Label -> SimplicialComplex
    pairwise: dict  # (Label, Label) sorted -> SimplicialComplex
    central: SimplicialComplex

    def piece(self, j) -> SimplicialComplex:
        return self.pieces[_lab(j)]

    def pair(self, i, j) -> SimplicialComplex:
        return pair_intersection(self, i, j)


def _lab(x) -> Label:
    return x if isinstance(x, Label) else original(int(x))


def trisect(subdivided: SimplicialComplex, distinguished: Iterable = (1, 4, 7)) -> Trisection:
    """``B_j`` is the closure of the facets having ``j`` as their distinguished vertex."""
    dist = tuple(sorted(_lab(d) for d in distinguished))
    groups: dict[Label, list] = {d: [] for d in dist}
    for f in subdivided.facets:
        hit = [v for v in f if v in groups]
        if len(hit) != 1:
            raise MalformedSimplexError(
                f"facet {format_simplex(f, '')} has {len(hit)} distinguished vertices"
            )
        groups[hit[0]].append(f)
    pieces = {d: closure_from_facets(groups[d]) for d in dist}
    pairwise = {(a, b): _intersect(pieces[a], pieces[b]) for a, b in combinations(dist, 2)}
    central = _intersect(*pieces.values())
    return Trisection(dist, pieces, pairwise, central)


def pair_intersection(t: Trisection, i, j) -> SimplicialComplex:
    a, b = sorted((_lab(i), _lab(j)))
    if a == b:
        raise ValueError("pair_intersection needs two different pieces")
    return t.pairwise[(a, b)]


def verify_cone_structure(t: Trisection) -> list[Check]:
    rows = []
    for j in t.distinguished:
        bj = t.pieces[j]
        apex_ok = bj == cone_over(link(bj, (j,)), j)
        rows.append(check(f"B{j}_cone", apex_ok, f"B{j} = cone(link({j}), {j})", apex_ok,
                          "each piece is a cone over its boundary"))
    for j in t.distinguished:
        others = [k for k in t.distinguished if k != j]
        bd = boundary_complex(t.pieces[j])
        p1 = pair_intersection(t, j, others[0])
        p2 = pair_intersection(t, j, others[1])
        n_top = len(bd.faces_of_dim(bd.dim))
        expect = len(p1.faces_of_dim(p1.dim)) + len(p2.faces_of_dim(p2.dim))
        ok = bd == _union(p1, p2) and n_top == expect
        rows.append(check(f"dB{j}_split", ok, f"{expect} = pair + pair", n_top,
                          "piece boundary is the union of its two pairwise intersections"))
    for j in t.distinguished:
        others = [k for k in t.distinguished if k != j]
        p1 = pair_intersection(t, j, others[0])
        p2 = pair_intersection(t, j, others[1])
        d = p1.dim
        shared = set(p1.faces_of_dim(d)) & set(p2.faces_of_dim(d))
        ok = not shared and _intersect(p1, p2) == t.central
        rows.append(check(f"B{j}_pairs_meet_in_center", ok, "0 shared top faces", len(shared),
                          "pairwise intersections have disjoint interiors"))
    return rows


def split_b14(b14: SimplicialComplex, apex=None) -> tuple[SimplicialComplex, SimplicialComplex]:
    """Facets without the apex (``[14]`` by default) and facets with it."""
    apex = apex or derived((1, 4))
    if b14.dim != 3 or not b14.is_pure():
        raise MalformedSimplexError("expected a pure 3-complex")
    with_apex = [f for f in b14.facets if apex in f]
    without = [f for f in b14.facets if apex not in f]
    if not with_apex or not without:
        raise MalformedSimplexError(f"apex {apex} does not split the complex")
    return closure_from_facets(without), closure_from_facets(with_apex)


@dataclass
class SolidTorusCertificate:
    split: tuple[tuple, tuple]
    checks: list[Check]
    homology: HomologySummary
    boundary: object  # SurfaceDescriptor
    orientation: dict | None = None
    gluing: tuple = ()
    ball_evidence: dict = field(default_factory=dict)

    @property
    def all_pass(self) -> bool:
        return len(self.checks) == 6 and all(c.passed for c in self.checks)


def verify_solid_torus(b14: SimplicialComplex, flip_budget: int = 100_000, seed: int = 0) -> SolidTorusCertificate:
    apex = derived((1, 4))
    b1, b2 = split_b14(b14, apex)
    rows = []

    path_join = join(_cx(PATH_5236), _cx(EDGE_89))
    ok1 = b1 == path_join
    rows.append(check("B14'_is_join", ok1, "join(path 5-2-3-6, edge 89)",
                      f"{len(b1.faces_of_dim(3))} tetrahedra, match={ok1}",
                      "first half is a join of two arcs, hence a ball"))

    lk = link(b2, (apex,))
    desc = classify_closed_surface(lk)
    verdict = recognize_sphere_bistellar(lk, flip_budget=flip_budget, rng_seed=seed)
    is_cone = b2 == cone_over(lk, apex)
    ok2 = is_cone and desc.name == "sphere" and desc.n_triangles == 10 and verdict.is_sphere
    rows.append(check("B14''_is_cone", ok2, "cone([14], 10-triangle sphere)",
                      f"cone={is_cone}, base={desc.name}/{desc.n_triangles}, flips={verdict}",
                      "second half is a cone over a 2-sphere, hence a ball"))

    meet = _intersect(b1, b2)
    grey = _cx(GREY_TRIANGLES)
    on_bd = all(t in boundary_complex(b1) and t in boundary_complex(b2) for t in grey.facets)
    disjoint = not (set(grey.facets[0]) & set(grey.facets[1]))
    ok3 = meet == grey and on_bd and disjoint
    rows.append(check("halves_meet_in_two_disks", ok3, "triangles 259, 368 (disjoint, on both boundaries)",
                      _fmt(meet.facets), "the balls are glued along two boundary disks"))

    orientable, signs = check_orientable(b14)
    rows.append(check("B14_orientable", orientable, True, orientable,
                      "the gluing yields a solid torus rather than a solid Klein bottle"))

    h = homology_groups(b14)
    ok5 = h.betti == (1, 1, 0, 0) and not any(h.torsion)
    rows.append(check("B14_homology", ok5, "(Z, Z, 0, 0)", h, "homology of a circle"))

    bd = boundary_complex(b14)
    bdesc = classify_closed_surface(bd)
    ok6 = bdesc.is_surface and bdesc.orientable and bdesc.euler == 0
    rows.append(check("dB14_torus", ok6, "orientable closed surface, chi=0",
                      f"{bdesc.name}, chi={bdesc.euler}", "boundary of a solid torus is a torus"))

    return SolidTorusCertificate(
        split=(b1.facets, b2.facets),
        checks=rows,
        homology=h,
        boundary=bdesc,
        orientation=signs,
        gluing=grey.facets,
        ball_evidence={"join": (PATH_5236, EDGE_89), "cone_apex": apex, "sphere_verdict": verdict},
    )


def verify_central_torus(t: Trisection, with_enumeration: bool = False) -> list[Check]:
    rows = []
    one, four, seven = t.distinguished
    c = t.central
    b14 = pair_intersection(t, one, four)
    bds = [boundary_complex(pair_intersection(t, a, b)) for a, b in combinations(t.distinguished, 2)]
    ok = all(b == c for b in bds)
    rows.append(check("B147_is_each_boundary", ok, "B147 = dB14 = dB17 = dB47", ok,
                      "the central surface bounds each pairwise piece"))
    verts = " ".join(str(v) for v in c.vertices)
    rows.append(check("B147_vertices", verts == "2 3 5 6 8 9 [147]", "2 3 5 6 8 9 [147]", verts,
                      "central torus vertices"))
    fv, chi = f_vector(c)
    rows.append(check("B147_f_vector", fv == (7, 21, 14), "(7, 21, 14)", fv, "central torus face counts"))
    iso = is_isomorphic(boundary_complex(b14), build_t2_7())
    rows.append(check("B147_iso_T27", iso is not None, "isomorphism found",
                      "found" if iso else "none", "central torus is the 7-vertex torus"))
    literal = c == build_t2_7()
    rows.append(check("B147_equals_T27_literal", literal, True, literal, "label-literal match"))
    s = Permutation.from_cycles(S_PERM)
    img = apply_permutation(c, s)
    centre = derived((1, 4, 7))
    cyc = Permutation({v: s(v) for v in c.vertices})
    ok_s = img == c and s(centre) == centre and str(cyc) == "(258)(369)"
    rows.append(check("S_on_B147", ok_s, "invariant, fixes [147], (258)(369)",
                      f"invariant={img == c}, {cyc}", "S acts on the central torus fixing [147]"))
    if with_enumeration:
        from .catalog import enumerate_small_surfaces

        found = enumerate_small_surfaces(7, "torus")
        ok_u = len(found) == 1 and is_isomorphic(found[0], c) is not None
        rows.append(check("T27_unique", ok_u, "1 torus on 7 vertices", len(found),
                          "uniqueness of the 7-vertex torus"))
    return rows


def trisection_checks(sub: SimplicialComplex, t: Trisection) -> list[Check]:
    """The 13-row trisection table used by the command line."""
    rows = []
    n = len(sub.facets)
    rows.append(check("subdivided_facets", n == 78, 78, n, "subdivided complex has 78 facets"))
    one_each = all(sum(v in t.pieces for v in f) == 1 for f in sub.facets)
    rows.append(check("one_distinguished_vertex", one_each, "all facets", one_each,
                      "each new facet has exactly one distinguished vertex"))
    for j in t.distinguished:
        k = len(t.pieces[j].facets)
        rows.append(check(f"B{j}_facets", k == 26, 26, k, "each piece has 26 facets"))
    sets = [set(t.pieces[j].facets) for j in t.distinguished]
    part = not (sets[0] & sets[1] or sets[0] & sets[2] or sets[1] & sets[2]) and (
        sets[0] | sets[1] | sets[2]) == set(sub.facets)
    rows.append(check("partition", part, "disjoint, union = all", part, "the pieces partition the facets"))
    s = Permutation.from_cycles(S_PERM)
    one, four, seven = t.distinguished
    cyc = (apply_permutation(t.pieces[one], s) == t.pieces[four]
           and apply_permutation(t.pieces[four], s) == t.pieces[seven]
           and apply_permutation(t.pieces[seven], s) == t.pieces[one])
    rows.append(check("S_cycles_pieces", cyc, "B1 -> B4 -> B7 -> B1", cyc, "S permutes the pieces cyclically"))
    b14 = pair_intersection(t, one, four)
    tets = b14.faces_of_dim(3)
    pure = b14.is_pure() and b14.dim == 3
    rows.append(check("B14_facets", pure and len(tets) == 13, 13, len(tets), "B14 has 13 tetrahedra"))
    listed = _cx(B14_TETRAHEDRA)
    rows.append(check("B14_list", b14 == listed, "the listed 13 tetrahedra", b14 == listed,
                      "tetrahedron list of B14"))
    b17 = pair_intersection(t, one, seven)
    img = apply_permutation(b14, s.inverse())
    ok = img == b17 and not (set(b14.faces_of_dim(3)) & set(b17.faces_of_dim(3)))
    rows.append(check("B17_is_S^-1(B14)", ok, "S^-1(B14) = B17, no shared tetrahedra", ok,
                      "images of the 13 tetrahedra under S^-1 lie in B17"))
    meet = _intersect(b14, b17)
    ok = meet == t.central and meet.dim == 2
    rows.append(check("B14_meet_B17", ok, "B147 (dim 2)", f"dim {meet.dim}", "B14 and B17 share only B147"))
    cone_rows = verify_cone_structure(t)
    cones = [r for r in cone_rows if r.name.endswith("_cone")]
    splits = [r for r in cone_rows if not r.name.endswith("_cone")]
    rows.append(check("cone_structure", all(r.passed for r in cones), "3/3 cones",
                      f"{sum(r.passed for r in cones)}/3", "each piece is a cone over its boundary"))
    n_bd = len(boundary_complex(t.pieces[one]).faces_of_dim(3))
    rows.append(check("boundary_split", all(r.passed for r in splits) and n_bd == 26, "26 = 13 + 13", n_bd,
                      "piece boundaries are 26 tetrahedra in two pairwise pieces"))
    return rows
