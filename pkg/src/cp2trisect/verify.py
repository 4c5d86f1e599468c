"""Check suites behind ``cp2trisect verify TARGET``."""

from __future__ import annotations

import cmath
import math
import random
from fractions import Fraction

from .bistellar import recognize_sphere_bistellar
from .catalog import (
    S_PERM,
    T_PERM,
    build_cp2_9,
    build_rp2_6,
    build_t2_7,
    enumerate_small_surfaces,
)
from .complex import (
    classify_closed_surface,
    f_vector,
    is_isomorphic,
    link,
)
from .geometry import (
    HEXAGON_AREA,
    FlatTorusPoint,
    ProjectivePoint,
    beta_membership,
    central_torus_coordinates,
    central_torus_lifts,
    hexagon_vertices,
    in_hexagon,
    is_lattice_vector,
    lattice_vector,
    p2_identity,
    reduce_mod_lattice,
    sigma_flat,
    sigma_map,
    star_map,
    tau_map,
    triangle_area,
    triangle_area_squared,
)
from .homology import homology_groups
from .labels import derived, format_simplex, make_simplex, original, parse_compact
from .report import Check, check
from .subdivision import find_cracks, relative_subdivide, subdivide_facet
from .symmetry import Permutation, apply_permutation, automorphism_group, geometric_fixed_set

__all__ = ["TARGETS", "run_target"]

TARGETS = (
    "rp26", "t27", "cp29", "subdivision", "trisection", "solid-torus",
    "central-torus", "fixed-set", "geometry", "plmap",
)


def _fv(c) -> str:
    counts, chi = f_vector(c)
    return "(" + ",".join(map(str, counts)) + f"), chi={chi}"


def _perm(text: str) -> Permutation:
    return Permutation.from_cycles(text)


def check_rp26() -> list[Check]:
    c = build_rp2_6()
    rows = [check("f_vector", f_vector(c) == ((6, 15, 10), 1), "(6,15,10), chi=1", _fv(c),
                  "6 vertices, 15 edges, 10 triangles")]
    h = homology_groups(c)
    rows.append(check("homology", str(h) == "(Z, Z/2, 0)", "(Z, Z/2, 0)", h, "projective plane homology"))
    d = classify_closed_surface(c)
    rows.append(check("surface", d.name == "projective plane", "projective plane", d.name, "surface type"))
    g = automorphism_group(c)
    rows.append(check("aut_order", len(g) == 60, "aut_order=60", f"aut_order={len(g)}", "symmetries of RP2_6"))
    s = _perm("(123)(456)")
    rows.append(check("(123)(456)_symmetry", apply_permutation(c, s) == c, True, apply_permutation(c, s) == c,
                      "three-fold symmetry permuting 1, 2, 3"))
    return rows


def check_t27() -> list[Check]:
    c = build_t2_7()
    rows = [check("f_vector", f_vector(c) == ((7, 21, 14), 0), "(7,21,14), chi=0", _fv(c),
                  "7 vertices, 21 edges, 14 triangles")]
    h = homology_groups(c)
    rows.append(check("homology", str(h) == "(Z, Z^2, Z)", "(Z, Z^2, Z)", h, "torus homology"))
    d = classify_closed_surface(c)
    rows.append(check("surface", d.name == "torus", "torus", d.name, "surface type"))
    g = automorphism_group(c)
    rows.append(check("aut_order", len(g) == 42, "aut_order=42", f"aut_order={len(g)}", "symmetries of T2_7"))
    seed = c.facets[0]
    orbit = _orbit(seed, g)
    rows.append(check("facet_transitive", len(orbit) == 14, 14, len(orbit), "one orbit of triangles"))
    return rows


def _orbit(seed, group) -> set:
    return {p.simplex(seed) for p in group}


def check_cp29(flip_budget: int = 100_000, seed: int = 0) -> list[Check]:
    c = build_cp2_9()
    rows = [check("facets", len(c.facets) == 36, "facets=36", f"facets={len(c.facets)}", "36 4-simplices")]
    ok = f_vector(c) == ((9, 36, 84, 90, 36), 3)
    rows.append(check("f_vector", ok, "(9,36,84,90,36), chi=3", _fv(c), "face numbers"))
    g = automorphism_group(c)
    s, t = _perm(S_PERM), _perm(T_PERM)
    rows.append(check("aut_order", len(g) == 54, "aut_order=54", f"aut_order={len(g)}", "symmetry group of order 54"))
    rows.append(check("S_T_in_group", s in g and t in g, "S, T in Aut", f"S:{s in g} T:{t in g}",
                      "S and T are symmetries"))
    rows.append(check("S_T_commute", s @ t == t @ s, "ST = TS", s @ t == t @ s, "the pairs commute"))
    h = homology_groups(c)
    rows.append(check("homology", str(h) == "(Z, 0, Z, 0, Z)", "(Z, 0, Z, 0, Z)", h, "homology of CP2"))
    verdicts = [recognize_sphere_bistellar(link(c, (v,)), flip_budget=flip_budget, rng_seed=seed) for v in c.vertices]
    n = sum(v.is_sphere for v in verdicts)
    status = True if n == 9 else None
    rows.append(check("vertex_links_sphere", status, "9/9 Sphere(3)", f"{n}/9 Sphere(3)",
                      "combinatorial 4-manifold"))
    tri = len(c.faces_of_dim(2))
    rows.append(check("3_neighborly", tri == 84, "84 triangles", tri, "every triple spans a triangle"))
    return rows


def check_subdivision() -> list[Check]:
    one, four, seven = (original(i) for i in (1, 4, 7))
    c = build_cp2_9()
    sub = relative_subdivide(c, (one, four, seven))
    rows = [check("facets", len(sub.facets) == 78, 78, len(sub.facets), "(1,2,6).(18,12,6) = 78")]
    rows.append(check("vertices", len(sub.vertices) == 13, 13, len(sub.vertices), "adds [14], [17], [47], [147]"))
    single = all(sum(v in (one, four, seven) for v in f) == 1 for f in sub.facets)
    rows.append(check("one_distinguished_vertex", single, "all facets", single, "one vertex from 1, 4, 7"))
    rank2 = subdivide_facet(make_simplex(parse_compact("14256")), {one, four, seven})
    want2 = {make_simplex(parse_compact(x)) for x in ("1[14]256", "4[14]256")}
    rows.append(check("rank2_rule", set(rank2) == want2, "1[14]abc, 4[14]abc",
                      " ".join(format_simplex(f, "") for f in rank2), "rank 2 pieces"))
    rank3 = subdivide_facet(make_simplex(parse_compact("14726")), {one, four, seven})
    want3 = {make_simplex(parse_compact(x)) for x in (
        "1[14][147]26", "1[17][147]26", "4[14][147]26", "4[47][147]26", "7[17][147]26", "7[47][147]26")}
    rows.append(check("rank3_rule", set(rank3) == want3, "six pieces", len(set(rank3) & want3), "rank 3 pieces"))
    s = _perm(S_PERM)
    eq = apply_permutation(sub, s) == relative_subdivide(apply_permutation(c, s), (one, four, seven))
    rows.append(check("S_equivariant", eq, True, eq, "the subdivision commutes with S"))
    cracks = find_cracks(c, (one, four, seven))
    rows.append(check("no_cracks", not cracks, 0, len(cracks), "pieces agree on shared faces"))
    real = relative_subdivide(build_rp2_6(), [original(i) for i in (1, 2, 3)])
    one_each = all(sum(v.id in (1, 2, 3) for v in f if v.is_original) == 1 for f in real.facets)
    rows.append(check("real_case", len(real.facets) == 18 and one_each, "18 triangles, one of 1,2,3 each",
                      f"{len(real.facets)} triangles, {one_each}", "18 = 3 x 6"))
    from .trisection import trisect

    rt = trisect(real, (1, 2, 3))
    sizes = [len(rt.pieces[j].facets) for j in rt.distinguished]
    s3 = _perm("(123)(456)")
    cyc = apply_permutation(rt.pieces[original(1)], s3) == rt.pieces[original(2)]
    rows.append(check("real_case_pieces", sizes == [6, 6, 6] and cyc, "6+6+6, permuted by (123)(456)",
                      f"{sizes}, cyclic={cyc}", "the real case splits the same way"))
    return rows


def _trisection():
    from .trisection import trisect

    sub = relative_subdivide(build_cp2_9(), [original(i) for i in (1, 4, 7)])
    return sub, trisect(sub)


def check_trisection() -> list[Check]:
    from .trisection import trisection_checks

    sub, t = _trisection()
    return trisection_checks(sub, t)


def check_solid_torus(flip_budget: int = 100_000, seed: int = 0) -> list[Check]:
    from .trisection import pair_intersection, verify_solid_torus

    _, t = _trisection()
    cert = verify_solid_torus(pair_intersection(t, 1, 4), flip_budget=flip_budget, seed=seed)
    return cert.checks


def check_central_torus() -> list[Check]:
    from .trisection import verify_central_torus

    _, t = _trisection()
    return verify_central_torus(t, with_enumeration=True)


def check_fixed_set() -> list[Check]:
    c = build_cp2_9()
    t = _perm(T_PERM)
    fs = geometric_fixed_set(c, t)
    want = " ".join(str(v) for v in make_simplex(parse_compact("147[23][56][89]")))
    got = " ".join(str(v) for v in fs.vertices)
    rows = [check("vertices", got == want, want, got, "fixed vertices and midpoints")]
    iso = is_isomorphic(fs, build_rp2_6())
    rows.append(check("iso_RP2_6", iso is not None, "isomorphism found", "found" if iso else "none",
                      "the fixed set of T is RP2_6"))
    sub = relative_subdivide(c, [original(i) for i in (1, 4, 7)])
    fs2 = geometric_fixed_set(sub, t)
    real = relative_subdivide(fs, [original(i) for i in (1, 4, 7)])
    ok = fs2 == real and len(fs2.facets) == 18
    rows.append(check("subdivided_fixed_set", ok, "18-triangle subdivision", f"{len(fs2.facets)} triangles, match={fs2 == real}",
                      "same subdivision as the real case"))
    s = _perm(S_PERM)
    eq = apply_permutation(fs, s) == fs
    rows.append(check("S_preserves_fixed_set", eq, True, eq, "S commutes with T"))
    enum = [(n, len(enumerate_small_surfaces(n, "rp2"))) for n in (4, 5, 6)]
    ok = enum == [(4, 0), (5, 0), (6, 1)]
    rows.append(check("rp2_minimal", ok, "0, 0, 1 on 4, 5, 6 vertices", enum, "6 vertices are needed and suffice"))
    return rows


def check_geometry(samples: int = 10_000, seed: int = 0, tol: float = 1e-12) -> list[Check]:
    rng = random.Random(seed)
    rows = []

    def rand_point():
        a, b = rng.uniform(-2, 2), rng.uniform(-2, 2)
        return FlatTorusPoint((a, b, -a - b))

    worst = 0.0
    for _ in range(samples):
        p = rand_point()
        lam = lattice_vector(rng.randint(-3, 3), rng.randint(-3, 3))
        worst = max(worst, star_map(p).distance(star_map(p + lam)))
    rows.append(check("star_lattice_invariance", worst < tol, f"< {tol:g}", f"{worst:.2e}",
                      "translations act trivially"))
    worst_s = worst_t = 0.0
    for _ in range(samples):
        p = rand_point()
        worst_s = max(worst_s, star_map(sigma_flat(p)).distance(sigma_map(star_map(p))))
        worst_t = max(worst_t, star_map(-p).distance(tau_map(star_map(p))))
    rows.append(check("star_sigma", worst_s < tol, f"< {tol:g}", f"{worst_s:.2e}", "star commutes with the shift"))
    rows.append(check("star_tau", worst_t < tol, f"< {tol:g}", f"{worst_t:.2e}", "negation becomes conjugation"))

    worst_r = 0.0
    bad = 0
    for _ in range(samples):
        p = rand_point()
        r = reduce_mod_lattice(p)
        if not in_hexagon(r, 1e-12) or reduce_mod_lattice(r) != r:
            bad += 1
        worst_r = max(worst_r, star_map(p).distance(star_map(r)))
    rows.append(check("reduce_mod_lattice", bad == 0 and worst_r < tol, "in H, idempotent, same class",
                      f"{bad} bad, {worst_r:.2e}", "hexagon is a fundamental domain"))
    hv = hexagon_vertices()
    same = all(reduce_mod_lattice(v) in hv for v in hv)
    classes = {reduce_mod_lattice(v) for v in hv}
    rows.append(check("hexagon_vertices", same and len(classes) == 2, "6 vertices in 2 classes of 3",
                      f"{len(classes)} classes", "corners of H"))

    pos = central_torus_coordinates()
    z2 = ProjectivePoint((1, cmath.exp(4j * math.pi / 7), cmath.exp(12j * math.pi / 7)))
    d2 = star_map(pos[original(2)]).distance(z2)
    rows.append(check("vertex_2_image", d2 < tol, "[1:e^{4pi i/7}:e^{12pi i/7}]", f"{d2:.2e}", "image of vertex 2"))
    d147 = star_map(pos[derived((1, 4, 7))]).distance(ProjectivePoint((1, 1, 1)))
    rows.append(check("vertex_147_image", d147 < tol, "[1:1:1]", f"{d147:.2e}", "image of [147]"))
    lifts = central_torus_lifts(build_t2_7().facets)
    tri56 = next(f for f in lifts if original(5) in f and original(6) in f)
    mid = (lifts[tri56][original(5)] + lifts[tri56][original(6)]).scale(Fraction(1, 2))
    d56 = star_map(mid).distance(ProjectivePoint((1, 1, -1)))
    rows.append(check("midpoint_56_image", d56 < tol, "[1:1:-1]", f"{d56:.2e}", "image of [56]"))

    areas2 = {triangle_area_squared(*pts.values()) for pts in lifts.values()}
    total = sum(triangle_area(*pts.values()) for pts in lifts.values())
    ok = len(areas2) == 1 and abs(total - HEXAGON_AREA) < 1e-9
    rows.append(check("hexagon_area_partition", ok, "14 equal areas, sum 3 sqrt 3",
                      f"area^2 {sorted(areas2)}, sum {total:.12f}", "the triangles tile H"))

    ident = p2_identity()
    single = ident["sigma"][1]
    d2, double, _ = ident["sigma^2"]
    rows.append(check("p2_identity_single_sigma", single, "2p2 - sigma(p2) = (-1,2,-1)", single,
                      "the defining equation of p2"))
    # the exponent 2 is what was printed; report it rather than fix it silently
    rows.append(check("p2_identity_sigma_squared_flag", not double, "sigma^2 fails (exponent discrepancy)",
                      f"2p2 - sigma^2(p2) = ({', '.join(str(x) for x in d2.coords)})",
                      "printed exponent is 2"))

    mem = all({1, 4} <= beta_membership(ProjectivePoint((1, 1, cmath.exp(1j * rng.uniform(0, 6.3)))))
              for _ in range(samples // 10 or 1))
    rows.append(check("alpha14_in_beta14", mem, True, mem, "the loop [1:1:u] lies in beta_14"))
    lam_ok = all(is_lattice_vector(FlatTorusPoint(b)) for b in ((1, 1, -2), (-2, 1, 1)))
    rows.append(check("lattice_basis", lam_ok, True, lam_ok, "translation vectors"))
    return rows


def check_plmap(samples: int = 10_000, tol: float = 1e-9, seed: int = 0, sections: int = 256, mesh_path=None):
    from .plmap import check_map_properties

    rows, _ = check_map_properties(samples=samples, tol=tol, rng_seed=seed, sections=sections, mesh_path=mesh_path)
    return rows


def run_target(target: str, *, samples=10_000, tol=1e-9, seed=0, flip_budget=100_000, sections=256, mesh_path=None):
    if target == "rp26":
        return check_rp26()
    if target == "t27":
        return check_t27()
    if target == "cp29":
        return check_cp29(flip_budget, seed)
    if target == "subdivision":
        return check_subdivision()
    if target == "trisection":
        return check_trisection()
    if target == "solid-torus":
        return check_solid_torus(flip_budget, seed)
    if target == "central-torus":
        return check_central_torus()
    if target == "fixed-set":
        return check_fixed_set()
    if target == "geometry":
        return check_geometry(samples, seed)
    if target == "plmap":
        return check_plmap(samples, tol, seed, sections, mesh_path)
    raise ValueError(f"unknown target {target!r}")
