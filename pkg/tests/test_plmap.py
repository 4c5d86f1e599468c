import math
import random

import pytest

from cp2trisect.errors import DomainError
from cp2trisect.geometry import ProjectivePoint, beta_membership, sigma_inverse, tau_map
from cp2trisect.labels import derived, make_simplex, original, parse_compact
from cp2trisect.plmap import (
    PLPoint,
    check_map_properties,
    core_point,
    crossings_with_s,
    eval_disk_cone,
    eval_h,
    eval_h14,
    eval_h147,
    expected_vertex_images,
    foliation_sections,
    model_diagnostics,
    vertex_images,
    write_mesh,
)
from cp2trisect.symmetry import Permutation

S = Permutation.from_cycles("(147)(258)(369)")
T = Permutation.from_cycles("(23)(56)(89)")


def simplex(text):
    return make_simplex(parse_compact(text))


def random_point(rng, facets):
    f = rng.choice(facets)
    w = [rng.expovariate(1.0) for _ in f]
    return PLPoint(f, [x / sum(w) for x in w])


def test_plpoint_validation():
    with pytest.raises(DomainError):
        PLPoint(simplex("12"), (0.5, 0.6))
    with pytest.raises(DomainError):
        PLPoint(simplex("12"), (1.0,))
    p = PLPoint((original(2), original(1)), (0.25, 0.75))
    assert p.weight(original(2)) == 0.25
    assert p.within(simplex("123")).bary == (0.75, 0.25, 0.0)
    with pytest.raises(DomainError):
        p.within(simplex("13"))


def test_vertex_images_match_table():
    got = vertex_images()
    want = expected_vertex_images()
    assert len(got) == len(want) == 13
    for v, z in want.items():
        assert got[v].distance(z) < 1e-12, v


def test_vertex_table_examples():
    imgs = vertex_images()
    assert imgs[original(1)].distance(ProjectivePoint((1, 0, 0))) == 0
    assert imgs[derived((1, 4))].distance(ProjectivePoint((1, 1, 0))) < 1e-12
    assert imgs[derived((1, 4, 7))].distance(ProjectivePoint((1, 1, 1))) < 1e-12
    # [56] is the midpoint of a torus edge rather than a vertex of the complex
    assert eval_h147(PLPoint.barycenter(simplex("56"))).distance(ProjectivePoint((1, 1, -1))) < 1e-12


def test_torus_points_land_on_torus(t27):
    rng = random.Random(1)
    for _ in range(200):
        p = random_point(rng, list(t27.facets))
        z = eval_h147(p)
        assert beta_membership(z) == {1, 4, 7}
        assert eval_h14(p).distance(z) == 0


def test_b14_lands_in_beta14(tri):
    rng = random.Random(2)
    facets = list(tri.pair(1, 4).facets)
    for _ in range(300):
        assert {1, 4} <= beta_membership(eval_h14(random_point(rng, facets)))


def test_sampled_conjugation(sub):
    rng = random.Random(3)
    facets = list(sub.facets)
    for _ in range(300):
        p = random_point(rng, facets)
        z = eval_h(p)
        assert eval_h(p.permuted(S)).distance(sigma_inverse(z)) < 1e-9
        assert eval_h(p.permuted(T)).distance(tau_map(z)) < 1e-9


def test_disk_cone():
    for theta in (0.0, math.pi):
        p = core_point(theta)
        z = eval_disk_cone(p)
        assert {1, 4} <= beta_membership(z)
        assert z.distance(eval_h14(p)) < 1e-12
    with pytest.raises(DomainError):
        eval_disk_cone(core_point(1.0))


def test_domain_errors():
    with pytest.raises(DomainError):
        eval_h(PLPoint(simplex("7[14]"), (0.5, 0.5)))
    with pytest.raises(DomainError):
        eval_h147(PLPoint.vertex(original(1)))


def test_foliation():
    secs = foliation_sections(17)
    # t = 0: barycenter of 2389, the point written [[23][89]]
    start = secs[0].core_point
    assert start.support() == simplex("2389")
    assert all(abs(x - 0.25) < 1e-9 for x in start.bary)
    assert secs[-1].core_point.support() == (derived((1, 4)),)
    assert all(s.margin > 0 for s in secs)
    assert all(crossings_with_s(s) == 1 for s in secs)


def test_model_diagnostics():
    d = model_diagnostics(128)
    assert d["min_orientation_det"] > 0
    assert d["min_star_margin"] > 0


def test_property_suite_small(tmp_path):
    mesh = tmp_path / "mesh.txt"
    rows, stats = check_map_properties(samples=300, sections=32, mesh_path=mesh)
    assert all(r.passed for r in rows), [r for r in rows if not r.passed]
    assert stats["membership_violations"] == 0
    lines = mesh.read_text().splitlines()
    assert lines and all(len(x.split()) == 9 for x in lines)


def test_check_is_seed_deterministic():
    a, _ = check_map_properties(samples=50, sections=8, rng_seed=7)
    b, _ = check_map_properties(samples=50, sections=8, rng_seed=7)
    assert [r.observed for r in a] == [r.observed for r in b]


def test_write_mesh_count(tmp_path):
    n = write_mesh(tmp_path / "m.txt", resolution=3)
    assert n == len((tmp_path / "m.txt").read_text().splitlines())
