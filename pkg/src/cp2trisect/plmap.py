"""Numerical evaluation of a PL homeomorphism from the subdivided complex to CP^2.

Layers, innermost first:

* ``eval_h147``: the central torus, linear in flat coordinates then ``star_map``.
* ``eval_h14``: the solid torus ``B14``. Each tetrahedron is mapped linearly
  into a model ``S^1 x C`` with coordinates ``(theta, w)``. ``theta`` is the
  flat angle ``arg z4/z1`` (lifted per tetrahedron) and ``w`` is an affine
  placement of the vertices, ``MODEL_W`` below. Every slice
  ``theta = const`` of the model is a polygon, star-shaped about the core
  point ``core(theta)``; the slice's boundary is a loop on the torus. A
  point at radius ``r`` along the ray from the core towards the loop point
  ``q`` goes to ``[1 : e^{i theta} : r e^{i phi(q)}]``. Points with
  ``theta`` in ``(-pi, 0)`` are evaluated through ``T`` and conjugation.
* ``eval_h``: ``B14`` is moved to ``B17`` and ``B47`` with ``S`` and the
  shifts ``sigma_map``, ``sigma_inverse``; each piece ``B_j`` is coned from
  ``j``.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .catalog import S_PERM, T2_7_FACETS, T_PERM, build_cp2_9
from .complex import SimplicialComplex, closure_from_facets
from .errors import DomainError, GeometryError
from .geometry import (
    FlatTorusPoint,
    ProjectivePoint,
    beta_membership,
    central_torus_coordinates,
    combine,
    lattice_vector,
    lift_simplex,
    minimal_lifts,
    sigma_inverse,
    sigma_map,
    star_map,
    tau_map,
    torus_angles,
)
from .labels import Label, derived, format_simplex, make_simplex, original, parse_compact
from .report import Check, check
from .subdivision import relative_subdivide
from .symmetry import Permutation
from .trisection import B14_TETRAHEDRA, pair_intersection, trisect

__all__ = [
    "FoliationSection",
    "MODEL_W",
    "PLPoint",
    "check_map_properties",
    "core_point",
    "eval_disk_cone",
    "eval_h",
    "eval_h14",
    "eval_h147",
    "foliation_sections",
    "model_diagnostics",
    "vertex_images",
    "write_mesh",
]

TWO_PI = 2 * math.pi
L14 = derived((1, 4))
L147 = derived((1, 4, 7))
L259 = derived((2, 5, 9))
L2389 = derived((derived((2, 3)), derived((8, 9))))

# Placement of the B14 vertices in the model disk. Symmetric under T
# (w of T(v) is the conjugate of w of v), chosen so every slice is
# star-shaped about the core with a comfortable margin.
MODEL_W = {
    L147: 0.91 + 0j,
    original(2): 0.84 - 0.62j,
    original(3): 0.84 + 0.62j,
    original(5): -0.62 + 0.37j,
    original(6): -0.62 - 0.37j,
    original(8): 0.18 - 0.63j,
    original(9): 0.18 + 0.63j,
    L14: -0.14 + 0j,
}

# the core bends at [259], over the slice theta = 4 pi / 7
CORE_BREAK = 4 * math.pi / 7


@dataclass(frozen=True)
class PLPoint:
    """A point of a simplex given by barycentric weights."""

    simplex: tuple[Label, ...]
    bary: tuple[float, ...]

    def __post_init__(self):
        s, b = tuple(self.simplex), tuple(float(x) for x in self.bary)
        if len(s) != len(b) or len(set(s)) != len(s):
            raise DomainError("simplex and weights do not match")
        if min(b) < -1e-12 or abs(sum(b) - 1) > 1e-9:
            raise DomainError(f"weights {b} are not barycentric")
        order = sorted(range(len(s)), key=lambda i: s[i])
        object.__setattr__(self, "simplex", tuple(s[i] for i in order))
        object.__setattr__(self, "bary", tuple(max(b[i], 0.0) for i in order))

    @classmethod
    def vertex(cls, v: Label) -> PLPoint:
        return cls((v,), (1.0,))

    @classmethod
    def barycenter(cls, simplex: Iterable[Label]) -> PLPoint:
        s = tuple(simplex)
        return cls(s, (1.0 / len(s),) * len(s))

    def weight(self, v: Label) -> float:
        try:
            return self.bary[self.simplex.index(v)]
        except ValueError:
            return 0.0

    def support(self) -> tuple[Label, ...]:
        return tuple(v for v, x in zip(self.simplex, self.bary) if x > 0)

    def within(self, simplex: Iterable[Label]) -> PLPoint:
        """The same point written over a larger simplex."""
        s = tuple(simplex)
        if not set(self.support()) <= set(s):
            raise DomainError("point does not lie on that simplex")
        return PLPoint(s, tuple(self.weight(v) for v in s))

    def permuted(self, p: Permutation) -> PLPoint:
        return PLPoint(tuple(p(v) for v in self.simplex), self.bary)

    def ambient(self) -> np.ndarray:
        """Coordinates in R^9: barycentric weights over the original vertices."""
        out = np.zeros(9)
        for v, x in zip(self.simplex, self.bary):
            for leaf, w in v.weights().items():
                out[leaf.id - 1] += x * w
        return out

    def __str__(self) -> str:
        parts = [f"{x:.6g}*{v}" for v, x in zip(self.simplex, self.bary) if x > 0]
        return " + ".join(parts)


# ---------------------------------------------------------------- model data


@dataclass(frozen=True)
class _Vert:
    theta: float
    w: complex


@dataclass(frozen=True)
class _Model:
    tets: tuple
    verts: dict  # tet -> {label: _Vert}
    torus: SimplicialComplex
    b14: SimplicialComplex
    face_owner: dict  # torus triangle -> tet
    face_flat: dict  # torus triangle -> {label: FlatTorusPoint}
    core_w: tuple[complex, complex, complex]  # at theta = 0, 4pi/7, pi
    halves: dict  # tet -> "B14'" | "B14''"


def _cx(rows) -> SimplicialComplex:
    return closure_from_facets([make_simplex(parse_compact(r)) for r in rows])


def _theta(p: FlatTorusPoint) -> float:
    return torus_angles(p)[0]


def _lift_tet(tet: tuple, pos: dict) -> dict:
    """Lifted angles ``theta`` for the vertices of a tetrahedron of B14.

    The torus vertices are lifted to minimize the flat diameter. Ties are
    allowed when they only differ in ``phi``. The mean angle is then put in
    ``(-pi, pi]`` when ``[14]`` (angle 0) is a vertex and in ``(0, 2 pi]``
    otherwise.
    """
    torus_vs = [v for v in tet if v in pos]
    lifts = minimal_lifts([pos[v] for v in torus_vs], span=1)
    thetas = {tuple(round(_theta(p), 9) for p in pts) for pts in lifts}
    if len(thetas) != 1:
        raise GeometryError(f"ambiguous lift for {format_simplex(tet, '')}")
    th = [_theta(p) for p in lifts[0]]
    mean = sum(th) / len(th)
    lo = -math.pi if L14 in tet else 0.0
    k = math.floor((mean - lo) / TWO_PI - 1e-12)
    out = {v: _Vert(t - k * TWO_PI, MODEL_W[v]) for v, t in zip(torus_vs, th)}
    if L14 in tet:
        out[L14] = _Vert(0.0, MODEL_W[L14])
    return out


def _face_flat(face: tuple, verts: dict, pos: dict) -> dict:
    """Flat lift of a torus triangle matching the angles of its tetrahedron."""
    pts, count = lift_simplex([pos[v] for v in face])
    if count != 1:
        raise GeometryError(f"ambiguous lift for torus triangle {format_simplex(face, '')}")
    k = round((verts[face[0]].theta - _theta(pts[0])) / TWO_PI)
    # (-2, 1, 1) raises theta by 2 pi
    pts = [p + lattice_vector(0, k) for p in pts]
    for v, p in zip(face, pts):
        if abs(_theta(p) - verts[v].theta) > 1e-9:
            raise GeometryError(f"torus triangle {format_simplex(face, '')} disagrees with its tetrahedron")
    return dict(zip(face, pts))


@lru_cache(maxsize=1)
def _model() -> _Model:
    b14 = _cx(B14_TETRAHEDRA)
    torus = _cx(T2_7_FACETS)
    pos = central_torus_coordinates()
    tets = b14.faces_of_dim(3)
    verts = {t: _lift_tet(t, pos) for t in tets}
    # shared triangles must see the same lift up to a common shift
    for a in tets:
        for b in tets:
            if a >= b:
                continue
            common = sorted(set(a) & set(b))
            if len(common) < 3:
                continue
            diffs = [verts[a][v].theta - verts[b][v].theta for v in common]
            if max(diffs) - min(diffs) > 1e-9 or abs(diffs[0] / TWO_PI - round(diffs[0] / TWO_PI)) > 1e-9:
                raise GeometryError(f"inconsistent lifts on {format_simplex(common, '')}")
    face_owner = {}
    for t in tets:
        for i in range(4):
            f = t[:i] + t[i + 1 :]
            if f in torus.faces:
                face_owner[f] = t
    if set(face_owner) != set(torus.faces_of_dim(2)):
        raise GeometryError("torus triangles are not faces of B14")
    face_flat = {f: _face_flat(f, verts[t], pos) for f, t in face_owner.items()}
    w259 = (MODEL_W[original(2)] + MODEL_W[original(5)] + MODEL_W[original(9)]) / 3
    w2389 = sum(MODEL_W[original(i)] for i in (2, 3, 8, 9)) / 4
    halves = {t: ("B14''" if L14 in t else "B14'") for t in tets}
    m = _Model(tuple(tets), verts, torus, b14, face_owner, face_flat, (MODEL_W[L14], w259, w2389), halves)
    _check_orientation(m)
    return m


def _model_matrix(m: _Model, tet, shift: float = 0.0) -> np.ndarray:
    rows = []
    for v in tet:
        x = m.verts[tet][v]
        rows.append([1.0, x.theta + shift, x.w.real, x.w.imag])
    return np.array(rows)


def _check_orientation(m: _Model) -> float:
    dets = [np.linalg.det(_model_matrix(m, t)) for t in m.tets]
    # a consistent orientation of B14 makes every tetrahedron positive or negative
    # in the model; the sign depends on the vertex order, so compare with the
    # orientation signs of the complex
    from .complex import check_orientable

    ok, signs = check_orientable(m.b14)
    if not ok:
        raise GeometryError("B14 is not orientable")
    prod = [np.sign(d) * signs[t] for d, t in zip(dets, m.tets)]
    if len(set(prod)) != 1 or min(abs(d) for d in dets) < 1e-6:
        raise GeometryError("model placement folds a tetrahedron")
    return min(abs(d) for d in dets)


def core_w(theta: float) -> complex:
    """Core point of the slice at ``theta`` in ``[0, pi]``."""
    a, b, c = _model().core_w
    if theta <= CORE_BREAK:
        return a + (b - a) * (theta / CORE_BREAK)
    return b + (c - b) * ((theta - CORE_BREAK) / (math.pi - CORE_BREAK))


@dataclass(frozen=True)
class _Crossing:
    w: complex
    phi: float
    face: tuple
    edge: tuple  # (i, j) vertex positions in face
    s: float
    half: str

    @property
    def point(self) -> PLPoint:
        i, j = self.edge
        if self.s == 0.0:
            return PLPoint.vertex(self.face[i])
        if self.s == 1.0:
            return PLPoint.vertex(self.face[j])
        return PLPoint((self.face[i], self.face[j]), (1 - self.s, self.s))


@lru_cache(maxsize=1)
def _face_table() -> tuple:
    """Per torus triangle: angles, model positions and flat phi of its vertices."""
    m = _model()
    rows = []
    for f, tet in m.face_owner.items():
        th = tuple(m.verts[tet][v].theta for v in f)
        w = tuple(m.verts[tet][v].w for v in f)
        phi = tuple(torus_angles(m.face_flat[f][v])[1] for v in f)
        rows.append((f, th, w, phi, min(th), max(th), m.halves[tet]))
    return tuple(rows)


def _slice(theta: float) -> list[tuple[_Crossing, _Crossing]]:
    """Segments of the torus loop in the slice at ``theta``."""
    out = []
    for f, th, w, phi, lo, hi, half in _face_table():
        for k in (-1, 0, 1):
            target = theta + k * TWO_PI
            if not lo - 1e-12 <= target <= hi + 1e-12:
                continue
            pts: list[_Crossing] = []
            for i, j in ((0, 1), (0, 2), (1, 2)):
                a, b = th[i], th[j]
                if a == b:
                    continue
                s = (target - a) / (b - a)
                if -1e-12 <= s <= 1 + 1e-12:
                    s = min(max(s, 0.0), 1.0)
                    cw = w[i] * (1 - s) + w[j] * s
                    if any(abs(cw - q.w) < 1e-12 for q in pts):
                        continue
                    # phi is affine on the lifted triangle
                    pts.append(_Crossing(cw, phi[i] * (1 - s) + phi[j] * s, f, (i, j), s, half))
            if len(pts) == 2:
                out.append((pts[0], pts[1]))
    return out


def _cross(a: complex, b: complex) -> float:
    return a.real * b.imag - a.imag * b.real


def star_margin(theta: float) -> float:
    """How transversal the slice's loop is to the rays from its core.

    The smallest sine of the angle between a loop segment and the ray from
    the core to either end. When this is positive and the angles the
    segments subtend add up to one turn, the slice polygon is star-shaped
    about the core. Returns -1 when the angles do not add up.
    """
    o = core_w(theta)
    total = 0.0
    worst = math.inf
    for a, b in _slice(theta):
        u, v = a.w - o, b.w - o
        cr = _cross(u, v)
        dot = u.real * v.real + u.imag * v.imag
        total += abs(math.atan2(cr, dot))
        e = b.w - a.w
        if abs(e) < 1e-12:
            continue
        for x in (u, v):
            worst = min(worst, abs(_cross(x, e)) / (abs(x) * abs(e)))
    if abs(total - TWO_PI) > 1e-9:
        return -1.0
    return worst


# ------------------------------------------------------------ evaluation


def _torus_complex() -> SimplicialComplex:
    return _model().torus


def _flat_of(p: PLPoint) -> FlatTorusPoint:
    m = _model()
    sup = p.support()
    tri = p.simplex if p.simplex in m.face_owner else next(
        (f for f in m.torus.faces_of_dim(2) if set(sup) <= set(f)), None)
    if tri is None:
        raise DomainError(f"{p} is not on the central torus")
    q = p.within(tri)
    return combine([m.face_flat[tri][v] for v in tri], list(q.bary))


def eval_h147(p: PLPoint) -> ProjectivePoint:
    """Image of a point of the central torus."""
    if not set(p.support()) <= set(_model().torus.vertices) or tuple(p.support()) not in _model().torus.faces:
        raise DomainError(f"{p} is not on the central torus")
    return star_map(_flat_of(p))


def _b14_tet(p: PLPoint) -> tuple:
    m = _model()
    if p.simplex in m.verts:
        return p.simplex
    sup = set(p.support())
    for t in m.tets:
        if sup <= set(t):
            return t
    raise DomainError(f"{p} is not on B14")


def _model_coords(p: PLPoint) -> tuple[float, complex]:
    tet = _b14_tet(p)
    q = p.within(tet)
    vs = _model().verts[tet]
    th = sum(x * vs[v].theta for v, x in zip(q.simplex, q.bary))
    w = sum(x * vs[v].w for v, x in zip(q.simplex, q.bary))
    return th, w


def _reduce_angle(th: float) -> float:
    r = math.remainder(th, TWO_PI)
    return math.pi if r == -math.pi else r


def _direct(theta: float, w: complex) -> ProjectivePoint:
    o = core_w(theta)
    d = w - o
    u = cmath.exp(1j * theta)
    if abs(d) < 1e-14:
        return ProjectivePoint((1, u, 0))
    best = None
    for a, b in _slice(theta):
        e = b.w - a.w
        den = _cross(d, -e)
        if abs(den) < 1e-15:
            continue
        rhs = a.w - o
        t = _cross(rhs, -e) / den
        s = _cross(d, rhs) / den
        if t > 1e-12 and -1e-9 <= s <= 1 + 1e-9 and (best is None or t < best[0]):
            phi = a.phi + min(max(s, 0.0), 1.0) * (b.phi - a.phi)
            best = (t, phi)
    if best is None:
        raise GeometryError(f"ray from the core misses the slice at theta={theta}")
    t, phi = best
    r = min(1.0 / t, 1.0)
    return ProjectivePoint((1, u, r * cmath.exp(1j * phi)))


_T = None
_S = None


def _perms() -> tuple[Permutation, Permutation]:
    global _T, _S
    if _T is None:
        _S = Permutation.from_cycles(S_PERM)
        _T = Permutation.from_cycles(T_PERM)
    return _S, _T


def eval_h14(p: PLPoint) -> ProjectivePoint:
    m = _model()
    sup = tuple(p.support())
    if sup in m.torus.faces:
        return eval_h147(p)
    theta, w = _model_coords(p)
    theta = _reduce_angle(theta)
    if theta < 0:
        _, t = _perms()
        return tau_map(eval_h14(p.permuted(t)))
    return _direct(theta, w)


def eval_disk_cone(p: PLPoint, tol: float = 1e-12) -> ProjectivePoint:
    """Image of a point of one of the two cutting disks (slices at 0 and pi)."""
    theta, w = _model_coords(p)
    theta = _reduce_angle(theta)
    if abs(theta) <= tol:
        return _direct(0.0, w)
    if abs(abs(theta) - math.pi) <= tol:
        if theta < 0:
            w = w.conjugate()
        return _direct(math.pi, w)
    raise DomainError(f"{p} is on neither disk (theta={theta})")


@lru_cache(maxsize=1)
def _subdivided():
    sub = relative_subdivide(build_cp2_9(), [original(i) for i in (1, 4, 7)])

    tri = trisect(sub)
    pairs = {}
    for a, b in ((1, 4), (1, 7), (4, 7)):
        pairs[(a, b)] = set(pair_intersection(tri, a, b).faces_of_dim(3))
    return sub, pairs, sub.facet_set()


def _facet_for(p: PLPoint) -> tuple:
    sub, _, facet_set = _subdivided()
    if p.simplex in facet_set:
        return p.simplex
    sup = set(p.support())
    for f in sub.facets:
        if sup <= set(f):
            return f
    raise DomainError(f"{p} is not a point of the subdivided complex")


def _boundary_image(q: PLPoint, j: int) -> ProjectivePoint:
    """``h`` on a tetrahedron of the boundary of ``B_j``."""
    _, pairs, _ = _subdivided()
    tau = tuple(sorted(q.simplex))
    k = next((k for k in (1, 4, 7) if k != j and tau in pairs[tuple(sorted((j, k)))]), None)
    if k is None:
        raise DomainError(f"{format_simplex(tau, '')} is not in the boundary of B{j}")
    pair = tuple(sorted((j, k)))
    s, _ = _perms()
    if pair == (1, 4):
        return eval_h14(q)
    if pair == (1, 7):
        return sigma_map(eval_h14(q.permuted(s)))
    return sigma_inverse(eval_h14(q.permuted(s.inverse())))


def eval_h(p: PLPoint) -> ProjectivePoint:
    facet = _facet_for(p)
    p = p.within(facet)
    j = next(v for v in facet if v.is_original and v.id in (1, 4, 7))
    lam = p.weight(j)
    idx = (1, 4, 7).index(j.id)
    if lam >= 1.0:
        e = [0, 0, 0]
        e[idx] = 1
        return ProjectivePoint(tuple(e))
    rest = tuple(v for v in facet if v != j)
    q = PLPoint(rest, tuple(p.weight(v) / (1 - lam) for v in rest))
    z = _boundary_image(q, j.id).coords
    zj = z[idx]
    s = 1 - lam
    out = tuple(1 if i == idx else s * z[i] / zj for i in range(3))
    return ProjectivePoint(out)


def vertex_images() -> dict[Label, ProjectivePoint]:
    sub, _, _ = _subdivided()
    return {v: eval_h(PLPoint.vertex(v)) for v in sub.vertices}


def core_point(theta: float) -> PLPoint:
    """The domain point over ``core(theta)``, ``theta`` in ``[0, pi]``."""
    return _locate(theta, core_w(theta))


def _locate(theta: float, w: complex) -> PLPoint:
    m = _model()
    best = None
    for t in m.tets:
        for k in (-1, 0, 1):
            a = _model_matrix(m, t, k * TWO_PI).T
            lam = np.linalg.solve(a, np.array([1.0, theta, w.real, w.imag]))
            lo = lam.min()
            if best is None or lo > best[0]:
                best = (lo, t, lam)
    lo, t, lam = best
    if lo < -1e-9:
        raise DomainError(f"model point ({theta}, {w}) is outside B14")
    lam = np.clip(lam, 0, None)
    lam /= lam.sum()
    return PLPoint(t, tuple(float(x) for x in lam))


# ------------------------------------------------------------ foliation


@dataclass(frozen=True)
class FoliationSection:
    t: float
    theta: float
    loop: tuple[PLPoint, ...]
    core_point: PLPoint
    halves: frozenset
    margin: float


def _ordered_loop(theta: float) -> list[_Crossing]:
    o = core_w(theta)
    pts: list[_Crossing] = []
    for a, b in _slice(theta):
        for c in (a, b):
            if not any(abs(c.w - q.w) < 1e-12 for q in pts):
                pts.append(c)
    pts.sort(key=lambda c: cmath.phase(c.w - o))
    return pts


def foliation_sections(n: int = 256) -> list[FoliationSection]:
    """``n`` loops with ``t`` evenly spaced; ``t = 0`` is the slice at ``pi``.

    Raises :class:`GeometryError` if a slice fails to be star-shaped about
    its core point.
    """
    if n < 2:
        raise ValueError("need at least two sections")
    out = []
    for i in range(n):
        t = i / (n - 1)
        theta = math.pi * (1 - t)
        margin = star_margin(theta)
        if not margin > 0:
            raise GeometryError(f"slice at theta={theta} is not star-shaped (margin {margin})")
        loop = _ordered_loop(theta)
        halves = frozenset(c.half for c in loop)
        out.append(FoliationSection(t, theta, tuple(c.point for c in loop), core_point(theta), halves, margin))
    return out


def loop_flat(section: FoliationSection) -> list[tuple[float, float]]:
    """Loop vertices as unwrapped ``(theta, phi)`` flat angles."""
    return [torus_angles(_flat_of(p)) for p in section.loop]


def _seg_hits(p, q, a, b) -> tuple[float, float] | None:
    d1 = (q[0] - p[0], q[1] - p[1])
    d2 = (b[0] - a[0], b[1] - a[1])
    den = d1[0] * d2[1] - d1[1] * d2[0]
    if abs(den) < 1e-15:
        return None
    r = (a[0] - p[0], a[1] - p[1])
    u = (r[0] * d2[1] - r[1] * d2[0]) / den
    v = (r[0] * d1[1] - r[1] * d1[0]) / den
    return u, v


def crossings_with_s(section: FoliationSection) -> int:
    """How often the loop meets the segment from [147] through vertex 2 to theta = pi."""
    p2 = torus_angles(central_torus_coordinates()[original(2)])
    end = (math.pi, p2[1] * math.pi / p2[0])
    pts = loop_flat(section)
    count = 0
    for i in range(len(pts)):
        a, b = pts[i], pts[(i + 1) % len(pts)]
        # unwrap b next to a
        b = (a[0] + math.remainder(b[0] - a[0], TWO_PI), a[1] + math.remainder(b[1] - a[1], TWO_PI))
        for k1 in range(-2, 3):
            for k2 in range(-2, 3):
                dx, dy = TWO_PI * k2, -TWO_PI * k1 + TWO_PI * k2
                hit = _seg_hits(a, b, (dx, dy), (end[0] + dx, end[1] + dy))
                if hit and -1e-12 <= hit[0] < 1 - 1e-12 and -1e-12 <= hit[1] <= 1 + 1e-12:
                    count += 1
    return count


def model_diagnostics(n: int = 1024) -> dict:
    m = _model()
    margins = [star_margin(math.pi * i / (n - 1)) for i in range(n)]
    return {
        "min_orientation_det": _check_orientation(m),
        "min_star_margin": min(margins),
        "sections": n,
    }


# ------------------------------------------------------------ sampling


def _dirichlet(rng: random.Random, k: int) -> list[float]:
    x = [rng.expovariate(1.0) for _ in range(k)]
    s = sum(x)
    return [v / s for v in x]


def _random_point(rng: random.Random, facets: Sequence[tuple]) -> PLPoint:
    f = facets[rng.randrange(len(facets))]
    return PLPoint(f, _dirichlet(rng, len(f)))


def check_map_properties(
    samples: int = 10_000,
    tol: float = 1e-9,
    rng_seed: int = 0,
    sections: int = 256,
    mesh_path=None,
) -> tuple[list[Check], dict]:
    rng = random.Random(rng_seed)
    s, t = _perms()
    sub, pairs, _ = _subdivided()
    facets = list(sub.facets)
    stats: dict = {}
    rows: list[Check] = []

    # (a) continuity across shared ridges
    ridge_map: dict[tuple, list] = {}
    for f in facets:
        for i in range(len(f)):
            ridge_map.setdefault(f[:i] + f[i + 1 :], []).append(f)
    ridges = sorted(r for r, fs in ridge_map.items() if len(fs) == 2)
    worst = 0.0
    for _ in range(samples):
        r = ridges[rng.randrange(len(ridges))]
        pt = PLPoint(r, _dirichlet(rng, len(r)))
        a, b = (eval_h(pt.within(f)) for f in ridge_map[r])
        worst = max(worst, a.distance(b))
    stats["continuity_max"] = worst
    rows.append(check("continuity", worst < tol, f"< {tol:g}", f"{worst:.3e} over {samples} ridge points",
                      "h is well defined on shared faces"))

    # (a') boundary compatibility of the solid torus layer with the torus
    worst_b = 0.0
    torus_tris = _model().torus.faces_of_dim(2)
    for _ in range(max(samples // 10, 1)):
        tri = torus_tris[rng.randrange(len(torus_tris))]
        pt = PLPoint(tri, _dirichlet(rng, 3))
        tet = _model().face_owner[tri]
        direct = _direct_any(pt.within(tet))
        worst_b = max(worst_b, direct.distance(eval_h147(pt)))
    stats["torus_compat_max"] = worst_b
    rows.append(check("torus_compatibility", worst_b < 1e-12, "< 1e-12", f"{worst_b:.3e}",
                      "the solid torus map restricts to the torus isometry"))

    # (b) membership
    viol = 0
    for _ in range(samples):
        pt = _random_point(rng, facets)
        j = next(v.id for v in pt.simplex if v.is_original and v.id in (1, 4, 7))
        if j not in beta_membership(eval_h(pt), tol):
            viol += 1
    stats["membership_violations"] = viol
    rows.append(check("membership", viol == 0, "0 violations", f"{viol} of {samples}", "h maps B_j into beta_j"))

    # (c) conjugation
    worst_s = worst_t = 0.0
    for _ in range(samples):
        pt = _random_point(rng, facets)
        hp = eval_h(pt)
        worst_s = max(worst_s, eval_h(pt.permuted(s)).distance(sigma_inverse(hp)))
        worst_t = max(worst_t, eval_h(pt.permuted(t)).distance(tau_map(hp)))
    stats["conj_S_max"] = worst_s
    stats["conj_T_max"] = worst_t
    rows.append(check("conjugation_S", worst_s < tol, f"< {tol:g}", f"{worst_s:.3e}", "h S = Sigma^-1 h"))
    rows.append(check("conjugation_T", worst_t < tol, f"< {tol:g}", f"{worst_t:.3e}", "h T = conj h"))

    # vertex images
    rows.append(_vertex_table_check())

    # (d) local injectivity on nearby pairs
    delta = 1e-3
    min_img = math.inf
    min_ratio = math.inf
    for _ in range(samples):
        f = facets[rng.randrange(len(facets))]
        a = _dirichlet(rng, len(f))
        i, k = rng.sample(range(len(f)), 2)
        step = min(delta, a[i])
        if step <= 0:
            continue
        b = list(a)
        b[i] -= step
        b[k] += step
        pa, pb = PLPoint(f, a), PLPoint(f, b)
        dd = float(np.linalg.norm(pa.ambient() - pb.ambient()))
        if dd <= 0:
            continue
        di = eval_h(pa).distance(eval_h(pb))
        min_img = min(min_img, di)
        min_ratio = min(min_ratio, di / dd)
    stats["injectivity_min_image_distance"] = min_img
    stats["injectivity_min_ratio"] = min_ratio
    rows.append(check("local_injectivity", min_img > tol, f"image distance > {tol:g}",
                      f"min {min_img:.3e} (ratio {min_ratio:.3e})", "distinct nearby points have distinct images"))

    # foliation
    secs = foliation_sections(sections)
    ends = _is_point(secs[0].core_point, L2389) and _is_point(secs[-1].core_point, L14)
    rows.append(check("foliation_endpoints", ends, "core [[23][89]] at t=0, [14] at t=1", ends,
                      "the foliation interpolates between the two disks"))
    crossings = [crossings_with_s(sec) for sec in secs]
    ok = all(c == 1 for c in crossings)
    rows.append(check("foliation_meets_s_once", ok, "1 per loop",
                      f"min {min(crossings)}, max {max(crossings)}", "each loop meets s once"))
    margin = min(sec.margin for sec in secs)
    stats["star_margin_min"] = margin
    rows.append(check("foliation_star_shaped", margin > 0, "> 0", f"{margin:.4f}",
                      "coning loops to the core gives disjoint disks"))
    both = [sec.t for sec in secs if len(sec.halves) == 2]
    stats["both_halves_t_range"] = (min(both), max(both)) if both else None
    rng_txt = f"t in [{min(both):.4f}, {max(both):.4f}]" if both else "none"
    rows.append(check("foliation_halves", True, "reported", rng_txt,
                      "loops meeting both halves of B14"))

    if mesh_path is not None:
        n = write_mesh(mesh_path)
        stats["mesh_triangles"] = n
        rows.append(check("mesh_export", n > 0, "written", f"{n} triangles", "sampled image mesh"))
    return rows, stats


def _direct_any(p: PLPoint) -> ProjectivePoint:
    # evaluate through the ray casting even on the torus, for compatibility checks
    theta, w = _model_coords(p)
    theta = _reduce_angle(theta)
    if theta < 0:
        _, t = _perms()
        return tau_map(_direct_any(p.permuted(t)))
    return _direct(theta, w)


def _is_point(p: PLPoint, v: Label, tol: float = 1e-12) -> bool:
    amb = p.ambient()
    ref = np.zeros(9)
    for leaf, w in v.weights().items():
        ref[leaf.id - 1] += w
    return float(np.abs(amb - ref).max()) < tol


# expected images of the 13 vertices; the rest of the table follows from
# the ones given directly through S, T, sigma and conjugation
def expected_vertex_images() -> dict[Label, ProjectivePoint]:
    e = cmath.exp
    pi = math.pi
    z2 = ProjectivePoint((1, e(4j * pi / 7), e(12j * pi / 7)))
    s, t = _perms()
    out = {
        original(1): ProjectivePoint((1, 0, 0)),
        L14: ProjectivePoint((1, 1, 0)),
        L147: ProjectivePoint((1, 1, 1)),
        original(2): z2,
    }
    size = 0
    while len(out) != size:
        size = len(out)
        for v, z in list(out.items()):
            out.setdefault(s(v), sigma_inverse(z))
            out.setdefault(t(v), tau_map(z))
    return out


def _vertex_table_check() -> Check:
    exp = expected_vertex_images()
    got = vertex_images()
    worst = max(got[v].distance(exp[v]) for v in got)
    n_ok = sum(got[v].distance(exp[v]) < 1e-12 for v in got)
    return check("vertex_images", len(got) == 13 and n_ok == 13, "13/13 within 1e-12",
                 f"{n_ok}/{len(got)}, max {worst:.1e}", "vertex image table")


# ------------------------------------------------------------ mesh export


def donut(q: ProjectivePoint, major: float = 2.0) -> tuple[float, float, float]:
    """Embed a point of beta_14 (``|z7| <= |z1| = |z4|``) in R^3."""
    z1, z4, z7 = q.coords
    u = z4 / z1
    z = z7 / z1
    th = cmath.phase(u)
    rad = major + z.real
    return rad * math.cos(th), rad * math.sin(th), z.imag


def _torus_mesh(m: int) -> list:
    tris = []
    for f in _model().torus.faces_of_dim(2):
        grid = {}
        for i in range(m + 1):
            for j in range(m + 1 - i):
                k = m - i - j
                grid[i, j] = donut(eval_h147(PLPoint(f, (i / m, j / m, k / m))))
        for i in range(m):
            for j in range(m - i):
                tris.append((grid[i, j], grid[i + 1, j], grid[i, j + 1]))
                if i + j + 1 < m:
                    tris.append((grid[i + 1, j], grid[i + 1, j + 1], grid[i, j + 1]))
    return tris


def _disk_mesh(theta: float, rings: int) -> list:
    tris = []
    loop = _ordered_loop(theta)
    o = core_w(theta)
    for a, b in zip(loop, loop[1:] + loop[:1]):
        for r in range(rings):
            r0, r1 = r / rings, (r + 1) / rings
            pa0, pb0 = o + r0 * (a.w - o), o + r0 * (b.w - o)
            pa1, pb1 = o + r1 * (a.w - o), o + r1 * (b.w - o)
            img = [donut(_direct(theta, x)) for x in (pa0, pb0, pa1, pb1)]
            if r0 > 0:
                tris.append((img[0], img[1], img[3]))
            tris.append((img[0], img[3], img[2]))
    return tris


def write_mesh(path, resolution: int = 6) -> int:
    """Triangle soup of the images of the central torus and the two disks.

    One triangle per line, nine floats with 17 significant digits.
    """
    tris = _torus_mesh(resolution) + _disk_mesh(0.0, resolution) + _disk_mesh(math.pi, resolution)
    with open(path, "w", encoding="utf-8") as fh:
        for tri in tris:
            fh.write(" ".join(f"{x:.17g}" for pt in tri for x in pt) + "\n")
    return len(tris)
