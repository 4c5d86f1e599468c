"""Flat torus coordinates, the star map into CP^2 and the bi-disk pieces.

Points of the plane ``x1 + x4 + x7 = 0`` are taken modulo the hexagonal
lattice spanned by ``(1, 1, -2)`` and ``(-2, 1, 1)``. The hexagon
``H = {x : sum 0, max |x_i| <= 1}`` is a fundamental domain of area ``3 sqrt 3``.

Coordinates of CP^2 are written ``[z1 : z4 : z7]``. ``sigma_map`` is the left
shift ``(z1, z4, z7) -> (z4, z7, z1)``, so ``[1:0:0] -> [0:0:1]``. Since ``S``
sends vertex 1 to vertex 4, the map of the complex satisfies
``h(S x) = sigma^-1(h(x))``; ``sigma_inverse`` is the shift matching ``S``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Iterable, Sequence

from .errors import GeometryError
from .labels import Label, Simplex, derived, original

__all__ = [
    "FlatTorusPoint",
    "LATTICE_BASIS",
    "ProjectivePoint",
    "HEXAGON_AREA",
    "beta_membership",
    "central_torus_coordinates",
    "central_torus_lifts",
    "hexagon_vertices",
    "is_lattice_vector",
    "p2_identity",
    "reduce_mod_lattice",
    "sigma_flat",
    "sigma_flat_inverse",
    "sigma_inverse",
    "sigma_map",
    "star_map",
    "tau_map",
    "torus_angles",
    "triangle_area",
    "triangle_area_squared",
]

LATTICE_BASIS = ((1, 1, -2), (-2, 1, 1))
HEXAGON_AREA = 3 * math.sqrt(3)
SUM_TOL = 1e-12


def _exact(x) -> bool:
    return isinstance(x, (int, Fraction))


class FlatTorusPoint:
    """A point ``(x1, x4, x7)`` with coordinate sum 0 (exact for rationals)."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable):
        c = tuple(Fraction(x) if isinstance(x, int) else x for x in coords)
        if len(c) != 3:
            raise GeometryError("a flat point has three coordinates")
        s = sum(c)
        if (s != 0) if all(_exact(x) for x in c) else abs(s) > SUM_TOL:
            raise GeometryError(f"coordinate sum {s} is not zero")
        object.__setattr__(self, "coords", c)

    def __setattr__(self, name, value):
        raise AttributeError("FlatTorusPoint is immutable")

    @property
    def exact(self) -> bool:
        return all(_exact(x) for x in self.coords)

    def __add__(self, other) -> FlatTorusPoint:
        o = other.coords if isinstance(other, FlatTorusPoint) else tuple(other)
        return FlatTorusPoint(a + b for a, b in zip(self.coords, o))

    def __sub__(self, other) -> FlatTorusPoint:
        o = other.coords if isinstance(other, FlatTorusPoint) else tuple(other)
        return FlatTorusPoint(a - b for a, b in zip(self.coords, o))

    def __neg__(self) -> FlatTorusPoint:
        return FlatTorusPoint(-a for a in self.coords)

    def scale(self, k) -> FlatTorusPoint:
        return FlatTorusPoint(k * a for a in self.coords)

    def floats(self) -> tuple[float, float, float]:
        return tuple(float(a) for a in self.coords)

    def norm(self) -> float:
        return math.sqrt(sum(float(a) ** 2 for a in self.coords))

    def __eq__(self, other) -> bool:
        return isinstance(other, FlatTorusPoint) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __repr__(self) -> str:
        return "FlatTorusPoint(" + ", ".join(str(a) for a in self.coords) + ")"


def combine(points: Sequence[FlatTorusPoint], weights: Sequence) -> FlatTorusPoint:
    acc = [0, 0, 0]
    for p, w in zip(points, weights):
        for i in range(3):
            acc[i] = acc[i] + w * p.coords[i]
    if not all(_exact(w) for w in weights):
        # rounding in the weights can leave a tiny nonzero sum
        s = sum(float(a) for a in acc) / 3
        acc = [float(a) - s for a in acc]
    return FlatTorusPoint(acc)


def lattice_coordinates(p: FlatTorusPoint) -> tuple:
    """``(a, b)`` with ``p = a (1,1,-2) + b (-2,1,1)``."""
    x1, x4, _ = p.coords
    b = (x4 - x1) / 3
    a = x4 - b
    return a, b


def lattice_vector(i: int, j: int) -> tuple[int, int, int]:
    u, v = LATTICE_BASIS
    return tuple(i * u[k] + j * v[k] for k in range(3))


def is_lattice_vector(p, tol: float = 0.0) -> bool:
    p = p if isinstance(p, FlatTorusPoint) else FlatTorusPoint(p)
    a, b = lattice_coordinates(p)
    if p.exact:
        return Fraction(a).denominator == 1 and Fraction(b).denominator == 1
    return abs(a - round(a)) <= tol and abs(b - round(b)) <= tol


def in_hexagon(p: FlatTorusPoint, tol: float = 0.0) -> bool:
    return max(abs(x) for x in p.coords) <= 1 + tol


def reduce_mod_lattice(p: FlatTorusPoint, tol: float = 1e-12) -> FlatTorusPoint:
    """Representative of ``p`` in the hexagon H.

    Points on the boundary of H have two or three representatives; the
    lexicographically smallest coordinate tuple is returned.
    """
    if not isinstance(p, FlatTorusPoint):
        p = FlatTorusPoint(p)
    a, b = lattice_coordinates(p)
    fa, fb = math.floor(a), math.floor(b)
    eps = 0 if p.exact else tol
    best = None
    for i, j in product(range(-2, 3), repeat=2):
        q = p - lattice_vector(fa + i, fb + j)
        if in_hexagon(q, eps) and (best is None or q.coords < best.coords):
            best = q
    if best is None:
        raise GeometryError(f"no hexagon representative found for {p}")
    return best


def hexagon_vertices() -> list[FlatTorusPoint]:
    return [FlatTorusPoint(v) for v in sorted(set(permutations((1, -1, 0))))]


def torus_angles(p: FlatTorusPoint) -> tuple[float, float]:
    """``(arg z4/z1, arg z7/z1)`` of ``star_map(p)`` before reduction mod 2 pi."""
    x1, x4, x7 = p.floats()
    return 2 * math.pi * (x4 - x1) / 3, 2 * math.pi * (x7 - x1) / 3


@dataclass(frozen=True)
class ProjectivePoint:
    """A point ``[z1 : z4 : z7]`` of CP^2."""

    coords: tuple[complex, complex, complex]

    def __post_init__(self):
        c = tuple(complex(z) for z in self.coords)
        if len(c) != 3 or not any(c):
            raise GeometryError("projective point needs three coordinates, not all zero")
        object.__setattr__(self, "coords", c)

    def canonical(self, tie_tol: float = 1e-12) -> ProjectivePoint:
        mods = [abs(z) for z in self.coords]
        m = max(mods)
        k = next(i for i, x in enumerate(mods) if x >= m - tie_tol * m)
        d = self.coords[k]
        return ProjectivePoint(tuple(z / d for z in self.coords))

    def unit(self) -> tuple[complex, ...]:
        n = math.sqrt(sum(abs(z) ** 2 for z in self.coords))
        return tuple(z / n for z in self.coords)

    def distance(self, other: ProjectivePoint) -> float:
        """Chordal distance between unit representatives after phase alignment."""
        a, b = self.unit(), other.unit()
        inner = sum(x * y.conjugate() for x, y in zip(a, b))
        ph = inner / abs(inner) if abs(inner) > 0 else 1.0
        return math.sqrt(sum(abs(x - ph * y) ** 2 for x, y in zip(a, b)))

    def close_to(self, other: ProjectivePoint, tol: float = 1e-12) -> bool:
        return self.distance(other) <= tol

    def moduli(self) -> tuple[float, float, float]:
        c = self.canonical().coords
        return tuple(abs(z) for z in c)

    def __iter__(self):
        return iter(self.coords)

    def __str__(self) -> str:
        def fmt(z: complex) -> str:
            z = complex(round(z.real, 12) + 0.0, round(z.imag, 12) + 0.0)
            if z.imag == 0:
                return f"{z.real:g}"
            return f"{z.real:g}{z.imag:+g}i"

        return "[" + ":".join(fmt(z) for z in self.canonical().coords) + "]"


def star_map(p: FlatTorusPoint) -> ProjectivePoint:
    return ProjectivePoint(tuple(cmath.exp(2j * math.pi * float(x) / 3) for x in p.coords))


def sigma_flat(p: FlatTorusPoint) -> FlatTorusPoint:
    x1, x4, x7 = p.coords
    return FlatTorusPoint((x4, x7, x1))


def sigma_flat_inverse(p: FlatTorusPoint) -> FlatTorusPoint:
    x1, x4, x7 = p.coords
    return FlatTorusPoint((x7, x1, x4))


def sigma_map(q: ProjectivePoint) -> ProjectivePoint:
    z1, z4, z7 = q.coords
    return ProjectivePoint((z4, z7, z1))


def sigma_inverse(q: ProjectivePoint) -> ProjectivePoint:
    z1, z4, z7 = q.coords
    return ProjectivePoint((z7, z1, z4))


def tau_map(q: ProjectivePoint) -> ProjectivePoint:
    return ProjectivePoint(tuple(z.conjugate() for z in q.coords))


INDEX = (1, 4, 7)


def beta_membership(q: ProjectivePoint, tol: float = 1e-9) -> frozenset[int]:
    """Indices ``j`` with ``|z_j|`` within ``tol`` of the largest modulus (relative)."""
    mods = [abs(z) for z in q.coords]
    m = max(mods)
    return frozenset(j for j, x in zip(INDEX, mods) if x >= m * (1 - tol))


# vertex 2 of the central torus; the other torus vertices follow by symmetry
P2 = FlatTorusPoint((Fraction(-1, 7), Fraction(5, 7), Fraction(-4, 7)))


def central_torus_coordinates() -> dict[Label, FlatTorusPoint]:
    o = FlatTorusPoint((0, 0, 0))
    p2 = P2
    # S sends 2 -> 5 -> 8, which is the inverse shift on coordinates
    p5 = sigma_flat_inverse(p2)
    p8 = sigma_flat_inverse(p5)
    return {
        derived((1, 4, 7)): o,
        original(2): p2,
        original(5): p5,
        original(8): p8,
        original(3): -p2,
        original(6): -p5,
        original(9): -p8,
    }


def _dist2(a: FlatTorusPoint, b: FlatTorusPoint):
    return sum((x - y) ** 2 for x, y in zip(a.coords, b.coords))


def _diameter2(pts: Sequence[FlatTorusPoint]):
    return max(_dist2(a, b) for a, b in combinations(pts, 2))


def minimal_lifts(points: Sequence[FlatTorusPoint], span: int = 2) -> list[list[FlatTorusPoint]]:
    """All lattice translates of ``points[1:]`` minimizing the diameter.

    ``points[0]`` stays put.
    """
    base = points[0]
    cands = []
    for p in points[1:]:
        opts = []
        a, b = lattice_coordinates(p - base)
        fa, fb = math.floor(a), math.floor(b)
        for i, j in product(range(-span, span + 1), repeat=2):
            opts.append(p - lattice_vector(fa + i, fb + j))
        cands.append(opts)
    best, found = None, []
    for choice in product(*cands):
        pts = [base, *choice]
        d = _diameter2(pts)
        if best is None or d < best:
            best, found = d, [pts]
        elif d == best:
            found.append(pts)
    return found


def lift_simplex(points: Sequence[FlatTorusPoint], span: int = 2) -> tuple[list[FlatTorusPoint], int]:
    """A diameter-minimizing lift and the number of lifts attaining the minimum.

    A count of 1 means the lift is unique up to a common lattice shift.
    """
    found = minimal_lifts(points, span)
    return found[0], len(found)


def triangle_area_squared(a: FlatTorusPoint, b: FlatTorusPoint, c: FlatTorusPoint):
    """Exact for rational input."""
    u = [y - x for x, y in zip(a.coords, b.coords)]
    v = [y - x for x, y in zip(a.coords, c.coords)]
    cr = (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])
    return sum(x * x for x in cr) / 4


def triangle_area(a: FlatTorusPoint, b: FlatTorusPoint, c: FlatTorusPoint) -> float:
    return math.sqrt(float(triangle_area_squared(a, b, c)))


def central_torus_lifts(triangles: Iterable[Simplex]) -> dict[Simplex, dict[Label, FlatTorusPoint]]:
    """Diameter-minimizing lift for every triangle of the central torus.

    Raises :class:`GeometryError` when a triangle's minimizing lift is not
    unique up to a common lattice shift.
    """
    pos = central_torus_coordinates()
    out = {}
    for t in triangles:
        pts, count = lift_simplex([pos[v] for v in t])
        if count != 1:
            raise GeometryError(f"ambiguous lift for triangle {t}")
        out[tuple(t)] = dict(zip(t, pts))
    return out


def p2_identity() -> dict[str, tuple]:
    """``2 p2 - X(p2)`` for the candidate maps X, with a verdict for each.

    The target is ``(-1, 2, -1)`` modulo the lattice.
    """
    target = FlatTorusPoint((-1, 2, -1))
    out = {}
    maps = {
        "sigma": sigma_flat,
        "sigma^2": lambda p: sigma_flat(sigma_flat(p)),
    }
    for name, f in maps.items():
        d = P2.scale(2) - f(P2)
        out[name] = (d, d == target, is_lattice_vector(d - target))
    return out
