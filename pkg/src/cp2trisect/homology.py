"""Integral simplicial homology via Smith normal form."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .complex import SimplicialComplex, f_vector
from .errors import DimensionError

__all__ = [
    "HomologySummary",
    "boundary_matrix",
    "homology_groups",
    "smith_normal_form",
]


def boundary_matrix(c: SimplicialComplex, k: int) -> np.ndarray:
    """Matrix of the boundary map from k-chains to (k-1)-chains.

    Rows are the (k-1)-faces and columns the k-faces, both in canonical
    order. Entries are Python ints (``dtype=object``) so later reduction
    stays exact.
    """
    if not 1 <= k <= c.dim:
        raise DimensionError(f"k={k} outside 1..{c.dim}")
    rows = c.faces_of_dim(k - 1)
    cols = c.faces_of_dim(k)
    index = {f: i for i, f in enumerate(rows)}
    m = np.zeros((len(rows), len(cols)), dtype=object)
    for j, s in enumerate(cols):
        for i in range(len(s)):
            m[index[s[:i] + s[i + 1 :]], j] = -1 if i % 2 else 1
    return m


def smith_normal_form(m) -> list[int]:
    """Nonzero invariant factors ``d1 | d2 | ...`` of an integer matrix.

    Plain elimination, always pivoting on an entry of smallest magnitude in
    the remaining block. The diagonal is then normalized so each factor
    divides the next.
    """
    a = [[int(x) for x in row] for row in np.asarray(m, dtype=object).tolist()]
    n_rows = len(a)
    n_cols = len(a[0]) if n_rows else 0
    diag: list[int] = []
    t = 0
    while t < min(n_rows, n_cols):
        best = None
        for i in range(t, n_rows):
            row = a[i]
            for j in range(t, n_cols):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        if j != t:
            for row in a:
                row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, n_rows):
                x = a[i][t]
                if x:
                    q = x // p
                    if q:
                        ri, rt = a[i], a[t]
                        for j in range(t, n_cols):
                            if rt[j]:
                                ri[j] -= q * rt[j]
                    if a[i][t]:
                        done = False
            rt = a[t]
            for j in range(t + 1, n_cols):
                x = rt[j]
                if x:
                    q = x // p
                    if q:
                        for row in a[t:]:
                            if row[t]:
                                row[j] -= q * row[t]
                    if rt[j]:
                        done = False
            if done:
                break
            # a remainder survived: move the smallest one to the pivot and repeat
            best = (abs(p), t, t)
            for i in range(t + 1, n_rows):
                if a[i][t] and abs(a[i][t]) < best[0]:
                    best = (abs(a[i][t]), i, t)
            for j in range(t + 1, n_cols):
                if a[t][j] and abs(a[t][j]) < best[0]:
                    best = (abs(a[t][j]), t, j)
            _, i, j = best
            if i != t:
                a[t], a[i] = a[i], a[t]
            if j != t:
                for row in a:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    # enforce the divisibility chain
    changed = True
    while changed:
        changed = False
        for i in range(len(diag)):
            for j in range(i + 1, len(diag)):
                x, y = diag[i], diag[j]
                g = gcd(x, y)
                if g != x:
                    diag[i], diag[j] = g, x * y // g
                    changed = True
    return sorted(diag)


@dataclass(frozen=True)
class HomologySummary:
    """Betti numbers and torsion coefficients per dimension."""

    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    def group(self, k: int) -> str:
        parts = []
        b = self.betti[k]
        if b == 1:
            parts.append("Z")
        elif b > 1:
            parts.append(f"Z^{b}")
        parts.extend(f"Z/{t}" for t in self.torsion[k])
        return " + ".join(parts) if parts else "0"

    def __str__(self) -> str:
        return "(" + ", ".join(self.group(k) for k in range(len(self.betti))) + ")"

    @property
    def euler(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti))


def homology_groups(c: SimplicialComplex) -> HomologySummary:
    """Non-reduced integral homology of ``c``."""
    d = c.dim
    n = [len(c.faces_of_dim(k)) for k in range(d + 1)]
    ranks = [0] * (d + 2)
    factors: list[list[int]] = [[] for _ in range(d + 2)]
    for k in range(1, d + 1):
        inv = smith_normal_form(boundary_matrix(c, k))
        ranks[k] = len(inv)
        factors[k] = inv
    betti = tuple(n[k] - ranks[k] - ranks[k + 1] for k in range(d + 1))
    torsion = tuple(tuple(x for x in factors[k + 1] if x > 1) for k in range(d + 1))
    summary = HomologySummary(betti, torsion)
    _, chi = f_vector(c)
    assert summary.euler == chi, "Euler-Poincare violated"
    return summary
