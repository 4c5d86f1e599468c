"""Label permutations, orbits, automorphism groups and fixed sets of involutions."""

from __future__ import annotations

import re
from collections import deque
from typing import Iterable, Mapping

from .complex import SimplicialComplex, closure_from_facets, iter_isomorphisms, relabel
from .errors import PermutationError
from .labels import Label, Simplex, derived, original

__all__ = [
    "Permutation",
    "apply_permutation",
    "automorphism_group",
    "geometric_fixed_set",
    "orbit_closure",
]


class Permutation:
    """A bijection of labels.

    The explicit ``mapping`` is a bijection of its key set (the domain).
    A derived label outside the domain is sent to the derived label of the
    images of its children, so ``S([14]) == [47]`` for ``S = (147)(258)(369)``.
    """

    __slots__ = ("mapping", "_key")

    def __init__(self, mapping: Mapping[Label, Label]):
        mapping = dict(mapping)
        if set(mapping.values()) != set(mapping):
            raise PermutationError("mapping is not a bijection of its domain")
        self.mapping = mapping
        self._key = tuple(sorted((k.key, v.key) for k, v in mapping.items() if k != v))

    @classmethod
    def from_cycles(cls, text: str, n: int = 9) -> Permutation:
        """Parse cycle notation such as ``"(147)(258)(369)"`` on labels 1..n.

        Each cycle is a run of single digits or bracketed labels.
        """
        from .labels import parse_compact

        text = text.strip()
        mapping = {original(i): original(i) for i in range(1, n + 1)}
        if text in ("", "()", "id", "e"):
            return cls(mapping)
        if not re.fullmatch(r"(\([^()]*\))+", text.replace(" ", "")):
            raise PermutationError(f"not cycle notation: {text!r}")
        seen: set[Label] = set()
        for body in re.findall(r"\(([^()]*)\)", text):
            cyc = parse_compact(body)
            if len(set(cyc)) != len(cyc) or seen & set(cyc):
                raise PermutationError(f"repeated label in {text!r}")
            seen |= set(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                mapping[a] = b
        return cls(mapping)

    @property
    def domain(self) -> frozenset[Label]:
        return frozenset(self.mapping)

    def __call__(self, x: Label) -> Label:
        try:
            return self.mapping[x]
        except KeyError:
            pass
        if x.is_original:
            raise PermutationError(f"label {x} outside the permutation's domain")
        return derived(self(c) for c in x.children)

    def simplex(self, s: Iterable[Label]) -> Simplex:
        return tuple(sorted(self(v) for v in s))

    def compose(self, other: Permutation) -> Permutation:
        """``self ∘ other`` (apply ``other`` first)."""
        dom = other.domain | self.domain
        return Permutation({x: self(other(x)) if x in other.domain else self(x) for x in dom})

    def __matmul__(self, other: Permutation) -> Permutation:
        return self.compose(other)

    def inverse(self) -> Permutation:
        return Permutation({v: k for k, v in self.mapping.items()})

    def power(self, k: int) -> Permutation:
        base = self if k >= 0 else self.inverse()
        out = Permutation({x: x for x in self.domain})
        for _ in range(abs(k)):
            out = base.compose(out)
        return out

    def is_identity(self) -> bool:
        return not self._key

    def order(self) -> int:
        k, p = 1, self
        while not p.is_identity():
            p = self.compose(p)
            k += 1
        return k

    def cycles(self) -> list[tuple[Label, ...]]:
        seen: set[Label] = set()
        out = []
        for x in sorted(self.domain):
            if x in seen or self.mapping[x] == x:
                continue
            cyc = [x]
            seen.add(x)
            y = self.mapping[x]
            while y != x:
                cyc.append(y)
                seen.add(y)
                y = self.mapping[y]
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + "".join(str(v) for v in c) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Permutation({self})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def sort_key(self) -> tuple:
        return tuple(sorted((k.key, self.mapping[k].key) for k in self.mapping))


def apply_permutation(c: SimplicialComplex, p: Permutation) -> SimplicialComplex:
    return SimplicialComplex(p.simplex(f) for f in c.faces)


def orbit_closure(seeds: Iterable[Simplex], generators: Iterable[Permutation]) -> set[Simplex]:
    gens = list(generators)
    out = {tuple(sorted(s)) for s in seeds}
    queue = deque(out)
    while queue:
        s = queue.popleft()
        for g in gens:
            t = g.simplex(s)
            if t not in out:
                out.add(t)
                queue.append(t)
    return out


def automorphism_group(c: SimplicialComplex) -> list[Permutation]:
    """All label bijections preserving the face set, sorted canonically."""
    group = []
    for g in iter_isomorphisms(c, c):
        if relabel(c, g) != c:
            continue
        group.append(Permutation(g))
    group.sort(key=lambda p: tuple(p.mapping[v].key for v in c.vertices))
    return group


def geometric_fixed_set(c: SimplicialComplex, t: Permutation) -> SimplicialComplex:
    """Fixed point set of the simplicial involution ``t`` acting linearly on ``|c|``.

    On a ``t``-invariant simplex the fixed set is spanned by its fixed
    vertices and the midpoints ``[a t(a)]`` of its swapped pairs. Midpoints get
    derived labels whether or not they are vertices of ``c``.
    """
    for v in c.vertices:
        if t(t(v)) != v:
            raise PermutationError(f"not an involution on {v}")
    if apply_permutation(c, t) != c:
        raise PermutationError("permutation is not a symmetry of the complex")
    pieces = []
    for s in c.faces:
        if t.simplex(s) != s:
            continue
        verts = set()
        for v in s:
            w = t(v)
            verts.add(v if w == v else derived((v, w)))
        pieces.append(tuple(sorted(verts)))
    return closure_from_facets(pieces)
