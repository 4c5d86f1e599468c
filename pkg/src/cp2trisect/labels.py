"""Vertex labels: original vertices and barycenters of sets of labels.

An original vertex is a small positive integer. A derived label stands for
the barycenter of its children, so ``[14]`` is the midpoint of the edge
``1 4``, ``[147]`` the center of the triangle ``1 4 7`` and ``[[23][89]]`` the
midpoint of the segment joining ``[23]`` and ``[89]``.
"""

from __future__ import annotations

from typing import Iterable

from .errors import LabelParseError, MalformedSimplexError

__all__ = [
    "Label",
    "Simplex",
    "derived",
    "make_simplex",
    "original",
    "parse_label",
    "parse_compact",
    "simplex_key",
    "format_simplex",
]


class Label:
    """Immutable vertex label with structural equality and a total order.

    Originals sort by integer and come before all derived labels; derived
    labels sort by (arity, children) with children compared recursively.
    """

    __slots__ = ("id", "children", "key", "_hash")

    def __init__(self, id: int | None = None, children: tuple[Label, ...] = ()):
        if (id is None) == (not children):
            raise ValueError("a label is either original or derived")
        if id is not None:
            if not isinstance(id, int) or id < 1:
                raise ValueError(f"original label must be a positive int, got {id!r}")
            key: tuple = (0, id)
        else:
            kids = tuple(sorted(children, key=lambda c: c.key))
            if len(kids) < 2:
                raise ValueError("a derived label needs at least two children")
            if any(a == b for a, b in zip(kids, kids[1:])):
                raise ValueError("children of a derived label must be distinct")
            children = kids
            key = (1, len(kids), tuple(c.key for c in kids))
        object.__setattr__(self, "id", id)
        object.__setattr__(self, "children", tuple(children))
        object.__setattr__(self, "key", key)
        object.__setattr__(self, "_hash", hash(key))

    def __setattr__(self, name, value):
        raise AttributeError("Label is immutable")

    @property
    def is_original(self) -> bool:
        return self.id is not None

    @property
    def arity(self) -> int:
        return 1 if self.id is not None else len(self.children)

    def leaves(self) -> frozenset[Label]:
        """Original labels this label is ultimately built from."""
        if self.id is not None:
            return frozenset((self,))
        out: set[Label] = set()
        for c in self.children:
            out |= c.leaves()
        return frozenset(out)

    def weights(self) -> dict[Label, float]:
        """Barycentric weights of this point over the original labels."""
        if self.id is not None:
            return {self: 1.0}
        out: dict[Label, float] = {}
        share = 1.0 / len(self.children)
        for c in self.children:
            for leaf, w in c.weights().items():
                out[leaf] = out.get(leaf, 0.0) + share * w
        return out

    def __eq__(self, other):
        return isinstance(other, Label) and self.key == other.key

    def __hash__(self):
        return self._hash

    def __lt__(self, other: Label) -> bool:
        return self.key < other.key

    def __le__(self, other: Label) -> bool:
        return self.key <= other.key

    def __gt__(self, other: Label) -> bool:
        return self.key > other.key

    def __ge__(self, other: Label) -> bool:
        return self.key >= other.key

    def _inner(self) -> str:
        if self.id is not None:
            if self.id > 9:
                raise ValueError("only single-digit originals can appear inside brackets")
            return str(self.id)
        return "[" + "".join(c._inner() for c in self.children) + "]"

    def __str__(self) -> str:
        if self.id is not None:
            return str(self.id)
        return self._inner()

    def __repr__(self) -> str:
        return f"Label({self})"

    def __reduce__(self):
        return (parse_label, (str(self),))


def original(i: int) -> Label:
    return Label(id=i)


def derived(children: Iterable[Label | int]) -> Label:
    kids = tuple(c if isinstance(c, Label) else original(c) for c in children)
    return Label(children=kids)


def _parse_bracket(text: str, pos: int) -> tuple[Label, int]:
    # text[pos] == "["
    pos += 1
    kids: list[Label] = []
    while pos < len(text) and text[pos] != "]":
        ch = text[pos]
        if ch == "[":
            lab, pos = _parse_bracket(text, pos)
            kids.append(lab)
        elif ch.isdigit() and ch != "0":
            kids.append(original(int(ch)))
            pos += 1
        else:
            raise LabelParseError(f"unexpected {ch!r} at position {pos} in {text!r}")
    if pos >= len(text):
        raise LabelParseError(f"unclosed bracket in {text!r}")
    try:
        return Label(children=tuple(kids)), pos + 1
    except ValueError as exc:
        raise LabelParseError(f"bad derived label in {text!r}: {exc}") from None


def parse_label(text: str) -> Label:
    """Parse one label token, e.g. ``"7"``, ``"[14]"``, ``"[[23][89]]"``."""
    text = text.strip()
    if not text:
        raise LabelParseError("empty label")
    if text[0] == "[":
        lab, pos = _parse_bracket(text, 0)
        if pos != len(text):
            raise LabelParseError(f"trailing characters in {text!r}")
        return lab
    if not text.isdigit() or int(text) < 1:
        raise LabelParseError(f"not a label: {text!r}")
    return original(int(text))


def parse_compact(text: str) -> list[Label]:
    """Parse run-together notation like ``"14726"`` or ``"[14][147]26"``.

    Every bare digit is its own original label.
    """
    out: list[Label] = []
    pos = 0
    text = text.replace(" ", "")
    while pos < len(text):
        ch = text[pos]
        if ch == "[":
            lab, pos = _parse_bracket(text, pos)
            out.append(lab)
        elif ch.isdigit() and ch != "0":
            out.append(original(int(ch)))
            pos += 1
        else:
            raise LabelParseError(f"unexpected {ch!r} in {text!r}")
    return out


Simplex = tuple  # strictly increasing tuple of Label


def make_simplex(labels: Iterable[Label | int | str]) -> Simplex:
    """Sorted, duplicate-free simplex; raises on repeated vertices."""
    labs = []
    for x in labels:
        if isinstance(x, Label):
            labs.append(x)
        elif isinstance(x, int):
            labs.append(original(x))
        else:
            labs.append(parse_label(x))
    out = tuple(sorted(labs, key=lambda lab: lab.key))
    if not out:
        raise MalformedSimplexError("empty simplex")
    for a, b in zip(out, out[1:]):
        if a == b:
            raise MalformedSimplexError(f"repeated vertex {a} in simplex")
    return out


def simplex_key(s: Simplex) -> tuple:
    return tuple(lab.key for lab in s)


def format_simplex(s: Simplex, sep: str = " ") -> str:
    return sep.join(str(lab) for lab in s)
