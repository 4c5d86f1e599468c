"""Facet-list files: one facet per line, labels separated by single spaces."""

from __future__ import annotations

from pathlib import Path

from .complex import SimplicialComplex, closure_from_facets
from .errors import ComplexError, FacetFileError
from .labels import format_simplex, make_simplex, parse_label

__all__ = ["dumps_complex", "loads_complex", "read_complex", "write_complex"]


def loads_complex(text: str) -> SimplicialComplex:
    facets = []
    for n, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            facets.append(make_simplex(parse_label(tok) for tok in line.split()))
        except ComplexError as exc:
            raise FacetFileError(f"line {n}: {exc}", n) from None
    if not facets:
        raise FacetFileError("no facets in file", 0)
    return closure_from_facets(facets)


def dumps_complex(c: SimplicialComplex, header: str | None = None) -> str:
    lines = [f"# {h}" for h in header.splitlines()] if header else []
    lines.extend(format_simplex(f) for f in c.facets)
    return "\n".join(lines) + "\n"


def read_complex(path) -> SimplicialComplex:
    return loads_complex(Path(path).read_text(encoding="utf-8"))


def write_complex(c: SimplicialComplex, path, header: str | None = None) -> None:
    Path(path).write_text(dumps_complex(c, header), encoding="utf-8")
