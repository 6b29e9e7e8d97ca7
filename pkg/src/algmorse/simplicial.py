"""Simplicial complexes as based chain complexes, plus a few standard examples."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .complex import BasedComplex, BasisElement, Chain
from .errors import EmptyInput
from .ring import RingSpec

SEP = "|"


def face_id(vertices: Sequence[str]) -> str:
    return SEP.join(vertices)


def simplicial_to_complex(facets: Iterable[Iterable[str]], ring: RingSpec | str = "Z") -> BasedComplex:
    """Chain complex of the simplicial complex generated by ``facets``.

    Every nonempty face becomes a cell whose id is its sorted vertices
    joined by ``|``; the boundary is the alternating sum of codimension-one
    faces in lexicographic vertex order.
    """
    if isinstance(ring, str):
        ring = RingSpec.parse(ring)
    facets = [tuple(sorted({str(v) for v in f})) for f in facets]
    facets = [f for f in facets if f]
    if not facets:
        raise EmptyInput("no nonempty facets given")
    faces: set[tuple[str, ...]] = set()
    for f in facets:
        for k in range(1, len(f) + 1):
            faces.update(combinations(f, k))
    ordered = sorted(faces, key=lambda s: (len(s), s))
    cells = tuple(BasisElement(face_id(s), len(s) - 1) for s in ordered)
    boundary = {}
    for s in ordered:
        if len(s) < 2:
            continue
        terms = {face_id(s[:i] + s[i + 1:]): (-1) ** i for i in range(len(s))}
        boundary[face_id(s)] = Chain(ring, len(s) - 2, terms)
    return BasedComplex(ring, cells, boundary)


def parse_facets(text: str) -> list[list[str]]:
    """One facet per line, whitespace-separated vertex ids; ``#`` starts a comment line."""
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        out.append(line.split())
    return out


# Six-vertex triangulation of the real projective plane.
RP2_FACETS = [
    ("1", "2", "3"),
    ("1", "3", "4"),
    ("1", "4", "5"),
    ("1", "5", "6"),
    ("1", "2", "6"),
    ("2", "3", "5"),
    ("3", "4", "6"),
    ("2", "4", "5"),
    ("3", "5", "6"),
    ("2", "4", "6"),
]

