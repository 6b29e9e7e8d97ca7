"""JSON (de)serialization of complexes, matchings, decompositions and homology."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .complex import BasedComplex, BasisElement, Chain
from .errors import ValidationError
from .homology import HomologyGroup
from .matching import Matching
from .morse import AtomSummand, Decomposition, MorseComplex
from .ring import RingSpec


def complex_to_json(C: BasedComplex) -> dict[str, Any]:
    boundary = []
    for cell in C.cells:
        terms = C.faces(cell.id)
        if terms:
            boundary.append({"of": cell.id, "coeffs": [[f, str(w)] for f, w in terms.items()]})
    return {
        "ring": str(C.ring),
        "cells": [{"id": c.id, "dim": c.dim} for c in C.cells],
        "boundary": boundary,
    }


def complex_from_json(doc: dict[str, Any]) -> BasedComplex:
    try:
        ring = RingSpec.parse(doc["ring"])
        cells = tuple(BasisElement(str(c["id"]), int(c["dim"])) for c in doc["cells"])
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed complex document: missing {exc}") from None
    dims = {c.id: c.dim for c in cells}
    boundary = {}
    for entry in doc.get("boundary") or []:
        cell = str(entry["of"])
        if cell not in dims:
            raise ValidationError(f"boundary given for unknown cell {cell!r}")
        if cell in boundary:
            raise ValidationError(f"boundary of {cell!r} given twice")
        terms = {}
        for face, coeff in entry.get("coeffs") or []:
            value = ring.parse_element(coeff)
            terms[str(face)] = terms[str(face)] + value if str(face) in terms else value
        boundary[cell] = Chain(ring, dims[cell] - 1, terms)
    return BasedComplex(ring, cells, boundary)


def matching_to_json(M: Matching) -> dict[str, Any]:
    return {"pairs": [{"down": a, "up": b} for a, b in sorted(M.pairs)]}


def matching_from_json(doc: dict[str, Any]) -> Matching:
    try:
        return Matching((p["down"], p["up"]) for p in doc["pairs"])
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed matching document: {exc}") from None


def morse_to_json(morse: MorseComplex) -> dict[str, Any]:
    return complex_to_json(morse.complex)


def decomposition_to_json(D: Decomposition) -> dict[str, Any]:
    doc = {"morse": morse_to_json(D.morse)}
    doc["atoms"] = [{"top": a.generator_top, "bottom": a.generator_bottom, "dim": a.dim} for a in D.atoms]
    doc["change_of_basis"] = [
        {"new": cell, "in_old_basis": [[k, str(v)] for k, v in chain.terms.items()]}
        for cell, chain in D.final_basis.items()
    ]
    return doc


def decomposition_from_json(doc: dict[str, Any], original: BasedComplex) -> Decomposition:
    ring = original.ring
    morse = MorseComplex(complex_from_json(doc["morse"]))
    atoms = [AtomSummand(a["top"], a["bottom"], int(a["dim"])) for a in doc["atoms"]]
    final = {}
    for entry in doc["change_of_basis"]:
        cell = entry["new"]
        terms = {k: ring.parse_element(v) for k, v in entry["in_old_basis"]}
        final[cell] = Chain(ring, original.dim(cell), terms)
    return Decomposition(morse, atoms, final)


def homology_to_json(groups: list[HomologyGroup]) -> list[dict[str, Any]]:
    return [g.to_json() for g in groups]


def homology_from_json(doc: list[dict[str, Any]]) -> list[HomologyGroup]:
    return [HomologyGroup(int(g["dim"]), int(g["betti"]), tuple(g.get("torsion", ()))) for g in doc]


def load_json(path: str | Path) -> Any:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def load_complex(path: str | Path) -> BasedComplex:
    return complex_from_json(load_json(path))


def load_matching(path: str | Path) -> Matching:
    return matching_from_json(load_json(path))


def dump_json(doc: Any, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")
