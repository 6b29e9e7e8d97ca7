"""Free chain complexes with a chosen basis.

A :class:`BasedComplex` stores the basis (cells with a dimension) and the
boundary of every cell as a sparse :class:`Chain`.  The coefficient of a
in the boundary of b is the weight of the covering relation b > a; the
nonzero weights form the weighted ranked poset that all Morse-theoretic
constructions in this package walk over.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping, NamedTuple

from .errors import DimensionMismatch, DuplicateId, NotSquareZero, UnknownCell, ValidationError
from .ring import RingElement, RingSpec


class BasisElement(NamedTuple):
    id: str
    dim: int


class CoveringRelation(NamedTuple):
    upper: str
    lower: str
    weight: RingElement


@dataclass(frozen=True)
class Chain:
    """Finite linear combination of basis cells of a single dimension.

    Zero coefficients are dropped on construction, so two chains are equal
    exactly when they have the same nonzero terms.
    """

    ring: RingSpec
    dim: int
    terms: Mapping[str, RingElement] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for cell, coeff in self.terms.items():
            if not isinstance(coeff, RingElement):
                coeff = self.ring(coeff)
            elif coeff.ring != self.ring:
                coeff = self.ring(coeff)
            if coeff:
                clean[cell] = coeff
        object.__setattr__(self, "terms", clean)

    @classmethod
    def zero(cls, ring: RingSpec, dim: int) -> Chain:
        return cls(ring, dim, {})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[tuple[str, RingElement]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, cell: str) -> RingElement:
        return self.terms.get(cell, self.ring.zero)

    def _check(self, other: Chain):
        if other.ring != self.ring:
            from .errors import MixedRings

            raise MixedRings(self.ring, other.ring)
        if other.dim != self.dim:
            raise DimensionMismatch(f"cannot add chains of dimension {self.dim} and {other.dim}")

    def __add__(self, other: Chain) -> Chain:
        self._check(other)
        terms = dict(self.terms)
        for cell, coeff in other.terms.items():
            terms[cell] = terms[cell] + coeff if cell in terms else coeff
        return Chain(self.ring, self.dim, terms)

    def __sub__(self, other: Chain) -> Chain:
        return self + (-other)

    def __neg__(self) -> Chain:
        return Chain(self.ring, self.dim, {c: -v for c, v in self.terms.items()})

    def scale(self, factor) -> Chain:
        factor = self.ring(factor)
        return Chain(self.ring, self.dim, {c: factor * v for c, v in self.terms.items()})

    __rmul__ = scale


def coefficient(c: Chain, b: BasisElement) -> RingElement:
    """Coefficient of ``b`` in ``c``; zero when the dimensions differ."""
    if c.dim != b.dim:
        return c.ring.zero
    return c[b.id]


@dataclass(frozen=True)
class BasedComplex:
    ring: RingSpec
    cells: tuple[BasisElement, ...]
    boundary: Mapping[str, Chain]

    def __post_init__(self):
        cells = tuple(c if isinstance(c, BasisElement) else BasisElement(*c) for c in self.cells)
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "boundary", {k: v for k, v in self.boundary.items() if v})

    @classmethod
    def build(cls, ring: RingSpec | str, cells, boundary=None) -> BasedComplex:
        """Convenience constructor.

        ``cells`` is a mapping id -> dim or an iterable of (id, dim);
        ``boundary`` maps a cell id to a mapping face id -> coefficient.
        """
        if isinstance(ring, str):
            ring = RingSpec.parse(ring)
        if isinstance(cells, Mapping):
            cells = list(cells.items())
        cells = [BasisElement(*c) for c in cells]
        dims = {c.id: c.dim for c in cells}
        chains = {}
        for cell, terms in (boundary or {}).items():
            if isinstance(terms, Chain):
                chains[cell] = terms
                continue
            if cell not in dims:
                raise UnknownCell(cell)
            chains[cell] = Chain(ring, dims[cell] - 1, dict(terms))
        return cls(ring, tuple(cells), chains)

    @cached_property
    def _dims(self) -> dict[str, int]:
        return {c.id: c.dim for c in self.cells}

    def __contains__(self, cell: str) -> bool:
        return cell in self._dims

    def __len__(self) -> int:
        return len(self.cells)

    @property
    def ids(self) -> list[str]:
        return [c.id for c in self.cells]

    def dim(self, cell: str) -> int:
        try:
            return self._dims[cell]
        except KeyError:
            raise UnknownCell(cell) from None

    def element(self, cell: str) -> BasisElement:
        return BasisElement(cell, self.dim(cell))

    @property
    def top_dim(self) -> int:
        """Largest cell dimension, or -1 for the empty complex."""
        return max((c.dim for c in self.cells), default=-1)

    @cached_property
    def bases(self) -> list[list[str]]:
        out: list[list[str]] = [[] for _ in range(self.top_dim + 1)]
        for c in self.cells:
            out[c.dim].append(c.id)
        return out

    def basis(self, n: int) -> list[str]:
        return self.bases[n] if 0 <= n < len(self.bases) else []

    def boundary_of(self, cell: str) -> Chain:
        chain = self.boundary.get(cell)
        if chain is None:
            return Chain.zero(self.ring, self.dim(cell) - 1)
        return chain

    def faces(self, cell: str) -> Mapping[str, RingElement]:
        """Nonzero covering weights ``w(cell > a)`` keyed by ``a``."""
        chain = self.boundary.get(cell)
        return chain.terms if chain is not None else {}

    @cached_property
    def _cofaces(self) -> dict[str, dict[str, RingElement]]:
        up: dict[str, dict[str, RingElement]] = {c.id: {} for c in self.cells}
        for cell, chain in self.boundary.items():
            for face, w in chain.terms.items():
                up.setdefault(face, {})[cell] = w
        return up

    def cofaces(self, cell: str) -> Mapping[str, RingElement]:
        """Nonzero covering weights ``w(b > cell)`` keyed by ``b``."""
        return self._cofaces.get(cell, {})

    def boundary_of_chain(self, chain: Chain) -> Chain:
        out: dict[str, RingElement] = {}
        for cell, coeff in chain.terms.items():
            for face, w in self.faces(cell).items():
                v = coeff * w
                out[face] = out[face] + v if face in out else v
        return Chain(self.ring, chain.dim - 1, out)


def validate_complex(C: BasedComplex) -> None:
    """Raise a :class:`ValidationError` unless ``C`` is a well-formed chain complex."""
    seen: set[str] = set()
    for cell in C.cells:
        if cell.id in seen:
            raise DuplicateId(cell.id)
        seen.add(cell.id)
        if not isinstance(cell.dim, int) or cell.dim < 0:
            raise DimensionMismatch(f"cell {cell.id!r} has invalid dimension {cell.dim!r}")
    for cell, chain in C.boundary.items():
        if cell not in seen:
            raise UnknownCell(cell)
        if chain.ring != C.ring:
            raise ValidationError(f"boundary of {cell!r} is over {chain.ring}, complex is over {C.ring}")
        n = C.dim(cell)
        if chain.dim != n - 1:
            raise DimensionMismatch(f"boundary of {cell!r} (dim {n}) has dimension {chain.dim}")
        for face in chain.terms:
            if face not in seen:
                raise UnknownCell(face)
            if C.dim(face) != n - 1:
                raise DimensionMismatch(
                    f"{face!r} (dim {C.dim(face)}) appears in the boundary of {cell!r} (dim {n})"
                )
    for cell in C.boundary:
        residue = C.boundary_of_chain(C.boundary[cell])
        if residue:
            raise NotSquareZero(cell, {k: str(v) for k, v in residue.terms.items()})


def covering_weight(C: BasedComplex, b: str, a: str) -> RingElement:
    """Weight of the covering relation ``b > a``, i.e. the coefficient of a in the boundary of b."""
    if C.dim(b) != C.dim(a) + 1:
        raise DimensionMismatch(f"dim {b!r} = {C.dim(b)} is not dim {a!r} + 1 = {C.dim(a) + 1}")
    return C.faces(b).get(a, C.ring.zero)


def poset_view(C: BasedComplex) -> list[CoveringRelation]:
    rels = []
    for cell in C.cells:
        for face, w in C.faces(cell.id).items():
            rels.append(CoveringRelation(cell.id, face, w))
    return rels


def from_relations(ring: RingSpec, cells: Iterable[BasisElement], relations: Iterable[CoveringRelation]) -> BasedComplex:
    """Rebuild a complex from its cells and covering relations (inverse of :func:`poset_view`)."""
    cells = tuple(cells)
    dims = {c.id: c.dim for c in cells}
    terms: dict[str, dict[str, RingElement]] = {}
    for rel in relations:
        terms.setdefault(rel.upper, {})[rel.lower] = rel.weight
    return BasedComplex(ring, cells, {k: Chain(ring, dims[k] - 1, v) for k, v in terms.items()})
