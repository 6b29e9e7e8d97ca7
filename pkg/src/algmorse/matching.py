"""Partial matchings on the covering graph, acyclicity and linear extensions."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .complex import BasedComplex
from .errors import (
    ElementMatchedTwice,
    NonInvertibleWeight,
    NotACoveringPair,
    NotAcyclic,
    UnknownCell,
)
from .ring import try_invert


class ElementClass(enum.Enum):
    UP = "up"
    DOWN = "down"
    CRITICAL = "critical"


@dataclass(frozen=True)
class Matching:
    """Set of matched pairs ``(down, up)`` with ``dim up == dim down + 1``."""

    pairs: frozenset[tuple[str, str]]

    def __init__(self, pairs: Iterable[tuple[str, str]] = ()):
        object.__setattr__(self, "pairs", frozenset((str(a), str(b)) for a, b in pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(sorted(self.pairs))

    @cached_property
    def up(self) -> dict[str, str]:
        """``u(a)``: maps each matched lower cell to its partner."""
        return {a: b for a, b in self.pairs}

    @cached_property
    def down(self) -> dict[str, str]:
        """``d(b)``: maps each matched upper cell to its partner."""
        return {b: a for a, b in self.pairs}

    def classify(self, cell: str) -> ElementClass:
        if cell in self.down:
            return ElementClass.UP
        if cell in self.up:
            return ElementClass.DOWN
        return ElementClass.CRITICAL

    def is_critical(self, cell: str) -> bool:
        return cell not in self.up and cell not in self.down

    def critical(self, C: BasedComplex) -> list[str]:
        return [c for c in C.ids if self.is_critical(c)]

    def restrict(self, pairs: Iterable[tuple[str, str]]) -> Matching:
        pairs = set(pairs)
        if not pairs <= self.pairs:
            raise ValueError("not a sub-matching")
        return Matching(pairs)


def validate_matching(C: BasedComplex, M: Matching) -> dict[str, ElementClass]:
    """Check ``M`` is a partial matching with invertible weights; return the classification."""
    seen: set[str] = set()
    for a, b in sorted(M.pairs):
        for cell in (a, b):
            if cell not in C:
                raise UnknownCell(cell)
            if cell in seen:
                raise ElementMatchedTwice(cell)
            seen.add(cell)
        if C.dim(b) != C.dim(a) + 1:
            raise NotACoveringPair(a, b, f"dimensions {C.dim(a)} and {C.dim(b)}")
        w = C.faces(b).get(a)
        if w is None:
            raise NotACoveringPair(a, b)
        if try_invert(w) is None:
            raise NonInvertibleWeight(a, b, w)
    return {c: M.classify(c) for c in C.ids}


def up_digraph(C: BasedComplex, M: Matching) -> dict[str, list[str]]:
    """Digraph on matched upper cells: ``b -> b'`` iff ``w(b > d(b')) != 0`` and ``b != b'``."""
    graph: dict[str, list[str]] = {}
    for b in sorted(M.down):
        succ = []
        for face in C.faces(b):
            other = M.up.get(face)
            if other is not None and other != b:
                succ.append(other)
        graph[b] = sorted(succ)
    return graph


def find_cycle(C: BasedComplex, M: Matching) -> list[str] | None:
    """Return a cycle of matched upper cells witnessing non-acyclicity, or None.

    The witness ``[b1, ..., bn]`` reads ``d(b1) < b1 > d(b2) < b2 > ... > d(b1)``
    and is rotated to start at its smallest id.
    """
    graph = up_digraph(C, M)
    WHITE, GREY, BLACK = 0, 1, 2
    color = dict.fromkeys(graph, WHITE)
    for root in graph:
        if color[root] != WHITE:
            continue
        color[root] = GREY
        stack = [(root, iter(graph[root]))]
        path = [root]
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                color[node] = BLACK
                stack.pop()
                path.pop()
                continue
            if color[nxt] == GREY:
                cycle = path[path.index(nxt):]
                i = cycle.index(min(cycle))
                return cycle[i:] + cycle[:i]
            if color[nxt] == WHITE:
                color[nxt] = GREY
                stack.append((nxt, iter(graph[nxt])))
                path.append(nxt)
    return None


def is_acyclic(C: BasedComplex, M: Matching) -> bool:
    return find_cycle(C, M) is None


@dataclass(frozen=True)
class LinearExtension:
    order: tuple[str, ...]

    @cached_property
    def position(self) -> dict[str, int]:
        return {c: i for i, c in enumerate(self.order)}

    def __iter__(self):
        return iter(self.order)

    def __len__(self) -> int:
        return len(self.order)


def linear_extension(C: BasedComplex, M: Matching) -> LinearExtension:
    """Order all cells so the poset order is refined and ``u(a)`` directly follows ``a``.

    Works rank by rank over the unordered cells of lowest dimension,
    appending the smallest id that can go next: either a critical cell, or
    a matched ``a`` whose partner has no unordered face besides ``a`` (then
    ``u(a)`` is appended right after it).  Raises :class:`NotAcyclic` when
    neither exists, which happens exactly when the matching has a cycle.
    """
    order: list[str] = []
    placed: set[str] = set()
    for cells in C.bases:
        waiting = sorted(c for c in cells if c not in placed)
        while waiting:
            chosen = None
            for c in waiting:
                if M.is_critical(c):
                    chosen = c
                    break
                b = M.up.get(c)
                if b is not None and all(f == c or f in placed for f in C.faces(b)):
                    chosen = c
                    break
            if chosen is None:
                raise NotAcyclic(find_cycle(C, M))
            waiting.remove(chosen)
            order.append(chosen)
            placed.add(chosen)
            if chosen in M.up:
                order.append(M.up[chosen])
                placed.add(M.up[chosen])
    return LinearExtension(tuple(order))


def check_linear_extension(C: BasedComplex, M: Matching, L: LinearExtension) -> list[str]:
    """Return a list of violated invariants (empty when ``L`` is valid)."""
    problems = []
    if sorted(L.order) != sorted(C.ids) or len(set(L.order)) != len(L.order):
        problems.append("not a permutation of the basis")
        return problems
    pos = L.position
    for cell in C.ids:
        for face in C.faces(cell):
            if pos[face] > pos[cell]:
                problems.append(f"{face} > {cell} breaks the poset order")
    for a, b in M.pairs:
        if pos[b] != pos[a] + 1:
            problems.append(f"{b} does not directly follow {a}")
    last = -1
    for cell in L.order:
        if cell in M.down:
            continue
        d = C.dim(cell)
        if d < last:
            problems.append(f"rank decreases at {cell}")
        last = max(last, d)
    return problems


def _creates_cycle(C: BasedComplex, up: Mapping[str, str], down: Mapping[str, str], a: str, b: str) -> bool:
    # Adding (a, b): cycle iff some b' with w(b' > a) != 0 is reachable from b.
    targets = {x for x in C.cofaces(a) if x in down and x != b}
    if not targets:
        return False
    seen = {b}
    stack = [b]
    while stack:
        node = stack.pop()
        for face in C.faces(node):
            nxt = up.get(face)
            if nxt is None or nxt == node or nxt in seen:
                continue
            if nxt in targets:
                return True
            seen.add(nxt)
            stack.append(nxt)
    return False


def greedy_matching(C: BasedComplex) -> Matching:
    """Deterministic greedy acyclic matching.

    Cells are visited by (dim, id).  A free cell is matched with its
    smallest free coface whose weight is a unit, provided the matching
    stays acyclic; otherwise the next coface is tried.
    """
    up: dict[str, str] = {}
    down: dict[str, str] = {}
    for cell in sorted(C.cells, key=lambda c: (c.dim, c.id)):
        a = cell.id
        if a in up or a in down:
            continue
        for b in sorted(C.cofaces(a)):
            if b in up or b in down:
                continue
            if try_invert(C.cofaces(a)[b]) is None:
                continue
            if _creates_cycle(C, up, down, a, b):
                continue
            up[a] = b
            down[b] = a
            break
    return Matching(up.items())
