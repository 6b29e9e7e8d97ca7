"""Random complexes and matchings for tests, property checks and benchmarks."""

from __future__ import annotations

import random
from fractions import Fraction

from .complex import BasedComplex, Chain
from .matching import Matching
from .ring import INTEGERS, INTEGERS_MOD, RingSpec, try_invert
from .simplicial import simplicial_to_complex


def random_facets(rng: random.Random, n_vertices: int = 10, max_dim: int = 3, n_facets: int | None = None):
    verts = [f"v{i}" for i in range(n_vertices)]
    if n_facets is None:
        n_facets = rng.randint(1, 2 * n_vertices)
    return [tuple(rng.sample(verts, rng.randint(1, min(max_dim + 1, n_vertices)))) for _ in range(n_facets)]


def random_simplicial_complex(
    rng: random.Random,
    n_vertices: int = 10,
    max_dim: int = 3,
    ring: RingSpec | str = "Z",
    n_facets: int | None = None,
) -> BasedComplex:
    return simplicial_to_complex(random_facets(rng, n_vertices, max_dim, n_facets), ring)


def _random_unit(rng: random.Random, ring: RingSpec):
    if ring.kind == INTEGERS:
        return ring(rng.choice([1, -1]))
    if ring.kind == INTEGERS_MOD:
        while True:
            x = ring(rng.randrange(1, ring.modulus))
            if try_invert(x) is not None:
                return x
    return ring(Fraction(rng.choice([1, -1]) * rng.randint(1, 5), rng.randint(1, 5)))


def rebase(C: BasedComplex, rng: random.Random, steps: int = 10) -> BasedComplex:
    """Apply random unit rescalings and elementary basis changes ``x <- x + c*y``.

    The result is the same chain complex written in another basis (cell
    ids are kept), so covering weights other than +-1 appear.
    """
    ring = C.ring
    down = {c: dict(C.faces(c)) for c in C.ids}
    up = {c: dict(C.cofaces(c)) for c in C.ids}

    def put(x, y, v):
        if v:
            down[x][y] = v
            up[y][x] = v
        else:
            down[x].pop(y, None)
            up[y].pop(x, None)

    for _ in range(steps):
        n = rng.randrange(C.top_dim + 1) if C.top_dim >= 0 else 0
        cells = C.basis(n)
        if not cells:
            continue
        x = rng.choice(cells)
        if rng.random() < 0.4 or len(cells) < 2:
            u = _random_unit(rng, ring)
            inv = try_invert(u)
            for y, w in list(down[x].items()):
                put(x, y, w * u)
            for z, w in list(up[x].items()):
                put(z, x, w * inv)
            continue
        y = rng.choice([c for c in cells if c != x])
        lam = ring(rng.choice([1, -1, 2, -2, 3]))
        # x' = x + lam*y
        for f, w in list(down[y].items()):
            put(x, f, down[x].get(f, ring.zero) + lam * w)
        for z, cx in list(up[x].items()):
            put(z, y, down[z].get(y, ring.zero) - lam * cx)
    boundary = {c: Chain(ring, C.dim(c) - 1, t) for c, t in down.items() if t}
    return BasedComplex(ring, C.cells, boundary)


def random_matching(C: BasedComplex, rng: random.Random, density: float = 0.7) -> Matching:
    """Random partial matching with unit weights; may well contain cycles."""
    pairs = []
    used: set[str] = set()
    cells = list(C.ids)
    rng.shuffle(cells)
    for b in cells:
        if b in used or rng.random() > density:
            continue
        opts = [a for a, w in C.faces(b).items() if a not in used and try_invert(w) is not None]
        if opts:
            a = rng.choice(sorted(opts))
            pairs.append((a, b))
            used.update((a, b))
    return Matching(pairs)
