"""Homology via Smith normal form (over Z) or rank computations (over fields).

This is the independent oracle used to check that a Morse reduction
preserves homology, torsion included.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .complex import BasedComplex
from .errors import UnsupportedRing
from .ring import INTEGERS, invert


@dataclass
class IntegerMatrix:
    rows: int
    cols: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        self.entries = {k: int(v) for k, v in self.entries.items() if v}

    @classmethod
    def from_dense(cls, data: list[list[int]]) -> IntegerMatrix:
        rows = len(data)
        cols = len(data[0]) if data else 0
        return cls(rows, cols, {(i, j): v for i, r in enumerate(data) for j, v in enumerate(r) if v})

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    @property
    def size(self) -> int:
        return self.rows * self.cols


class _Sparse:
    """Integer matrix with row and column adjacency for unimodular reductions."""

    def __init__(self, entries):
        self.rows: dict[int, dict[int, int]] = {}
        self.cols: dict[int, dict[int, int]] = {}
        for (i, j), v in entries.items():
            self.rows.setdefault(i, {})[j] = v
            self.cols.setdefault(j, {})[i] = v

    def _set(self, i, j, v):
        if v:
            self.rows.setdefault(i, {})[j] = v
            self.cols.setdefault(j, {})[i] = v
        else:
            if i in self.rows:
                self.rows[i].pop(j, None)
                if not self.rows[i]:
                    del self.rows[i]
            if j in self.cols:
                self.cols[j].pop(i, None)
                if not self.cols[j]:
                    del self.cols[j]

    def add_row(self, dst, src, f):
        for j, v in list(self.rows.get(src, {}).items()):
            self._set(dst, j, self.rows.get(dst, {}).get(j, 0) + f * v)

    def add_col(self, dst, src, f):
        for i, v in list(self.cols.get(src, {}).items()):
            self._set(i, dst, self.cols.get(dst, {}).get(i, 0) + f * v)

    def drop(self, i, j):
        for jj in list(self.rows.get(i, {})):
            self._set(i, jj, 0)
        for ii in list(self.cols.get(j, {})):
            self._set(ii, j, 0)

    def pick_pivot(self):
        best = None
        for i, row in self.rows.items():
            for j, v in row.items():
                key = (abs(v), (len(row) - 1) * (len(self.cols[j]) - 1), i, j)
                if best is None or key < best:
                    best = key
            if best is not None and best[0] == 1 and best[1] == 0:
                break
        return best[2], best[3]


def smith_normal_form(A: IntegerMatrix) -> list[int]:
    """Invariant factors ``d1 | d2 | ... | dr`` of ``A`` (``r`` = rank)."""
    m = _Sparse(A.entries)
    diag = []
    while m.rows:
        i, j = m.pick_pivot()
        while True:
            p = m.rows[i][j]
            clean = True
            for ii in [x for x in m.cols[j] if x != i]:
                m.add_row(ii, i, -(m.rows[ii][j] // p))
                if j in m.rows.get(ii, {}):
                    clean = False
            for jj in [x for x in m.rows[i] if x != j]:
                m.add_col(jj, j, -(m.rows[i][jj] // p))
                if jj in m.rows.get(i, {}):
                    clean = False
            if clean:
                break
            # A nonzero remainder is smaller than |p|: pivot on it.
            cands = [(abs(v), i, jj) for jj, v in m.rows[i].items()]
            cands += [(abs(v), ii, j) for ii, v in m.cols[j].items()]
            _, i, j = min(cands)
        diag.append(abs(p))
        m.drop(i, j)
    for a in range(len(diag)):
        for b in range(a + 1, len(diag)):
            g = gcd(diag[a], diag[b])
            diag[a], diag[b] = g, diag[a] * diag[b] // g
    return diag


@dataclass(frozen=True)
class HomologyGroup:
    dim: int
    betti: int
    torsion: tuple[int, ...] = ()

    def __str__(self) -> str:
        parts = []
        if self.betti:
            parts.append("Z" if self.betti == 1 else f"Z^{self.betti}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"

    def to_json(self) -> dict:
        return {"dim": self.dim, "betti": self.betti, "torsion": list(self.torsion)}


def boundary_matrix(C: BasedComplex, n: int) -> IntegerMatrix:
    """Matrix of the boundary from dimension ``n`` to ``n - 1`` over Z (lifted values)."""
    lower = {c: i for i, c in enumerate(C.basis(n - 1))}
    upper = C.basis(n)
    entries = {}
    for j, cell in enumerate(upper):
        for face, w in C.faces(cell).items():
            entries[(lower[face], j)] = w.value
    return IntegerMatrix(len(lower), len(upper), entries)


def _field_rank(C: BasedComplex, n: int) -> int:
    rows = [dict(C.faces(c)) for c in C.basis(n)]
    rows = [r for r in rows if r]
    rank = 0
    while rows:
        pivot_row = min(rows, key=len)
        rows.remove(pivot_row)
        col = min(pivot_row)
        inv = invert(pivot_row[col])
        rank += 1
        nxt = []
        for r in rows:
            if col in r:
                f = r[col] * inv
                for k, v in pivot_row.items():
                    nv = r[k] - f * v if k in r else -(f * v)
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
            if r:
                nxt.append(r)
        rows = nxt
    return rank


def homology(C: BasedComplex, max_dim: int | None = None) -> list[HomologyGroup]:
    """Homology groups in dimensions ``0 .. max_dim`` (default: top cell dimension).

    Over Z the torsion comes from the invariant factors of the boundary
    maps; over a field only Betti numbers are reported.
    """
    top = C.top_dim if max_dim is None else max_dim
    ring = C.ring
    if ring.kind == INTEGERS:
        factors = [smith_normal_form(boundary_matrix(C, n)) for n in range(top + 2)]
        ranks = [len(f) for f in factors]
    elif ring.is_field:
        factors = None
        ranks = [_field_rank(C, n) for n in range(top + 2)]
    else:
        raise UnsupportedRing(f"homology over {ring} is not supported: neither Z nor a field")
    out = []
    for n in range(top + 1):
        betti = len(C.basis(n)) - ranks[n] - ranks[n + 1]
        torsion = tuple(d for d in factors[n + 1] if d > 1) if factors is not None else ()
        out.append(HomologyGroup(n, betti, torsion))
    return out


def euler_characteristic(C: BasedComplex) -> int:
    return sum((-1) ** c.dim for c in C.cells)

