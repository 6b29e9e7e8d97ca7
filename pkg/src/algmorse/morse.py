"""The Morse complex of an acyclic matching, computed two independent ways.

``morse_boundary`` sums weights of alternating paths between critical
cells.  ``reduce_by_elimination`` instead changes basis one matched pair
at a time (in linear-extension order), splitting off a two-cell atom
complex at every step; the cells left over carry the Morse complex.  The
two must agree exactly, and ``verify_decomposition`` checks the splitting
independently by solving the change of basis over the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, Iterator, Mapping, Sequence

from .complex import BasedComplex, BasisElement, Chain
from .errors import (
    CrossTermsRemain,
    DecompositionError,
    MorseBlockMismatch,
    NotABasis,
    NotAcyclic,
    NotNormalized,
    OrderViolation,
    PathBudgetExceeded,
)
from .matching import (
    LinearExtension,
    Matching,
    check_linear_extension,
    find_cycle,
    linear_extension,
    validate_matching,
)
from .ring import INTEGERS, INTEGERS_MOD, RingElement, invert

DEFAULT_PATH_BUDGET = 10**6


@dataclass(frozen=True)
class AlternatingPath:
    """``source > d(b1) < b1 > d(b2) < ... < bn > target``; ``steps`` lists ``(d(bi), bi)``."""

    source: str
    steps: tuple[tuple[str, str], ...]
    target: str

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        parts = [self.source]
        for a, b in self.steps:
            parts += [">", a, "<", b]
        parts += [">", self.target]
        return " ".join(parts)


@dataclass(frozen=True)
class MorseComplex:
    complex: BasedComplex

    @property
    def cells(self) -> tuple[BasisElement, ...]:
        return self.complex.cells

    def boundary_of(self, cell: str) -> Chain:
        return self.complex.boundary_of(cell)


@dataclass(frozen=True)
class AtomSummand:
    generator_top: str
    generator_bottom: str
    dim: int


@dataclass
class Decomposition:
    morse: MorseComplex
    atoms: list[AtomSummand]
    final_basis: dict[str, Chain] = field(default_factory=dict)


def _require_acyclic(C: BasedComplex, M: Matching) -> None:
    cycle = find_cycle(C, M)
    if cycle is not None:
        raise NotAcyclic(cycle)


def _walk(
    C: BasedComplex, M: Matching, source: str, all_targets: bool
) -> Iterator[tuple[tuple[tuple[str, str], ...], str, RingElement]]:
    """Depth-first walk yielding ``(steps, target, weight)`` for every alternating path."""
    one = C.ring.one

    def extend(top, steps, weight):
        own = M.down.get(top)
        for face, w in sorted(C.faces(top).items()):
            if face == own:
                continue
            nxt = M.up.get(face)
            if nxt is None:
                if all_targets or face not in M.down:
                    yield steps, face, weight * w
                continue
            if all_targets:
                yield steps, face, weight * w
            # Stepping through the pair (face, nxt) contributes -w(top>face)/w(nxt>face).
            factor = -(w * invert(C.faces(nxt)[face]))
            yield from extend(nxt, steps + ((face, nxt),), weight * factor)

    yield from extend(source, (), one)


def enumerate_paths(
    C: BasedComplex,
    M: Matching,
    s: str,
    *,
    all_targets: bool = False,
    budget: int = DEFAULT_PATH_BUDGET,
) -> list[AlternatingPath]:
    """All alternating paths starting at ``s``.

    Targets are critical cells unless ``all_targets`` is set, in which case
    every cell one dimension down is a valid end point.  A path never steps
    into the source's own matched pair.
    """
    _require_acyclic(C, M)
    out = []
    for steps, target, _ in _walk(C, M, s, all_targets):
        out.append(AlternatingPath(s, steps, target))
        if len(out) > budget:
            raise PathBudgetExceeded(budget)
    return out


def path_weight(C: BasedComplex, p: AlternatingPath) -> RingElement:
    num = C.ring.one
    den = C.ring.one
    top = p.source
    for a, b in p.steps:
        num = num * C.faces(top).get(a, C.ring.zero)
        den = den * C.faces(b).get(a, C.ring.zero)
        top = b
    num = num * C.faces(top).get(p.target, C.ring.zero)
    sign = -1 if len(p.steps) % 2 else 1
    return invert(den) * num * sign


def normalize_basis(C: BasedComplex, M: Matching) -> BasedComplex:
    """Rescale every matched lower cell ``a`` to ``w(u(a) > a) * a``.

    Afterwards every matched weight is 1; ids are kept.
    """
    scale = {}
    for a, b in M.pairs:
        w = C.faces(b)[a]
        if not w.is_one():
            scale[a] = w
    if not scale:
        return C
    inv = {a: invert(w) for a, w in scale.items()}
    boundary = {}
    for cell in C.ids:
        terms = dict(C.faces(cell))
        if not terms:
            continue
        factor = scale.get(cell)
        for face in terms:
            if face in inv:
                terms[face] = terms[face] * inv[face]
            if factor is not None:
                terms[face] = terms[face] * factor
        boundary[cell] = Chain(C.ring, C.dim(cell) - 1, terms)
    return BasedComplex(C.ring, C.cells, boundary)


def morse_boundary(C: BasedComplex, M: Matching, *, budget: int = DEFAULT_PATH_BUDGET) -> MorseComplex:
    """Morse complex on the critical cells, with boundary summed over alternating paths."""
    validate_matching(C, M)
    _require_acyclic(C, M)
    critical = [c for c in C.cells if M.is_critical(c.id)]
    count = 0
    boundary = {}
    for cell in critical:
        if cell.dim == 0:
            continue
        terms: dict[str, RingElement] = {}
        for _, target, w in _walk(C, M, cell.id, False):
            count += 1
            if count > budget:
                raise PathBudgetExceeded(budget)
            terms[target] = terms[target] + w if target in terms else w
        boundary[cell.id] = Chain(C.ring, cell.dim - 1, terms)
    return MorseComplex(BasedComplex(C.ring, tuple(critical), boundary))


StepObserver = Callable[[int, tuple[str, str], Mapping[str, Mapping[str, RingElement]]], None]


def reduce_by_elimination(
    C: BasedComplex,
    M: Matching,
    L: LinearExtension | None = None,
    *,
    normalize: bool = True,
    pair_order: Sequence[tuple[str, str]] | None = None,
    debug: bool = False,
    observer: StepObserver | None = None,
) -> Decomposition:
    """Split off one atom per matched pair by successive changes of basis.

    Pairs are processed in increasing position of their upper cell in
    ``L`` (computed if omitted).  With ``normalize`` the matched weights
    are first scaled to 1; otherwise a non-unit matched weight raises
    :class:`NotNormalized`.  ``observer(k, pair, weights)`` is called after
    step ``k`` with the current covering weights.  ``debug`` asserts the
    locality of every weight change (each changed weight ends in a cell at
    or below the current upper cell in ``L``) and the vanishing of the
    weights into the current upper cell.
    """
    ring = C.ring
    validate_matching(C, M)
    _require_acyclic(C, M)
    if L is None:
        L = linear_extension(C, M)
    problems = check_linear_extension(C, M, L)
    if problems:
        raise OrderViolation("invalid linear extension: " + "; ".join(problems[:3]))
    pos = L.position
    order = sorted(M.pairs, key=lambda p: pos[p[1]])
    if pair_order is not None:
        pair_order = [tuple(p) for p in pair_order]
        if sorted(pair_order) != sorted(M.pairs):
            raise OrderViolation("pair_order is not a permutation of the matching")
        for (_, b1), (_, b2) in zip(pair_order, pair_order[1:]):
            if pos[b1] > pos[b2]:
                raise OrderViolation(f"{b1!r} is processed before {b2!r} but follows it in L")
        order = pair_order

    down: dict[str, dict[str, RingElement]] = {c: dict(C.faces(c)) for c in C.ids}
    up: dict[str, dict[str, RingElement]] = {c: dict(C.cofaces(c)) for c in C.ids}
    expr: dict[str, dict[str, RingElement]] = {c: {c: ring.one} for c in C.ids}

    def set_weight(x, y, value):
        if value:
            down[x][y] = value
            up[y][x] = value
        else:
            down[x].pop(y, None)
            up[y].pop(x, None)

    for a, b in order:
        w = down[b][a]
        if w.is_one():
            continue
        if not normalize:
            raise NotNormalized(a, b, w)
        inv = invert(w)
        for x in list(up[a]):
            set_weight(x, a, up[a][x] * inv)
        for y in list(down[a]):
            set_weight(a, y, down[a][y] * w)
        expr[a] = {a: w}

    def lin(target, coeff, source):
        for k, v in source.items():
            nv = target[k] + coeff * v if k in target else coeff * v
            if nv:
                target[k] = nv
            else:
                target.pop(k, None)

    for k, (a, b) in enumerate(order, 1):
        wb = down[b].get(a)
        if wb is None or not wb.is_one():
            raise NotNormalized(a, b, wb if wb is not None else ring.zero)
        limit = pos[b]

        def changed(y):
            if debug and pos[y] > limit:
                raise AssertionError(f"step {k}: weight into {y!r} changed beyond {b!r} in L")

        if debug:
            for x in up[b]:
                residue = sum((wz * down[z].get(a, ring.zero) for z, wz in down[x].items()), ring.zero)
                if residue:
                    raise AssertionError(f"step {k}: weight {x!r} > {b!r} does not vanish")

        new_a = {}
        for y, wy in down[b].items():
            lin(new_a, wy, expr[y])

        tail = [(y, wy) for y, wy in down[b].items() if y != a]
        for x in list(up[a]):
            if x == b:
                continue
            c = up[a][x]
            lin(expr[x], -c, expr[b])
            for y, wy in tail:
                delta = c * wy
                if delta:
                    set_weight(x, y, down[x].get(y, ring.zero) - delta)
                    changed(y)
            set_weight(x, a, ring.zero)
            changed(a)
        for x in list(up[b]):
            set_weight(x, b, ring.zero)
        for y, _ in tail:
            set_weight(b, y, ring.zero)
            changed(y)
        for y in list(down[a]):
            set_weight(a, y, ring.zero)
            changed(y)
        expr[a] = new_a
        if observer is not None:
            observer(k, (a, b), down)

    critical = [c for c in C.cells if M.is_critical(c.id)]
    crit_ids = {c.id for c in critical}
    boundary = {}
    for cell in critical:
        terms = down[cell.id]
        if debug and any(t not in crit_ids for t in terms):
            raise AssertionError(f"critical {cell.id!r} still hits a matched cell")
        boundary[cell.id] = Chain(ring, cell.dim - 1, terms)
    morse = MorseComplex(BasedComplex(ring, tuple(critical), boundary))
    atoms = [AtomSummand(b, a, C.dim(b)) for a, b in order]
    final_basis = {c.id: Chain(ring, c.dim, expr[c.id]) for c in C.cells}
    return Decomposition(morse, atoms, final_basis)


# Independent verification of a decomposition.


def _lift(x: RingElement):
    return x.value


def _solve(columns: dict[str, dict[str, object]], rows: list[str], rhs: dict[str, dict[str, object]]):
    """Solve ``B X = V`` over the rationals by sparse Gauss-Jordan elimination.

    ``columns[j]`` is column ``j`` of the square matrix ``B`` (row id ->
    value), ``rhs[k]`` a right-hand side.  Returns ``(det_abs, X)`` with
    ``X[k][j]`` the coordinates of ``rhs[k]``, or ``(0, None)`` if ``B`` is
    singular.
    """
    if len(columns) != len(rows):
        return Fraction(0), None
    # row id -> {("c", j) or ("r", k): value}
    mat: dict[str, dict[tuple[str, str], Fraction]] = {r: {} for r in rows}
    for j, col in columns.items():
        for r, v in col.items():
            if r not in mat:
                return Fraction(0), None
            mat[r][("c", j)] = Fraction(v)
    for k, vec in rhs.items():
        for r, v in vec.items():
            if r not in mat:
                raise NotABasis(f"vector component {r!r} outside the old basis")
            mat[r][("r", k)] = Fraction(v)
    where: dict[tuple[str, str], set[str]] = {}
    for r, entries in mat.items():
        for key in entries:
            where.setdefault(key, set()).add(r)
    det = Fraction(1)
    pivot_row: dict[str, str] = {}
    free = set(rows)
    for j in sorted(columns, key=lambda j: len(where.get(("c", j), ()))):
        key = ("c", j)
        cands = [r for r in where.get(key, ()) if r in free]
        if not cands:
            return Fraction(0), None
        r = min(cands, key=lambda r: (len(mat[r]), r))
        free.discard(r)
        pv = mat[r][key]
        det *= abs(pv)
        prow = {kk: v / pv for kk, v in mat[r].items()}
        mat[r] = prow
        for other in list(where[key]):
            if other == r:
                continue
            f = mat[other][key]
            orow = mat[other]
            for kk, v in prow.items():
                nv = orow.get(kk, 0) - f * v
                if nv:
                    if kk not in orow:
                        where.setdefault(kk, set()).add(other)
                    orow[kk] = nv
                else:
                    orow.pop(kk, None)
                    where[kk].discard(other)
        pivot_row[j] = r
    X = {k: {} for k in rhs}
    for j, r in pivot_row.items():
        for (kind, k), v in mat[r].items():
            if kind == "r":
                X[k][j] = v
    return det, X


def _is_unit_det(ring, det: Fraction) -> bool:
    if det == 0:
        return False
    if ring.kind == INTEGERS:
        return det == 1
    if ring.kind == INTEGERS_MOD:
        return det.denominator == 1 and gcd(det.numerator, ring.modulus) == 1
    return True


def verify_decomposition(C: BasedComplex, D: Decomposition) -> None:
    """Raise a :class:`DecompositionError` unless ``D`` splits ``C`` as claimed.

    Checks that the final basis is an invertible change of basis over the
    ring, that the boundary rewritten in it has one unit block per atom
    and no other entries outside the Morse block, and that the Morse block
    equals ``D.morse``.
    """
    ring = C.ring
    fb = D.final_basis
    if set(fb) != set(C.ids):
        raise NotABasis("final basis ids differ from the original cell ids")
    for cell in C.cells:
        if fb[cell.id].dim != cell.dim:
            raise NotABasis(f"{cell.id!r} changed dimension")

    top = {}
    bottom = {}
    for atom in D.atoms:
        t, s = atom.generator_top, atom.generator_bottom
        if t in top or t in bottom or s in top or s in bottom or t == s:
            raise DecompositionError(f"atom ({t!r}, {s!r}) overlaps another atom")
        if C.dim(t) != atom.dim or C.dim(s) != atom.dim - 1:
            raise DecompositionError(f"atom ({t!r}, {s!r}) has wrong dimensions")
        top[t] = s
        bottom[s] = t
    morse_cells = {c.id: c.dim for c in D.morse.cells}
    rest = {c.id: c.dim for c in C.cells if c.id not in top and c.id not in bottom}
    if morse_cells != rest:
        raise MorseBlockMismatch("Morse cells are not the cells outside the atoms")

    coords: dict[str, dict[str, RingElement]] = {}
    for n, cells in enumerate(C.bases):
        columns = {x: {r: _lift(v) for r, v in fb[x].terms.items()} for x in cells}
        rhs = {}
        for x in C.basis(n + 1):
            d = C.boundary_of_chain(fb[x])
            rhs[x] = {r: _lift(v) for r, v in d.terms.items()}
        det, X = _solve(columns, cells, rhs)
        if X is None or not _is_unit_det(ring, det):
            raise NotABasis(f"final basis in dimension {n} is not invertible over {ring} (|det| = {det})")
        for x, sol in X.items():
            coords[x] = {y: ring(v) for y, v in sol.items() if ring(v)}
    for x in C.basis(0):
        coords[x] = {}

    for x, row in coords.items():
        if x in top:
            s = top[x]
            for y, w in row.items():
                if y != s:
                    raise CrossTermsRemain(x, y, w)
            w = row.get(s, ring.zero)
            if not w.is_unit():
                raise DecompositionError(f"atom block {x!r} > {s!r} has weight {w}, not a unit")
        elif x in bottom:
            for y, w in row.items():
                raise CrossTermsRemain(x, y, w)
        else:
            for y, w in row.items():
                if y not in morse_cells:
                    raise CrossTermsRemain(x, y, w)
            expected = D.morse.boundary_of(x).terms
            if dict(row) != dict(expected):
                raise MorseBlockMismatch(f"Morse boundary of {x!r} differs from the rewritten boundary")
