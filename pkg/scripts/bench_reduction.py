"""Compare Smith normal form work on a complex and on its Morse reduction.

Sizes are summed over all boundary matrices (rows*cols, and nonzeros).
"""

import argparse
import random
import time
from dataclasses import dataclass

from algmorse.generators import random_facets
from algmorse.homology import boundary_matrix, homology
from algmorse.matching import greedy_matching
from algmorse.morse import reduce_by_elimination
from algmorse.simplicial import simplicial_to_complex


@dataclass
class BenchConfig:
    target_cells: int = 200
    n_vertices: int = 12
    max_dim: int = 3
    seed: int = 7
    repeats: int = 5


def workload(C):
    mats = [boundary_matrix(C, n) for n in range(1, C.top_dim + 1)]
    return sum(m.rows * m.cols for m in mats), sum(len(m.entries) for m in mats)


def timed(f, repeats):
    best = float("inf")
    for _ in range(repeats):
        t = time.perf_counter()
        out = f()
        best = min(best, time.perf_counter() - t)
    return out, best


def run(cfg: BenchConfig):
    rnd = random.Random(cfg.seed)
    facets = []
    C = None
    while C is None or len(C) < cfg.target_cells:
        facets += random_facets(rnd, cfg.n_vertices, cfg.max_dim, 1)
        C = simplicial_to_complex(facets)
    M = greedy_matching(C)
    D, t_reduce = timed(lambda: reduce_by_elimination(C, M), cfg.repeats)
    H, t_direct = timed(lambda: homology(C), cfg.repeats)
    HM, t_morse = timed(lambda: homology(D.morse.complex, C.top_dim), cfg.repeats)
    (size0, nnz0), (size1, nnz1) = workload(C), workload(D.morse.complex)
    print(f"cells {len(C)} -> critical {len(D.morse.cells)} (matching size {len(M)})")
    print(f"matrix entries {size0} -> {size1}; nonzeros {nnz0} -> {nnz1}")
    print(f"direct SNF {t_direct * 1e3:.1f} ms; reduction {t_reduce * 1e3:.1f} ms + SNF {t_morse * 1e3:.1f} ms")
    print("homology:", ", ".join(f"H{g.dim}={g}" for g in H), "| preserved:", H == HM)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(BenchConfig()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=type(default), default=default)
    run(BenchConfig(**vars(ap.parse_args())))


if __name__ == "__main__":
    main()
