"""Reduce a corpus of random simplicial complexes and compare homology before and after.

    python3 scripts/run_corpus.py --n 200 --seed 4242 --ring Z
"""

import argparse
import random
import time
from dataclasses import dataclass

from algmorse.generators import random_facets
from algmorse.homology import homology
from algmorse.matching import greedy_matching
from algmorse.morse import morse_boundary, reduce_by_elimination, verify_decomposition
from algmorse.simplicial import simplicial_to_complex


@dataclass
class CorpusConfig:
    n: int = 200
    seed: int = 4242
    n_vertices: int = 10
    max_dim: int = 3
    max_facets: int = 25
    ring: str = "Z"


def run(cfg: CorpusConfig) -> int:
    rnd = random.Random(cfg.seed)
    mismatches = 0
    cells = critical = 0
    start = time.perf_counter()
    for i in range(cfg.n):
        C = simplicial_to_complex(random_facets(rnd, cfg.n_vertices, cfg.max_dim, rnd.randint(1, cfg.max_facets)), cfg.ring)
        M = greedy_matching(C)
        D = reduce_by_elimination(C, M)
        verify_decomposition(C, D)
        same_boundary = morse_boundary(C, M) == D.morse
        same_homology = homology(C) == homology(D.morse.complex, C.top_dim)
        if not (same_boundary and same_homology):
            mismatches += 1
            print(f"instance {i}: boundary agree={same_boundary} homology agree={same_homology}")
        cells += len(C)
        critical += len(D.morse.cells)
    elapsed = time.perf_counter() - start
    print(f"{cfg.n} complexes over {cfg.ring}: {cells} cells -> {critical} critical, "
          f"{mismatches} mismatches, {elapsed:.2f} s")
    return 1 if mismatches else 0


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(CorpusConfig()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=type(default), default=default)
    raise SystemExit(run(CorpusConfig(**vars(ap.parse_args()))))


if __name__ == "__main__":
    main()
