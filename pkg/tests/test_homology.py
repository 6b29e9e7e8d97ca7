import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algmorse.errors import UnsupportedRing
from algmorse.generators import random_simplicial_complex
from algmorse.homology import HomologyGroup, IntegerMatrix, euler_characteristic, homology, smith_normal_form
from algmorse.simplicial import simplicial_to_complex

from helpers import load, rp2
from oracles import minors_invariant_factors


def snf(dense):
    return smith_normal_form(IntegerMatrix.from_dense(dense))


def test_snf_examples():
    assert snf([[1, 0], [0, 2]]) == [1, 2]
    assert snf([[0, 0], [0, 0]]) == []
    assert snf([[2, 4], [0, 2]]) == [2, 2]
    assert smith_normal_form(IntegerMatrix(0, 3)) == []


def test_snf_textbook_matrix():
    assert snf([[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28], [20, 10, 10, 20]]) == [1, 10, 30]


def test_snf_divisibility_fixup():
    assert snf([[2, 0], [0, 3]]) == [1, 6]
    assert snf([[4, 0, 0], [0, 6, 0], [0, 0, 10]]) == [2, 2, 60]


small = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@settings(max_examples=150, deadline=None)
@given(small)
def test_snf_matches_minor_gcds(dense):
    assert snf(dense) == minors_invariant_factors(dense)


def _random_unimodular(rnd, n, steps=12):
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        if n < 2:
            break
        i, j = rnd.sample(range(n), 2)
        f = rnd.randint(-3, 3)
        m[i] = [a + f * b for a, b in zip(m[i], m[j])]
        if rnd.random() < 0.3:
            m[i], m[j] = m[j], m[i]
    return m


def _matmul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


@settings(max_examples=80, deadline=None)
@given(small, st.integers(0, 10**6))
def test_snf_unimodular_invariance(dense, seed):
    rnd = random.Random(seed)
    P = _random_unimodular(rnd, len(dense))
    Q = _random_unimodular(rnd, len(dense[0]))
    assert snf(_matmul(_matmul(P, dense), Q)) == snf(dense)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_snf_agrees_with_sympy(seed):
    from sympy import Matrix
    from sympy.matrices.normalforms import invariant_factors

    rnd = random.Random(seed)
    r, c = rnd.randint(1, 7), rnd.randint(1, 7)
    dense = [[rnd.choice([0, 0, 0, 1, -1, 2, -3, 6]) for _ in range(c)] for _ in range(r)]
    ref = [abs(int(x)) for x in invariant_factors(Matrix(dense)) if x != 0]
    assert snf(dense) == ref


def test_homology_examples():
    assert homology(load("point")) == [HomologyGroup(0, 1)]
    assert homology(load("circle3")) == [HomologyGroup(0, 1), HomologyGroup(1, 1)]
    assert homology(load("triangle")) == [HomologyGroup(0, 1), HomologyGroup(1, 0), HomologyGroup(2, 0)]
    assert homology(rp2()) == [HomologyGroup(0, 1), HomologyGroup(1, 0, (2,)), HomologyGroup(2, 0)]


def test_homology_over_fields():
    assert [g.betti for g in homology(rp2("Q"))] == [1, 0, 0]
    assert [g.betti for g in homology(rp2("Z/2"))] == [1, 1, 1]
    assert [g.betti for g in homology(rp2("Z/3"))] == [1, 0, 0]


def test_composite_modulus_unsupported():
    with pytest.raises(UnsupportedRing):
        homology(rp2("Z/6"))


def test_euler_characteristic():
    assert euler_characteristic(load("interval")) == 1
    assert euler_characteristic(load("circle3")) == 0
    assert euler_characteristic(rp2()) == 1
    assert [len(b) for b in rp2().bases] == [6, 15, 10]


def test_seven_vertex_torus():
    facets = [(i, (i + 1) % 7, (i + 3) % 7) for i in range(7)] + [(i, (i + 2) % 7, (i + 3) % 7) for i in range(7)]
    C = simplicial_to_complex([[str(v) for v in f] for f in facets])
    assert [len(b) for b in C.bases] == [7, 21, 14]
    assert homology(C) == [HomologyGroup(0, 1), HomologyGroup(1, 2), HomologyGroup(2, 1)]


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_euler_equals_alternating_betti_sum(seed):
    rnd = random.Random(seed)
    C = random_simplicial_complex(rnd, 8, 3, n_facets=rnd.randint(1, 10))
    assert euler_characteristic(C) == sum((-1) ** g.dim * g.betti for g in homology(C))
