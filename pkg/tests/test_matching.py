import random

import pytest

from algmorse.complex import BasedComplex
from algmorse.errors import ElementMatchedTwice, NonInvertibleWeight, NotACoveringPair, NotAcyclic
from algmorse.generators import random_matching, random_simplicial_complex, rebase
from algmorse.matching import (
    ElementClass,
    LinearExtension,
    Matching,
    check_linear_extension,
    find_cycle,
    greedy_matching,
    is_acyclic,
    linear_extension,
    validate_matching,
)
from algmorse.simplicial import simplicial_to_complex

from helpers import load, load_matching, rp2
from oracles import brute_force_cycles


def doubled(ring):
    return BasedComplex.build(ring, {"v0": 0, "v1": 0, "e": 1}, {"e": {"v1": 2, "v0": -2}})


def test_validate_interval():
    classes = validate_matching(load("interval"), Matching([("v0", "e")]))
    assert classes == {"e": ElementClass.UP, "v0": ElementClass.DOWN, "v1": ElementClass.CRITICAL}


def test_non_invertible_weight_depends_on_ring():
    with pytest.raises(NonInvertibleWeight):
        validate_matching(doubled("Z"), Matching([("v0", "e")]))
    validate_matching(doubled("Q"), Matching([("v0", "e")]))
    with pytest.raises(NonInvertibleWeight):
        validate_matching(doubled("Z/6"), Matching([("v0", "e")]))


def test_matching_errors():
    C = load("circle3")
    with pytest.raises(NotACoveringPair):
        validate_matching(C, Matching([("v2", "e01")]))
    with pytest.raises(NotACoveringPair):
        validate_matching(C, Matching([("v0", "v1")]))
    with pytest.raises(ElementMatchedTwice):
        validate_matching(C, Matching([("v0", "e01"), ("v0", "e02")]))


def test_empty_matching_is_acyclic():
    for name in ["point", "interval", "circle3", "triangle", "circle2"]:
        assert is_acyclic(load(name), Matching())


def test_two_edge_circle_cycle():
    C = load("circle2")
    M = load_matching("circle2")
    assert find_cycle(C, M) == ["e1", "e2"]
    assert not is_acyclic(C, M)


def test_circle3_matching_acyclic():
    assert is_acyclic(load("circle3"), load_matching("circle3"))


def test_cyclic_triangle_boundary():
    C = simplicial_to_complex([["a", "b"], ["b", "c"], ["a", "c"]])
    M = Matching([("a", "a|b"), ("b", "b|c"), ("c", "a|c")])
    cycle = find_cycle(C, M)
    assert cycle is not None and sorted(cycle) == ["a|b", "a|c", "b|c"]


def test_linear_extension_point():
    assert linear_extension(load("point"), Matching()).order == ("v",)


def test_linear_extension_interval():
    C = load("interval")
    M = Matching([("v0", "e")])
    L = linear_extension(C, M)
    assert L.order == ("v1", "v0", "e")
    assert check_linear_extension(C, M, L) == []
    # e covers v1, so v1 cannot be placed after e.
    assert check_linear_extension(C, M, LinearExtension(("v0", "e", "v1")))


def test_linear_extension_circle3():
    C = load("circle3")
    M = load_matching("circle3")
    L = linear_extension(C, M)
    assert L.order == ("v0", "v1", "e01", "v2", "e02", "e12")
    assert check_linear_extension(C, M, L) == []


def test_linear_extension_checker_catches_violations():
    C = load("circle3")
    M = load_matching("circle3")
    assert check_linear_extension(C, M, LinearExtension(("v0", "v1", "v2", "e01", "e02", "e12")))
    assert check_linear_extension(C, M, LinearExtension(("v0", "v1", "e01")))


def test_linear_extension_fails_on_cycle():
    with pytest.raises(NotAcyclic):
        linear_extension(load("circle2"), load_matching("circle2"))


def test_greedy_examples():
    assert len(greedy_matching(load("point"))) == 0
    assert greedy_matching(load("interval")).pairs == {("v0", "e")}
    C = load("circle3")
    M = greedy_matching(C)
    assert len(M) == 2
    crit = M.critical(C)
    assert sorted(C.dim(c) for c in crit) == [0, 1]


def test_greedy_on_doubled_edge_over_z_is_empty():
    assert len(greedy_matching(doubled("Z"))) == 0
    assert len(greedy_matching(doubled("Q"))) == 1


def _small_instances(seed, count):
    rnd = random.Random(seed)
    made = 0
    while made < count:
        ring = rnd.choice(["Z", "Q", "Z/6", "Z/2"])
        C = random_simplicial_complex(rnd, rnd.randint(2, 5), rnd.randint(1, 3), ring=ring, n_facets=rnd.randint(1, 4))
        if len(C) > 12:
            continue
        if rnd.random() < 0.5:
            C = rebase(C, rnd, rnd.randint(1, 10))
        yield C, random_matching(C, rnd, density=rnd.choice([0.5, 0.8, 1.0]))
        made += 1


def test_acyclicity_agrees_with_brute_force():
    seen_cyclic = 0
    for C, M in _small_instances(11, 300):
        validate_matching(C, M)
        brute = brute_force_cycles(C, M)
        witness = find_cycle(C, M)
        assert (witness is None) == (not brute)
        if witness is not None:
            seen_cyclic += 1
            assert tuple(witness) in brute
    assert seen_cyclic > 20


def test_linear_extension_iff_acyclic():
    for C, M in _small_instances(12, 200):
        if is_acyclic(C, M):
            L = linear_extension(C, M)
            assert check_linear_extension(C, M, L) == []
        else:
            with pytest.raises(NotAcyclic):
                linear_extension(C, M)


def test_greedy_is_valid_and_acyclic(rng):
    for _ in range(60):
        C = random_simplicial_complex(rng, 8, 3, n_facets=rng.randint(1, 10))
        M = greedy_matching(C)
        classes = validate_matching(C, M)
        assert is_acyclic(C, M)
        ups = sum(1 for k in classes.values() if k is ElementClass.UP)
        downs = sum(1 for k in classes.values() if k is ElementClass.DOWN)
        crit = sum(1 for k in classes.values() if k is ElementClass.CRITICAL)
        assert ups == downs == len(M)
        assert crit == len(C) - 2 * len(M)


def test_greedy_is_deterministic():
    C = rp2()
    assert greedy_matching(C) == greedy_matching(C)
