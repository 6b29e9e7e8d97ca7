import random

import pytest

from algmorse import io
from algmorse.complex import validate_complex
from algmorse.errors import EmptyInput, ValidationError
from algmorse.generators import random_simplicial_complex
from algmorse.homology import homology
from algmorse.matching import Matching, greedy_matching
from algmorse.morse import reduce_by_elimination, verify_decomposition
from algmorse.simplicial import parse_facets, simplicial_to_complex

from helpers import load, rp2


def test_single_edge():
    C = simplicial_to_complex([["a", "b"]])
    assert C.ids == ["a", "b", "a|b"]
    assert {k: v.value for k, v in C.faces("a|b").items()} == {"b": 1, "a": -1}


def test_circle_from_facets():
    C = simplicial_to_complex([["a", "b"], ["b", "c"], ["a", "c"]])
    assert [len(b) for b in C.bases] == [3, 3]


def test_rp2_cell_count():
    assert len(rp2()) == 31


def test_vertex_order_is_irrelevant():
    assert simplicial_to_complex([["c", "a", "b"]]) == simplicial_to_complex([["a", "b", "c"]])


def test_empty_input():
    with pytest.raises(EmptyInput):
        simplicial_to_complex([])


def test_parse_facets_skips_comments():
    assert parse_facets("# hi\n a b c\n\n b d\n") == [["a", "b", "c"], ["b", "d"]]


def test_matching_roundtrip():
    M = Matching([("v0", "e"), ("x", "y")])
    assert io.matching_from_json(io.matching_to_json(M)) == M
    assert io.matching_to_json(Matching([("v0", "e")])) == {"pairs": [{"down": "v0", "up": "e"}]}


def test_homology_json():
    doc = io.homology_to_json(homology(rp2()))
    assert doc == [
        {"dim": 0, "betti": 1, "torsion": []},
        {"dim": 1, "betti": 0, "torsion": [2]},
        {"dim": 2, "betti": 0, "torsion": []},
    ]
    assert io.homology_from_json(doc) == homology(rp2())


def test_decomposition_roundtrip(rng):
    for ring in ["Z", "Q", "Z/6"]:
        C = random_simplicial_complex(rng, 6, 3, ring=ring, n_facets=5)
        D = reduce_by_elimination(C, greedy_matching(C))
        doc = io.decomposition_to_json(D)
        assert {"morse", "atoms", "change_of_basis"} <= set(doc)
        assert all(set(a) == {"top", "bottom", "dim"} for a in doc["atoms"])
        back = io.decomposition_from_json(doc, C)
        assert back == D
        verify_decomposition(C, back)


def test_complex_json_shape():
    doc = io.complex_to_json(load("interval"))
    assert doc == {
        "ring": "Z",
        "cells": [{"id": "v0", "dim": 0}, {"id": "v1", "dim": 0}, {"id": "e", "dim": 1}],
        "boundary": [{"of": "e", "coeffs": [["v1", "1"], ["v0", "-1"]]}],
    }


def test_rational_coefficients_parse():
    C = io.complex_from_json(
        {"ring": "Q", "cells": [{"id": "a", "dim": 0}, {"id": "e", "dim": 1}], "boundary": [{"of": "e", "coeffs": [["a", "-3/7"]]}]}
    )
    assert str(C.faces("e")["a"]) == "-3/7"


def test_omitted_boundary_is_zero():
    C = io.complex_from_json({"ring": "Z", "cells": [{"id": "a", "dim": 0}, {"id": "e", "dim": 1}]})
    validate_complex(C)
    assert not C.boundary_of("e")


def test_malformed_documents():
    with pytest.raises(ValidationError):
        io.complex_from_json({"cells": []})
    with pytest.raises(ValidationError):
        io.complex_from_json({"ring": "Z", "cells": [{"id": "a", "dim": 0}], "boundary": [{"of": "zz", "coeffs": []}]})
    with pytest.raises(ValidationError):
        io.matching_from_json({"pairs": [{"down": "a"}]})
