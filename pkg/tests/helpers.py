from pathlib import Path

from algmorse import io
from algmorse.simplicial import parse_facets, simplicial_to_complex

FIXTURES = Path(__file__).parent / "fixtures"


def load(name):
    return io.load_complex(FIXTURES / f"{name}.json")


def load_matching(name):
    return io.load_matching(FIXTURES / f"{name}_matching.json")


def rp2(ring="Z"):
    return simplicial_to_complex(parse_facets((FIXTURES / "rp2.facets").read_text()), ring)
