"""Algebraic discrete Morse theory for free chain complexes."""

from .complex import (
    BasedComplex,
    BasisElement,
    Chain,
    CoveringRelation,
    coefficient,
    covering_weight,
    poset_view,
    validate_complex,
)
from .homology import HomologyGroup, IntegerMatrix, euler_characteristic, homology, smith_normal_form
from .matching import (
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
from .morse import (
    AlternatingPath,
    AtomSummand,
    Decomposition,
    MorseComplex,
    enumerate_paths,
    morse_boundary,
    normalize_basis,
    path_weight,
    reduce_by_elimination,
    verify_decomposition,
)
from .ring import RingElement, RingSpec, add, invert, mul, try_invert
from .simplicial import simplicial_to_complex

__version__ = "0.1.0"
