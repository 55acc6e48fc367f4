from src.homology.snf import IntegerMatrix, SmithForm, smith_normal_form
from src.homology.chain import (
    ChainComplex,
    HomologyGroup,
    homology_of,
    normalize_torsion,
    reduced_homology,
    same_homology,
    simplicial_chain_complex,
)

__all__ = [
    "IntegerMatrix",
    "SmithForm",
    "smith_normal_form",
    "ChainComplex",
    "HomologyGroup",
    "homology_of",
    "normalize_torsion",
    "reduced_homology",
    "same_homology",
    "simplicial_chain_complex",
]
