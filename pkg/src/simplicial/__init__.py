from src.simplicial.model import FaceSubset, SimplicialComplex, make_face
from src.simplicial.loader import load_complex, parse_complex_text
from src.simplicial.corpus import enumerate_complexes

__all__ = [
    "FaceSubset",
    "SimplicialComplex",
    "make_face",
    "load_complex",
    "parse_complex_text",
    "enumerate_complexes",
]
