from src.graphprod.model import CommutationGraph, GraphProduct, GraphProductWord, Syllable
from src.graphprod.words import (
    enumerate_elements,
    equal,
    evaluate,
    invert,
    kernel_free_rank,
    multiply,
    normal_form,
)
from src.graphprod.oracle import all_words, rewriting_classes
from src.graphprod.extension import (
    ExtensionReport,
    NonExtensionCertificate,
    Violation,
    commutation_graph,
    extension_exists,
    non_extension_certificate,
    pi1_polyhedral_product,
)

__all__ = [
    "CommutationGraph",
    "GraphProduct",
    "GraphProductWord",
    "Syllable",
    "enumerate_elements",
    "equal",
    "evaluate",
    "invert",
    "kernel_free_rank",
    "multiply",
    "normal_form",
    "all_words",
    "rewriting_classes",
    "ExtensionReport",
    "NonExtensionCertificate",
    "Violation",
    "commutation_graph",
    "extension_exists",
    "non_extension_certificate",
    "pi1_polyhedral_product",
]
