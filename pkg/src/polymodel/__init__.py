from src.polymodel.cubical import (
    CubicalCell,
    CubicalComplex,
    MarkedInterval,
    RankVector,
    build_polyproduct,
    cell_count_formula,
    polyproduct_homology,
)
from src.polymodel.ranks import rank_closed_form, rank_oracle, rank_recurrence
from src.polymodel.splitting import splitting_homology
from src.polymodel.classify import EMReport, classify_em

__all__ = [
    "CubicalCell",
    "CubicalComplex",
    "MarkedInterval",
    "RankVector",
    "build_polyproduct",
    "cell_count_formula",
    "polyproduct_homology",
    "rank_closed_form",
    "rank_oracle",
    "rank_recurrence",
    "splitting_homology",
    "EMReport",
    "classify_em",
]
