"""
同调层面的全子复形分裂:
H̃_k(Z_K(I,F)) ≅ ⨁_{∅≠I⊆[n]} H̃_{k−1}(K_I)^{∏_{i∈I}(m_i−1)}
"""

import logging
from math import prod
from typing import List, Optional, Sequence

from src.errors import DimensionMismatch
from src.homology.chain import HomologyGroup, reduced_homology
from src.polymodel.cubical import RankVector
from src.simplicial.model import SimplicialComplex

logger = logging.getLogger(__name__)


def splitting_homology(
    complex_: SimplicialComplex, m: Optional[Sequence[int]] = None
) -> List[HomologyGroup]:
    """
    按全子复形求和得到 Z_K 的约化同调，结果长度为 dim K + 2

    m 缺省为 (2,…,2)；其他 m 时第 I 项乘以 ∏_{i∈I}(m_i−1)
    """
    marks = RankVector.of(m if m is not None else [2] * complex_.n).m
    if len(marks) != complex_.n:
        raise DimensionMismatch(f"标记向量长度 {len(marks)} 与顶点数 {complex_.n} 不一致")

    groups = [HomologyGroup() for _ in range(complex_.dimension + 2)]
    for subset in complex_.iter_subsets():
        multiplicity = prod(marks[i - 1] - 1 for i in subset)
        if multiplicity == 0:
            continue
        restricted, _ = complex_.full_subcomplex(subset)
        for degree, group in enumerate(reduced_homology(restricted)):
            if not group.is_trivial:
                groups[degree + 1] = groups[degree + 1] + group.scaled(multiplicity)
    logger.debug(f"分裂公式: {[str(g) for g in groups]}")
    return groups
