"""
N_r：自由积 G₁∗…∗G_r → G₁×…×G_r 的核的自由秩（|G_i| = m_i）
三种独立算法：闭式公式、递推公式、胞腔模型 1-骨架的圈秩
"""

from math import prod
from typing import Sequence

import networkx as nx

from src.polymodel.cubical import RankVector, build_polyproduct
from src.simplicial.model import SimplicialComplex


def rank_closed_form(m: Sequence[int]) -> int:
    """N_r = (r−1)∏m_i − Σ_i ∏_{j≠i} m_j + 1（r = 1 时为 0）"""
    marks = RankVector.of(m).m
    r = len(marks)
    total = prod(marks)
    return (r - 1) * total - sum(prod(marks[:i] + marks[i + 1:]) for i in range(r)) + 1


def rank_recurrence(m: Sequence[int]) -> int:
    """N_1 = 0, N_r = m_r N_{r−1} + (m_r − 1)(∏_{i<r} m_i − 1)"""
    marks = RankVector.of(m).m
    value = 0
    running = marks[0]
    for mr in marks[1:]:
        value = mr * value + (mr - 1) * (running - 1)
        running *= mr
    return value


def rank_oracle(m: Sequence[int]) -> int:
    """K₀ 上胞腔模型 1-骨架图的第一 Betti 数 E − V + C，不经过 Smith 标准形"""
    marks = RankVector.of(m).m
    model = build_polyproduct(SimplicialComplex.discrete(len(marks)), marks)
    graph = nx.MultiGraph()
    graph.add_nodes_from(model.cells[0])
    graph.add_edges_from(model.one_skeleton_edges())
    return (
        graph.number_of_edges()
        - graph.number_of_nodes()
        + nx.number_connected_components(graph)
    )
