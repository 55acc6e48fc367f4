"""
扩张问题

H₁∗…∗H_n → G 经过 ∏_{SK₁(K)} H_i 分解，当且仅当 SK₁(K) 的每条边 {i,j} 上 H_i 与 H_j 逐元素可交换
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from src.errors import CenterNonTrivial, DimensionMismatch, HypothesisUnmet, NotKTC
from src.groups.centralizers import center, descending_central_series, l_stage_centralizer
from src.groups.model import FiniteGroup, Subgroup
from src.groups.tc import is_k_tc
from src.graphprod.model import CommutationGraph, GraphProduct
from src.simplicial.model import SimplicialComplex

logger = logging.getLogger(__name__)


def pi1_polyhedral_product(complex_: SimplicialComplex, factors: Sequence[FiniteGroup]) -> GraphProduct:
    """π₁(Z_K(BG)) 的图积表示，只依赖 K 的 1-骨架"""
    if len(factors) != complex_.n:
        raise DimensionMismatch(f"因子群个数 {len(factors)} 与顶点数 {complex_.n} 不一致")
    return GraphProduct(CommutationGraph.from_edges(complex_.n, complex_.edges()), tuple(factors))


def _subgroups_commute(group: FiniteGroup, a: Subgroup, b: Subgroup) -> Optional[Tuple[int, int]]:
    """逐元素检查，返回字典序最小的不可交换元素对"""
    for x in a.elements:
        for y in b.elements:
            if not group.commute(x, y):
                return x, y
    return None


def commutation_graph(group: FiniteGroup, subgroups: Sequence[Subgroup]) -> CommutationGraph:
    n = len(subgroups)
    edges = [
        (i + 1, j + 1)
        for i in range(n)
        for j in range(i + 1, n)
        if _subgroups_commute(group, subgroups[i], subgroups[j]) is None
    ]
    return CommutationGraph.from_edges(n, edges)


@dataclass(frozen=True)
class Violation:
    edge: Tuple[int, int]
    a: int
    b: int

    def to_dict(self, group: FiniteGroup) -> dict:
        return {"edge": list(self.edge), "a": group.name(self.a), "b": group.name(self.b)}


@dataclass(frozen=True)
class ExtensionReport:
    extends: bool
    violation: Optional[Violation] = None

    def to_dict(self, group: FiniteGroup) -> dict:
        return {
            "extends": self.extends,
            "violation": self.violation.to_dict(group) if self.violation else None,
        }


def extension_exists(
    complex_: SimplicialComplex, group: FiniteGroup, subgroups: Sequence[Subgroup]
) -> ExtensionReport:
    if len(subgroups) != complex_.n:
        raise DimensionMismatch(f"子群个数 {len(subgroups)} 与顶点数 {complex_.n} 不一致")
    for i, j in complex_.edges():
        pair = _subgroups_commute(group, subgroups[i - 1], subgroups[j - 1])
        if pair is not None:
            logger.info(f"边 {(i, j)} 上 {group.name(pair[0])} 与 {group.name(pair[1])} 不可交换")
            return ExtensionReport(False, Violation((i, j), *pair))
    return ExtensionReport(True)


@dataclass(frozen=True)
class NonExtensionCertificate:
    """
    中心平凡的 (l+1)-TC 群中，各子群包含互不相同且两两交平凡的 l 级中心化子 Cˡ(g_i) 时，
    交换图没有边，任何含边的 K 都不能扩张
    """

    level: int
    witnesses: List[int]
    centralizers: List[Subgroup]
    graph: CommutationGraph
    certified: bool = field(default=False)

    def to_dict(self, group: FiniteGroup) -> dict:
        return {
            "level": self.level,
            "witnesses": [group.name(g) for g in self.witnesses],
            "centralizers": [c.names() for c in self.centralizers],
            "graph": self.graph.to_dict(),
            "certified": self.certified,
        }


def non_extension_certificate(
    group: FiniteGroup, subgroups: Sequence[Subgroup], level: int = 1
) -> NonExtensionCertificate:
    if not center(group).is_trivial:
        raise CenterNonTrivial(f"群的中心非平凡 (阶 {center(group).order})")
    series = descending_central_series(group)
    if not is_k_tc(group, level + 1, series):
        raise NotKTC(f"群不是 {level + 1}-TC 群")

    # 每个子群的候选：被它包含的非平凡 Cˡ(g)，g 取自 Γˡ(G)∖{1}，相同的中心化子只保留最小的 g
    stage = series.term(level).elements
    candidates: List[List[Tuple[int, frozenset]]] = []
    for index, sub in enumerate(subgroups, start=1):
        seen = {}
        for g in stage:
            if g == 0:
                continue
            c = l_stage_centralizer(group, g, level, series).members
            if len(c) > 1 and c <= sub.members and c not in seen:
                seen[c] = g
        if not seen:
            raise HypothesisUnmet("子群不包含任何非平凡的 l 级中心化子", index)
        candidates.append([(g, c) for c, g in sorted(seen.items(), key=lambda item: item[1])])

    chosen: List[Tuple[int, frozenset]] = []
    deepest = [0]

    def search(i: int) -> bool:
        deepest[0] = max(deepest[0], i)
        if i == len(candidates):
            return True
        for g, c in candidates[i]:
            if all(c != d and len(c & d) == 1 for _, d in chosen):
                chosen.append((g, c))
                if search(i + 1):
                    return True
                chosen.pop()
        return False

    if not search(0):
        raise HypothesisUnmet("找不到两两交平凡的互异 l 级中心化子", deepest[0] + 1)

    graph = commutation_graph(group, subgroups)
    if not graph.is_edgeless:
        raise HypothesisUnmet(f"交换图有边 {graph.edges}，证书不成立", graph.edges[0][0])
    return NonExtensionCertificate(
        level=level,
        witnesses=[g for g, _ in chosen],
        centralizers=[Subgroup(group, c) for _, c in chosen],
        graph=graph,
        certified=True,
    )
