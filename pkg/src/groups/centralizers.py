"""
中心化子、换位子群、降中心列与交换元组计数
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import FrozenSet, Iterable, List, Optional

import networkx as nx

from src.groups.model import FiniteGroup, Subgroup

logger = logging.getLogger(__name__)


def centralizer(group: FiniteGroup, g: int) -> Subgroup:
    """C_G(g) = {h : hg = gh}"""
    return Subgroup(group, frozenset(h for h in group.elements if group.commute(g, h)))


def centralizer_of_set(group: FiniteGroup, elements: Iterable[int]) -> Subgroup:
    """C_G(A) = ∩_{a∈A} C_G(a)"""
    items = list(elements)
    return Subgroup(
        group, frozenset(h for h in group.elements if all(group.commute(a, h) for a in items))
    )


def center(group: FiniteGroup) -> Subgroup:
    return centralizer_of_set(group, group.elements)


def commutator_subgroup(a: Subgroup, b: Subgroup) -> Subgroup:
    """[A,B]：由全部 [x,y]（x∈A, y∈B）生成"""
    group = a.parent
    commutators = {group.commutator(x, y) for x in a.members for y in b.members}
    return group.generated_subgroup(commutators)


def normal_closure(group: FiniteGroup, elements: Iterable[int]) -> Subgroup:
    conjugates = {group.product((group.inv(x), a, x)) for a in elements for x in group.elements}
    return group.generated_subgroup(conjugates)


def is_simple(group: FiniteGroup) -> bool:
    """非平凡且每个非单位元的正规闭包都是整个群"""
    if group.order == 1:
        return False
    return all(normal_closure(group, [g]).order == group.order for g in group.elements if g != 0)


def conjugacy_classes(group: FiniteGroup) -> List[List[int]]:
    seen = set()
    classes = []
    for g in group.elements:
        if g in seen:
            continue
        cls = sorted({group.product((group.inv(x), g, x)) for x in group.elements})
        seen.update(cls)
        classes.append(cls)
    return classes


def all_subgroups(group: FiniteGroup) -> List[Subgroup]:
    """子群格：从循环子群出发，反复取两两生成的子群直到不再增加"""
    found = {group.generated_subgroup([g]).members for g in group.elements}
    frontier = set(found)
    while frontier:
        new = set()
        for a in frontier:
            for b in found:
                joined = group.generated_subgroup(a | b).members
                if joined not in found:
                    new.add(joined)
        found |= new
        frontier = new
    return sorted((Subgroup(group, s) for s in found), key=Subgroup.sort_key)


def two_generated_subgroups(group: FiniteGroup) -> List[Subgroup]:
    found = {group.generated_subgroup([g, h]).members for g in group.elements for h in range(g + 1)}
    return sorted((Subgroup(group, s) for s in found), key=Subgroup.sort_key)


def distinct_centralizers(group: FiniteGroup) -> List[Subgroup]:
    """非中心元素的全部互不相同的中心化子"""
    z = center(group)
    found = {centralizer(group, g).members for g in group.elements if g not in z}
    return sorted((Subgroup(group, s) for s in found), key=Subgroup.sort_key)


def maximal_abelian_subgroups(group: FiniteGroup) -> List[Subgroup]:
    """
    极大交换子群

    即交换图（元素为顶点，可交换则连边）的极大团；极大的两两可交换集合自动对乘法封闭
    """
    graph = nx.Graph()
    graph.add_nodes_from(group.elements)
    graph.add_edges_from((a, b) for a in group.elements for b in range(a) if group.commute(a, b))
    subgroups = [Subgroup(group, frozenset(c)) for c in nx.find_cliques(graph)]
    return sorted(subgroups, key=Subgroup.sort_key)


@dataclass(frozen=True)
class CentralSeries:
    """
    降中心列 Γ¹(G)=G, Γ^{l+1}(G)=[Γ^l(G),G]

    stages 只保留严格下降的各项，stages[l-1] = Γ^l(G)；
    最后一项即稳定项，之后的 Γ^l 都等于它
    """

    group: FiniteGroup
    stages: List[Subgroup]

    @property
    def stable_index(self) -> int:
        """使 Γ^{l+1} = Γ^l 的最小 l"""
        return len(self.stages)

    @property
    def stable_term(self) -> Subgroup:
        return self.stages[-1]

    @property
    def nilpotent(self) -> bool:
        return self.stable_term.is_trivial

    @property
    def nilpotency_class(self) -> Optional[int]:
        """到达平凡群所需的严格下降次数，不幂零时为 None"""
        return len(self.stages) - 1 if self.nilpotent else None

    @property
    def trivial_index(self) -> Optional[int]:
        """使 Γ^l(G) = 1 的最小 l"""
        return len(self.stages) if self.nilpotent else None

    def exhausted(self, level: int) -> bool:
        """level 超过稳定位置时，Γ^level 取的是稳定项"""
        return level > self.stable_index

    def term(self, level: int) -> Subgroup:
        """Γ^level(G)，level ≥ 1"""
        if level < 1:
            raise ValueError(f"降中心列的下标从 1 开始: {level}")
        return self.stages[min(level, len(self.stages)) - 1]

    def orders(self) -> List[int]:
        return [s.order for s in self.stages]

    def to_dict(self) -> dict:
        return {
            "orders": self.orders(),
            "stages": [s.names() for s in self.stages],
            "nilpotent": self.nilpotent,
            "nilpotency_class": self.nilpotency_class if self.nilpotent else "NotNilpotent",
            "stable_index": self.stable_index,
        }


def descending_central_series(group: FiniteGroup) -> CentralSeries:
    whole = group.whole()
    stages = [whole]
    while True:
        nxt = commutator_subgroup(stages[-1], whole)
        if nxt.members == stages[-1].members:
            break
        stages.append(nxt)
    logger.debug(f"降中心列各项的阶: {[s.order for s in stages]}")
    return CentralSeries(group, stages)


def nilpotency_class(group: FiniteGroup) -> Optional[int]:
    return descending_central_series(group).nilpotency_class


def l_stage_centralizer(
    group: FiniteGroup, g: int, level: int, series: Optional[CentralSeries] = None
) -> Subgroup:
    """Cˡ_G(g) = C_G(g) ∩ Γˡ(G)"""
    series = series or descending_central_series(group)
    if series.exhausted(level):
        logger.warning(f"l={level} 超过降中心列的稳定位置 {series.stable_index}，使用稳定项")
    return centralizer(group, g) & series.term(level)


def commuting_tuple_count(group: FiniteGroup, k: int) -> int:
    """
    |Hom(ℤ^k, G)|：两两可交换的 k 元组个数

    依次选取 g₁ ∈ G, g₂ ∈ C(g₁), g₃ ∈ C(g₁)∩C(g₂), …
    """
    if k < 0:
        raise ValueError(f"k 必须非负: {k}")
    centralizers = [centralizer(group, g).members for g in group.elements]

    @lru_cache(maxsize=None)
    def count(allowed: FrozenSet[int], remaining: int) -> int:
        if remaining == 0:
            return 1
        return sum(count(allowed & centralizers[g], remaining - 1) for g in allowed)

    return count(frozenset(group.elements), k)


def commuting_tuple_count_brute_force(group: FiniteGroup, k: int) -> int:
    """逐个枚举 G^k 中的元组"""
    total = 0
    for items in product(group.elements, repeat=k):
        if all(group.commute(a, b) for a, b in combinations(items, 2)):
            total += 1
    return total


def commuting_pairs_by_classes(group: FiniteGroup) -> int:
    """k=2 时 Σ_g |C(g)| = |G| · 共轭类个数"""
    return group.order * len(conjugacy_classes(group))
