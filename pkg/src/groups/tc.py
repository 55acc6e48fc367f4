"""
交换传递（TC）性质
k-TC: 对 g, k ∈ Γ^{k−1}(G) 与非单位元 h，[g,h] = 1 = [h,k] ⟹ [g,k] = 1
"""

import logging
from dataclasses import dataclass, field
from typing import List, Literal, Optional, Tuple

from src.errors import AbelianInput
from src.groups.centralizers import (
    CentralSeries,
    all_subgroups,
    center,
    centralizer,
    centralizer_of_set,
    descending_central_series,
    l_stage_centralizer,
    two_generated_subgroups,
)
from src.groups.model import FiniteGroup

logger = logging.getLogger(__name__)


def is_k_tc(group: FiniteGroup, k: int, series: Optional[CentralSeries] = None) -> bool:
    """等价于: 每个非单位元 h 的 C(h) ∩ Γ^{k−1}(G) 都是交换的"""
    if k < 2:
        raise ValueError(f"k-TC 只对 k ≥ 2 定义: {k}")
    series = series or descending_central_series(group)
    term = series.term(k - 1)
    for h in group.elements:
        if h == 0:
            continue
        if not (centralizer(group, h) & term).is_abelian:
            return False
    return True


def tc_class(group: FiniteGroup, series: Optional[CentralSeries] = None) -> Optional[int]:
    """
    最小的 k ≥ 2 使 G 为 k-TC；到降中心列稳定仍不成立时返回 None（Unbounded）
    """
    series = series or descending_central_series(group)
    for k in range(2, series.stable_index + 2):
        if is_k_tc(group, k, series):
            return k
    return None


@dataclass(frozen=True)
class TCEquivalences:
    a: bool
    b: bool
    c: bool
    d: bool

    @property
    def agree(self) -> bool:
        return self.a == self.b == self.c == self.d

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c, "d": self.d, "agree": self.agree}


def _condition_a(group: FiniteGroup) -> bool:
    return all(centralizer(group, g).is_abelian for g in group.elements if g != 0)


def _condition_b(group: FiniteGroup) -> bool:
    centralizers = [centralizer(group, g).members for g in group.elements]
    for g in group.elements:
        for h in range(1, g):
            if group.commute(g, h) and centralizers[g] != centralizers[h]:
                return False
    return True


def _condition_c(group: FiniteGroup) -> bool:
    for h in group.elements:
        if h == 0:
            continue
        for g in group.elements:
            if not group.commute(g, h):
                continue
            for k in group.elements:
                if group.commute(h, k) and not group.commute(g, k):
                    return False
    return True


def _condition_d(group: FiniteGroup, subgroups: Literal["two-generated", "all"]) -> bool:
    """1 < C(A) ≤ C(B) < G ⟹ C(A) = C(B)"""
    family = two_generated_subgroups(group) if subgroups == "two-generated" else all_subgroups(group)
    proper = {
        c for c in {centralizer_of_set(group, s.members).members for s in family}
        if 1 < len(c) < group.order
    }
    return not any(x < y for x in proper for y in proper)


def tc_equivalences(
    group: FiniteGroup, subgroups: Literal["two-generated", "all"] = "two-generated"
) -> TCEquivalences:
    """
    分别穷举检验 TC 的四个等价条件

    Args:
        subgroups: 条件 (d) 中 A, B 的范围；缺省只取至多两个元素生成的子群
    """
    if group.is_abelian:
        raise AbelianInput("TC 等价条件只对非交换群检验")
    result = TCEquivalences(
        a=_condition_a(group),
        b=_condition_b(group),
        c=_condition_c(group),
        d=_condition_d(group, subgroups),
    )
    if not result.agree:
        logger.warning(f"TC 等价条件不一致: {result.to_dict()}")
    return result


@dataclass(frozen=True)
class PartitionLawReport:
    """
    l 级中心化子的划分律

    applicable: G 是 (l+1)-TC 且中心平凡
    holds: 对 Γ^l(G) 中的非单位元 g，互不相同的 Cˡ(g) 两两交平凡或相等
    wide_violations: 把 g 放宽到所有非中心元素时的反例
    """

    level: int
    applicable: bool
    holds: bool
    violations: List[Tuple[int, int]] = field(default_factory=list)
    wide_violations: List[Tuple[int, int]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "applicable": self.applicable,
            "holds": self.holds,
            "violations": [list(p) for p in self.violations],
            "wide_violations": [list(p) for p in self.wide_violations],
        }


def _partition_violations(group: FiniteGroup, candidates: List[int], level: int, series) -> List[Tuple[int, int]]:
    stage = {g: l_stage_centralizer(group, g, level, series).members for g in candidates}
    violations = []
    for i, g in enumerate(candidates):
        for h in candidates[i + 1:]:
            a, b = stage[g], stage[h]
            if a != b and len(a & b) > 1:
                violations.append((g, h))
    return violations


def l_stage_partition_law(group: FiniteGroup, level: int) -> PartitionLawReport:
    series = descending_central_series(group)
    applicable = center(group).is_trivial and is_k_tc(group, level + 1, series)
    term = series.term(level)
    narrow = _partition_violations(group, [g for g in term.elements if g != 0], level, series)
    z = center(group)
    wide = _partition_violations(group, [g for g in group.elements if g not in z], level, series)
    if wide and not narrow:
        logger.info(f"l={level}: 放宽到全部非中心元素时有 {len(wide)} 个反例")
    return PartitionLawReport(
        level=level,
        applicable=applicable,
        holds=not narrow,
        violations=narrow,
        wide_violations=wide,
    )
