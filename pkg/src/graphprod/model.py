"""
图积的数据结构
顶点编号 1..n；音节 (v, x) 表示第 v 个因子群中的非单位元 x
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Sequence, Tuple

import networkx as nx

from src.errors import DimensionMismatch, InvalidSyllable, OutOfRange
from src.groups.model import FiniteGroup
from src.simplicial.model import SimplicialComplex

Syllable = Tuple[int, int]


@dataclass(frozen=True)
class CommutationGraph:
    """简单图，边 (i, j) 满足 i < j"""

    n: int
    edges: Tuple[Tuple[int, int], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "CommutationGraph":
        normalized = set()
        for edge in edges:
            i, j = sorted(edge)
            if i == j:
                raise OutOfRange(f"交换图不允许自环: {i}")
            if not (1 <= i and j <= n):
                raise OutOfRange(f"边 {(i, j)} 的顶点不在 1..{n} 范围内")
            normalized.add((i, j))
        return cls(n, tuple(sorted(normalized)))

    def adjacent(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self._edge_set

    @cached_property
    def _edge_set(self) -> frozenset:
        return frozenset(self.edges)

    @property
    def is_edgeless(self) -> bool:
        return not self.edges

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.n + 1))
        graph.add_edges_from(self.edges)
        return graph

    def to_complex(self) -> SimplicialComplex:
        """作为一维单纯复形"""
        return SimplicialComplex.from_facets(self.n, [[v] for v in range(1, self.n + 1)] + [list(e) for e in self.edges])

    def flag_complex(self) -> SimplicialComplex:
        """Flag(Γ)"""
        return self.to_complex().flag_completion()

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class GraphProduct:
    """图积 ∏_Γ G_i：自由积模去相邻因子间的交换关系"""

    graph: CommutationGraph
    factors: Tuple[FiniteGroup, ...]

    def __post_init__(self):
        if len(self.factors) != self.graph.n:
            raise DimensionMismatch(f"因子群个数 {len(self.factors)} 与图的顶点数 {self.graph.n} 不一致")

    def factor(self, v: int) -> FiniteGroup:
        return self.factors[v - 1]

    def check_syllable(self, syllable: Syllable) -> None:
        v, x = syllable
        if not 1 <= v <= self.graph.n:
            raise InvalidSyllable(f"音节顶点 {v} 不在 1..{self.graph.n} 范围内")
        order = self.factor(v).order
        if not 1 <= x < order:
            raise InvalidSyllable(f"音节 ({v}, {x}) 的元素必须是第 {v} 个因子中的非单位元 (1..{order - 1})")

    def syllables(self) -> List[Syllable]:
        """全部可能的音节"""
        return [(v, x) for v in range(1, self.graph.n + 1) for x in range(1, self.factor(v).order)]

    def describe(self) -> dict:
        return {
            "graph": self.graph.to_dict(),
            "factor_orders": [g.order for g in self.factors],
        }


@dataclass(frozen=True)
class GraphProductWord:
    syllables: Tuple[Syllable, ...] = ()

    @classmethod
    def of(cls, syllables: Iterable[Sequence[int]]) -> "GraphProductWord":
        return cls(tuple((int(v), int(x)) for v, x in syllables))

    def __len__(self) -> int:
        return len(self.syllables)

    def __iter__(self):
        return iter(self.syllables)

    def render(self, product: GraphProduct) -> str:
        if not self.syllables:
            return "e"
        return " ".join(f"{product.factor(v).name(x)}_{v}" for v, x in self.syllables)

    def to_list(self) -> List[List[int]]:
        return [[v, x] for v, x in self.syllables]
