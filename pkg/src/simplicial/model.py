"""
抽象单纯复形
顶点编号为 1..n；面用有序元组表示，复形只存极大面（facets）
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Tuple

import networkx as nx

from src.errors import EmptyIndexSet, OutOfRange, VertexNotCovered

logger = logging.getLogger(__name__)

# 面：严格递增的顶点序列
FaceSubset = Tuple[int, ...]


def make_face(vertices: Iterable[int], n: int) -> FaceSubset:
    """规范化并校验一个面"""
    face = tuple(sorted(set(vertices)))
    for v in face:
        if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= n:
            raise OutOfRange(f"顶点标号 {v!r} 不在 1..{n} 范围内")
    return face


def _maximal(faces: Iterable[FaceSubset]) -> Tuple[FaceSubset, ...]:
    """去掉被其他面包含的面，按 (维数, 字典序) 排序"""
    candidates = sorted(set(faces), key=lambda f: (-len(f), f))
    kept: List[FaceSubset] = []
    kept_sets: List[frozenset] = []
    for face in candidates:
        s = frozenset(face)
        if any(s <= other for other in kept_sets):
            continue
        kept.append(face)
        kept_sets.append(s)
    return tuple(sorted(kept, key=lambda f: (len(f), f)))


@dataclass(frozen=True)
class SimplicialComplex:
    """单纯复形 K ⊆ 2^[n]"""

    n: int
    facets: Tuple[FaceSubset, ...]

    @classmethod
    def from_facets(cls, n: int, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """由面列表构造（自动取向下闭包），每个顶点都必须出现在某个面中"""
        if not isinstance(n, int) or n < 1:
            raise OutOfRange(f"顶点数必须为正整数: {n!r}")
        faces = [make_face(f, n) for f in facets]
        covered = {v for f in faces for v in f}
        for v in range(1, n + 1):
            if v not in covered:
                raise VertexNotCovered(v)
        return cls(n=n, facets=_maximal(f for f in faces if f))

    # ---- 常用复形 ----

    @classmethod
    def discrete(cls, n: int) -> "SimplicialComplex":
        """0-骨架 K₀：n 个孤立点"""
        return cls.from_facets(n, [[i] for i in range(1, n + 1)])

    @classmethod
    def full_simplex(cls, n: int) -> "SimplicialComplex":
        """n 个顶点上的满单形 Δ^{n-1}"""
        return cls.from_facets(n, [range(1, n + 1)])

    @classmethod
    def simplex_boundary(cls, n: int) -> "SimplicialComplex":
        """∂Δ^{n-1}，n ≥ 2"""
        if n < 2:
            raise OutOfRange("单形边界至少需要 2 个顶点")
        return cls.from_facets(n, combinations(range(1, n + 1), n - 1))

    @classmethod
    def cycle(cls, n: int) -> "SimplicialComplex":
        """n 边形 (n ≥ 3)"""
        return cls.from_facets(n, [(i, i % n + 1) for i in range(1, n + 1)])

    def cone(self) -> "SimplicialComplex":
        """锥：新增顶点 n+1 与每个极大面相连"""
        apex = self.n + 1
        return SimplicialComplex.from_facets(apex, [f + (apex,) for f in self.facets])

    # ---- 基本查询 ----

    def contains(self, face: Iterable[int]) -> bool:
        """面的成员判断：是否为某个极大面的子集（空集总是面）"""
        s = set(face)
        return any(s.issubset(f) for f in self._facet_sets)

    def __contains__(self, face: Iterable[int]) -> bool:
        return self.contains(face)

    @cached_property
    def _facet_sets(self) -> Tuple[frozenset, ...]:
        return tuple(frozenset(f) for f in self.facets)

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.facets) - 1

    @cached_property
    def faces(self) -> Tuple[FaceSubset, ...]:
        """全部非空面，按 (大小, 字典序) 排列"""
        found = set()
        for facet in self.facets:
            for k in range(1, len(facet) + 1):
                found.update(combinations(facet, k))
        return tuple(sorted(found, key=lambda f: (len(f), f)))

    def faces_of_dim(self, d: int) -> List[FaceSubset]:
        return [f for f in self.faces if len(f) == d + 1]

    def f_vector(self) -> List[int]:
        """f_d = d 维面的个数, d = 0..dim K"""
        counts = [0] * (self.dimension + 1)
        for f in self.faces:
            counts[len(f) - 1] += 1
        return counts

    def edges(self) -> List[Tuple[int, int]]:
        return [f for f in self.faces if len(f) == 2]

    def one_skeleton_graph(self) -> nx.Graph:
        """1-骨架对应的图"""
        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.n + 1))
        graph.add_edges_from(self.edges())
        return graph

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * f for d, f in enumerate(self.f_vector()))

    # ---- 构造运算 ----

    def skeleton(self, q: int) -> "SimplicialComplex":
        """q-骨架 SK_q"""
        if q < 0:
            raise OutOfRange(f"骨架维数必须非负: {q}")
        if q >= self.dimension:
            return self
        return SimplicialComplex.from_facets(
            self.n, [f for f in self.faces if len(f) <= q + 1]
        )

    def full_subcomplex(self, index_set: Iterable[int]) -> Tuple["SimplicialComplex", Dict[int, int]]:
        """全子复形 K_I = {σ ∩ I}，重新编号为 1..|I|；同时返回编号映射 旧→新"""
        subset = make_face(index_set, self.n)
        if not subset:
            raise EmptyIndexSet("全子复形的指标集不能为空")
        relabel = {v: i + 1 for i, v in enumerate(subset)}
        keep = set(subset)
        restricted = [
            [relabel[v] for v in f if v in keep] for f in self.facets
        ]
        return (
            SimplicialComplex.from_facets(len(subset), [f for f in restricted if f]),
            relabel,
        )

    def minimal_nonfaces(self, min_size: int = 3) -> List[FaceSubset]:
        """
        极小非面：S ∉ K 且 S 的每个真子集都在 K 中

        极小非面去掉任一顶点后是 K 的面，所以只需在 K 的面上各添一个顶点来枚举候选。
        """
        if min_size < 2:
            raise OutOfRange(f"min_size 至少为 2: {min_size}")
        found = set()
        for face in self.faces:
            if len(face) + 1 < min_size:
                continue
            for v in range(1, self.n + 1):
                if v in face:
                    continue
                candidate = tuple(sorted(face + (v,)))
                if candidate in found or self.contains(candidate):
                    continue
                if all(
                    self.contains(candidate[:i] + candidate[i + 1:])
                    for i in range(len(candidate))
                ):
                    found.add(candidate)
        return sorted(found)

    def is_flag(self) -> bool:
        """旗复形判定：1-骨架的每个团都是面"""
        return all(
            self.contains(clique)
            for clique in nx.enumerate_all_cliques(self.one_skeleton_graph())
        )

    def flag_completion(self) -> "SimplicialComplex":
        """Flag(K)：1-骨架的团复形（把极小非面补成面）"""
        cliques = nx.find_cliques(self.one_skeleton_graph())
        return SimplicialComplex.from_facets(self.n, [sorted(c) for c in cliques])

    def iter_subsets(self) -> Iterator[FaceSubset]:
        """[n] 的全部非空子集"""
        for k in range(1, self.n + 1):
            yield from combinations(range(1, self.n + 1), k)

    def to_dict(self) -> dict:
        return {"n": self.n, "facets": [list(f) for f in self.facets]}
