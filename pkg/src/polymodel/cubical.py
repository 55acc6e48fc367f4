"""
多面体积 Z_K(I,F) 的立方胞腔模型

每个坐标 i 上取区间 [0,1] 及 m_i 个标记点 f₁=0 < … < f_m=1。
坐标值用整数 c 编码: c 为偶数表示第 c/2+1 个标记点，c 为奇数表示线段 [f_j, f_{j+1}]，j=(c+1)/2。
胞腔的支撑集（取线段的坐标）必须是 K 的面。
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import prod
from typing import Dict, List, Optional, Sequence, Tuple

from src.config import get_settings
from src.errors import CellLimitExceeded, DimensionMismatch, OutOfRange
from src.homology.chain import ChainComplex, HomologyGroup, homology_of
from src.homology.snf import IntegerMatrix
from src.simplicial.model import FaceSubset, SimplicialComplex

logger = logging.getLogger(__name__)

Cell = Tuple[int, ...]


@dataclass(frozen=True)
class MarkedInterval:
    """[0,1] 上的 m 个标记点，与 (EG, G) 中 |G| = m 对应"""

    m: int

    def __post_init__(self):
        if self.m < 1:
            raise OutOfRange(f"标记点个数至少为 1: {self.m}")

    def vertices(self) -> List[int]:
        return [2 * j for j in range(self.m)]

    def edges(self) -> List[int]:
        return [2 * j + 1 for j in range(self.m - 1)]


@dataclass(frozen=True)
class RankVector:
    """(m₁, …, m_r)，每个 m_i ≥ 1"""

    m: Tuple[int, ...]

    def __post_init__(self):
        if not self.m:
            raise OutOfRange("RankVector 不能为空")
        for x in self.m:
            if not isinstance(x, int) or x < 1:
                raise OutOfRange(f"标记点个数必须为正整数: {x!r}")

    @classmethod
    def of(cls, m: Sequence[int]) -> "RankVector":
        return m if isinstance(m, RankVector) else cls(tuple(m))

    def __len__(self) -> int:
        return len(self.m)

    def __iter__(self):
        return iter(self.m)


@dataclass(frozen=True)
class CubicalCell:
    """胞腔的可读形式"""

    coords: Cell

    @property
    def support(self) -> FaceSubset:
        return tuple(i + 1 for i, c in enumerate(self.coords) if c % 2)

    @property
    def dimension(self) -> int:
        return len(self.support)

    def describe(self) -> List[str]:
        """每个坐标写成 Vertex(j) 或 Edge(j)"""
        return [f"Edge({(c + 1) // 2})" if c % 2 else f"Vertex({c // 2 + 1})" for c in self.coords]


def cell_count_formula(complex_: SimplicialComplex, m: Sequence[int]) -> Dict[int, int]:
    """各维胞腔数: Σ_{|σ|=d} ∏_{i∈σ}(m_i−1) ∏_{i∉σ} m_i，0 维为 ∏ m_i"""
    counts = {0: prod(m)}
    for face in complex_.faces:
        inside = set(face)
        counts[len(face)] = counts.get(len(face), 0) + prod(
            (m[i - 1] - 1) if i in inside else m[i - 1] for i in range(1, complex_.n + 1)
        )
    return counts


class CubicalComplex:
    """Z_K(I,F) = colim_{σ∈K} D(σ) 的胞腔复形"""

    def __init__(self, complex_: SimplicialComplex, marks: RankVector, cells: List[List[Cell]]):
        self.complex = complex_
        self.marks = marks
        self.cells = cells
        self.index: List[Dict[Cell, int]] = [
            {cell: i for i, cell in enumerate(layer)} for layer in cells
        ]

    @property
    def dimension(self) -> int:
        return len(self.cells) - 1

    def counts(self) -> List[int]:
        return [len(layer) for layer in self.cells]

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(layer) for d, layer in enumerate(self.cells))

    def boundary(self, cell: Cell) -> Dict[Cell, int]:
        """
        乘积规则: ∂(c₁×…×c_n) = Σ_p (-1)^{k_p} c₁×…×∂c_p×…×c_n，
        k_p 为位置 p 之前线段坐标的个数，∂[f_j,f_{j+1}] = f_{j+1} − f_j
        """
        result: Dict[Cell, int] = {}
        preceding = 0
        for p, c in enumerate(cell):
            if c % 2 == 0:
                continue
            sign = -1 if preceding % 2 else 1
            upper = cell[:p] + (c + 1,) + cell[p + 1:]
            lower = cell[:p] + (c - 1,) + cell[p + 1:]
            result[upper] = result.get(upper, 0) + sign
            result[lower] = result.get(lower, 0) - sign
            preceding += 1
        return result

    @cached_property
    def chain_complex(self) -> ChainComplex:
        boundaries = [IntegerMatrix.zeros(0, len(self.cells[0]))]
        for d in range(1, len(self.cells)):
            values: Dict[Tuple[int, int], int] = {}
            for j, cell in enumerate(self.cells[d]):
                for face, coeff in self.boundary(cell).items():
                    values[(self.index[d - 1][face], j)] = coeff
            boundaries.append(
                IntegerMatrix.from_sparse(len(self.cells[d - 1]), len(self.cells[d]), values)
            )
        return ChainComplex(tuple(self.counts()), tuple(boundaries))

    def one_skeleton_edges(self) -> List[Tuple[Cell, Cell]]:
        """1 维胞腔的两个端点"""
        edges = []
        for cell in self.cells[1] if len(self.cells) > 1 else []:
            p = next(i for i, c in enumerate(cell) if c % 2)
            edges.append((cell[:p] + (cell[p] - 1,) + cell[p + 1:], cell[:p] + (cell[p] + 1,) + cell[p + 1:]))
        return edges


def build_polyproduct(
    complex_: SimplicialComplex, m: Sequence[int], max_cells: Optional[int] = None
) -> CubicalComplex:
    """
    构造 Z_K(I,F) 的胞腔模型

    Args:
        complex_: 单纯复形 K
        m: 每个坐标的标记点个数 (m₁,…,m_n)
        max_cells: 胞腔总数上限，默认取配置 POLYPROD_MAX_CELLS

    Returns:
        CubicalComplex
    """
    marks = RankVector.of(m)
    if len(marks) != complex_.n:
        raise DimensionMismatch(f"标记向量长度 {len(marks)} 与顶点数 {complex_.n} 不一致")
    limit = max_cells if max_cells is not None else get_settings().max_cells

    expected = cell_count_formula(complex_, marks.m)
    total = sum(expected.values())
    if total > limit:
        raise CellLimitExceeded(total, limit)

    intervals = [MarkedInterval(x) for x in marks]
    layers: List[List[Cell]] = [[] for _ in range(complex_.dimension + 2)]
    for face in ((),) + complex_.faces:
        inside = set(face)
        choices = [
            iv.edges() if i + 1 in inside else iv.vertices() for i, iv in enumerate(intervals)
        ]
        layers[len(face)].extend(product(*choices))
    while len(layers) > 1 and not layers[-1]:
        layers.pop()
    for layer in layers:
        layer.sort()

    logger.debug(f"胞腔模型: K 维数 {complex_.dimension}, m={marks.m}, 各维胞腔数 {[len(x) for x in layers]}")
    return CubicalComplex(complex_, marks, layers)


def polyproduct_homology(
    complex_: SimplicialComplex, m: Sequence[int], reduced: bool = True
) -> List[HomologyGroup]:
    """Z_K(I,F) 的（约化）整系数同调"""
    return homology_of(build_polyproduct(complex_, m).chain_complex, reduced=reduced)
