"""
链复形与整系数同调
H_d = ker ∂_d / im ∂_{d+1}，由 Smith 标准形的秩与不变因子给出
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from sympy import factorint

from src.errors import NotAComplex
from src.homology.snf import IntegerMatrix, smith_normal_form
from src.simplicial.model import SimplicialComplex

logger = logging.getLogger(__name__)


def normalize_torsion(orders: Iterable[int]) -> Tuple[int, ...]:
    """把任意有限循环群的直和整理为不变因子形式 (d₁ | d₂ | …, 每个 ≥ 2)"""
    by_prime: Dict[int, List[int]] = defaultdict(list)
    for order in orders:
        if order < 1:
            raise ValueError(f"挠系数必须为正整数: {order}")
        for p, e in factorint(order).items():
            by_prime[p].append(p ** e)
    length = max((len(v) for v in by_prime.values()), default=0)
    factors = [1] * length
    for powers in by_prime.values():
        powers.sort()
        # 每个素数的最大幂次放在最后一个因子上
        for k, q in enumerate(reversed(powers)):
            factors[length - 1 - k] *= q
    return tuple(f for f in factors if f > 1)


@dataclass(frozen=True)
class HomologyGroup:
    """有限生成阿贝尔群 ℤ^betti ⊕ ⨁ ℤ/t"""

    betti: int = 0
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.betti < 0:
            raise ValueError(f"Betti 数不能为负: {self.betti}")
        if any(t < 2 for t in self.torsion) or any(
            b % a for a, b in zip(self.torsion, self.torsion[1:])
        ):
            raise ValueError(f"挠系数不满足整除链: {self.torsion}")

    @property
    def is_trivial(self) -> bool:
        return self.betti == 0 and not self.torsion

    def __add__(self, other: "HomologyGroup") -> "HomologyGroup":
        return HomologyGroup(
            self.betti + other.betti, normalize_torsion(self.torsion + other.torsion)
        )

    def scaled(self, copies: int) -> "HomologyGroup":
        """copies 个自身的直和"""
        return HomologyGroup(self.betti * copies, normalize_torsion(self.torsion * copies))

    def __str__(self) -> str:
        parts = []
        if self.betti == 1:
            parts.append("Z")
        elif self.betti > 1:
            parts.append(f"Z^{self.betti}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {"betti": self.betti, "torsion": list(self.torsion)}


@dataclass(frozen=True)
class ChainComplex:
    """
    dims[d] 为 d 维链群的秩；boundaries[d]: C_d → C_{d-1}，形状 dims[d-1] × dims[d]
    （boundaries[0] 为 0 × dims[0]）
    """

    dims: Tuple[int, ...]
    boundaries: Tuple[IntegerMatrix, ...]

    def __post_init__(self):
        if len(self.dims) != len(self.boundaries):
            raise NotAComplex("链群个数与边界矩阵个数不一致")
        for d, matrix in enumerate(self.boundaries):
            expected_rows = self.dims[d - 1] if d > 0 else 0
            if (matrix.rows, matrix.cols) != (expected_rows, self.dims[d]):
                raise NotAComplex(
                    f"∂_{d} 形状为 {matrix.rows}x{matrix.cols}，期望 {expected_rows}x{self.dims[d]}"
                )

    def check(self) -> None:
        """验证 ∂_{d-1} ∂_d = 0"""
        for d in range(2, len(self.dims)):
            if not (self.boundaries[d - 1] @ self.boundaries[d]).is_zero():
                raise NotAComplex(f"∂_{d - 1}∂_{d} ≠ 0")


def homology_of(chain: ChainComplex, reduced: bool = False) -> List[HomologyGroup]:
    """各维整系数同调群；reduced 时 0 维秩减 1（增广）"""
    chain.check()
    forms = [smith_normal_form(b) for b in chain.boundaries]
    groups: List[HomologyGroup] = []
    for d, dim in enumerate(chain.dims):
        cycles = dim - forms[d].rank
        if d + 1 < len(forms):
            boundary_rank = forms[d + 1].rank
            torsion = forms[d + 1].torsion
        else:
            boundary_rank, torsion = 0, ()
        betti = cycles - boundary_rank
        if d == 0 and reduced and dim > 0:
            betti -= 1
        groups.append(HomologyGroup(betti, normalize_torsion(torsion)))
    logger.debug(f"同调计算完成: 链群维数 {list(chain.dims)}")
    return groups


def simplicial_chain_complex(complex_: SimplicialComplex) -> ChainComplex:
    """按升序顶点定向的单纯链复形，∂[v₀…v_k] = Σ (-1)^i [v₀…v̂_i…v_k]"""
    by_dim: List[List[Tuple[int, ...]]] = [complex_.faces_of_dim(d) for d in range(complex_.dimension + 1)]
    index = [{face: i for i, face in enumerate(faces)} for faces in by_dim]

    boundaries = [IntegerMatrix.zeros(0, len(by_dim[0]))]
    for d in range(1, len(by_dim)):
        values: Dict[Tuple[int, int], int] = {}
        for j, face in enumerate(by_dim[d]):
            for i in range(len(face)):
                values[(index[d - 1][face[:i] + face[i + 1:]], j)] = (-1) ** i
        boundaries.append(IntegerMatrix.from_sparse(len(by_dim[d - 1]), len(by_dim[d]), values))
    return ChainComplex(tuple(len(f) for f in by_dim), tuple(boundaries))


def reduced_homology(complex_: SimplicialComplex) -> List[HomologyGroup]:
    """单纯复形的约化同调 H̃_0 .. H̃_{dim K}"""
    return homology_of(simplicial_chain_complex(complex_), reduced=True)


def same_homology(a: Sequence[HomologyGroup], b: Sequence[HomologyGroup]) -> bool:
    """逐维比较，末尾缺失的维数视为平凡群"""
    length = max(len(a), len(b))
    pad = HomologyGroup()
    return all(
        (a[d] if d < len(a) else pad) == (b[d] if d < len(b) else pad) for d in range(length)
    )
