"""
小规模复形枚举
列出顶点集 [n] 上包含全部单点的所有单纯复形（不按同构约化）
"""

from itertools import combinations
from typing import Iterator, List, Set, Tuple

from src.simplicial.model import SimplicialComplex


def enumerate_complexes(n: int) -> Iterator[SimplicialComplex]:
    """
    按大小递增逐个决定 [n] 的 ≥2 元子集是否为面；
    只有当所有余维 1 的子集都已是面时才允许加入，保证向下封闭。

    n = 1..5 时分别得到 1, 2, 9, 114, 6894 个复形。
    """
    candidates: List[Tuple[int, ...]] = [
        s for k in range(2, n + 1) for s in combinations(range(1, n + 1), k)
    ]
    singletons = [(v,) for v in range(1, n + 1)]

    def extend(index: int, chosen: Set[Tuple[int, ...]]) -> Iterator[SimplicialComplex]:
        if index == len(candidates):
            yield SimplicialComplex.from_facets(n, singletons + sorted(chosen))
            return
        subset = candidates[index]
        # 不加入
        yield from extend(index + 1, chosen)
        allowed = len(subset) == 2 or all(
            subset[:i] + subset[i + 1:] in chosen for i in range(len(subset))
        )
        if allowed:
            chosen.add(subset)
            yield from extend(index + 1, chosen)
            chosen.discard(subset)

    yield from extend(0, set())
