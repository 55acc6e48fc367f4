"""
图积中的字运算

规范形分两步:
  1. 逐个追加音节并约化：新音节向左越过与之相邻（可交换）的音节，
     遇到同一顶点的音节则合并，合并为单位元时删去；得到既约字
  2. 既约字之间只差相邻可交换音节的交换，取依赖关系下顶点编号字典序最小的排列
"""

import logging
from typing import Iterable, List, Optional, Sequence

import networkx as nx

from src.groups.model import FiniteGroup
from src.graphprod.model import GraphProduct, GraphProductWord, Syllable
from src.polymodel.ranks import rank_closed_form

logger = logging.getLogger(__name__)


def _append(product: GraphProduct, syllables: List[Syllable], syllable: Syllable) -> None:
    v, x = syllable
    j = len(syllables) - 1
    while j >= 0:
        u, y = syllables[j]
        if u == v:
            merged = product.factor(v).mul(y, x)
            if merged == 0:
                del syllables[j]
            else:
                syllables[j] = (v, merged)
            return
        if not product.graph.adjacent(u, v):
            break
        j -= 1
    syllables.append(syllable)


def _reduce(product: GraphProduct, syllables: Iterable[Syllable], start: Sequence[Syllable] = ()) -> List[Syllable]:
    result = list(start)
    for syllable in syllables:
        product.check_syllable(syllable)
        _append(product, result, syllable)
    return result


def _canonical_order(product: GraphProduct, syllables: List[Syllable]) -> GraphProductWord:
    """既约字的依赖图中，每次取可用音节里顶点编号最小的"""
    dag = nx.DiGraph()
    dag.add_nodes_from(range(len(syllables)))
    for i in range(len(syllables)):
        for j in range(i + 1, len(syllables)):
            if not product.graph.adjacent(syllables[i][0], syllables[j][0]):
                dag.add_edge(i, j)
    order = nx.lexicographical_topological_sort(dag, key=lambda i: (syllables[i][0], i))
    return GraphProductWord(tuple(syllables[i] for i in order))


def normal_form(product: GraphProduct, word: GraphProductWord) -> GraphProductWord:
    """规范形；两个字表示同一元素当且仅当规范形相同"""
    return _canonical_order(product, _reduce(product, word.syllables))


def multiply(product: GraphProduct, w1: GraphProductWord, w2: GraphProductWord) -> GraphProductWord:
    return _canonical_order(product, _reduce(product, w2.syllables, _reduce(product, w1.syllables)))


def invert(product: GraphProduct, word: GraphProductWord) -> GraphProductWord:
    inverse = [(v, product.factor(v).inv(x)) for v, x in reversed(word.syllables)]
    return normal_form(product, GraphProductWord(tuple(inverse)))


def equal(product: GraphProduct, w1: GraphProductWord, w2: GraphProductWord) -> bool:
    return normal_form(product, w1) == normal_form(product, w2)


def enumerate_elements(product: GraphProduct, max_syllables: int) -> List[GraphProductWord]:
    """既约长度不超过 max_syllables 的全部元素（规范形），按 (长度, 音节) 排序"""
    found = {GraphProductWord()}
    frontier = [GraphProductWord()]
    alphabet = product.syllables()
    for _ in range(max_syllables):
        next_frontier = []
        for word in frontier:
            for syllable in alphabet:
                extended = normal_form(product, GraphProductWord(word.syllables + (syllable,)))
                if extended not in found:
                    found.add(extended)
                    next_frontier.append(extended)
        if not next_frontier:
            break
        frontier = next_frontier
    logger.debug(f"长度 ≤ {max_syllables} 的规范形共 {len(found)} 个")
    return sorted(found, key=lambda w: (len(w), w.syllables))


def evaluate(
    word: GraphProductWord,
    ambient: FiniteGroup,
    embeddings: Sequence[Sequence[int]],
) -> int:
    """
    映射 φ: 把音节 (v, x) 送到 embeddings[v-1][x]，在 ambient 中相乘

    embeddings 一般取自 Subgroup.as_group()
    """
    return ambient.product(embeddings[v - 1][x] for v, x in word.syllables)


def kernel_free_rank(product: GraphProduct) -> Optional[int]:
    """
    离散图上 ker(G₁∗…∗G_r → G₁×…×G_r) 的自由秩；有边时返回 None
    """
    if not product.graph.is_edgeless:
        return None
    return rank_closed_form([g.order for g in product.factors])
