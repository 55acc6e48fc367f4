"""
有界改写验证器
在长度 ≤ L 的全部字上做并查集，基本改写为:
  - 相邻同顶点音节合并（乘积为单位元时两者一并删去）及其逆操作
  - 相邻可交换音节互换
长度 ≤ L 的两个字表示同一元素时，可以先约化再交换再展开，路径长度不超过 L，
所以不需要插入单位元对
"""

import logging
from itertools import product as cartesian
from typing import Dict, List, Tuple

from networkx.utils import UnionFind

from src.graphprod.model import GraphProduct, Syllable

logger = logging.getLogger(__name__)

Word = Tuple[Syllable, ...]


def all_words(product: GraphProduct, max_syllables: int) -> List[Word]:
    """长度 ≤ max_syllables 的全部音节序列（不要求既约）"""
    alphabet = product.syllables()
    words: List[Word] = []
    for length in range(max_syllables + 1):
        words.extend(cartesian(alphabet, repeat=length))
    return words


def rewriting_classes(product: GraphProduct, max_syllables: int) -> List[List[Word]]:
    """按基本改写连通的等价类，每类内部排序，类按首元素排序"""
    words = all_words(product, max_syllables)
    classes = UnionFind(words)
    for word in words:
        for i in range(len(word) - 1):
            (u, x), (v, y) = word[i], word[i + 1]
            if u == v:
                merged = product.factor(u).mul(x, y)
                shorter = word[:i] + word[i + 2:] if merged == 0 else word[:i] + ((u, merged),) + word[i + 2:]
                classes.union(word, shorter)
            elif product.graph.adjacent(u, v):
                classes.union(word, word[:i] + (word[i + 1], word[i]) + word[i + 2:])

    grouped: Dict[Word, List[Word]] = {}
    for word in words:
        grouped.setdefault(classes[word], []).append(word)
    result = sorted((sorted(ws, key=lambda w: (len(w), w)) for ws in grouped.values()), key=lambda ws: (len(ws[0]), ws[0]))
    logger.debug(f"长度 ≤ {max_syllables} 的 {len(words)} 个字分成 {len(result)} 类")
    return result
