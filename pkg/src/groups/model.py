"""
有限群与子群
群由乘法表给出，元素编号 0..n−1，0 号为单位元；table[a][b] = a·b
"""

import logging
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from sympy.combinatorics import Permutation

from src.config import get_settings
from src.errors import (
    InvalidPermutation,
    NoIdentity,
    NotAssociative,
    NotClosed,
    NotLatinSquare,
)

logger = logging.getLogger(__name__)

# 元素个数不超过该值时穷举验证结合律，否则随机抽样
EXHAUSTIVE_ASSOCIATIVITY_LIMIT = 64


def _cycle_name(array_form: Sequence[int]) -> str:
    """置换的轮换记号（1 起始），单位置换记为 ()"""
    seen = set()
    cycles = []
    for start in range(len(array_form)):
        if start in seen or array_form[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        nxt = array_form[start]
        while nxt != start:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = array_form[nxt]
        cycles.append("(" + " ".join(str(x + 1) for x in cycle) + ")")
    return "".join(cycles) or "()"


@dataclass(frozen=True)
class FiniteGroup:
    """有限群（乘法表表示）"""

    table: Tuple[Tuple[int, ...], ...]
    names: Tuple[str, ...]

    @classmethod
    def from_cayley(
        cls,
        table: Sequence[Sequence[int]],
        names: Optional[Sequence[str]] = None,
        seed: Optional[int] = None,
    ) -> "FiniteGroup":
        """
        由乘法表构造并校验

        Args:
            table: n×n 乘法表，0 号元素为单位元
            names: 元素名称，缺省为 "0".."n-1"
            seed: 大群结合律抽样的随机种子，缺省取配置
        """
        n = len(table)
        if n == 0:
            raise NoIdentity("乘法表为空")
        rows = []
        for a, row in enumerate(table):
            if len(row) != n:
                raise NotClosed(f"乘法表第 {a} 行长度为 {len(row)}，应为 {n}")
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n:
                    raise NotClosed(f"乘积 {x!r} 不在元素集合 0..{n - 1} 中")
            rows.append(tuple(row))
        if any(rows[0][b] != b or rows[b][0] != b for b in range(n)):
            raise NoIdentity("0 号元素不是单位元")
        full = set(range(n))
        for a in range(n):
            if set(rows[a]) != full:
                raise NotLatinSquare(f"乘法表第 {a} 行不是置换")
            if {rows[b][a] for b in range(n)} != full:
                raise NotLatinSquare(f"乘法表第 {a} 列不是置换")
        _check_associative(rows, seed)

        if names is None:
            names = [str(i) for i in range(n)]
        if len(names) != n or len(set(names)) != n:
            raise NotClosed("元素名称个数不符或有重复")
        return cls(tuple(rows), tuple(str(x) for x in names))

    @classmethod
    def from_permutations(cls, degree: int, generators: Sequence[Sequence[Sequence[int]]]) -> "FiniteGroup":
        """
        由置换生成元构造

        Args:
            degree: 置换作用的点数
            generators: 每个生成元是若干轮换，轮换用 1 起始的点编号

        元素顺序: 单位元，然后按生成元顺序做广度优先闭包。
        乘法约定: a·b 表示先作用 a 再作用 b。
        """
        perms = [_parse_permutation(degree, cycles) for cycles in generators]
        identity = Permutation(list(range(degree)))
        elements: List[Permutation] = [identity]
        index: Dict[Tuple[int, ...], int] = {tuple(identity.array_form): 0}
        frontier = [identity]
        while frontier:
            next_frontier = []
            for x in frontier:
                for g in perms:
                    y = x * g
                    key = tuple(y.array_form)
                    if key not in index:
                        index[key] = len(elements)
                        elements.append(y)
                        next_frontier.append(y)
            frontier = next_frontier
        logger.debug(f"置换群闭包完成: 次数 {degree}, 阶 {len(elements)}")

        table = [[index[tuple((x * y).array_form)] for y in elements] for x in elements]
        names = [_cycle_name(x.array_form) for x in elements]
        return cls.from_cayley(table, names)

    # ---- 基本运算 ----

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def identity(self) -> int:
        return 0

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def inverses(self) -> Tuple[int, ...]:
        return tuple(row.index(0) for row in self.table)

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def product(self, items: Iterable[int]) -> int:
        result = 0
        for x in items:
            result = self.table[result][x]
        return result

    def commutator(self, a: int, b: int) -> int:
        """[a,b] = a⁻¹b⁻¹ab"""
        return self.product((self.inv(a), self.inv(b), a, b))

    def commute(self, a: int, b: int) -> bool:
        return self.table[a][b] == self.table[b][a]

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    @cached_property
    def is_abelian(self) -> bool:
        return all(self.commute(a, b) for a in self.elements for b in range(a))

    def name(self, a: int) -> str:
        return self.names[a]

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise NotClosed(f"群中没有名为 {name!r} 的元素") from None

    # ---- 子群 ----

    def whole(self) -> "Subgroup":
        return Subgroup(self, frozenset(self.elements))

    def trivial(self) -> "Subgroup":
        return Subgroup(self, frozenset({0}))

    def subgroup(self, elements: Iterable[int]) -> "Subgroup":
        """由元素集合构造子群，并验证封闭性"""
        items = frozenset(elements)
        if 0 not in items:
            raise NotClosed("子群必须包含单位元")
        for a in items:
            if not 0 <= a < self.order:
                raise NotClosed(f"元素序号 {a} 超出范围")
            if self.inv(a) not in items:
                raise NotClosed(f"元素 {self.name(a)} 的逆不在子群中")
            for b in items:
                if self.table[a][b] not in items:
                    raise NotClosed(f"{self.name(a)}·{self.name(b)} 不在子群中")
        return Subgroup(self, items)

    def generated_subgroup(self, generators: Iterable[int]) -> "Subgroup":
        """⟨generators⟩"""
        gens = [g for g in set(generators) if g != 0]
        found = {0}
        frontier = [0]
        while frontier:
            next_frontier = []
            for x in frontier:
                for g in gens:
                    y = self.table[x][g]
                    if y not in found:
                        found.add(y)
                        next_frontier.append(y)
            frontier = next_frontier
        return Subgroup(self, frozenset(found))

    def describe(self) -> dict:
        return {"order": self.order, "abelian": self.is_abelian}


@dataclass(frozen=True)
class Subgroup:
    """群 parent 的子群"""

    parent: FiniteGroup
    members: FrozenSet[int]

    @property
    def elements(self) -> List[int]:
        return sorted(self.members)

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, a: int) -> bool:
        return a in self.members

    def __le__(self, other: "Subgroup") -> bool:
        return self.members <= other.members

    def __lt__(self, other: "Subgroup") -> bool:
        return self.members < other.members

    def __and__(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.parent, self.members & other.members)

    @property
    def is_trivial(self) -> bool:
        return self.members == {0}

    @cached_property
    def is_abelian(self) -> bool:
        return all(self.parent.commute(a, b) for a in self.members for b in self.members)

    def is_normal(self) -> bool:
        g = self.parent
        return all(g.product((g.inv(x), h, x)) in self.members for x in g.elements for h in self.members)

    def names(self) -> List[str]:
        return [self.parent.name(a) for a in self.elements]

    def sort_key(self) -> Tuple[int, List[int]]:
        return self.order, self.elements

    def as_group(self) -> Tuple[FiniteGroup, List[int]]:
        """子群作为独立的群（单位元编号为 0），同时返回嵌入映射 新序号→原序号"""
        embedding = self.elements
        local = {a: i for i, a in enumerate(embedding)}
        table = [[local[self.parent.mul(a, b)] for b in embedding] for a in embedding]
        names = [self.parent.name(a) for a in embedding]
        return FiniteGroup(tuple(tuple(r) for r in table), tuple(names)), embedding

    def __repr__(self) -> str:
        return "{" + ", ".join(self.names()) + "}"


def _parse_permutation(degree: int, cycles: Sequence[Sequence[int]]) -> Permutation:
    zero_based = []
    for cycle in cycles:
        for x in cycle:
            if not isinstance(x, int) or isinstance(x, bool) or not 1 <= x <= degree:
                raise InvalidPermutation(f"轮换中的点 {x!r} 不在 1..{degree} 范围内")
        if len(set(cycle)) != len(cycle):
            raise InvalidPermutation(f"轮换 {list(cycle)} 含重复点")
        if len(cycle) > 1:
            zero_based.append([x - 1 for x in cycle])
    # 多个轮换按从左到右依次作用
    return Permutation(zero_based, size=degree) if zero_based else Permutation(list(range(degree)))


def _check_associative(rows: List[Tuple[int, ...]], seed: Optional[int]) -> None:
    n = len(rows)
    if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT:
        for a in range(n):
            ra = rows[a]
            for b in range(n):
                ab = ra[b]
                rab = rows[ab]
                rb = rows[b]
                for c in range(n):
                    if rab[c] != ra[rb[c]]:
                        raise NotAssociative(a, b, c)
        return

    settings = get_settings()
    rng = random.Random(settings.seed if seed is None else seed)
    logger.warning(f"群的阶 {n} > {EXHAUSTIVE_ASSOCIATIVITY_LIMIT}，结合律按 {settings.assoc_samples} 个随机三元组抽样验证")
    for _ in range(settings.assoc_samples):
        a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
        if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
            raise NotAssociative(a, b, c)
