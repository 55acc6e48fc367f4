"""
常用有限群的构造
所有构造最终都经过 FiniteGroup.from_cayley 校验
"""

import logging
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from src.errors import GroupValidationError
from src.groups.model import FiniteGroup

logger = logging.getLogger(__name__)


def _power(letter: str, k: int) -> str:
    if k == 0:
        return ""
    return letter if k == 1 else f"{letter}^{k}"


def _word(*parts: str) -> str:
    return "".join(p for p in parts if p) or "e"


def _build(elements: List, mul: Callable, names: Sequence[str]) -> FiniteGroup:
    """由元素列表（单位元在首位）和乘法函数生成乘法表"""
    index = {x: i for i, x in enumerate(elements)}
    table = [[index[mul(x, y)] for y in elements] for x in elements]
    return FiniteGroup.from_cayley(table, names)


def cyclic(n: int) -> FiniteGroup:
    """ℤ/n，元素 k 记为 a^k"""
    if n < 1:
        raise GroupValidationError(f"循环群的阶必须为正整数: {n}")
    elements = list(range(n))
    return _build(elements, lambda x, y: (x + y) % n, [_word(_power("a", k)) for k in elements])


def direct_product(*groups: FiniteGroup) -> FiniteGroup:
    """直积，元素为各分量的元组，按字典序编号"""
    elements: List[Tuple[int, ...]] = [()]
    for g in groups:
        elements = [x + (y,) for x in elements for y in g.elements]

    def mul(x, y):
        return tuple(g.mul(a, b) for g, a, b in zip(groups, x, y))

    names = ["(" + ",".join(g.name(a) for g, a in zip(groups, x)) + ")" for x in elements]
    return _build(elements, mul, names)


def abelian(*orders: int) -> FiniteGroup:
    """循环群的直积 ℤ/n₁ × … × ℤ/n_k"""
    if len(orders) == 1:
        return cyclic(orders[0])
    return direct_product(*(cyclic(n) for n in orders))


def metacyclic(m: int, n: int, r: int) -> FiniteGroup:
    """
    ℤ/m ⋊ ℤ/n = ⟨a, b | a^m = b^n = 1, b a b⁻¹ = a^r⟩

    元素写作 a^i b^j；要求 r^n ≡ 1 (mod m)
    """
    if pow(r, n, m) != 1 % m:
        raise GroupValidationError(f"r={r} 不满足 r^{n} ≡ 1 (mod {m})")
    elements = [(i, j) for j in range(n) for i in range(m)]

    def mul(x, y):
        (i, j), (k, l) = x, y
        return ((i + pow(r, j, m) * k) % m, (j + l) % n)

    names = [_word(_power("a", i), _power("b", j)) for i, j in elements]
    return _build(elements, mul, names)


def dihedral(n: int) -> FiniteGroup:
    """正 n 边形的对称群 D_n，阶 2n"""
    return metacyclic(n, 2, n - 1)


def dicyclic(n: int) -> FiniteGroup:
    """
    双循环群 Dic_n（阶 4n）: ⟨a, b | a^{2n} = 1, b² = a^n, b a b⁻¹ = a⁻¹⟩
    n 为 2 的幂时即广义四元数群
    """
    order_a = 2 * n
    elements = [(i, j) for j in range(2) for i in range(order_a)]

    def mul(x, y):
        (i, j), (k, l) = x, y
        shift = n if j == 1 and l == 1 else 0
        return ((i + (k if j == 0 else -k) + shift) % order_a, j ^ l)

    names = [_word(_power("a", i), _power("b", j)) for i, j in elements]
    return _build(elements, mul, names)


# 四元数单位的乘法：(符号, 基) × (符号, 基)
_UNIT_PRODUCTS: Dict[Tuple[str, str], Tuple[int, str]] = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def quaternion() -> FiniteGroup:
    """四元数群 Q8，元素名 1, -1, i, -i, j, -j, k, -k"""
    elements = [(s, b) for b in "1ijk" for s in (1, -1)]

    def mul(x, y):
        sign, basis = _UNIT_PRODUCTS[(x[1], y[1])]
        return (x[0] * y[0] * sign, basis)

    names = [("" if s == 1 else "-") + b for s, b in elements]
    return _build(elements, mul, names)


def semidirect_cyclic(normal: FiniteGroup, k: int, automorphism: Sequence[int]) -> FiniteGroup:
    """
    N ⋊ ℤ/k，生成元 b 通过给定自同构作用在 N 上

    Args:
        normal: 正规子群 N
        k: 循环部分的阶
        automorphism: N 的自同构，按元素序号给出像；其 k 次幂必须为恒等
    """
    auto = list(automorphism)
    if sorted(auto) != list(normal.elements):
        raise GroupValidationError("自同构必须是元素集合上的双射")
    for x in normal.elements:
        for y in normal.elements:
            if auto[normal.mul(x, y)] != normal.mul(auto[x], auto[y]):
                raise GroupValidationError("给定映射不是同态")
    powers = [list(normal.elements)]
    for _ in range(k):
        powers.append([auto[x] for x in powers[-1]])
    if powers[k] != powers[0]:
        raise GroupValidationError(f"自同构的 {k} 次幂不是恒等映射")

    elements = [(x, j) for j in range(k) for x in normal.elements]

    def mul(p, q):
        (x, i), (y, j) = p, q
        return (normal.mul(x, powers[i][y]), (i + j) % k)

    names = [normal.name(x) if j == 0 else f"{normal.name(x)}{_power('b', j)}" for x, j in elements]
    return _build(elements, mul, names)


def symmetric(n: int) -> FiniteGroup:
    """S_n，由 (1 2) 和 (1 2 … n) 生成"""
    if n <= 1:
        return FiniteGroup.from_permutations(1, [])
    gens = [[[1, 2]], [list(range(1, n + 1))]] if n > 2 else [[[1, 2]]]
    return FiniteGroup.from_permutations(n, gens)


def alternating(n: int) -> FiniteGroup:
    """A_n，由 3-轮换 (1 2 k) 生成"""
    if n <= 2:
        return FiniteGroup.from_permutations(max(n, 1), [])
    return FiniteGroup.from_permutations(n, [[[1, 2, k]] for k in range(3, n + 1)])


def _z4_z2_shear() -> FiniteGroup:
    # ℤ/4×ℤ/2 的元素序号为 2a+b
    base = abelian(4, 2)
    return semidirect_cyclic(base, 2, [2 * a + (b + a) % 2 for a in range(4) for b in range(2)])


def _pauli() -> FiniteGroup:
    base = abelian(4, 2)
    return semidirect_cyclic(base, 2, [2 * ((a + 2 * b) % 4) + b for a in range(4) for b in range(2)])


# (阶, 名称, 构造函数)；每个同构类一个代表
_SMALL_GROUPS: List[Tuple[int, str, Callable[[], FiniteGroup]]] = [
    (1, "1", lambda: cyclic(1)),
    (2, "Z2", lambda: cyclic(2)),
    (3, "Z3", lambda: cyclic(3)),
    (4, "Z4", lambda: cyclic(4)),
    (4, "Z2xZ2", lambda: abelian(2, 2)),
    (5, "Z5", lambda: cyclic(5)),
    (6, "Z6", lambda: cyclic(6)),
    (6, "S3", lambda: symmetric(3)),
    (7, "Z7", lambda: cyclic(7)),
    (8, "Z8", lambda: cyclic(8)),
    (8, "Z4xZ2", lambda: abelian(4, 2)),
    (8, "Z2xZ2xZ2", lambda: abelian(2, 2, 2)),
    (8, "D4", lambda: dihedral(4)),
    (8, "Q8", quaternion),
    (9, "Z9", lambda: cyclic(9)),
    (9, "Z3xZ3", lambda: abelian(3, 3)),
    (10, "Z10", lambda: cyclic(10)),
    (10, "D5", lambda: dihedral(5)),
    (11, "Z11", lambda: cyclic(11)),
    (12, "Z12", lambda: cyclic(12)),
    (12, "Z2xZ6", lambda: abelian(2, 6)),
    (12, "D6", lambda: dihedral(6)),
    (12, "A4", lambda: alternating(4)),
    (12, "Dic3", lambda: dicyclic(3)),
    (13, "Z13", lambda: cyclic(13)),
    (14, "Z14", lambda: cyclic(14)),
    (14, "D7", lambda: dihedral(7)),
    (15, "Z15", lambda: cyclic(15)),
    (16, "Z16", lambda: cyclic(16)),
    (16, "Z8xZ2", lambda: abelian(8, 2)),
    (16, "Z4xZ4", lambda: abelian(4, 4)),
    (16, "Z4xZ2xZ2", lambda: abelian(4, 2, 2)),
    (16, "Z2xZ2xZ2xZ2", lambda: abelian(2, 2, 2, 2)),
    (16, "(Z4xZ2):Z2", _z4_z2_shear),
    (16, "Pauli", _pauli),
    (16, "Z4:Z4", lambda: metacyclic(4, 4, 3)),
    (16, "M16", lambda: metacyclic(8, 2, 5)),
    (16, "D8", lambda: dihedral(8)),
    (16, "SD16", lambda: metacyclic(8, 2, 3)),
    (16, "Q16", lambda: dicyclic(4)),
    (16, "Z2xD4", lambda: direct_product(cyclic(2), dihedral(4))),
    (16, "Z2xQ8", lambda: direct_product(cyclic(2), quaternion())),
]


def small_groups(max_order: int = 16, min_order: int = 1) -> Dict[str, FiniteGroup]:
    """阶在 [min_order, max_order] 内的全部群（max_order ≤ 16），按阶排序"""
    if max_order > 16:
        raise GroupValidationError(f"内置小群表只收录到 16 阶: {max_order}")
    groups = {}
    for order, label, factory in _SMALL_GROUPS:
        if min_order <= order <= max_order:
            groups[label] = factory()
    logger.debug(f"构造了 {len(groups)} 个 {min_order}..{max_order} 阶的群")
    return groups


NAMED_GROUPS: Dict[str, Callable[[], FiniteGroup]] = {
    "S3": lambda: symmetric(3),
    "D4": lambda: dihedral(4),
    "D5": lambda: dihedral(5),
    "Q8": quaternion,
    "A4": lambda: alternating(4),
    "S4": lambda: symmetric(4),
}


def named_group(name: str) -> Optional[FiniteGroup]:
    factory = NAMED_GROUPS.get(name)
    return factory() if factory else None
