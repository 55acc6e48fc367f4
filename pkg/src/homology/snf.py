"""
整数矩阵的 Smith 标准形
使用 Python 任意精度整数；主元取绝对值最小的非零元
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple

from src.errors import SmithFormError

logger = logging.getLogger(__name__)

Rows = List[List[int]]


@dataclass(frozen=True)
class IntegerMatrix:
    """rows × cols 整数矩阵，按行优先存储"""

    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0 or len(self.entries) != self.rows * self.cols:
            raise ValueError(f"矩阵尺寸 {self.rows}x{self.cols} 与元素个数 {len(self.entries)} 不符")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntegerMatrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        entries: List[int] = []
        for row in rows:
            if len(row) != cols:
                raise ValueError("各行长度不一致")
            entries.extend(int(x) for x in row)
        return cls(len(rows), cols, tuple(entries))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, size: int) -> "IntegerMatrix":
        return cls.from_rows([[int(i == j) for j in range(size)] for i in range(size)], size)

    @classmethod
    def from_sparse(cls, rows: int, cols: int, values: Dict[Tuple[int, int], int]) -> "IntegerMatrix":
        entries = [0] * (rows * cols)
        for (i, j), v in values.items():
            entries[i * cols + j] = v
        return cls(rows, cols, tuple(entries))

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.cols + j]

    def to_rows(self) -> Rows:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError(f"矩阵乘法尺寸不符: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        left = self.to_rows()
        right = other.to_rows()
        product = [
            [sum(left[i][k] * right[k][j] for k in range(self.cols) if left[i][k]) for j in range(other.cols)]
            for i in range(self.rows)
        ]
        return IntegerMatrix.from_rows(product, other.cols)

    def is_zero(self) -> bool:
        return not any(self.entries)


@dataclass(frozen=True)
class SmithForm:
    """
    Smith 标准形结果

    invariant_factors: d₁ | d₂ | … | d_r，均为正数（包含 1）
    left, right: 仅在请求变换时给出，满足 left · M · right = diag(d)
    """

    invariant_factors: Tuple[int, ...]
    rank: int
    left: Optional[IntegerMatrix] = None
    right: Optional[IntegerMatrix] = None

    @property
    def torsion(self) -> Tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d > 1)


def smith_normal_form(
    matrix: IntegerMatrix, transforms: bool = False, verify: bool = False
) -> SmithForm:
    """
    计算 Smith 标准形

    Args:
        matrix: 整数矩阵
        transforms: 是否同时返回幺模变换 U, V
        verify: 验证 U·M·V = diag(d)（隐含 transforms）

    Returns:
        SmithForm
    """
    if verify:
        transforms = True
    if matrix.rows == 0 or matrix.cols == 0:
        return SmithForm(
            (), 0,
            IntegerMatrix.identity(matrix.rows) if transforms else None,
            IntegerMatrix.identity(matrix.cols) if transforms else None,
        )

    if transforms:
        factors, left, right = _dense_snf(matrix.to_rows(), matrix.rows, matrix.cols, True)
        result = SmithForm(
            tuple(factors), len(factors),
            IntegerMatrix.from_rows(left, matrix.rows),
            IntegerMatrix.from_rows(right, matrix.cols),
        )
        if verify:
            _verify(matrix, result)
        return result

    # 先消去 ±1 主元（稀疏 Schur 补），剩余部分再做稠密约化
    unit_pivots, rest, rest_rows, rest_cols = _eliminate_units(matrix)
    factors, _, _ = _dense_snf(rest, rest_rows, rest_cols, False)
    factors = [1] * unit_pivots + factors
    logger.debug(
        f"SNF {matrix.rows}x{matrix.cols}: 单位主元 {unit_pivots} 个, 剩余 {rest_rows}x{rest_cols}"
    )
    return SmithForm(tuple(factors), len(factors))


def _verify(matrix: IntegerMatrix, form: SmithForm) -> None:
    product = form.left @ matrix @ form.right
    for i in range(product.rows):
        for j in range(product.cols):
            expected = form.invariant_factors[i] if i == j and i < form.rank else 0
            if product[i, j] != expected:
                raise SmithFormError(f"U·M·V 在 ({i},{j}) 处为 {product[i, j]}，期望 {expected}")


def _eliminate_units(matrix: IntegerMatrix) -> Tuple[int, Rows, int, int]:
    """
    反复选取值为 ±1 的元素作主元，用秩 1 更新删去其所在行列。
    以单位元为主元时 Schur 补仍是整数矩阵，且不改变其余不变因子。
    """
    rows: Dict[int, Dict[int, int]] = {}
    cols: Dict[int, Set[int]] = {}
    for i in range(matrix.rows):
        for j in range(matrix.cols):
            v = matrix[i, j]
            if v:
                rows.setdefault(i, {})[j] = v
                cols.setdefault(j, set()).add(i)

    pivots = 0
    while True:
        pivot = _find_unit(rows)
        if pivot is None:
            break
        pi, pj = pivot
        prow = rows.pop(pi)
        p = prow.pop(pj)
        cols[pj].discard(pi)
        for c in prow:
            cols[c].discard(pi)
        for r in sorted(cols.pop(pj)):
            row = rows[r]
            factor = row.pop(pj) * p
            for c, v in prow.items():
                new = row.get(c, 0) - factor * v
                if new:
                    if c not in row:
                        cols[c].add(r)
                    row[c] = new
                elif c in row:
                    del row[c]
                    cols[c].discard(r)
            if not row:
                del rows[r]
        pivots += 1

    live_rows = sorted(rows)
    live_cols = sorted({c for row in rows.values() for c in row})
    col_index = {c: k for k, c in enumerate(live_cols)}
    rest = [[0] * len(live_cols) for _ in live_rows]
    for k, r in enumerate(live_rows):
        for c, v in rows[r].items():
            rest[k][col_index[c]] = v
    return pivots, rest, len(live_rows), len(live_cols)


def _find_unit(rows: Dict[int, Dict[int, int]]) -> Optional[Tuple[int, int]]:
    for i in sorted(rows):
        for j in sorted(rows[i]):
            if rows[i][j] in (1, -1):
                return i, j
    return None


def _dense_snf(a: Rows, m: int, n: int, transforms: bool):
    """稠密 Smith 约化；返回 (不变因子, U, V)"""
    a = [row[:] for row in a]
    u = [[int(i == j) for j in range(m)] for i in range(m)] if transforms else None
    v = [[int(i == j) for j in range(n)] for i in range(n)] if transforms else None

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        if transforms:
            u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        if transforms:
            for row in v:
                row[j], row[k] = row[k], row[j]

    def add_row(target, source, q):
        # row_target += q * row_source
        a[target] = [x + q * y for x, y in zip(a[target], a[source])]
        if transforms:
            u[target] = [x + q * y for x, y in zip(u[target], u[source])]

    def add_col(target, source, q):
        for row in a:
            row[target] += q * row[source]
        if transforms:
            for row in v:
                row[target] += q * row[source]

    factors: List[int] = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])

        while True:
            p = a[t][t]
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))

            # 余数比主元小：把最小的余数换到主元位置继续
            smallest = None
            for i in range(t + 1, m):
                if a[i][t] and (smallest is None or abs(a[i][t]) < smallest[0]):
                    smallest = (abs(a[i][t]), "row", i)
            for j in range(t + 1, n):
                if a[t][j] and (smallest is None or abs(a[t][j]) < smallest[0]):
                    smallest = (abs(a[t][j]), "col", j)
            if smallest is not None:
                if smallest[1] == "row":
                    swap_rows(t, smallest[2])
                else:
                    swap_cols(t, smallest[2])
                continue

            # 主元须整除右下角所有元素
            bad_row = next(
                (i for i in range(t + 1, m) if any(a[i][j] % p for j in range(t + 1, n))),
                None,
            )
            if bad_row is None:
                break
            add_row(t, bad_row, 1)

        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if transforms:
                u[t] = [-x for x in u[t]]
        factors.append(a[t][t])
        t += 1

    return factors, u, v
