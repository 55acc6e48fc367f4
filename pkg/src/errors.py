"""
错误类型定义
每个错误类携带独立的退出码，供命令行前端使用
"""


class PolyprodError(Exception):
    """所有库错误的基类"""

    exit_code = 1


class InputParseError(PolyprodError, ValueError):
    """输入文件格式错误（带行号/列号）"""

    exit_code = 2

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        if line:
            message = f"{message} (第 {line} 行, 第 {column} 列)"
        super().__init__(message)


class DimensionMismatch(PolyprodError, ValueError):
    """顶点数、标记数或子群数量不一致"""

    exit_code = 3


class GroupValidationError(PolyprodError, ValueError):
    """群数据校验失败"""

    exit_code = 4


class NotAssociative(GroupValidationError):
    def __init__(self, a: int, b: int, c: int):
        self.triple = (a, b, c)
        super().__init__(f"乘法表不满足结合律: ({a}*{b})*{c} != {a}*({b}*{c})")


class NoIdentity(GroupValidationError):
    pass


class NotClosed(GroupValidationError):
    pass


class NotLatinSquare(GroupValidationError):
    pass


class InvalidPermutation(GroupValidationError):
    pass


class CellLimitExceeded(PolyprodError):
    """胞腔数量超过上限"""

    exit_code = 5

    def __init__(self, count: int, limit: int):
        self.count = count
        self.limit = limit
        super().__init__(f"胞腔数量 {count} 超过上限 {limit} (POLYPROD_MAX_CELLS)")


class ComplexValidationError(PolyprodError, ValueError):
    """单纯复形数据校验失败"""

    exit_code = 6


class VertexNotCovered(ComplexValidationError):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"顶点 {vertex} 不属于任何面")


class OutOfRange(ComplexValidationError):
    pass


class EmptyIndexSet(PolyprodError, ValueError):
    exit_code = 7


class NotAComplex(PolyprodError, ValueError):
    """边界矩阵不满足 ∂∂ = 0"""

    exit_code = 8


class AbelianInput(PolyprodError, ValueError):
    exit_code = 9


class CenterNonTrivial(PolyprodError, ValueError):
    exit_code = 10


class NotKTC(PolyprodError, ValueError):
    exit_code = 11


class HypothesisUnmet(PolyprodError, ValueError):
    exit_code = 12

    def __init__(self, message: str, index: int):
        self.index = index
        super().__init__(f"{message} (子群序号 {index})")


class InvalidSyllable(PolyprodError, ValueError):
    exit_code = 13


class SmithFormError(PolyprodError):
    """Smith 标准形验证失败: U·M·V 不等于对角矩阵"""

    exit_code = 14
