"""
复形文件读取
支持 JSON 格式和纯文本格式（第一行 n，之后每行一个面）
"""

import json
import logging
from pathlib import Path
from typing import List

from pydantic import ValidationError

from schema.input_models import ComplexFile
from src.errors import InputParseError
from src.simplicial.model import SimplicialComplex

logger = logging.getLogger(__name__)


def parse_complex_text(text: str) -> SimplicialComplex:
    """解析文本内容；首个非空字符为 '{' 时按 JSON 处理"""
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    return _parse_plain(text)


def load_complex(path: str) -> SimplicialComplex:
    """从文件加载复形"""
    text = Path(path).read_text(encoding="utf-8")
    complex_ = parse_complex_text(text)
    logger.debug(f"已加载复形 {path}: n={complex_.n}, 极大面 {len(complex_.facets)} 个")
    return complex_


def _parse_json(text: str) -> SimplicialComplex:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputParseError(f"JSON 解析失败: {e.msg}", e.lineno, e.colno) from e
    try:
        model = ComplexFile.model_validate(data)
    except ValidationError as e:
        raise InputParseError(f"复形文件结构错误: {e.errors()[0]['msg']}") from e
    return SimplicialComplex.from_facets(model.n, model.facets)


def _parse_plain(text: str) -> SimplicialComplex:
    lines = [(i + 1, line.strip()) for i, line in enumerate(text.splitlines())]
    lines = [(no, line) for no, line in lines if line and not line.startswith("#")]
    if not lines:
        raise InputParseError("文件为空")

    first_no, first = lines[0]
    n = _parse_int(first, first_no, 1)

    facets: List[List[int]] = []
    for no, line in lines[1:]:
        facet = []
        column = 1
        for token in line.split():
            column = line.index(token, column - 1) + 1
            facet.append(_parse_int(token, no, column))
            column += len(token)
        facets.append(facet)
    return SimplicialComplex.from_facets(n, facets)


def _parse_int(token: str, line: int, column: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise InputParseError(f"无法解析整数 {token!r}", line, column) from None
