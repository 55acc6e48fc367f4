"""
群文件与子群列表文件读取
"""

import json
import logging
from pathlib import Path
from typing import List, Optional, Union

from pydantic import ValidationError

from schema.input_models import GroupFile, SubgroupsFile
from src.errors import DimensionMismatch, InputParseError
from src.groups.centralizers import maximal_abelian_subgroups
from src.groups.model import FiniteGroup, Subgroup

logger = logging.getLogger(__name__)

# --subgroups 的关键字：使用群的全部极大交换子群
MAXIMAL_ABELIAN = "maximal-abelian"


def _load_json(text: str, what: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputParseError(f"{what} JSON 解析失败: {e.msg}", e.lineno, e.colno) from e


def parse_group_text(text: str, seed: Optional[int] = None) -> FiniteGroup:
    data = _load_json(text, "群文件")
    try:
        model = GroupFile.model_validate(data)
    except ValidationError as e:
        raise InputParseError(f"群文件结构错误: {e.errors()[0]['msg']}") from e

    if model.cayley is not None:
        return FiniteGroup.from_cayley(model.cayley, model.names, seed=seed)
    return FiniteGroup.from_permutations(model.perm_degree, model.generators)


def load_group(path: str, seed: Optional[int] = None) -> FiniteGroup:
    """从文件加载群（乘法表或置换生成元）"""
    group = parse_group_text(Path(path).read_text(encoding="utf-8"), seed=seed)
    logger.debug(f"已加载群 {path}: 阶 {group.order}")
    return group


def _resolve(group: FiniteGroup, item: Union[int, str]) -> int:
    if isinstance(item, str):
        return group.index_of(item)
    if not 0 <= item < group.order:
        raise DimensionMismatch(f"元素序号 {item} 超出 0..{group.order - 1}")
    return item


def parse_subgroups_text(text: str, group: FiniteGroup) -> List[Subgroup]:
    """
    子群列表，每项可以是元素序号或元素名称

    列出的元素若不封闭，取其生成的子群并记录警告
    """
    data = _load_json(text, "子群文件")
    try:
        model = SubgroupsFile.model_validate(data)
    except ValidationError as e:
        raise InputParseError(f"子群文件结构错误: {e.errors()[0]['msg']}") from e

    subgroups = []
    for i, items in enumerate(model.subgroups, start=1):
        members = {_resolve(group, x) for x in items}
        generated = group.generated_subgroup(members)
        if generated.members != members | {0}:
            logger.warning(f"第 {i} 个子群的元素不封闭，改用其生成的子群 (阶 {generated.order})")
        subgroups.append(generated)
    return subgroups


def load_subgroups(spec: str, group: FiniteGroup) -> List[Subgroup]:
    """读取子群列表文件；参数为 maximal-abelian 时返回全部极大交换子群"""
    if spec == MAXIMAL_ABELIAN:
        return maximal_abelian_subgroups(group)
    return parse_subgroups_text(Path(spec).read_text(encoding="utf-8"), group)
