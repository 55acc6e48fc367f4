"""
输入文件数据模型
复形文件、群文件、子群列表文件的 JSON 结构定义
"""

from typing import List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator


class ComplexFile(BaseModel):
    """复形文件: {"n": 3, "facets": [[1,2],[1,3],[2,3]]}，顶点从 1 开始编号"""

    model_config = ConfigDict(extra="forbid")

    n: int = Field(ge=1)
    facets: List[List[int]]


class GroupFile(BaseModel):
    """
    群文件，两种格式二选一:
      {"cayley": [[...], ...]}                       乘法表，0 号元素为单位元
      {"perm_degree": d, "generators": [[[1,2]], ...]}  置换生成元，轮换用 1 起始编号
    可选 "names" 给乘法表元素命名
    """

    model_config = ConfigDict(extra="forbid")

    cayley: Optional[List[List[int]]] = None
    names: Optional[List[str]] = None
    perm_degree: Optional[int] = Field(default=None, ge=1)
    generators: Optional[List[List[List[int]]]] = None

    @model_validator(mode="after")
    def _one_format(self) -> "GroupFile":
        has_table = self.cayley is not None
        has_perm = self.perm_degree is not None or self.generators is not None
        if has_table == has_perm:
            raise ValueError("群文件必须且只能包含 cayley 或 perm_degree/generators 之一")
        if has_perm and (self.perm_degree is None or self.generators is None):
            raise ValueError("置换格式需要同时给出 perm_degree 和 generators")
        if self.names is not None and not has_table:
            raise ValueError("names 只能与 cayley 一起使用")
        return self


class SubgroupsFile(BaseModel):
    """子群列表: {"subgroups": [[元素序号或名称, ...], ...]}"""

    model_config = ConfigDict(extra="forbid")

    subgroups: List[List[Union[int, str]]] = Field(min_length=1)
