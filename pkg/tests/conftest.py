from pathlib import Path

import pytest

from src.groups import library
from src.groups.loader import load_group

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


def data_path(*parts: str) -> str:
    return str(DATA_DIR.joinpath(*parts))


@pytest.fixture
def s3():
    return load_group(data_path("groups", "s3.json"))


@pytest.fixture
def q8():
    return library.quaternion()


@pytest.fixture
def d4():
    return load_group(data_path("groups", "d4.json"))


@pytest.fixture
def v4():
    return load_group(data_path("groups", "v4.json"))


@pytest.fixture
def s4():
    return library.symmetric(4)


@pytest.fixture(scope="session")
def group_corpus():
    """全部 ≤16 阶小群加上数据目录里的置换群"""
    groups = dict(library.small_groups(16))
    for name in ("s3", "d4", "d5", "q8", "a4", "s4"):
        groups[f"file:{name}"] = load_group(data_path("groups", f"{name}.json"))
    return groups
