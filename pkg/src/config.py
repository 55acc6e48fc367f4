"""
运行配置
从环境变量读取（run.py 启动时已通过 load_dotenv 加载 .env）
"""

import os
import logging
from dataclasses import dataclass


@dataclass(frozen=True)
class Settings:
    """运行参数"""

    max_cells: int = 10_000_000
    seed: int = 0
    assoc_samples: int = 20_000
    log_level: str = "WARNING"


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw.replace("_", ""))
    except ValueError:
        logging.getLogger(__name__).warning(f"环境变量 {name}={raw!r} 不是整数，使用默认值 {default}")
        return default


def get_settings() -> Settings:
    """读取当前环境中的配置"""
    return Settings(
        max_cells=_int_env("POLYPROD_MAX_CELLS", 10_000_000),
        seed=_int_env("POLYPROD_SEED", 0),
        assoc_samples=_int_env("POLYPROD_ASSOC_SAMPLES", 20_000),
        log_level=os.getenv("POLYPROD_LOG_LEVEL", "WARNING").upper(),
    )
