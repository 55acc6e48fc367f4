#!/usr/bin/env python3
"""
验证 data/ 目录下的复形、群、子群文件是否符合格式并能通过数学校验
"""

import os
import sys
from pathlib import Path
from typing import List

# 添加项目根目录到路径
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.errors import PolyprodError
from src.groups.loader import load_group, parse_subgroups_text
from src.simplicial.loader import load_complex

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

# 子群文件引用的群文件
SUBGROUP_PARENTS = {
    "v4_factors.json": "v4.json",
    "v4_three.json": "v4.json",
    "s3_transpositions.json": "s3.json",
}

# 故意构造的错误样例
EXPECTED_INVALID = {"broken_latin.json"}


def validate_complexes(files: List[Path]) -> int:
    errors = 0
    for path in files:
        try:
            k = load_complex(str(path))
            print(f"✅ {path.name}: n={k.n}, 维数 {k.dimension}, 旗复形={k.is_flag()}")
        except PolyprodError as e:
            print(f"❌ {path.name}: {e}")
            errors += 1
    return errors


def validate_groups(files: List[Path]) -> int:
    errors = 0
    for path in files:
        try:
            g = load_group(str(path))
        except PolyprodError as e:
            if path.name in EXPECTED_INVALID:
                print(f"✅ {path.name}: 按预期被拒绝 ({type(e).__name__})")
                continue
            print(f"❌ {path.name}: {e}")
            errors += 1
            continue
        if path.name in EXPECTED_INVALID:
            print(f"❌ {path.name}: 应当被拒绝却通过了校验")
            errors += 1
        else:
            print(f"✅ {path.name}: 阶 {g.order}, 交换={g.is_abelian}")
    return errors


def validate_subgroups(files: List[Path]) -> int:
    errors = 0
    for path in files:
        parent = SUBGROUP_PARENTS.get(path.name)
        if parent is None:
            print(f"⚠️ {path.name}: 未登记所属的群文件，跳过")
            continue
        try:
            g = load_group(str(DATA_DIR / "groups" / parent))
            subgroups = parse_subgroups_text(path.read_text(encoding="utf-8"), g)
            print(f"✅ {path.name}: {len(subgroups)} 个子群，阶 {[s.order for s in subgroups]}")
        except PolyprodError as e:
            print(f"❌ {path.name}: {e}")
            errors += 1
    return errors


def main():
    """主函数"""
    print("=== 输入数据验证工具 ===")

    if not DATA_DIR.exists():
        print(f"❌ 目录不存在: {DATA_DIR}")
        return False

    errors = validate_complexes(sorted((DATA_DIR / "complexes").iterdir()))
    errors += validate_groups(sorted((DATA_DIR / "groups").glob("*.json")))
    errors += validate_subgroups(sorted((DATA_DIR / "subgroups").glob("*.json")))

    if errors == 0:
        print("\n🎉 验证完成，所有数据符合规范!")
    else:
        print(f"\n💥 验证失败，共 {errors} 个错误!")
    return errors == 0


if __name__ == "__main__":
    success = main()
    sys.exit(0 if success else 1)
