#!/usr/bin/env python3
"""
多面体积计算工具启动脚本
"""

from dotenv import load_dotenv

load_dotenv()


def main():
    """主函数"""
    from src.cli import app

    app()


if __name__ == "__main__":
    main()
