"""
报告的组装与渲染
JSON 为默认输出；文本格式用 Jinja2 模板渲染
"""

import hashlib
import json
import os
from importlib.metadata import PackageNotFoundError, version
from pathlib import Path
from typing import Dict, Optional

from jinja2 import Environment, FileSystemLoader


def get_template_dir():
    """获取模板文件所在目录"""
    return os.path.join(os.path.dirname(os.path.abspath(__file__)), "templates")


def tool_version() -> str:
    try:
        return version("polyprod-toolkit")
    except PackageNotFoundError:
        return "0.1.0"


def file_digest(path: str) -> str:
    """输入文件原始字节的 SHA-256"""
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def build_report(command: dict, inputs: Dict[str, Optional[str]], result: dict) -> dict:
    """
    组装报告

    Args:
        command: 子命令名与参数
        inputs: 输入名 → 文件路径（非文件参数为 None 时跳过）
        result: 计算结果
    """
    return {
        "command": command,
        "inputs": {name: file_digest(path) for name, path in inputs.items() if path and os.path.isfile(path)},
        "result": result,
        "version": tool_version(),
    }


def render_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False)


def _format_value(value) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True, ensure_ascii=False)
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "-"
    return str(value)


def render_text(report: dict) -> str:
    """
    使用 Jinja2 模板渲染文本报告

    Args:
        report: build_report 返回的字典

    Returns:
        渲染后的文本
    """
    env = Environment(
        loader=FileSystemLoader(get_template_dir()),
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
    )
    env.filters["fmt"] = _format_value
    template = env.get_template("report.txt.j2")
    return template.render(
        command=report["command"],
        inputs=report["inputs"],
        result=report["result"],
        version=report["version"],
    )
