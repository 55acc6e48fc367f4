from src.report.template import build_report, render_json, render_text

__all__ = ["build_report", "render_json", "render_text"]
