"""
命令行入口
子命令: complex / polyprod / group / extension，默认输出 JSON 报告
"""

import logging
import sys
from contextlib import contextmanager
from enum import Enum
from typing import List, Optional

import typer

from src.config import get_settings
from src.errors import DimensionMismatch, InputParseError, PolyprodError
from src.graphprod import (
    commutation_graph,
    extension_exists,
    non_extension_certificate,
    pi1_polyhedral_product,
)
from src.groups import (
    center,
    commuting_pairs_by_classes,
    commuting_tuple_count,
    commuting_tuple_count_brute_force,
    conjugacy_classes,
    descending_central_series,
    distinct_centralizers,
    is_k_tc,
    is_simple,
    l_stage_partition_law,
    load_group,
    load_subgroups,
    maximal_abelian_subgroups,
    tc_class,
    tc_equivalences,
)
from src.polymodel import (
    build_polyproduct,
    classify_em,
    polyproduct_homology,
    rank_closed_form,
    rank_oracle,
    rank_recurrence,
    splitting_homology,
)
from src.homology import homology_of, same_homology
from src.report import build_report, render_json, render_text
from src.simplicial import SimplicialComplex, load_complex

logger = logging.getLogger(__name__)

app = typer.Typer(help="多面体积、旗复形与有限群扩张问题的计算工具", add_completion=False)

# 暴力枚举交换元组的规模上限 |G|^k
BRUTE_FORCE_LIMIT = 1_000_000


class OutputFormat(str, Enum):
    json = "json"
    text = "text"


class PolyprodMode(str, Enum):
    homology = "homology"
    rank = "rank"
    splitting = "splitting"
    classify = "classify"


class GroupMode(str, Enum):
    analyze = "analyze"
    tc = "tc"
    series = "series"
    tuples = "tuples"


FormatOption = typer.Option(OutputFormat.json, "--format", help="输出格式")


@app.callback()
def main():
    """读取配置并初始化日志（输出到 stderr）"""
    settings = get_settings()
    logging.basicConfig(
        level=getattr(logging, settings.log_level, logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


@contextmanager
def _errors_to_exit_codes():
    try:
        yield
    except PolyprodError as e:
        typer.echo(f"错误 [{type(e).__name__}]: {e}", err=True)
        raise typer.Exit(code=e.exit_code)
    except OSError as e:
        typer.echo(f"错误 [InputParseError]: 无法读取文件 {e.filename}: {e.strerror}", err=True)
        raise typer.Exit(code=InputParseError.exit_code)


def _emit(report: dict, fmt: OutputFormat) -> None:
    typer.echo(render_text(report) if fmt == OutputFormat.text else render_json(report), nl=fmt == OutputFormat.json)


def _parse_marks(raw: Optional[str]) -> Optional[List[int]]:
    if raw is None:
        return None
    marks = []
    for column, token in enumerate(raw.split(","), start=1):
        try:
            marks.append(int(token.strip()))
        except ValueError:
            raise InputParseError(f"--marks 第 {column} 项不是整数: {token!r}") from None
    return marks


def _homology_strings(groups) -> List[str]:
    return [str(g) for g in groups]


@app.command("complex")
def cmd_complex(
    complex_path: str = typer.Option(..., "--complex", help="复形文件（JSON 或纯文本）"),
    fmt: OutputFormat = FormatOption,
):
    """分析单纯复形：f-向量、欧拉示性数、旗性、极小非面、旗补全"""
    with _errors_to_exit_codes():
        k = load_complex(complex_path)
        result = {
            "n": k.n,
            "facet_count": len(k.facets),
            "facets": [list(f) for f in k.facets],
            "dimension": k.dimension,
            "f_vector": k.f_vector(),
            "euler_characteristic": k.euler_characteristic(),
            "is_flag": k.is_flag(),
            "minimal_nonfaces": [list(s) for s in k.minimal_nonfaces(3)],
            "flag_completion": [list(f) for f in k.flag_completion().facets],
        }
        logger.info(f"complex: n={k.n}, flag={result['is_flag']}")
        _emit(build_report({"name": "complex"}, {"complex": complex_path}, result), fmt)


@app.command("polyprod")
def cmd_polyprod(
    complex_path: Optional[str] = typer.Option(None, "--complex", help="复形文件；rank 模式可省略"),
    marks: Optional[str] = typer.Option(None, "--marks", help="标记向量 m₁,…,mₙ，缺省全为 2"),
    mode: PolyprodMode = typer.Option(PolyprodMode.homology, "--mode"),
    fmt: OutputFormat = FormatOption,
):
    """胞腔模型 Z_K(I,F) 的同调、N_r 秩、分裂公式与 EM 判定"""
    with _errors_to_exit_codes():
        m = _parse_marks(marks)
        if complex_path is None:
            if mode != PolyprodMode.rank or m is None:
                raise InputParseError("除 rank 模式外必须给出 --complex；rank 模式至少需要 --marks")
            k = SimplicialComplex.discrete(len(m))
        else:
            k = load_complex(complex_path)
        if m is None:
            m = [2] * k.n
        elif len(m) != k.n:
            raise DimensionMismatch(f"标记向量长度 {len(m)} 与顶点数 {k.n} 不一致")

        if mode == PolyprodMode.homology:
            model = build_polyproduct(k, m)
            result = {
                "marks": m,
                "cell_counts": model.counts(),
                "euler_characteristic": model.euler_characteristic(),
                "reduced_homology": _homology_strings(homology_of(model.chain_complex, reduced=True)),
            }
        elif mode == PolyprodMode.rank:
            closed, recurrence, oracle = rank_closed_form(m), rank_recurrence(m), rank_oracle(m)
            result = {
                "marks": m,
                "closed": closed,
                "recurrence": recurrence,
                "oracle": oracle,
                "agree": closed == recurrence == oracle,
            }
            if complex_path is not None and k.edges():
                logger.warning("N_r 只与 0-骨架有关，忽略复形的边")
        elif mode == PolyprodMode.splitting:
            split = splitting_homology(k, m)
            direct = polyproduct_homology(k, m)
            result = {
                "marks": m,
                "splitting": _homology_strings(split),
                "cubical": _homology_strings(direct),
                "agree": same_homology(split, direct),
            }
        else:
            report = classify_em(k)
            result = {"is_flag": k.is_flag(), **report.to_dict()}

        command = {"name": "polyprod", "mode": mode.value, "marks": ",".join(map(str, m))}
        _emit(build_report(command, {"complex": complex_path}, result), fmt)


@app.command("group")
def cmd_group(
    group_path: str = typer.Option(..., "--group", help="群文件（乘法表或置换生成元）"),
    mode: GroupMode = typer.Option(GroupMode.analyze, "--mode"),
    k: int = typer.Option(2, "--k", min=1, help="tuples 模式的元组长度"),
    level: int = typer.Option(1, "--level", min=1, help="tc 模式中 l 级中心化子划分律的 l"),
    seed: Optional[int] = typer.Option(None, "--seed", help="大群结合律抽样的随机种子"),
    fmt: OutputFormat = FormatOption,
):
    """有限群分析：中心、降中心列、TC 类、极大交换子群、交换元组计数"""
    with _errors_to_exit_codes():
        group = load_group(group_path, seed=seed if seed is not None else get_settings().seed)
        series = descending_central_series(group)

        if mode == GroupMode.analyze:
            result = {
                "order": group.order,
                "abelian": group.is_abelian,
                "center": center(group).names(),
                "nilpotency_class": series.nilpotency_class if series.nilpotent else "NotNilpotent",
                "simple": is_simple(group),
                "conjugacy_classes": len(conjugacy_classes(group)),
                "maximal_abelian_subgroups": [s.names() for s in maximal_abelian_subgroups(group)],
                "distinct_centralizers": [c.names() for c in distinct_centralizers(group)],
            }
        elif mode == GroupMode.tc:
            tc = tc_class(group, series)
            result = {
                "tc_class": tc if tc is not None else "Unbounded",
                "is_k_tc": {str(n): is_k_tc(group, n, series) for n in range(2, series.stable_index + 2)},
                "simple": is_simple(group),
                "equivalences": None if group.is_abelian else tc_equivalences(group).to_dict(),
                "partition_law": l_stage_partition_law(group, level).to_dict(),
            }
        elif mode == GroupMode.series:
            result = series.to_dict()
            result["stable_stage"] = series.stable_term.names()
        else:
            brute = commuting_tuple_count_brute_force(group, k) if group.order ** k <= BRUTE_FORCE_LIMIT else None
            result = {
                "k": k,
                "count": commuting_tuple_count(group, k),
                "brute_force": brute,
                "class_equation": commuting_pairs_by_classes(group) if k == 2 else None,
            }

        command = {"name": "group", "mode": mode.value}
        if mode == GroupMode.tuples:
            command["k"] = k
        if mode == GroupMode.tc:
            command["level"] = level
        _emit(build_report(command, {"group": group_path}, result), fmt)


@app.command("extension")
def cmd_extension(
    group_path: str = typer.Option(..., "--group", help="群文件"),
    subgroups_spec: str = typer.Option(..., "--subgroups", help="子群列表文件，或 maximal-abelian"),
    complex_path: str = typer.Option(..., "--complex", help="复形文件"),
    certificate: bool = typer.Option(False, "--certificate", help="同时构造不可扩张证书"),
    level: int = typer.Option(1, "--level", min=1, help="证书使用的 l 级中心化子"),
    seed: Optional[int] = typer.Option(None, "--seed"),
    fmt: OutputFormat = FormatOption,
):
    """扩张问题：交换图、Flag(Γ)、是否扩张及反例或证书"""
    with _errors_to_exit_codes():
        group = load_group(group_path, seed=seed if seed is not None else get_settings().seed)
        subgroups = load_subgroups(subgroups_spec, group)
        k = load_complex(complex_path)

        graph = commutation_graph(group, subgroups)
        decision = extension_exists(k, group, subgroups)
        factors = [s.as_group()[0] for s in subgroups]
        result = {
            "subgroups": [s.names() for s in subgroups],
            "commutation_graph": graph.to_dict(),
            "flag_facets": [list(f) for f in graph.flag_complex().facets],
            "pi1_graph": pi1_polyhedral_product(k, factors).graph.to_dict(),
            **decision.to_dict(group),
        }
        if certificate:
            result["certificate"] = non_extension_certificate(group, subgroups, level).to_dict(group)

        command = {"name": "extension", "subgroups": subgroups_spec if subgroups_spec == "maximal-abelian" else "file"}
        inputs = {"group": group_path, "complex": complex_path, "subgroups": subgroups_spec}
        _emit(build_report(command, inputs, result), fmt)
