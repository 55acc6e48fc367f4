import json

from typer.testing import CliRunner

from src.cli import app
from tests.conftest import data_path

runner = CliRunner()


def _run(*args, env=None):
    return runner.invoke(app, list(args), env=env)


def _result(*args):
    outcome = _run(*args)
    assert outcome.exit_code == 0, outcome.output
    return json.loads(outcome.stdout)["result"]


# ---- complex ----


def test_complex_boundary_triangle():
    result = _result("complex", "--complex", data_path("complexes", "boundary_triangle.json"))
    assert result["f_vector"] == [3, 3]
    assert result["euler_characteristic"] == 0
    assert result["is_flag"] is False
    assert result["minimal_nonfaces"] == [[1, 2, 3]]
    assert result["flag_completion"] == [[1, 2, 3]]


def test_complex_square_text_file():
    result = _result("complex", "--complex", data_path("complexes", "square.txt"))
    assert result["is_flag"] is True
    assert result["minimal_nonfaces"] == []


def test_malformed_complex_file(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 3, "facets": [[1, 2]', encoding="utf-8")
    assert _run("complex", "--complex", str(bad)).exit_code == 2


def test_missing_file():
    assert _run("complex", "--complex", "no/such/file.json").exit_code == 2


def test_report_is_deterministic():
    args = ("complex", "--complex", data_path("complexes", "pentagon.txt"))
    first, second = _run(*args), _run(*args)
    assert first.stdout == second.stdout
    report = json.loads(first.stdout)
    assert set(report) == {"command", "inputs", "result", "version"}
    assert len(report["inputs"]["complex"]) == 64


def test_text_format():
    outcome = _run("complex", "--complex", data_path("complexes", "square.txt"), "--format", "text")
    assert outcome.exit_code == 0
    assert outcome.stdout.startswith("== polyprod complex ==")
    assert "is_flag" in outcome.stdout


# ---- polyprod ----


def test_polyprod_rank_without_complex():
    result = _result("polyprod", "--mode", "rank", "--marks", "2,2,2")
    assert result["closed"] == result["recurrence"] == result["oracle"] == 5
    assert result["agree"] is True


def test_polyprod_homology_of_two_points():
    result = _result("polyprod", "--complex", data_path("complexes", "two_points.json"), "--marks", "2,3")
    assert result["reduced_homology"] == ["0", "Z^2"]


def test_polyprod_splitting():
    result = _result("polyprod", "--complex", data_path("complexes", "square.txt"), "--mode", "splitting")
    assert result["agree"] is True


def test_polyprod_classify():
    result = _result("polyprod", "--complex", data_path("complexes", "boundary_triangle.json"), "--mode", "classify")
    assert result["is_flag"] is False
    assert result["aspherical"] is False


def test_polyprod_marks_mismatch():
    outcome = _run("polyprod", "--complex", data_path("complexes", "triangle.json"), "--marks", "2,2")
    assert outcome.exit_code == 3


def test_polyprod_rank_marks_mismatch():
    outcome = _run(
        "polyprod",
        "--complex",
        data_path("complexes", "boundary_triangle.json"),
        "--marks",
        "2,2",
        "--mode",
        "rank",
    )
    assert outcome.exit_code == 3


def test_polyprod_bad_marks():
    assert _run("polyprod", "--mode", "rank", "--marks", "2,x").exit_code == 2


def test_polyprod_requires_complex_outside_rank_mode():
    assert _run("polyprod", "--marks", "2,2").exit_code == 2


def test_polyprod_cell_limit():
    outcome = _run(
        "polyprod",
        "--complex",
        data_path("complexes", "two_points.json"),
        env={"POLYPROD_MAX_CELLS": "5"},
    )
    assert outcome.exit_code == 5


# ---- group ----


def test_group_tc_quaternion():
    result = _result("group", "--group", data_path("groups", "q8.json"), "--mode", "tc")
    assert result["tc_class"] == 3
    assert result["is_k_tc"]["2"] is False
    assert result["is_k_tc"]["3"] is True


def test_group_series_s3():
    result = _result("group", "--group", data_path("groups", "s3.json"), "--mode", "series")
    assert result["nilpotency_class"] == "NotNilpotent"
    assert set(result["stable_stage"]) == {"()", "(1 2 3)", "(1 3 2)"}


def test_group_tuples_s3():
    result = _result("group", "--group", data_path("groups", "s3.json"), "--mode", "tuples", "--k", "2")
    assert result["count"] == result["brute_force"] == result["class_equation"] == 18


def test_group_analyze_s3():
    result = _result("group", "--group", data_path("groups", "s3.json"))
    assert result["order"] == 6
    assert result["center"] == ["()"]
    assert result["conjugacy_classes"] == 3
    assert len(result["maximal_abelian_subgroups"]) == 4


def test_group_broken_latin_square():
    assert _run("group", "--group", data_path("groups", "broken_latin.json")).exit_code == 4


# ---- extension ----


def test_extension_s3_maximal_abelian():
    result = _result(
        "extension",
        "--group",
        data_path("groups", "s3.json"),
        "--subgroups",
        "maximal-abelian",
        "--complex",
        data_path("complexes", "triangle_with_tail.json"),
    )
    assert result["extends"] is False
    assert result["commutation_graph"]["edges"] == []
    assert result["violation"]["edge"] == [1, 2]


def test_extension_v4_factors():
    result = _result(
        "extension",
        "--group",
        data_path("groups", "v4.json"),
        "--subgroups",
        data_path("subgroups", "v4_factors.json"),
        "--complex",
        data_path("complexes", "edge.json"),
    )
    assert result["extends"] is True
    assert result["violation"] is None
    assert result["flag_facets"] == [[1, 2]]


def test_extension_subgroup_count_mismatch():
    outcome = _run(
        "extension",
        "--group",
        data_path("groups", "v4.json"),
        "--subgroups",
        data_path("subgroups", "v4_three.json"),
        "--complex",
        data_path("complexes", "edge.json"),
    )
    assert outcome.exit_code == 3


def test_extension_certificate_for_s3():
    result = _result(
        "extension",
        "--group",
        data_path("groups", "s3.json"),
        "--subgroups",
        "maximal-abelian",
        "--complex",
        data_path("complexes", "triangle_with_tail.json"),
        "--certificate",
    )
    assert result["certificate"]["certified"] is True


def test_extension_certificate_needs_trivial_center():
    outcome = _run(
        "extension",
        "--group",
        data_path("groups", "q8.json"),
        "--subgroups",
        "maximal-abelian",
        "--complex",
        data_path("complexes", "triangle.json"),
        "--certificate",
    )
    assert outcome.exit_code == 10
