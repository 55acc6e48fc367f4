from itertools import product

import pytest

from src.errors import CellLimitExceeded, DimensionMismatch, OutOfRange
from src.homology import HomologyGroup, same_homology
from src.polymodel import (
    CubicalCell,
    build_polyproduct,
    cell_count_formula,
    classify_em,
    polyproduct_homology,
    rank_closed_form,
    rank_oracle,
    rank_recurrence,
    splitting_homology,
)
from src.simplicial import SimplicialComplex, enumerate_complexes

Z = HomologyGroup(1)
ZERO = HomologyGroup()


def _h1(groups):
    return groups[1] if len(groups) > 1 else ZERO


def _check_ranks(m):
    closed = rank_closed_form(m)
    assert closed == rank_recurrence(m) == rank_oracle(m)
    h1 = _h1(polyproduct_homology(SimplicialComplex.discrete(len(m)), m))
    assert h1 == HomologyGroup(closed)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_rank_formulas_agree(r):
    for m in product(range(1, 5), repeat=r):
        _check_ranks(list(m))


@pytest.mark.slow
def test_rank_formulas_agree_four_factors():
    for m in product(range(1, 5), repeat=4):
        _check_ranks(list(m))


def test_rank_known_values():
    assert rank_closed_form([2, 3]) == 2
    assert rank_closed_form([2, 2, 2]) == 5
    assert rank_closed_form([7]) == 0
    # N_2 = (m₁−1)(m₂−1)
    for m1, m2 in product(range(1, 6), repeat=2):
        assert rank_closed_form([m1, m2]) == (m1 - 1) * (m2 - 1)


def test_two_points_give_circle():
    assert polyproduct_homology(SimplicialComplex.discrete(2), [2, 2]) == [ZERO, Z]


@pytest.mark.parametrize("k", [3, 4, 5])
def test_simplex_boundary_gives_sphere(k):
    homology = polyproduct_homology(SimplicialComplex.simplex_boundary(k), [2] * k)
    expected = [ZERO] * k
    expected[k - 1] = Z
    assert homology == expected


def test_full_simplex_is_contractible():
    homology = polyproduct_homology(SimplicialComplex.full_simplex(3), [3, 2, 2])
    assert all(g.is_trivial for g in homology)


def test_cell_counts_match_formula():
    k = SimplicialComplex.simplex_boundary(3)
    model = build_polyproduct(k, [2, 3, 2])
    formula = cell_count_formula(k, [2, 3, 2])
    assert model.counts() == [formula[d] for d in range(len(model.counts()))]
    assert model.counts() == [12, 20, 11]


def test_model_euler_characteristic_matches_homology():
    k = SimplicialComplex.cycle(5)
    model = build_polyproduct(k, [2] * 5)
    homology = polyproduct_homology(k, [2] * 5, reduced=False)
    assert model.euler_characteristic() == sum((-1) ** d * g.betti for d, g in enumerate(homology))


def test_boundary_is_a_chain_complex():
    model = build_polyproduct(SimplicialComplex.full_simplex(3), [2, 3, 2])
    model.chain_complex.check()


def test_cell_description():
    cell = CubicalCell((0, 3, 2))
    assert cell.support == (2,)
    assert cell.dimension == 1
    assert cell.describe() == ["Vertex(1)", "Edge(2)", "Vertex(2)"]


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        build_polyproduct(SimplicialComplex.discrete(3), [2, 2])


def test_invalid_marks():
    with pytest.raises(OutOfRange):
        build_polyproduct(SimplicialComplex.discrete(2), [2, 0])


def test_cell_limit():
    with pytest.raises(CellLimitExceeded) as e:
        build_polyproduct(SimplicialComplex.full_simplex(3), [2, 2, 2], max_cells=10)
    assert e.value.count == 27


def test_cell_limit_from_environment(monkeypatch):
    monkeypatch.setenv("POLYPROD_MAX_CELLS", "5")
    with pytest.raises(CellLimitExceeded):
        build_polyproduct(SimplicialComplex.discrete(2), [2, 2])


def test_splitting_with_general_marks():
    k = SimplicialComplex.cycle(4)
    m = [2, 3, 2, 3]
    assert same_homology(splitting_homology(k, m), polyproduct_homology(k, m))


def _check_splitting(k):
    m = [2] * k.n
    assert same_homology(splitting_homology(k, m), polyproduct_homology(k, m))


def _check_classification(k):
    report = classify_em(k)
    assert report.aspherical == k.is_flag()
    if not report.aspherical:
        assert report.sphere_verified
        assert report.witness in k.minimal_nonfaces(3)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_splitting_over_corpus(n):
    for k in enumerate_complexes(n):
        _check_splitting(k)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_first_homology_depends_on_one_skeleton(n):
    m = [2, 3, 2, 3][:n]
    for k in enumerate_complexes(n):
        assert _h1(polyproduct_homology(k, m)) == _h1(polyproduct_homology(k.skeleton(1), m))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_flag_dichotomy_over_corpus(n):
    for k in enumerate_complexes(n):
        _check_classification(k)


@pytest.mark.slow
def test_splitting_over_five_vertex_corpus():
    for k in enumerate_complexes(5):
        _check_splitting(k)


@pytest.mark.slow
def test_flag_dichotomy_over_five_vertex_corpus():
    for k in enumerate_complexes(5):
        _check_classification(k)


def test_classify_boundary_triangle():
    report = classify_em(SimplicialComplex.simplex_boundary(3))
    assert not report.aspherical
    assert report.witness == (1, 2, 3)
    assert report.sphere_degree == 2
    assert report.sphere_homology == [ZERO, ZERO, Z]
    assert report.to_dict()["sphere_homology"] == ["0", "0", "Z"]


def test_classify_flag_complex():
    report = classify_em(SimplicialComplex.cycle(4))
    assert report.aspherical
    assert report.to_dict() == {"aspherical": True}
