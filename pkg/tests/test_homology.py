import pytest
from sympy import Matrix

from src.errors import NotAComplex
from src.homology import (
    ChainComplex,
    HomologyGroup,
    IntegerMatrix,
    homology_of,
    normalize_torsion,
    reduced_homology,
    same_homology,
    simplicial_chain_complex,
    smith_normal_form,
)
from src.simplicial import SimplicialComplex, enumerate_complexes

# RP² 的 6 顶点三角剖分
RP2_FACETS = [
    [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
    [2, 3, 5], [3, 4, 6], [2, 4, 5], [3, 5, 6], [2, 4, 6],
]

Z = HomologyGroup(1)
ZERO = HomologyGroup()


def test_snf_invariant_factors():
    m = IntegerMatrix.from_rows([[2, 4], [6, 8]])
    form = smith_normal_form(m)
    assert form.invariant_factors == (2, 4)
    assert form.rank == 2
    assert form.torsion == (2, 4)


def test_snf_with_transforms_verifies():
    m = IntegerMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    form = smith_normal_form(m, verify=True)
    assert form.invariant_factors == (2, 6, 12)
    product = form.left @ m @ form.right
    assert [product[i, i] for i in range(3)] == [2, 6, 12]


def test_snf_of_coprime_diagonal():
    assert smith_normal_form(IntegerMatrix.from_rows([[2, 0], [0, 3]])).invariant_factors == (1, 6)


@pytest.mark.parametrize(
    "rows",
    [
        [[2, 0], [0, 3]],
        [[2, 4], [6, 8]],
        [[2, 4, 4], [-6, 6, 12], [10, -4, -16]],
        [[1, 2, 3], [0, 4, 5], [1, 0, 6]],
        [[3, 1, 0, 2], [0, 5, 1, 1], [2, 0, 7, 0], [1, 1, 1, 4]],
    ],
)
def test_invariant_factors_multiply_to_determinant(rows):
    form = smith_normal_form(IntegerMatrix.from_rows(rows))
    assert form.rank == len(rows)
    product = 1
    for d in form.invariant_factors:
        product *= d
    assert product == abs(Matrix(rows).det())


def test_snf_sparse_and_dense_paths_agree():
    m = IntegerMatrix.from_rows([[1, 0, 2, 0], [0, 3, 0, 1], [2, 0, 4, 0], [0, 1, 0, 1]])
    assert smith_normal_form(m).invariant_factors == smith_normal_form(m, transforms=True).invariant_factors


def test_snf_empty_and_zero_matrices():
    assert smith_normal_form(IntegerMatrix.zeros(0, 3)).rank == 0
    assert smith_normal_form(IntegerMatrix.zeros(2, 2)).invariant_factors == ()


def test_normalize_torsion():
    assert normalize_torsion([2, 3]) == (6,)
    assert normalize_torsion([4, 6]) == (2, 12)
    assert normalize_torsion([2, 2, 4]) == (2, 2, 4)
    assert normalize_torsion([1, 1]) == ()


def test_homology_group_arithmetic_and_str():
    g = HomologyGroup(1, (2,)) + HomologyGroup(1, (3,))
    assert g == HomologyGroup(2, (6,))
    assert str(g) == "Z^2 + Z/6"
    assert str(ZERO) == "0"
    assert HomologyGroup(1, (2,)).scaled(2) == HomologyGroup(2, (2, 2))
    with pytest.raises(ValueError):
        HomologyGroup(0, (2, 3))


def test_reduced_homology_of_spheres():
    assert reduced_homology(SimplicialComplex.simplex_boundary(3)) == [ZERO, Z]
    assert reduced_homology(SimplicialComplex.simplex_boundary(4)) == [ZERO, ZERO, Z]
    assert reduced_homology(SimplicialComplex.full_simplex(4)) == [ZERO] * 4


def test_reduced_homology_of_discrete_points():
    assert reduced_homology(SimplicialComplex.discrete(3)) == [HomologyGroup(2)]


def test_projective_plane_has_torsion():
    k = SimplicialComplex.from_facets(6, RP2_FACETS)
    assert k.euler_characteristic() == 1
    assert reduced_homology(k) == [ZERO, HomologyGroup(0, (2,)), ZERO]


def test_boundary_squares_to_zero_is_checked():
    one = IntegerMatrix.from_rows([[1]])
    chain = ChainComplex((1, 1, 1), (IntegerMatrix.zeros(0, 1), one, one))
    with pytest.raises(NotAComplex):
        homology_of(chain)


def test_chain_complex_shape_checked():
    with pytest.raises(NotAComplex):
        ChainComplex((2, 1), (IntegerMatrix.zeros(0, 2), IntegerMatrix.zeros(1, 1)))


def test_same_homology_pads_trailing_zeros():
    assert same_homology([ZERO, Z], [ZERO, Z, ZERO])
    assert not same_homology([ZERO, Z], [ZERO, HomologyGroup(2)])


def test_euler_characteristic_is_alternating_betti_sum():
    for n in range(1, 5):
        for k in enumerate_complexes(n):
            groups = homology_of(simplicial_chain_complex(k))
            assert sum((-1) ** d * g.betti for d, g in enumerate(groups)) == k.euler_characteristic()


def test_cone_is_acyclic():
    for n in range(1, 4):
        for k in enumerate_complexes(n):
            assert all(g.is_trivial for g in reduced_homology(k.cone()))
