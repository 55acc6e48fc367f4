from itertools import combinations

import pytest

from src.errors import CenterNonTrivial, DimensionMismatch, HypothesisUnmet, InvalidSyllable, NotKTC, OutOfRange
from src.graphprod import (
    CommutationGraph,
    GraphProduct,
    GraphProductWord,
    commutation_graph,
    enumerate_elements,
    equal,
    evaluate,
    extension_exists,
    invert,
    kernel_free_rank,
    multiply,
    non_extension_certificate,
    normal_form,
    pi1_polyhedral_product,
    rewriting_classes,
)
from src.groups import library, maximal_abelian_subgroups
from src.groups.loader import load_subgroups
from src.simplicial import SimplicialComplex, enumerate_complexes
from tests.conftest import data_path


def _product(edges, orders):
    graph = CommutationGraph.from_edges(len(orders), edges)
    return GraphProduct(graph, tuple(library.cyclic(m) for m in orders))


def _word(*syllables):
    return GraphProductWord.of(syllables)


# ---- π₁ 与图积 ----


def test_pi1_depends_on_one_skeleton():
    factors = [library.cyclic(2)] * 3
    full = pi1_polyhedral_product(SimplicialComplex.full_simplex(3), factors)
    boundary = pi1_polyhedral_product(SimplicialComplex.simplex_boundary(3), factors)
    assert full == boundary
    assert full.graph.edges == ((1, 2), (1, 3), (2, 3))
    assert len(enumerate_elements(full, 3)) == 8


def test_pi1_of_discrete_complex_is_free_product():
    p = pi1_polyhedral_product(SimplicialComplex.discrete(2), [library.cyclic(2)] * 2)
    assert p.graph.is_edgeless


def test_pi1_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        pi1_polyhedral_product(SimplicialComplex.discrete(3), [library.cyclic(2)] * 2)


def test_pi1_over_corpus():
    factors = [library.cyclic(2), library.cyclic(3), library.cyclic(2), library.cyclic(3)]
    for k in enumerate_complexes(4):
        assert pi1_polyhedral_product(k, factors) == pi1_polyhedral_product(k.skeleton(1), factors)


@pytest.mark.slow
def test_pi1_over_five_vertex_corpus():
    factors = [library.cyclic(m) for m in (2, 3, 2, 3, 2)]
    for k in enumerate_complexes(5):
        assert pi1_polyhedral_product(k, factors) == pi1_polyhedral_product(k.skeleton(1), factors)


def test_commutation_graph_rejects_loops():
    with pytest.raises(OutOfRange):
        CommutationGraph.from_edges(2, [(1, 1)])


# ---- 规范形 ----


def test_adjacent_syllables_sorted_by_vertex():
    p = _product([(1, 2)], [2, 2])
    assert normal_form(p, _word((2, 1), (1, 1))) == _word((1, 1), (2, 1))


def test_inverse_syllables_cancel():
    p = _product([], [3, 3])
    assert normal_form(p, _word((1, 1), (1, 2))) == GraphProductWord()


def test_alternating_word_is_reduced():
    p = _product([], [2, 2])
    w = _word((1, 1), (2, 1), (1, 1), (2, 1))
    assert normal_form(p, w) == w
    assert len(normal_form(p, w)) == 4


def test_cancellation_across_commuting_syllables():
    p = _product([(1, 2)], [3, 2])
    assert normal_form(p, _word((1, 1), (2, 1), (1, 2))) == _word((2, 1))
    assert normal_form(p, _word((1, 1), (2, 1), (1, 1))) == _word((1, 2), (2, 1))


def test_path_graph_canonical_order():
    # 1 - 2 - 3：1 与 3 不交换
    p = _product([(1, 2), (2, 3)], [2, 2, 2])
    assert normal_form(p, _word((3, 1), (2, 1), (1, 1))) == _word((2, 1), (3, 1), (1, 1))
    assert equal(p, _word((3, 1), (2, 1), (1, 1)), _word((3, 1), (1, 1), (2, 1)))
    assert not equal(p, _word((3, 1), (1, 1)), _word((1, 1), (3, 1)))


def test_invalid_syllables():
    p = _product([], [2, 2])
    with pytest.raises(InvalidSyllable):
        normal_form(p, _word((3, 1)))
    with pytest.raises(InvalidSyllable):
        normal_form(p, _word((1, 0)))
    with pytest.raises(InvalidSyllable):
        normal_form(p, _word((1, 2)))


def test_multiply_by_inverse_is_identity():
    p = _product([(1, 2)], [3, 2, 3])
    words = [
        _word((1, 1), (2, 1), (3, 2)),
        _word((3, 1), (1, 2), (3, 1), (2, 1)),
        _word((2, 1), (3, 1), (2, 1), (1, 1), (3, 2)),
    ]
    for w in words:
        assert multiply(p, w, invert(p, w)) == GraphProductWord()
        assert multiply(p, invert(p, w), w) == GraphProductWord()


def test_multiplication_is_associative_on_samples():
    p = _product([(1, 2), (2, 3)], [2, 3, 2])
    elements = enumerate_elements(p, 2)
    for a in elements[:8]:
        for b in elements[:8]:
            for c in elements[:8]:
                assert multiply(p, multiply(p, a, b), c) == multiply(p, a, multiply(p, b, c))


@pytest.mark.parametrize("orders", [(2, 3), (2, 3, 4), (4, 4, 4), (2, 2, 2, 2, 2, 2), (3, 5, 4)])
def test_complete_graph_gives_direct_product(orders):
    edges = list(combinations(range(1, len(orders) + 1), 2))
    p = _product(edges, list(orders))
    count = 1
    for m in orders:
        count *= m
    assert len(enumerate_elements(p, len(orders))) == count


def test_free_product_of_two_z2():
    p = _product([], [2, 2])
    assert len(enumerate_elements(p, 4)) == 9


@pytest.mark.parametrize(
    "edges, orders, max_syllables",
    [
        ([], [2, 3], 5),
        ([], [3, 3], 5),
        ([(1, 2)], [3, 3], 5),
        ([(1, 2)], [2, 3], 5),
        ([(1, 2), (2, 3)], [2, 2, 2], 5),
        ([(1, 2), (2, 3)], [2, 3, 2], 5),
        ([], [2, 2, 3], 4),
    ],
)
def test_normal_form_matches_rewriting_oracle(edges, orders, max_syllables):
    p = _product(edges, orders)
    seen = set()
    for words in rewriting_classes(p, max_syllables):
        forms = {normal_form(p, _word(*w)) for w in words}
        assert len(forms) == 1
        form = forms.pop()
        assert form not in seen
        seen.add(form)


def test_kernel_free_rank():
    assert kernel_free_rank(_product([], [2, 2, 2])) == 5
    assert kernel_free_rank(_product([], [2, 3])) == 2
    assert kernel_free_rank(_product([(1, 2)], [2, 3])) is None


# ---- 交换图与扩张 ----


def test_commutation_graph_examples(v4, s3, q8):
    factors = load_subgroups(data_path("subgroups", "v4_factors.json"), v4)
    assert commutation_graph(v4, factors).edges == ((1, 2),)

    assert commutation_graph(s3, maximal_abelian_subgroups(s3)).is_edgeless

    i, j = q8.index_of("i"), q8.index_of("j")
    pair = [q8.generated_subgroup([i]), q8.generated_subgroup([j])]
    assert commutation_graph(q8, pair).is_edgeless


def test_s3_transpositions_do_not_extend(s3):
    subgroups = load_subgroups(data_path("subgroups", "s3_transpositions.json"), s3)
    report = extension_exists(SimplicialComplex.full_simplex(2), s3, subgroups)
    assert not report.extends
    assert report.to_dict(s3) == {
        "extends": False,
        "violation": {"edge": [1, 2], "a": "(1 2)", "b": "(1 3)"},
    }


def test_v4_factors_extend(v4):
    subgroups = load_subgroups(data_path("subgroups", "v4_factors.json"), v4)
    report = extension_exists(SimplicialComplex.full_simplex(2), v4, subgroups)
    assert report.extends
    assert report.violation is None


def test_extension_dimension_mismatch(v4):
    subgroups = load_subgroups(data_path("subgroups", "v4_factors.json"), v4)
    with pytest.raises(DimensionMismatch):
        extension_exists(SimplicialComplex.full_simplex(3), v4, subgroups)


def test_s3_maximal_abelians_never_extend(s3):
    subgroups = maximal_abelian_subgroups(s3)
    for k in enumerate_complexes(4):
        report = extension_exists(k, s3, subgroups)
        assert report.extends == (not k.edges())


def _commutators_vanish(group, subgroups, graph):
    """沿交换图的每条边，a b a⁻¹ b⁻¹ 在 G 中的像为单位元"""
    embedded = [s.as_group() for s in subgroups]
    embeddings = [e for _, e in embedded]
    for i, j in graph.edges:
        hi, hj = embedded[i - 1][0], embedded[j - 1][0]
        for a in range(1, hi.order):
            for b in range(1, hj.order):
                word = GraphProductWord(((i, a), (j, b), (i, hi.inv(a)), (j, hj.inv(b))))
                if evaluate(word, group, embeddings) != 0:
                    return False
    return True


@pytest.mark.parametrize("name", ["d4", "s4", "q8", "a4"])
def test_flag_of_commutation_graph_extends(name, request):
    group = request.getfixturevalue(name) if name != "a4" else library.alternating(4)
    subgroups = [s for s in maximal_abelian_subgroups(group)][:5]
    subgroups.append(group.generated_subgroup([group.elements[1]]))
    graph = commutation_graph(group, subgroups)
    flag = graph.flag_complex()
    assert flag.is_flag()
    assert extension_exists(flag, group, subgroups).extends
    assert extension_exists(graph.to_complex(), group, subgroups).extends
    assert _commutators_vanish(group, subgroups, graph)


def _s3_pool(s3):
    return [
        s3.generated_subgroup([s3.index_of("(1 2)")]),
        s3.generated_subgroup([s3.index_of("(1 2 3)")]),
        s3.trivial(),
        s3.generated_subgroup([s3.index_of("(1 3)")]),
        s3.whole(),
    ]


def test_extension_depends_on_one_skeleton(s3):
    pool = _s3_pool(s3)[:4]
    for k in enumerate_complexes(4):
        assert extension_exists(k, s3, pool) == extension_exists(k.skeleton(1), s3, pool)


@pytest.mark.slow
def test_extension_depends_on_one_skeleton_five_vertices(s3):
    pool = _s3_pool(s3)
    for k in enumerate_complexes(5):
        assert extension_exists(k, s3, pool) == extension_exists(k.skeleton(1), s3, pool)


def test_certificate_for_s3(s3):
    certificate = non_extension_certificate(s3, maximal_abelian_subgroups(s3), 1)
    assert certificate.certified
    assert certificate.graph.is_edgeless
    assert len(certificate.witnesses) == 4
    orders = sorted(c.order for c in certificate.centralizers)
    assert orders == [2, 2, 2, 3]


def test_certificate_requires_trivial_center(q8):
    with pytest.raises(CenterNonTrivial):
        non_extension_certificate(q8, maximal_abelian_subgroups(q8), 1)
    with pytest.raises(CenterNonTrivial):
        z6 = library.cyclic(6)
        non_extension_certificate(z6, [z6.whole()], 1)


def test_certificate_requires_tc(s4):
    with pytest.raises(NotKTC):
        non_extension_certificate(s4, maximal_abelian_subgroups(s4), 1)


def test_certificate_hypothesis_failures(s3):
    with pytest.raises(HypothesisUnmet) as e:
        non_extension_certificate(s3, [s3.trivial(), s3.whole()], 1)
    assert e.value.index == 1

    a3 = s3.generated_subgroup([s3.index_of("(1 2 3)")])
    with pytest.raises(HypothesisUnmet) as e:
        non_extension_certificate(s3, [a3, a3], 1)
    assert e.value.index == 2


def test_certificate_takes_witnesses_from_central_series_term(s4):
    # Γ²(S4) = A4；C((1 2)(3 4)) ∩ A4 = V4 不含于二阶子群
    pair = [
        s4.generated_subgroup([s4.index_of("(1 2)(3 4)")]),
        s4.generated_subgroup([s4.index_of("(1 3)(2 4)")]),
    ]
    assert not commutation_graph(s4, pair).is_edgeless
    with pytest.raises(HypothesisUnmet) as e:
        non_extension_certificate(s4, pair, 2)
    assert e.value.index == 1


def test_certificate_for_s4_second_stage(s4):
    pair = [
        s4.generated_subgroup([s4.index_of("(1 2 3)")]),
        s4.generated_subgroup([s4.index_of("(1 2 4)")]),
    ]
    certificate = non_extension_certificate(s4, pair, 2)
    assert certificate.certified
    assert certificate.graph.is_edgeless
    assert [c.order for c in certificate.centralizers] == [3, 3]
    assert len(set(certificate.witnesses)) == 2
