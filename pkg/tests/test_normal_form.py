import pytest
from hypothesis import given, strategies as st

from ackermann.ackmath import EXCEEDS_BOUND
from ackermann.normal_form import (
    ZERO, AckTerm, Mode, compare_terms, decompose, eval_tree, index_depth, is_normal_form, render,
    to_dict, to_tree,
)
from ordinals.ordinal import Order


@pytest.mark.parametrize("c, k, expected", [
    (1, 2, (0, 0, 1, 0)),
    (2, 2, (1, 0, 1, 0)),
    (20, 2, (1, 1, 1, 4)),
    (27, 3, (1, 0, 1, 0)),
    (26, 3, (0, 2, 2, 8)),
])
def test_decompose_examples(c, k, expected):
    assert decompose(c, k) == expected


def test_decompose_rejects_zero_and_small_base():
    with pytest.raises(ValueError):
        decompose(0, 2)
    with pytest.raises(ValueError):
        decompose(5, 1)


def test_to_tree_examples():
    assert to_tree(0, 5, Mode.UNNESTED) == ZERO
    assert to_tree(4, 2, Mode.UNNESTED) == AckTerm.node(1, ZERO, 2, ZERO)
    one = AckTerm.node(0, ZERO, 1)
    assert to_tree(20, 2, Mode.UNNESTED) == AckTerm.node(1, one, 1, AckTerm.node(1, ZERO, 2))


def test_nested_tree_rewrites_index():
    # 2 = A_1(2,0), 첨자 1 = A_0(2,0) 도 트리로
    tree = to_tree(2, 2, Mode.NESTED)
    assert tree.head.index == to_tree(1, 2, Mode.NESTED)
    assert index_depth(tree) == 2
    assert index_depth(to_tree(20, 2, Mode.UNNESTED)) == 0


def test_render():
    assert render(ZERO) == "0"
    assert render(to_tree(20, 2)) == "A(1; A(0; 0)) + A(1; 0)*2"
    assert render(to_tree(27, 3)) == "A(1; 0)"
    assert render(to_tree(2, 2, Mode.NESTED)) == "A(A(0; 0); 0)"


def test_to_dict_keeps_coefficients_as_strings():
    assert to_dict(to_tree(4, 2)) == {"monomials": [{"a": 1, "b": {"monomials": []}, "m": "2"}]}


def test_eval_tree_examples():
    assert eval_tree(ZERO, 7, 10) == 0
    assert eval_tree(to_tree(20, 2), 2, 100) == 20
    assert eval_tree(to_tree(20, 2), 2, 19) is EXCEEDS_BOUND


def test_eval_tree_at_other_base_is_base_change_reading():
    # 20 의 트리를 밑 3 에서 읽으면 A_1(3,1) + A_1(3,0)·2 로 상한 10^9 을 넘는다
    assert eval_tree(to_tree(20, 2), 3, 10 ** 9) is EXCEEDS_BOUND
    assert eval_tree(to_tree(4, 2), 3, 10 ** 9) == 54


def test_is_normal_form_examples():
    assert is_normal_form(ZERO, 2)
    assert not is_normal_form(AckTerm.node(0, ZERO, 3), 2)
    # n >= A_a(k,b): A(1; 0) + A(1; 0) 는 정규형이 아니다
    assert not is_normal_form(AckTerm.node(1, ZERO, 1, AckTerm.node(1, ZERO, 1)), 2)


def test_is_normal_form_rejects_mixed_trees():
    mixed = AckTerm.node(to_tree(1, 2, Mode.NESTED), ZERO, 1, AckTerm.node(0, ZERO, 1))
    assert not is_normal_form(mixed, 2)


@pytest.mark.parametrize("k", [2, 3, 4])
@pytest.mark.parametrize("mode", list(Mode))
def test_trees_are_normal_forms_and_round_trip(k, mode):
    for c in range(0, 400):
        tree = to_tree(c, k, mode)
        assert eval_tree(tree, k, max(c, 1)) == c
        assert is_normal_form(tree, k, bound=max(c, 1))


@given(st.integers(1, 10 ** 40), st.integers(2, 6))
def test_decompose_satisfies_lemma_conditions(c, k):
    a, b, m, n = decompose(c, k)
    tree = AckTerm.node(a, to_tree(b, k), m, to_tree(n, k))
    assert eval_tree(tree, k, c) == c
    assert m >= 1
    assert is_normal_form(to_tree(c, k), k, bound=c)


def test_compare_terms_exact_and_lexicographic():
    s, t = to_tree(15, 2), to_tree(16, 2)
    assert compare_terms(s, t, 2, 100) is Order.LT
    assert compare_terms(t, s, 2, 100) is Order.GT
    assert compare_terms(s, s, 3, 10) is Order.EQ
    # 밑 3 에서 둘 다 상한을 넘으면 정규형 순서로 비교한다
    assert compare_terms(to_tree(16, 2), to_tree(20, 2), 3, 10 ** 6) is Order.LT


def test_is_normal_form_grows_the_default_bound():
    c = 2 ** 400000
    tree = to_tree(c, 2)
    assert is_normal_form(tree, 2)
    # 상한을 명시하면 그 안에서만 평가한다
    assert not is_normal_form(tree, 2, bound=10 ** 1000)
