""" hypothesis 전략: 표준형 서수 항 """

from functools import cmp_to_key, reduce

from hypothesis import strategies as st

from ordinals.ordinal import ZERO, add, cmp, eps, nat, omega_pow, times


def _sum(monomials):
    return reduce(add, sorted(monomials, key=cmp_to_key(cmp), reverse=True), ZERO)


def _heads(children):
    return st.one_of(children.map(omega_pow), children.map(eps))


# 깊이 제한 재귀 전략: 생성자만 거치므로 항상 표준형
ordinals = st.recursive(
    st.integers(0, 5).map(nat),
    lambda children: st.lists(
        st.tuples(_heads(children), st.integers(1, 5)).map(lambda p: times(*p)),
        min_size=1, max_size=3,
    ).map(_sum),
    max_leaves=8,
)
positive_ordinals = ordinals.filter(lambda a: not a.is_zero)
