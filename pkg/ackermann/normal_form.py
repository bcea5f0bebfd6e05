# 📌 Ackermann k-정규형 (normal form)
# c = A_a(k,b)·m + n 형태의 유일한 분해와, b·n (중첩 모드에서는 a 까지) 를 재귀적으로 다시 쓴 트리
# 트리는 밑 k 를 저장하지 않는다: 같은 트리를 k+1 에서 읽으면 그것이 곧 밑 변환이다.

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Optional, Tuple, Union

from ackermann.ackmath import EXCEEDS_BOUND, BoundedValue, ack_eval, ack_index_ceiling, check_base
from config import Config
from ordinals.ordinal import Order

logger = logging.getLogger(__name__)

NF_BOUND_SQUARINGS = 3


class Mode(str, Enum):
    UNNESTED = "unnested"
    NESTED = "nested"


@dataclass(frozen=True)
class AckMonomial:
    """ A_index(k, exponent) · coefficient 한 항 """
    index: Union[int, "AckTerm"]
    exponent: "AckTerm"
    coefficient: int


@dataclass(frozen=True)
class AckTerm:
    """
    정규형 트리. 항(monomial)들의 합으로 저장하며 빈 합이 Zero 이다.

    Node(a, b, m, n) 은 첫 항 (a, b, m) 과 나머지 항들 n 으로 본다.
    """
    monomials: Tuple[AckMonomial, ...] = ()

    @classmethod
    def node(cls, a, b: "AckTerm", m: int, n: "AckTerm" = None) -> "AckTerm":
        tail = n.monomials if n is not None else ()
        return cls((AckMonomial(a, b, m),) + tail)

    @property
    def is_zero(self) -> bool:
        return not self.monomials

    @property
    def head(self) -> AckMonomial:
        if self.is_zero:
            raise ValueError("Zero has no head monomial")
        return self.monomials[0]

    @property
    def tail(self) -> "AckTerm":
        return AckTerm(self.monomials[1:])

    def __str__(self):
        return render(self)


ZERO = AckTerm()


def _integer_log(c: int, k: int) -> int:
    b = max(0, int(math.log(c, k)))
    while k ** (b + 1) <= c:
        b += 1
    while b > 0 and k ** b > c:
        b -= 1
    return b


def decompose(c: int, k: int) -> Tuple[int, int, int, int]:
    """
    c > 0 의 k-정규형 c =_NF A_a(k,b)·m + n 을 구한다.

    a 는 A_a(k,0) <= c 인 최대값 (상향 탐색), b 는 A_a(k,b) <= c 인 최대값.
    :return: (a, b, m, n)
    """
    check_base(k)
    if c <= 0:
        raise ValueError(f"normal forms exist only for c > 0, got {c}")
    a = ack_index_ceiling(k, c) - 1
    if a == 0:
        # A_0(k,b) = k^b: 선형 탐색 대신 정수 로그
        b = _integer_log(c, k)
        power = k ** b
    else:
        b = 0
        while ack_eval(a, k, b + 1, c) is not EXCEEDS_BOUND:
            b += 1
        power = ack_eval(a, k, b, c)
    m, n = divmod(c, power)
    return a, b, m, n


@lru_cache(maxsize=1 << 15)
def to_tree(c: int, k: int, mode: Mode = Mode.UNNESTED) -> AckTerm:
    """ c 의 (중첩/비중첩) k-정규형 트리 """
    check_base(k)
    mode = Mode(mode)
    if c < 0:
        raise ValueError(f"c must be a natural number, got {c}")
    monomials = []
    while c > 0:
        a, b, m, n = decompose(c, k)
        index = a if mode is Mode.UNNESTED else to_tree(a, k, mode)
        monomials.append(AckMonomial(index, to_tree(b, k, mode), m))
        c = n
    return AckTerm(tuple(monomials))


def _index_value(index, k: int, bound: int) -> BoundedValue:
    if isinstance(index, AckTerm):
        return eval_tree(index, k, bound)
    return index


def eval_tree(t: AckTerm, k: int, bound: int) -> BoundedValue:
    """ 트리를 밑 k 에서 읽은 값 (컷오프 적용) """
    check_base(k)
    total = 0
    for mono in t.monomials:
        # A_a(k,b) > a 이고 A_a(k,b) > b 이므로 a, b 의 초과는 곧 전체의 초과
        a = _index_value(mono.index, k, bound)
        if a is EXCEEDS_BOUND:
            return EXCEEDS_BOUND
        b = eval_tree(mono.exponent, k, bound)
        if b is EXCEEDS_BOUND:
            return EXCEEDS_BOUND
        power = ack_eval(a, k, b, bound)
        if power is EXCEEDS_BOUND or mono.coefficient > bound // power:
            return EXCEEDS_BOUND
        total += power * mono.coefficient
        if total > bound:
            return EXCEEDS_BOUND
    return total


def _index_kinds(t: AckTerm) -> set:
    kinds = set()
    for mono in t.monomials:
        if isinstance(mono.index, AckTerm):
            kinds.add(Mode.NESTED)
            kinds |= _index_kinds(mono.index)
        else:
            kinds.add(Mode.UNNESTED)
        kinds |= _index_kinds(mono.exponent)
    return kinds


def _conditions_hold(t: AckTerm, k: int, bound: int) -> Optional[bool]:
    """ 네 조건을 모든 노드에서 검사. 값을 만들 수 없으면 None """
    n = 0
    for mono in reversed(t.monomials):
        if mono.coefficient < 1:
            return False
        if isinstance(mono.index, AckTerm):
            inner = _conditions_hold(mono.index, k, bound)
            if inner is not True:
                return inner
        inner = _conditions_hold(mono.exponent, k, bound)
        if inner is not True:
            return inner
        a = _index_value(mono.index, k, bound)
        b = eval_tree(mono.exponent, k, bound)
        if a is EXCEEDS_BOUND or b is EXCEEDS_BOUND:
            return None
        power = ack_eval(a, k, b, bound)
        if power is EXCEEDS_BOUND:
            return None
        c = power * mono.coefficient + n
        if c > bound:
            return None
        if not n < power:
            return False
        if ack_eval(a, k, 0, c) is EXCEEDS_BOUND or ack_eval(a + 1, k, 0, c) is not EXCEEDS_BOUND:
            return False
        if ack_eval(a, k, b + 1, c) is not EXCEEDS_BOUND:
            return False
        n = c
    return True


def is_normal_form(t: AckTerm, k: int, bound: Optional[int] = None) -> bool:
    """
    트리가 밑 k 의 정규형인지 검사한다 (모든 노드에서 유일성 보조정리의 네 조건).

    bound 를 주면 그 상한 안에서만 평가한다. 생략하면 기본 상한에서 시작해
    값이 넘칠 때마다 상한을 제곱한다 (최대 NF_BOUND_SQUARINGS 번).
    그래도 평가할 수 없으면 False 를 반환하고 경고를 남긴다.
    """
    check_base(k)
    if len(_index_kinds(t)) > 1:
        return False
    growing = bound is None
    bound = Config.default_bound() if growing else bound
    verdict = _conditions_hold(t, k, bound)
    squarings = 0
    while verdict is None and growing and squarings < NF_BOUND_SQUARINGS:
        bound *= bound
        squarings += 1
        verdict = _conditions_hold(t, k, bound)
    if verdict is None:
        logger.warning(f"🚨 정규형 검사 불가: 값이 상한을 초과함 (k={k}, 상한 {bound.bit_length()} 비트)")
        return False
    return verdict


def _compare_index(x, y, k: int, bound: int) -> Order:
    if isinstance(x, AckTerm) and isinstance(y, AckTerm):
        return compare_terms(x, y, k, bound)
    if isinstance(x, AckTerm) or isinstance(y, AckTerm):
        raise ValueError("cannot compare nested and unnested trees")
    return Order.of(x, y)


def compare_terms(s: AckTerm, t: AckTerm, k: int, bound: int) -> Order:
    """
    두 정규형 트리의 값을 밑 k 에서 비교한다.

    둘 다 상한 이하면 정확히 비교하고, 둘 다 초과하면 정규형의 사전식 순서 (a, b, m, n) 를 쓴다.
    """
    if s == t:
        return Order.EQ
    x = eval_tree(s, k, bound)
    y = eval_tree(t, k, bound)
    if x is not EXCEEDS_BOUND and y is not EXCEEDS_BOUND:
        return Order.of(x, y)
    if x is not EXCEEDS_BOUND:
        return Order.LT
    if y is not EXCEEDS_BOUND:
        return Order.GT
    for ms, mt in zip(s.monomials, t.monomials):
        order = _compare_index(ms.index, mt.index, k, bound)
        if order is Order.EQ:
            order = compare_terms(ms.exponent, mt.exponent, k, bound)
        if order is Order.EQ:
            order = Order.of(ms.coefficient, mt.coefficient)
        if order is not Order.EQ:
            return order
    return Order.of(len(s.monomials), len(t.monomials))


def index_depth(t: AckTerm) -> int:
    """ 중첩 트리에서 a-첨자의 중첩 깊이 """
    depth = 0
    for mono in t.monomials:
        if isinstance(mono.index, AckTerm):
            depth = max(depth, 1 + index_depth(mono.index))
        depth = max(depth, index_depth(mono.exponent))
    return depth


def _render_index(index) -> str:
    return render(index) if isinstance(index, AckTerm) else str(index)


def render(t: AckTerm) -> str:
    """ `A(a; b)*m + n` 형식의 표준 텍스트 (`*1`, `+ 0` 생략) """
    if t.is_zero:
        return "0"
    parts = []
    for mono in t.monomials:
        text = f"A({_render_index(mono.index)}; {render(mono.exponent)})"
        if mono.coefficient != 1:
            text += f"*{mono.coefficient}"
        parts.append(text)
    return " + ".join(parts)


def to_dict(t: AckTerm) -> dict:
    """ JSON 용 트리 (계수는 십진 문자열) """
    return {
        "monomials": [
            {
                "a": to_dict(mono.index) if isinstance(mono.index, AckTerm) else mono.index,
                "b": to_dict(mono.exponent),
                "m": str(mono.coefficient),
            }
            for mono in t.monomials
        ]
    }


# ✅ 사용 예시
if __name__ == "__main__":
    print("20 (k=2):", render(to_tree(20, 2)))
    print("20 (k=2, nested):", render(to_tree(20, 2, Mode.NESTED)))
