# 📌 밑 변환 c[k ← k+1]
# 비중첩: A_a(k+1, b[k←k+1])·m + n[k←k+1]   (a, m 고정)
# 중첩:   A_{a[k←k+1]}(k+1, b[k←k+1])·m + n[k←k+1]
# 결과가 상한을 넘으면 EXCEEDS_BOUND (오류가 아님)

import logging

from ackermann.ackmath import EXCEEDS_BOUND, BoundedValue, ack_eval, check_base
from ackermann.normal_form import AckTerm, Mode, decompose, eval_tree

logger = logging.getLogger(__name__)


def _base_change(c: int, k: int, bound: int, mode: Mode) -> BoundedValue:
    total = 0
    while c > 0:
        a, b, m, n = decompose(c, k)
        if mode is Mode.NESTED:
            a = _base_change(a, k, bound, mode)
            if a is EXCEEDS_BOUND:
                return EXCEEDS_BOUND
        b = _base_change(b, k, bound, mode)
        if b is EXCEEDS_BOUND:
            return EXCEEDS_BOUND
        power = ack_eval(a, k + 1, b, bound)
        if power is EXCEEDS_BOUND or m > bound // power:
            return EXCEEDS_BOUND
        total += power * m
        if total > bound:
            return EXCEEDS_BOUND
        c = n
    return total


def _check_args(c: int, k: int, bound: int):
    check_base(k)
    if c < 0:
        raise ValueError(f"c must be a natural number, got {c}")
    if bound < 0:
        raise ValueError(f"bound must be a natural number, got {bound}")


def bc_unnested(c: int, k: int, bound: int) -> BoundedValue:
    """ 비중첩 밑 변환 (a 와 m 은 그대로, b 와 n 은 재귀적으로 변환) """
    _check_args(c, k, bound)
    return _base_change(c, k, bound, Mode.UNNESTED)


def bc_nested(c: int, k: int, bound: int) -> BoundedValue:
    """ 중첩 밑 변환 (첨자 a 도 재귀적으로 변환) """
    _check_args(c, k, bound)
    return _base_change(c, k, bound, Mode.NESTED)


def base_change(c: int, k: int, bound: int, mode: Mode = Mode.UNNESTED) -> BoundedValue:
    return bc_nested(c, k, bound) if Mode(mode) is Mode.NESTED else bc_unnested(c, k, bound)


def bc_tree(t: AckTerm, k: int, bound: int) -> BoundedValue:
    """
    트리 수준의 밑 변환: 정규형 트리는 밑을 담지 않으므로 같은 트리를 k+1 에서 읽으면 된다.

    to_tree 로 만든 트리에서는 bc_unnested / bc_nested 와 같은 값이어야 한다.
    """
    check_base(k)
    return eval_tree(t, k + 1, bound)


# ✅ 사용 예시
if __name__ == "__main__":
    print("2[2←3] =", bc_unnested(2, 2, 10 ** 6))
    print("27[3←4] == 4^256:", bc_unnested(27, 3, 10 ** 200) == 4 ** 256)
