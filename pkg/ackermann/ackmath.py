# 📌 컷오프 상한을 적용한 Ackermann 함수 A_a(k, b) 계산
# A_0(k,b) = k^b
# A_{a+1}(k,0) = A_a^k(k,·)(0)
# A_{a+1}(k,b+1) = A_a^k(k,·)(A_{a+1}(k,b))
# 중간값이 상한을 넘는 순간 계산을 중단하고 EXCEEDS_BOUND 를 반환한다 (단조성 덕분에 안전).

import logging
from enum import Enum
from functools import lru_cache
from typing import Union

logger = logging.getLogger(__name__)


class Cutoff(Enum):
    """ 상한 초과 표식 """
    EXCEEDS_BOUND = "exceeds-bound"

    def __str__(self):
        return self.value


EXCEEDS_BOUND = Cutoff.EXCEEDS_BOUND

# 정확한 값(int) 또는 EXCEEDS_BOUND
BoundedValue = Union[int, Cutoff]


def check_base(k: int):
    """ 밑 k 는 2 이상이어야 한다 """
    if k < 2:
        raise ValueError(f"base k must be >= 2, got {k}")


def _check_nat(name: str, value: int):
    if value < 0:
        raise ValueError(f"{name} must be a natural number, got {value}")


def bounded_pow(k: int, b: int, bound: int) -> BoundedValue:
    """
    k^b 를 square-and-multiply 로 계산하되, 곱셈마다 상한을 검사한다.

    k >= 2 이므로 b >= bound.bit_length() 이면 k^b >= 2^b > bound 이다.
    """
    if b >= bound.bit_length():
        return EXCEEDS_BOUND
    result = 1
    square = k
    e = b
    while e:
        if e & 1:
            result *= square
            if result > bound:
                return EXCEEDS_BOUND
        e >>= 1
        if e:
            square *= square
            if square > bound:
                return EXCEEDS_BOUND
    return result


@lru_cache(maxsize=1 << 14)
def _ack(a: int, k: int, b: int, bound: int) -> BoundedValue:
    if a == 0:
        return bounded_pow(k, b, bound)
    value = _iterate(a - 1, k, 0, k, bound)
    step = 0
    while step < b and value is not EXCEEDS_BOUND:
        value = _iterate(a - 1, k, value, k, bound)
        step += 1
    return value


def _iterate(a: int, k: int, x: int, times: int, bound: int) -> BoundedValue:
    if x > bound:
        return EXCEEDS_BOUND
    value = x
    done = 0
    # A_a(k,x) > x 이므로 반복은 상한에 빠르게 도달한다
    while done < times:
        value = _ack(a, k, value, bound)
        if value is EXCEEDS_BOUND:
            return EXCEEDS_BOUND
        done += 1
    return value


# k -> (A_0(k,0), A_1(k,0), ... 중 계산된 값들, 다음 값의 비트 길이 하한)
_zero_thresholds = {}


def ack_index_ceiling(k: int, bound: int) -> int:
    """
    A_a(k,0) > bound 를 만족하는 가장 작은 a.

    A_a(k,0) 값들을 밑마다 한 번씩만 계산해 두고, 다음 값은 "bound 의 비트 길이보다 길다" 는 사실만 기록한다.
    """
    check_base(k)
    values, above_bits = _zero_thresholds.get(k, ((), -1))
    while True:
        count = sum(1 for v in values if v <= bound)
        if count < len(values) or bound.bit_length() <= above_bits:
            return count
        bits = bound.bit_length()
        following = _ack(len(values), k, 0, (1 << bits) - 1)
        if following is EXCEEDS_BOUND:
            above_bits = bits
        else:
            values = values + (following,)
        _zero_thresholds[k] = (values, above_bits)


def ack_eval(a: int, k: int, b: int, bound: int) -> BoundedValue:
    """
    A_a(k, b) 를 상한 bound 아래에서 계산한다.

    :return: A_a(k,b) <= bound 이면 정확한 값, 아니면 EXCEEDS_BOUND
    """
    check_base(k)
    _check_nat("a", a)
    _check_nat("b", b)
    _check_nat("bound", bound)
    # A_a(k,b) >= A_a(k,0) 이고 a 에 대해 단조 증가하므로, 거대한 a 는 재귀 없이 거른다
    if a >= ack_index_ceiling(k, bound):
        return EXCEEDS_BOUND
    return _ack(a, k, b, bound)


def ack_iter(a: int, k: int, x: int, times: int, bound: int) -> BoundedValue:
    """ x ↦ A_a(k, x) 를 times 번 합성한 값 A_a^times(k,·)(x) """
    check_base(k)
    _check_nat("a", a)
    _check_nat("x", x)
    _check_nat("times", times)
    _check_nat("bound", bound)
    if times > 0 and a >= ack_index_ceiling(k, bound):
        return EXCEEDS_BOUND
    return _iterate(a, k, x, times, bound)


# ✅ 사용 예시
if __name__ == "__main__":
    print("A_1(3,0) =", ack_eval(1, 3, 0, 10 ** 6))
    print("A_2(2,1) =", ack_eval(2, 2, 1, 10 ** 100))
