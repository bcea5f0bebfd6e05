import pytest
from hypothesis import given, strategies as st

from ackermann.ackmath import EXCEEDS_BOUND, _ack, ack_eval, ack_index_ceiling, ack_iter, bounded_pow


def naive_ack(a, k, b):
    """ 상한 없는 직접 재귀 (작은 값 전용 오라클) """
    if a == 0:
        return k ** b
    value = 0
    for _ in range(k):
        value = naive_ack(a - 1, k, value)
    for _ in range(b):
        for _ in range(k):
            value = naive_ack(a - 1, k, value)
    return value


@pytest.mark.parametrize("a, k, b, bound, expected", [
    (0, 2, 3, 100, 8),
    (1, 2, 1, 100, 16),
    (1, 3, 0, 10 ** 6, 27),
    (1, 2, 0, 10, 2),
    (2, 2, 0, 10, EXCEEDS_BOUND),
    (0, 5, 0, 0, EXCEEDS_BOUND),
])
def test_ack_eval_examples(a, k, b, bound, expected):
    assert ack_eval(a, k, b, bound) == expected


def test_ack_eval_cuts_off_astronomical_values():
    assert ack_eval(2, 2, 1, 10 ** 100) is EXCEEDS_BOUND
    assert ack_eval(1, 4, 0, 10 ** 200) == 4 ** 256
    assert ack_eval(2, 2, 0, 2 ** 65536) == 2 ** 65536
    assert ack_eval(2, 2, 0, 2 ** 65536 - 1) is EXCEEDS_BOUND


def test_ack_eval_exact_at_bound():
    # 값이 정확히 상한과 같으면 잘리지 않는다
    assert ack_eval(1, 3, 0, 27) == 27
    assert ack_eval(1, 3, 0, 26) is EXCEEDS_BOUND


def test_ack_eval_huge_first_argument_returns_marker():
    assert ack_eval(10 ** 30, 2, 0, 10 ** 100) is EXCEEDS_BOUND


@pytest.mark.parametrize("a, k, b", [(0, 1, 0), (0, 0, 3)])
def test_ack_eval_rejects_small_base(a, k, b):
    with pytest.raises(ValueError):
        ack_eval(a, k, b, 100)


def test_ack_eval_rejects_negative_arguments():
    with pytest.raises(ValueError):
        ack_eval(-1, 2, 0, 10)
    with pytest.raises(ValueError):
        ack_eval(0, 2, -1, 10)


@pytest.mark.parametrize("a, k, x, times, bound, expected", [
    (0, 2, 0, 2, 100, 2),
    (0, 3, 0, 3, 100, 27),
    (5, 7, 9, 0, 10, 9),
    (0, 2, 3, 2, 10, EXCEEDS_BOUND),
])
def test_ack_iter_examples(a, k, x, times, bound, expected):
    assert ack_iter(a, k, x, times, bound) == expected


def test_bounded_pow():
    assert bounded_pow(3, 4, 81) == 81
    assert bounded_pow(3, 4, 80) is EXCEEDS_BOUND
    assert bounded_pow(2, 10 ** 50, 10 ** 6) is EXCEEDS_BOUND
    assert bounded_pow(7, 0, 1) == 1


def test_ack_index_ceiling():
    # A_0(2,0) = 1, A_1(2,0) = 2, A_2(2,0) = 2^65536
    assert ack_index_ceiling(2, 0) == 0
    assert ack_index_ceiling(2, 1) == 1
    assert ack_index_ceiling(2, 3) == 2
    assert ack_index_ceiling(2, 4) == 2
    assert ack_index_ceiling(2, 2 ** 65536) == 3
    assert ack_index_ceiling(3, 26) == 1
    assert ack_index_ceiling(3, 27) == 2


@given(st.integers(0, 2), st.integers(2, 4), st.integers(0, 3))
def test_ack_eval_agrees_with_naive_recursion(a, k, b):
    bound = 10 ** 6
    value = ack_eval(a, k, b, bound)
    if value is EXCEEDS_BOUND:
        # 오라클도 상한을 넘는 경우만 (거대한 값은 계산하지 않고 a, b 를 줄여 확인)
        assert a >= 1
    else:
        assert value == naive_ack(a, k, b)
        assert value <= bound


@given(st.integers(0, 2), st.integers(2, 4), st.integers(0, 5))
def test_ack_eval_strictly_increasing_in_b(a, k, b):
    bound = 10 ** 12
    low, high = ack_eval(a, k, b, bound), ack_eval(a, k, b + 1, bound)
    if high is not EXCEEDS_BOUND:
        assert low < high


class RecordingInt(int):
    """ 곱셈 결과의 비트 길이를 기록하는 int """
    bits = []

    def __mul__(self, other):
        product = RecordingInt(int(self) * int(other))
        RecordingInt.bits.append(product.bit_length())
        return product

    __rmul__ = __mul__


@pytest.mark.parametrize("a, k, b, bound", [
    (0, 3, 200, 10 ** 100),
    (1, 2, 1, 10 ** 6),
    (1, 5, 3, 10 ** 300),
    (2, 2, 0, 10 ** 20000),
    (2, 3, 0, 10 ** 50),
    (3, 2, 0, 10 ** 1000),
])
def test_ack_eval_products_stay_below_bound_squared(a, k, b, bound):
    _ack.cache_clear()
    RecordingInt.bits = []
    ack_eval(a, RecordingInt(k), b, bound)
    assert max(RecordingInt.bits, default=0) <= 2 * bound.bit_length()


def test_two_to_the_65536_is_computed_through_recorded_products():
    _ack.cache_clear()
    RecordingInt.bits = []
    assert ack_eval(2, RecordingInt(2), 0, 10 ** 20000) == 2 ** 65536
    assert 65537 in RecordingInt.bits
