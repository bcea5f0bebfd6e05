# 📌 고전 Goodstein 과정의 지수 기반 표현 (hereditary base-k)
# m = Σ k^e_i · d_i (0 < d_i < k), 지수 e_i 도 같은 방식으로 재귀적으로 쓴다.
# 모든 k 를 k+1 로 바꾸고 다시 계산하는 것이 고전 밑 변환이다.

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from ackermann.ackmath import EXCEEDS_BOUND, BoundedValue, bounded_pow, check_base

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HereditaryTerm:
    """ (지수 트리, 자릿값) 쌍의 합, 지수 내림차순. 빈 합이 0 """
    digits: Tuple[Tuple["HereditaryTerm", int], ...] = ()


@lru_cache(maxsize=1 << 12)
def to_hereditary(m: int, k: int) -> HereditaryTerm:
    """ m 의 밑 k 지수 기반 표현 """
    check_base(k)
    if m < 0:
        raise ValueError(f"m must be a natural number, got {m}")
    digits = []
    exponent = 0
    while m:
        m, d = divmod(m, k)
        if d:
            digits.append((exponent, d))
        exponent += 1
    return HereditaryTerm(tuple((to_hereditary(e, k), d) for e, d in reversed(digits)))


def hereditary_eval(t: HereditaryTerm, base: int, bound: int) -> BoundedValue:
    """ 표현을 밑 base 로 읽은 값 (컷오프 적용) """
    total = 0
    for exponent, d in t.digits:
        e = hereditary_eval(exponent, base, bound)
        if e is EXCEEDS_BOUND:
            return EXCEEDS_BOUND
        power = bounded_pow(base, e, bound)
        if power is EXCEEDS_BOUND or d > bound // power:
            return EXCEEDS_BOUND
        total += power * d
        if total > bound:
            return EXCEEDS_BOUND
    return total


def hereditary_rewrite(m: int, k: int, bound: int) -> BoundedValue:
    """ m 의 밑 k 지수 기반 표현에서 k 를 모두 k+1 로 바꾼 값 """
    check_base(k)
    return hereditary_eval(to_hereditary(m, k), k + 1, bound)


def render_hereditary(t: HereditaryTerm, k: int) -> str:
    """ 예: 20 (k=2) → "2^(2^(2)) + 2^(2)" """
    if not t.digits:
        return "0"
    parts = []
    for exponent, d in t.digits:
        if not exponent.digits:
            parts.append(str(d))
            continue
        if exponent.digits == ((HereditaryTerm(), 1),):
            text = str(k)
        else:
            text = f"{k}^({render_hereditary(exponent, k)})"
        parts.append(text if d == 1 else f"{text}*{d}")
    return " + ".join(parts)


# ✅ 사용 예시
if __name__ == "__main__":
    print(render_hereditary(to_hereditary(20, 2), 2))
    print(hereditary_rewrite(20, 2, 10 ** 50) == 3 ** 27 + 27)
