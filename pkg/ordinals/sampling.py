# 📌 검증 스위트용 표준형 서수 무작위 생성기 (numpy Generator, 시드 고정)
# 깊이 <= 4, 계수 <= 5, ε 중첩 <= 2

import logging
from functools import cmp_to_key, reduce
from typing import List

import numpy as np

from ordinals.ordinal import ONE, ZERO, Ordinal, add, cmp, eps, fund, omega_pow, times

logger = logging.getLogger(__name__)


class OrdinalSampler:
    def __init__(self, seed: int, max_depth: int = 4, max_coefficient: int = 5,
                 max_eps_nesting: int = 2, max_terms: int = 3):
        self.rng = np.random.default_rng(seed)
        self.max_depth = max_depth
        self.max_coefficient = max_coefficient
        self.max_eps_nesting = max_eps_nesting
        self.max_terms = max_terms

    def _head(self, depth: int, eps_budget: int) -> Ordinal:
        roll = self.rng.random()
        if depth <= 0 or roll < 0.2:
            return ONE
        if eps_budget > 0 and roll < 0.45:
            return eps(self.ordinal(depth - 1, eps_budget - 1))
        return omega_pow(self.ordinal(depth - 1, eps_budget))

    def ordinal(self, depth: int = None, eps_budget: int = None) -> Ordinal:
        """ 무작위 표준형 서수 (0 포함) """
        depth = self.max_depth if depth is None else depth
        eps_budget = self.max_eps_nesting if eps_budget is None else eps_budget
        count = int(self.rng.integers(0, self.max_terms + 1))
        monomials = [
            times(self._head(depth, eps_budget), int(self.rng.integers(1, self.max_coefficient + 1)))
            for _ in range(count)
        ]
        # 내림차순으로 더하면 항이 흡수되지 않고 같은 머리만 합쳐진다
        monomials.sort(key=cmp_to_key(cmp), reverse=True)
        return reduce(add, monomials, ZERO)

    def positive(self) -> Ordinal:
        """ 0 이 아닌 무작위 서수 """
        while True:
            alpha = self.ordinal()
            if not alpha.is_zero:
                return alpha

    def index(self, low: int = 1, high: int = 3) -> int:
        return int(self.rng.integers(low, high + 1))

    def between(self, alpha: Ordinal, n: int, count: int = 4) -> List[Ordinal]:
        """
        α[n] < β < α 인 β 후보들.

        무작위 표본만으로는 구간에 잘 들어가지 않으므로 α[n+j] 와 α[n] + δ 꼴도 섞는다.
        """
        low = fund(alpha, n)
        candidates = [fund(alpha, n + j) for j in range(1, 4)]
        candidates += [add(low, self.ordinal(depth=2)) for _ in range(count)]
        candidates += [self.ordinal() for _ in range(count)]
        return [beta for beta in candidates if cmp(low, beta) < 0 < cmp(alpha, beta)]

    def chain(self, length: int) -> List[Ordinal]:
        """ ξ_n[n+1] <= ξ_{n+1} <= ξ_n 을 만족하는 무작위 열 """
        xi = [self.positive()]
        for n in range(length - 1):
            current = xi[-1]
            low = fund(current, n + 1)
            options = [current, low] + self.between(current, n + 1, count=2)
            xi.append(options[int(self.rng.integers(0, len(options)))])
        return xi


# ✅ 사용 예시
if __name__ == "__main__":
    sampler = OrdinalSampler(seed=42)
    for _ in range(5):
        print(sampler.positive())
