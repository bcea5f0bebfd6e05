# 📌 서수 표기 체계 성질 검증 (시드 고정 표본)
# 전순서, 기본열 감소/단조/수렴, 따름수, Bachmann 성질, 최소 하강열 지배, 덧셈 법칙, 표준형 유지, 텍스트 왕복

import logging
from typing import List, Optional

from config import Config
from ordinals.notation import parse, to_text
from ordinals.ordinal import (
    ONE, ZERO, Order, Reach, add, cmp, descent, eps, fund, is_canonical, is_limit, omega_pow,
    step_down_reachable, times,
)
from ordinals.sampling import OrdinalSampler
from verification.report import SuiteReport, timed

logger = logging.getLogger(__name__)

FUND_INDICES = (1, 2, 3)
CHAIN_LENGTH = 6
STEP_DOWN_CAP = 200
STEP_DOWN_MAX_DEPTH = 64


class OrdinalSuite:
    """
    표본 기반 서수 검증. 같은 시드면 결과가 비트 단위로 같다.

    :param seed: numpy 난수 시드
    :param samples: 전순서 · 기본열 검사의 표본 수 (Bachmann, 지배 검사는 1/10)
    """

    def __init__(self, seed: Optional[int] = None, samples: Optional[int] = None):
        self.seed = Config.VERIFY_SEED if seed is None else seed
        self.samples = Config.VERIFY_SAMPLES if samples is None else samples
        if self.samples < 1:
            raise ValueError(f"samples must be >= 1, got {self.samples}")

    def _sampler(self, salt: int) -> OrdinalSampler:
        # 검사마다 독립된 난수열: 검사 하나를 빼도 나머지 결과는 그대로
        return OrdinalSampler(seed=self.seed * 1000 + salt)

    def _report(self, name: str, count: int, advisory: bool = False) -> SuiteReport:
        return SuiteReport(f"ordinals/{name}", f"samples={count}, seed={self.seed}", advisory=advisory)

    def total_order(self) -> SuiteReport:
        sampler = self._sampler(1)
        report = self._report("total_order", self.samples)
        with timed(report):
            for i in range(self.samples):
                a, b, c = sampler.ordinal(), sampler.ordinal(), sampler.ordinal()
                ab, ba = cmp(a, b), cmp(b, a)
                trichotomy = ab == -ba and ((ab is Order.EQ) == (a == b))
                transitive = not (ab <= 0 and cmp(b, c) <= 0) or cmp(a, c) <= 0
                report.check(trichotomy and transitive, (i,), f"{a} | {b} | {c}",
                             "trichotomy and transitivity", f"{ab}, {cmp(b, c)}, {cmp(a, c)}")
        return report

    def fund_decreasing(self) -> SuiteReport:
        """ α > 0 이면 α[k] < α, k <= k' 이면 α[k] <= α[k'], α[k] = α 는 α = 0 일 때만 """
        sampler = self._sampler(2)
        report = self._report("fund_decreasing", self.samples)
        with timed(report):
            for k in FUND_INDICES:
                report.check(fund(ZERO, k) == ZERO, (-1, k), f"0 [{k}]", "0", fund(ZERO, k))
            for i in range(self.samples):
                alpha = sampler.positive()
                values = [fund(alpha, k) for k in FUND_INDICES]
                below = all(cmp(v, alpha) is Order.LT for v in values)
                monotone = all(cmp(x, y) <= 0 for x, y in zip(values, values[1:]))
                report.check(below and monotone, (i,), str(alpha), "a[1] <= a[2] <= a[3] < a",
                             ", ".join(map(str, values)))
        return report

    def fund_successor(self) -> SuiteReport:
        """ (α+1)[k] = α """
        sampler = self._sampler(3)
        report = self._report("fund_successor", self.samples // 10)
        with timed(report):
            for i in range(self.samples // 10):
                alpha = sampler.ordinal()
                k = sampler.index(0, 3)
                got = fund(add(alpha, ONE), k)
                report.check(got == alpha, (i,), f"({alpha}+1)[{k}]", str(alpha), got)
        return report

    def fund_convergence(self) -> SuiteReport:
        """ 극한 λ 이면 λ[k] < λ[k+1] """
        sampler = self._sampler(4)
        report = self._report("fund_convergence", self.samples // 10)
        with timed(report):
            for i in range(self.samples // 10):
                alpha = sampler.positive()
                if not is_limit(alpha):
                    continue
                for k in FUND_INDICES:
                    low, high = fund(alpha, k), fund(alpha, k + 1)
                    report.check(cmp(low, high) is Order.LT, (i, k), f"{alpha} at k={k}",
                                 f"a[{k}] < a[{k + 1}]", f"{low} vs {high}")
        return report

    def bachmann(self) -> SuiteReport:
        """
        α[n] < β < α 이면 α[n] <= β[1] (β 는 구간 안에서 표본).

        ε 첨자가 따름수인 α 에서는 성립하지 않는 경우가 있어 참고용으로 보고한다 (예: α = ε_1, n = 1, β = ε_1[2]).
        """
        sampler = self._sampler(5)
        count = max(1, self.samples // 10)
        report = self._report("bachmann", count, advisory=True)
        with timed(report):
            for i in range(count):
                alpha = sampler.positive()
                n = sampler.index()
                low = fund(alpha, n)
                for j, beta in enumerate(sampler.between(alpha, n)):
                    got = fund(beta, 1)
                    report.check(cmp(low, got) <= 0, (i, j), f"a={alpha} n={n} b={beta}",
                                 f"b[1] >= {low}", got)
        return report

    def majorize(self) -> SuiteReport:
        """ ξ_n[n+1] <= ξ_{n+1} <= ξ_n 인 열은 ξ_n >= ξ_0[1]...[n] """
        sampler = self._sampler(6)
        count = max(1, self.samples // 10)
        report = self._report("majorize", count)
        with timed(report):
            for i in range(count):
                chain = sampler.chain(sampler.index(2, CHAIN_LENGTH))
                canonical = descent(chain[0], len(chain))
                for n, xi in enumerate(chain):
                    floor = canonical[n] if n < len(canonical) else ZERO
                    report.check(cmp(xi, floor) >= 0, (i, n), f"chain {' > '.join(map(str, chain))} n={n}",
                                 f">= {floor}", xi)
        return report

    def add_laws(self) -> SuiteReport:
        """ 결합법칙, 오른쪽 인자에 대한 엄격 단조성 """
        sampler = self._sampler(7)
        report = self._report("add_laws", self.samples // 10)
        with timed(report):
            for i in range(self.samples // 10):
                a, b, c = sampler.ordinal(), sampler.ordinal(), sampler.ordinal()
                associative = add(add(a, b), c) == add(a, add(b, c))
                order = cmp(b, c)
                monotone = order is Order.EQ or cmp(add(a, b), add(a, c)) is order
                report.check(associative and monotone, (i,), f"{a} | {b} | {c}",
                             "associative, right-monotone", f"{add(add(a, b), c)} vs {add(a, add(b, c))}")
        return report

    def canonical_closure(self) -> SuiteReport:
        """ 모든 연산의 결과가 표준형이고 텍스트 왕복이 항등 """
        sampler = self._sampler(8)
        report = self._report("canonical_closure", self.samples // 10)
        with timed(report):
            for i in range(self.samples // 10):
                a, b = sampler.ordinal(), sampler.ordinal()
                k = sampler.index(0, 3)
                results = [add(a, b), omega_pow(a), eps(a), times(a, k + 1), fund(a, k), parse(to_text(a))]
                ok = all(is_canonical(r) for r in results) and results[-1] == a
                report.check(ok, (i,), f"{a} | {b} | k={k}", "canonical results, round trip",
                             [to_text(r) for r in results])
        return report

    def _step_down_pairs(self, salt: int):
        sampler = self._sampler(salt)
        for i in range(max(1, self.samples // 100)):
            alpha = sampler.positive()
            k = sampler.index()
            beta = alpha
            for _ in range(sampler.index(1, 3)):
                beta = fund(beta, k)
            yield i, alpha, beta, k

    def step_down(self) -> SuiteReport:
        """ α[k]...[k] 는 ·[k] 로 도달 가능 """
        report = self._report("step_down", max(1, self.samples // 100))
        with timed(report):
            for i, alpha, beta, k in self._step_down_pairs(9):
                got = step_down_reachable(alpha, beta, k, STEP_DOWN_CAP)
                report.check(got is Reach.YES, (i,), f"{alpha} -> {beta} k={k}", "Yes", got.value)
        return report

    def step_down_monotone(self) -> SuiteReport:
        """ α ≼_k β 이면 α ≼_{k+1} β: ·[k+1] 로는 No 판정이 나오지 않아야 한다 (Unknown 은 통과) """
        report = self._report("step_down_monotone", max(1, self.samples // 100))
        with timed(report):
            for i, alpha, beta, k in self._step_down_pairs(9):
                got = step_down_reachable(alpha, beta, k + 1, STEP_DOWN_CAP, max_depth=STEP_DOWN_MAX_DEPTH)
                report.check(got is not Reach.NO, (i,), f"{alpha} -> {beta} k={k + 1}", "Yes or Unknown", got.value)
        return report

    def run_all(self) -> List[SuiteReport]:
        logger.info(f"📌 서수 검증 시작 (seed={self.seed}, samples={self.samples})")
        return [
            self.total_order(),
            self.fund_decreasing(),
            self.fund_successor(),
            self.fund_convergence(),
            self.bachmann(),
            self.majorize(),
            self.add_laws(),
            self.canonical_closure(),
            self.step_down(),
            self.step_down_monotone(),
        ]


# ✅ 사용 예시
if __name__ == "__main__":
    for report in OrdinalSuite(seed=42, samples=200).run_all():
        print(report.suite, report.cases, len(report.failures))
