# 📌 정규형 · 밑 변환 · ψ/χ · Goodstein 보조정리 검증 (작은 범위 전수 조사)
# 검사마다 SuiteReport 하나 ("lemmas/<이름>")
# 범위 검사는 (검사, k, 모드, 구간) 조각으로 나뉘어 병렬 워커에 분배할 수 있다.

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ackermann.ackmath import EXCEEDS_BOUND, ack_eval, ack_iter
from ackermann.base_change import base_change, bc_nested, bc_tree, bc_unnested
from ackermann.normal_form import Mode, compare_terms, decompose, eval_tree, index_depth, is_normal_form, to_tree
from config import Config
from goodstein.goodstein import Variant, o_sequence, run
from ordinals.ordinal import Order, cmp, descent, eps, eps_depth, eps_indices, fund, is_finite, nat
from ordinals.ordinal_map import o_value, ordinal_of
from verification.report import Failure, SuiteReport, timed

logger = logging.getLogger(__name__)

# 한계를 주지 않았을 때의 검사별 기본 범위
DEFAULT_LIMITS = {
    "uniqueness": 10_000,
    "round_trip": 100_000,
    "nf_validity": 10_000,
    "nf_powers": 100_000,
    "bc_inflation": 3000,
    "bc_monotone": 3000,
    "bc_normal_form": 3000,
    "psi_monotone": 3000,
    "psi_invariance": 2000,
    "majorization": 2000,
    "descent_step": 2000,
    "psi_range": 3000,
    "goodstein_descent": 50,
}
NF_BASES = (2, 3, 4)
BC_BASES = (2, 3)
BOTH_MODES = (Mode.UNNESTED, Mode.NESTED)
GOODSTEIN_STEPS = 15
ITERATE_BOUND = 10 ** 6

# 검사 함수: (k, mode, c, limit, bound) -> None (건너뜀) 또는 (ok, 기대 관계, 실제 값)
Outcome = Optional[Tuple[bool, str, object]]


def _lemma_conditions(c: int, k: int, a: int, b: int, m: int, n: int) -> bool:
    power = ack_eval(a, k, b, c)
    return (
        m >= 1
        and power is not EXCEEDS_BOUND
        and c == power * m + n
        and ack_eval(a, k, 0, c) is not EXCEEDS_BOUND
        and ack_eval(a + 1, k, 0, c) is EXCEEDS_BOUND
        and ack_eval(a, k, b + 1, c) is EXCEEDS_BOUND
        and n < power
    )


def _check_uniqueness(k, mode, c, limit, bound) -> Outcome:
    found = []
    a = 0
    while ack_eval(a, k, 0, c) is not EXCEEDS_BOUND:
        b = 0
        while True:
            power = ack_eval(a, k, b, c)
            if power is EXCEEDS_BOUND:
                break
            m, n = divmod(c, power)
            if _lemma_conditions(c, k, a, b, m, n):
                found.append((a, b, m, n))
            b += 1
        a += 1
    expected = [decompose(c, k)]
    return found == expected, f"unique tuple {expected[0]}", found


def _check_round_trip(k, mode, c, limit, bound) -> Outcome:
    got = eval_tree(to_tree(c, k, mode), k, c)
    return got == c, f"eval_tree(to_tree(c)) == {c}", got


def _check_nf_validity(k, mode, c, limit, bound) -> Outcome:
    return is_normal_form(to_tree(c, k, mode), k, bound=c), "is_normal_form", False


def _check_bc_inflation(k, mode, c, limit, bound) -> Outcome:
    image = base_change(c, k, bound, mode)
    # 상한 초과는 image > bound >= c 를 뜻한다
    ok = image is EXCEEDS_BOUND or c <= image
    if c < k:
        ok = ok and image == c
    return ok, "c <= bc(c)" if c >= k else "bc(c) == c (digit)", image


def _check_bc_monotone(k, mode, c, limit, bound) -> Outcome:
    if c + 1 > limit:
        return None
    order = compare_terms(to_tree(c, k, mode), to_tree(c + 1, k, mode), k + 1, bound)
    return order is Order.LT, "bc(c) < bc(c+1)", order


def _check_bc_normal_form(k, mode, c, limit, bound) -> Outcome:
    image = base_change(c, k, bound, mode)
    if image is EXCEEDS_BOUND:
        return None
    tree = to_tree(c, k, mode)
    ok = to_tree(image, k + 1, mode) == tree and bc_tree(tree, k, bound) == image
    return ok, "to_tree(bc(c), k+1) == to_tree(c, k)", image


def _check_psi_monotone(k, mode, c, limit, bound) -> Outcome:
    if c + 1 > limit:
        return None
    low, high = ordinal_of(c, k, mode), ordinal_of(c + 1, k, mode)
    return cmp(low, high) is Order.LT, "o(c) < o(c+1)", f"{low} vs {high}"


def _check_psi_invariance(k, mode, c, limit, bound) -> Outcome:
    image = base_change(c, k, bound, mode)
    if image is EXCEEDS_BOUND:
        return None
    before, after = ordinal_of(c, k, mode), ordinal_of(image, k + 1, mode)
    return before == after, f"o_(k+1)(bc(c)) == {before}", after


def _check_majorization(k, mode, c, limit, bound) -> Outcome:
    image = base_change(c, k, bound, mode)
    if image is EXCEEDS_BOUND:
        return None
    target = fund(ordinal_of(c, k, mode), k)
    got = ordinal_of(image - 1, k + 1, mode)
    return cmp(got, target) is not Order.LT, f">= {target}", got


def _check_descent_step(k, mode, c, limit, bound) -> Outcome:
    image = base_change(c, k, bound, mode)
    if image is EXCEEDS_BOUND:
        return None
    before, after = ordinal_of(c, k, mode), ordinal_of(image - 1, k + 1, mode)
    return cmp(after, before) is Order.LT, f"< {before}", after


def _check_psi_range(k, mode, c, limit, bound) -> Outcome:
    alpha = ordinal_of(c, k, mode)
    if mode is Mode.UNNESTED:
        return all(is_finite(g) for g in eps_indices(alpha)), "finite eps subscripts", alpha
    depth = index_depth(to_tree(c, k, mode))
    return eps_depth(alpha) <= depth, f"eps depth <= {depth}", eps_depth(alpha)


_RANGE_CHECKS: Dict[str, Callable[..., Outcome]] = {
    "uniqueness": _check_uniqueness,
    "round_trip": _check_round_trip,
    "nf_validity": _check_nf_validity,
    "bc_inflation": _check_bc_inflation,
    "bc_monotone": _check_bc_monotone,
    "bc_normal_form": _check_bc_normal_form,
    "psi_monotone": _check_psi_monotone,
    "psi_invariance": _check_psi_invariance,
    "majorization": _check_majorization,
    "descent_step": _check_descent_step,
    "psi_range": _check_psi_range,
}


def _run_chunk(task) -> Tuple[int, List[Failure]]:
    """ 워커 진입점: 한 조각 (검사, k, 모드, lo..hi) 을 처리한다 """
    name, k, mode, lo, hi, limit, bound = task
    check = _RANGE_CHECKS[name]
    cases = 0
    failures = []
    for c in range(lo, hi + 1):
        outcome = check(k, mode, c, limit, bound)
        if outcome is None:
            continue
        ok, expected, got = outcome
        cases += 1
        if not ok:
            failures.append(Failure((k, mode.value, c), f"k={k} mode={mode.value} c={c}", expected, str(got)))
    return cases, failures


def _chunks(lo: int, hi: int, parts: int) -> List[Tuple[int, int]]:
    if hi < lo:
        return []
    size = max(1, -(-(hi - lo + 1) // max(1, parts)))
    return [(start, min(hi, start + size - 1)) for start in range(lo, hi + 1, size)]


class LemmaSuite:
    """
    보조정리 전수 조사.

    :param limit: 모든 범위 검사의 c 상한 (None 이면 검사별 기본값)
    :param k_max: 밑 범위 2..k_max (None 이면 검사별 기본값)
    :param workers: 병렬 프로세스 수 (1 이면 순차 실행)
    """

    def __init__(self, limit: Optional[int] = None, k_max: Optional[int] = None,
                 workers: Optional[int] = None, bound: Optional[int] = None):
        if limit is not None and limit < 1:
            raise ValueError(f"sweep limit must be >= 1, got {limit}")
        if k_max is not None and k_max < 2:
            raise ValueError(f"k_max must be >= 2, got {k_max}")
        self.limit = limit
        self.k_max = k_max
        self.workers = Config.VERIFY_WORKERS if workers is None else max(1, workers)
        self.bound = Config.default_bound() if bound is None else bound

    def _limit(self, name: str) -> int:
        return DEFAULT_LIMITS[name] if self.limit is None else self.limit

    def _bases(self, default: Sequence[int]) -> Tuple[int, ...]:
        return tuple(default) if self.k_max is None else tuple(range(2, self.k_max + 1))

    def _map(self, tasks) -> List[Tuple[int, List[Failure]]]:
        if self.workers <= 1 or len(tasks) <= 1:
            return [_run_chunk(task) for task in tasks]
        with ProcessPoolExecutor(max_workers=self.workers) as pool:
            return list(pool.map(_run_chunk, tasks))

    def sweep(self, name: str, bases: Sequence[int], modes: Sequence[Mode], start: int = 1,
              halve_nested: bool = False, advisory: bool = False) -> SuiteReport:
        """ c = start..limit, k ∈ bases, 모드별 범위 검사 (χ 쪽은 halve_nested 면 절반 범위) """
        limit = self._limit(name)
        bases = self._bases(bases)
        report = SuiteReport(f"lemmas/{name}", f"c<={limit}, k={bases[0]}..{bases[-1]}", advisory=advisory)
        tasks = []
        for k in bases:
            for mode in modes:
                mode_limit = limit // 2 if halve_nested and mode is Mode.NESTED else limit
                for lo, hi in _chunks(start, mode_limit, self.workers):
                    tasks.append((name, k, mode, lo, hi, mode_limit, self.bound))
        with timed(report):
            for cases, failures in self._map(tasks):
                report.merge(cases, failures)
        return report

    def nf_iterates(self) -> SuiteReport:
        """ A_a^ℓ(k,0) (a <= 2, 0 < ℓ < k) 는 m = 1, n = 0 인 정규형 """
        bases = self._bases(NF_BASES)
        report = SuiteReport("lemmas/nf_iterates", f"value<={ITERATE_BOUND}, k={bases[0]}..{bases[-1]}")
        with timed(report):
            for k in bases:
                for a in range(3):
                    for ell in range(1, k):
                        value = ack_iter(a, k, 0, ell, ITERATE_BOUND)
                        if value is EXCEEDS_BOUND:
                            continue
                        nf = decompose(value, k)
                        ok = is_normal_form(to_tree(value, k), k, bound=value) and nf[2:] == (1, 0)
                        report.check(ok, (k, a, ell), f"k={k} a={a} l={ell} value={value}",
                                     "normal form with m=1, n=0", nf)
        return report

    def nf_powers(self) -> SuiteReport:
        """ c =_NF A_a(k,b)·m + n 이면 ℓ < b 인 모든 A_a(k,ℓ) 도 정규형 """
        limit = self._limit("nf_powers")
        bases = self._bases(NF_BASES)
        report = SuiteReport("lemmas/nf_powers", f"c<={limit}, k={bases[0]}..{bases[-1]}")
        with timed(report):
            for k in bases:
                pairs = set()
                for c in range(1, limit + 1):
                    a, b, _, _ = decompose(c, k)
                    pairs.update((a, ell) for ell in range(b))
                for a, ell in sorted(pairs):
                    value = ack_eval(a, k, ell, limit)
                    ok = decompose(value, k) == (a, ell, 1, 0) and is_normal_form(to_tree(value, k), k, bound=value)
                    report.check(ok, (k, a, ell), f"k={k} A_{a}({k},{ell})={value}", "normal form", decompose(value, k))
        return report

    def bc_agreement(self) -> SuiteReport:
        """ a-첨자가 밑 변환의 고정점이면 두 밑 변환이 같다 (k = 2, c <= 20) """
        report = SuiteReport("lemmas/bc_agreement", "c<=20, k=2")
        with timed(report):
            for c in range(21):
                plain, nested = bc_unnested(c, 2, self.bound), bc_nested(c, 2, self.bound)
                report.check(plain == nested, (c,), f"c={c}", f"bc_nested == {plain}", nested)
        return report

    def o_anchors(self) -> SuiteReport:
        """ o(A_ℓ(2,0), 0) = ε_ℓ (ℓ = 1, 2) 와 o(3,1) = ε_1 """
        report = SuiteReport("lemmas/o_anchors", "l in {1,2}")
        with timed(report):
            for ell in (1, 2):
                start = ack_eval(ell, 2, 0, self.bound)
                if start is EXCEEDS_BOUND:
                    report.check(False, (ell,), f"A_{ell}(2,0)", "value within bound", start)
                    continue
                got = o_value(start, 0, Mode.UNNESTED, self.bound)
                report.check(got == eps(nat(ell)), (ell,), f"o(A_{ell}(2,0), 0)", f"e({ell})", got)
            got = o_value(3, 1, Mode.UNNESTED, self.bound)
            report.check(got == eps(nat(1)), (3,), "o(3, 1)", "e(1)", got)
        return report

    def goodstein_descent(self) -> SuiteReport:
        """ 처음 15 단계 동안 o 값이 엄격히 감소, ℓ ∈ {0,1} 은 종료, 재실행은 같은 trace """
        # trace 는 ℓ 마다 15 단계씩 돌기 때문에 기본 범위보다 넓히지 않는다
        limit = min(self._limit("goodstein_descent"), DEFAULT_LIMITS["goodstein_descent"])
        report = SuiteReport("lemmas/goodstein_descent", f"l<={limit}, steps={GOODSTEIN_STEPS}")
        with timed(report):
            for variant in (Variant.UNNESTED, Variant.NESTED):
                for ell in range(limit + 1):
                    trace = run(variant, ell, GOODSTEIN_STEPS, self.bound, with_ordinals=True)
                    values = o_sequence(trace)
                    for k, (before, after) in enumerate(zip(values, values[1:])):
                        report.check(cmp(after, before) is Order.LT, (variant.value, ell, k),
                                     f"{variant.value} l={ell} k={k}", f"o(l,{k + 1}) < {before}", after)
                    if ell <= 1:
                        report.check(trace.terminated, (variant.value, ell, -1), f"{variant.value} l={ell}",
                                     "terminated", trace.values)
                    if ell <= 5:
                        again = run(variant, ell, GOODSTEIN_STEPS, self.bound, with_ordinals=True)
                        report.check(again.to_dict() == trace.to_dict(), (variant.value, ell, -2),
                                     f"{variant.value} l={ell}", "identical re-run", "trace differs")
        return report

    def trace_majorization(self) -> SuiteReport:
        """ o(A_ℓ(2,0), k) >= ε_ℓ[1][2]...[k] (ℓ = 1, 2, 기록된 단계) """
        report = SuiteReport("lemmas/trace_majorization", f"l in {{1,2}}, steps={GOODSTEIN_STEPS}")
        with timed(report):
            for ell in (1, 2):
                start = ack_eval(ell, 2, 0, self.bound)
                if start is EXCEEDS_BOUND:
                    report.check(False, (ell, -1), f"A_{ell}(2,0)", "value within bound", start)
                    continue
                trace = run(Variant.UNNESTED, start, GOODSTEIN_STEPS, self.bound, with_ordinals=True)
                canonical = descent(eps(nat(ell)), GOODSTEIN_STEPS)
                for k, alpha in enumerate(o_sequence(trace)):
                    floor = canonical[k] if k < len(canonical) else nat(0)
                    report.check(cmp(alpha, floor) is not Order.LT, (ell, k), f"l={ell} k={k}",
                                 f">= {floor}", alpha)
        return report

    def run_all(self) -> List[SuiteReport]:
        logger.info(f"📌 보조정리 검증 시작 (limit={self.limit}, k_max={self.k_max}, workers={self.workers})")
        return [
            self.sweep("uniqueness", NF_BASES, (Mode.UNNESTED,)),
            self.sweep("round_trip", NF_BASES, BOTH_MODES, start=0),
            self.sweep("nf_validity", NF_BASES, BOTH_MODES),
            self.nf_iterates(),
            self.nf_powers(),
            self.sweep("bc_inflation", BC_BASES, BOTH_MODES, start=0),
            self.sweep("bc_monotone", BC_BASES, BOTH_MODES, start=0),
            self.sweep("bc_normal_form", BC_BASES, BOTH_MODES, start=0),
            self.bc_agreement(),
            self.sweep("psi_monotone", BC_BASES, BOTH_MODES, start=0, halve_nested=True),
            self.sweep("psi_invariance", BC_BASES, BOTH_MODES, start=0, halve_nested=True),
            # ψ_{k+1}(0) = 0 < ε_0[k] 이므로 c = 1 부터 반례가 있고, 끝자리 항을 따라 전파된다
            self.sweep("majorization", BC_BASES, BOTH_MODES, halve_nested=True, advisory=True),
            self.sweep("descent_step", BC_BASES, BOTH_MODES, halve_nested=True),
            self.sweep("psi_range", BC_BASES, BOTH_MODES),
            self.o_anchors(),
            self.goodstein_descent(),
            self.trace_majorization(),
        ]


# ✅ 사용 예시
if __name__ == "__main__":
    for report in LemmaSuite(limit=200, k_max=3).run_all():
        print(report.suite, report.cases, len(report.failures))
