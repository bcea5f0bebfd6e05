# 📌 검증 스위트 결과 보고서
# 스위트마다 검사한 경우 수, 실패 목록 (입력, 기대 관계, 실제 값), 소요 시간을 기록한다.
# 실패가 없으면 통과.

import logging
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Iterable, List, Tuple

import pandas as pd

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Failure:
    key: Tuple
    input: str
    expected: str
    got: str

    def to_dict(self) -> dict:
        return {"input": self.input, "expected": self.expected, "got": self.got}


@dataclass
class SuiteReport:
    suite: str
    bound: str
    cases: int = 0
    failures: List[Failure] = field(default_factory=list)
    elapsed_ms: int = 0
    # 참고용 검사: 실패를 보고하지만 verify 종료 코드에는 반영하지 않는다
    advisory: bool = False

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, key: Tuple, input: str, expected: str, got) -> bool:
        """ 한 경우를 기록한다. ok 가 False 면 실패로 남긴다 """
        self.cases += 1
        if not ok:
            self.failures.append(Failure(key, input, expected, str(got)))
        return ok

    def merge(self, cases: int, failures: Iterable[Failure]):
        self.cases += cases
        self.failures.extend(failures)

    def finalize(self):
        """ 병렬 조각을 합친 뒤 입력 순으로 정렬 (결정적 출력) """
        self.failures.sort(key=lambda f: f.key)
        if self.failures and self.advisory:
            logger.warning(f"📌 {self.suite}: {len(self.failures)}/{self.cases} 반례 (참고용)")
        elif self.failures:
            logger.warning(f"🚨 {self.suite}: {len(self.failures)}/{self.cases} 실패")
        else:
            logger.info(f"✅ {self.suite}: {self.cases} 경우 통과 ({self.elapsed_ms} ms)")

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "bound": self.bound,
            "cases": self.cases,
            "failures": [f.to_dict() for f in self.failures],
            "elapsed_ms": self.elapsed_ms,
            "advisory": self.advisory,
        }


@contextmanager
def timed(report: SuiteReport):
    """ with 블록의 소요 시간을 report.elapsed_ms 에 기록하고 마무리한다 """
    started = time.perf_counter()
    try:
        yield report
    finally:
        report.elapsed_ms = int((time.perf_counter() - started) * 1000)
        report.finalize()


def summary_frame(reports: List[SuiteReport]) -> pd.DataFrame:
    """ 스위트별 요약 표 """
    return pd.DataFrame(
        [
            {
                "suite": r.suite,
                "bound": r.bound,
                "cases": r.cases,
                "failures": len(r.failures),
                "passed": r.passed,
                "elapsed_ms": r.elapsed_ms,
                "advisory": r.advisory,
            }
            for r in reports
        ],
        columns=["suite", "bound", "cases", "failures", "passed", "elapsed_ms", "advisory"],
    )


def blocking_failures(reports: List[SuiteReport]) -> List[SuiteReport]:
    """ 종료 코드에 반영되는 (참고용이 아닌) 실패 스위트 """
    return [r for r in reports if not r.passed and not r.advisory]
