# 📌 Goodstein 과정 실행기
# classic : g_{k+1} = g_k 의 지수 기반 표현에서 k+2 → k+3 후 1 감소
# unnested: b_{k+1} = b_k[k+2 ← k+3] - 1 (비중첩 Ackermann 정규형)
# nested  : c_{k+1} = c_k[k+2 ← k+3] - 1 (중첩 Ackermann 정규형)
# 값이 0 이 되면 종료, 단계 수 또는 상한에 걸리면 잘린 trace 를 남긴다.

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Union

import pandas as pd

from ackermann.ackmath import EXCEEDS_BOUND, BoundedValue, Cutoff, check_base
from ackermann.base_change import base_change
from ackermann.normal_form import Mode, render, to_tree
from config import Config
from goodstein.hereditary import hereditary_rewrite, render_hereditary, to_hereditary
from ordinals.ordinal import Ordinal
from ordinals.ordinal_map import ordinal_of

logger = logging.getLogger(__name__)

TOO_LARGE = "too_large"


class Variant(str, Enum):
    CLASSIC = "classic"
    UNNESTED = "unnested"
    NESTED = "nested"

    @property
    def mode(self) -> Optional[Mode]:
        """ 대응하는 정규형 모드 (classic 은 None) """
        return None if self is Variant.CLASSIC else Mode(self.value)


class TruncatedReason(str, Enum):
    MAX_STEPS = "max_steps"
    VALUE_TOO_LARGE = "value_too_large"


@dataclass(frozen=True)
class StepRecord:
    k: int
    base: int
    value: Union[int, Cutoff]
    normal_form: str = ""
    ordinal: Optional[Ordinal] = None

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "base": self.base,
            "value": TOO_LARGE if self.value is EXCEEDS_BOUND else str(self.value),
            "normal_form": self.normal_form,
            "ordinal": None if self.ordinal is None else str(self.ordinal),
        }


@dataclass
class GoodsteinTrace:
    variant: Variant
    start: int
    steps: List[StepRecord] = field(default_factory=list)
    terminated: bool = False
    truncated_reason: Optional[TruncatedReason] = None

    @property
    def values(self) -> List[Union[int, Cutoff]]:
        return [s.value for s in self.steps]

    def to_dict(self) -> dict:
        """ trace JSON 스키마 (값은 십진 문자열) """
        return {
            "variant": self.variant.value,
            "start": str(self.start),
            "terminated": self.terminated,
            "truncated_reason": None if self.truncated_reason is None else self.truncated_reason.value,
            "steps": [s.to_dict() for s in self.steps],
        }

    def to_frame(self) -> pd.DataFrame:
        """ 단계별 표 (k, base, value, normal_form, ordinal) """
        return pd.DataFrame([s.to_dict() for s in self.steps],
                            columns=["k", "base", "value", "normal_form", "ordinal"])


class GoodsteinProcess:
    """
    한 변형(variant)의 Goodstein 과정.

    :param variant: classic / unnested / nested
    :param bound: 컷오프 상한 (None 이면 Config.default_bound())
    """

    def __init__(self, variant: Variant, bound: Optional[int] = None):
        self.variant = Variant(variant)
        self.bound = Config.default_bound() if bound is None else bound

    def step(self, value: int, k: int) -> BoundedValue:
        """ 밑 k 에서 k+1 로 바꾼 뒤 1 을 뺀다 (0 은 0 으로) """
        check_base(k)
        if value < 0:
            raise ValueError(f"value must be a natural number, got {value}")
        if value == 0:
            return 0
        if self.variant is Variant.CLASSIC:
            changed = hereditary_rewrite(value, k, self.bound)
        else:
            changed = base_change(value, k, self.bound, self.variant.mode)
        if changed is EXCEEDS_BOUND:
            return EXCEEDS_BOUND
        return changed - 1

    def normal_form_text(self, value: int, base: int) -> str:
        if self.variant is Variant.CLASSIC:
            return render_hereditary(to_hereditary(value, base), base)
        return render(to_tree(value, base, self.variant.mode))

    def _record(self, k: int, value: int, with_ordinals: bool) -> StepRecord:
        base = k + 2
        ordinal = None
        if with_ordinals and self.variant is not Variant.CLASSIC:
            ordinal = ordinal_of(value, base, self.variant.mode)
        return StepRecord(k, base, value, self.normal_form_text(value, base), ordinal)

    def run(self, start: int, max_steps: Optional[int] = None, with_ordinals: bool = False) -> GoodsteinTrace:
        """
        start 에서 밑 2 로 시작해 과정을 진행한다.

        :param max_steps: 최대 전이 횟수 (trace 는 최대 max_steps+1 개 단계)
        :param with_ordinals: 각 단계에 ψ / χ 값을 붙일지 여부 (classic 은 제외)
        """
        max_steps = Config.DEFAULT_MAX_STEPS if max_steps is None else max_steps
        if max_steps < 1:
            raise ValueError(f"max_steps must be >= 1, got {max_steps}")
        if start < 0:
            raise ValueError(f"start must be a natural number, got {start}")

        trace = GoodsteinTrace(self.variant, start, [self._record(0, start, with_ordinals)])
        value = start
        k = 0
        while value > 0 and k < max_steps:
            value = self.step(value, k + 2)
            k += 1
            if value is EXCEEDS_BOUND:
                trace.steps.append(StepRecord(k, k + 2, EXCEEDS_BOUND))
                trace.truncated_reason = TruncatedReason.VALUE_TOO_LARGE
                logger.warning(f"🚨 {self.variant.value} Goodstein({start}): 단계 {k} 값이 상한 초과 → 중단")
                return trace
            trace.steps.append(self._record(k, value, with_ordinals))
            logger.debug(f"📌 {self.variant.value} 단계 {k}: 밑 {k + 2}")

        if value == 0:
            trace.terminated = True
            logger.info(f"✅ {self.variant.value} Goodstein({start}) 종료: {k} 단계")
        else:
            trace.truncated_reason = TruncatedReason.MAX_STEPS
            logger.info(f"📌 {self.variant.value} Goodstein({start}): 최대 단계 {max_steps} 도달")
        return trace


def step(variant: Variant, value: int, k: int, bound: int) -> BoundedValue:
    return GoodsteinProcess(variant, bound).step(value, k)


def run(variant: Variant, start: int, max_steps: Optional[int] = None, bound: Optional[int] = None,
        with_ordinals: bool = False) -> GoodsteinTrace:
    return GoodsteinProcess(variant, bound).run(start, max_steps, with_ordinals)


def o_sequence(trace: GoodsteinTrace) -> List[Ordinal]:
    """ trace 에 기록된 서수 열 (서수 열이 붙은 단계만) """
    return [s.ordinal for s in trace.steps if s.ordinal is not None]


# ✅ 사용 예시
if __name__ == "__main__":
    trace = run(Variant.CLASSIC, 20, max_steps=2, bound=10 ** 1000)
    print(trace.to_frame().to_string())
