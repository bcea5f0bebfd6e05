import os
import sys
import logging
from decimal import Decimal, InvalidOperation
from dotenv import load_dotenv

# .env 파일 로드
load_dotenv()

# 로깅 설정
logging.basicConfig(
    level=getattr(logging, os.getenv("GOODSTEIN_LOG_LEVEL", "INFO").strip().upper(), logging.INFO),
    format="%(asctime)s %(levelname)s %(name)s: %(message)s",
)

# 큰 정수의 십진 변환 자릿수 제한 해제 (Python 3.11+)
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)

logger = logging.getLogger(__name__)


def parse_bound(text) -> int:
    """
    상한값 문자열을 정확한 자연수로 변환한다.

    "1000", "1e500", "2.5e3" 형식을 지원한다 (부동소수점 변환 없이 정확하게).
    :param text: 십진수 또는 가수-지수 표기 문자열 (int 도 허용)
    :return: 음이 아닌 정수
    """
    if isinstance(text, int):
        value = text
    else:
        cleaned = str(text).strip().replace("_", "")
        if not cleaned:
            raise ValueError("empty bound")
        try:
            number = Decimal(cleaned)
        except InvalidOperation:
            raise ValueError(f"not a number: {text!r}") from None
        if not number.is_finite() or number != number.to_integral_value():
            raise ValueError(f"bound must be an integer: {text!r}")
        value = int(number)
    if value < 0:
        raise ValueError(f"bound must be non-negative: {text!r}")
    return value


class Config:
    """ Ackermann-Goodstein 계산 환경 변수 설정 """

    # ✅ 컷오프 상한 (기본: 10^100000, 약 10만 자리)
    DEFAULT_BOUND = os.getenv("GOODSTEIN_DEFAULT_BOUND", "1e100000")

    # ✅ Goodstein 실행 최대 단계 수
    DEFAULT_MAX_STEPS = int(os.getenv("GOODSTEIN_MAX_STEPS", "50"))

    # ✅ 로깅 레벨
    LOG_LEVEL = os.getenv("GOODSTEIN_LOG_LEVEL", "INFO").strip().upper()

    # ✅ 검증 스위트 설정 (시드, 병렬 워커 수, 샘플 수)
    VERIFY_SEED = int(os.getenv("GOODSTEIN_VERIFY_SEED", "42"))
    VERIFY_WORKERS = int(os.getenv("GOODSTEIN_VERIFY_WORKERS", "1"))
    VERIFY_SAMPLES = int(os.getenv("GOODSTEIN_VERIFY_SAMPLES", "10000"))

    # ✅ 텍스트 표 출력 시 열 너비 (0 이면 자르지 않음)
    TEXT_WIDTH = int(os.getenv("GOODSTEIN_TEXT_WIDTH", "0"))

    _bound_cache = {}

    @staticmethod
    def default_bound() -> int:
        """ 설정된 기본 상한을 정확한 정수로 반환 (한 번만 계산) """
        text = Config.DEFAULT_BOUND
        if text not in Config._bound_cache:
            try:
                Config._bound_cache[text] = parse_bound(text)
            except ValueError as e:
                logger.warning(f"🚨 GOODSTEIN_DEFAULT_BOUND 값 오류 ({e}) → 1e100000 사용")
                Config._bound_cache[text] = 10 ** 100000
        return Config._bound_cache[text]

    @staticmethod
    def get_all():
        """ 환경 변수 설정 확인 (디버깅 용도) """
        return {
            "DEFAULT_BOUND": Config.DEFAULT_BOUND,
            "DEFAULT_MAX_STEPS": Config.DEFAULT_MAX_STEPS,
            "LOG_LEVEL": Config.LOG_LEVEL,
            "VERIFY_SEED": Config.VERIFY_SEED,
            "VERIFY_WORKERS": Config.VERIFY_WORKERS,
            "VERIFY_SAMPLES": Config.VERIFY_SAMPLES,
            "TEXT_WIDTH": Config.TEXT_WIDTH,
        }


if __name__ == "__main__":
    logger.info("환경 변수 설정 확인:")
    print(Config.get_all())
