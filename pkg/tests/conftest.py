"""
pytest 수집 설정.
config 를 먼저 import 해 큰 정수 십진 변환 제한 해제를 매개변수 id 생성 전에 적용한다.
"""
import config  # noqa: F401
