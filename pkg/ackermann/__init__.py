"""
ackermann 패키지
밑 k 의 Ackermann 함수, 정규형 분해, 밑 변환을 포함합니다.
"""

__all__ = [
    "ackmath",
    "normal_form",
    "base_change",
]
