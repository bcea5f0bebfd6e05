"""
verification 패키지
정규형 · 밑 변환 · 서수 사상 보조정리의 전수 검증과 서수 성질의 표본 검증을 포함합니다.
"""

__all__ = [
    "report",
    "lemma_suite",
    "ordinal_suite",
]
