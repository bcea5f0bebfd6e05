"""
goodstein 패키지
고전 (지수) Goodstein 과정과 Ackermann 기반 비중첩 · 중첩 Goodstein 과정을 포함합니다.
"""

__all__ = [
    "hereditary",
    "goodstein",
]
