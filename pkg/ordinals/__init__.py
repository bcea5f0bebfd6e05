"""
ordinals 패키지
φ₂(0) 아래 서수 표기, 기본열, 텍스트 문법, 자연수 → 서수 사상을 포함합니다.
"""

__all__ = [
    "ordinal",
    "notation",
    "ordinal_map",
    "sampling",
]
