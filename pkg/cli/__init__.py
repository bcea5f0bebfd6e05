"""
cli 패키지
typer 기반 명령줄 인터페이스.
"""

__all__ = ["commands"]
