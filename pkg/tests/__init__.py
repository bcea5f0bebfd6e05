"""
tests 패키지
pytest + hypothesis 테스트 모음.
"""
