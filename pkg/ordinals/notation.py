# 📌 서수 항의 텍스트 문법 (lark LALR 파서 + 프린터)
#   term := "0" | mono ("+" mono)*
#   mono := head ("*" nat)?
#   head := nat | "w" | "w^(" term ")" | "e(" term ")"
# "1" 은 ω^0, "w" 는 ω^1. 공백은 무시한다.

import logging
from functools import reduce

from lark import Lark, Transformer
from lark.exceptions import UnexpectedEOF, UnexpectedInput, VisitError

from ordinals.ordinal import ONE, OMEGA, ZERO, Eps, OmegaPow, Ordinal, add, eps, nat, omega_pow, times

logger = logging.getLogger(__name__)

GRAMMAR = r"""
term: mono ("+" mono)*
mono: atom ("*" NAT)?
atom: NAT                   -> finite
    | "w"                   -> omega
    | "w" "^" "(" term ")"  -> power
    | "e" "(" term ")"      -> epsilon

NAT: /[0-9]+/

%ignore /\s+/
"""


class OrdinalParseError(ValueError):
    """ 서수 텍스트 파싱 오류 (position: 입력 문자열의 0 기반 위치) """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _ToOrdinal(Transformer):
    """ 파스 트리 → 표준형 Ordinal (표준 생성자를 거치므로 입력이 표준형이 아니어도 정규화된다) """

    def finite(self, items):
        return nat(int(items[0]))

    def omega(self, items):
        return OMEGA

    def power(self, items):
        return omega_pow(items[0])

    def epsilon(self, items):
        return eps(items[0])

    def mono(self, items):
        if len(items) == 1:
            return items[0]
        m = int(items[1])
        if m < 1:
            raise ValueError(f"coefficient must be >= 1, got {m}")
        return times(items[0], m)

    def term(self, items):
        return reduce(add, items, ZERO)


_PARSER = Lark(GRAMMAR, start="term", parser="lalr", propagate_positions=True)


def parse(text: str) -> Ordinal:
    """
    서수 텍스트를 표준형 Ordinal 로 변환한다.

    :raises OrdinalParseError: 문법 오류 또는 잘못된 계수 (*0)
    """
    try:
        tree = _PARSER.parse(text)
    except UnexpectedEOF:
        raise OrdinalParseError("unexpected end of input", len(text)) from None
    except UnexpectedInput as e:
        token = getattr(e, "token", None)
        # LALR 은 입력 끝을 $END 토큰으로 알리며, 그 위치는 마지막 토큰의 시작 위치를 빌린다
        if token is not None and token.type == "$END":
            raise OrdinalParseError("unexpected end of input", len(text)) from None
        position = e.pos_in_stream if e.pos_in_stream is not None and e.pos_in_stream >= 0 else len(text)
        raise OrdinalParseError(f"unexpected input {text[position:position + 1]!r}", position) from None
    try:
        return _ToOrdinal().transform(tree)
    except VisitError as e:
        meta = getattr(e.obj, "meta", None)
        position = meta.start_pos if meta is not None and not meta.empty else 0
        raise OrdinalParseError(str(e.orig_exc), position) from None


def _mono_pieces(head, c: int) -> list:
    """ 단항식 하나를 문자열 조각과 (하위 항, nested) 조각으로 """
    suffix = "" if c == 1 else f"*{c}"
    if isinstance(head, OmegaPow) and head.exponent.is_zero:
        return [str(c)]
    if isinstance(head, Eps):
        return ["e(", (head.index, True), ")" + suffix]
    if head.exponent == ONE:
        return ["w" + suffix]
    return ["w^(", (head.exponent, True), ")" + suffix]


def to_text(alpha: Ordinal, nested: bool = False) -> str:
    """ 표준 텍스트. 최상위 항은 " + ", 괄호 안쪽 항은 "+" 로 잇는다 """
    out = []
    stack = [(alpha, nested)]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
            continue
        node, inner = item
        if node.is_zero:
            out.append("0")
            continue
        pieces = []
        for i, (head, c) in enumerate(node.terms):
            if i:
                pieces.append("+" if inner else " + ")
            pieces.extend(_mono_pieces(head, c))
        stack.extend(reversed(pieces))
    return "".join(out)


# ✅ 사용 예시
if __name__ == "__main__":
    alpha = parse("e(0)*2 + w^(2)*3 + 5")
    print(to_text(alpha))
