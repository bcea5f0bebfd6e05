# 📌 φ₂(0) 아래 서수 표기 체계
# 서수 = (머리, 계수) 쌍의 합, 머리는 ω^e 또는 ε_g, 머리는 엄격히 감소, 계수 >= 1
# ω^{ε_g} = ε_g 축약은 생성 시점에 강제된다.
# 비교, 덧셈, 생성자, 기본열 α[k], ω-탑, ≼_k 도달 판정, 하강열
# ·[k] 를 반복하면 항이 계속 깊어지므로 항을 따라 내려가는 연산은 모두 명시적 스택으로 돈다.

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum, IntEnum
from functools import partial
from typing import List, Optional, Tuple, Union

logger = logging.getLogger(__name__)


class Order(IntEnum):
    LT = -1
    EQ = 0
    GT = 1

    @classmethod
    def of(cls, x, y) -> "Order":
        return cls((x > y) - (x < y))

    def __str__(self):
        return self.name


class Reach(str, Enum):
    """ step_down_reachable 판정 결과 """
    YES = "Yes"
    NO = "No"
    UNKNOWN = "Unknown"


@dataclass(frozen=True, eq=False)
class OmegaPow:
    """ 머리 ω^exponent """
    exponent: "Ordinal"

    def __eq__(self, other):
        return isinstance(other, OmegaPow) and self.exponent == other.exponent

    def __hash__(self):
        return hash(("w", self.exponent))


@dataclass(frozen=True, eq=False)
class Eps:
    """ 머리 ε_index """
    index: "Ordinal"

    def __eq__(self, other):
        return isinstance(other, Eps) and self.index == other.index

    def __hash__(self):
        return hash(("e", self.index))


Head = Union[OmegaPow, Eps]


def _inner(head: Head) -> "Ordinal":
    return head.index if isinstance(head, Eps) else head.exponent


@dataclass(frozen=True, eq=False)
class Ordinal:
    """
    표준형 서수 항. terms 가 비어 있으면 0.

    직접 만들지 말고 nat / omega_pow / eps / add / times 생성자를 사용한다.
    깊이, 해시, 표준형 여부는 처음 물을 때 계산해 인스턴스에 붙여 둔다.
    """
    terms: Tuple[Tuple[Head, int], ...] = ()

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def depth(self) -> int:
        """ 머리 중첩 깊이 (0 은 0, 유한 서수는 1) """
        _measure(self)
        return self.__dict__["_depth"]

    def __eq__(self, other):
        if not isinstance(other, Ordinal):
            return NotImplemented
        return _same(self, other)

    def __hash__(self):
        _measure(self)
        return self.__dict__["_hash"]

    def __lt__(self, other: "Ordinal") -> bool:
        return cmp(self, other) is Order.LT

    def __le__(self, other: "Ordinal") -> bool:
        return cmp(self, other) is not Order.GT

    def __gt__(self, other: "Ordinal") -> bool:
        return cmp(self, other) is Order.GT

    def __ge__(self, other: "Ordinal") -> bool:
        return cmp(self, other) is not Order.LT

    def __add__(self, other: "Ordinal") -> "Ordinal":
        return add(self, other)

    def __str__(self):
        from ordinals.notation import to_text
        return to_text(self)

    def __repr__(self):
        return f"Ordinal({str(self)!r})"


def _measure(alpha: Ordinal):
    """ 아직 측정되지 않은 하위 항마다 _depth, _hash 를 아래에서 위로 채운다 """
    stack = [alpha]
    while stack:
        node = stack[-1]
        if "_depth" in node.__dict__:
            stack.pop()
            continue
        children = [_inner(head) for head, _ in node.terms]
        pending = [child for child in children if "_depth" not in child.__dict__]
        if pending:
            stack.extend(pending)
            continue
        stack.pop()
        depth = 1 + max((child.__dict__["_depth"] for child in children), default=-1)
        key = tuple((type(head).__name__, child.__dict__["_hash"], c)
                    for (head, c), child in zip(node.terms, children))
        object.__setattr__(node, "_depth", depth)
        object.__setattr__(node, "_hash", hash(key))


def _same(alpha: Ordinal, beta: Ordinal) -> bool:
    """ 구조적 동등성 """
    stack = [(alpha, beta)]
    while stack:
        x, y = stack.pop()
        if x is y:
            continue
        if len(x.terms) != len(y.terms):
            return False
        for (hx, cx), (hy, cy) in zip(x.terms, y.terms):
            if type(hx) is not type(hy) or cx != cy:
                return False
            stack.append((_inner(hx), _inner(hy)))
    return True


ZERO = Ordinal()
_FINITE_HEAD = OmegaPow(ZERO)


def _is_unit(head: Head) -> bool:
    """ 머리가 ω^0 인지 """
    return isinstance(head, OmegaPow) and head.exponent.is_zero


## 🟢 생성자 ##

def nat(n: int) -> Ordinal:
    """ 유한 서수 n """
    if n < 0:
        raise ValueError(f"finite ordinals are non-negative, got {n}")
    return Ordinal(((_FINITE_HEAD, n),)) if n else ZERO


ONE = nat(1)


def eps(g: Ordinal) -> Ordinal:
    """ ε_g """
    return Ordinal(((Eps(g), 1),))


def _is_eps_atom(alpha: Ordinal) -> bool:
    return len(alpha.terms) == 1 and isinstance(alpha.terms[0][0], Eps) and alpha.terms[0][1] == 1


def omega_pow(e: Ordinal) -> Ordinal:
    """ ω^e (ω^{ε_g} 는 ε_g 로 축약) """
    if _is_eps_atom(e):
        return e
    return Ordinal(((OmegaPow(e), 1),))


OMEGA = omega_pow(ONE)


def times(alpha: Ordinal, m: int) -> Ordinal:
    """ α·m (m >= 1): 첫 항의 계수만 m 배가 된다 """
    if m < 1:
        raise ValueError(f"coefficient must be >= 1, got {m}")
    if alpha.is_zero:
        return ZERO
    (head, c), rest = alpha.terms[0], alpha.terms[1:]
    return Ordinal(((head, c * m),) + rest)


def omega_tower(k: int, alpha: Ordinal) -> Ordinal:
    """ ω_0(α) = α, ω_{k+1}(α) = ω^{ω_k(α)} """
    if k < 0:
        raise ValueError(f"tower height must be >= 0, got {k}")
    for _ in range(k):
        alpha = omega_pow(alpha)
    return alpha


## 🟢 비교 ##

def cmp_head(x: Head, y: Head) -> Order:
    """ 머리 순서 (ε_g 와 ω^e 는 ε_g 와 e 의 비교로 정한다) """
    return _cmp(Ordinal(((x, 1),)), Ordinal(((y, 1),)))


def _head_frame(x: Head, y: Head) -> list:
    """ 머리 비교를 [왼쪽, 오른쪽, 위치, 부호 반전] 프레임으로 """
    if isinstance(x, Eps) and isinstance(y, Eps):
        return [x.index, y.index, 0, False]
    if isinstance(x, OmegaPow) and isinstance(y, OmegaPow):
        return [x.exponent, y.exponent, 0, False]
    # ε_g = ω^{ε_g} 이므로 지수끼리 비교
    if isinstance(x, Eps):
        return [eps(x.index), y.exponent, 0, False]
    return [eps(y.index), x.exponent, 0, True]


def _cmp(alpha: Ordinal, beta: Ordinal) -> Order:
    """ 사전식 비교. 머리 비교는 재귀 대신 프레임 스택에 쌓는다 """
    stack = [[alpha, beta, 0, False]]
    result = None
    while True:
        frame = stack[-1]
        x, y, i, flip = frame
        order = None
        if result is not None:
            order, result = result, None
            if order is Order.EQ:
                order = Order.of(x.terms[i][1], y.terms[i][1])
            if order is Order.EQ:
                i = frame[2] = i + 1
                order = None
        if order is None and (x is y or i >= len(x.terms) or i >= len(y.terms)):
            order = Order.EQ if x is y else Order.of(len(x.terms) - i, len(y.terms) - i)
        if order is None:
            stack.append(_head_frame(x.terms[i][0], y.terms[i][0]))
            continue
        stack.pop()
        result = Order(-order) if flip else order
        if not stack:
            return result


def is_canonical(alpha: Ordinal) -> bool:
    """ 머리 엄격 감소, 계수 양의 정수, ω^{ε_g} 금지 (모든 하위 항에서) """
    if not isinstance(alpha, Ordinal):
        return False
    if alpha.__dict__.get("_canonical"):
        return True
    # 1단계: 모양 검사 (머리 종류, 계수, 축약)
    nodes = []
    stack = [alpha]
    while stack:
        node = stack.pop()
        if not isinstance(node, Ordinal):
            return False
        if node.__dict__.get("_canonical"):
            continue
        for term in node.terms:
            if not isinstance(term, tuple) or len(term) != 2:
                return False
            head, c = term
            if isinstance(c, bool) or not isinstance(c, int) or c < 1:
                return False
            if not isinstance(head, (OmegaPow, Eps)) or not isinstance(_inner(head), Ordinal):
                return False
            if isinstance(head, OmegaPow) and _is_eps_atom(head.exponent):
                return False
            stack.append(_inner(head))
        nodes.append(node)
    # 2단계: 머리 순서
    for node in nodes:
        heads = [head for head, _ in node.terms]
        if any(cmp_head(a, b) is not Order.GT for a, b in zip(heads, heads[1:])):
            return False
    for node in nodes:
        object.__setattr__(node, "_canonical", True)
    return True


def _require_canonical(*ordinals: Ordinal):
    for alpha in ordinals:
        if not is_canonical(alpha):
            raise ValueError(f"non-canonical ordinal term: {alpha!r}")


def cmp(alpha: Ordinal, beta: Ordinal) -> Order:
    """ 서수 순서에 따른 비교 (LT / EQ / GT) """
    _require_canonical(alpha, beta)
    return _cmp(alpha, beta)


## 🟢 덧셈 ##

def add(alpha: Ordinal, beta: Ordinal) -> Ordinal:
    """ α + β: β 의 첫 머리보다 작은 α 의 항은 흡수된다 """
    if beta.is_zero:
        return alpha
    lead, lead_c = beta.terms[0]
    kept = []
    for head, c in alpha.terms:
        order = cmp_head(head, lead)
        if order is Order.GT:
            kept.append((head, c))
        elif order is Order.EQ:
            kept.append((head, c + lead_c))
            return Ordinal(tuple(kept) + beta.terms[1:])
        else:
            break
    return Ordinal(tuple(kept) + beta.terms)


## 🟢 분류 ##

def is_finite(alpha: Ordinal) -> bool:
    return all(_is_unit(head) for head, _ in alpha.terms)


def is_successor(alpha: Ordinal) -> bool:
    """ 마지막 머리가 ω^0 이면 따름수 """
    return not alpha.is_zero and _is_unit(alpha.terms[-1][0])


def is_limit(alpha: Ordinal) -> bool:
    return not alpha.is_zero and not is_successor(alpha)


def predecessor(alpha: Ordinal) -> Ordinal:
    if not is_successor(alpha):
        raise ValueError(f"{alpha} is not a successor ordinal")
    head, c = alpha.terms[-1]
    last = ((head, c - 1),) if c > 1 else ()
    return Ordinal(alpha.terms[:-1] + last)


def eps_depth(alpha: Ordinal) -> int:
    """ ε 첨자 중첩 깊이 """
    depth = 0
    stack = [(alpha, 0)]
    while stack:
        node, level = stack.pop()
        for head, _ in node.terms:
            if isinstance(head, Eps):
                depth = max(depth, level + 1)
                stack.append((head.index, level + 1))
            else:
                stack.append((head.exponent, level))
    return depth


def eps_indices(alpha: Ordinal) -> List[Ordinal]:
    """ 항에 나타나는 모든 ε 첨자 (지수 안쪽 포함) """
    found = []
    stack = [alpha]
    while stack:
        node = stack.pop()
        for head, _ in node.terms:
            if isinstance(head, Eps):
                found.append(head.index)
            stack.append(_inner(head))
    return found


## 🟠 기본열 (fundamental sequences) ##

def _fund(alpha: Ordinal, k: int) -> Ordinal:
    # 마지막 단항식 / 극한 지수 / 극한 첨자 경로를 따라 내려가며 감쌀 생성자를 쌓는다
    wrappers = []
    current = alpha
    while True:
        if current.is_zero:
            result = ZERO
            break
        head, c = current.terms[-1]
        if len(current.terms) > 1 or c > 1:
            # α = ω^β·m + ... 는 마지막 항 하나를 떼어 낸다: (ω^β·m)[k] = ω^β·(m-1) + (ω^β)[k]
            rest = current.terms[:-1] + (((head, c - 1),) if c > 1 else ())
            wrappers.append(partial(add, Ordinal(rest)))
            current = Ordinal(((head, 1),))
            continue
        beta = _inner(head)
        if isinstance(head, OmegaPow):
            if beta.is_zero:
                result = ZERO
                break
            if is_successor(beta):
                result = times(omega_pow(predecessor(beta)), k) if k else ZERO
                break
            wrappers.append(omega_pow)
        else:
            if beta.is_zero:
                result = omega_tower(k, ONE)
                break
            if is_successor(beta):
                result = omega_tower(k, add(eps(predecessor(beta)), ONE))
                break
            wrappers.append(eps)
        current = beta
    for wrap in reversed(wrappers):
        result = wrap(result)
    return result


def fund(alpha: Ordinal, k: int) -> Ordinal:
    """ 표준 기본열의 k 번째 원소 α[k] """
    _require_canonical(alpha)
    if k < 0:
        raise ValueError(f"fundamental sequence index must be >= 0, got {k}")
    return _fund(alpha, k)


def step_down_reachable(alpha: Ordinal, beta: Ordinal, k: int, max_steps: int,
                        max_depth: Optional[int] = None) -> Reach:
    """
    α 에서 ·[k] 를 max_steps 번 이하 적용해 β 에 도달하는지 (≼_k 의 테스트 오라클).

    체인이 β 아래로 내려가면 No, 단계가 모자라거나 항 깊이가 max_depth 를 넘으면 Unknown.
    """
    _require_canonical(alpha, beta)
    current = alpha
    for step in range(max_steps + 1):
        order = _cmp(current, beta)
        if order is Order.EQ:
            return Reach.YES
        if order is Order.LT:
            return Reach.NO
        if step == max_steps or (max_depth is not None and current.depth > max_depth):
            break
        current = _fund(current, k)
    return Reach.UNKNOWN


def descent(alpha: Ordinal, max_steps: int) -> List[Ordinal]:
    """ α, α[1], α[1][2], ... (최대 max_steps 단계 또는 0 까지) """
    _require_canonical(alpha)
    sequence = [alpha]
    for n in range(1, max_steps + 1):
        if sequence[-1].is_zero:
            break
        sequence.append(_fund(sequence[-1], n))
    return sequence


def descent_length(alpha: Ordinal, cap: int) -> Optional[int]:
    """ α[1][2]...[n] = 0 인 최소 n (cap 이하일 때), 아니면 None """
    _require_canonical(alpha)
    current = alpha
    for n in range(cap + 1):
        if current.is_zero:
            return n
        current = _fund(current, n + 1)
    return None


# ✅ 사용 예시
if __name__ == "__main__":
    print("ε_0[2] =", fund(eps(ZERO), 2))
    print("ε_1[2] =", fund(eps(ONE), 2))
    print("descent(ω^ω, 3) =", [str(x) for x in descent(omega_pow(OMEGA), 3)])
