# 📌 자연수 → 서수 배정 사상
# ψ_k c = ω^(ε_a + ψ_k b)·m + ψ_k n        (비중첩 정규형, 값은 ε_ω 아래)
# χ_k c = ω^(ε_{χ_k a} + χ_k b)·m + χ_k n  (중첩 정규형, 값은 φ₂(0) 아래)
# o(ℓ,k) = ψ_{k+2}(b_k(ℓ)) 또는 χ_{k+2}(c_k(ℓ)): Goodstein 과정의 하강 척도

import logging
from typing import Optional, Union

from ackermann.ackmath import EXCEEDS_BOUND, Cutoff, check_base
from ackermann.base_change import base_change
from ackermann.normal_form import AckTerm, Mode, to_tree
from config import Config
from ordinals.ordinal import Order, Ordinal, add, cmp_head, eps, nat, omega_pow, times

logger = logging.getLogger(__name__)


def _tree_ordinal(t: AckTerm, nested: bool) -> Ordinal:
    terms = []
    for mono in t.monomials:
        if isinstance(mono.index, AckTerm) != nested:
            raise ValueError("psi needs an unnested tree and chi a nested one")
        index = _tree_ordinal(mono.index, nested) if nested else nat(mono.index)
        exponent = add(eps(index), _tree_ordinal(mono.exponent, nested))
        term = times(omega_pow(exponent), mono.coefficient)
        # 정규형 트리에서는 머리가 엄격히 감소하므로 이어 붙이기만 하면 된다
        if terms and cmp_head(terms[-1][0], term.terms[0][0]) is not Order.GT:
            terms = list(add(Ordinal(tuple(terms)), term).terms)
        else:
            terms.append(term.terms[0])
    return Ordinal(tuple(terms))


def psi_tree(t: AckTerm) -> Ordinal:
    """ 비중첩 정규형 트리의 ψ 값 """
    return _tree_ordinal(t, nested=False)


def chi_tree(t: AckTerm) -> Ordinal:
    """ 중첩 정규형 트리의 χ 값 """
    return _tree_ordinal(t, nested=True)


def psi(k: int, c: int) -> Ordinal:
    """
    ψ_k(c): 밑 k 의 비중첩 정규형을 따라 서수를 배정한다.

    :param k: 밑 (>= 2)
    :param c: 자연수
    """
    check_base(k)
    return psi_tree(to_tree(c, k, Mode.UNNESTED))


def chi(k: int, c: int) -> Ordinal:
    """ χ_k(c): 중첩 정규형 기준 (첨자 a 도 χ 로 보낸다) """
    check_base(k)
    return chi_tree(to_tree(c, k, Mode.NESTED))


def ordinal_of(c: int, k: int, mode: Mode) -> Ordinal:
    return chi(k, c) if Mode(mode) is Mode.NESTED else psi(k, c)


def goodstein_value(ell: int, k: int, mode: Mode, bound: int) -> Union[int, Cutoff]:
    """ b_k(ℓ) (비중첩) 또는 c_k(ℓ) (중첩): 밑 2 에서 시작해 k 번 밑 변환 후 1 감소 """
    mode = Mode(mode)
    if ell < 0 or k < 0:
        raise ValueError(f"ell and k must be natural numbers, got ell={ell}, k={k}")
    value = ell
    for j in range(k):
        if value == 0:
            break
        value = base_change(value, j + 2, bound, mode)
        if value is EXCEEDS_BOUND:
            return EXCEEDS_BOUND
        value -= 1
    return value


def o_value(ell: int, k: int, variant: Mode = Mode.UNNESTED,
            bound: Optional[int] = None) -> Union[Ordinal, Cutoff]:
    """
    o(ℓ,k): k 번째 Goodstein 값의 서수. 값을 만들 수 없으면 EXCEEDS_BOUND.

    :param variant: unnested 또는 nested (classic 에는 서수 사상이 없다)
    """
    mode = Mode(variant)
    bound = Config.default_bound() if bound is None else bound
    value = goodstein_value(ell, k, mode, bound)
    if value is EXCEEDS_BOUND:
        logger.debug(f"📌 o({ell},{k}) 계산 불가: 값이 상한 초과")
        return EXCEEDS_BOUND
    return ordinal_of(value, k + 2, mode)


# ✅ 사용 예시
if __name__ == "__main__":
    print("ψ_2(20) =", psi(2, 20))
    print("χ_2(2) =", chi(2, 2))
    print("o(3,1) =", o_value(3, 1))
