import pytest

from ackermann.ackmath import EXCEEDS_BOUND
from goodstein.hereditary import HereditaryTerm, hereditary_eval, hereditary_rewrite, render_hereditary, to_hereditary


def test_hereditary_rewrite_examples():
    assert hereditary_rewrite(0, 5, 10) == 0
    assert hereditary_rewrite(20, 2, 10 ** 50) == 3 ** 27 + 3 ** 3


@pytest.mark.parametrize("k", range(3, 10))
def test_digits_below_base_are_fixed(k):
    assert hereditary_rewrite(k - 1, k, 100) == k - 1


def test_hereditary_rewrite_cutoff():
    assert hereditary_rewrite(20, 2, 3 ** 27) is EXCEEDS_BOUND


def test_to_hereditary_round_trip():
    for k in (2, 3, 7):
        for m in range(200):
            assert hereditary_eval(to_hereditary(m, k), k, 10 ** 9) == m


def test_render_hereditary():
    assert render_hereditary(HereditaryTerm(), 2) == "0"
    assert render_hereditary(to_hereditary(20, 2), 2) == "2^(2^(2)) + 2^(2)"
    assert render_hereditary(to_hereditary(7, 3), 3) == "3*2 + 1"


def test_to_hereditary_rejects_negative():
    with pytest.raises(ValueError):
        to_hereditary(-3, 2)
