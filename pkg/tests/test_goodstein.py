import pytest

from ackermann.ackmath import EXCEEDS_BOUND
from goodstein.goodstein import (
    TOO_LARGE, GoodsteinProcess, GoodsteinTrace, StepRecord, TruncatedReason, Variant, o_sequence, run, step,
)
from ordinals.ordinal import ONE, ZERO, add, cmp, eps, nat, Order

G1 = 3 ** 27 + 3 ** 2 * 2 + 3 * 2 + 2
G2 = 4 ** 256 + 4 ** 2 * 2 + 4 * 2 + 1


@pytest.mark.parametrize("variant, value, k, bound, expected", [
    (Variant.CLASSIC, 20, 2, 10 ** 50, G1),
    (Variant.UNNESTED, 1, 2, 10, 0),
    (Variant.UNNESTED, 3, 2, 100, 27),
    (Variant.UNNESTED, 27, 3, 10 ** 200, 4 ** 256 - 1),
    (Variant.NESTED, 0, 7, 10, 0),
])
def test_step_examples(variant, value, k, bound, expected):
    assert step(variant, value, k, bound) == expected


def test_step_cutoff():
    assert step(Variant.UNNESTED, 16, 2, 10 ** 100) is EXCEEDS_BOUND


def test_run_zero_terminates_immediately():
    trace = run(Variant.UNNESTED, 0, 10, 10 ** 9)
    assert trace.values == [0]
    assert trace.terminated
    assert trace.truncated_reason is None


def test_run_one_terminates_after_one_step():
    trace = run(Variant.UNNESTED, 1, 10, 10 ** 9)
    assert trace.values == [1, 0]
    assert trace.terminated
    assert [(s.k, s.base) for s in trace.steps] == [(0, 2), (1, 3)]


def test_run_unnested_three():
    trace = run(Variant.UNNESTED, 3, 4, 10 ** 1000)
    assert trace.values[:3] == [3, 27, 4 ** 256 - 1]
    assert len(trace.steps) == 5
    assert not trace.terminated
    assert trace.truncated_reason is TruncatedReason.MAX_STEPS


def test_run_classic_twenty_reproduces_displayed_values():
    trace = run(Variant.CLASSIC, 20, 2, 10 ** 1000)
    assert trace.values == [20, G1, G2]
    assert trace.steps[0].normal_form == "2^(2^(2)) + 2^(2)"
    assert trace.truncated_reason is TruncatedReason.MAX_STEPS


def test_run_truncates_on_large_values():
    trace = run(Variant.CLASSIC, 20, 3, 10 ** 100)
    assert trace.values == [20, G1, EXCEEDS_BOUND]
    assert trace.truncated_reason is TruncatedReason.VALUE_TOO_LARGE
    assert trace.to_dict()["steps"][-1]["value"] == TOO_LARGE
    assert not trace.terminated


def test_run_rejects_zero_steps():
    with pytest.raises(ValueError):
        run(Variant.UNNESTED, 3, 0, 100)


def test_run_with_ordinals():
    trace = run(Variant.UNNESTED, 3, 3, 10 ** 1000, with_ordinals=True)
    ordinals = o_sequence(trace)
    assert ordinals[0] == add(eps(ONE), eps(ZERO))
    assert ordinals[1] == eps(nat(1))
    assert all(cmp(after, before) is Order.LT for before, after in zip(ordinals, ordinals[1:]))


def test_classic_has_no_ordinals():
    trace = run(Variant.CLASSIC, 5, 3, 10 ** 100, with_ordinals=True)
    assert o_sequence(trace) == []


@pytest.mark.parametrize("variant", [Variant.UNNESTED, Variant.NESTED])
def test_ordinals_descend_along_traces(variant):
    for ell in range(12):
        trace = run(variant, ell, 8, 10 ** 1000, with_ordinals=True)
        ordinals = o_sequence(trace)
        for before, after in zip(ordinals, ordinals[1:]):
            assert after < before
        positives = [v for v in trace.values[:-1] if v is not EXCEEDS_BOUND]
        assert all(v > 0 for v in positives)


def test_trace_json_schema():
    payload = run(Variant.NESTED, 2, 3, 10 ** 9, with_ordinals=True).to_dict()
    assert set(payload) == {"variant", "start", "terminated", "truncated_reason", "steps"}
    assert payload["variant"] == "nested"
    assert payload["start"] == "2"
    assert set(payload["steps"][0]) == {"k", "base", "value", "normal_form", "ordinal"}
    assert payload["steps"][0]["ordinal"] == "e(e(0))"
    assert payload["steps"][1]["value"] == "26"


def test_to_frame_columns():
    frame = run(Variant.UNNESTED, 3, 2, 10 ** 1000).to_frame()
    assert list(frame.columns) == ["k", "base", "value", "normal_form", "ordinal"]
    assert frame["value"].tolist()[:2] == ["3", "27"]


def test_runs_are_deterministic():
    process = GoodsteinProcess(Variant.NESTED, 10 ** 1000)
    assert process.run(4, 6, True).to_dict() == process.run(4, 6, True).to_dict()


def test_step_record_serializes_values_past_4300_digits():
    record = StepRecord(k=2, base=2, value=10 ** 5000)
    assert record.to_dict()["value"] == "1" + "0" * 5000


def test_trace_with_long_start_serializes():
    trace = GoodsteinTrace(Variant.UNNESTED, 10 ** 5000, steps=[StepRecord(k=2, base=2, value=10 ** 5000)])
    data = trace.to_dict()
    assert data["start"] == data["steps"][0]["value"] == "1" + "0" * 5000
