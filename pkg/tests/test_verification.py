import pytest

from ackermann.normal_form import Mode
from verification.lemma_suite import BC_BASES, BOTH_MODES, NF_BASES, LemmaSuite
from verification.ordinal_suite import OrdinalSuite
from verification.report import Failure, SuiteReport, blocking_failures, summary_frame

BOUND = 10 ** 300


@pytest.fixture(scope="module")
def lemmas():
    return LemmaSuite(limit=60, k_max=3, workers=1, bound=BOUND)


@pytest.mark.parametrize("name, bases, modes, start", [
    ("uniqueness", NF_BASES, (Mode.UNNESTED,), 1),
    ("round_trip", NF_BASES, BOTH_MODES, 0),
    ("nf_validity", NF_BASES, BOTH_MODES, 1),
    ("bc_inflation", BC_BASES, BOTH_MODES, 0),
    ("bc_monotone", BC_BASES, BOTH_MODES, 0),
    ("bc_normal_form", BC_BASES, BOTH_MODES, 0),
    ("psi_monotone", BC_BASES, BOTH_MODES, 0),
    ("psi_invariance", BC_BASES, BOTH_MODES, 0),
    ("descent_step", BC_BASES, BOTH_MODES, 1),
    ("psi_range", BC_BASES, BOTH_MODES, 1),
])
def test_range_checks_pass(lemmas, name, bases, modes, start):
    report = lemmas.sweep(name, bases, modes, start=start)
    assert report.cases > 0
    assert report.passed, report.failures[:3]
    assert report.suite == f"lemmas/{name}"


def test_majorization_is_advisory_and_reports_counterexamples(lemmas):
    report = lemmas.sweep("majorization", BC_BASES, BOTH_MODES, advisory=True)
    assert report.advisory
    assert not report.passed
    inputs = {f.input for f in report.failures}
    assert {"k=2 mode=unnested c=1", "k=2 mode=nested c=1"} <= inputs
    assert blocking_failures([report]) == []


def test_failures_are_sorted_by_input(lemmas):
    report = lemmas.sweep("majorization", BC_BASES, BOTH_MODES, advisory=True)
    keys = [f.key for f in report.failures]
    assert keys == sorted(keys)


def test_parallel_sweep_matches_sequential():
    sequential = LemmaSuite(limit=40, k_max=2, workers=1, bound=BOUND)
    parallel = LemmaSuite(limit=40, k_max=2, workers=2, bound=BOUND)
    left = sequential.sweep("majorization", BC_BASES, BOTH_MODES, advisory=True)
    right = parallel.sweep("majorization", BC_BASES, BOTH_MODES, advisory=True)
    assert left.cases == right.cases
    assert [f.to_dict() for f in left.failures] == [f.to_dict() for f in right.failures]


def test_single_checks_pass(lemmas):
    for report in (lemmas.nf_iterates(), lemmas.nf_powers(), lemmas.bc_agreement()):
        assert report.passed, (report.suite, report.failures[:3])


def test_o_anchors_need_a_bound_above_two_to_the_65536():
    assert LemmaSuite(limit=10, workers=1).o_anchors().passed
    small = LemmaSuite(limit=10, workers=1, bound=BOUND).o_anchors()
    assert [f.input for f in small.failures] == ["A_2(2,0)"]


def test_goodstein_descent_on_small_starts():
    suite = LemmaSuite(limit=4, k_max=2, workers=1, bound=10 ** 200)
    report = suite.goodstein_descent()
    assert report.cases > 0
    assert report.passed, report.failures[:3]


@pytest.mark.parametrize("kwargs", [{"limit": 0}, {"k_max": 1}])
def test_lemma_suite_rejects_bad_ranges(kwargs):
    with pytest.raises(ValueError):
        LemmaSuite(**kwargs)


def test_ordinal_suite_is_deterministic():
    def strip(reports):
        return [{key: value for key, value in r.to_dict().items() if key != "elapsed_ms"} for r in reports]

    first = OrdinalSuite(seed=7, samples=40).run_all()
    second = OrdinalSuite(seed=7, samples=40).run_all()
    assert strip(first) == strip(second)


def test_ordinal_suite_blocking_checks_pass():
    reports = OrdinalSuite(seed=3, samples=60).run_all()
    assert blocking_failures(reports) == []
    advisory = {r.suite for r in reports if r.advisory}
    assert advisory == {"ordinals/bachmann"}


def test_step_down_checks_finish_quickly_at_default_size():
    suite = OrdinalSuite(seed=42)
    for report in (suite.step_down(), suite.step_down_monotone()):
        assert report.passed
        assert report.elapsed_ms < 60_000


def test_ordinal_suite_rejects_zero_samples():
    with pytest.raises(ValueError):
        OrdinalSuite(samples=0)


def test_report_json_and_summary():
    report = SuiteReport("lemmas/demo", "c<=3")
    report.check(True, (1,), "c=1", "ok", "ok")
    report.check(False, (2,), "c=2", "x < y", "x = y")
    assert set(report.to_dict()) == {"suite", "bound", "cases", "failures", "elapsed_ms", "advisory"}
    assert report.to_dict()["failures"] == [{"input": "c=2", "expected": "x < y", "got": "x = y"}]
    frame = summary_frame([report])
    assert frame.loc[0, "failures"] == 1
    assert not frame.loc[0, "passed"]
    assert blocking_failures([report]) == [report]


def test_merge_then_finalize_orders_failures():
    report = SuiteReport("lemmas/demo", "c<=9")
    report.merge(2, [Failure((5,), "c=5", "a", "b"), Failure((1,), "c=1", "a", "b")])
    report.finalize()
    assert [f.input for f in report.failures] == ["c=1", "c=5"]
    assert report.cases == 2
