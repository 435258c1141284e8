# === test_verify.py ===
import pytest

from cli.verify import SUITES, run_verify
from core.errors import ParameterError


def test_default_seed_passes_every_suite():
    report = run_verify(cases=20)
    assert report.passed, report.first_failure
    assert set(report.counts()) == set(SUITES)
    assert all(passed == total == 20 for passed, total in report.counts().values())


def test_perturbation_is_detected():
    report = run_verify(["ffs"], cases=5, perturb=True)
    assert not report.passed
    failure = report.first_failure
    assert failure.suite == "ffs"
    assert failure.error > failure.tolerance
    assert "N_FS" in failure.params


def test_selector_runs_one_suite():
    report = run_verify(["czt"], cases=7)
    assert report.suites == ["czt"]
    assert {r.suite for r in report.results} == {"czt"}
    assert len(report.results) == 7


def test_results_do_not_depend_on_thread_count():
    one = run_verify(["interp", "convolve"], seed=3, cases=6, threads=1)
    many = run_verify(["interp", "convolve"], seed=3, cases=6, threads=4)
    assert [r.error for r in one.results] == [r.error for r in many.results]


def test_seed_changes_cases():
    a = run_verify(["spectral"], seed=1, cases=4)
    b = run_verify(["spectral"], seed=2, cases=4)
    assert [r.params for r in a.results] != [r.params for r in b.results]
    assert a.seed == 1


@pytest.mark.parametrize("suites, cases", [(["fft"], 3), (["czt"], 0)])
def test_bad_arguments(suites, cases):
    with pytest.raises(ParameterError):
        run_verify(suites, cases=cases)
