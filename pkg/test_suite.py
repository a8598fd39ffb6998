"""
Tests for the verification suite runner, with the sample sizes turned down.
"""
import pytest

from suite import (
    CHECKS,
    CheckResult,
    SuiteOptions,
    expected_generator_count,
    run_check,
    run_suite,
)


def small_options(g=4, b=2, seed=7):
    return SuiteOptions(
        g, b, seed,
        random_words=60,
        random_word_length=12,
        exhaustive_length=3,
        insertion_trials=40,
        certificate_members=20,
        certificate_factors=4,
        correction_vectors=20,
        correction_bound=3,
    )


@pytest.mark.parametrize("name", sorted(CHECKS))
def test_each_check_passes(name):
    result = run_check(name, small_options())
    assert result.passed, result.failures
    assert result.checked > 0


def test_identities_check_skips_small_genus():
    result = run_check("mod_square_identities", small_options(g=3))
    assert result.passed
    assert result.skipped


def test_suite_report_is_reproducible():
    first = run_suite(small_options(g=5, b=3), names=["kernel_concordance", "certificate_soundness"])
    second = run_suite(small_options(g=5, b=3), names=["kernel_concordance", "certificate_soundness"])
    assert first.passed
    assert first.to_json() == second.to_json()
    assert "elapsed" not in first.to_json()["checks"][0]
    assert "PASSED" in first.to_text()


def test_unknown_check_is_rejected():
    with pytest.raises(KeyError):
        run_suite(small_options(), names=["nonsense"])


def test_failure_messages_are_capped():
    result = CheckResult("capped")
    for i in range(25):
        result.fail(f"failure {i}")
    assert not result.passed
    assert len(result.failures) == 11
    assert result.failures[-1] == "further failures suppressed"


@pytest.mark.parametrize("g, b, count", [(4, 0, 3), (5, 1, 2), (5, 3, 8), (6, 4, 14)])
def test_expected_generator_count(g, b, count):
    assert expected_generator_count(g, b) == count
