import pytest

from pegball.verify import (CheckResult, paper_suite, property_suite,
                            run_suites)

PAPER_NAMES = ["distances", "peg-distances", "generating-sets", "peg-bases",
               "m-sets", "standard-bases", "fiber", "exceptional",
               "ball-counts"]
PROPERTY_NAMES = ["left-invariance", "down-set", "peg-dominates",
                  "lower-bounds", "grid-member", "plusone-cover",
                  "maximal-generating", "reduced-pattern", "via-inflation"]


def test_paper_suite_all_pass():
    results = paper_suite()
    assert [r.name for r in results] == PAPER_NAMES
    assert all(r.suite == "paper" for r in results)
    failures = [r.name for r in results if not r.passed]
    assert failures == []


def test_property_suite_known_failure():
    results = property_suite(seed=0)
    assert [r.name for r in results] == PROPERTY_NAMES
    failures = [r for r in results if not r.passed]
    # the one-shorter-pattern claim is false at the two all-bullet pegs on
    # the simple permutations of length 4; everything else holds
    assert [r.name for r in failures] == ["reduced-pattern"]
    detail = failures[0].detail
    assert "2. 4. 1. 3." in detail and "3. 1. 4. 2." in detail


def test_run_suites_dispatch():
    assert len(run_suites("paper")) == 9
    assert len(run_suites("properties")) == 9
    assert len(run_suites("all")) == 18
    with pytest.raises(ValueError):
        run_suites("bogus")


def test_check_result_line():
    ok = CheckResult("paper", "distances", True, "5 exact values")
    assert ok.line() == "[paper] distances: ok (5 exact values)"
    bad = CheckResult("properties", "reduced-pattern", False, "x; y")
    assert bad.line() == "[properties] reduced-pattern: FAIL (x; y)"


def test_property_suite_seed_stability():
    a = [(r.name, r.passed) for r in property_suite(seed=7)]
    b = [(r.name, r.passed) for r in property_suite(seed=7)]
    assert a == b
