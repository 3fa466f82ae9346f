import pytest

from rencontres.identities import UsageError
from rencontres.sweep import RangeSyntaxError, SweepSpec, expand_grid, parse_range, run_sweep


def test_dependent_range_expansion():
    pts = list(expand_grid(parse_range("n=1..3,r=0..n-1")))
    assert pts == [
        {"n": 1, "r": 0},
        {"n": 2, "r": 0},
        {"n": 2, "r": 1},
        {"n": 3, "r": 0},
        {"n": 3, "r": 1},
        {"n": 3, "r": 2},
    ]


def test_value_list():
    assert [p["n"] for p in expand_grid(parse_range("n=10,50,100,200"))] == [10, 50, 100, 200]


def test_plus_offset_and_whitespace():
    pts = list(expand_grid(parse_range(" r = 2..3 , n = r+1..5")))
    assert pts[0] == {"r": 2, "n": 3}
    assert len(pts) == 3 + 2


@pytest.mark.parametrize("bad", ["", "n", "n=1..x", "r=0..n,n=1..2", "n=1..2,n=3..4", "1=2", "n=1..2,3..4"])
def test_syntax_errors(bad):
    with pytest.raises(RangeSyntaxError):
        parse_range(bad)


def test_spec_validation():
    with pytest.raises(UsageError):
        SweepSpec.from_text("MAIN_SUM_RULE", "n=1..3")
    with pytest.raises(UsageError):
        SweepSpec.from_text("MAIN_SUM_RULE", "n=1..3,r=0..1,q=1..2")
    with pytest.raises(UsageError):
        SweepSpec.from_text("NOPE", "n=1..3")
    with pytest.raises(UsageError):
        SweepSpec.from_text("MAIN_SUM_RULE", "n=3..1,r=0..1").points()


def test_main_sum_rule_55():
    reps, s = run_sweep(SweepSpec.from_text("MAIN_SUM_RULE", "n=1..10,r=0..n-1"))
    assert (s.total, s.passes, s.failures) == (55, 55, 0)
    assert s.exit_code == 0


def test_out_of_domain_points_are_skipped():
    reps, s = run_sweep(SweepSpec.from_text("MOMENT_BELL", "n=0..3,q=0..3"))
    assert s.total == 10 and s.skipped == 6 and s.failures == 0
    assert s.passes + s.failures == s.total


def test_failures_collected_with_first_recorded():
    reps, s = run_sweep(SweepSpec.from_text("BELL_DOUBLE", "q=0..4", mode="as-written"))
    assert s.failures == sum(r.failed for r in reps) >= 2
    assert s.first_failure is next(r for r in reps if r.failed)


def test_parallel_equals_serial():
    spec = SweepSpec.from_text("NESTED_SCHLOMILCH", "n=1..5,r=-1..n-1", mode="as-written")
    serial = run_sweep(spec)
    par = run_sweep(SweepSpec(spec.identity, spec.mode, spec.ranges, parallel=3))
    assert serial[0] == par[0]  # reports compare without timing
    assert serial[1] == par[1]
