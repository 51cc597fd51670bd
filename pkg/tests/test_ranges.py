"""Range recurrence: candidates, branch selection, growth, stalls."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from collatzkit import (
    even_range_candidate,
    iterate_ranges,
    odd_range_candidate,
    predecessor_of,
    range_step,
)


@pytest.mark.parametrize("n,expected", [(19, 29), (5, 5), (9, 11), (3, 5), (25, 35)])
def test_odd_range_candidate(n, expected):
    assert odd_range_candidate(n) == expected


def test_odd_range_candidate_equals_floor_form():
    for n in range(3, 2001, 2):
        p = (n + 1) // 2
        assert odd_range_candidate(n) == 6 * (p // 2) - 1


@pytest.mark.parametrize("n,expected", [(19, 25), (3, 3), (11, 13), (5, 5), (25, 33)])
def test_even_range_candidate(n, expected):
    assert even_range_candidate(n) == expected


def test_candidates_reject_small_or_even():
    for bad in (1, -3, 4):
        with pytest.raises(ValueError):
            odd_range_candidate(bad)
        with pytest.raises(ValueError):
            even_range_candidate(bad)


def test_range_step_worked_example():
    s = range_step(19)
    assert (s.n_odd, s.n_even, s.chosen, s.growth) == (29, 25, 25, 6)
    assert s.p_n == 10
    assert s.delta_oe == 4


def test_range_step_stalls():
    s = range_step(5)  # p = 3
    assert s.chosen == 5
    assert s.growth == 0
    s = range_step(3)  # p = 2
    assert s.chosen == 3
    assert s.growth == 0


def test_range_step_25():
    s = range_step(25)
    assert (s.n_odd, s.n_even, s.chosen) == (35, 33, 33)


def test_candidate_ordering_exhaustive():
    # equality holds at p in {3, 5, 7}; everywhere else the odd-side
    # candidate is the strictly larger one
    for n in range(3, 10**5 + 1, 2):
        s = range_step(n)
        if s.p_n in (3, 5, 7):
            assert s.n_odd == s.n_even, f"expected tie at N={n}"
        else:
            assert s.n_odd > s.n_even, f"expected No > Ne at N={n}"


def test_growth_law_exhaustive():
    # stalls happen exactly at p = 2 and p = 3
    for n in range(3, 10**5 + 1, 2):
        s = range_step(n)
        if s.p_n in (2, 3):
            assert s.growth == 0
        else:
            assert s.chosen > n


@settings(max_examples=500)
@given(st.integers(min_value=2, max_value=10**9))
def test_candidates_exact_and_odd(p):
    n = 2 * p - 1
    s = range_step(n)
    assert s.n_odd % 2 == 1 and s.n_even % 2 == 1 and s.chosen % 2 == 1
    assert 3 * s.n_even == 4 * n - s.even_branch.c_const
    assert s.n_odd == 3 * p - s.odd_branch.a_const
    assert s.delta_oe == s.n_odd - s.n_even


def test_semantic_anchor_against_predecessors():
    # the odd-side candidate is the largest m = 5 (mod 6) whose x=1
    # predecessor lands inside [1, N]
    for n in range(3, 10**3 + 1, 2):
        m = odd_range_candidate(n)
        assert m % 6 == 5
        rec = predecessor_of(m, 1)
        assert rec is not None and rec.n1 <= n
        rec_next = predecessor_of(m + 6, 1)
        assert rec_next is not None and rec_next.n1 > n


def test_iterate_from_19():
    trace = iterate_ranges(19, 10)
    assert not trace.stalled
    assert len(trace.states) == 10
    assert trace.bounds[:3] == (19, 25, 33)
    bounds = trace.bounds
    assert all(b > a for a, b in zip(bounds, bounds[1:]))
    for prev, nxt in zip(trace.states, trace.states[1:]):
        assert nxt.n == prev.chosen


def test_iterate_stall_records_index():
    trace = iterate_ranges(5, 5)
    assert trace.stalled
    assert trace.stall_index == 0
    assert len(trace.states) == 1


def test_iterate_from_7_no_stall():
    trace = iterate_ranges(7, 50)
    assert not trace.stalled
    assert len(trace.states) == 50


def test_trace_jsonl_round_trip():
    trace = iterate_ranges(19, 3)
    lines = trace.to_jsonl().strip().split("\n")
    assert len(lines) == 3
    first = json.loads(lines[0])
    assert first["chosen"] == 25 and first["n"] == 19
