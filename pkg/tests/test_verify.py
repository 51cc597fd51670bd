"""Brute-force harness: sweeps, cycle scan, table reproduction, cross-checks."""

import time

import pytest

from collatzkit import (
    chain_product,
    closed_chain,
    cross_check_totals,
    cycle_scan,
    inverse_bfs,
    verify_forward,
)
from collatzkit.verify import (
    _block_bounds,
    _descent_steps,
    assumption_bold_values,
    render_assumption_table,
    reproduce_assumption_table,
)

# The six demonstration rows for the range [1, 19], frozen. Each row stops
# at the first value an earlier row already visited, inclusive; start 19
# merges at 22, which row 7 showed.
ASSUMPTION_ROWS_19 = [
    (1, (4, 2, 1), (1,)),
    (3, (3, 10, 5, 16, 8, 4), (3, 5)),
    (7, (7, 22, 11, 34, 17, 52, 26, 13, 40, 20, 10), (7, 11, 13, 17)),
    (9, (9, 28, 14, 7), (9,)),
    (15, (15, 46, 23, 70, 35, 106, 53, 160, 80, 40), (15,)),
    (19, (19, 58, 29, 88, 44, 22), (19,)),
]


def naive_descent_steps(n, max_steps):
    # oracle: raw single-step walk until the value drops below the start
    if n == 1:
        return 0
    v = n
    used = 0
    while used < max_steps:
        v = v // 2 if v % 2 == 0 else 3 * v + 1
        used += 1
        if v < n:
            return used
    return None


def test_descent_steps_against_oracle():
    for n in range(1, 4001, 2):
        assert _descent_steps(n, 10**4) == naive_descent_steps(n, 10**4)


def test_descent_steps_budget():
    assert _descent_steps(3, 5) is None  # 3 needs 6 steps to dip below itself
    assert _descent_steps(3, 6) == 6
    assert _descent_steps(7, 11) == 11
    assert _descent_steps(7, 10) is None


def test_verify_forward_19():
    report = verify_forward(19, 10**3)
    assert report.verified == 10
    assert report.failures == ()


def test_verify_forward_trivial():
    report = verify_forward(1, 10)
    assert report.verified == 1
    assert report.failures == ()
    assert report.max_steps_used == 0


def test_verify_forward_records_budget_failures():
    # with one step allowed, only the start 1 is confirmed
    report = verify_forward(19, 1)
    assert [f[0] for f in report.failures] == [3, 5, 7, 9, 11, 13, 15, 17, 19]
    # with three steps, every 4k+1 start descends; the 4k+3 starts need more
    report = verify_forward(19, 3)
    assert [f[0] for f in report.failures] == [3, 7, 11, 15, 19]
    assert all(reason == "maxStepsExceeded" for _, reason in report.failures)
    assert report.verified + len(report.failures) == 10


def test_verify_forward_deterministic_across_shards():
    reports = [verify_forward(10**5, shards=s) for s in (1, 4, 16)]
    base = reports[0]
    for other in reports[1:]:
        assert other.verified == base.verified
        assert other.failures == base.failures
        assert other.max_steps_used == base.max_steps_used
    assert base.verified == (10**5 + 1) // 2


def test_block_bounds_cover_all_odds():
    for bound in (1, 7, 100, 101, 1000):
        for shards in (1, 3, 4, 16, 1000):
            blocks = _block_bounds(bound, shards)
            seen = []
            for lo, hi in blocks:
                seen.extend(range(lo, hi, 2))
            assert seen == list(range(1, bound + 1, 2))


def test_cycle_scan_finds_only_terminal_cycle():
    cycles = cycle_scan(10**4)
    assert len(cycles) == 1
    assert cycles[0].members == (1, 4, 2)


def test_cycle_scan_bound_one():
    cycles = cycle_scan(1)
    assert [c.members for c in cycles] == [(1, 4, 2)]


def test_cycle_product_is_one():
    (cycle,) = cycle_scan(100)
    assert chain_product(closed_chain(cycle.members)) == 1


def test_assumption_table_19_rows_bit_exact():
    rows = reproduce_assumption_table(19)
    assert [(r.start, r.values, r.new_odds) for r in rows] == ASSUMPTION_ROWS_19


def test_assumption_table_small():
    rows = reproduce_assumption_table(3)
    assert [r.start for r in rows] == [1, 3]
    assert rows[0].values == (4, 2, 1)
    assert rows[1].values == (3, 10, 5, 16, 8, 4)
    assert rows[1].new_odds == (3,)  # 5 is above the bound 3


def test_assumption_rows_claim_every_odd_once():
    for n0 in (19, 99, 999):
        rows = reproduce_assumption_table(n0)
        claimed = [m for r in rows for m in r.new_odds]
        assert sorted(claimed) == list(range(1, n0 + 1, 2))
        assert len(set(claimed)) == len(claimed)


def test_assumption_bold_values_19():
    bold = assumption_bold_values(19)
    assert set(range(1, 20, 2)) <= bold
    assert {23, 29} <= bold  # the 5 mod 6 numbers of the grown range [1, 29]
    assert 35 not in bold and 53 not in bold


def test_render_assumption_table_marks_merges():
    text = render_assumption_table(reproduce_assumption_table(19), 19)
    lines = text.strip().split("\n")
    assert len(lines) == 6
    assert lines[0].endswith("| 1")
    assert "..." not in lines[0]  # the root row ends at 1
    assert all("..." in line for line in lines[1:])


def test_cross_check_totals():
    entries = cross_check_totals(6)
    assert all(e.counts_match for e in entries)
    first = entries[0]  # k = 2
    assert (first.root_row_count, first.opow_count, first.epow_count) == (2, 1, 0)
    assert first.totals.t_total == 3


def test_cross_check_totals_deep():
    t0 = time.time()
    entries = cross_check_totals(12)
    assert all(e.counts_match for e in entries)
    assert time.time() - t0 < 10.0


def test_cross_check_breakdown_matches_record_enumeration():
    # recount by building the actual records
    from collatzkit import predecessor_of

    entry = next(e for e in cross_check_totals(4) if e.totals.k_n == 4)
    n = entry.totals.n
    root = opow = epow = 0
    for n2 in range(1, 3 * n + 2, 2):
        if n2 % 3 == 0:
            continue
        x = 2 if n2 % 3 == 1 else 1
        while True:
            rec = predecessor_of(n2, x)
            assert rec is not None
            if rec.n1 > n:
                break
            if n2 == 1:
                root += 1
            elif n2 % 6 == 5:
                opow += 1
            else:
                epow += 1
            x += 2
    assert (root, opow, epow) == (
        entry.root_row_count,
        entry.opow_count,
        entry.epow_count,
    )


def test_forward_inverse_agreement_small_bounds():
    # with caps an order of magnitude above the observed peak, the inverse
    # expansion reaches exactly what the forward sweep verifies
    for bound in (29, 101, 999):
        report = verify_forward(bound)
        assert report.failures == ()
        peak = 0
        for n in range(1, bound + 1, 2):
            v = n
            while v != 1:
                v = v // 2 if v % 2 == 0 else 3 * v + 1
                peak = max(peak, v)
        cov = inverse_bfs(bound, 10 * peak, 60)
        assert cov.unreached == frozenset()
        assert cov.reached == set(range(1, bound + 1, 2))


def test_verify_report_wall_time_positive():
    report = verify_forward(999)
    assert report.wall_time >= 0
    assert isinstance(report.wall_time, float)
