"""Brute-force oracles: forward sweeps, cycle scans, table reproduction.

The forward sweep confirms an odd start n by descent: once the chain
drops below n, induction over the smaller (already confirmed) starts
finishes the job. Descent is a per-start fact, so the outcome cannot
depend on how the work is sharded; shards only change wall time.
"""

from __future__ import annotations

import multiprocessing
import os
import time
from dataclasses import dataclass

from .core import step
from .counting import totals, TotalsReport
from .ranges import odd_range_candidate

DEFAULT_SWEEP_MAX_STEPS = 10_000


def _descent_steps(n: int, max_steps: int) -> int | None:
    """Steps until the chain from odd n first goes below n, or None if the
    budget runs out first. Halving runs are charged step by step, so the
    count is exactly the number of single-step applications."""
    if n == 1:
        return 0
    nbl = n.bit_length()
    used = 0
    v = n
    while True:
        w = 3 * v + 1
        t = (w & -w).bit_length() - 1
        s = w >> t
        if s < n:
            # the drop happens inside this halving run; find its exact spot
            e = w.bit_length() - nbl
            if (n << e) > w:
                e -= 1
            used += 2 + e  # one odd step, then e+1 halvings
            return used if used <= max_steps else None
        used += 1 + t
        if used > max_steps:
            return None
        v = s


def _sweep_block(args: tuple[int, int, int]) -> tuple[int, list[tuple[int, str]], int]:
    lo, hi, max_steps = args
    ok = 0
    failures: list[tuple[int, str]] = []
    max_used = 0
    n = lo
    while n < hi:
        if n & 3 == 1:
            # 3n+1 is divisible by 4, and (3n+1)/4 < n for n > 1:
            # confirmed after exactly 3 steps without touching the chain
            used = 0 if n == 1 else 3
            if used <= max_steps:
                ok += 1
                if used > max_used:
                    max_used = used
            else:
                failures.append((n, "maxStepsExceeded"))
        else:
            got = _descent_steps(n, max_steps)
            if got is None:
                failures.append((n, "maxStepsExceeded"))
            else:
                ok += 1
                if got > max_used:
                    max_used = got
        n += 2
    return ok, failures, max_used


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of a forward sweep over the odd starts in [1, bound]."""

    bound: int
    verified: int
    failures: tuple[tuple[int, str], ...]
    max_steps_used: int
    wall_time: float
    shards: int

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "bound": self.bound,
            "verified": self.verified,
            "failures": [list(f) for f in self.failures],
            "max_steps_used": self.max_steps_used,
            "wall_time": round(self.wall_time, 3),
            "shards": self.shards,
        }


def _block_bounds(bound: int, shards: int) -> list[tuple[int, int]]:
    # contiguous blocks of odd starts, sizes as equal as possible
    count = (bound + 1) // 2
    base, extra = divmod(count, shards)
    blocks = []
    idx = 0
    for s in range(shards):
        size = base + (1 if s < extra else 0)
        lo, hi = 2 * idx + 1, 2 * (idx + size) + 1
        if size:
            blocks.append((lo, hi))
        idx += size
    return blocks


def verify_forward(
    bound: int,
    max_steps: int = DEFAULT_SWEEP_MAX_STEPS,
    shards: int | None = None,
) -> VerifyReport:
    """Confirm by descent every odd start <= bound.

    Work is split into `shards` contiguous blocks (default: one per CPU)
    and merged back in block order, so the report is byte-identical for
    any shard count; only wall_time moves.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    if shards is None:
        shards = os.cpu_count() or 1
    if shards < 1:
        raise ValueError("shards must be >= 1")
    t0 = time.perf_counter()
    blocks = [(lo, hi, max_steps) for lo, hi in _block_bounds(bound, shards)]
    if len(blocks) <= 1 or (os.cpu_count() or 1) == 1:
        results = [_sweep_block(b) for b in blocks]
    else:
        procs = min(len(blocks), os.cpu_count() or 1)
        try:
            ctx = multiprocessing.get_context("fork")
        except ValueError:
            ctx = multiprocessing.get_context()
        with ctx.Pool(procs) as pool:
            results = pool.map(_sweep_block, blocks)
    verified = sum(r[0] for r in results)
    failures: list[tuple[int, str]] = []
    for r in results:
        failures.extend(r[1])
    max_used = max((r[2] for r in results), default=0)
    return VerifyReport(
        bound=bound,
        verified=verified,
        failures=tuple(failures),
        max_steps_used=max_used,
        wall_time=time.perf_counter() - t0,
        shards=shards,
    )


@dataclass(frozen=True)
class CycleRecord:
    """A closed chain, listed from its smallest member around the loop."""

    members: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.members:
            raise ValueError("a cycle has at least one member")
        if len(set(self.members)) != len(self.members):
            raise ValueError("cycle members must be distinct")
        for a, b in zip(self.members, self.members[1:] + self.members[:1]):
            if step(a) != b:
                raise ValueError(f"not a cycle: step({a}) != {b}")

    def to_dict(self) -> dict:
        return {"members": list(self.members)}


def cycle_scan(bound: int, max_steps: int = 100_000) -> tuple[CycleRecord, ...]:
    """Find every cycle with minimum element <= bound.

    A cycle never dips below its minimum, and that minimum is odd (an even
    minimum would halve to something smaller). So scanning starts in
    ascending order and walking each one until it either drops below the
    start (no news) or returns to it (a cycle, found at its minimum)
    covers them all.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    found: list[CycleRecord] = []
    for n in range(1, bound + 1, 2):
        v = n
        steps_left = max_steps
        while True:
            w = 3 * v + 1
            t = (w & -w).bit_length() - 1
            s = w >> t
            if 1 + t > steps_left:
                break  # budget spent before the walk settles anything at n
            steps_left -= 1 + t
            if s < n:
                break
            if s == n:
                members = [n]
                m = step(n)
                while m != n:
                    members.append(m)
                    m = step(m)
                found.append(CycleRecord(members=tuple(members)))
                break
            v = s
    return tuple(found)


@dataclass(frozen=True)
class AssumptionRow:
    """One demonstration row: a chain walked until it merges into ground
    already covered by earlier rows, plus the odd values it newly claims
    inside the target range."""

    start: int
    values: tuple[int, ...]
    new_odds: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "start": self.start,
            "values": list(self.values),
            "new_odds": list(self.new_odds),
        }


def reproduce_assumption_table(n0: int) -> tuple[AssumptionRow, ...]:
    """Demonstration rows for the odd starts in [1, n0], ascending.

    A start already visited by an earlier row gets no row. Each row runs
    until it reaches a previously visited value, which is included as the
    row's final element. The root row (start 1) shows the terminal cycle
    itself, 4 -> 2 -> 1, with the start pre-marked as visited.
    """
    if n0 < 3 or n0 % 2 == 0:
        raise ValueError(f"n0 must be odd and >= 3, got {n0}")
    visited: set[int] = set()
    rows: list[AssumptionRow] = []
    for start in range(1, n0 + 1, 2):
        if start in visited:
            continue
        visited.add(start)
        new_this_row = [start]
        values: list[int] = [] if start == 1 else [start]
        v = step(start)
        while True:
            values.append(v)
            if v in visited:
                break
            visited.add(v)
            new_this_row.append(v)
            v = step(v)
        new_odds = tuple(sorted(m for m in new_this_row if m % 2 and m <= n0))
        rows.append(AssumptionRow(start=start, values=tuple(values), new_odds=new_odds))
    return tuple(rows)


def assumption_bold_values(n0: int) -> set[int]:
    """Values highlighted in a demonstration table for [1, n0]: the odd
    numbers of the range itself plus the 6i-1 numbers of the grown range
    [1, odd_range_candidate(n0)]."""
    cap = odd_range_candidate(n0)
    bold = {m for m in range(1, n0 + 1, 2)}
    bold |= {m for m in range(5, cap + 1, 6)}
    return bold


def render_assumption_table(rows: tuple[AssumptionRow, ...], n0: int) -> str:
    """Plain-text rendering with the claims column aligned, highlighted
    values starred, merged tails marked with a trailing ellipsis."""
    bold = assumption_bold_values(n0)
    chains = []
    for row in rows:
        parts = [f"*{v}*" if v in bold else str(v) for v in row.values]
        tail = "" if row.values and row.values[-1] == 1 else " -> ..."
        chains.append(" -> ".join(parts) + tail)
    width = max(len(c) for c in chains)
    lines = [
        f"{chain:<{width}} | {','.join(str(m) for m in row.new_odds)}"
        for chain, row in zip(chains, rows)
    ]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CrossCheckEntry:
    """Closed-form totals next to a direct enumeration of the records with
    n1 <= N, bucketed by row class."""

    totals: TotalsReport
    root_row_count: int
    opow_count: int
    epow_count: int

    @property
    def counts_match(self) -> bool:
        return (
            self.totals.identity_holds
            and self.root_row_count == self.totals.k_n
            and self.opow_count == self.totals.t_odd
            and self.epow_count == self.totals.t_even
        )

    def to_dict(self) -> dict:
        d = self.totals.to_dict()
        d.update(
            {
                "rootRowCount": self.root_row_count,
                "opowCount": self.opow_count,
                "epowCount": self.epow_count,
                "countsMatch": self.counts_match,
            }
        )
        return d


def _count_records_by_class(n: int) -> tuple[int, int, int]:
    # records with n1 <= n, bucketed: row n2=1 (self pair included),
    # rows 6i-1, rows 6i+1 (n2 > 1); integer arithmetic only
    cap = 3 * n + 1
    root = 0
    m = 4  # 2^2 * 1
    while m <= cap:
        root += 1
        m <<= 2
    opow = 0
    n2 = 5
    while 2 * n2 <= cap:
        m = 2 * n2
        while m <= cap:
            opow += 1
            m <<= 2
        n2 += 6
    epow = 0
    n2 = 7
    while 4 * n2 <= cap:
        m = 4 * n2
        while m <= cap:
            epow += 1
            m <<= 2
        n2 += 6
    return root, opow, epow


def cross_check_totals(k_max: int) -> tuple[CrossCheckEntry, ...]:
    """For k = 2..k_max, compare the closed-form totals with the brute odd
    count and with a direct per-class enumeration of the records."""
    if k_max < 2:
        raise ValueError("k_max must be >= 2")
    entries = []
    for k in range(2, k_max + 1):
        rep = totals(k)
        root, opow, epow = _count_records_by_class(rep.n)
        entries.append(
            CrossCheckEntry(totals=rep, root_row_count=root, opow_count=opow, epow_count=epow)
        )
    return tuple(entries)
