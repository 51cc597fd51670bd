"""Inverse predecessor recurrence over the odd numbers.

An odd n1 is a predecessor of odd n2 when 3*n1 + 1 = 2^x * n2 for some
x >= 1, i.e. n1 = (2^x * n2 - 1) / 3 with the division exact. Exactness
splits the odd numbers into three residue classes mod 6:

  n2 = 3j       no solutions at all (these numbers are leaves),
  n2 = 6i + 1   solutions exactly at even x (n2 = 1 included),
  n2 = 6i - 1   solutions exactly at odd x.

The pair (n2, x) = (1, 2) maps 1 onto itself through the terminal cycle;
it is a legitimate table cell but is excluded from tree expansion.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .core import _require_odd, _require_positive_int

SELF_ITERATION = (1, 2)


class SubsetTag(enum.Enum):
    MULTIPLE_OF_THREE = "multiple-of-three"
    EVEN_POWER = "even-power"
    ODD_POWER = "odd-power"


@dataclass(frozen=True)
class SubsetClass:
    """Residue class of an odd number, with its 6i+-1 index when it has one."""

    tag: SubsetTag
    index: int | None = None


def classify(n: int) -> SubsetClass:
    """Residue class of odd n: n mod 6 decides, index is the i in 6i+-1."""
    _require_odd(n)
    r = n % 6
    if r == 3:
        return SubsetClass(SubsetTag.MULTIPLE_OF_THREE)
    if r == 1:
        i = (n - 1) // 6
        return SubsetClass(SubsetTag.EVEN_POWER, i if i > 0 else None)
    return SubsetClass(SubsetTag.ODD_POWER, (n + 1) // 6)


@dataclass(frozen=True)
class PredecessorRecord:
    """One exact solution n1 = (2^x * n2 - 1) / 3."""

    n2: int
    x: int
    n1: int
    n1_class: SubsetClass
    generates: bool

    @property
    def self_loop(self) -> bool:
        return (self.n2, self.x) == SELF_ITERATION

    def to_dict(self) -> dict:
        return {
            "n2": self.n2,
            "x": self.x,
            "n1": self.n1,
            "class": self.n1_class.tag.value,
            "index": self.n1_class.index,
            "generates": self.generates,
        }


def predecessor_of(n2: int, x: int) -> PredecessorRecord | None:
    """The predecessor record for (n2, x), or None when 2^x * n2 != 1 mod 3.

    (1, 2) is returned as a record (it is a real solution, n1 = 1) but is
    skipped by predecessors() so tree expansion never loops on it.
    """
    _require_odd(n2, "n2")
    _require_positive_int(x, "x")
    if (pow(2, x, 3) * n2) % 3 != 1:
        return None
    n1 = ((n2 << x) - 1) // 3
    return PredecessorRecord(n2=n2, x=x, n1=n1, n1_class=classify(n1), generates=n1 % 3 != 0)


def _admissible_x_start(n2: int) -> int | None:
    # smallest valid exponent for this residue class, None for multiples of 3
    r = n2 % 3
    if r == 0:
        return None
    return 2 if r == 1 else 1


def predecessors(n2: int, x_max: int) -> list[PredecessorRecord]:
    """All records for n2 with x <= x_max, ascending in x, self-pair excluded."""
    _require_odd(n2, "n2")
    _require_positive_int(x_max, "x_max")
    x0 = _admissible_x_start(n2)
    if x0 is None:
        return []
    out = []
    for x in range(x0, x_max + 1, 2):
        if (n2, x) == SELF_ITERATION:
            continue
        rec = predecessor_of(n2, x)
        assert rec is not None
        out.append(rec)
    return out


def _predecessor_values(n2: int, x_max: int, value_cap: int) -> Iterator[int]:
    # int-only expansion for BFS: ascending n1, stops at the cap, skips (1, 2)
    x0 = _admissible_x_start(n2)
    if x0 is None:
        return
    m = n2 << x0
    for x in range(x0, x_max + 1, 2):
        n1 = (m - 1) // 3
        if n1 > value_cap:
            return
        if (n2, x) != SELF_ITERATION:
            yield n1
        m <<= 2


@dataclass(frozen=True)
class PredecessorTable:
    """Rows of predecessor records for one residue class, as in the tables
    of solving numbers: one row per n2, one column per admissible x."""

    subset: SubsetTag
    rows: tuple[tuple[int, tuple[PredecessorRecord, ...]], ...]

    def to_dict(self) -> dict:
        return {
            "subset": self.subset.value,
            "rows": [
                {"n2": n2, "records": [r.to_dict() for r in recs]}
                for n2, recs in self.rows
            ],
        }


def generate_table(tag: SubsetTag, row_count: int, col_count: int) -> PredecessorTable:
    """Tabulate records for the first row_count rows and col_count exponents.

    Even-power rows run n2 = 1, 7, 13, 19, ... (1 belongs to this class);
    odd-power rows run n2 = 5, 11, 17, ... A record whose n1 is a multiple
    of three is a dead end (generates=False): the grey cells.
    """
    _require_positive_int(row_count, "row_count")
    _require_positive_int(col_count, "col_count")
    if tag is SubsetTag.MULTIPLE_OF_THREE:
        raise ValueError("multiples of three have no predecessor rows")
    if tag is SubsetTag.EVEN_POWER:
        row_values = [1] + [6 * i + 1 for i in range(1, row_count)]
        xs = range(2, 2 * col_count + 1, 2)
    else:
        row_values = [6 * i - 1 for i in range(1, row_count + 1)]
        xs = range(1, 2 * col_count, 2)
    rows = []
    for n2 in row_values:
        recs = []
        for x in xs:
            rec = predecessor_of(n2, x)
            assert rec is not None
            recs.append(rec)
        rows.append((n2, tuple(recs)))
    return PredecessorTable(subset=tag, rows=tuple(rows))


def table_to_csv(table: PredecessorTable) -> str:
    """Flat CSV dump, row-major: n2, x, n1, class, generates."""
    lines = ["n2,x,n1,class,generates"]
    for _, recs in table.rows:
        for r in recs:
            flag = "true" if r.generates else "false"
            lines.append(f"{r.n2},{r.x},{r.n1},{r.n1_class.tag.value},{flag}")
    return "\n".join(lines) + "\n"


def _records_up_to(bound: int) -> Iterator[tuple[int, int, int]]:
    # every (n2, x, n1) with n1 <= bound, the self pair excluded
    cap = 3 * bound + 1
    for n2 in range(1, cap // 2 + 1, 2):
        x0 = _admissible_x_start(n2)
        if x0 is None:
            continue
        m = n2 << x0
        x = x0
        while m <= cap:
            if (n2, x) != SELF_ITERATION:
                yield n2, x, (m - 1) // 3
            m <<= 2
            x += 2


@dataclass(frozen=True)
class UniquenessReport:
    bound: int
    records_checked: int
    violations: tuple[tuple[int, tuple[tuple[int, int], ...]], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def uniqueness_check(bound: int) -> UniquenessReport:
    """Scan every record with n1 <= bound for two sources of the same n1.

    Distinct (n2, x) pairs can never produce the same n1 (both n2 odd, so
    2^(x1-x2) = n2_2/n2_1 forces x1 = x2); this enumerates and checks
    instead of trusting the argument.
    """
    _require_positive_int(bound, "bound")
    seen: dict[int, tuple[int, int]] = {}
    collisions: dict[int, list[tuple[int, int]]] = {}
    count = 0
    for n2, x, n1 in _records_up_to(bound):
        count += 1
        if n1 in seen:
            collisions.setdefault(n1, [seen[n1]]).append((n2, x))
        else:
            seen[n1] = (n2, x)
    violations = tuple(
        (n1, tuple(sources)) for n1, sources in sorted(collisions.items())
    )
    return UniquenessReport(bound=bound, records_checked=count, violations=violations)


@dataclass(frozen=True)
class CoverageReport:
    """Which odd numbers <= bound the inverse expansion from 1 visited.

    The inverse tree is infinite, so expansion is truncated explicitly:
    no value above value_cap is ever enqueued and no exponent above x_max
    is tried. Anything unreached may simply be a truncation artifact.
    """

    bound: int
    value_cap: int
    x_max: int
    reached: frozenset[int]
    unreached: frozenset[int]
    nodes_expanded: int

    def to_dict(self) -> dict:
        return {
            "bound": self.bound,
            "value_cap": self.value_cap,
            "x_max": self.x_max,
            "reached_count": len(self.reached),
            "unreached_count": len(self.unreached),
            "unreached": sorted(self.unreached),
            "nodes_expanded": self.nodes_expanded,
        }


def inverse_bfs(bound: int, value_cap: int, x_max: int) -> CoverageReport:
    """Breadth-first inverse expansion from 1 under the two caps."""
    _require_positive_int(bound, "bound")
    _require_positive_int(value_cap, "value_cap")
    _require_positive_int(x_max, "x_max")
    if value_cap < bound:
        raise ValueError(f"value_cap {value_cap} must be >= bound {bound}")
    visited = {1}
    frontier = deque([1])
    expanded = 0
    while frontier:
        n2 = frontier.popleft()
        expanded += 1
        for n1 in _predecessor_values(n2, x_max, value_cap):
            if n1 not in visited:
                visited.add(n1)
                frontier.append(n1)
    reached = frozenset(v for v in visited if v <= bound)
    unreached = frozenset(v for v in range(1, bound + 1, 2) if v not in visited)
    return CoverageReport(
        bound=bound,
        value_cap=value_cap,
        x_max=x_max,
        reached=reached,
        unreached=unreached,
        nodes_expanded=expanded,
    )
