"""Exact forward Collatz dynamics.

Everything here runs on Python's native arbitrary-precision integers, so
there is no overflow path to worry about: a chain is free to climb as high
as it likes (start 27 already peaks at 9232). Chain products are kept as
exact rationals; no floating point enters the forward dynamics.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

DEFAULT_MAX_STEPS = 100_000


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"


def _require_positive_int(n: int, name: str = "n") -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"{name} must be an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"{name} must be >= 1, got {n}")


def _require_odd(n: int, name: str = "n") -> None:
    _require_positive_int(n, name)
    if n % 2 == 0:
        raise ValueError(f"{name} must be odd, got {n}")


def step(n: int) -> int:
    """One forward step: n/2 if n is even, 3n+1 if n is odd."""
    _require_positive_int(n)
    return n // 2 if n % 2 == 0 else 3 * n + 1


def v2(n: int) -> int:
    """2-adic valuation: the largest k such that 2^k divides n."""
    _require_positive_int(n)
    return (n & -n).bit_length() - 1


def odd_successor(n: int) -> tuple[int, int]:
    """Direct odd follower of an odd n.

    Returns (m, x) with m odd and 2^x * m = 3n + 1, i.e. one odd step
    followed by the full run of halvings. odd_successor(1) = (1, 2): the
    number one iterates onto itself through the terminal cycle.
    """
    _require_odd(n)
    w = 3 * n + 1
    x = (w & -w).bit_length() - 1
    return w >> x, x


@dataclass(frozen=True)
class Step:
    """A single application of the step rule, taking `before` to `after`."""

    before: int
    after: int

    def __post_init__(self) -> None:
        if self.after != step(self.before):
            raise ValueError(f"not a valid step: {self.before} -> {self.after}")

    @property
    def parity(self) -> Parity:
        return Parity.EVEN if self.before % 2 == 0 else Parity.ODD

    @property
    def factor(self) -> Fraction:
        """Exact ratio after/before: 1/2 for even steps, (3n+1)/n for odd."""
        return Fraction(self.after, self.before)


@dataclass(frozen=True)
class Trajectory:
    """A forward chain recorded step by step.

    Step counts follow the open-chain convention: the final element makes
    no step, so even_steps + odd_steps == len(steps), not the number of
    elements. A chain built around a cycle (first == last) is fine too;
    its step counts then cover every element once.
    """

    start: int
    steps: tuple[Step, ...]
    terminated: bool

    @property
    def even_steps(self) -> int:
        return sum(1 for s in self.steps if s.parity is Parity.EVEN)

    @property
    def odd_steps(self) -> int:
        return sum(1 for s in self.steps if s.parity is Parity.ODD)

    @property
    def last(self) -> int:
        return self.steps[-1].after if self.steps else self.start

    @property
    def values(self) -> tuple[int, ...]:
        return (self.start,) + tuple(s.after for s in self.steps)

    @property
    def peak(self) -> int:
        return max(self.values)


@dataclass(frozen=True)
class TrajectoryStats:
    """Counting-only view of a forward chain: no step storage.

    Memory stays O(1) regardless of chain length; sweeps that only need
    (e, o, peak) use this instead of a full Trajectory.
    """

    start: int
    even_steps: int
    odd_steps: int
    peak: int
    terminated: bool


def trajectory(n: int, max_steps: int = DEFAULT_MAX_STEPS) -> Trajectory:
    """Iterate the step rule from n until 1 is reached or max_steps run out.

    Hitting the step budget is a valid outcome, reported through the
    `terminated` flag rather than an exception.
    """
    _require_positive_int(n)
    _require_positive_int(max_steps, "max_steps")
    steps: list[Step] = []
    v = n
    while v != 1 and len(steps) < max_steps:
        w = step(v)
        steps.append(Step(v, w))
        v = w
    return Trajectory(start=n, steps=tuple(steps), terminated=v == 1)


def trajectory_stats(n: int, max_steps: int = DEFAULT_MAX_STEPS) -> TrajectoryStats:
    """Like trajectory(), but keeps only (e, o, peak, terminated)."""
    _require_positive_int(n)
    _require_positive_int(max_steps, "max_steps")
    e = o = 0
    peak = v = n
    while v != 1 and e + o < max_steps:
        if v % 2 == 0:
            v //= 2
            e += 1
        else:
            v = 3 * v + 1
            o += 1
        if v > peak:
            peak = v
    return TrajectoryStats(start=n, even_steps=e, odd_steps=o, peak=peak, terminated=v == 1)


def chain_product(t: Trajectory) -> Fraction:
    """Exact product of the per-step factors of a nonempty chain.

    Telescopes to last/first: each factor is after/before and consecutive
    steps share their endpoint. For a closed chain (first == last) the
    product is exactly 1.
    """
    if not t.steps:
        raise ValueError("chain product of an empty trajectory is undefined")
    prod = Fraction(1)
    for s in t.steps:
        prod *= s.factor
    return prod


def closed_chain(members: tuple[int, ...] | list[int]) -> Trajectory:
    """Build the one-loop trajectory around a cycle, first member repeated."""
    if not members:
        raise ValueError("a closed chain needs at least one member")
    loop = list(members) + [members[0]]
    steps = tuple(Step(a, b) for a, b in zip(loop, loop[1:]))
    return Trajectory(start=members[0], steps=steps, terminated=members[0] == 1)
