"""Closed-form counting over the predecessor rows.

For N = (4^k - 1)/3 the records with n1 <= N split by row class into
exactly k from the row n2 = 1, T_o from the 6i-1 rows and T_e from the
6i+1 rows, and k + T_o + T_e equals the number of odd values in [1, N].
Every division below is exact integer arithmetic with the divisibility
checked; a remainder would mean a transcribed formula is wrong, so it
raises instead of rounding.

Floors of half-logarithms (the k_j expressions) are computed through
integer comparisons, never through floating log2: floats cannot certify
that a ratio is an exact power of two. Floating point appears only in
display values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import _require_odd, _require_positive_int


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{what}: {num} is not divisible by {den}")
    return q


def _floor_log2_ratio(num: int, den: int) -> int:
    """floor(log2(num/den)) for positive integers, exactly."""
    if num <= 0 or den <= 0:
        raise ValueError("ratio must be positive")
    e = num.bit_length() - den.bit_length()
    if e >= 0:
        if (den << e) > num:
            e -= 1
    else:
        if den > (num << -e):
            e -= 1
    return e


@dataclass(frozen=True)
class PowerParams:
    """Bound parameters: N = 2*p_n - 1 always, and N = (4^k_n - 1)/3 when
    the bound belongs to the special power family."""

    p_n: int
    k_n: int | None = None

    def __post_init__(self) -> None:
        _require_positive_int(self.p_n, "p_n")
        if self.p_n < 2:
            raise ValueError("p_n must be > 1")
        if self.k_n is not None and 2 * self.p_n - 1 != (4**self.k_n - 1) // 3:
            raise ValueError(f"k_n={self.k_n} does not match p_n={self.p_n}")

    @property
    def n(self) -> int:
        return 2 * self.p_n - 1

    @classmethod
    def from_k(cls, k_n: int) -> "PowerParams":
        _require_positive_int(k_n, "k_n")
        if k_n < 2:
            raise ValueError("k_n must be > 1")
        n = (4**k_n - 1) // 3
        return cls(p_n=(n + 1) // 2, k_n=k_n)

    @classmethod
    def from_bound(cls, n: int) -> "PowerParams":
        _require_odd(n)
        m = 3 * n + 1
        k = None
        if m & (m - 1) == 0 and m.bit_length() % 2 == 1:  # m = 4^k
            k = (m.bit_length() - 1) // 2
        return cls(p_n=(n + 1) // 2, k_n=k)


@dataclass(frozen=True)
class FloorRemainder:
    """A floored expression together with its fractional part.

    `remainder` is exact whenever the underlying expression is rational
    (the i-index forms) or the half-log ratio is a power of two (values 0
    and 1/2 come out of the exact path); otherwise it is the IEEE float of
    the display evaluation.
    """

    value: int
    remainder: Fraction | float

    @property
    def is_integer(self) -> bool:
        return self.remainder == 0


def power_relation(n2_i: int, x_i: int, n2_j: int) -> float:
    """Exponent x_j that would let row n2_j hit the same n1 as (n2_i, x_i):
    x_j = x_i + log2(n2_i / n2_j), as a float. Integrality is the caller's
    question; see power_relation_integer."""
    _require_odd(n2_i, "n2_i")
    _require_odd(n2_j, "n2_j")
    _require_positive_int(x_i, "x_i")
    return x_i + (math.log2(n2_i) - math.log2(n2_j))


def power_relation_integer(n2_i: int, x_i: int, n2_j: int) -> int | None:
    """Exact integer x_j when one exists, else None.

    x_j is an integer iff n2_i / n2_j is a power of two; for odd inputs
    that means n2_i == n2_j, which is the injectivity of (n2, x) -> n1
    seen from the other side.
    """
    _require_odd(n2_i, "n2_i")
    _require_odd(n2_j, "n2_j")
    _require_positive_int(x_i, "x_i")
    r = Fraction(n2_i, n2_j)
    if r.numerator & (r.numerator - 1) or r.denominator & (r.denominator - 1):
        return None
    return x_i + (r.numerator.bit_length() - 1) - (r.denominator.bit_length() - 1)


def i_opow_max(p_n: int) -> int:
    """Largest row index i of the 6i-1 class that reaches n1 <= 2*p_n - 1
    with a single halving: floor(p_n / 2)."""
    _require_positive_int(p_n, "p_n")
    if p_n < 2:
        raise ValueError("p_n must be > 1")
    return p_n // 2


def i_opow_max_casewise(p_n: int) -> int:
    # parity split that must agree with the floor form
    if p_n % 2 == 0:
        v = Fraction(p_n, 2)
    else:
        v = Fraction(p_n, 2) - Fraction(1, 2)
    assert v.denominator == 1
    return int(v)


def i_epow_max(p_n: int) -> int:
    """Largest row index i of the 6i+1 class reaching n1 <= 2*p_n - 1 with
    a double halving: floor((p_n - 1) / 4)."""
    _require_positive_int(p_n, "p_n")
    if p_n < 2:
        raise ValueError("p_n must be > 1")
    return (p_n - 1) // 4


def i_epow_max_casewise(p_n: int) -> int:
    # four-way split by p_n mod 4, again matching the floor form
    base = Fraction(p_n - 1, 4)
    r = p_n % 4
    if r == 2:  # p = 4s - 2
        v = base - Fraction(1, 4)
    elif r == 3:  # p = 4s - 1
        v = base - Fraction(2, 4)
    elif r == 0:  # p = 4s
        v = base - Fraction(3, 4)
    else:  # p = 4s + 1
        v = base
    assert v.denominator == 1
    return int(v)


def odd_class_max_value(p_n: int) -> int:
    """6 * i_opow_max - 1: the largest 6i-1 number the bound needs."""
    return 6 * i_opow_max(p_n) - 1


def even_class_max_value(p_n: int) -> int:
    """6 * i_epow_max + 1: the largest 6i+1 number the bound needs."""
    return 6 * i_epow_max(p_n) + 1


def even_class_max_value_casewise(p_n: int) -> int:
    # value-level split by p_n mod 4: (3p-4)/2, (3p-7)/2, (3p-10)/2, (3p-1)/2
    r = p_n % 4
    if r == 2:
        num = 3 * p_n - 4
    elif r == 3:
        num = 3 * p_n - 7
    elif r == 0:
        num = 3 * p_n - 10
    else:
        num = 3 * p_n - 1
    return _exact_div(num, 2, "even-class max value")


def geom_sum(a: int, b: int) -> int:
    """Sum of 4^i for i in [a, b], by the closed form (4^(b+1) - 4^a)/3."""
    if a < 0 or b < a:
        raise ValueError(f"need 0 <= a <= b, got a={a}, b={b}")
    return _exact_div(4 ** (b + 1) - 4**a, 3, "geometric sum")


def geom_weighted_sum(a: int, b: int) -> int:
    """Sum of i * 4^i for i in [a, b], by the closed form
    4^(b+1) * (b+1)/3 - (4/9) 4^(b+1) - 4^a * a/3 + (4/9) 4^a."""
    if a < 0 or b < a:
        raise ValueError(f"need 0 <= a <= b, got a={a}, b={b}")
    num = 4 ** (b + 1) * (3 * (b + 1) - 4) + 4**a * (4 - 3 * a)
    return _exact_div(num, 9, "weighted geometric sum")


@dataclass(frozen=True)
class TotalsReport:
    """Closed-form totals for the bound N = (4^k_n - 1)/3 next to the
    brute count of odd numbers in [1, N]."""

    k_n: int
    n: int
    t_odd: int
    t_even: int
    t_total: int
    brute_count: int
    identity_holds: bool

    def to_dict(self) -> dict:
        return {
            "kN": self.k_n,
            "N": self.n,
            "To": self.t_odd,
            "Te": self.t_even,
            "T": self.t_total,
            "bruteCount": self.brute_count,
            "identityHolds": self.identity_holds,
        }


def totals(k_n: int) -> TotalsReport:
    """Evaluate T_o = (4^k - 3k - 1)/9, T_e = (4^k - 12k + 8)/18 and the
    assembly T = (k-1) + 1 + T_o + T_e, then count odds in [1, N] directly."""
    _require_positive_int(k_n, "k_n")
    if k_n < 2:
        raise ValueError("k_n must be > 1")
    pow4 = 4**k_n
    n = _exact_div(pow4 - 1, 3, "bound for totals")
    t_odd = _exact_div(pow4 - 3 * k_n - 1, 9, "odd-power total")
    t_even = _exact_div(pow4 - 12 * k_n + 8, 18, "even-power total")
    t_total = (k_n - 1) + 1 + t_odd + t_even
    brute = len(range(1, n + 1, 2))
    return TotalsReport(
        k_n=k_n,
        n=n,
        t_odd=t_odd,
        t_even=t_even,
        t_total=t_total,
        brute_count=brute,
        identity_holds=t_total == brute,
    )


def totals_by_summation(k_n: int) -> tuple[int, int]:
    """The same totals by the explicit finite sums, term by term.

    Kept deliberately literal (including the terms that cancel to zero) so
    a transcription slip in either route shows up as a mismatch with the
    closed forms.
    """
    _require_positive_int(k_n, "k_n")
    if k_n < 2:
        raise ValueError("k_n must be > 1")
    half = Fraction(1, 2)
    sixth = Fraction(1, 6)

    t_odd = k_n * (sixth * (2 + 1) - half)
    for i in range(1, k_n):
        upper = sixth * (2 ** (2 * (i + 1) - 1) + 1) - half
        lower = sixth * (2 ** (2 * i - 1) + 1) - half
        t_odd += (k_n - i) * (upper - lower)

    t_even = (k_n - 1) * (sixth * (2**2 - 1) - half)
    for i in range(2, k_n):
        upper = sixth * (2 ** (2 * i) - 1) - half
        lower = sixth * (2 ** (2 * (i - 1)) - 1) - half
        t_even += (k_n - i) * (upper - lower)

    if t_odd.denominator != 1 or t_even.denominator != 1:
        raise ArithmeticError("summed totals did not come out integral")
    return int(t_odd), int(t_even)


def _floor_remainder_half_log(num: int, den: int, plus_half: bool) -> FloorRemainder:
    # floor of log2(num/den)/2 (+ 1/2 when asked), with the exact floor from
    # integer comparisons and the remainder exact iff num/den = 2^m
    e = _floor_log2_ratio(num, den)
    value = (e + 1) // 2 if plus_half else e // 2
    # remainder = half-log of q where q = num / (den * 2^m), m the subtracted
    # integer exponent; q lands in [1, 4) and q = 1 or 2 are the exact cases
    m = 2 * value - 1 if plus_half else 2 * value
    if m >= 0:
        qn, qd = num, den << m
    else:
        qn, qd = num << -m, den
    if qn == qd:
        remainder: Fraction | float = Fraction(0)
    elif qn == 2 * qd:
        remainder = Fraction(1, 2)
    else:
        remainder = 0.5 * (math.log2(qn) - math.log2(qd))
    return FloorRemainder(value=value, remainder=remainder)


def kj_odd(p_n: int, i_opow: int) -> FloorRemainder:
    """k_j = floor( log2((6p-2)/(6i-1)) / 2 + 1/2 ) for the odd-power rows.

    Integer solutions occur exactly when the ratio is 2^(2f-1); the returned
    remainder is exactly 0 in that case.
    """
    _require_positive_int(p_n, "p_n")
    if p_n < 2:
        raise ValueError("p_n must be > 1")
    _require_positive_int(i_opow, "i_opow")
    return _floor_remainder_half_log(6 * p_n - 2, 6 * i_opow - 1, plus_half=True)


def kj_even(p_n: int, i_epow: int) -> FloorRemainder:
    """k_j = floor( log2((6p-2)/(6i+1)) / 2 ) for the even-power rows.

    Integer solutions occur exactly when the ratio is 4^f.
    """
    _require_positive_int(p_n, "p_n")
    if p_n < 2:
        raise ValueError("p_n must be > 1")
    _require_positive_int(i_epow, "i_epow")
    return _floor_remainder_half_log(6 * p_n - 2, 6 * i_epow + 1, plus_half=False)


def i_opow_floor(p_n: int, f: int) -> FloorRemainder:
    """Row index reached at depth f on the odd-power side:
    floor(((6p-2)/2^(2f-1) + 1) / 6), remainder exact."""
    _require_positive_int(p_n, "p_n")
    if p_n < 2:
        raise ValueError("p_n must be > 1")
    _require_positive_int(f, "f")
    expr = (Fraction(6 * p_n - 2, 2 ** (2 * f - 1)) + 1) / 6
    value = math.floor(expr)
    return FloorRemainder(value=value, remainder=expr - value)


def i_epow_floor(p_n: int, f: int) -> FloorRemainder:
    """Row index reached at depth f on the even-power side:
    floor(((6p-2)/4^f - 1) / 6), remainder exact."""
    _require_positive_int(p_n, "p_n")
    if p_n < 2:
        raise ValueError("p_n must be > 1")
    _require_positive_int(f, "f")
    expr = (Fraction(6 * p_n - 2, 4**f) - 1) / 6
    value = math.floor(expr)
    return FloorRemainder(value=value, remainder=expr - value)
