"""Integer-exact evaluation of the ranking recurrence and its closed forms.

Everything here is pure integer (or big-integer) arithmetic.  Verdicts
about inequalities involving binary logarithms are decided exactly by
cross-multiplied power comparisons; floats appear only as display values
and never feed a verdict.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb

from .errors import DomainError


def _check_k(k: int) -> None:
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")


def R_rec(k: int, n: int) -> int:
    """Ranking recurrence: R_k(n) = n for n <= k, else k + R_k(ceil((n-k)/2)).

    The recursion is a simple chain, so it is evaluated iteratively.
    """
    _check_k(k)
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    acc = 0
    while n > k:
        n = (n - k + 1) // 2
        acc += k
    return acc + n


def R_explicit(k: int, n: int) -> int:
    """Closed form for R_k(n); the floor-log is computed in integers.

    For k <= n - 2 the value is k*(j - 1) + ceil((n+k) / 2^j) where j is
    the largest integer with k * 2^j <= n + k.
    """
    _check_k(k)
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if k >= n - 1:
        return n
    j = ((n + k) // k).bit_length() - 1
    pow2 = 1 << j
    return k * (j - 1) + -((n + k) // -pow2)


def N_adjoint(k: int, r: int) -> int:
    """Smallest n with R_k(n) >= r; N_k(0) = 0.

    Ground truth by scanning R_rec upward: exponential stepping followed
    by binary search, valid because R_k is monotone in n (that
    monotonicity is itself exhaustively tested elsewhere).
    """
    _check_k(k)
    if r < 0:
        raise DomainError(f"r must be >= 0, got {r}")
    if r == 0:
        return 0
    lo = r  # R_k(n) <= n, so no smaller n can reach r
    if R_rec(k, lo) >= r:
        return lo
    hi = lo
    while R_rec(k, hi) < r:
        lo = hi
        hi *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if R_rec(k, mid) >= r:
            hi = mid
        else:
            lo = mid
    return hi


# ---------------------------------------------------------------------------
# Printed closed forms for the adjoint (audited, not trusted)


def _check_claim_domain(k: int) -> None:
    if k < 2:
        raise DomainError(f"closed-form claims are stated for k >= 2 only, got k={k}")


def claim61_value(k: int, j: int) -> int:
    """Printed backward difference: 2^(i-1) on the window (i-1)k < j <= ik."""
    _check_claim_domain(k)
    if j < 1:
        raise DomainError(f"j must be >= 1, got {j}")
    i = -(j // -k)
    return 1 << (i - 1)


def claim62_value(k: int, r: int) -> int:
    """Printed adjoint closed form: (k + r mod k) * 2^((r - r mod k)/k) - k."""
    _check_claim_domain(k)
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    return (k + r % k) * (1 << (r // k)) - k


@dataclass(frozen=True)
class Claim63Bound:
    """Exact handle on the lower-bound value k * (2^(r/k) - 1).

    The value is irrational unless k divides r, so comparisons against
    integers go through the big-integer test
        k * (2^(r/k) - 1) <= x  <=>  k^k * 2^r <= (x + k)^k   (x + k > 0).
    """

    k: int
    r: int

    def leq(self, x: int) -> bool:
        """Does k*(2^(r/k) - 1) <= x hold?"""
        if x + self.k <= 0:
            return False
        return self.k**self.k << self.r <= (x + self.k) ** self.k

    def eq(self, x: int) -> bool:
        if x + self.k <= 0:
            return False
        return self.k**self.k << self.r == (x + self.k) ** self.k

    def is_integer(self) -> bool:
        return self.r % self.k == 0

    def exact_int(self) -> int:
        if not self.is_integer():
            raise DomainError(f"k={self.k} does not divide r={self.r}")
        return self.k * ((1 << (self.r // self.k)) - 1)

    def display(self) -> float:
        return self.k * (2.0 ** (self.r / self.k) - 1.0)


def claim63_lower(k: int, r: int) -> Claim63Bound:
    """Printed lower bound on the adjoint, as an exact comparison object."""
    _check_claim_domain(k)
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    return Claim63Bound(k, r)


def fmin_boundary_holds(k: int, x: int) -> bool:
    """Exact check that the interpolating function exceeds its x=0 value.

    For integer x in [1, k-1] this is (k+x) * 2^(-x/k) > k, i.e.
    (k+x)^k > k^k * 2^x; the r-dependence cancels.
    """
    _check_claim_domain(k)
    if not 1 <= x <= k - 1:
        raise DomainError(f"x must be in 1..k-1, got {x}")
    return (k + x) ** k > k**k << x


# ---------------------------------------------------------------------------
# The logarithmic upper bound R_k(n) <= k * (1 + log(n/k))


@dataclass(frozen=True)
class Thm6Bound:
    """Exact comparisons against k * (1 + log2(n/k)).

    R <= k*(1 + log2(n/k))  <=>  k^k * 2^(R-k) <= n^k, decided with
    arbitrary-precision integers; `display` is for printing only.
    """

    k: int
    n: int

    def _sides(self, r: int) -> tuple[int, int]:
        lhs = self.k**self.k
        rhs = self.n**self.k
        if r >= self.k:
            lhs <<= r - self.k
        else:
            rhs <<= self.k - r
        return lhs, rhs

    def leq(self, r: int) -> bool:
        """Does r <= k * (1 + log2(n/k)) hold?"""
        lhs, rhs = self._sides(r)
        return lhs <= rhs

    def eq(self, r: int) -> bool:
        lhs, rhs = self._sides(r)
        return lhs == rhs

    def display(self) -> float:
        return self.k * (1.0 + math.log2(self.n / self.k))


def bound_thm6(k: int, n: int) -> Thm6Bound:
    _check_k(k)
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return Thm6Bound(k, n)


@dataclass(frozen=True)
class LogChainBound:
    """Exact comparisons against 1 + s * log2(n) (the older chain bound)."""

    s: int
    n: int

    def leq(self, r: int) -> bool:
        """Does r <= 1 + s * log2(n) hold?  Exactly: 2^(r-1) <= n^s."""
        if r <= 1:
            return True
        return 1 << (r - 1) <= self.n**self.s

    def display(self) -> float:
        return 1.0 + self.s * math.log2(self.n)


def bound_log_chain(s: int, n: int) -> LogChainBound:
    if s < 0:
        raise DomainError(f"s must be >= 0, got {s}")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return LogChainBound(s, n)


# ---------------------------------------------------------------------------
# Hypercube bandwidth closed forms (both readings; audited downstream)


def harper_bandwidth(d: int, variant: str) -> int:
    """Closed-form hypercube bandwidth, in two readings.

    'printed' evaluates the sum exactly as typeset, with a summand that
    does not depend on the index: (d+1) * C(d, floor(d/2)).  'standard'
    evaluates sum_{i=0}^{d-1} C(i, floor(i/2)).  Neither is trusted; the
    exact solver arbitrates at small d.
    """
    if d < 1:
        raise DomainError(f"d must be >= 1, got {d}")
    if variant == "printed":
        return (d + 1) * comb(d, d // 2)
    if variant == "standard":
        return sum(comb(i, i // 2) for i in range(d))
    raise DomainError(f"unknown variant {variant!r}")


# ---------------------------------------------------------------------------
# Tables


@dataclass(frozen=True)
class RecurrenceTable:
    """R_k(n) over a contiguous n range starting at 0."""

    k: int
    entries: dict[int, int]


@dataclass(frozen=True)
class AdjointTable:
    """N_k(r) over a contiguous r range starting at 0."""

    k: int
    entries: dict[int, int]


def build_R_table(k: int, n_max: int) -> RecurrenceTable:
    return RecurrenceTable(k, {n: R_rec(k, n) for n in range(n_max + 1)})


def build_N_table(k: int, r_max: int) -> AdjointTable:
    return AdjointTable(k, {r: N_adjoint(k, r) for r in range(r_max + 1)})
