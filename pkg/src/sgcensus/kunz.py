"""Apery / Kunz coordinates of numerical semigroups.

For a semigroup of multiplicity m, coordinate k_i (1 <= i <= m-1) is the
number of gaps congruent to i mod m; equivalently k_i*m + i is the least
member in that residue class.  A coordinate vector describes a semigroup
exactly when it satisfies the classical inequality system

    k_i >= 1                            for all i
    k_i + k_j     >= k_{i+j}            for i <= j, i + j <= m - 1
    k_i + k_j + 1 >= k_{i+j-m}          for i <= j, i + j > m

and the coordinate sum equals the genus.  This module works purely on
vectors; the conversion to and from semigroup objects lives in core.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, NamedTuple


@dataclass(frozen=True)
class KunzVector:
    """Coordinate vector (k_1, ..., k_{m-1}) for multiplicity m.

    Construction only enforces shape, so invalid coordinate values can be
    represented and handed to violations() for a report.
    """

    multiplicity: int
    coordinates: tuple[int, ...]

    def __post_init__(self):
        if self.multiplicity < 2:
            raise ValueError("multiplicity must be at least 2")
        if len(self.coordinates) != self.multiplicity - 1:
            raise ValueError(
                f"expected {self.multiplicity - 1} coordinates, "
                f"got {len(self.coordinates)}"
            )

    @property
    def genus(self) -> int:
        return sum(self.coordinates)


class KunzViolation(NamedTuple):
    i: int
    j: int
    rule: str  # "positivity" | "additive" | "wraparound"


class KunzViolationError(ValueError):
    """Raised when a coordinate vector fails the inequality system."""

    def __init__(self, vector: KunzVector, violations: list[KunzViolation]):
        self.vector = vector
        self.violations = violations
        pairs = ", ".join(f"({v.i},{v.j}) {v.rule}" for v in violations)
        super().__init__(f"invalid Kunz coordinates, violated: {pairs}")


def violations(vec: KunzVector) -> list[KunzViolation]:
    """Every violated inequality of the defining system, empty if valid."""
    m = vec.multiplicity
    k = vec.coordinates
    bad: list[KunzViolation] = []
    for i in range(1, m):
        if k[i - 1] < 1:
            bad.append(KunzViolation(i, i, "positivity"))
    for i in range(1, m):
        for j in range(i, m):
            s = i + j
            if s <= m - 1:
                if k[i - 1] + k[j - 1] < k[s - 1]:
                    bad.append(KunzViolation(i, j, "additive"))
            elif s > m:
                if k[i - 1] + k[j - 1] + 1 < k[s - m - 1]:
                    bad.append(KunzViolation(i, j, "wraparound"))
            # s == m wraps to index 0 and imposes nothing
    return bad


def is_valid(vec: KunzVector) -> bool:
    return not violations(vec)


def vectors(multiplicity: int, genus: int) -> Iterator[KunzVector]:
    """Yield every valid coordinate vector with the given invariants.

    Backtracking over positions 1..m-1 in order.  A constraint is checked
    as soon as its largest index is placed, so every emitted vector is
    valid and no valid vector is missed.  Infeasible input (genus below
    m-1) yields nothing.
    """
    m = multiplicity
    if m < 2:
        raise ValueError("multiplicity must be at least 2")
    n = m - 1
    if genus < n:
        return

    prefix: list[int] = []

    def extend() -> Iterator[KunzVector]:
        t = len(prefix) + 1
        placed = sum(prefix)
        slots_after = n - t
        hi = genus - placed - slots_after  # leave room for 1s after t
        for i in range(1, t // 2 + 1):
            b = prefix[i - 1] + prefix[t - i - 1]
            if b < hi:
                hi = b
        lo = 1
        # wraparound constraints whose largest index is t
        for i in range(max(1, m + 1 - t), t):
            need = prefix[i + t - m - 1] - prefix[i - 1] - 1
            if need > lo:
                lo = need
        if 2 * t > m:
            need = prefix[2 * t - m - 1] // 2  # from 2*k_t + 1 >= k_{2t-m}
            if need > lo:
                lo = need
        if slots_after == 0:
            want = genus - placed
            if lo <= want <= hi:
                yield KunzVector(m, tuple(prefix) + (want,))
            return
        for v in range(lo, hi + 1):
            prefix.append(v)
            yield from extend()
            prefix.pop()

    yield from extend()


def count_vectors(multiplicity: int, genus: int) -> int:
    return sum(1 for _ in vectors(multiplicity, genus))


def count_f_below_2m(genus: int) -> int:
    """Number of semigroups of the given genus whose Frobenius number is
    below twice the multiplicity.

    Those are exactly the ones with every coordinate in {1, 2}; choosing
    which of the m-1 coordinates equal 2 gives a free binomial count, and
    the sum over multiplicities telescopes to a Fibonacci number.
    """
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    return sum(comb(genus - r, r) for r in range(genus // 2 + 1))
