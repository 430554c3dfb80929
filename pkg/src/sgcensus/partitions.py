"""Restricted partitions, the box-counting bijection, and growth constants.

Semigroups with F < 2m are counted by partitions that fit in a box:
the gaps above the multiplicity, written m + i_1 < ... < m + i_r with
r = g - m + 1, give a partition (i_a - a) with at most r parts each of
size at most 2m - 2 - g, and total equal to the weight minus r.  The
map is a bijection, so the census by (genus, multiplicity, weight) on
that side of the landscape reduces to Gaussian binomial coefficients.
"""

from __future__ import annotations

import math
import threading
from functools import lru_cache

from .core import Semigroup, SemigroupError

SQRT5 = math.sqrt(5.0)
GOLDEN_RATIO = (1.0 + SQRT5) / 2.0

# density endpoints of the box-counting regime and the exponents that
# bound the weight distribution on it
ALPHA = (5.0 - SQRT5) / 10.0
GAMMA = (5.0 + SQRT5) / 10.0
BETA1 = 1.5 * (math.log(GOLDEN_RATIO) / math.pi) ** 2
BETA2 = (1.0 - GAMMA) * (2.0 * GAMMA - 1.0) - BETA1


class PartitionTable:
    """Lazy table of p(x, y, z): partitions of x into at most y parts,
    each at most z.  Rows are keyed by (y, z); a query fills the whole
    dependency rectangle below it once, so repeated queries share work.
    """

    def __init__(self) -> None:
        self._rows: dict[tuple[int, int], list[int]] = {}
        self._lock = threading.Lock()

    def _row(self, y: int, z: int) -> list[int]:
        key = (y, z)
        row = self._rows.get(key)
        if row is not None:
            return row
        with self._lock:
            row = self._rows.get(key)
            if row is not None:
                return row
            rows = self._rows
            for yy in range(y + 1):
                for zz in range(z + 1):
                    if (yy, zz) in rows:
                        continue
                    if yy == 0 or zz == 0:
                        rows[(yy, zz)] = [1]
                        continue
                    # split on whether some part equals zz:
                    # p(x, yy, zz) = p(x, yy, zz-1) + p(x-zz, yy-1, zz)
                    cap_z = rows[(yy, zz - 1)]
                    drop_y = rows[(yy - 1, zz)]
                    size = yy * zz + 1
                    new = [0] * size
                    for x in range(size):
                        v = cap_z[x] if x < len(cap_z) else 0
                        t = x - zz
                        if 0 <= t < len(drop_y):
                            v += drop_y[t]
                        new[x] = v
                    rows[(yy, zz)] = new
            return rows[key]

    def count(self, x: int, y: int, z: int) -> int:
        if y < 0 or z < 0:
            return 0
        if x < 0 or x > y * z:
            return 0
        return self._row(y, z)[x]


_shared_table = PartitionTable()


def p_restricted(x: int, y: int, z: int) -> int:
    """p(x, y, z) through a process-wide shared table."""
    return _shared_table.count(x, y, z)


def count_by_weight_f2m(genus: int, multiplicity: int, weight: int) -> int:
    """Number of semigroups with the given genus, multiplicity and
    weight subject to F < 2m.  Zero whenever the box is empty, which
    covers every multiplicity below (genus + 2) / 2.
    """
    if genus < 0 or multiplicity < 1:
        raise ValueError("need genus >= 0 and multiplicity >= 1")
    r = genus - multiplicity + 1
    return p_restricted(weight - r, r, 2 * multiplicity - 2 - genus)


def semigroup_to_partition(s: Semigroup) -> tuple[int, ...]:
    """Partition attached to a semigroup with F < 2m, largest part
    first.  The gaps above m, as m + i_1 < ... < m + i_r, map to parts
    i_a - a; the partition is empty exactly in the ordinary case."""
    m = s.multiplicity
    if s.frobenius >= 2 * m:
        raise SemigroupError("the box bijection needs F < 2m")
    upper = [h - m for h in s.gaps() if h > m]
    parts = [i - a for a, i in enumerate(upper, start=1)]
    parts.reverse()
    return tuple(parts)


def partition_to_semigroup(parts: tuple[int, ...], genus: int, multiplicity: int) -> Semigroup:
    """Inverse of the box bijection for the (genus, multiplicity) cell.

    Parts may omit trailing zeros; they must be weakly decreasing and
    fit in the (g - m + 1) x (2m - 2 - g) box.
    """
    r = genus - multiplicity + 1
    z = 2 * multiplicity - 2 - genus
    if r < 0 or z < 0:
        raise ValueError(f"empty box for genus {genus}, multiplicity {multiplicity}")
    if len(parts) > r:
        raise ValueError(f"too many parts for a box with {r} rows")
    padded = list(parts) + [0] * (r - len(parts))
    for a, part in enumerate(padded):
        if part < 0 or part > z:
            raise ValueError(f"part {part} outside [0, {z}]")
        if a and padded[a - 1] < part:
            raise ValueError("parts must be weakly decreasing")
    # undo parts[a] = i_{r-a} - (r-a):  row a from the top is the
    # (r - a)-th smallest gap offset
    gaps = list(range(1, multiplicity))
    for a, part in enumerate(padded):
        gaps.append(multiplicity + part + r - a)
    gaps.sort()
    return Semigroup.from_gaps(gaps)


@lru_cache(maxsize=4)
def _p_total_row(n_max: int) -> tuple[int, ...]:
    table = [0] * (n_max + 1)
    table[0] = 1
    for k in range(1, n_max + 1):
        for x in range(k, n_max + 1):
            table[x] += table[x - k]
    return tuple(table)


def p_total(n: int, n_max: int = 1600) -> int:
    """Unrestricted partition count p(n), from a cached DP row."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > n_max:
        raise ValueError(f"n exceeds table bound {n_max}")
    return _p_total_row(n_max)[n]


def hr_estimate(n: int) -> float:
    """First-order asymptotic for p(n): exp(pi sqrt(2n/3)) / (4 n sqrt 3)."""
    if n < 1:
        raise ValueError("n must be positive")
    return math.exp(math.pi * math.sqrt(2.0 * n / 3.0)) / (4.0 * n * math.sqrt(3.0))


@lru_cache(maxsize=8)
def _fib_pair(n: int) -> tuple[int, int]:
    # fast doubling: returns (F(n), F(n+1)) with F(1) = F(2) = 1
    if n == 0:
        return (0, 1)
    a, b = _fib_pair(n >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    if n & 1:
        return (d, c + d)
    return (c, d)


def fibonacci(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _fib_pair(n)[0]


def fib_identity_check(n: int) -> bool:
    """F(n+1) = F(n) + F(n-1) and the closed form against phi^n/sqrt5."""
    if n < 2:
        raise ValueError("need n >= 2")
    f_prev, f_cur, f_next = fibonacci(n - 1), fibonacci(n), fibonacci(n + 1)
    if f_next != f_cur + f_prev:
        return False
    approx = GOLDEN_RATIO**n / SQRT5
    return abs(f_cur - approx) < 0.5


def growth_rate_f(c: float) -> float:
    """(1-c)^(1-c) / (c^c (1-2c)^(1-2c)) on 0 < c < 1/2, in log space.

    Takes its maximum phi at c = ALPHA.
    """
    if not 0.0 < c < 0.5:
        raise ValueError("c must lie strictly between 0 and 1/2")
    log_val = (
        (1.0 - c) * math.log(1.0 - c)
        - c * math.log(c)
        - (1.0 - 2.0 * c) * math.log(1.0 - 2.0 * c)
    )
    return math.exp(log_val)
