"""n-fold gap sumsets and the Buchweitz obstruction.

A semigroup of genus g >= 2 with gap set H cannot occur as the set of
pole orders at a point of a smooth curve if |nH| > (2n-1)(g-1) for some
n > 1, where nH is the n-fold sumset.  Since H lives in [1, F] the size
bound |nH| <= n(F-1)+1 limits how far n is worth testing: failure at n
requires n(2g-1-F) < g, which is unbounded only in the symmetric case
F = 2g-1.  Sumsets are computed by shift-or on integer bitmaps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .core import Semigroup


def _mask_of(values: Iterable[int]) -> int:
    mask = 0
    for v in values:
        if v < 0:
            raise ValueError(f"gap values must be nonnegative, got {v}")
        mask |= 1 << v
    return mask


def _sumset_mask(acc: int, mask: int) -> int:
    """Sumset of two bitmap-encoded sets."""
    out = 0
    w = mask
    while w:
        lsb = w & -w
        out |= acc << (lsb.bit_length() - 1)
        w ^= lsb
    return out


def _bits(mask: int) -> set[int]:
    out = set()
    while mask:
        lsb = mask & -mask
        out.add(lsb.bit_length() - 1)
        mask ^= lsb
    return out


def nfold_sumset(gaps: Iterable[int], n: int) -> set[int]:
    """All sums of exactly n elements of the given set, repeats allowed.

    Empty input gives the empty set for any n >= 1.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    mask = _mask_of(gaps)
    if mask == 0:
        return set()
    acc = mask
    for _ in range(n - 1):
        acc = _sumset_mask(acc, mask)
    return _bits(acc)


def buchweitz_fails(s: Semigroup, n: int) -> bool:
    """Whether |nH| > (2n-1)(g-1).  Requires genus >= 2 and n >= 2."""
    if n < 2:
        raise ValueError("the obstruction is only defined for n >= 2")
    if s.genus < 2:
        raise ValueError("the obstruction needs genus >= 2")
    size = len(nfold_sumset(s.gaps(), n))
    return size > (2 * n - 1) * (s.genus - 1)


def buchweitz_horizon(s: Semigroup) -> Optional[int]:
    """Largest n at which the size bound still permits a failure, or
    None when F = 2g-1 leaves every n in play.  Requires genus >= 2."""
    g = s.genus
    if g < 2:
        raise ValueError("the obstruction needs genus >= 2")
    d = 2 * g - 1 - s.frobenius
    if d == 0:
        return None
    return (g - 1) // d


@dataclass(frozen=True)
class BuchweitzTest:
    n: int
    size: int
    threshold: int
    fails: bool


@dataclass(frozen=True)
class BuchweitzReport:
    """Outcome of testing the obstruction for n = 2 .. min(horizon, n_cap).

    horizon None means the symmetric case with no finite testing bound;
    capped is set when the tested range was truncated at n_cap without a
    failure, leaving the question open beyond the cap.
    """

    genus: int
    horizon: Optional[int]
    n_cap: int
    tests: tuple[BuchweitzTest, ...]
    fails_any: bool
    first_failure: Optional[int]
    capped: bool

    def as_dict(self) -> dict:
        return {
            "genus": self.genus,
            "horizon": self.horizon,
            "n_cap": self.n_cap,
            "capped": self.capped,
            "fails_any": self.fails_any,
            "first_failure": self.first_failure,
            "tests": [
                {"n": t.n, "size": t.size, "threshold": t.threshold, "fails": t.fails}
                for t in self.tests
            ],
        }


DEFAULT_N_CAP = 8


def classify_buchweitz(s: Semigroup, n_cap: int = DEFAULT_N_CAP) -> BuchweitzReport:
    """Run the obstruction over every n the size bound leaves open, up
    to n_cap.  Genus 0 and 1 cannot fail and report an empty test list.
    """
    if n_cap < 2:
        raise ValueError("n_cap must be at least 2")
    g = s.genus
    if g < 2:
        return BuchweitzReport(g, 1, n_cap, (), False, None, False)
    horizon = buchweitz_horizon(s)
    if horizon is None:
        n_hi = n_cap
        truncated = True
    else:
        n_hi = min(horizon, n_cap)
        truncated = horizon > n_cap
    tests = []
    first = None
    mask = _mask_of(s.gaps())
    acc = mask
    for n in range(2, n_hi + 1):
        acc = _sumset_mask(acc, mask)
        size = acc.bit_count()
        threshold = (2 * n - 1) * (g - 1)
        fails = size > threshold
        tests.append(BuchweitzTest(n, size, threshold, fails))
        if fails:
            first = n
            break
    fails_any = first is not None
    return BuchweitzReport(
        genus=g,
        horizon=horizon,
        n_cap=n_cap,
        tests=tuple(tests),
        fails_any=fails_any,
        first_failure=first,
        capped=truncated and not fails_any,
    )
