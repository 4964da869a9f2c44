"""Minimal quantitative randomness checks for class sequences.

Two tests only: a chi-square goodness-of-fit of class counts against the
limiting probabilities (2/(p+1) for class A, 1/(p+1) otherwise), and a
mean-subtracted serial correlation of gap values at a chosen lag.  Both
return a report rather than raising on a statistical failure; deciding
what a failure means is the caller's job.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gaps import GapSequence
from .residues import ClassSequence, class_frequencies, theorem_probability

__all__ = [
    "TestReport",
    "CHI_SQUARE_CRIT_99",
    "chi_square_frequencies",
    "serial_correlation",
]

# chi-square 99th percentile critical values, df 1..30
CHI_SQUARE_CRIT_99 = {
    1: 6.635, 2: 9.210, 3: 11.345, 4: 13.277, 5: 15.086,
    6: 16.812, 7: 18.475, 8: 20.090, 9: 21.666, 10: 23.209,
    11: 24.725, 12: 26.217, 13: 27.688, 14: 29.141, 15: 30.578,
    16: 32.000, 17: 33.409, 18: 34.805, 19: 36.191, 20: 37.566,
    21: 38.932, 22: 40.289, 23: 41.638, 24: 42.980, 25: 44.314,
    26: 45.642, 27: 46.963, 28: 48.278, 29: 49.588, 30: 50.892,
}


@dataclass(frozen=True)
class TestReport:
    name: str
    statistic: float
    df: int
    threshold: float
    passed: bool
    details: dict[str, float]

    def __post_init__(self) -> None:
        assert self.passed == (self.statistic <= self.threshold)


def chi_square_frequencies(cs: ClassSequence) -> TestReport:
    """Chi-square of observed class counts vs the limiting probabilities."""
    p = cs.modulus
    n = len(cs)
    if n < 50 * p:
        raise ValueError(f"sequence too short: need >= {50 * p}, got {n}")
    df = p - 1
    if df not in CHI_SQUARE_CRIT_99:
        raise ValueError(f"no critical value for df={df} (modulus too large)")
    p_zero = theorem_probability(p)
    p_rest = (1 - p_zero) / (p - 1)
    stat = 0.0
    for label, observed in class_frequencies(cs).items():
        expected = float((p_zero if label.residue == 0 else p_rest) * n)
        stat += (observed - expected) ** 2 / expected
    threshold = CHI_SQUARE_CRIT_99[df]
    return TestReport(
        name=f"chi_square_frequencies(p={p})",
        statistic=stat,
        df=df,
        threshold=threshold,
        passed=stat <= threshold,
        details={"n": float(n)},
    )


def serial_correlation(gaps: GapSequence, lag: int) -> TestReport:
    """Pearson correlation between gaps[i] and gaps[i+lag].

    The statistic is |r|; the pass band 3/sqrt(len) approximates three
    standard errors of r around zero.
    """
    if lag < 1:
        raise ValueError(f"lag must be >= 1, got {lag}")
    n = len(gaps)
    if n < lag + 30:
        raise ValueError(f"need at least lag + 30 = {lag + 30} gaps, got {n}")
    g = gaps.gaps.astype(np.float64)
    x, y = g[:-lag], g[lag:]
    sx, sy = x.std(), y.std()
    if sx == 0.0 or sy == 0.0:
        raise ValueError("zero variance: gaps are constant over the lag window")
    r = float(((x - x.mean()) * (y - y.mean())).mean() / (sx * sy))
    threshold = 3.0 / math.sqrt(n)
    return TestReport(
        name=f"serial_correlation(lag={lag})",
        statistic=abs(r),
        df=len(x) - 2,
        threshold=threshold,
        passed=abs(r) <= threshold,
        details={"r": r, "pairs": float(len(x))},
    )
