"""Non-normalized autocorrelation of gap sequences.

For a sequence a(0..N-1) the statistic is the plain product average

    C(k) = (1/N) * sum_i a(i) * a(i+k)

with two boundary conventions:

* ``circular`` (default): i+k wraps mod N, every lag averages N
  products, and C(k) = C(N-k).
* ``windowed``: no wrap; every lag averages the same n+1 = N - k_max
  leading products so denominators stay comparable across lags.

Sums are accumulated in exact integer arithmetic (int64 vector path with
an overflow guard, arbitrary-precision fallback) and divided last, so
results are identical no matter how the work is split.

The off-peak level of a class gap sequence is predicted by the square of
its limiting mean gap (``expected_offpeak``), and the peak C(0) by a
modeled gap distribution (``c0_series_estimate``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .gaps import expected_mean_gap
from .residues import ClassLabel

__all__ = [
    "AutocorrResult",
    "AutocorrSummary",
    "compute",
    "autocorrelation",
    "expected_offpeak",
    "default_gap_model",
    "c0_series_estimate",
    "summarize",
]

MODES = ("circular", "windowed")


@dataclass(frozen=True)
class AutocorrResult:
    """C(k) per lag, with peak and off-peak summaries."""

    values: dict[int, float]
    mode: str
    n_products: int
    peak: float
    offpeak_mean: float | None

    @property
    def k_max(self) -> int:
        return len(self.values) - 1


def _lag_sums(seq: list[int], k_max: int, mode: str) -> tuple[list[int], int]:
    """Exact integer product sums per lag, and the common denominator."""
    n = len(seq)
    # int64 dot products stay exact iff max(a)^2 * N < 2^63; check before
    # converting so oversized Python ints never reach the vector path
    safe = max(seq) ** 2 * n < 2**63
    if mode == "circular":
        if safe:
            arr = np.asarray(seq, dtype=np.int64)
            ext = np.concatenate([arr, arr[:k_max]])
            sums = [int(np.dot(arr, ext[k : k + n])) for k in range(k_max + 1)]
        else:
            sums = [
                sum(seq[i] * seq[(i + k) % n] for i in range(n))
                for k in range(k_max + 1)
            ]
        return sums, n
    window = n - k_max
    if safe:
        arr = np.asarray(seq, dtype=np.int64)
        head = arr[:window]
        sums = [int(np.dot(head, arr[k : k + window])) for k in range(k_max + 1)]
    else:
        sums = [
            sum(seq[i] * seq[i + k] for i in range(window))
            for k in range(k_max + 1)
        ]
    return sums, window


def compute(
    seq: Sequence[int], k_max: int, mode: str = "circular"
) -> AutocorrResult:
    """Autocorrelation of a positive integer sequence up to lag k_max."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    values = [int(x) for x in seq]
    if not values:
        raise ValueError("empty sequence")
    if any(x < 1 for x in values):
        raise ValueError("sequence entries must be positive integers")
    if k_max < 0:
        raise ValueError(f"k_max must be >= 0, got {k_max}")
    if mode == "circular" and k_max >= len(values):
        raise ValueError(
            f"circular mode needs k_max < length ({k_max} >= {len(values)})"
        )
    if mode == "windowed" and len(values) < k_max + 2:
        raise ValueError(
            f"windowed mode needs length >= k_max + 2 ({len(values)} < {k_max + 2})"
        )
    sums, denom = _lag_sums(values, k_max, mode)
    ck = {k: float(Fraction(s, denom)) for k, s in enumerate(sums)}
    offpeak = (
        float(Fraction(sum(sums[1:]), denom * k_max)) if k_max >= 1 else None
    )
    return AutocorrResult(ck, mode, denom, ck[0], offpeak)


# Readability alias for callers outside this module.
autocorrelation = compute


def expected_offpeak(p: int, label: ClassLabel | str | int) -> Fraction:
    """Predicted off-peak level: the squared limiting mean gap."""
    return expected_mean_gap(p, label) ** 2


def default_gap_model(tail_bound: Fraction = Fraction(1, 10**9)) -> dict[int, Fraction]:
    """Modeled class-A gap distribution for modulus 3, truncated.

    Gap 2 has probability 1/2, gap 1 probability 1/4, and every gap
    k >= 3 probability 2**-k.  The tail is cut once the remaining
    second-moment mass sum_{j>K} j^2 * 2**-j = (K^2+4K+6) / 2**K drops
    below ``tail_bound``.
    """
    model = {2: Fraction(1, 2), 1: Fraction(1, 4)}
    k = 3
    while Fraction(k * k + 4 * k + 6, 2**k) >= tail_bound:
        model[k] = Fraction(1, 2**k)
        k += 1
    return model


def c0_series_estimate(
    model: Mapping[int, Fraction | float | int],
    sum_tol: float = 1e-6,
) -> float:
    """Second moment sum p(k) * k**2 of a gap-probability model."""
    if not model:
        raise ValueError("empty gap model")
    exact = {}
    for gap, prob in model.items():
        if gap < 1 or gap != int(gap):
            raise ValueError(f"gap values must be positive integers, got {gap!r}")
        q = Fraction(prob)
        if q < 0:
            raise ValueError(f"negative probability for gap {gap}")
        exact[int(gap)] = q
    total = sum(exact.values())
    if abs(total - 1) > sum_tol:
        raise ValueError(f"gap probabilities sum to {float(total)}, not 1")
    return float(sum(q * g * g for g, q in exact.items()))


@dataclass(frozen=True)
class AutocorrSummary:
    """What a C(k) plot shows, as numbers."""

    peak: float
    offpeak_mean: float
    offpeak_min: float
    offpeak_max: float
    expected: float
    rel_deviation: float


def summarize(r: AutocorrResult, expected: Fraction | float) -> AutocorrSummary:
    """Peak/off-peak digest of a result against a predicted level."""
    if r.k_max < 1:
        raise ValueError("summary needs at least one off-peak lag")
    off = [r.values[k] for k in range(1, r.k_max + 1)]
    assert r.offpeak_mean is not None
    expected_f = float(expected)
    return AutocorrSummary(
        peak=r.peak,
        offpeak_mean=r.offpeak_mean,
        offpeak_min=min(off),
        offpeak_max=max(off),
        expected=expected_f,
        rel_deviation=(r.offpeak_mean - expected_f) / expected_f,
    )
