"""Baudhayana gap sequences: index distances between repeats of one class.

A gap is the difference of successive positions carrying the same label,
so adjacent occurrences give gap 1.  A label seen at most once yields an
empty gap sequence; the statistics helpers then refuse it explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .residues import ClassLabel, ClassSequence, _as_label, require_odd_prime

__all__ = [
    "GapSequence",
    "gap_sequence",
    "gaps_from_letters",
    "mean_gap",
    "expected_mean_gap",
    "gap_histogram",
]


@dataclass(frozen=True)
class GapSequence:
    """Gaps of one class label, plus where the label first occurred."""

    modulus: int
    label: ClassLabel
    gaps: np.ndarray = field(repr=False)
    first_position: int | None

    def __post_init__(self) -> None:
        arr = np.ascontiguousarray(self.gaps, dtype=np.int64)
        if len(arr) and arr.min() < 1:
            raise ValueError("gaps must be >= 1")
        arr.flags.writeable = False
        object.__setattr__(self, "gaps", arr)

    def __len__(self) -> int:
        return len(self.gaps)

    def positions(self) -> np.ndarray:
        """Occurrence indices reconstructed from first_position + gaps."""
        if self.first_position is None:
            return np.empty(0, dtype=np.int64)
        return self.first_position + np.concatenate(
            ([0], np.cumsum(self.gaps))
        )


def _from_positions(
    positions: np.ndarray, modulus: int, label: ClassLabel
) -> GapSequence:
    first = int(positions[0]) if len(positions) else None
    return GapSequence(modulus, label, np.diff(positions), first)


def gap_sequence(cs: ClassSequence, label: ClassLabel | str | int) -> GapSequence:
    """Gaps between successive occurrences of ``label`` in ``cs``."""
    lab = _as_label(label, cs.modulus)
    positions = np.flatnonzero(cs.residues == lab.residue)
    return _from_positions(positions, cs.modulus, lab)


def gaps_from_letters(letters: str, label: str, modulus: int) -> GapSequence:
    """Gaps of one letter inside a plain symbol string.

    Only ``label`` is validated against the modulus; other symbols are
    treated as opaque, so imperfect reference strings still work as
    input.
    """
    require_odd_prime(modulus)
    lab = ClassLabel.from_letter(label, modulus)
    positions = np.fromiter(
        (i for i, ch in enumerate(letters) if ch == lab.letter), dtype=np.int64
    )
    return _from_positions(positions, modulus, lab)


def mean_gap(gs: GapSequence) -> Fraction:
    """Arithmetic mean of the gaps, exact."""
    if len(gs) == 0:
        raise ValueError("mean of an empty gap sequence")
    return Fraction(int(gs.gaps.sum()), len(gs))


def expected_mean_gap(p: int, label: ClassLabel | str | int) -> Fraction:
    """Limiting mean gap: (p+1)/2 for class A, p+1 for any other class."""
    require_odd_prime(p)
    lab = _as_label(label, p)
    return Fraction(p + 1, 2) if lab.residue == 0 else Fraction(p + 1)


def gap_histogram(gs: GapSequence) -> dict[int, int]:
    """Occurrence count per gap value."""
    values, counts = np.unique(gs.gaps, return_counts=True)
    return {int(v): int(c) for v, c in zip(values, counts)}
