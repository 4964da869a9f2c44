"""Residue classes of the odd leg, and divisibility statistics.

Classes are labeled by residue of a mod p for an odd prime p: residue 0
is class A, residue 1 class B, and so on (letters only while p <= 26;
larger moduli fall back to plain residue integers).

The limiting fraction of stream triples with p | a is exactly 2/(p+1).
``grid_census`` re-derives that value by brute iteration over one p x p
window of the odd (s, t) array instead of trusting the closed form, and
``divisibility_table`` measures actual prefix counts of the stream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .triples import Triple, generate_a_values

__all__ = [
    "ClassLabel",
    "ClassSequence",
    "DivisibilityTable",
    "is_odd_prime",
    "require_odd_prime",
    "classify",
    "class_sequence",
    "class_frequencies",
    "divisibility_table",
    "theorem_probability",
    "grid_census",
]


def is_odd_prime(p: int) -> bool:
    if not isinstance(p, int) or isinstance(p, bool) or p < 3 or p % 2 == 0:
        return False
    return all(p % d for d in range(3, math.isqrt(p) + 1, 2))


def require_odd_prime(p: int) -> None:
    if not is_odd_prime(p):
        raise ValueError(f"modulus must be an odd prime >= 3, got {p!r}")


@dataclass(frozen=True, slots=True)
class ClassLabel:
    """Residue class identity: residue r <-> letter chr('A' + r)."""

    residue: int
    letter: str | None

    @classmethod
    def from_residue(cls, residue: int, modulus: int) -> "ClassLabel":
        require_odd_prime(modulus)
        if not 0 <= residue < modulus:
            raise ValueError(f"residue {residue} out of range for modulus {modulus}")
        letter = chr(ord("A") + residue) if modulus <= 26 else None
        return cls(residue, letter)

    @classmethod
    def from_letter(cls, letter: str, modulus: int) -> "ClassLabel":
        require_odd_prime(modulus)
        if len(letter) != 1 or not "A" <= letter <= "Z":
            raise ValueError(f"class letter must be A..Z, got {letter!r}")
        residue = ord(letter) - ord("A")
        if residue >= modulus:
            raise ValueError(f"letter {letter!r} has no residue mod {modulus}")
        return cls(residue, letter)

    @property
    def text(self) -> str:
        return self.letter if self.letter is not None else str(self.residue)


def _as_label(label: "ClassLabel | str | int", modulus: int) -> ClassLabel:
    if isinstance(label, ClassLabel):
        if label.residue >= modulus:
            raise ValueError(f"label residue {label.residue} >= modulus {modulus}")
        return label
    if isinstance(label, str):
        return ClassLabel.from_letter(label, modulus)
    return ClassLabel.from_residue(label, modulus)


@dataclass(frozen=True)
class ClassSequence:
    """Residue labels of a stream prefix, index-aligned with the triples."""

    modulus: int
    residues: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        require_odd_prime(self.modulus)
        arr = np.ascontiguousarray(self.residues, dtype=np.int64)
        if arr.ndim != 1:
            raise ValueError("residues must be one-dimensional")
        if len(arr) and (arr.min() < 0 or arr.max() >= self.modulus):
            raise ValueError("residues out of range for modulus")
        arr.flags.writeable = False
        object.__setattr__(self, "residues", arr)

    @classmethod
    def from_letters(cls, letters: str, modulus: int) -> "ClassSequence":
        res = [ClassLabel.from_letter(ch, modulus).residue for ch in letters]
        return cls(modulus, np.asarray(res, dtype=np.int64))

    def __len__(self) -> int:
        return len(self.residues)

    def label(self, i: int) -> ClassLabel:
        return ClassLabel.from_residue(int(self.residues[i]), self.modulus)

    @property
    def labels(self) -> tuple[ClassLabel, ...]:
        return tuple(self.label(i) for i in range(len(self)))

    @property
    def letters(self) -> str:
        """The sequence as a compact letter string (modulus <= 26 only)."""
        if self.modulus > 26:
            raise ValueError("letter string undefined for modulus > 26")
        base = ord("A")
        return "".join(chr(base + r) for r in self.residues.tolist())


def classify(a: int, p: int) -> ClassLabel:
    """Class of one odd leg: residue a mod p."""
    require_odd_prime(p)
    if a < 1:
        raise ValueError(f"a must be >= 1, got {a}")
    return ClassLabel.from_residue(a % p, p)


def class_sequence(triples: Sequence[Triple], p: int) -> ClassSequence:
    """Residue classes of an already (c, a)-ordered triple sequence."""
    require_odd_prime(p)
    a = np.fromiter((tr.a for tr in triples), dtype=np.int64, count=len(triples))
    key_c = np.fromiter((tr.c for tr in triples), dtype=np.int64, count=len(triples))
    if len(triples) > 1:
        dc = np.diff(key_c)
        if dc.min() < 0 or np.any((dc == 0) & (np.diff(a) <= 0)):
            raise ValueError("triples are not in (c, a) order")
    return ClassSequence(p, a % p)


def class_frequencies(cs: ClassSequence) -> dict[ClassLabel, int]:
    """Occurrence count of every class (zero counts included)."""
    counts = np.bincount(cs.residues, minlength=cs.modulus)
    return {
        ClassLabel.from_residue(r, cs.modulus): int(counts[r])
        for r in range(cs.modulus)
    }


@dataclass(frozen=True)
class DivisibilityTable:
    """Counts of p | a over prefixes of the ordered stream.

    ``counts[i][j]`` pairs ``lengths[i]`` with ``primes[j]``.
    """

    primes: tuple[int, ...]
    lengths: tuple[int, ...]
    counts: tuple[tuple[int, ...], ...]

    def count(self, length: int, prime: int) -> int:
        return self.counts[self.lengths.index(length)][self.primes.index(prime)]


def divisibility_table(
    n_max: int,
    lengths: Iterable[int],
    primes: Iterable[int],
) -> DivisibilityTable:
    """Census of p | a over stream prefixes, in one generation pass."""
    lengths = tuple(int(x) for x in lengths)
    primes = tuple(int(p) for p in primes)
    for p in primes:
        require_odd_prime(p)
    if not lengths:
        raise ValueError("at least one prefix length required")
    for length in lengths:
        if length < 1:
            raise ValueError(f"prefix length must be >= 1, got {length}")
        if length > n_max:
            raise ValueError(f"prefix length {length} exceeds n_max={n_max}")
    a = generate_a_values(n_max)
    idx = np.asarray(lengths, dtype=np.int64) - 1
    rows = np.empty((len(lengths), len(primes)), dtype=np.int64)
    for j, p in enumerate(primes):
        cum = np.cumsum(a % p == 0)
        rows[:, j] = cum[idx]
    return DivisibilityTable(
        primes, lengths, tuple(tuple(int(x) for x in row) for row in rows)
    )


def theorem_probability(p: int) -> Fraction:
    """Limiting probability that p divides the odd leg: exactly 2/(p+1)."""
    require_odd_prime(p)
    return Fraction(2, p + 1)


def grid_census(p: int) -> tuple[int, int]:
    """Count divisible cells in one p x p window of the odd (s, t) array.

    The window takes p consecutive odd t values and p consecutive odd s
    values chosen beyond them, so every cell satisfies s > t and each
    residue pair mod p appears exactly once.  The single cell where p
    divides both s and t is not a PPT and does not qualify.  Returns
    (cells with p | s*t, qualifying cells) = (2(p-1), p*p - 1), counted
    one cell at a time rather than evaluated from the closed form.
    """
    require_odd_prime(p)
    divisible = 0
    qualifying = 0
    for t in range(1, 2 * p, 2):
        for s in range(2 * p + 1, 4 * p, 2):
            if s % p == 0 and t % p == 0:
                continue
            qualifying += 1
            if (s * t) % p == 0:
                divisible += 1
    return divisible, qualifying
