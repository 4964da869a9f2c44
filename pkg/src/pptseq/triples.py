"""Primitive Pythagorean triples (PPTs), exactly and in hypotenuse order.

Every PPT (a, b, c) with odd leg a arises from a unique pair of odd coprime
integers s > t >= 1:

    a = s*t,  b = (s*s - t*t) // 2,  c = (s*s + t*t) // 2

``from_st`` evaluates the formulas with full precondition checks.
``TripleStream`` / ``generate_ordered`` walk the whole family ordered by
increasing c (ties broken by increasing a), and ``brute_force_ordered`` is
the slow exhaustive oracle used to cross-check them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from heapq import heappop, heappush
from typing import Iterator

import numpy as np

__all__ = [
    "Triple",
    "TripleError",
    "ParityError",
    "OrderError",
    "NotCoprimeError",
    "OverflowGuardError",
    "MAX_GENERATOR",
    "gcd",
    "from_st",
    "TripleStream",
    "generate_ordered",
    "generate_a_values",
    "brute_force_ordered",
]

# All arithmetic must stay inside an unsigned 64-bit word so results are
# portable to fixed-width consumers; s*s is the largest intermediate.
MAX_GENERATOR = math.isqrt(2**64 - 1)


class TripleError(ValueError):
    """A (s, t) generator pair violates a PPT precondition."""


class ParityError(TripleError):
    """s and t must both be odd."""


class OrderError(TripleError):
    """s > t >= 1 is required."""


class NotCoprimeError(TripleError):
    """gcd(s, t) must be 1."""


class OverflowGuardError(TripleError):
    """s*s or t*t would exceed the 64-bit guard."""


@dataclass(frozen=True, slots=True)
class Triple:
    """One primitive Pythagorean triple together with its generators.

    ``index`` is the 0-based position in the (c, a)-ordered stream, or None
    for triples built ad hoc via ``from_st``.
    """

    s: int
    t: int
    a: int
    b: int
    c: int
    index: int | None = None

    def key(self) -> tuple[int, int]:
        """Sort key of the canonical stream order."""
        return (self.c, self.a)


def gcd(x: int, y: int) -> int:
    """Greatest common divisor of two positive integers."""
    if x < 1 or y < 1:
        raise ValueError(f"gcd arguments must be >= 1, got ({x}, {y})")
    return math.gcd(x, y)


def from_st(s: int, t: int, index: int | None = None) -> Triple:
    """Build the PPT generated by the odd coprime pair s > t >= 1."""
    if s % 2 == 0 or t % 2 == 0:
        raise ParityError(f"s and t must both be odd, got ({s}, {t})")
    if not 1 <= t < s:
        raise OrderError(f"need s > t >= 1, got ({s}, {t})")
    if s > MAX_GENERATOR:
        raise OverflowGuardError(f"s*s overflows 64 bits for s={s}")
    if math.gcd(s, t) != 1:
        raise NotCoprimeError(f"({t}, {s}) is not a coprime pair")
    ss, tt = s * s, t * t
    return Triple(s, t, s * t, (ss - tt) // 2, (ss + tt) // 2, index)


def _iter_catst() -> Iterator[tuple[int, int, int, int]]:
    """Yield (c, a, s, t) in increasing (c, a) order, forever.

    One heap entry per active row of the (s, t) array (a row is a fixed t
    with cursor s).  A row's first candidate is s = t + 2, and the first
    candidates' c values grow strictly with t, so row t + 2 can be activated
    lazily: exactly when row t is popped at its own first candidate.  Rows
    advance past cells with gcd(s, t) > 1, which are not PPTs.
    """
    heap: list[tuple[int, int, int, int]] = [(5, 3, 3, 1)]
    while True:
        c, a, s, t = heappop(heap)
        if s == t + 2:
            # Row t is at its head; bring in the next row.
            nt = t + 2
            ns = nt + 2
            heappush(heap, (((ns * ns + nt * nt) // 2), ns * nt, ns, nt))
        ns = s + 2
        while math.gcd(ns, t) != 1:
            ns += 2
        if ns > MAX_GENERATOR:
            raise OverflowGuardError(f"s*s overflows 64 bits for s={ns}")
        heappush(heap, (((ns * ns + t * t) // 2), ns * t, ns, t))
        yield c, a, s, t


class TripleStream:
    """Iterator over all PPTs sorted by (c, a), smallest first.

    Stateful and single-consumer; the Triple values it yields are frozen
    and safe to share.
    """

    def __init__(self) -> None:
        self._inner = _iter_catst()
        self._emitted = 0

    def __iter__(self) -> "TripleStream":
        return self

    def __next__(self) -> Triple:
        c, a, s, t = next(self._inner)
        triple = Triple(s, t, a, (s * s - t * t) // 2, c, self._emitted)
        self._emitted += 1
        return triple


def _check_count(count: int) -> None:
    if not isinstance(count, int) or isinstance(count, bool) or count < 1:
        raise ValueError(f"count must be a positive integer, got {count!r}")


def generate_ordered(count: int) -> list[Triple]:
    """First ``count`` PPTs by increasing c, ties by increasing a."""
    _check_count(count)
    stream = TripleStream()
    return [next(stream) for _ in range(count)]


def generate_a_values(count: int) -> np.ndarray:
    """Odd legs of the first ``count`` stream triples, as an int64 array.

    Fast path for residue counting; skips Triple construction.
    """
    _check_count(count)
    inner = _iter_catst()
    return np.fromiter((a for _, a, _, _ in inner), dtype=np.int64, count=count)


def brute_force_ordered(c_max: int) -> list[Triple]:
    """All PPTs with c <= c_max, by exhaustive scan of the (s, t) grid.

    Independent oracle for the stream: visits every odd pair with
    s*s + t*t <= 2*c_max, keeps the coprime ones, and sorts the results by
    the same (c, a) key.
    """
    if c_max < 5:
        raise ValueError(f"c_max must be >= 5, got {c_max}")
    found = []
    s = 3
    while s * s <= 2 * c_max:
        for t in range(1, s, 2):
            if (s * s + t * t) // 2 <= c_max and math.gcd(s, t) == 1:
                found.append(from_st(s, t))
        s += 2
    found.sort(key=Triple.key)
    return [
        Triple(tr.s, tr.t, tr.a, tr.b, tr.c, i) for i, tr in enumerate(found)
    ]
