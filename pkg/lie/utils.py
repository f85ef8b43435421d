"""Utility functions for weight vectors, index sets and formatting."""

import time
from fractions import Fraction
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

Rational = Union[int, Fraction]
Weight = Tuple[Rational, ...]
RootCoords = Tuple[Rational, ...]
IndexSet = Tuple[int, ...]


def exact(x) -> Rational:
    """Return an int when x is integral, otherwise a Fraction."""
    if isinstance(x, int):
        return x
    q = Fraction(x)
    return q.numerator if q.denominator == 1 else q


def normalize(w: Iterable) -> Weight:
    return tuple(exact(x) for x in w)


def add(x: Sequence, y: Sequence) -> Weight:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Sequence, y: Sequence) -> Weight:
    return tuple(a - b for a, b in zip(x, y))


def scale(k, x: Sequence) -> Weight:
    return tuple(k * a for a in x)


def is_integral(w: Sequence) -> bool:
    return all(isinstance(x, int) or Fraction(x).denominator == 1 for x in w)


def is_dominant(w: Sequence) -> bool:
    return all(x >= 0 for x in w)


def is_regular_dominant(w: Sequence) -> bool:
    return all(x > 0 for x in w)


def subsets(r: int) -> Iterator[IndexSet]:
    """All J in {1..r}, binary-counter order with index 1 as least significant bit."""
    for mask in range(1 << r):
        yield tuple(i + 1 for i in range(r) if mask >> i & 1)


def report_order(keys: Iterable[IndexSet]) -> List[IndexSet]:
    """Sort index sets by size, then lexicographically."""
    return sorted(keys, key=lambda J: (len(J), J))


def mask_of(J: Iterable[int]) -> int:
    mask = 0
    for i in J:
        mask |= 1 << (i - 1)
    return mask


def format_rational(x) -> Union[int, str]:
    """Integers stay integers; other rationals become "p/q" strings."""
    q = exact(x)
    if isinstance(q, int):
        return q
    return f"{q.numerator}/{q.denominator}"


def format_weight(w: Sequence) -> str:
    return "(" + ",".join(str(format_rational(x)) for x in w) + ")"


def elapsed_ms(started: float) -> int:
    """Milliseconds since a ``time.perf_counter()`` reading."""
    return int(round((time.perf_counter() - started) * 1000))
