"""Two-squares decomposition read off the Euclidean algorithm.

Given a**2 == -1 (mod n), running the algorithm on (n, a) and taking the
first two remainders below sqrt(n) yields x, y with x**2 + y**2 = n and
gcd(x, y) = 1.  Distinct square roots of -1 (up to the pairing a vs n-a,
which gives the same representation) yield distinct representations, and
every primitive representation arises this way.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .errors import NotSqrtMinusOneError
from .euclid import sqrt_minus_one_all


class TwoSquares(NamedTuple):
    """Primitive representation n = x**2 + y**2, ordered so that x >= y >= 1."""

    x: int
    y: int


def brillhart(n: int, a: int) -> TwoSquares:
    """Decompose n = x**2 + y**2 from a square root a of -1 mod n.

    Runs the remainder sequence of (n, a) down to the first value whose
    square is below n and returns it with its successor.  Integer-exact
    throughout; no floating point near the sqrt(n) threshold.  x > y
    except for n = 2, whose only representation is 1**2 + 1**2.
    """
    if n < 2 or not 1 <= a < n:
        raise NotSqrtMinusOneError(f"need n >= 2 and 1 <= a < n, got n={n}, a={a}")
    if (a * a + 1) % n != 0:
        raise NotSqrtMinusOneError(f"{a}**2 != -1 (mod {n})")
    if n == 2:
        return TwoSquares(1, 1)
    prev, cur = n, a
    while cur * cur >= n:
        prev, cur = cur, prev % cur
    x, y = cur, prev % cur
    if x * x + y * y != n:
        # The classical argument guarantees this; reaching here is a bug.
        raise AssertionError(f"decomposition failed for n={n}, a={a}: got ({x}, {y})")
    return TwoSquares(x, y)


def all_primitive_representations(n: int) -> set[TwoSquares]:
    """Every primitive x**2 + y**2 = n with x >= y >= 1, via the roots of -1.

    Scans for all square roots of -1 mod n (so the sweep bound applies)
    and decomposes each; the roots a and n - a collapse to one entry.
    Empty when n admits no primitive representation.
    """
    reps = {brillhart(n, a) for a in sqrt_minus_one_all(n)}
    for x, y in reps:
        if math.gcd(x, y) != 1:
            raise AssertionError(f"non-primitive pair ({x}, {y}) for n={n}")
    return reps
