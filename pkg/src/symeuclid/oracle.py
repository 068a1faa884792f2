"""Slow reference implementations used to cross-check the fast paths.

Each function here deliberately takes a different route than its
counterpart: continuants come from a literal cofactor expansion of the
tridiagonal determinant, continued fractions from a right-to-left
Fraction fold, and two-squares representations from an exhaustive scan
over x.  Agreement with the main modules is then evidence rather than
tautology.  Performance is a non-goal; keep inputs small.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .two_squares import TwoSquares


def _minor(matrix: Sequence[Sequence[int]], row: int, col: int) -> list[list[int]]:
    return [[x for c, x in enumerate(r) if c != col] for r0, r in enumerate(matrix) if r0 != row]


def _det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant by first-row cofactor expansion, skipping zero entries."""
    size = len(matrix)
    if size == 0:
        return 1
    if size == 1:
        return matrix[0][0]
    total = 0
    for col, entry in enumerate(matrix[0]):
        if entry:
            total += (-1) ** col * entry * _det(_minor(matrix, 0, col))
    return total


def det_continuant(terms: Iterable[int], i: int, j: int) -> int:
    """c(i, j) evaluated as an explicit tridiagonal determinant.

    Builds the matrix with terms on the diagonal, 1 above and -1 below,
    and expands cofactors.  Exponential-ish in j - i; fine below ~15.
    """
    seq = tuple(terms)
    t = len(seq)
    if i < 1 or j < i - 2 or j > t:
        raise IndexError(f"continuant c({i}, {j}) undefined for length {t}")
    if j == i - 2:
        return 0
    if j == i - 1:
        return 1
    size = j - i + 1
    matrix = [[0] * size for _ in range(size)]
    for k in range(size):
        matrix[k][k] = seq[i - 1 + k]
        if k + 1 < size:
            matrix[k][k + 1] = 1
            matrix[k + 1][k] = -1
    return _det(matrix)


def cf_eval_fold(terms: Iterable[int]) -> Fraction:
    """Continued fraction value by folding u + 1/rest from the right.

    The empty sequence evaluates to 1, matching the convention of the
    main evaluator.
    """
    acc = Fraction(1)
    seq = tuple(terms)
    if not seq:
        return acc
    acc = Fraction(seq[-1])
    for u in reversed(seq[:-1]):
        acc = u + 1 / acc
    return acc


def brute_two_squares(n: int) -> set[TwoSquares]:
    """All primitive x**2 + y**2 = n with x >= y >= 1, by scanning x."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    reps = set()
    for x in range(math.isqrt(n), 0, -1):
        rest = n - x * x
        if rest < 1:
            continue
        y = math.isqrt(rest)
        if y * y == rest and y <= x and math.gcd(x, y) == 1:
            reps.add(TwoSquares(x, y))
    return reps
