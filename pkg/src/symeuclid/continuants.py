"""Continuants of positive integer sequences and exact continued fractions.

For a sequence u = (u_1, ..., u_t) the continuant c(i, j) is the
determinant of the tridiagonal matrix

    | u_i  1                      |
    | -1   u_{i+1}  1             |
    |      -1       ...   1       |
    |               -1    u_j     |

extended by the boundary values c(j+1, j) = 1 and c(j+2, j) = 0, which
make the recurrences below hold without special cases.  Expanding the
determinant along the last column or the first row gives

    c(i, j) = u_j * c(i, j-1) + c(i, j-2)        (grow on the right)
    c(i, j) = u_i * c(i+1, j) + c(i+2, j)        (grow on the left)

and the simple continued fraction [u_1, ..., u_t] evaluates to
c(1, t) / c(2, t), a fraction already in lowest terms.

Indices are 1-based to match the classical notation.  Sequences are
stored as ordinary tuples, so u_i lives at terms[i - 1]; that offset is
applied inside this module and nowhere else.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable


def _checked(terms: Iterable[int]) -> tuple[int, ...]:
    seq = tuple(terms)
    for u in seq:
        if not isinstance(u, int) or u < 1:
            raise ValueError(f"partial quotients must be integers >= 1, got {u!r}")
    return seq


def continuant(terms: Iterable[int], i: int, j: int) -> int:
    """c(i, j) over terms; j = i - 1 yields 1 and j = i - 2 yields 0.

    Valid for 1 <= i and i - 2 <= j <= t.  Runs the right-growing
    recurrence, so the cost is O(j - i).
    """
    seq = _checked(terms)
    t = len(seq)
    if i < 1 or j < i - 2 or j > t:
        raise IndexError(f"continuant c({i}, {j}) undefined for length {t}")
    if j == i - 2:
        return 0
    value, prev = 1, 0  # c(i, i-1), c(i, i-2)
    for k in range(i, j + 1):
        value, prev = seq[k - 1] * value + prev, value
    return value


@dataclass(frozen=True, slots=True)
class ContinuantTable:
    """Prefix row and last two suffix columns of one sequence.

    Stores c(1, j) for j = -1..t, c(i, t) for i = 1..t+2 and c(i, t-1)
    for i = 1..t+1, each retrievable in O(1).  These are exactly the
    values the remainder and quadratic-form identities consume, so the
    full triangular table is never materialised.  The pair (t+2, t-1)
    falls outside the continuant domain and is deliberately absent.
    """

    terms: tuple[int, ...]
    _prefix: tuple[int, ...]
    _suffix_last: tuple[int, ...]
    _suffix_prev: tuple[int, ...]

    def prefix(self, j: int) -> int:
        """c(1, j) for -1 <= j <= t."""
        if not -1 <= j <= len(self.terms):
            raise IndexError(f"prefix continuant c(1, {j}) undefined for length {len(self.terms)}")
        return self._prefix[j + 1]

    def suffix(self, i: int) -> int:
        """c(i, t) for 1 <= i <= t + 2."""
        if not 1 <= i <= len(self.terms) + 2:
            raise IndexError(f"suffix continuant c({i}, t) undefined for length {len(self.terms)}")
        return self._suffix_last[i - 1]

    def suffix_prev(self, i: int) -> int:
        """c(i, t-1) for 1 <= i <= t + 1."""
        if not 1 <= i <= len(self.terms) + 1:
            raise IndexError(f"suffix continuant c({i}, t-1) undefined for length {len(self.terms)}")
        return self._suffix_prev[i - 1]


def continuant_table(terms: Iterable[int]) -> ContinuantTable:
    """Build the prefix row and suffix columns in O(t)."""
    seq = _checked(terms)
    t = len(seq)

    prefix = [0, 1]  # c(1, -1), c(1, 0)
    for k in range(1, t + 1):
        prefix.append(seq[k - 1] * prefix[-1] + prefix[-2])

    # Left-growing recurrence; slot k holds c(k+1, end).
    last = [0] * (t + 2)
    last[t + 1], last[t] = 0, 1  # c(t+2, t), c(t+1, t)
    for k in range(t - 1, -1, -1):
        last[k] = seq[k] * last[k + 1] + last[k + 2]

    prev = [0] * (t + 1)
    prev[t] = 0  # c(t+1, t-1)
    if t >= 1:
        prev[t - 1] = 1  # c(t, t-1)
    for k in range(t - 2, -1, -1):
        prev[k] = seq[k] * prev[k + 1] + prev[k + 2]

    return ContinuantTable(seq, tuple(prefix), tuple(last), tuple(prev))


def euler_identity_holds(terms: Iterable[int], i: int, l: int, m: int, s: int) -> bool:
    """Check c(i,s)c(l,m) - c(i,m)c(l,s) == (-1)**(m-l+1) c(i,l-2)c(m+2,s).

    The index window 1 <= i <= l <= m + 2, m <= s <= t keeps every
    continuant on the right-hand side inside its domain.
    """
    seq = _checked(terms)
    if not (1 <= i <= l <= m + 2 and m <= s <= len(seq)):
        raise IndexError(f"indices (i={i}, l={l}, m={m}, s={s}) outside the identity's window")
    lhs = continuant(seq, i, s) * continuant(seq, l, m) - continuant(seq, i, m) * continuant(seq, l, s)
    rhs = (-1) ** (m - l + 1) * continuant(seq, i, l - 2) * continuant(seq, m + 2, s)
    return lhs == rhs


def cf_eval(terms: Iterable[int]) -> Fraction:
    """Exact value of the simple continued fraction [u_1, ..., u_t].

    Returns c(1, t) / c(2, t), coprime by construction.  The empty
    sequence is defined to evaluate to 1; the quotient form would read
    1/0 there, so this case is a convention rather than an instance of
    the formula.
    """
    seq = _checked(terms)
    t = len(seq)
    if t == 0:
        return Fraction(1)
    return Fraction(continuant(seq, 1, t), continuant(seq, 2, t))


def palindrome(terms: Iterable[int]) -> tuple[int, ...]:
    """Concatenate a sequence with its own reversal: (u_1..u_s, u_s..u_1)."""
    seq = _checked(terms)
    return seq + seq[::-1]


def reverse(terms: Iterable[int]) -> tuple[int, ...]:
    """Reversed sequence; cf_eval numerators are invariant under this."""
    return _checked(terms)[::-1]
