"""Euclidean algorithm traces and palindromic quotient sequences.

For coprime n > a >= 1 the algorithm produces remainders
r_1 = n, r_2 = a, ..., r_{t+1} = 1, r_{t+2} = 0 with quotients
r_k = q_k r_{k+1} + r_{k+2}.  The final division r = q * 1 + 0 can be
split into r = (q - 1) * 1 + 1 followed by 1 = 1 * 1 + 0, which
lengthens the quotient list by one without changing the value of the
continued fraction [q_1, ..., q_t] = n / a.

A classical criterion says the quotient list forms an even-length
palindrome, in exactly one of the two forms, precisely when
a**2 == -1 (mod n).  Such traces are called symmetric here, and s
denotes half the quotient count, so the quotients read
(q_1, ..., q_s, q_s, ..., q_1).
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, replace

from .errors import DomainError, NotCoprimeError, NotSymmetricError, SweepBoundError

DEFAULT_MAX_SWEEP = 10**7
SWEEP_ENV_VAR = "SYMEUCLID_MAX_SWEEP"


def max_sweep() -> int:
    """Bound on exhaustive scans; override via the SYMEUCLID_MAX_SWEEP env var."""
    raw = os.environ.get(SWEEP_ENV_VAR)
    if raw is None or not raw.strip():
        return DEFAULT_MAX_SWEEP
    try:
        return int(raw)
    except ValueError:
        raise SweepBoundError(f"{SWEEP_ENV_VAR} must be an integer, got {raw!r}") from None


def _check_pair(n: int, a: int) -> None:
    if not (isinstance(n, int) and isinstance(a, int)):
        raise NotCoprimeError(f"expected integers, got ({n!r}, {a!r})")
    if not n > a >= 1:
        raise NotCoprimeError(f"need n > a >= 1, got n={n}, a={a}")
    if math.gcd(n, a) != 1:
        raise NotCoprimeError(f"gcd({n}, {a}) = {math.gcd(n, a)} != 1")


@dataclass(frozen=True, slots=True)
class EuclidTrace:
    """One full run of the Euclidean algorithm on a coprime pair.

    remainders is (r_1, ..., r_{t+2}) with r_1 = n, r_2 = a and final 0;
    quotients is (q_1, ..., q_t).  half_length is s for symmetric traces
    and None otherwise; convention_applied records whether the final
    division was split.
    """

    remainders: tuple[int, ...]
    quotients: tuple[int, ...]
    convention_applied: bool = False
    symmetric: bool = False
    half_length: int | None = None

    @property
    def n(self) -> int:
        return self.remainders[0]

    @property
    def a(self) -> int:
        return self.remainders[1]

    def remainder(self, k: int) -> int:
        """r_k, 1-based."""
        if not 1 <= k <= len(self.remainders):
            raise IndexError(f"remainder r_{k} undefined, trace has {len(self.remainders)}")
        return self.remainders[k - 1]

    def half(self) -> tuple[int, ...]:
        """(q_1, ..., q_s) of a symmetric trace."""
        if not self.symmetric:
            raise NotSymmetricError(f"trace of ({self.n}, {self.a}) is not symmetric")
        return self.quotients[: self.half_length]


def euclid_trace(n: int, a: int) -> EuclidTrace:
    """Plain trace of the algorithm on coprime n > a >= 1, no splitting."""
    _check_pair(n, a)
    remainders = [n, a]
    quotients = []
    while remainders[-1]:
        q, r = divmod(remainders[-2], remainders[-1])
        quotients.append(q)
        remainders.append(r)
    return EuclidTrace(tuple(remainders), tuple(quotients))


def apply_convention(trace: EuclidTrace) -> EuclidTrace:
    """Split the final division q*1 + 0 into (q-1)*1 + 1 and 1*1 + 0.

    Requires the final quotient to be >= 2, which always holds for the
    plain trace of a coprime pair with a < n: the final quotient equals
    the last remainder above 1, and that is at least 2.
    """
    if trace.convention_applied:
        raise ValueError("convention already applied to this trace")
    q_last = trace.quotients[-1]
    if q_last < 2:
        raise ValueError(f"final quotient {q_last} cannot be split")
    return EuclidTrace(
        remainders=trace.remainders[:-1] + (1, 0),
        quotients=trace.quotients[:-1] + (q_last - 1, 1),
        convention_applied=True,
    )


def _even_palindrome(seq: tuple[int, ...]) -> bool:
    return len(seq) % 2 == 0 and seq == seq[::-1]


def symmetric_trace(n: int, a: int) -> EuclidTrace:
    """Trace of (n, a) whose quotients form an even-length palindrome.

    Tries the plain trace first, then the split form; at most one of the
    two can qualify (the plain form ends in a quotient >= 2, the split
    form ends in 1, and a palindrome forces the first quotient to match).
    Raises NotSymmetricError when neither does, which by the classical
    criterion means a**2 != -1 (mod n).
    """
    plain = euclid_trace(n, a)
    for candidate in (plain, apply_convention(plain)):
        if _even_palindrome(candidate.quotients):
            return replace(candidate, symmetric=True, half_length=len(candidate.quotients) // 2)
    raise NotSymmetricError(f"quotients of ({n}, {a}) are not palindromic in either form")


def is_sqrt_minus_one(n: int, a: int) -> bool:
    """Whether a**2 == -1 (mod n), for n > a >= 1."""
    if not n > a >= 1:
        raise ValueError(f"need n > a >= 1, got n={n}, a={a}")
    return (a * a + 1) % n == 0


def sqrt_minus_one_all(n: int) -> tuple[int, ...]:
    """All a in [1, n) with a**2 == -1 (mod n), ascending, by direct scan.

    Refuses n above the sweep bound since the scan is linear in n.
    """
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    if n > max_sweep():
        raise SweepBoundError(f"scan of n={n} exceeds the bound {max_sweep()}")
    return tuple(a for a in range(1, n) if (a * a + 1) % n == 0)
