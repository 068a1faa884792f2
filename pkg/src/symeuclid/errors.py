"""Exception types shared across the package.

The split matters for the command line front end: domain errors are the
caller's fault (bad input), sweep-bound errors mean a scan was refused
because it was too large, and internal-check errors mean a cross-check
between two independent computations disagreed, which is a bug here, not
in the input.
"""


class DomainError(ValueError):
    """Input is outside the mathematical domain of the operation."""


class NotCoprimeError(DomainError):
    """gcd(n, a) != 1 where coprimality is required."""


class NotSymmetricError(DomainError):
    """The quotient sequence is not an even-length palindrome in either form."""


class NotSqrtMinusOneError(DomainError):
    """a**2 is not congruent to -1 mod n."""


class SweepBoundError(ValueError):
    """An exhaustive scan would exceed the configured bound."""


class InternalCheckError(RuntimeError):
    """Two routes that must agree did not; indicates a defect, not bad input."""
