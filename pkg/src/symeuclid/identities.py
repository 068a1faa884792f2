"""Identities satisfied by the remainders of a symmetric Euclidean trace.

Throughout, (n, a) has a symmetric trace with half quotients
(q_1, ..., q_s), remainders r_1 = n, r_2 = a, ..., r_{2s+2} = 0, and
continuants are taken over the half sequence.

Remainder formulas.  Each remainder is a bilinear expression in the
prefix and suffix continuants of the half sequence: for 1 <= i <= s+1,

    r_i          = c(1,s) c(i,s) + c(1,s-1) c(i,s-1)
    r_{2s-i+3}   = c(1,i-2)
                 = (-1)**(i+s) * (c(1,s) c(i,s-1) - c(1,s-1) c(i,s))

so the tail of the remainder list is the continuant prefix row read
backwards, ending ..., c(1,1), c(1,0) = 1, c(1,-1) = 0.

Quadratic form identities.  For 0 <= j <= i <= s there is one identity
per family:

    plus:   r_{i-j+1} r_{i+j+1} + r_{2s+2-i-j} r_{2s+2-i+j} = mult * n
    minus:  r_{i-j+1} r_{i+j+2} - r_{2s+1-i-j} r_{2s+2-i+j} = mult * n

The multiplier has a second life: build the shorter palindrome
(q_{i-j+1}, ..., q_s, q_s, ..., q_{i-j+1}), evaluate it as a continued
fraction, and run the algorithm on the resulting pair; the multiplier is
that run's (2j+1)-th remainder for the plus family and (2j+2)-th for the
minus family.  Construction here computes the multiplier both ways and
refuses to return on disagreement.

Nesting.  Stripping q_1 from both ends of the palindrome is arithmetic
on (n, a): the inner palindrome evaluates to m / (a mod m) with
m = (a**2 + 1) / n.  Iterating walks down to the innermost palindrome
(q_s, q_s) and finally to m = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .continuants import cf_eval, continuant_table, palindrome
from .errors import InternalCheckError, NotSqrtMinusOneError, NotSymmetricError
from .euclid import EuclidTrace, symmetric_trace

PLUS = "plus"
MINUS = "minus"
FAMILIES = (PLUS, MINUS)


@dataclass(frozen=True, slots=True)
class RemainderFormulaRow:
    """One index i of the remainder formulas, with both sides evaluated."""

    i: int
    front: int  # r_i
    front_formula: int  # c(1,s) c(i,s) + c(1,s-1) c(i,s-1)
    back: int  # r_{2s-i+3}
    back_prefix: int  # c(1, i-2)
    back_formula: int  # (-1)**(i+s) (c(1,s) c(i,s-1) - c(1,s-1) c(i,s))

    @property
    def holds(self) -> bool:
        return self.front == self.front_formula and self.back == self.back_prefix == self.back_formula


def remainder_formulas(trace: EuclidTrace) -> list[RemainderFormulaRow]:
    """Evaluate both remainder formulas for i = 1..s+1 on a symmetric trace."""
    if not trace.symmetric:
        raise NotSymmetricError(f"trace of ({trace.n}, {trace.a}) is not symmetric")
    s = trace.half_length
    table = continuant_table(trace.half())
    c1s, c1s1 = table.prefix(s), table.prefix(s - 1)
    rows = []
    for i in range(1, s + 2):
        cis, cis1 = table.suffix(i), table.suffix_prev(i)
        rows.append(
            RemainderFormulaRow(
                i=i,
                front=trace.remainder(i),
                front_formula=c1s * cis + c1s1 * cis1,
                back=trace.remainder(2 * s - i + 3),
                back_prefix=table.prefix(i - 2),
                back_formula=(-1) ** (i + s) * (c1s * cis1 - c1s1 * cis),
            )
        )
    return rows


@dataclass(frozen=True, slots=True)
class FormIdentity:
    """One instantiated quadratic-form identity r r' +/- r'' r''' = multiplier * n.

    factor_indices holds the four remainder subscripts in formula order;
    factor_values the corresponding remainders.  sub_palindrome is the
    full nested palindrome whose Euclidean run reproduces the multiplier.
    Degenerate identities either contain a zero factor or have multiplier
    0 or n; the remaining ones are the substantive factorizations.
    """

    n: int
    family: str
    i: int
    j: int
    factor_indices: tuple[int, int, int, int]
    factor_values: tuple[int, int, int, int]
    multiplier: int
    sub_palindrome: tuple[int, ...]
    degenerate: bool

    @property
    def lhs(self) -> int:
        p, q, u, v = self.factor_values
        return p * q + u * v if self.family == PLUS else p * q - u * v


def _nested_remainders(sub_half: tuple[int, ...]) -> tuple[int, ...]:
    """Remainders of the Euclidean run on the palindrome built from sub_half.

    The empty half stands for the empty palindrome with value 1, whose
    degenerate run has remainder list (1, 0).
    """
    if not sub_half:
        return (1, 0)
    value = cf_eval(palindrome(sub_half))
    return symmetric_trace(value.numerator, value.denominator).remainders


def form_identity(trace: EuclidTrace, i: int, j: int, family: str) -> FormIdentity:
    """Instantiate one identity on a symmetric trace, for 0 <= j <= i <= s.

    The multiplier is computed as lhs / n and independently as a
    remainder of the nested palindrome's Euclidean run; disagreement
    raises InternalCheckError.
    """
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}, got {family!r}")
    if not trace.symmetric:
        raise NotSymmetricError(f"trace of ({trace.n}, {trace.a}) is not symmetric")
    s = trace.half_length
    if not 0 <= j <= i <= s:
        raise IndexError(f"need 0 <= j <= i <= s={s}, got i={i}, j={j}")

    if family == PLUS:
        indices = (i - j + 1, i + j + 1, 2 * s + 2 - i - j, 2 * s + 2 - i + j)
        position = 2 * j + 1
    else:
        indices = (i - j + 1, i + j + 2, 2 * s + 1 - i - j, 2 * s + 2 - i + j)
        position = 2 * j + 2
    values = tuple(trace.remainder(k) for k in indices)
    p, q, u, v = values
    lhs = p * q + u * v if family == PLUS else p * q - u * v

    n = trace.n
    multiplier, residue = divmod(lhs, n)
    if residue:
        raise InternalCheckError(
            f"{family} identity (i={i}, j={j}) on ({n}, {trace.a}): lhs {lhs} not divisible by n"
        )
    sub_half = trace.half()[i - j :]
    nested = _nested_remainders(sub_half)
    if nested[position - 1] != multiplier:
        raise InternalCheckError(
            f"{family} identity (i={i}, j={j}) on ({n}, {trace.a}): quotient route gives "
            f"{multiplier}, nested-remainder route gives {nested[position - 1]}"
        )

    return FormIdentity(
        n=n,
        family=family,
        i=i,
        j=j,
        factor_indices=indices,
        factor_values=values,
        multiplier=multiplier,
        sub_palindrome=palindrome(sub_half),
        degenerate=(0 in values) or multiplier in (0, n),
    )


def enumerate_identities(trace: EuclidTrace, nontrivial_only: bool = False) -> list[FormIdentity]:
    """All (s+1)(s+2) identities of a symmetric trace, both families.

    Ordered by the gap d = i - j ascending, then by i, plus before minus
    at each position, so the constant-first-factor blocks r_1 * ...,
    r_2 * ..., ... come out contiguously.  The d = 0 block is entirely
    degenerate (each row has a zero factor), so with nontrivial_only the
    listing opens at d = 1.
    """
    s = trace.half_length
    if s is None:
        raise NotSymmetricError(f"trace of ({trace.n}, {trace.a}) is not symmetric")
    out = []
    for d in range(s + 1):
        for i in range(d, s + 1):
            for family in FAMILIES:
                identity = form_identity(trace, i, i - d, family)
                if nontrivial_only and identity.degenerate:
                    continue
                out.append(identity)
    return out


@dataclass(frozen=True, slots=True)
class NestChain:
    """Fractions produced by repeatedly stripping the outermost quotient.

    entries[k] is the value of the palindrome (q_{k+1}..q_s, q_s..q_{k+1});
    entries[0] is n/a itself.  multipliers[k] is the numerator produced by
    the step out of entries[k]; the terminal step to the empty palindrome
    always produces 1 and is not recorded.
    """

    entries: tuple[Fraction, ...]
    multipliers: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.entries[0].numerator

    @property
    def a(self) -> int:
        return self.entries[0].denominator


def nest_step(n: int, a: int) -> tuple[int, int]:
    """One stripping step: (m, a mod m) with m = (a**2 + 1) / n.

    Requires a**2 == -1 (mod n).  The result is again such a pair unless
    m = 1, which signals the end of the chain.
    """
    if n < 2 or not 1 <= a < n:
        raise NotSqrtMinusOneError(f"need n >= 2 and 1 <= a < n, got n={n}, a={a}")
    quotient, residue = divmod(a * a + 1, n)
    if residue:
        raise NotSqrtMinusOneError(f"{a}**2 != -1 (mod {n})")
    return quotient, a % quotient


def nest_chain(n: int, a: int) -> NestChain:
    """Iterate nest_step from (n, a) down to m = 1.

    The chain always terminates: m = (a**2 + 1) / n < n, so numerators
    strictly decrease.  Each recorded multiplier is the next numerator.
    """
    entries = [Fraction(n, a)]
    multipliers = []
    cur_n, cur_a = n, a
    while True:
        m, nxt = nest_step(cur_n, cur_a)
        if m == 1:
            break
        multipliers.append(m)
        entries.append(Fraction(m, nxt))
        cur_n, cur_a = m, nxt
    return NestChain(tuple(entries), tuple(multipliers))
