"""Randomized and exhaustive property checks spanning all modules.

Two kinds of check live here.  Fuzz checks draw random sequences or
pairs from a seeded generator and compare independent computation
routes.  Sweep checks run exhaustively over every n up to a bound,
sharing one table of the square roots of -1 so the linear scans happen
once.  Every check fills in a PropertyReport; the first violation found
is kept as a minimal reproducer and later instances of the same
property are still counted but not re-reported.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .continuants import cf_eval, continuant, continuant_table, euler_identity_holds, palindrome, reverse
from .errors import DomainError, InternalCheckError, NotSymmetricError, SweepBoundError
from .euclid import EuclidTrace, apply_convention, euclid_trace, max_sweep, sqrt_minus_one_all, symmetric_trace
from .identities import enumerate_identities, nest_chain, remainder_formulas
from .oracle import brute_two_squares, cf_eval_fold, det_continuant
from .two_squares import all_primitive_representations, brillhart

DEFAULT_MAX_N = 10**4
DEFAULT_SEED = 0
DEFAULT_CASES = 1000


@dataclass(slots=True)
class PropertyReport:
    """Outcome of one property: instances checked, first counterexample."""

    name: str
    instances: int = 0
    counterexample: str | None = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def fail(self, detail: str) -> None:
        if self.counterexample is None:
            self.counterexample = detail


def _random_terms(rng: random.Random, min_len: int, max_len: int, max_term: int = 9) -> tuple[int, ...]:
    return tuple(rng.randint(1, max_term) for _ in range(rng.randint(min_len, max_len)))


def fuzz_continuant_vs_determinant(rng: random.Random, cases: int) -> PropertyReport:
    """Recurrence-based continuants against literal cofactor expansion."""
    report = PropertyReport("continuant_vs_determinant")
    for _ in range(cases):
        seq = _random_terms(rng, 0, 10)
        i = rng.randint(1, len(seq) + 2)
        j = rng.randint(i - 2, len(seq))
        fast = continuant(seq, i, j)
        slow = det_continuant(seq, i, j)
        report.instances += 1
        if fast != slow:
            report.fail(f"seq={seq}, i={i}, j={j}: recurrence {fast}, determinant {slow}")
    return report


def fuzz_euler_identity(rng: random.Random, cases: int) -> PropertyReport:
    """The four-continuant identity on random index windows.

    Draws cycle through one fully random window followed by one fresh
    draw of each constrained shape: the prefix-row case (i=1, m=s-1),
    the splitting case (l=m+1), and the two two-term recurrences
    (grow-left and grow-right).  Every evaluated window counts as one
    instance.
    """
    report = PropertyReport("euler_identity")
    while report.instances < cases:
        seq = _random_terms(rng, 1, 12)
        t = len(seq)

        m = rng.randint(-1, t)
        s = rng.randint(m, t)
        l = rng.randint(1, m + 2)
        i = rng.randint(1, l)
        checks = [("general", i, l, m, s)]

        s1 = rng.randint(0, t)
        checks.append(("prefix-row", 1, rng.randint(1, s1 + 1), s1 - 1, s1))

        m2 = rng.randint(0, t)
        s2 = rng.randint(m2, t)
        checks.append(("split", rng.randint(1, m2 + 1), m2 + 1, m2, s2))

        s3 = rng.randint(1, t)
        i3 = rng.randint(1, s3)
        checks.append(("grow-left", i3, i3 + 1, i3, s3))

        s4 = rng.randint(1, t)
        checks.append(("grow-right", rng.randint(1, s4), s4, s4 - 1, s4))

        for label, ci, cl, cm, cs in checks:
            report.instances += 1
            if not euler_identity_holds(seq, ci, cl, cm, cs):
                report.fail(f"seq={seq}, case {label}, i={ci}, l={cl}, m={cm}, s={cs}")
    return report


def fuzz_cf_eval(rng: random.Random, cases: int) -> PropertyReport:
    """Continuant-quotient evaluation against the right-to-left fold."""
    report = PropertyReport("cf_eval_vs_fold")
    for _ in range(cases):
        seq = _random_terms(rng, 0, 18)
        fast = cf_eval(seq)
        slow = cf_eval_fold(seq)
        report.instances += 1
        if fast != slow:
            report.fail(f"seq={seq}: continuants {fast}, fold {slow}")
        if seq and math.gcd(continuant(seq, 1, len(seq)), continuant(seq, 2, len(seq))) != 1:
            report.fail(f"seq={seq}: continuant pair not coprime")
    return report


def fuzz_numerator_reversal(rng: random.Random, cases: int) -> PropertyReport:
    """Reversing a sequence preserves the continued fraction numerator."""
    report = PropertyReport("numerator_reversal")
    for _ in range(cases):
        seq = _random_terms(rng, 1, 18)
        forward = cf_eval(seq).numerator
        backward = cf_eval(reverse(seq)).numerator
        report.instances += 1
        if forward != backward:
            report.fail(f"seq={seq}: {forward} != {backward}")
    return report


def fuzz_division_identity(rng: random.Random, cases: int) -> PropertyReport:
    """r_k = q_k r_{k+1} + r_{k+2} on random pairs, plain and split forms."""
    report = PropertyReport("division_identity")
    while report.instances < cases:
        n = rng.randint(2, 10**6)
        a = rng.randint(1, n - 1)
        if math.gcd(n, a) != 1:
            continue
        plain = euclid_trace(n, a)
        for trace in (plain, apply_convention(plain)):
            r, q = trace.remainders, trace.quotients
            for k in range(len(q)):
                if r[k] != q[k] * r[k + 1] + r[k + 2]:
                    report.fail(f"(n={n}, a={a}), split={trace.convention_applied}, step {k + 1}")
        report.instances += 1
    return report


def _tail_matches_prefix_row(trace: EuclidTrace) -> bool:
    # Last s+2 remainders against the continuant prefix row of the half,
    # read from c(1,s) down to c(1,-1).
    s = trace.half_length
    table = continuant_table(trace.half())
    expected = tuple(table.prefix(j) for j in range(s, -2, -1))
    return trace.remainders[-(s + 2):] == expected


def sweep_traces(max_n: int) -> list[PropertyReport]:
    """Exhaustive classification of every coprime pair with 2 <= n <= max_n.

    Covers the symmetry criterion (palindromic quotients iff a**2 = -1
    mod n), exclusivity of the plain and split palindrome forms, and the
    identification of the remainder tail with the continuant prefix row.
    """
    symmetry = PropertyReport("symmetry_criterion")
    exclusivity = PropertyReport("palindrome_exclusivity")
    tail = PropertyReport("remainder_tail_row")
    for n in range(2, max_n + 1):
        for a in range(1, n):
            if math.gcd(n, a) != 1:
                continue
            expected = (a * a + 1) % n == 0
            try:
                trace = symmetric_trace(n, a)
            except NotSymmetricError:
                trace = None
            symmetry.instances += 1
            if (trace is not None) != expected:
                symmetry.fail(f"(n={n}, a={a}): symmetric={trace is not None}, root-of-minus-one={expected}")
            # symmetric_trace already tried both forms; when it failed,
            # neither is a palindrome, so exclusivity holds vacuously.
            exclusivity.instances += 1
            if trace is not None:
                if trace.convention_applied:
                    other = trace.quotients[:-2] + (trace.quotients[-2] + trace.quotients[-1],)
                else:
                    other = trace.quotients[:-1] + (trace.quotients[-1] - 1, 1)
                if len(other) % 2 == 0 and other == other[::-1]:
                    exclusivity.fail(f"(n={n}, a={a}): both quotient forms are palindromes")
                tail.instances += 1
                if not _tail_matches_prefix_row(trace):
                    tail.fail(f"(n={n}, a={a}): remainder tail != continuant prefix row")
    return [symmetry, exclusivity, tail]


def roots_table(max_n: int) -> dict[int, tuple[int, ...]]:
    """n -> every square root of -1 mod n, ascending, for 2 <= n <= max_n."""
    if max_n < 2:
        raise DomainError(f"need max_n >= 2, got {max_n}")
    if max_n > max_sweep():
        raise SweepBoundError(f"max_n={max_n} exceeds the sweep bound {max_sweep()}")
    return {n: sqrt_minus_one_all(n) for n in range(2, max_n + 1)}


def sweep_two_squares(roots: dict[int, tuple[int, ...]]) -> list[PropertyReport]:
    """Decomposition checks over a precomputed roots table.

    Validates each decomposition arithmetically, collapses the a vs n-a
    pair, compares against the remainders of the full symmetric trace,
    and checks the assembled set per n against both the public
    enumeration and the brute-force scan.
    """
    pairing = PropertyReport("roots_pairing")
    decomposition = PropertyReport("brillhart_decomposition")
    equivalence = PropertyReport("two_squares_oracle")
    for n, roots_n in roots.items():
        pairing.instances += 1
        if roots_n != tuple(sorted(roots_n)) or {n - a for a in roots_n} != set(roots_n):
            pairing.fail(f"n={n}: roots {roots_n} not ascending or not closed under a -> n-a")
        found = set()
        for a in roots_n:
            rep = brillhart(n, a)
            x, y = rep
            decomposition.instances += 1
            if x * x + y * y != n or math.gcd(x, y) != 1 or y < 1:
                decomposition.fail(f"(n={n}, a={a}): bad decomposition ({x}, {y})")
            if x <= y and n != 2:
                decomposition.fail(f"(n={n}, a={a}): ordering violated by ({x}, {y})")
            if brillhart(n, n - a) != rep:
                decomposition.fail(f"(n={n}, a={a}): mirror root gave a different pair")
            trace = symmetric_trace(n, a)
            s = trace.half_length
            if (trace.remainder(s + 1), trace.remainder(s + 2)) != (x, y):
                decomposition.fail(f"(n={n}, a={a}): early stop disagrees with full trace")
            found.add(rep)
        equivalence.instances += 1
        brute = brute_two_squares(n)
        if not (found == all_primitive_representations(n) == brute):
            equivalence.fail(f"n={n}: enumerations disagree (brute: {sorted(brute)})")
    return [pairing, decomposition, equivalence]


def sweep_remainder_formulas(roots: dict[int, tuple[int, ...]]) -> PropertyReport:
    """Both remainder formulas at every index of every symmetric trace."""
    report = PropertyReport("remainder_formulas")
    for n, roots_n in roots.items():
        for a in roots_n:
            for row in remainder_formulas(symmetric_trace(n, a)):
                report.instances += 1
                if not row.holds:
                    report.fail(f"(n={n}, a={a}), i={row.i}: formulas do not match")
    return report


def sweep_form_identities(roots: dict[int, tuple[int, ...]]) -> PropertyReport:
    """Every identity of both families on every symmetric trace.

    Construction already cross-checks each multiplier against the nested
    trace; on top of that the count, the lhs arithmetic, the degeneracy
    flags and the i = s minus-family corner (identically zero on both
    sides) are asserted here.
    """
    report = PropertyReport("form_identities")
    for n, roots_n in roots.items():
        for a in roots_n:
            trace = symmetric_trace(n, a)
            s = trace.half_length
            try:
                found = enumerate_identities(trace)
            except InternalCheckError as exc:
                report.instances += 1
                report.fail(f"(n={n}, a={a}): {exc}")
                continue
            if len(found) != (s + 1) * (s + 2):
                report.fail(f"(n={n}, a={a}): {len(found)} identities, want {(s + 1) * (s + 2)}")
            for identity in found:
                report.instances += 1
                if identity.lhs != identity.multiplier * n:
                    report.fail(f"(n={n}, a={a}): {identity} lhs mismatch")
                if identity.degenerate != (0 in identity.factor_values or identity.multiplier in (0, n)):
                    report.fail(f"(n={n}, a={a}): {identity} degeneracy misflagged")
                if identity.family == "plus" and identity.multiplier < 1:
                    report.fail(f"(n={n}, a={a}): plus multiplier {identity.multiplier} < 1")
                if identity.family == "minus" and identity.i == s and (
                    identity.multiplier != 0 or identity.lhs != 0
                ):
                    report.fail(f"(n={n}, a={a}): i=s minus corner not identically zero")
    return report


def sweep_nest_chains(roots: dict[int, tuple[int, ...]]) -> PropertyReport:
    """Nest chains against direct evaluation of the stripped palindromes."""
    report = PropertyReport("nest_chains")
    for n, roots_n in roots.items():
        for a in roots_n:
            trace = symmetric_trace(n, a)
            half = trace.half()
            s = trace.half_length
            chain = nest_chain(n, a)
            if len(chain.entries) != s:
                report.fail(f"(n={n}, a={a}): {len(chain.entries)} entries, want s={s}")
            if chain.multipliers != tuple(e.numerator for e in chain.entries[1:]):
                report.fail(f"(n={n}, a={a}): multipliers are not the successor numerators")
            first = chain.multipliers[0] if chain.multipliers else 1
            if a * a + 1 != n * first:
                report.fail(f"(n={n}, a={a}): a^2+1 != n * {first}")
            for k, entry in enumerate(chain.entries):
                report.instances += 1
                if entry != cf_eval(palindrome(half[k:])):
                    report.fail(f"(n={n}, a={a}), step {k}: chain entry != palindrome value")
    return report


def run_suite(max_n: int = DEFAULT_MAX_N, seed: int = DEFAULT_SEED, cases: int = DEFAULT_CASES) -> list[PropertyReport]:
    """Run every property check; returns one report per property.

    Exhaustive sweeps go up to max_n (guarded by the sweep bound); fuzz
    checks draw `cases` instances from a generator seeded with `seed`,
    so identical arguments give identical output.
    """
    if cases < 1:
        raise DomainError(f"need cases >= 1, got {cases}")
    roots = roots_table(max_n)  # validates max_n before any work starts
    rng = random.Random(seed)
    reports = [
        fuzz_continuant_vs_determinant(rng, cases),
        fuzz_euler_identity(rng, cases),
        fuzz_cf_eval(rng, cases),
        fuzz_numerator_reversal(rng, cases),
        fuzz_division_identity(rng, cases),
    ]
    reports.extend(sweep_traces(max_n))
    reports.extend(sweep_two_squares(roots))
    reports.append(sweep_remainder_formulas(roots))
    reports.append(sweep_form_identities(roots))
    reports.append(sweep_nest_chains(roots))
    return reports
