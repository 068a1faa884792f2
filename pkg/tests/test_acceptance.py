"""Acceptance gate: one test per criterion, one printed line per result.

Each test prints `ACCEPTANCE <k> PASS|FAIL: <summary>` so a plain
`pytest -s tests/test_acceptance.py` reads as a checklist.  Exhaustive
sweeps reuse the session-wide roots table fixture; its build time is
charged to criterion 4, which is the one that requires the exhaustive
root search.
"""

import contextlib
import io
import json
import random
import time

from symeuclid import verify
from symeuclid.cli import main

from conftest import ACCEPT_MAX_N


@contextlib.contextmanager
def criterion(number, summary):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {number} FAIL: {summary}")
        raise
    print(f"ACCEPTANCE {number} PASS: {summary}")


def run_cli(*argv):
    out = io.StringIO()
    code = main(list(argv), out, io.StringIO())
    return code, out.getvalue()


def test_criterion_1_golden_trace():
    with criterion(1, "trace 829 246 reproduces the golden rows in < 1 ms"):
        code, out = run_cli("trace", "829", "246")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "quotients: 3 2 1 2 2 1 2 3"
        assert lines[1] == "remainders: 829 246 91 64 27 10 7 3 1 0"

        best = min(_timed_trace() for _ in range(50))
        assert best < 1e-3, f"fastest of 50 runs took {best * 1e3:.3f} ms"


def _timed_trace():
    start = time.perf_counter()
    code = main(["trace", "829", "246"], io.StringIO(), io.StringIO())
    elapsed = time.perf_counter() - start
    assert code == 0
    return elapsed


def test_criterion_2_sixteen_identities():
    with criterion(2, "identities 829 246 --nontrivial lists the sixteen factorizations"):
        code, out = run_cli("identities", "829", "246", "--nontrivial", "--format", "json")
        assert code == 0
        rows = json.loads(out)["payload"]["identities"]
        assert [r["multiplier"] for r in rows] == [73, 27, 19, 8, 3, 2, 1, 10, 7, 3, 1, 1, 5, 2, 1, 1]

        code, text = run_cli("identities", "829", "246", "--nontrivial")
        assert code == 0
        assert text.splitlines()[0] == "246^2 + 1^2 = 73 * 829"
        assert text.splitlines()[-1] == "27^2 + 10^2 = 1 * 829"
        assert len(text.splitlines()) == 16


def test_criterion_3_nest_chain():
    with criterion(3, "nest 829 246 walks 829/246 73/27 10/7 5/2 with multipliers 73 10 5"):
        code, out = run_cli("nest", "829", "246")
        assert code == 0
        assert out == "829/246 73/27 10/7 5/2\nmultipliers: 73 10 5\n"


def test_criterion_4_two_squares_sweep(roots_10k):
    roots, build_seconds = roots_10k
    with criterion(4, f"two-squares decomposition validated for every root of -1, n <= {ACCEPT_MAX_N}"):
        start = time.perf_counter()
        reports = verify.sweep_two_squares(roots)
        elapsed = build_seconds + (time.perf_counter() - start)
        by_name = {r.name: r for r in reports}
        assert by_name["brillhart_decomposition"].ok, by_name["brillhart_decomposition"].counterexample
        assert by_name["brillhart_decomposition"].instances == 4771
        assert by_name["two_squares_oracle"].ok, by_name["two_squares_oracle"].counterexample
        assert by_name["two_squares_oracle"].instances == ACCEPT_MAX_N - 1
        assert by_name["roots_pairing"].ok
        assert elapsed < 60, f"took {elapsed:.1f} s"


def test_criterion_5_symmetry_criterion_sweep():
    with criterion(5, "palindromic quotients iff a^2 = -1 (mod n), all coprime pairs, n <= 3000"):
        start = time.perf_counter()
        reports = verify.sweep_traces(3000)
        elapsed = time.perf_counter() - start
        by_name = {r.name: r for r in reports}
        assert by_name["symmetry_criterion"].ok, by_name["symmetry_criterion"].counterexample
        assert by_name["symmetry_criterion"].instances == 2736187  # sum of phi(n), n = 2..3000
        assert by_name["palindrome_exclusivity"].ok
        assert by_name["remainder_tail_row"].ok
        assert elapsed < 60, f"took {elapsed:.1f} s"


def test_criterion_6_remainder_formula_sweep(roots_10k):
    roots, _ = roots_10k
    with criterion(6, f"remainder formulas exact for every symmetric pair, n <= {ACCEPT_MAX_N}"):
        report = verify.sweep_remainder_formulas(roots)
        assert report.ok, report.counterexample
        assert report.instances == 25083


def test_criterion_7_form_identity_sweep(roots_10k):
    roots, _ = roots_10k
    with criterion(7, f"both identity families exact with dual-route multipliers, n <= {ACCEPT_MAX_N}"):
        report = verify.sweep_form_identities(roots)
        assert report.ok, report.counterexample
        assert report.instances == 167032


def test_criterion_8_euler_identity_fuzz():
    with criterion(8, "100000 random four-continuant identity instances in < 10 s"):
        start = time.perf_counter()
        report = verify.fuzz_euler_identity(random.Random(8), 10**5)
        elapsed = time.perf_counter() - start
        assert report.ok, report.counterexample
        assert report.instances == 10**5
        assert elapsed < 10, f"took {elapsed:.1f} s"


def test_criterion_9_oracle_agreement():
    with criterion(9, "determinant and fold oracles agree on 10000 random sequences each"):
        det = verify.fuzz_continuant_vs_determinant(random.Random(9), 10**4)
        fold = verify.fuzz_cf_eval(random.Random(10), 10**4)
        assert det.ok, det.counterexample
        assert fold.ok, fold.counterexample
        assert det.instances == 10**4
        assert fold.instances == 10**4
