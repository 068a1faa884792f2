import io
import json
import subprocess
import sys

import pytest

from symeuclid import verify
from symeuclid.cli import main


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_trace_text_golden():
    code, out, err = run_cli("trace", "829", "246")
    assert code == 0 and err == ""
    assert out == (
        "quotients: 3 2 1 2 2 1 2 3\n"
        "remainders: 829 246 91 64 27 10 7 3 1 0\n"
        "convention_applied: false\n"
        "symmetric: true\n"
        "s: 4\n"
    )


def test_trace_text_split_and_plain():
    code, out, _ = run_cli("trace", "10", "7")
    assert code == 0
    assert "quotients: 1 2 2 1" in out
    assert "convention_applied: true" in out

    code, out, _ = run_cli("trace", "7", "3")
    assert code == 0
    assert "symmetric: false" in out
    assert not any(line.startswith("s:") for line in out.splitlines())


def test_trace_json_round_trip():
    code, out, _ = run_cli("trace", "829", "246", "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert json.dumps(record, sort_keys=True) + "\n" == out
    assert record["status"] == "ok"
    assert record["inputs"] == [829, 246]
    assert record["payload"]["quotients"] == [3, 2, 1, 2, 2, 1, 2, 3]
    assert record["payload"]["half_length"] == 4


def test_identities_nontrivial_text_golden():
    code, out, _ = run_cli("identities", "829", "246", "--nontrivial")
    assert code == 0
    assert out.splitlines() == [
        "246^2 + 1^2 = 73 * 829",
        "246*91 - 3*1 = 27 * 829",
        "246*64 + 7*1 = 19 * 829",
        "246*27 - 10*1 = 8 * 829",
        "246*10 + 27*1 = 3 * 829",
        "246*7 - 64*1 = 2 * 829",
        "246*3 + 91*1 = 1 * 829",
        "91^2 + 3^2 = 10 * 829",
        "91*64 - 7*3 = 7 * 829",
        "91*27 + 10*3 = 3 * 829",
        "91*10 - 27*3 = 1 * 829",
        "91*7 + 64*3 = 1 * 829",
        "64^2 + 7^2 = 5 * 829",
        "64*27 - 10*7 = 2 * 829",
        "64*10 + 27*7 = 1 * 829",
        "27^2 + 10^2 = 1 * 829",
    ]


def test_identities_unfiltered_marks_degenerates():
    code, out, _ = run_cli("identities", "5", "2")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 6
    # with s = 1, only the central 2^2 + 1^2 row is substantive
    assert sum("[degenerate]" in line for line in lines) == 5
    assert "2^2 + 1^2 = 1 * 5" in lines


def test_identities_json_carries_structure():
    code, out, _ = run_cli("identities", "829", "246", "--nontrivial", "--format", "json")
    record = json.loads(out)
    rows = record["payload"]["identities"]
    assert [r["multiplier"] for r in rows] == [73, 27, 19, 8, 3, 2, 1, 10, 7, 3, 1, 1, 5, 2, 1, 1]
    assert rows[0]["factor_indices"] == [2, 2, 9, 9]
    assert rows[0]["sub_palindrome"] == [2, 1, 2, 2, 1, 2]


def test_nest_text_golden():
    code, out, _ = run_cli("nest", "829", "246")
    assert code == 0
    assert out == "829/246 73/27 10/7 5/2\nmultipliers: 73 10 5\n"

    code, out, _ = run_cli("nest", "5", "2")
    assert out == "5/2\nmultipliers:\n"

    code, out, _ = run_cli("nest", "2", "1")
    assert out == "2/1\nmultipliers:\n"


def test_two_squares_single_and_all():
    assert run_cli("two-squares", "829", "--a", "246")[1] == "27 10\n"
    assert run_cli("two-squares", "65", "--all")[1] == "(8,1) (7,4)\n"
    assert run_cli("two-squares", "65")[1] == "(8,1) (7,4)\n"

    code, out, err = run_cli("two-squares", "7", "--all")
    assert code == 0 and out == "" and err == ""


def test_two_squares_json_empty_result():
    code, out, _ = run_cli("two-squares", "7", "--format", "json")
    record = json.loads(out)
    assert code == 0
    assert record["payload"] == {"n": 7, "representations": []}


@pytest.mark.parametrize(
    "argv,code,text",
    [
        (("trace", "10", "4"), 3, "not-coprime"),
        (("identities", "7", "3"), 3, "not-symmetric"),
        (("nest", "7", "3"), 3, "not-sqrt-minus-one"),
        (("two-squares", "829", "--a", "12"), 3, "not-sqrt-minus-one"),
        (("two-squares", "1"), 3, "domain"),
        (("verify", "--max-n", "20000001"), 2, "sweep-bound"),
    ],
)
def test_error_exit_codes(argv, code, text):
    got, out, err = run_cli(*argv)
    assert got == code
    assert out == ""
    assert text in err


def test_error_record_is_json_on_request():
    code, out, err = run_cli("trace", "10", "4", "--format", "json")
    assert code == 3 and out == ""
    record = json.loads(err)
    assert record["status"] == "error"
    assert record["payload"]["code"] == "not-coprime"


def test_usage_errors_exit_2():
    assert run_cli("trace", "829")[0] == 2
    assert run_cli("no-such-command")[0] == 2
    assert run_cli()[0] == 2
    assert run_cli("two-squares", "65", "--a", "8", "--all")[0] == 2


def test_single_instance_commands_ignore_sweep_bound(monkeypatch):
    monkeypatch.setenv("SYMEUCLID_MAX_SWEEP", "10")
    assert run_cli("trace", "829", "246")[0] == 0
    assert run_cli("nest", "829", "246")[0] == 0
    assert run_cli("two-squares", "829", "--a", "246")[0] == 0
    code, _, err = run_cli("two-squares", "829", "--all")
    assert code == 2 and "sweep-bound" in err


def test_verify_small_run_text_and_determinism():
    code, out, _ = run_cli("verify", "--max-n", "60", "--cases", "40", "--seed", "7")
    assert code == 0
    assert out.endswith("all 14 properties ok\n")
    assert "symmetry_criterion:" in out
    again = run_cli("verify", "--max-n", "60", "--cases", "40", "--seed", "7")[1]
    assert again == out


def test_verify_covers_smallest_bound():
    code, out, _ = run_cli("verify", "--max-n", "2", "--cases", "5")
    assert code == 0
    assert "brillhart_decomposition: 1 instances ok" in out


def test_verify_json_payload():
    code, out, _ = run_cli("verify", "--max-n", "30", "--cases", "10", "--format", "json")
    record = json.loads(out)
    assert code == 0
    names = [p["name"] for p in record["payload"]["properties"]]
    assert len(names) == 14 and "form_identities" in names
    assert all(p["ok"] for p in record["payload"]["properties"])


def test_verify_failure_exits_4(monkeypatch):
    def fake_suite(max_n, seed, cases):
        return [verify.PropertyReport(name="broken", instances=3, counterexample="(n=9, a=2)")]

    monkeypatch.setattr("symeuclid.cli.run_suite", fake_suite)
    code, out, _ = run_cli("verify", "--max-n", "50")
    assert code == 4
    assert "broken: FAIL (3 instances): (n=9, a=2)" in out
    assert "1 of 1 properties failed" in out


def test_arbitrary_precision_inputs():
    # well past 64 bits; single-instance commands have no size ceiling
    from symeuclid.continuants import cf_eval, palindrome

    value = cf_eval(palindrome((10**10, 2, 7)))
    n, a = value.numerator, value.denominator
    assert n > 2**64 and (a * a + 1) % n == 0
    code, out, _ = run_cli("trace", str(n), str(a))
    assert code == 0 and "symmetric: true" in out
    code, out, _ = run_cli("two-squares", str(n), "--a", str(a))
    assert code == 0
    x, y = map(int, out.split())
    assert x * x + y * y == n


def test_module_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "symeuclid", "trace", "829", "246"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("quotients: 3 2 1 2 2 1 2 3\n")
