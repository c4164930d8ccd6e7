import json
import subprocess
import sys

import jsonschema
import pytest

from poncelet.cli import capture, load_schema


def run_json(*args):
    code, out = capture(list(args) + ["--format", "json"])
    doc = json.loads(out)
    jsonschema.validate(doc, load_schema())
    return code, doc


class TestCommands:
    def test_coeffs_p53(self):
        code, doc = run_json("coeffs", "--p", "53", "--n", "9")
        assert code == 0
        assert doc["payload"]["coefficients"] == [13, 36, 40]
        assert doc["payload"]["agree"] is True
        assert set(doc["payload"]["methods"]) == {"polynomial", "iteration", "cayley"}
        assert doc["metadata"] == {"p": 53, "c": 2, "command": "coeffs", "version": "0.1.0"}

    def test_coeffs_even_uses_doubling(self):
        code, doc = run_json("coeffs", "--p", "11", "--n", "12")
        assert doc["payload"]["coefficients"] == [6, 10]
        assert doc["payload"]["methods"]["doubling"] == [6, 10]

    def test_poly(self):
        assert run_json("poly", "--n", "9")[1]["payload"]["coefficients"] == ["-64", "96", "-36", "1"]
        assert run_json("poly", "--n", "3")[1]["payload"]["coefficients"] == ["-4", "1"]
        assert run_json("poly", "--n", "4")[1]["payload"]["coefficients"] == ["-2", "1"]

    def test_trace(self):
        code, doc = run_json("trace", "--p", "11", "--alpha", "4", "--beta", "1")
        payload = doc["payload"]
        assert code == 0 and payload["n"] == 3
        assert len(payload["vertices"]) == len(payload["contacts"]) == 3
        assert payload["start"] == [1, 1, 3]
        assert all(payload["checks"].values())

    def test_trace_with_start(self):
        # (1,0,1) is not on O_1 for p = 53
        assert capture(["trace", "--p", "53", "--alpha", "13", "--start", "1,0,1"]) == (5, "")
        code, doc = run_json("trace", "--p", "11", "--alpha", "4", "--start", "2,2,6")
        assert doc["payload"]["start"] == [1, 1, 3] and doc["payload"]["n"] == 3
        code, doc = run_json("trace", "--p", "53", "--alpha", "13")
        assert doc["payload"]["n"] == 9

    def test_table(self):
        code, doc = run_json("table", "--p", "7")
        rows = doc["payload"]["rows"]
        assert len(rows) == 6 and {v for r in rows for v in r} == {None, 4, 8}

    def test_table_oracle(self):
        a = run_json("table", "--p", "11")[1]["payload"]["rows"]
        b = run_json("table", "--p", "11", "--oracle")[1]["payload"]["rows"]
        assert a == b

    def test_verify(self):
        code, doc = run_json("verify", "--p-max", "11", "--n-max", "12")
        assert code == 0 and doc["payload"]["summary"]["pass"]


class TestFormats:
    def test_csv_headers(self):
        assert capture(["table", "--p", "5", "--format", "csv"])[1].splitlines()[0] == "alpha,1,2,3,4"
        assert capture(["coeffs", "--p", "11", "--n", "12", "--format", "csv"])[1] == "n,k\n12,6\n12,10\n"
        assert capture(["poly", "--n", "5", "--format", "csv"])[1] == "degree,coefficient\n0,16\n1,-12\n2,1\n"
        trace_csv = capture(["trace", "--p", "11", "--alpha", "4", "--format", "csv"])[1].splitlines()
        assert trace_csv[0] == "i,bx,by,bz,ax,ay,az" and len(trace_csv) == 4

    def test_plain(self):
        out = capture(["poly", "--n", "5"])[1]
        assert "k^2 - 12k + 16" in out

    @pytest.mark.parametrize(
        "argv",
        [
            ["table", "--p", "13"],
            ["coeffs", "--p", "29", "--n", "15"],
            ["trace", "--p", "19", "--alpha", "2", "--beta", "5"],
            ["verify", "--p-max", "13"],
        ],
    )
    @pytest.mark.parametrize("fmt", ["plain", "json", "csv"])
    def test_deterministic(self, argv, fmt):
        assert capture(argv + ["--format", fmt]) == capture(argv + ["--format", fmt])


class TestExitCodes:
    @pytest.mark.parametrize(
        "argv, code",
        [
            (["table", "--p", "9"], 2),
            (["coeffs", "--p", "1", "--n", "3"], 2),
            (["table", "--p", "13", "--c", "1"], 2),
            (["coeffs", "--p", "11", "--n", "5"], 3),
            (["poly", "--n", "2"], 3),
            (["trace", "--p", "11", "--alpha", "3", "--beta", "1"], 4),
            (["trace", "--p", "11", "--alpha", "1", "--beta", "1"], 4),
            (["trace", "--p", "11", "--alpha", "4", "--start", "1,2"], 5),
            (["trace", "--p", "11", "--alpha", "4", "--start", "1,0,0"], 5),
        ],
    )
    def test_codes(self, argv, code, capsys):
        assert capture(argv)[0] == code
        assert "poncelet:" in capsys.readouterr().err

    def test_console_script(self):
        proc = subprocess.run(
            [sys.executable, "-c", "from poncelet.cli import main; main()", "coeffs", "--p", "11", "--n", "5"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 3
