import json

import pytest

from kgconst.cli import (
    EXIT_IDENTITY_FAILED,
    EXIT_NOT_CONVERGED,
    EXIT_OK,
    EXIT_USAGE,
    run,
)


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCompute:
    def test_text_default(self, capsys):
        code, out, err = invoke(capsys, "compute", "KG")
        assert code == EXIT_OK
        assert out == "KG = 1.7822139781913691118\n"

    def test_json(self, capsys):
        code, out, _ = invoke(capsys, "compute", "PI", "--digits", "25",
                              "--format", "json")
        assert code == EXIT_OK
        record = json.loads(out)
        assert record["target"] == "PI"
        assert record["value"].startswith("3.141592653589793238462643")
        assert record["runtime_ms"] == 0.0

    def test_csv(self, capsys):
        code, out, _ = invoke(capsys, "compute", "L", "--format", "csv")
        assert code == EXIT_OK
        header, row = out.strip().splitlines()
        assert header == "target,value,runtime_ms,paper_anchor"
        assert row.startswith("L,0.88137358701954302523")

    def test_unknown_constant(self, capsys):
        code, _, err = invoke(capsys, "compute", "NOPE")
        assert code == EXIT_USAGE
        assert "valid targets" in err

    def test_invalid_digits(self, capsys):
        code, _, err = invoke(capsys, "compute", "PI", "--digits", "5")
        assert code == EXIT_USAGE

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "kg.json"
        code, out, _ = invoke(capsys, "compute", "KG", "--format", "json",
                              "--out", str(path))
        assert code == EXIT_OK
        assert out == ""
        assert json.loads(path.read_text())["target"] == "KG"


class TestVerify:
    def test_single_identity_text(self, capsys):
        code, out, _ = invoke(capsys, "verify", "KG_DEFINITION")
        assert code == EXIT_OK
        assert out.startswith("PASS KG_DEFINITION:")

    def test_single_identity_json_object(self, capsys):
        code, out, _ = invoke(capsys, "verify", "LEGENDRE_RELATION",
                              "--format", "json")
        assert code == EXIT_OK
        record = json.loads(out)
        assert isinstance(record, dict)
        assert record["passed"] is True
        assert record["digits_agreed"] >= 19

    def test_all_json_array(self, capsys):
        code, out, _ = invoke(capsys, "verify", "all", "--format", "json")
        assert code == EXIT_OK
        records = json.loads(out)
        assert isinstance(records, list)
        assert len(records) == 18
        assert all(r["passed"] for r in records)

    def test_all_byte_deterministic(self, capsys):
        _, first, _ = invoke(capsys, "verify", "all", "--digits", "20",
                             "--format", "json")
        _, second, _ = invoke(capsys, "verify", "all", "--digits", "20",
                              "--format", "json")
        assert first == second

    def test_unknown_identity(self, capsys):
        code, _, err = invoke(capsys, "verify", "MYSTERY")
        assert code == EXIT_USAGE
        assert "valid targets" in err


class TestList:
    def test_sections_present(self, capsys):
        code, out, _ = invoke(capsys, "list")
        assert code == EXIT_OK
        assert "constants:" in out
        assert "identities:" in out
        assert "trace targets:" in out
        for name in ("KG", "HAAGERUP", "KHINTCHINE"):
            assert name in out
        assert "KG_DEFINITION" in out


class TestTrace:
    def test_double_series_checkpoints(self, capsys):
        code, out, _ = invoke(capsys, "trace", "double_series", "--digits", "12")
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert lines[0] == "index,value,residual"
        indices = [int(line.split(",")[0]) for line in lines[1:]]
        # powers of ten then the final term count
        assert indices[:3] == [1, 10, 100]
        assert indices[-1] == max(indices)

    def test_partial_sum_trace(self, capsys, tmp_path):
        path = tmp_path / "trace.csv"
        code, out, _ = invoke(capsys, "trace", "partial_sum_S", "--digits", "10",
                              "--out", str(path))
        assert code == EXIT_OK
        assert out == ""
        lines = path.read_text().strip().splitlines()
        assert lines[0] == "index,value,residual"
        assert len(lines) > 2

    def test_unknown_target(self, capsys):
        code, _, err = invoke(capsys, "trace", "mystery_series")
        assert code == EXIT_USAGE
        assert "valid targets" in err

    def test_truncated_trace_not_converged(self, capsys):
        code, out, _ = invoke(capsys, "trace", "double_series", "--digits", "12",
                              "--max-terms", "50")
        assert code == EXIT_NOT_CONVERGED


class TestUsage:
    def test_no_command(self, capsys):
        code, _, _ = invoke(capsys)
        assert code == EXIT_USAGE

    def test_bad_format(self, capsys):
        code, _, _ = invoke(capsys, "compute", "PI", "--format", "xml")
        assert code == EXIT_USAGE
