import json

import pytest

from fairrank.cli import main

CYCLE = "3\n010\n001\n100\n"


@pytest.fixture
def cycle_path(tmp_path):
    p = tmp_path / "cycle.txt"
    p.write_text(CYCLE)
    return str(p)


class TestGen:
    def test_rotational(self, tmp_path, capsys):
        out = tmp_path / "t.txt"
        assert main(["gen", "--family", "rotational", "--l", "1", "--out", str(out)]) == 0
        assert out.read_text() == CYCLE
        assert "n=3 edges=3" in capsys.readouterr().out

    def test_composite_summary(self, tmp_path, capsys):
        out = tmp_path / "t.txt"
        assert main(["gen", "--family", "composite", "--l", "1", "--out", str(out)]) == 0
        assert "n=9 edges=36" in capsys.readouterr().out

    def test_random_deterministic(self, tmp_path):
        a, b = tmp_path / "a.txt", tmp_path / "b.txt"
        for p in (a, b):
            assert main(["gen", "--family", "random", "--n", "5", "--seed", "7",
                         "--out", str(p)]) == 0
        assert a.read_text() == b.read_text()

    def test_missing_param(self, capsys):
        assert main(["gen", "--family", "rotational"]) == 2


class TestRank:
    def test_copeland_on_cycle(self, cycle_path, tmp_path, capsys):
        out = tmp_path / "r.txt"
        assert main(["rank", "--in", cycle_path, "--method", "copeland",
                     "--out", str(out)]) == 0
        assert out.read_text() == "1 1\n2 1\n3 1\n"
        assert "bw=0/1" in capsys.readouterr().out

    def test_linear_fair_on_cycle(self, cycle_path, tmp_path, capsys):
        out = tmp_path / "r.txt"
        report = tmp_path / "report.json"
        assert main(["rank", "--in", cycle_path, "--method", "linear-fair",
                     "--out", str(out), "--json-report", str(report)]) == 0
        stdout = capsys.readouterr().out
        assert "lambda=1.000000000" in stdout
        payload = json.loads(report.read_text())
        assert payload["verified"] is True
        assert len(payload["components"]) == 1

    def test_parse_error(self, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("garbage")
        assert main(["rank", "--in", str(bad), "--method", "copeland"]) == 2


class TestCheck:
    def test_constant_is_nscop(self, cycle_path, tmp_path, capsys):
        r = tmp_path / "r.txt"
        r.write_text("1 0\n2 0\n3 0\n")
        assert main(["check", "--in", cycle_path, "--ranking", str(r),
                     "--class", "nscop"]) == 0
        assert capsys.readouterr().out.startswith("PASS")

    def test_tie_break_fails_cop(self, cycle_path, tmp_path, capsys):
        r = tmp_path / "r.txt"
        r.write_text("1 1\n2 1\n3 2\n")
        assert main(["check", "--in", cycle_path, "--ranking", str(r),
                     "--class", "cop"]) == 1
        out = capsys.readouterr().out
        assert out.startswith("FAIL")
        assert "pair=" in out

    def test_linear_fair_roundtrip(self, cycle_path, tmp_path):
        r = tmp_path / "r.txt"
        assert main(["rank", "--in", cycle_path, "--method", "linear-fair",
                     "--out", str(r)]) == 0
        for cls in ("lin", "spec", "weak"):
            assert main(["check", "--in", cycle_path, "--ranking", str(r),
                         "--class", cls]) == 0

    def test_domain_mismatch(self, cycle_path, tmp_path):
        r = tmp_path / "r.txt"
        r.write_text("1 1\n2 2\n")
        assert main(["check", "--in", cycle_path, "--ranking", str(r),
                     "--class", "weak"]) == 2


class TestMinimize:
    def test_injective_cycle(self, cycle_path, capsys):
        assert main(["minimize", "--in", cycle_path, "--space", "injective"]) == 0
        assert "count=1 fraction=1/3" in capsys.readouterr().out

    def test_nscop_zero(self, cycle_path, capsys):
        assert main(["minimize", "--in", cycle_path, "--space", "weak-orders",
                     "--class", "nscop"]) == 0
        assert "count=0" in capsys.readouterr().out


class TestEmn:
    def test_sweep_rows(self, capsys):
        assert main(["emn", "--lmax", "2", "--materialize", "2"]) == 0
        out = capsys.readouterr().out
        assert "1/3" in out and "7/15" in out

    def test_sweep_json(self, capsys):
        assert main(["emn", "--lmax", "1", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["limit"] == {"num": 3, "den": 4}

    def test_exhaustive(self, capsys):
        assert main(["emn", "--exhaustive", "4"]) == 0
        assert "within=yes" in capsys.readouterr().out


class TestDump:
    def test_plain_grid(self, cycle_path, capsys):
        assert main(["dump", "--in", cycle_path, "--table"]) == 0
        out = capsys.readouterr().out
        assert "*" in out and "[" not in out

    def test_backward_arcs_bracketed(self, cycle_path, tmp_path, capsys):
        r = tmp_path / "r.txt"
        r.write_text("1 1\n2 2\n3 3\n")
        assert main(["dump", "--in", cycle_path, "--ranking", str(r)]) == 0
        assert capsys.readouterr().out.count("[*]") == 2

    def test_chain_no_brackets(self, tmp_path, capsys):
        t = tmp_path / "t.txt"
        t.write_text("3\n011\n001\n000\n")
        r = tmp_path / "r.txt"
        r.write_text("1 3\n2 2\n3 1\n")
        assert main(["dump", "--in", str(t), "--ranking", str(r)]) == 0
        assert "[*]" not in capsys.readouterr().out
