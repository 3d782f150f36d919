import json
import math

import pytest

from dirichlet_j.cli import RunConfig, emit_report, run
from dirichlet_j.exact import PiPoly
from dirichlet_j.identities import IdentityReport


class TestRunConfig:
    def test_defaults(self):
        cfg = RunConfig(command="verify", suite="all")
        assert cfg.digits == 15 and cfg.tol == 1e-10 and cfg.seed == 0x5EED

    def test_invariants(self):
        with pytest.raises(ValueError):
            RunConfig(command="compute", function="J", s_or_m=1, digits=10)
        with pytest.raises(ValueError):
            RunConfig(command="verify", suite="all", tol=0.0)
        with pytest.raises(ValueError):
            RunConfig(command="compute", function="J", s_or_m=1, range=(1, 2))


@pytest.fixture
def capout(capsys):
    def read():
        return capsys.readouterr().out

    return read


class TestCompute:
    def test_j_quadrature(self, capout):
        assert run(["compute", "J", "1", "--digits", "15"]) == 0
        out = capout()
        assert "1.166243616123275" in out
        assert "quadrature" in out
        assert "error estimate" in out

    def test_beta(self, capout):
        assert run(["compute", "beta", "2"]) == 0
        assert "0.915965594177218" in capout()

    def test_lambda_closed(self, capout):
        assert run(["compute", "lambda", "4", "--method", "closed"]) == 0
        assert "1.014678031604192" in capout()

    def test_j_euler_series(self, capout):
        assert run(["compute", "J", "3", "--method", "euler_series"]) == 0
        assert "0.1796320799769" in capout()

    def test_j_riemann(self, capout):
        assert run(["compute", "J", "2", "--method", "riemann"]) == 0
        assert "riemann_sum" in capout()

    def test_non_integer_argument(self, capout):
        assert run(["compute", "J", "3.5"]) == 0
        assert "0.1011261779011461" in capout()

    def test_closed_method_wrong_parity_is_usage_error(self):
        assert run(["compute", "lambda", "3", "--method", "closed"]) == 2
        assert run(["compute", "beta", "2", "--method", "closed"]) == 2

    def test_domain_error_is_usage_error(self):
        assert run(["compute", "lambda", "0.5"]) == 2

    def test_convergence_failure_exit_code(self):
        # s this close to 0 makes the value huge and the absolute target
        # unreachable within the level cap
        assert run(["compute", "J", "0.00000001"]) == 3

    def test_digits_below_floor_rejected(self):
        assert run(["compute", "J", "1", "--digits", "10"]) == 2

    def test_env_var_digits(self, capout, monkeypatch):
        monkeypatch.setenv("DIRICHLET_J_DIGITS", "16")
        assert run(["compute", "beta", "2"]) == 0
        assert "0.915965594177219" in capout()

    def test_env_var_invalid(self, monkeypatch):
        monkeypatch.setenv("DIRICHLET_J_DIGITS", "many")
        assert run(["compute", "beta", "2"]) == 2


class TestVerify:
    def test_thm2_range_passes(self, capout):
        assert run(["verify", "thm2", "--range", "1..4", "--tol", "1e-10"]) == 0
        out = capout()
        assert out.count("✓") == 4
        assert "4/4 passed" in out

    def test_failing_tolerance_gives_exit_one(self):
        assert run(["verify", "thm1", "--range", "1..2", "--tol", "1e-30"]) == 1

    def test_remark1_exact(self, capout):
        assert run(["verify", "remark1", "--range", "1..20"]) == 0
        assert "40/40 passed" in capout()

    def test_collapse(self, capout):
        assert run(["verify", "collapse", "--range", "1..8"]) == 0

    def test_lemmas(self):
        assert run(["verify", "lemmas"]) == 0

    def test_fourier(self):
        assert run(["verify", "fourier"]) == 0

    def test_bad_suite_usage_error(self):
        assert run(["verify", "thm9"]) == 2

    def test_bad_range_usage_error(self):
        assert run(["verify", "thm1", "--range", "5"]) == 2

    def test_nonpositive_tol_usage_error(self):
        assert run(["verify", "thm1", "--tol", "-1e-5"]) == 2

    def test_json_roundtrip(self, capout):
        assert run(["verify", "thm2", "--range", "1..3", "--format", "json"]) == 0
        rows = json.loads(capout())
        assert len(rows) == 3
        for row in rows:
            assert set(row) == {"identity_id", "params", "lhs", "rhs", "abs_diff", "exact", "pass"}
            assert row["pass"] is True and row["exact"] is False
            assert isinstance(row["lhs"], float)

    def test_csv_schema(self, capout):
        assert run(["verify", "thm4", "--range", "1..2", "--format", "csv"]) == 0
        lines = capout().splitlines()
        assert lines[0] == "identity_id,params,lhs,rhs,abs_diff,exact,pass"
        assert len(lines) == 5
        assert all(line.endswith("true") for line in lines[1:])

    def test_report_ordering(self, capout):
        assert run(["verify", "thm4", "--range", "1..3", "--format", "csv"]) == 0
        ids = [line.split(",")[0] for line in capout().splitlines()[1:]]
        assert ids == sorted(ids)

    def test_determinism(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        argv = ["verify", "thm2", "--range", "1..3", "--format", "json"]
        assert run(argv + ["-o", str(a)]) == 0
        assert run(argv + ["-o", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_seeded_lemmas_deterministic(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        argv = ["verify", "lemmas", "--format", "csv", "--seed", "7"]
        assert run(argv + ["-o", str(a)]) == 0
        assert run(argv + ["-o", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_output_file(self, tmp_path):
        path = tmp_path / "report.csv"
        assert run(["verify", "remark1", "--range", "1..2", "--format", "csv", "-o", str(path)]) == 0
        text = path.read_text()
        assert "\r" not in text
        assert text.splitlines()[0].startswith("identity_id")

    def test_verify_all_passes(self, tmp_path):
        path = tmp_path / "all.csv"
        assert run(["verify", "all", "--format", "csv", "-o", str(path)]) == 0
        lines = path.read_text().splitlines()
        assert len(lines) > 400  # full battery
        assert all(line.endswith("true") for line in lines[1:])


class TestTable:
    def test_text(self, capout):
        assert run(["table", "J", "--range", "1..4"]) == 0
        out = capout()
        assert "1.166243616123275" in out and "0.054461779896217" in out

    def test_json(self, capout):
        assert run(["table", "beta", "--range", "1..3", "--format", "json"]) == 0
        rows = json.loads(capout())
        assert [r["s"] for r in rows] == [1, 2, 3]
        assert rows[1]["value"] == pytest.approx(0.91596559417721902, abs=1e-14)

    def test_csv(self, capout):
        assert run(["table", "lambda", "--range", "2..4", "--format", "csv"]) == 0
        lines = capout().splitlines()
        assert lines[0] == "s,value,error_estimate,method"
        assert len(lines) == 4

    def test_range_required(self):
        assert run(["table", "J"]) == 2


class TestEmitReport:
    def test_empty_json(self):
        assert emit_report([], "json") == "[]"

    def test_exact_csv_row(self):
        report = IdentityReport(
            "remark1_a", (1,), PiPoly.term(1, 2), PiPoly.term(1, 2), 0.0, exact=True, passed=True
        )
        text = emit_report([report], "csv")
        lines = text.splitlines()
        assert lines[0] == "identity_id,params,lhs,rhs,abs_diff,exact,pass"
        assert lines[1] == "remark1_a,1,pi^2,pi^2,0,true,true"

    def test_mixed_text_markers(self):
        ok = IdentityReport("thm1", (1,), 1.0, 1.0, 0.0, exact=False, passed=True)
        bad = IdentityReport("thm1", (2,), 1.0, 2.0, 1.0, exact=False, passed=False)
        text = emit_report([ok, bad], "text")
        assert "✓" in text and "✗" in text
        assert "max abs_diff" in text

    def test_floats_render_17_digits(self):
        value = 1.0517997902646449
        report = IdentityReport("thm1", (1,), value, value, 0.0, exact=False, passed=True)
        out = emit_report([report], "json")
        assert json.loads(out)[0]["lhs"] == value

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            emit_report([], "xml")
