"""Thin-client CLI surface and exit codes."""

import json

import pytest
from click.testing import CliRunner

from blockalg import blockpoly
from blockalg.cli import main
from blockalg.cpoly import CPoly


@pytest.fixture
def runner():
    return CliRunner()


class TestDecompose:
    def test_reference_example(self, runner):
        result = runner.invoke(main, ["decompose", "01001011"])
        assert result.exit_code == 0
        assert result.output.splitlines()[0] == "(0; 3,4,1), block degree 2"

    def test_invalid_word_exits_2(self, runner):
        result = runner.invoke(main, ["decompose", "01021"])
        assert result.exit_code == 2
        assert "position 4" in result.output


class TestPibl:
    def test_roundtrip(self, runner):
        out = runner.invoke(main, ["pibl", "100"])
        assert out.exit_code == 0
        monomial = out.output.strip()
        back = runner.invoke(main, ["pibl", "--invert", monomial])
        assert back.exit_code == 0
        assert back.output.strip() == "100"

    def test_invert_outside_image_exits_2(self, runner):
        result = runner.invoke(main, ["pibl", "--invert", "x1^3"])
        assert result.exit_code == 2


class TestGenerator:
    def test_reduced(self, runner):
        result = runner.invoke(main, ["generator", "3", "--reduced"])
        assert result.exit_code == 0
        assert result.output.strip() == "-2*x2^2 - 3*x1*x2 - 2*x1^2"

    def test_even_weight_exits_2(self, runner):
        assert runner.invoke(main, ["generator", "4"]).exit_code == 2


class TestBracket:
    def test_reduced_bracket(self, runner):
        result = runner.invoke(main, ["bracket", "3", "5", "--reduced"])
        assert result.exit_code == 0
        assert "x1" in result.output


class TestCoaction:
    def test_single_term(self, runner):
        result = runner.invoke(main, ["coaction", "101", "--r", "1"])
        assert result.exit_code == 0
        assert result.output.strip() == "I(0;101;1) (x) I(0;1)"


class TestVerify:
    def test_pass_exits_0(self, runner):
        result = runner.invoke(main, ["verify", "--suite", "parity_endpoint", "--max-weight", "8"])
        assert result.exit_code == 0
        assert "all pass" in result.output

    def test_structured_output(self, runner):
        result = runner.invoke(
            main,
            ["verify", "--suite", "depth_support", "--max-weight", "7", "--format", "structured"],
        )
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["all_pass"] is True
        assert data["reports"][0]["relation_name"] == "depth_support"
        assert "version" in data and "config" in data

    def test_unknown_suite_exits_2(self, runner):
        assert runner.invoke(main, ["verify", "--suite", "nope"]).exit_code == 2

    def test_relation_failure_exits_1(self, runner, monkeypatch):
        original = blockpoly.half_generator

        def mutated(k):
            q = original(k)
            if k == 2:
                exps = (3, 4)
                q = q + CPoly.monomial(exps, -2 * q.coeff(exps), nvars=2)
            return q

        monkeypatch.setattr(blockpoly, "half_generator", mutated)
        result = runner.invoke(
            main,
            ["verify", "--suite", "differential", "--max-weight", "7", "--max-block-degree", "1"],
        )
        assert result.exit_code == 1
        assert "counterexample" in result.output


class TestReport:
    def test_config_file(self, runner, tmp_path):
        cfg = tmp_path / "bounds.cfg"
        cfg.write_text(
            "# small deterministic run\n"
            "max_weight = 7\n"
            "max_block_degree = 1\n"
            "suites = duality, depth_support\n"
            "output_format = structured\n"
        )
        result = runner.invoke(main, ["report", "--config", str(cfg)])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert [r["relation_name"] for r in data["reports"]] == ["duality", "depth_support"]

    def test_reports_reproducible(self, runner, tmp_path):
        cfg = tmp_path / "bounds.cfg"
        cfg.write_text("max_weight = 6\nsuites = coaction_grading\noutput_format = structured\n")
        first = runner.invoke(main, ["report", "--config", str(cfg)])
        second = runner.invoke(main, ["report", "--config", str(cfg)])
        assert first.output == second.output

    def test_unknown_key_exits_2(self, runner, tmp_path):
        cfg = tmp_path / "bad.cfg"
        cfg.write_text("wibble = 3\n")
        assert runner.invoke(main, ["report", "--config", str(cfg)]).exit_code == 2
