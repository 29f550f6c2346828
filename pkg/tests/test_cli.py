from pathlib import Path

import pytest
from click.testing import CliRunner

from dimalg.cli import main

DATA = Path(__file__).parent / "data"
REPO = Path(__file__).parent.parent / "data"
REGISTRY = str(REPO / "registries" / "si_demo.json")


@pytest.fixture
def runner():
    return CliRunner()


class TestEval:
    def test_combined_flow(self, runner):
        r = runner.invoke(main, ["eval", "2.2 L/min + 2.1 L/min", "--registry", REGISTRY])
        assert r.exit_code == 0
        assert r.output.strip() == "4.300 L/min"

    def test_eval_with_conversion(self, runner):
        r = runner.invoke(main, [
            "eval", "300 cm^3 / (2.2 L/min + 2.1 L/min)",
            "--registry", REGISTRY, "--to", "s",
        ])
        assert r.exit_code == 0
        assert r.output.strip() == "4.186 s"

    def test_exact_flag(self, runner):
        r = runner.invoke(main, [
            "eval", "300 cm^3 / (2.2 L/min + 2.1 L/min)",
            "--registry", REGISTRY, "--to", "min", "--exact",
        ])
        assert r.output.strip() == "3/43 min"

    def test_digits_flag(self, runner):
        r = runner.invoke(main, [
            "eval", "300 cm^3 / (2.2 L/min + 2.1 L/min)",
            "--registry", REGISTRY, "--to", "min", "--digits", "2",
        ])
        assert r.output.strip() == "0.070 min"

    def test_dimension_mismatch_exits_1(self, runner):
        r = runner.invoke(main, ["eval", "1 m + 1 s", "--registry", REGISTRY])
        assert r.exit_code == 1
        assert "length" in r.output and "time" in r.output

    def test_syntax_error_exits_2(self, runner):
        r = runner.invoke(main, ["eval", "1 +", "--registry", REGISTRY])
        assert r.exit_code == 2

    def test_unknown_unit_exits_2(self, runner):
        r = runner.invoke(main, ["eval", "1 parsec", "--registry", REGISTRY])
        assert r.exit_code == 2
        assert "parsec" in r.output

    def test_missing_registry_exits_2(self, runner):
        r = runner.invoke(main, ["eval", "1 m"])
        assert r.exit_code == 2

    def test_nonpositive_digits_exit_2(self, runner):
        r = runner.invoke(main, ["eval", "1 m", "--registry", REGISTRY, "--digits", "0"])
        assert r.exit_code == 2


class TestConvert:
    def test_cup_in_litres(self, runner):
        r = runner.invoke(main, ["convert", "300 cm^3", "L", "--registry", REGISTRY])
        assert r.exit_code == 0
        assert r.output.strip() == "0.3000 L"

    def test_incompatible_units_exit_1(self, runner):
        r = runner.invoke(main, ["convert", "1 m", "s", "--registry", REGISTRY])
        assert r.exit_code == 1


class TestRegistryValidate:
    def test_valid_registry(self, runner):
        r = runner.invoke(main, ["registry", "validate", REGISTRY])
        assert r.exit_code == 0
        assert "2 base dimensions" in r.output

    def test_broken_registry(self, runner, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"base": ["length"], "units": []}')
        r = runner.invoke(main, ["registry", "validate", str(bad)])
        assert r.exit_code == 2


class TestCheck:
    def test_golden_structure_exits_0(self, runner):
        r = runner.invoke(main, ["check", str(REPO / "structures" / "product_ring_mod5_z2.json")])
        assert r.exit_code == 0
        assert "PASS" in r.output and "FAIL" not in r.output

    @pytest.mark.parametrize("fixture", [
        "broken_associativity.json",
        "broken_absorbency.json",
        "zero_slice_no_unit.json",
    ])
    def test_mutated_fixtures_exit_1_with_witness(self, runner, fixture):
        r = runner.invoke(main, ["check", str(DATA / fixture)])
        assert r.exit_code == 1
        assert "FAIL" in r.output

    def test_shape_error_exits_2(self, runner):
        r = runner.invoke(main, ["check", str(DATA / "undeclared_dimension.json")])
        assert r.exit_code == 2


class TestPoisson:
    def test_check_canonical(self, runner):
        r = runner.invoke(main, ["poisson", "check", str(REPO / "poisson" / "canonical_qp.json")])
        assert r.exit_code == 0
        assert "bracket closes on generator pairs" in r.output

    def test_check_broken_antisymmetry_exits_1(self, runner):
        r = runner.invoke(main, [
            "poisson", "check", str(DATA / "poisson_broken_antisymmetry.json")
        ])
        assert r.exit_code == 1
        assert "FAIL" in r.output

    def test_bracket_command(self, runner):
        r = runner.invoke(main, [
            "poisson", "bracket", str(REPO / "poisson" / "canonical_qp.json"),
            "q^2", "p",
        ])
        assert r.exit_code == 0
        assert r.output.strip() == "2*q"

    def test_reduce_command(self, runner):
        r = runner.invoke(main, [
            "poisson", "reduce", str(REPO / "poisson" / "canonical_qp.json"),
            "--cutoff", "6",
        ])
        assert r.exit_code == 0
        assert "1 classes" in r.output

    def test_reduce_four_generators(self, runner):
        r = runner.invoke(main, [
            "poisson", "reduce", str(REPO / "poisson" / "canonical_4gen.json"),
            "--cutoff", "4",
        ])
        assert r.exit_code == 0
        assert "q2" in r.output and "q1" not in r.output.replace("q1)", "")

    def test_reduce_needs_positive_cutoff(self, runner):
        r = runner.invoke(main, [
            "poisson", "reduce", str(REPO / "poisson" / "canonical_qp.json"),
            "--cutoff", "0",
        ])
        assert r.exit_code == 2

    def test_bad_file_exits_2(self, runner, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("[]")
        r = runner.invoke(main, ["poisson", "check", str(bad)])
        assert r.exit_code == 2
