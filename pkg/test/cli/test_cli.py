# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
import csv
import io
import json

import pytest

from splitline.cli import OutputFormat, RunConfig, build_parser, config_from_args, main
from splitline.exceptions import InvalidInputError
from splitline.io import read_comb, write_comb
from splitline.oracle import ExactField
from splitline.splitcalc import SplitType
from splitline.treebundle import build_comb


@pytest.fixture
def comb_path(tmp_path):
    path = tmp_path / "comb.json"
    write_comb(build_comb(SplitType((0, 0)), [SplitType((0, -1))] * 4), path)
    return path


@pytest.mark.unit
class TestRunConfig:
    def test_unknown_command(self):
        with pytest.raises(InvalidInputError, match="Unknown command 'draw'"):
            RunConfig("draw")

    def test_csv_only_for_tables(self):
        with pytest.raises(InvalidInputError, match="CSV output is only available"):
            RunConfig("pn", {"n": 3, "e": 3}, output_format="csv")

    def test_from_args(self):
        args = build_parser().parse_args(
            ["interp", "--n", "4", "--d", "3", "--emax", "40", "--field", "rationals"]
        )
        config = config_from_args(args)
        assert config.command == "interp"
        assert config.params == {"n": 4, "d": 3, "emin": 1, "emax": 40}
        assert config.field == ExactField.rationals()
        assert config.output_format is OutputFormat.TEXT


@pytest.mark.unit
class TestPipelines:
    def test_pn(self, capsys):
        assert main(["pn", "--n", "3", "--e", "3"]) == 0
        assert capsys.readouterr().out == "(5,5)\n"

    def test_fan_json(self, capsys):
        assert main(["fan", "--n", "5", "--e", "20", "--format", "json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["schema_version"] == 1
        assert report["kind"] == "fan"
        assert report["predicted"] == [6, 6, 6]
        assert report["parameters"]["e1"] == 4

    def test_fang_witness(self, capsys):
        assert main(["fang", "--n", "4", "--d", "3", "--e", "5"]) == 0
        assert capsys.readouterr().out == "(4,4)\n"

    def test_fang_not_accessible(self, capsys):
        assert main(["fang", "--n", "4", "--d", "3", "--e", "4"]) == 1
        assert "splitline: error: Degree 4 is not accessible" in capsys.readouterr().err

    def test_domain_error(self, capsys):
        assert main(["pn", "--n", "3", "--e", "2"]) == 1
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "Need e >= n" in captured.err

    def test_output_file(self, tmp_path, capsys):
        target = tmp_path / "pn.txt"
        assert main(["pn", "--n", "4", "--e", "5", "--output", str(target)]) == 0
        assert target.read_text() == "(8,8,7)\n"
        assert capsys.readouterr().out == ""


@pytest.mark.unit
class TestSplit:
    def test_text(self, capsys):
        assert main(["split", "1,1,0", "--twist", "-2"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "type (1,1,0)"
        assert "h((1,1,0)(-2)) = (0, 1)" in lines

    def test_json(self, capsys):
        assert main(["split", "1,1,0", "--modify", "2", "--kernel", "2", "--format", "json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["degrees"] == [1, 1, 0]
        assert report["balance"]["balanced"] is True
        assert report["modification"] == [0, 0, 0]
        assert report["kernel"] == [0, 0]
        assert report["rigid"] is True

    def test_extension_floors_differ(self, capsys):
        assert main(["split", "1,1", "--extend", "3"]) == 1
        assert "Slope floors differ" in capsys.readouterr().err

    def test_bad_degrees(self):
        with pytest.raises(SystemExit) as info:
            main(["split", "1,a"])
        assert info.value.code == 2


@pytest.mark.unit
class TestTree:
    def test_text(self, comb_path, capsys):
        assert main(["tree", str(comb_path)]) == 0
        assert capsys.readouterr().out.splitlines()[0] == "predicted (-2,-2)"

    def test_cohomology(self, comb_path, capsys):
        assert main(["tree", str(comb_path), "--cohomology", "--seed", "3"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert "h(E) = (0, 2)" in lines
        assert "h(End E) = (5, 1), chi 4" in lines

    def test_json_report_is_a_comb_file(self, comb_path, tmp_path):
        report = tmp_path / "report.json"
        assert main(["tree", str(comb_path), "--format", "json", "--output", str(report)]) == 0
        assert read_comb(report) == read_comb(comb_path)
        assert json.loads(report.read_text())["k"] == -4

    def test_missing_base(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text('{"schema_version": 1, "components": []}')
        assert main(["tree", str(path)]) == 1
        assert "at least one component" in capsys.readouterr().err


@pytest.mark.unit
class TestInterp:
    def test_csv(self, capsys):
        assert main(["interp", "--n", "4", "--d", "3", "--emax", "40", "--format", "csv"]) == 0
        rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
        assert [int(r["e"]) for r in rows if r["accessible"] == "1"] == list(range(5, 41, 3))

    def test_text(self, capsys):
        assert main(["interp", "--n", "4", "--d", "3", "--emax", "40"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("n=4, d=3: accessible residues mod 6: 2 5\n")

    def test_short_window(self, capsys):
        assert main(["interp", "--n", "4", "--d", "3", "--emax", "10"]) == 1
        assert "must reach 17" in capsys.readouterr().err


@pytest.mark.unit
class TestUsage:
    @pytest.mark.parametrize(
        "argv",
        [
            ["pn", "--n", "3", "--e", "3", "--format", "csv"],
            ["pn", "--n", "3", "--e", "3", "--field", "reals"],
            ["pn", "--n", "3"],
            ["draw"],
            [],
        ],
    )
    def test_exit_two(self, argv):
        with pytest.raises(SystemExit) as info:
            main(argv)
        assert info.value.code == 2

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["--version"])
        assert info.value.code == 0
        assert capsys.readouterr().out.startswith("splitline ")


@pytest.mark.unit
class TestVerify:
    def test_csv(self, capsys):
        argv = ["verify", "--seeds", "1", "--checks", "duality", "numerology", "--format", "csv"]
        assert main(argv) == 0
        assert capsys.readouterr().out.splitlines()[0] == "check,cases,mismatches,passed"

    def test_reproducible(self, capsys):
        argv = ["verify", "--seeds", "2", "--checks", "comb_bound", "--quick", "--format", "json"]
        main(argv)
        first = capsys.readouterr().out
        main(argv)
        assert capsys.readouterr().out == first
        assert json.loads(first)["seeds"] == [0, 1]
