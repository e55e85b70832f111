import json
import re
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from wedge.cli import main
from wedge.geometry import build_bm15285_figure, build_ybc7289_figure
from wedge.render import render_svg

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def scripts(tmp_path):
    good = tmp_path / "good.ct"
    good.write_text("point A 0 0\npoint B 4 0\npoint C 0 3\ntriangle T A B C\nassert_area T 6\n")
    failing = tmp_path / "failing.ct"
    failing.write_text("point A 0 0\npoint B 4 0\npoint C 0 3\ntriangle T A B C\nassert_area T 7\n")
    malformed = tmp_path / "bad.ct"
    malformed.write_text("point A 0 0\npoint B 1/0 0\n")
    geometry = tmp_path / "parallel.ct"
    geometry.write_text(
        "point A 0 0\npoint B 1 0\npoint C 0 1\npoint D 1 1\n"
        "line l through A B\nline m through C D\nintersect X l m\n"
    )
    return {"good": good, "failing": failing, "malformed": malformed, "parallel": geometry}


class TestConstruct:
    def test_bm15285(self, capsys, tmp_path):
        svg, js = tmp_path / "fig1.svg", tmp_path / "fig1.json"
        code, out, _ = run(capsys, "construct", "--builtin", "bm15285_p12", "--side", "60",
                           "--svg", str(svg), "--json", str(js))
        assert code == 0
        assert "T = 225" in out.splitlines()
        assert "total = 3600" in out.splitlines()
        assert len(re.findall(r"^T\d+ \w{3} area 225$", out, re.M)) == 16
        assert svg.read_bytes() == (GOLDEN / "bm15285_p12_side60.svg").read_bytes()
        assert js.read_bytes() == (GOLDEN / "bm15285_p12_side60.json").read_bytes()

    def test_ybc7289(self, capsys, tmp_path):
        svg, js = tmp_path / "y.svg", tmp_path / "y.json"
        code, out, _ = run(capsys, "construct", "--builtin", "ybc7289", "--side", "30",
                           "--json", str(js), "--svg", str(svg))
        assert code == 0
        assert "diag_sq = 1800" in out
        assert js.read_bytes() == (GOLDEN / "ybc7289_side30.json").read_bytes()
        assert svg.read_bytes() == (GOLDEN / "ybc7289_side30.svg").read_bytes()

    def test_default_side(self, capsys):
        code, out, _ = run(capsys, "construct", "--builtin", "bm15285_p12")
        assert code == 0 and "T = 225" in out

    def test_script_matrix(self, capsys, scripts):
        assert run(capsys, "construct", str(scripts["good"]))[0] == 0
        code, out, _ = run(capsys, "construct", str(scripts["failing"]))
        assert code == 1 and "FAIL" in out and "actual 6" in out
        code, _, err = run(capsys, "construct", str(scripts["malformed"]))
        assert code == 2 and ":2:9:" in err
        code, _, err = run(capsys, "construct", str(scripts["parallel"]))
        assert code == 2 and ":7:1:" in err

    @pytest.mark.parametrize(
        "argv",
        [
            ["construct"],
            ["construct", "--builtin", "nope"],
            ["construct", "/nonexistent/x.ct"],
            ["construct", "--builtin", "bm15285_p12", "--side", "-1"],
            ["construct", "--builtin", "bm15285_p12", "--side", "0"],
            ["construct", "--builtin", "bm15285_p12", "--side", "1.5"],
            ["construct", "x.ct", "--builtin", "ybc7289"],
        ],
    )
    def test_usage_errors(self, capsys, argv):
        assert run(capsys, *argv)[0] == 2

    def test_side_substitution_in_file(self, capsys, tmp_path):
        f = tmp_path / "s.ct"
        f.write_text("square A B C D from 0 0 side $side\n")
        assert run(capsys, "construct", str(f))[0] == 2
        assert run(capsys, "construct", str(f), "--side", "7/3")[0] == 0


class TestVerify:
    def test_bm15285(self, capsys):
        code, out, _ = run(capsys, "verify", "bm15285", "--side", "60")
        assert code == 0
        assert out.count("PASS") == 6 and "FAIL" not in out
        assert "(LM)^2 + (MN)^2 = (LN)^2: 1800 = 1800" in out

    def test_ybc7289(self, capsys):
        code, out, _ = run(capsys, "verify", "ybc7289")
        assert code == 0
        assert out.count("PASS") == 5
        for text in ("1;24,51,10", "0;42,25,35", "42;25,35", "1800 = 1800"):
            assert text in out

    def test_negative_side(self, capsys):
        assert run(capsys, "verify", "bm15285", "--side", "-1")[0] == 2

    def test_failure_exit_code(self, capsys, monkeypatch):
        from wedge import cli, geometry

        real = geometry.build_bm15285_figure

        def tampered(side):
            fig = real(side)
            pts = dict(fig.points)
            pts["L"] = geometry.Point(16, 15)
            return geometry.Figure(pts, fig.segments, fig.triangles, fig.side)

        monkeypatch.setattr(cli.geometry, "build_bm15285_figure", tampered)
        code, out, _ = run(capsys, "verify", "bm15285")
        assert code == 1 and "FAIL" in out and "equal areas" in out

    def test_ybc_failure_exit_code(self, capsys, monkeypatch):
        from wedge import cli

        monkeypatch.setattr(cli, "YBC_SCALED", "42;25,36")
        code, out, _ = run(capsys, "verify", "ybc7289")
        assert code == 1 and "FAIL  30 x 1;24,51,10: 42;25,35 != 42;25,36" in out


class TestProve:
    def test_two(self, capsys, tmp_path):
        path = tmp_path / "cert.json"
        code, out, _ = run(capsys, "prove", "2", "--bound", "10000", "--json", str(path))
        assert code == 0
        cert = json.loads(out)
        assert cert["verdict"] == "irrational" and cert["min_defect"] == 1
        assert cert["exhaustive_bound"] == 10000
        assert json.loads(path.read_text()) == cert

    def test_nine(self, capsys):
        code, out, _ = run(capsys, "prove", "9")
        assert code == 0 and json.loads(out) == {"n": 9, "verdict": "rational", "root": 3}

    def test_three(self, capsys):
        code, out, _ = run(capsys, "prove", "3", "--bound", "200")
        assert code == 0 and json.loads(out)["verdict"] == "irrational"

    @pytest.mark.parametrize("argv", [["prove", "0"], ["prove", "-4"], ["prove", "x"], ["prove", "2", "--bound", "1"]])
    def test_bad(self, capsys, argv):
        assert run(capsys, *argv)[0] == 2


class TestSex:
    def test_approx(self, capsys):
        code, out, _ = run(capsys, "sex", "approx", "2", "--digits", "3")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "1;24,51,10"
        assert lines[2].startswith("error +0.000000599")

    def test_approx_recip(self, capsys):
        code, out, _ = run(capsys, "sex", "approx", "2", "--recip")
        assert code == 0 and out.splitlines()[0] == "0;42,25,35"

    def test_parse(self, capsys):
        code, out, _ = run(capsys, "sex", "parse", "42;25,35")
        assert code == 0
        assert Fraction(152735, 3600) == Fraction(30547, 720)
        assert out.splitlines() == ["42;25,35", "30547/720"]

    def test_heron(self, capsys):
        code, out, _ = run(capsys, "sex", "heron", "2", "--x0", "1;30", "--digits", "3")
        assert code == 0
        assert out.splitlines()[-1].split("\t")[1] == "1;24,51,10"

    @pytest.mark.parametrize(
        "argv",
        [
            ["sex", "parse", "1;60"],
            ["sex", "approx", "4"],
            ["sex", "approx", "two"],
            ["sex", "approx", "2", "--digits", "0"],
            ["sex", "heron", "2", "--x0", "0"],
            ["sex", "heron", "2", "--x0", "1;75"],
            ["sex", "frobnicate", "2"],
        ],
    )
    def test_bad(self, capsys, argv):
        assert run(capsys, *argv)[0] == 2


class TestSvg:
    def test_deterministic(self):
        fig = build_bm15285_figure(60)
        assert render_svg(fig) == render_svg(build_bm15285_figure(60))
        assert render_svg(fig, shade=True) == render_svg(fig, shade=True)

    def test_structure(self):
        svg = render_svg(build_bm15285_figure(60))
        assert 'viewBox="0.000000 0.000000 60.000000 60.000000"' in svg
        assert svg.count("<circle") == 13
        assert svg.count("<line") == 14
        assert "<polygon" not in svg
        # A sits bottom left after the y flip
        assert '<circle id="pt-A" cx="0.000000" cy="60.000000"' in svg

    def test_shade(self):
        svg = render_svg(build_bm15285_figure(60), shade=True)
        fills = re.findall(r'<polygon id="T\d+" points="[^"]+" fill="([^"]+)"', svg)
        assert len(fills) == 16
        assert fills[0::2] == ["#e8d8b0"] * 8 and fills[1::2] == ["#b08d57"] * 8

    def test_ybc(self):
        svg = render_svg(build_ybc7289_figure(30))
        assert svg.count("<line") == 6
        assert 'viewBox="0.000000 0.000000 30.000000 30.000000"' in svg

    def test_no_floats_in_output(self):
        # every number is a 6-place decimal produced from an exact rational
        svg = render_svg(build_bm15285_figure(Fraction(7, 3)), shade=True)
        for num in re.findall(r'="(-?[0-9][^"]*)"', svg):
            for tok in re.split(r"[ ,]", num):
                if tok and tok[0].isdigit() or tok.startswith("-"):
                    assert re.fullmatch(r"-?\d+\.\d{6}|1\.1|1\.0", tok), tok


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "wedge", "verify", "bm15285"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert "T = 225" in proc.stdout
