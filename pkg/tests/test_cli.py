import json
import subprocess
import sys

import pytest

from afposet.cli import main

VEE_FILE = """\
# wedge of two arrows
points: x1 x2 x3
order: x1 <= x2
order: x1 <= x3
"""

SPHERE_FILE = """\
points: x1 x2 x3 x4 x5 x6
basis: {x1}
basis: {x2}
basis: {x1,x2,x3}
basis: {x1,x2,x4}
basis: {x1,x2,x3,x4,x5}
basis: {x1,x2,x3,x4,x6}
"""

COVERING_FILE = """\
points: p1 p2 p3 p4 p5 p6 p7 p8
cover: {p1,p2}
cover: {p5,p6}
cover: {p1,p2,p3,p4,p5,p6}
cover: {p5,p6,p7,p8,p1,p2}
"""

PENROSE_FILE = """\
2
1 1
1 0
"""

NON_T0_FILE = """\
points: a b
basis: {a,b}
"""


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, content in (("vee.poset", VEE_FILE),
                          ("sphere.poset", SPHERE_FILE),
                          ("circle8.cover", COVERING_FILE),
                          ("penrose.matrix", PENROSE_FILE),
                          ("non_t0.poset", NON_T0_FILE)):
        path = tmp_path / name
        path.write_text(content)
        paths[name] = str(path)
    return paths


def run(capsys, argv):
    rc = main(argv)
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


class TestQuotient:
    def test_text_output(self, files, capsys):
        rc, out, _ = run(capsys, ["quotient", files["circle8.cover"]])
        assert rc == 0
        assert out == (
            "points: p1 p3 p5 p7\n"
            "order: p1 <= p3\n"
            "order: p1 <= p7\n"
            "order: p5 <= p3\n"
            "order: p5 <= p7\n"
        )

    def test_dot_output(self, files, capsys):
        rc, out, _ = run(capsys,
                         ["quotient", files["circle8.cover"], "--format", "dot"])
        assert rc == 0
        assert out.startswith("digraph")


class TestPosetCheck:
    def test_summary(self, files, capsys):
        rc, out, _ = run(capsys, ["poset-check", files["vee.poset"]])
        assert rc == 0
        assert out == (
            "points: x1 x2 x3\n"
            "order: x1 <= x2\n"
            "order: x1 <= x3\n"
            "levels: 2\n"
            "links: 2\n"
            "closed sets: 4\n"
        )

    def test_json_lines(self, files, capsys):
        rc, out, _ = run(capsys, ["poset-check", files["vee.poset"],
                                  "--format", "json-lines"])
        assert rc == 0
        record = json.loads(out.strip())
        assert record == {"kind": "poset-check", "points": ["x1", "x2", "x3"],
                          "levels": 2, "links": 2, "closed_sets": 4}


class TestBratteli:
    def test_level_dump(self, files, capsys):
        rc, out, _ = run(capsys,
                         ["bratteli", files["vee.poset"], "--depth", "5"])
        assert rc == 0
        assert out == (
            "1 | 1 ; 1\n"
            "1 1 | 1 1 ; 0 1 ; 0 1\n"
            "2 1 1 | 1 1 1 ; 0 1 0 ; 0 0 1\n"
            "4 1 1 | 1 1 1 ; 0 1 0 ; 0 0 1\n"
            "6 1 1\n"
        )

    def test_json_lines_records(self, files, capsys):
        rc, out, _ = run(capsys, ["bratteli", files["vee.poset"],
                                  "--depth", "5", "--format", "json-lines"])
        assert rc == 0
        records = [json.loads(line) for line in out.splitlines()]
        assert records[-1] == {"kind": "stable", "level": 2}
        assert records[0]["dims"] == [1]

    def test_dot(self, files, capsys):
        rc, out, _ = run(capsys, ["bratteli", files["vee.poset"],
                                  "--depth", "4", "--format", "dot"])
        assert rc == 0
        assert out.startswith("digraph")


class TestSpectrum:
    def test_text(self, files, capsys):
        rc, out, _ = run(capsys, ["spectrum", files["vee.poset"]])
        assert rc == 0
        assert out == (
            "{x1,x2,x3} primitive=no\n"
            "{x1,x2} primitive=yes\n"
            "{x1,x3} primitive=yes\n"
            "{x1} primitive=no\n"
            "0 primitive=yes\n"
            "prim poset:\n"
            "points: 0 {x1,x2} {x1,x3}\n"
            "order: 0 <= {x1,x2}\n"
            "order: 0 <= {x1,x3}\n"
        )


class TestKTheory:
    def test_k0_from_poset(self, files, capsys):
        rc, out, _ = run(capsys, ["k0", files["sphere.poset"]])
        assert rc == 0
        assert out == "K0 = Z^6, det(T) = 1\n"

    def test_k0_from_matrix(self, files, capsys):
        rc, out, _ = run(capsys,
                         ["k0", "--matrix", files["penrose.matrix"]])
        assert rc == 0
        assert out == "K0 = Z^2, det(T) = -1\n"

    def test_cone_unipotent(self, files, capsys):
        rc, out, _ = run(capsys, ["cone", files["vee.poset"]])
        assert rc == 0
        assert "nilpotency index 2" in out

    def test_cone_perron(self, files, capsys):
        rc, out, _ = run(capsys,
                         ["cone", "--matrix", files["penrose.matrix"]])
        assert rc == 0
        assert "lambda = 1.6180339887" in out

    def test_member(self, files, capsys):
        for vector, expected in (("0,0", "in-cone(0)\n"),
                                 ("1,-1", "in-cone(1)\n"),
                                 ("-1,1", "not-in-cone\n")):
            rc, out, _ = run(capsys,
                             ["member", "--matrix", files["penrose.matrix"],
                              f"--vector={vector}"])
            assert rc == 0
            assert out == expected

    def test_roundtrip_ok(self, files, capsys):
        rc, out, _ = run(capsys, ["roundtrip", files["vee.poset"]])
        assert rc == 0
        assert out == "roundtrip: OK\n"


class TestExitCodes:
    def test_parse_error_is_2(self, files, capsys, tmp_path):
        bad = tmp_path / "bad.poset"
        bad.write_text("nonsense\n")
        rc, _, err = run(capsys, ["poset-check", str(bad)])
        assert rc == 2
        assert "parse error" in err

    def test_missing_file_is_2(self, capsys):
        rc, _, _ = run(capsys, ["poset-check", "/nonexistent.poset"])
        assert rc == 2

    def test_missing_input_for_k0_is_2(self, capsys):
        rc, _, _ = run(capsys, ["k0"])
        assert rc == 2

    def test_domain_error_is_1(self, files, capsys):
        rc, _, err = run(capsys, ["poset-check", files["non_t0.poset"]])
        assert rc == 1
        assert "error" in err

    def test_non_unimodular_is_1(self, files, capsys, tmp_path):
        doubling = tmp_path / "doubling.matrix"
        doubling.write_text("1\n2\n")
        rc, _, _ = run(capsys, ["k0", "--matrix", str(doubling)])
        assert rc == 1

    def test_shallow_depth_is_1(self, files, capsys):
        rc, _, _ = run(capsys, ["k0", files["vee.poset"], "--depth", "2"])
        assert rc == 1

    def test_bad_option_values_are_2(self, files, capsys):
        assert run(capsys, ["bratteli", files["vee.poset"],
                            "--depth", "0"])[0] == 2
        assert run(capsys, ["member", "--matrix", files["penrose.matrix"],
                            "--vector", "1,1", "--m-max", "-1"])[0] == 2
        assert run(capsys, ["cone", "--matrix", files["penrose.matrix"],
                            "--tolerance", "0"])[0] == 2

    def test_wrong_vector_length_is_1(self, files, capsys):
        rc, _, _ = run(capsys, ["member", "--matrix", files["penrose.matrix"],
                                "--vector", "1,2,3"])
        assert rc == 1


class TestOutputFile:
    def test_output_option(self, files, capsys, tmp_path):
        target = tmp_path / "report.txt"
        rc, out, _ = run(capsys, ["k0", files["sphere.poset"],
                                  "--output", str(target)])
        assert rc == 0
        assert out == ""
        assert target.read_text() == "K0 = Z^6, det(T) = 1\n"


class TestConsoleEntry:
    def test_module_invocation(self, files):
        result = subprocess.run(
            [sys.executable, "-m", "afposet.cli", "k0", files["sphere.poset"]],
            capture_output=True, text=True)
        assert result.returncode == 0
        assert result.stdout == "K0 = Z^6, det(T) = 1\n"
