import io
import json

import pytest

from leavitt import parse_element, parse_graph
from leavitt.cli import main

from .util import GRAPH_B, GRAPH_C, GRAPH_CHAIN


@pytest.fixture()
def graph_file(tmp_path):
    p = tmp_path / "chain.lpa"
    p.write_text(GRAPH_CHAIN)
    return str(p)


@pytest.fixture()
def graph_c_file(tmp_path):
    p = tmp_path / "c.lpa"
    p.write_text(GRAPH_C)
    return str(p)


@pytest.fixture()
def graph_b_file(tmp_path):
    p = tmp_path / "b.lpa"
    p.write_text(GRAPH_B)
    return str(p)


@pytest.fixture()
def z2_degrees_file(tmp_path):
    p = tmp_path / "z2.deg"
    p.write_text("group Z/2\ndeg e = 1\ndeg f = 1\n")
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestElementCommands:
    def test_nf_expr(self, capsys, graph_file):
        code, out, _ = run(capsys, "nf", "--graph", graph_file, "--expr", "f2*.f2")
        assert code == 0
        assert out.strip() == "v3"

    def test_nf_stdin(self, capsys, graph_file, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("f1.(f1)* + f2.(f2)*\n"))
        code, out, _ = run(capsys, "nf", "--graph", graph_file)
        assert code == 0
        assert out.strip() == "v2"

    def test_mul(self, capsys, graph_file):
        code, out, _ = run(
            capsys, "mul", "--graph", graph_file,
            "--expr", "f2.(f4.f3)*", "--expr", "f4.f3.(f2)*",
        )
        assert code == 0
        assert out.strip() == "f2.(f2)*"

    def test_involve(self, capsys, graph_file):
        code, out, _ = run(capsys, "involve", "--graph", graph_file, "--expr", "f4.f3")
        assert code == 0
        assert out.strip() == "(f4.f3)*"

    def test_decompose(self, capsys, graph_file):
        code, out, _ = run(
            capsys, "decompose", "--graph", graph_file, "--expr", "v1 + f1"
        )
        assert code == 0
        assert out.splitlines() == ["0: v1", "1: f1"]

    def test_roundtrip_of_printed_elements(self, capsys, graph_file):
        graph = parse_graph(GRAPH_CHAIN)
        from leavitt import INTEGERS

        for expr in ("f2.(f4.f3)* - 3*v1", "f1.(f1)*", "2*f4.f3 + (f2)*"):
            code, out, _ = run(capsys, "nf", "--graph", graph_file, "--expr", expr)
            assert code == 0
            reparsed = parse_element(out.splitlines()[0], graph, INTEGERS)
            assert reparsed == parse_element(expr, graph, INTEGERS)


class TestEpsilonCommands:
    def test_epsilon_text(self, capsys, graph_file):
        code, out, _ = run(
            capsys, "epsilon", "--graph", graph_file, "-g", "1", "--bound", "4"
        )
        assert code == 0
        assert out.splitlines()[0] == "v2 + v4 + v5"

    def test_epsilon_absent_infinite(self, capsys, graph_c_file):
        code, out, _ = run(
            capsys, "epsilon", "--graph", graph_c_file, "-g", "1", "--bound", "3"
        )
        assert code == 1
        assert "ABSENT" in out and "witness" in out

    def test_xg(self, capsys, graph_file):
        code, out, _ = run(
            capsys, "xg", "--graph", graph_file, "-g", "1", "--bound", "4"
        )
        assert code == 0
        assert out.splitlines() == ["f1", "f2", "f3", "f4", "f4.f3.(f2)*"]

    def test_localunits(self, capsys, graph_file):
        code, out, _ = run(
            capsys, "localunits", "--graph", graph_file,
            "--expr", "f2 + f4.f3.(f2)*",
        )
        assert code == 0
        assert "left: v5 + f2.(f2)*" in out


class TestCheckCommands:
    def test_epsilon_strong_fail_graph_c(self, capsys, graph_c_file):
        code, out, _ = run(
            capsys, "check", "--graph", graph_c_file,
            "--property", "epsilon-strong", "--window", "-1..1", "--bound", "3",
        )
        assert code == 1
        assert "NOT_EPSILON_STRONG" in out
        assert "f1" in out and "f2" in out

    def test_strongly_graded_agreement(self, capsys, graph_b_file):
        code, out, _ = run(
            capsys, "check", "--graph", graph_b_file,
            "--property", "strongly-graded", "--window", "-2..2", "--bound", "4",
        )
        assert code == 1
        assert "NOT_STRONG" in out
        assert "agreement: True" in out

    def test_symmetric_pass(self, capsys, graph_file):
        code, out, _ = run(
            capsys, "check", "--graph", graph_file,
            "--property", "symmetric", "--bound", "4",
        )
        assert code == 0
        assert "PASS" in out

    def test_nearly_epsilon_sampled(self, capsys, graph_c_file):
        code, out, _ = run(
            capsys, "check", "--graph", graph_c_file,
            "--property", "nearly-epsilon", "--bound", "3",
            "--samples", "10", "--seed", "4",
        )
        assert code == 0
        assert "samples-verified: 10" in out

    def test_nondegenerate_expr(self, capsys, graph_file):
        code, out, _ = run(
            capsys, "check", "--graph", graph_file,
            "--property", "nondegenerate", "--bound", "3", "--expr", "f1",
        )
        assert code == 0
        assert "right-witness: v1" in out

    def test_grading_axiom(self, capsys, graph_file):
        code, out, _ = run(
            capsys, "check", "--graph", graph_file,
            "--property", "grading", "--bound", "2",
        )
        assert code == 0


class TestFrobeniusCommand:
    def test_pass(self, capsys, graph_b_file, z2_degrees_file):
        code, out, _ = run(
            capsys, "frobenius", "--graph", graph_b_file,
            "--degrees", z2_degrees_file, "--bound", "4",
            "--samples", "20", "--triples", "10", "--seed", "7",
        )
        assert code == 0
        assert "PASS" in out

    def test_needs_finite_group(self, capsys, graph_b_file):
        code, _, err = run(
            capsys, "frobenius", "--graph", graph_b_file, "--bound", "4",
        )
        assert code == 65
        assert "not finite" in err


class TestStructuredOutput:
    def test_json_and_determinism(self, capsys, graph_file):
        args = (
            "check", "--graph", graph_file, "--property", "epsilon-strong",
            "--window", "-2..2", "--bound", "4", "--output", "structured",
        )
        code1, out1, _ = run(capsys, *args)
        code2, out2, _ = run(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2
        doc = json.loads(out1)
        assert doc["verdict"] == "EPSILON_STRONG"
        assert doc["kind"] == "epsilon-strong-check"

    def test_seeded_determinism(self, capsys, graph_c_file):
        args = (
            "check", "--graph", graph_c_file, "--property", "nearly-epsilon",
            "--bound", "3", "--samples", "8", "--seed", "21",
            "--output", "structured",
        )
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2

    def test_epsilon_structured(self, capsys, graph_file):
        code, out, _ = run(
            capsys, "epsilon", "--graph", graph_file, "-g", "-1", "--bound", "4",
            "--output", "structured",
        )
        doc = json.loads(out)
        assert doc["epsilon"] == "v1 + v3 + v4 + f2.(f2)*"
        assert doc["bound"] == 4

    def test_epsilon_structured_golden_document(self, capsys, graph_file):
        code, out, _ = run(
            capsys, "epsilon", "--graph", graph_file, "-g", "2", "--bound", "4",
            "--output", "structured",
        )
        assert code == 0
        assert json.loads(out) == {
            "kind": "epsilon-report",
            "verdict": "PRESENT",
            "degree": "2",
            "bound": 4,
            "minimal-verdict": "complete",
            "minimal-classes": ["f4.f3"],
            "epsilon": "v5",
            "certificate": [["f4.f3", "(f4.f3)*"]],
            "identity-checked-on": 2,
        }


class TestErrors:
    def test_usage_error(self, capsys, graph_file):
        code, _, err = run(capsys, "check", "--graph", graph_file, "--bound", "3")
        assert code == 64

    def test_bad_bound(self, capsys, graph_file):
        code, _, err = run(
            capsys, "xg", "--graph", graph_file, "-g", "1", "--bound", "0"
        )
        assert code == 64

    def test_window_not_inverse_closed(self, capsys, graph_file):
        code, _, err = run(
            capsys, "check", "--graph", graph_file,
            "--property", "epsilon-strong", "--window", "0..2", "--bound", "3",
        )
        assert code == 64
        assert "inverse" in err

    def test_parse_error_names_token(self, capsys, graph_file):
        code, _, err = run(capsys, "nf", "--graph", graph_file, "--expr", "f9")
        assert code == 65
        assert "f9" in err

    def test_missing_graph_file(self, capsys):
        code, _, err = run(capsys, "nf", "--graph", "/nonexistent.lpa", "--expr", "0")
        assert code == 65

    def test_bad_graph_text(self, capsys, tmp_path):
        p = tmp_path / "bad.lpa"
        p.write_text("vertices a a;")
        code, _, err = run(capsys, "nf", "--graph", str(p), "--expr", "0")
        assert code == 65
        assert "duplicate" in err

    def test_nonhomogeneous_localunits(self, capsys, graph_file):
        code, _, err = run(
            capsys, "localunits", "--graph", graph_file, "--expr", "v1 + f1"
        )
        assert code == 65
