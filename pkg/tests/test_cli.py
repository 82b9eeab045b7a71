import importlib.util
import json
import sys
from dataclasses import dataclass
from io import StringIO
from pathlib import Path

import pytest

from omlkit.born import dumps_matrix, ket_projector
from omlkit.cli import run


@dataclass
class Result:
    code: int
    out: str
    err: str

    def json(self):
        return json.loads(self.out)


@pytest.fixture
def invoke(tmp_path):
    config_dir = tmp_path / "cli-config"

    def _invoke(*argv, stdin=""):
        out, err = StringIO(), StringIO()
        code = run([*argv, "--config", str(config_dir)], stdin=StringIO(stdin), stdout=out, stderr=err)
        return Result(code, out.getvalue(), err.getvalue())

    return _invoke


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write


# -- ks / rays -------------------------------------------------------------------

def test_peres_text(invoke):
    result = invoke("ks", "peres")
    assert result.code == 0
    for line in (
        "generated rays: 33 (derivation table matches)",
        "after orthogeneration: 57",
        "orthoposet elements: 116",
        "contexts: ",
        "17-generator closure matches: true",
        "two-valued states: 0",
        "verdict: no two-valued state exists",
    ):
        assert line in result.out


def test_peres_json_and_expectations(invoke):
    result = invoke("ks", "peres", "--format", "json", "--expect", "pass")
    assert result.code == 0
    doc = result.json()
    assert doc["format_version"] == 1
    assert (doc["generated"], doc["closure"], doc["poset_elements"], doc["states"]) == (33, 57, 116, 0)
    assert invoke("ks", "peres", "--expect", "fail").code == 1


def test_closure_cap_flag(invoke):
    result = invoke("ks", "peres", "--closure-cap", "5")
    assert result.code == 1
    assert "error:" in result.err


def test_rays_closure_and_contexts(invoke, write):
    path = write("frame.txt", "# two axes\n1,0,0\n0,1,0\n")
    closure = invoke("rays", "closure", path)
    assert closure.code == 0
    assert closure.out.splitlines() == ["0,0,1", "0,1,0", "1,0,0"]

    doc = invoke("rays", "closure", path, "--format", "json").json()
    assert (doc["input"], doc["count"]) == (2, 3)

    found = invoke("rays", "contexts", "-", stdin=closure.out)
    assert found.code == 0
    assert found.out == "(0 0 1),(0 1 0),(1 0 0)\n"

    doc = invoke("rays", "contexts", "-", "--format", "json", stdin=closure.out).json()
    assert doc == {
        "format_version": 1,
        "atoms": ["(0 0 1)", "(0 1 0)", "(1 0 0)"],
        "contexts": [["(0 0 1)", "(0 1 0)", "(1 0 0)"]],
    }


def test_incomplete_frames(invoke, write):
    path = write("pair.txt", "1,0,0\n0,1,0\n1,1,1\n")
    assert invoke("rays", "contexts", path).code == 1
    lenient = invoke("rays", "contexts", path, "--lenient")
    assert lenient.code == 0
    assert lenient.out == "(0 1 0),(1 0 0)\n"


# -- lattice ---------------------------------------------------------------------

def test_mo_pipes_into_check(invoke):
    mo2 = invoke("lattice", "mo", "2")
    assert mo2.code == 0
    doc = invoke("lattice", "check", "-", "--format", "json", stdin=mo2.out).json()
    assert doc["size"] == 6
    assert {r["law"]: r["holds"] for r in doc["laws"]} == {
        "distributive": False,
        "modular": True,
        "orthomodular": True,
    }


@pytest.mark.parametrize("flags, code", [
    (("--expect", "pass", "--law", "modular"), 0),
    (("--expect", "pass", "--law", "modular", "--law", "orthomodular"), 0),
    (("--expect", "pass"), 1),
    (("--expect", "fail", "--law", "distributive"), 0),
    (("--expect", "fail", "--law", "orthomodular"), 1),
])
def test_check_expectations(invoke, flags, code):
    mo2 = invoke("lattice", "mo", "2").out
    assert invoke("lattice", "check", "-", *flags, stdin=mo2).code == code


def test_check_greechie_text(invoke, write):
    path = write("triads.txt", "a,b,c\nc,d,e\n")
    result = invoke("lattice", "check", path)
    assert result.code == 0
    assert "(12 elements)" in result.out
    assert "orthomodular: true" in result.out
    assert "ortholattice identities: ok" in result.out


def test_check_refuses_a_diagram_that_fuses_atoms(invoke, write):
    path = write("pairs.txt", "a,b\na,c\nc,d\n")
    result = invoke("lattice", "check", path, "--format", "json")
    assert result.code == 1
    assert result.out == ""


def test_check_rejects_dot_format(invoke):
    mo2 = invoke("lattice", "mo", "2").out
    result = invoke("lattice", "check", "-", "--format", "dot", stdin=mo2)
    assert result.code == 2
    assert "--format dot" in result.err


def test_dot_output(invoke, write):
    path = write("triads.txt", "a,b,c\nc,d,e\n")
    assert "strict graph greechie {" in invoke("lattice", "dot", path, "--diagram").out
    assert "strict digraph hasse {" in invoke("lattice", "dot", path).out
    assert "strict digraph hasse {" in invoke("lattice", "mo", "1", "--format", "dot").out


# -- states ----------------------------------------------------------------------

def test_states_text(invoke, write):
    path = write("mo2.txt", "p-,p+\nq-,q+\n")
    result = invoke("states", path, "--list", "--seed", "p-")
    assert result.code == 0
    assert "two-valued states: 4" in result.out
    assert "unital: true  separating: true  full: true" in result.out
    assert "states with p- true: 2" in result.out


def test_states_json(invoke, write):
    path = write("triad.txt", "a,b,c\n")
    doc = invoke("states", path, "--format", "json", "--brute-force").json()
    assert doc["count"] == 3
    assert sorted([k for k, v in s.items() if v] for s in doc["states"]) == [["a"], ["b"], ["c"]]
    assert doc["contexts"] == [["a", "b", "c"]]


def test_states_expectation_on_odd_loop(invoke, write):
    path = write("loop.txt", "a,b\nb,c\nc,a\n")
    assert invoke("states", path, "--expect", "pass").code == 1
    assert invoke("states", path, "--expect", "fail").code == 0


# -- kalmbach --------------------------------------------------------------------

def test_kalmbach_text(invoke, write):
    path = write("pentagon.txt", "{}\n{a}\n{a,b}\n{c}\n{a,b,c}\n")
    result = invoke("kalmbach", path, "--expect", "pass")
    assert result.code == 0
    assert "K(P): 10 elements" in result.out
    assert "φ({c}) = [{},{c})" in result.out
    assert "two-valued states: 6  full: true" in result.out


def test_kalmbach_json(invoke):
    doc = invoke("kalmbach", "-", "--format", "json", stdin="{}\n{a}\n{b}\n{a,b}\n").json()
    assert doc["embedding_ok"] is True
    assert doc["states"]["count"] == 4
    assert len(doc["lattice"]["elements"]) == 6
    assert [c["law"] for c in doc["checks"]] == ["injective", "order", "meets", "joins", "chains"]


# -- polytope --------------------------------------------------------------------

@pytest.fixture
def pair_scheme(write):
    return write("pair.scheme", "2\n1\n2\n1 2\n")


def test_facets_text(invoke, pair_scheme):
    result = invoke("polytope", "facets", pair_scheme)
    assert result.code == 0
    assert result.out.splitlines() == [
        "# p1 p2 p12",
        "-1 0 1 <= 0",
        "0 -1 1 <= 0",
        "0 0 -1 <= 0",
        "1 1 -1 <= 1",
    ]
    pretty = invoke("polytope", "facets", pair_scheme, "--pretty")
    assert pretty.out.splitlines()[-1] == "p1 + p2 - p12 <= 1"


def test_facets_json(invoke, pair_scheme):
    doc = invoke("polytope", "facets", pair_scheme, "--format", "json").json()
    assert (doc["vertices"], doc["dimension"], len(doc["facets"])) == (4, 3, 4)
    assert doc["facets"][0] == {"coeffs": [-1, 0, 1], "bound": 0, "text": "-p1 + p12 <= 0"}


def test_member_classical(invoke, pair_scheme):
    result = invoke("polytope", "member", pair_scheme, "1/2,1/2,1/4", "--expect", "pass")
    assert result.code == 0
    assert result.out.splitlines()[0] == "classical: true"
    assert "  1/4  1 1 1" in result.out


def test_member_violation(invoke, pair_scheme):
    result = invoke("polytope", "member", pair_scheme, "1,1,0", "--expect", "pass")
    assert result.code == 1
    assert "violated: p1 + p2 - p12 <= 1  (value 2)" in result.out
    doc = invoke("polytope", "member", pair_scheme, "1,1,0", "--format", "json").json()
    assert doc["classical"] is False
    assert doc["violated"]["coeffs"] == [1, 1, -1]
    assert doc["value"] == "2"


def test_member_dimension_mismatch(invoke, pair_scheme):
    assert invoke("polytope", "member", pair_scheme, "1/2,1/2").code == 1


# -- born ------------------------------------------------------------------------

def test_ur_text(invoke):
    result = invoke("born", "ur", "1", "2", "3", "--expect", "pass")
    assert result.code == 0
    assert "eigenvalues: 3 4 5" in result.out
    assert "  a+b = 3: J1²=1 J2²=1 J3²=0" in result.out
    assert "  b+c = 5: J1²=0 J2²=1 J3²=1" in result.out


def test_rotated_json(invoke):
    doc = invoke("born", "rotated", "1", "2", "3", "--format", "json").json()
    assert doc["rotated"] is True
    assert doc["eigenvalues"] == pytest.approx([3, 4, 5])
    assert doc["matrix"][0][2] == pytest.approx([0.0, 0.5])
    assert [o["label"] for o in doc["outcomes"]] == ["a+b", "a+c", "b+c"]


def test_degenerate_ur(invoke):
    result = invoke("born", "ur", "1", "1", "2")
    assert result.code == 1
    assert "pairwise distinct" in result.err


def test_probability(invoke, write):
    rho = write("rho.json", dumps_matrix(ket_projector([1, 0])))
    projector = write("e.json", dumps_matrix(ket_projector([1, 1])))
    result = invoke("born", "probability", rho, projector)
    assert result.code == 0
    assert result.out == "0.5\n"
    doc = invoke("born", "probability", "-", projector, "--tol", "1e-6", "--format", "json",
                 stdin=dumps_matrix(ket_projector([0, 1]))).json()
    assert doc["probability"] == pytest.approx(0.5)
    assert doc["tolerance"] == 1e-6


def test_probability_rejects_non_projector(invoke, write):
    rho = write("rho.json", dumps_matrix(ket_projector([1, 0])))
    half = write("half.json", json.dumps({"format_version": 1, "dim": 2, "entries": [[0.5, 0], [0, 0.5]]}))
    assert invoke("born", "probability", rho, half).code == 1


# -- errors and configuration --------------------------------------------------------

def test_missing_file(invoke, tmp_path):
    result = invoke("states", str(tmp_path / "absent.txt"))
    assert result.code == 2
    assert "error:" in result.err


def test_malformed_input(invoke):
    assert invoke("states", "-", stdin="a,\n").code == 2
    assert invoke("lattice", "check", "-", stdin="{broken").code == 2


def test_usage_errors(invoke, capsys):
    assert invoke("no-such-command").code == 2
    assert invoke("lattice", "mo").code == 2
    assert invoke("states", "x.txt", "--format", "svg").code == 2
    capsys.readouterr()


def test_version(capsys):
    assert run(["--version"]) == 0
    assert "omlkit" in capsys.readouterr().out


@pytest.fixture
def runner():
    path = Path(__file__).resolve().parents[1] / "main.py"
    spec = importlib.util.spec_from_file_location("omlkit_runner", path)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def test_runner_delegates_to_cli(runner, monkeypatch, capsys):
    monkeypatch.setattr(sys, "argv", ["main.py", "--version"])
    assert runner.main() == 0
    assert "omlkit" in capsys.readouterr().out


def test_runner_reports_unexpected_errors(runner, monkeypatch, capsys):
    def broken(argv):
        raise RuntimeError("broken handler")

    monkeypatch.setattr(importlib.import_module("omlkit.cli.main"), "run", broken)
    monkeypatch.setattr(sys, "argv", ["main.py", "ks", "peres"])
    assert runner.main() == 1
    assert "fatal: broken handler" in capsys.readouterr().err


def test_settings_file_selects_format(invoke, tmp_path, write):
    config_dir = tmp_path / "cli-config"
    config_dir.mkdir(exist_ok=True)
    (config_dir / "config.toml").write_text('[output]\nformat = "json"\nindent = 0\n', encoding="utf-8")
    path = write("triad.txt", "a,b,c\n")
    result = invoke("states", path)
    assert result.out.count("\n") == 1
    assert result.json()["count"] == 3
    assert invoke("states", path, "--format", "text").out.startswith("atoms: 3")


def test_debug_flag_logs_to_stderr(invoke, write):
    path = write("triad.txt", "a,b,c\n")
    result = invoke("states", path, "--debug")
    assert result.code == 0
    assert "[DEBUG]" in result.err
