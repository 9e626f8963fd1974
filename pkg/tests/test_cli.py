"""The command line front end."""
import io
import json

import pytest

from nucoprod.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_list_families():
    """[DERIVED] --list prints one family per line."""
    code, out, _ = call("--list")
    assert code == 0 and out.splitlines()[:2] == ["group:Z", "group:S3"]


def test_family_json_report():
    """[DERIVED] the matrix regularity section matches its expectations."""
    code, out, _ = call("--family", "matrix", "--depth", "4", "--sections", "regularity,counit",
                        "--format", "json")
    rep = json.loads(out)
    assert code == 0
    assert rep["sections"]["regularity"]["T1"]["status"] == "non_regular"
    assert rep["sections"]["counit"]["homomorphism"]["status"] == "fails"
    assert rep["source"] == {"kind": "gallery", "name": "matrix", "params": {}}


def test_positional_form():
    """[DERIVED] run <family> key=value is equivalent to the flags."""
    a = call("run", "sandwich:ex3_24", "depth=3", "t=1/2", "--sections", "regularity",
             "--format", "json")
    b = call("--family", "sandwich:ex3_24", "--depth", "3", "--t", "1/2", "--sections",
             "regularity", "--format", "json")
    assert a == b and a[0] == 0
    assert json.loads(a[1])["source"]["params"] == {"t": "1/2"}


@pytest.mark.parametrize("argv", [
    ("--family", "nope"),
    ("--family", "matrix", "--t", "1"),
    ("--family", "matrix", "--depth", "0"),
    ("--family", "matrix", "--sections", "speed"),
    ("--spec", "/nonexistent/spec.json"),
    ("run", "matrix", "depth=x"),
])
def test_input_errors_exit_3(argv):
    """[DERIVED] bad input is reported on stderr with exit code 3."""
    code, out, err = call(*argv)
    assert code == 3 and err.startswith("error:") and out == ""


def test_spec_file_and_gate(tmp_path):
    """[DERIVED] a finite spec runs; a degenerate one fails its gate with exit 3."""
    good = tmp_path / "q2.json"
    good.write_text(json.dumps({"dimension": 2, "structure_constants": [[0, 0, 0, 1], [1, 1, 1, 1]],
                                "coproduct": [[0, 0, 0, 1], [1, 1, 1, 1]], "counit": [1, 1]}))
    code, out, _ = call("--spec", str(good), "--format", "json", "--depth", "2")
    rep = json.loads(out)
    assert code == 0 and rep["gates"]["associativity"]["status"] == "holds"
    assert rep["sections"]["coassociativity"]["T1T2"]["status"] == "holds"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"dimension": 2, "structure_constants": [[0, 0, 0, 1], [0, 1, 1, 1]]}))
    code, _, err = call("--spec", str(bad))
    assert code == 3 and "nondegeneracy gate failed" in err


def test_gallery_spec_file(tmp_path):
    """[DERIVED] a gallery line in a spec file selects the family."""
    f = tmp_path / "g.txt"
    f.write_text("gallery: group:Z {}\n")
    code, out, _ = call("--spec", str(f), "--sections", "regularity", "--depth", "3")
    assert code == 0 and "Δ[K(Z)]" in out


def test_output_file(tmp_path):
    """[DERIVED] --output writes the report instead of printing it."""
    target = tmp_path / "r.json"
    code, out, _ = call("--family", "group:S3", "--sections", "regularity", "--format", "json",
                        "-o", str(target))
    assert code == 0 and out == "" and json.loads(target.read_text())["depth"] == 6


def test_expectation_mismatch_exit_2():
    """[DERIVED] ex3_25 expects *-compatibility, which fails at formal t."""
    code, out, _ = call("--family", "sandwich:ex3_25", "--sections", "regularity", "--depth", "5")
    assert code == 2 and "regularity.involution" in out and "MISMATCH" in out
