"""Report assembly, expectation comparison and the schema."""
import json

import pytest

from nucoprod.report import SCHEMA_VERSION, SECTION_KEYS, SECTIONS, analyse, to_json_text, to_text

TOP_KEYS = {"schema_version", "source", "algebra", "coproduct", "depth", "seed", "sections_run",
            "sections", "expectations", "summary"}


def test_all_keys_present_when_sections_are_skipped(gallery):
    """[DERIVED] skipped sections keep every key with a precondition status."""
    entry = gallery("group:S3")
    rep = analyse(entry.cp, 3, 0, ("regularity",), entry.expected)
    assert TOP_KEYS <= set(rep) and rep["schema_version"] == SCHEMA_VERSION
    for name in SECTIONS:
        assert set(rep["sections"][name]) == set(SECTION_KEYS[name])
    assert rep["sections"]["dual"]["unit"]["status"] == "precondition_not_met"
    assert rep["expectations"]["fullness"]["matched"] is None
    assert rep["summary"]["exit_code"] == 0


def test_mismatch_sets_exit_code(gallery):
    """[DERIVED] a false expectation is reported and yields exit code 2."""
    entry = gallery("matrix")
    rep = analyse(entry.cp, 3, 0, ("regularity",), {"maps.T1": "regular"})
    assert rep["summary"]["mismatches"] == ["maps.T1"]
    assert rep["summary"]["exit_code"] == 2


def test_section_level_expectation(gallery):
    """[DERIVED] a bare section path aggregates its keys."""
    entry = gallery("sandwich:ex4_3")
    rep = analyse(entry.cp, 4, 0, ("fullness",), {"fullness": "fails"})
    assert rep["expectations"]["fullness"]["matched"] is True


def test_unknown_section_rejected(s3):
    """[DERIVED] section names are validated."""
    with pytest.raises(ValueError):
        analyse(s3, 2, 0, ("speed",))


def test_renderings(gallery):
    """[DERIVED] JSON text is canonical; text output lists every run section."""
    entry = gallery("group:S3")
    rep = analyse(entry.cp, 2, 5, ("regularity", "counit"), entry.expected)
    text = to_json_text(rep)
    assert json.loads(text) == json.loads(json.dumps(rep, default=str))
    assert text == json.dumps(json.loads(text), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    out = to_text(rep)
    assert "[regularity]" in out and "[counit]" in out and "[dual] skipped" in out
    assert rep["seed"] == 5
