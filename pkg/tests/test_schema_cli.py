"""Input documents and the command-line surface: strict parsing, round trips,
exit-status contract, deterministic output."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from abelcover.cli import main
from abelcover.schema import SchemaError, dumps_document, parse_document, render_document
from abelcover.worked_examples import plane_cycle_cover, two_component_cover

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"
TWO_COMPONENT = DATA / "two_component.json"
PLANE_CYCLE = DATA / "plane_cycle.json"


def test_fixture_files_match_builders():
    assert TWO_COMPONENT.exists() and PLANE_CYCLE.exists()
    assert TWO_COMPONENT.read_text() == dumps_document(two_component_cover())
    assert PLANE_CYCLE.read_text() == dumps_document(plane_cycle_cover())


def test_parse_counts_on_two_component_fixture():
    document = parse_document(TWO_COMPONENT.read_text())
    surface = document.problem.surface
    assert len(surface.components) == 2
    assert len(surface.curves) == 13  # the double curve plus 12 branch lines
    assert len(surface.points) == 3


def test_round_trip_is_identity():
    for problem in (two_component_cover(), plane_cycle_cover()):
        text = dumps_document(problem)
        again = parse_document(text).problem
        assert again == problem
        assert dumps_document(again) == text


def test_empty_document_reports_missing_fields():
    with pytest.raises(SchemaError) as err:
        parse_document("{}")
    assert "missing keys" in str(err.value)


def test_unknown_keys_rejected():
    doc = render_document(two_component_cover())
    doc["surprise"] = 1
    with pytest.raises(SchemaError) as err:
        parse_document(json.dumps(doc))
    assert "unknown keys" in str(err.value)
    doc = render_document(two_component_cover())
    doc["curves"][0]["colour"] = "green"
    with pytest.raises(SchemaError):
        parse_document(json.dumps(doc))


def test_version_mismatch_rejected():
    doc = render_document(two_component_cover())
    doc["version"] = "999"
    with pytest.raises(SchemaError) as err:
        parse_document(json.dumps(doc))
    assert "version" in str(err.value)


def test_malformed_json_and_bad_elements():
    with pytest.raises(SchemaError):
        parse_document("{not json")
    doc = render_document(two_component_cover())
    doc["branch_data"]["Y1"][0]["element"] = [0, 0]
    with pytest.raises(SchemaError) as err:
        parse_document(json.dumps(doc))
    assert "nonzero" in str(err.value)


def test_explicit_line_bundles_round_trip():
    from abelcover.gluing import make_problem, resolved_bundles

    problem = two_component_cover()
    building = {}
    for comp, bd in problem.building:
        building[comp] = bd.with_line_bundles(dict(resolved_bundles(problem, comp)))
    pinned = make_problem(
        problem.surface, problem.group, building, dict(problem.double_elements)
    )
    text = dumps_document(pinned)
    assert "line_bundles" in text
    assert parse_document(text).problem == pinned


def run_cli(*argv):
    return main(list(argv))


def test_cli_invariants_exit_codes(capsys):
    assert run_cli("invariants", str(TWO_COMPONENT)) == 0
    out = capsys.readouterr().out
    assert "K^2  = 6" in out and "chi(O_X) = 1" in out


def test_cli_unknown_point_is_input_error(capsys):
    assert run_cli("classify-point", str(TWO_COMPONENT), "--point", "nowhere") == 2
    assert "error" in capsys.readouterr().err


def test_cli_missing_file_is_input_error(capsys):
    assert run_cli("invariants", "/no/such/file.json") == 2
    assert run_cli("validate") == 2


def test_cli_domain_failure_exit_code(tmp_path, capsys):
    doc = render_document(two_component_cover())
    # detach one line from its point: the congruence breaks
    for point in doc["points"]:
        if point["id"] == "y1":
            point["on"].remove("l3a")
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    assert run_cli("glue-check", str(bad)) == 1
    out = capsys.readouterr().out
    assert "not gluable" in out
    assert run_cli("invariants", str(bad)) == 1


def test_cli_tables_regenerate(capsys):
    assert run_cli("tables", "--table", "1", "--regenerate") == 0
    out = capsys.readouterr().out
    assert "16 rows match" in out
    assert run_cli("tables", "--table", "99") == 2


def test_cli_classify_point_and_index(capsys):
    assert run_cli("classify-point", str(PLANE_CYCLE), "--point", "q1") == 0
    out = capsys.readouterr().out
    assert "R4.18" in out
    assert run_cli("classify-point", str(PLANE_CYCLE), "--point", "y") == 0
    out = capsys.readouterr().out
    assert "cycle of 6 rational curves" in out
    assert run_cli("index", str(PLANE_CYCLE), "--point", "q1") == 0
    assert "q1: 2" in capsys.readouterr().out


def test_cli_local_eq(capsys):
    assert run_cli("local-eq", str(TWO_COMPONENT), "--point", "y1") == 0
    out = capsys.readouterr().out
    assert "component Y1" in out and "z[" in out


def test_cli_output_is_deterministic():
    script = (
        "import sys; from abelcover.cli import main; "
        "sys.exit(main(['invariants', sys.argv[1], '--format', 'json']))"
    )
    runs = [
        subprocess.run(
            [sys.executable, "-c", script, str(PLANE_CYCLE)],
            capture_output=True,
            check=True,
        ).stdout
        for _ in range(2)
    ]
    assert runs[0] == runs[1]
    payload = json.loads(runs[0])
    assert payload["command"] == "invariants"
    assert payload["status"] == "ok"
    assert payload["results"]["K2"] == 6
