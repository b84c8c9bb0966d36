import json

import pytest

from liepar.cli import main

UPPER2 = json.dumps([
    [1, 0, 0, 0],  # E11 in the basis E11, E12, E21, E22
    [0, 1, 0, 0],
    [0, 0, 0, 1],
])
LOWER2 = json.dumps([
    [1, 0, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
])
CARTAN2 = json.dumps([[1, 0, 0, 0], [0, 0, 0, 1]])


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_make(capsys):
    code, out = run(capsys, ["make", "gl:3"])
    data = json.loads(out)
    assert code == 0
    assert data["dim"] == 9 and data["reductive"] is True
    assert data["algebra"] == ["gl", 3]


def test_make_bad_algebra(capsys):
    code, out = run(capsys, ["make", "sp:4"])
    assert code == 1
    assert json.loads(out)["error"] == "domain"


def test_check_positive(capsys):
    code, out = run(capsys, ["check", "gl:2", "--space", UPPER2])
    data = json.loads(out)
    assert code == 0 and data["parabolic"] is True
    assert data["conditions"] == [True] * 4
    assert data["nilradical"] == [["0/1", "1/1", "0/1", "0/1"]]


def test_check_negative(capsys):
    code, out = run(capsys, ["check", "gl:2", "--space", CARTAN2])
    data = json.loads(out)
    assert code == 0 and data["parabolic"] is False
    assert data["conditions"] == [False] * 4


def test_check_non_subalgebra_is_domain_error(capsys):
    bad = json.dumps([[0, 1, 0, 0], [0, 0, 1, 0]])
    code, out = run(capsys, ["check", "gl:2", "--space", bad])
    assert code == 1
    assert json.loads(out)["error"] == "domain"


def test_opposite(capsys):
    code, out = run(capsys, ["opposite", "gl:2", "--space", UPPER2])
    data = json.loads(out)
    assert code == 0
    assert data["nilradical"] == [["0/1", "0/1", "1/1", "0/1"]]


def test_project_self_opposite(capsys):
    code, out = run(
        capsys, ["project", "gl:2", "--p", LOWER2, "--q", UPPER2]
    )
    data = json.loads(out)
    assert code == 0
    assert data["r0_dim"] == 2  # full Levi quotient of the Borel


def test_levi(capsys):
    code, out = run(capsys, ["levi", "gl:2", "--space", UPPER2])
    data = json.loads(out)
    assert code == 0
    assert data["dim"] == 2 and data["nilradical_dim"] == 1


def test_rootdata(capsys):
    code, out = run(capsys, ["rootdata", "so:3,2"])
    data = json.loads(out)
    assert code == 0
    assert data["count"] == 8 and data["cartan_dim"] == 2


def test_weyl(capsys):
    code, out = run(capsys, ["weyl", "gl:2", "--space", LOWER2])
    data = json.loads(out)
    assert code == 0
    assert data["length"] == 1 and data["rank"] == 1


def test_delta(capsys):
    code, out = run(
        capsys, ["delta", "gl:2", "--p", UPPER2, "--q", LOWER2]
    )
    data = json.loads(out)
    assert code == 0 and data["delta"] == [0]


def test_building_model(capsys):
    code, out = run(capsys, ["building", "--model", "A:2", "--table"])
    data = json.loads(out)
    assert code == 0 and data["chambers"] == 6
    table = data["delta"]
    lengths = sorted(
        len(w) for row in table.values() for w in row.values()
    )
    assert lengths[0] == 0 and lengths[-1] == 3


def test_building_lie(capsys):
    code, out = run(capsys, ["building", "gl:2"])
    data = json.loads(out)
    assert code == 0 and data["chambers"] == 2


def test_building_dot(capsys):
    code, out = run(capsys, ["building", "--model", "A:1", "--dot"])
    assert code == 0 and out.startswith("graph")


def test_building_needs_input(capsys):
    code, out = run(capsys, ["building"])
    assert code == 1


def test_config_tetrahedron_matches_library(capsys):
    from liepar.config import (
        incidence_report,
        report_json,
        tetrahedron_example,
    )

    code, out = run(capsys, ["config", "tetrahedron"])
    assert code == 0
    _, _, proj = tetrahedron_example()
    assert out.strip() == report_json(incidence_report(proj))


def test_config_custom_witness(tmp_path, capsys):
    spec = {
        "algebra": ["gl", 3],
        "points": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        "center": [[1, 1, 1]],
    }
    f = tmp_path / "witness.json"
    f.write_text(json.dumps(spec))
    code, out = run(capsys, ["config", "@%s" % f])
    data = json.loads(out)
    assert code == 0
    # the quotient line only retains one type: the three frame points
    assert data["types"] == ["1"]
    assert len(data["elements"]["1"]) == 3


def test_stdin_algebra(capsys, monkeypatch):
    import io

    monkeypatch.setattr(
        "sys.stdin", io.StringIO(json.dumps({"algebra": ["gl", 2]}))
    )
    code, out = run(capsys, ["make", "-"])
    assert code == 0 and json.loads(out)["dim"] == 4


def test_space_from_file(tmp_path, capsys):
    f = tmp_path / "space.json"
    f.write_text(json.dumps({"vectors": json.loads(UPPER2)}))
    code, out = run(capsys, ["check", "gl:2", "--space", "@%s" % f])
    assert code == 0 and json.loads(out)["parabolic"] is True
