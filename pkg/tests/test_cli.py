"""Exit codes, formats, and byte determinism of the command line."""

import json

import pytest

from polyreal.cli import main


def write_spec(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


@pytest.fixture
def d5_spec(tmp_path):
    return write_spec(tmp_path, "d5.json", {
        "kind": "permutation",
        "degree": 5,
        "generators": [[[1, 4], [2, 3]], [[0, 1], [2, 4]]],
    })


@pytest.fixture
def s3_spec(tmp_path):
    return write_spec(tmp_path, "s3.json", {
        "kind": "permutation",
        "degree": 3,
        "generators": [[[0, 1]], [[0, 1, 2]]],
    })


def test_missing_file_is_exit_2(tmp_path, capsys):
    assert main(["cone-report", "--group", str(tmp_path / "nope.json")]) == 2
    assert "input error" in capsys.readouterr().err


def test_bad_kind_is_exit_2(tmp_path, capsys):
    spec = write_spec(tmp_path, "bad.json", {"kind": "coxeter"})
    assert main(["cone-report", "--group", spec]) == 2


def test_cap_is_exit_3(tmp_path, s3_spec, capsys):
    assert main(["cone-report", "--group", s3_spec, "--max-order", "4"]) == 3
    assert "cap exceeded" in capsys.readouterr().err


def test_threads_must_be_positive(s3_spec):
    with pytest.raises(SystemExit) as exc:
        main(["cone-report", "--group", s3_spec, "--threads", "0"])
    assert exc.value.code == 2


def test_stringc_failure_is_exit_4(s3_spec, capsys):
    # the second declared generator is a 3-cycle, not an involution
    assert main(["stringc", "--group", s3_spec]) == 4
    out = json.loads(capsys.readouterr().out)
    assert out["involutions"] is False and out["passed"] is False


def test_stringc_pass(d5_spec, capsys):
    assert main(["stringc", "--group", d5_spec]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["passed"] is True and out["schlafli"] == [5]
    assert out["group_order"] == 10


def test_cone_report_singleton(s3_spec, capsys, tmp_path):
    code = main(["cone-report", "--group", s3_spec,
                 "--stabilizer", "s0,s1", "--cache", str(tmp_path / "c")])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["points"] == 1
    assert len(out["layers"]) == 1
    assert len(out["sigma"]) == 1
    assert out["sigma"][0]["degree"] == 1


def test_byte_determinism(d5_spec, capsys, tmp_path):
    argv = ["cone-report", "--group", d5_spec, "--stabilizer", "s0",
            "--cache", str(tmp_path / "c")]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    second = capsys.readouterr().out
    assert first == second
    payload = json.loads(first)
    assert payload["schema"] == "polyreal/1"
    assert json.loads(json.dumps(payload)) == payload


def test_csv_and_table_formats(d5_spec, capsys, tmp_path):
    cache = str(tmp_path / "c")
    assert main(["cone-report", "--group", d5_spec, "--format", "csv",
                 "--cache", cache]) == 0
    csv_out = capsys.readouterr().out
    assert csv_out.splitlines()[0] == "section,degree,type,multiplicity,subcone_dim,cone"
    assert any(line.startswith("sigma,") for line in csv_out.splitlines())
    assert main(["cone-report", "--group", d5_spec, "--format", "table",
                 "--cache", cache]) == 0
    table_out = capsys.readouterr().out
    assert table_out.startswith("points 10")


def test_cosine_subcommand(d5_spec, capsys, tmp_path):
    code = main(["cosine", "--group", d5_spec, "--stabilizer", "s0",
                 "--cache", str(tmp_path / "c")])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["points"] == 5
    for row in out["cosines"]:
        assert row["entries"][0]["exact"] == "1"
        for e in row["entries"]:
            assert abs(e["float"]) <= 1 + 1e-9


def test_psl_search_subcommand(capsys):
    assert main(["psl-search", "--max-p", "13"]) == 0
    out = json.loads(capsys.readouterr().out)
    ps = [r["p"] for r in out["rows"]]
    assert ps == [3, 5, 7, 11, 13]
    assert out["rows"][-1]["generates"] is True


def test_wreath_subcommand(s3_spec, capsys, tmp_path):
    code = main(["wreath", "--group", s3_spec, "--cache", str(tmp_path / "c")])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["base_order"] == 6
    assert out["wreath_order"] == 72
    assert out["matches_dixon"] is True
    assert out["irreducibles"] == 9


def test_wreath_spec_kind(tmp_path, capsys):
    spec = write_spec(tmp_path, "w.json", {
        "kind": "wreath_c2",
        "base": {"kind": "permutation", "degree": 3,
                 "generators": [[[0, 1, 2]]]},
    })
    assert main(["wreath", "--group", spec,
                 "--cache", str(tmp_path / "c")]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["base_order"] == 3 and out["wreath_order"] == 18


def test_stabilizer_word_products(s3_spec, capsys, tmp_path):
    # s0*s1 = (0 1)(0 1 2) is the transposition (0 2)
    code = main(["cone-report", "--group", s3_spec,
                 "--stabilizer", "s0*s1", "--cache", str(tmp_path / "c")])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["points"] == 3
