"""Command-line interface: commands, exit codes, determinism."""

import json

from leechkit import cli, serialize


def test_list_prints_all_labels(capsys):
    assert cli.main(["list"]) == 0
    out = capsys.readouterr().out
    assert len(out.strip().splitlines()) == 23
    assert "E8^3" in out and "A1^24" in out


def test_construct_unknown_label(capsys):
    assert cli.main(["construct", "BADLABEL"]) == 2
    assert "valid labels" in capsys.readouterr().out


def test_construct_and_verify_round_trip(tmp_path, capsys):
    code = cli.main(
        ["construct", "E8^3", "--codeword", "0", "--out", str(tmp_path)]
    )
    assert code == 0
    out = capsys.readouterr().out
    assert "pass" in out
    path = tmp_path / "E8x3_g0.json"
    assert path.exists()
    assert cli.main(["verify", str(path)]) == 0
    assert "pass" in capsys.readouterr().out


def test_verify_tampered_file_fails(tmp_path, capsys):
    assert cli.main(
        ["construct", "E8^3", "--codeword", "0", "--out", str(tmp_path)]
    ) == 0
    capsys.readouterr()
    path = tmp_path / "E8x3_g0.json"
    doc = json.loads(path.read_text())
    doc["gram"][0][0] = "-4"  # break unimodularity
    path.write_text(json.dumps(doc))
    assert cli.main(["verify", str(path)]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_verify_malformed_file(tmp_path, capsys):
    p = tmp_path / "junk.json"
    p.write_text("not json at all")
    assert cli.main(["verify", str(p)]) == 2


def test_codeword_out_of_range(capsys):
    assert cli.main(["construct", "E8^3", "--codeword", "7"]) == 2


def test_deephole_center_zero_rejected(tmp_path, capsys):
    from importlib import resources
    from fractions import Fraction

    src = resources.files("leechkit").joinpath("data/deep_hole_a1_24.json")
    d = serialize.import_deep_hole(serialize.load_json(str(src)))
    bad = type(d)(gram=d.gram, center=(Fraction(0),) * 24)
    p = tmp_path / "hole.json"
    serialize.save_json(serialize.export_deep_hole(bad), str(p))
    assert cli.main(["verify", str(p), "--deephole"]) == 1
    assert "not a deep hole" in capsys.readouterr().out


def test_reports_are_deterministic(capsys):
    cli.main(["construct", "E8^3", "--codeword", "0"])
    first = capsys.readouterr().out
    cli.main(["construct", "E8^3", "--codeword", "0"])
    second = capsys.readouterr().out
    assert first == second


def test_gap_export(tmp_path, capsys):
    assert cli.main(
        ["export", "E8^3", "--codeword", "0", "--format", "gap",
         "--out", str(tmp_path)]
    ) == 0
    text = (tmp_path / "E8x3_g0.g").read_text()
    assert "gram :=" in text
