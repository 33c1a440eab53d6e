import json

import pytest

from oockit import construct_conic_line_code, construct_spread_line_code
from oockit.cli import cli_main
from oockit.ooc import Code, CodeShape
from oockit.oocx import OocxError, format_oocx, parse_oocx, read_oocx, write_oocx


@pytest.fixture
def small_code():
    return construct_spread_line_code(2, 3, 1)


def test_roundtrip(tmp_path, small_code):
    path = tmp_path / "c.oocx"
    write_oocx(small_code, path)
    assert read_oocx(path) == small_code


def test_roundtrip_conics(tmp_path):
    code = construct_conic_line_code(2)
    path = tmp_path / "c.oocx"
    write_oocx(code, path)
    assert read_oocx(path) == code


def test_write_is_deterministic(tmp_path, small_code):
    a = format_oocx(small_code)
    b = format_oocx(small_code)
    assert a == b
    assert a.endswith("\n")
    assert "\r" not in a


def test_format_layout(small_code):
    lines = format_oocx(small_code).splitlines()
    assert lines[0] == "OOCX 1"
    assert lines[1] == "dims 5 3"
    assert lines[2] == "weight 3"
    assert lines[3] == "lambda_a 0"
    assert lines[4] == "lambda_c 1"
    assert lines[5] == "count 10"
    assert all(ln.startswith("word: ") for ln in lines[6:])
    assert len(lines) == 16


def test_empty_code_roundtrip():
    code = Code(CodeShape((5,), 3), 3, 0, 1, ())
    assert parse_oocx(format_oocx(code)) == code


def test_parse_errors_name_lines(small_code):
    text = format_oocx(small_code)
    lines = text.splitlines()

    bad = "\n".join(["OOCX 2"] + lines[1:]) + "\n"
    with pytest.raises(OocxError, match="line 1"):
        parse_oocx(bad)

    # coordinate out of range: time 3 >= T = 3
    bad = text.replace("word: (0,0) (1,0) (4,0)", "word: (0,0) (1,0) (4,3)")
    with pytest.raises(OocxError, match="out of range"):
        parse_oocx(bad)

    # weight mismatch on a word line
    bad = text.replace("word: (0,0) (1,0) (4,0)", "word: (0,0) (1,0)")
    with pytest.raises(OocxError, match="weight"):
        parse_oocx(bad)

    # duplicate pulse
    bad = text.replace("word: (0,0) (1,0) (4,0)", "word: (0,0) (0,0) (4,0)")
    with pytest.raises(OocxError, match="duplicate"):
        parse_oocx(bad)

    # unordered pulses
    bad = text.replace("word: (0,0) (1,0) (4,0)", "word: (1,0) (0,0) (4,0)")
    with pytest.raises(OocxError, match="order"):
        parse_oocx(bad)

    # wrong word count
    bad = text.replace("count 10", "count 11")
    with pytest.raises(OocxError, match="word lines"):
        parse_oocx(bad)


def test_parse_error_carries_line_number(small_code):
    text = format_oocx(small_code).replace("word: (0,0) (1,0) (4,0)", "word: (0,0) (1,0) (4,3)")
    try:
        parse_oocx(text)
    except OocxError as exc:
        assert exc.line == 7
    else:
        pytest.fail("expected OocxError")


def test_cli_construct_and_verify(tmp_path, capsys):
    out = tmp_path / "c.oocx"
    rc = cli_main(["construct", "spread-lines", "--q", "2", "--k", "3", "--d", "1", "--out", str(out)])
    assert rc == 0
    assert read_oocx(out).size == 10
    rc = cli_main(["verify", str(out)])
    assert rc == 0
    captured = capsys.readouterr()
    assert "PASS" in captured.out


def test_cli_verify_tampered_file_fails(tmp_path, capsys):
    out = tmp_path / "c.oocx"
    cli_main(["construct", "spread-lines", "--q", "2", "--k", "3", "--d", "1", "--out", str(out)])
    capsys.readouterr()
    text = out.read_text()
    # move one pulse so two words collide twice at some shift (the tampered
    # word stays sorted and in file order, so it still parses)
    tampered = text.replace("word: (2,0) (3,2) (4,2)", "word: (2,0) (3,0) (4,2)")
    assert tampered != text
    out.write_text(tampered)
    rc = cli_main(["verify", str(out)])
    captured = capsys.readouterr()
    assert rc == 1
    assert "FAIL" in captured.out
    assert "witness" in captured.out


def test_cli_construct_conic_lines(tmp_path, capsys):
    out = tmp_path / "conics.oocx"
    rc = cli_main(["construct", "conic-lines", "--q", "2", "--out", str(out), "--json"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["size"] == 30
    assert payload["measured"] == {"lambda_a": 0, "lambda_c": 2}
    assert read_oocx(out).size == 30


def test_cli_bound_worked_numbers(capsys):
    rc = cli_main(["bound", "--dims", "5x5x5", "--w", "5", "--lambda", "1", "--amops", "1"])
    assert rc == 0
    assert "125" in capsys.readouterr().out
    rc = cli_main(["bound", "--dims", "25x5", "--w", "5", "--lambda", "1", "--amops", "1"])
    assert rc == 0
    assert "150" in capsys.readouterr().out


def test_cli_bound_json_schema(capsys):
    rc = cli_main(["bound", "--dims", "5x3", "--w", "3", "--lambda", "1", "--json"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["min_bound"] == 10
    kinds = {b["kind"]: b for b in payload["bounds"]}
    assert kinds["nd"]["J"] == 11
    assert kinds["nd"]["f"] == {"numerator": 35, "denominator": 3}
    assert kinds["ideal"]["J"] == 10


def test_cli_report_json(tmp_path, capsys):
    out = tmp_path / "c.oocx"
    cli_main(["construct", "spread-lines", "--q", "2", "--k", "3", "--d", "1", "--out", str(out)])
    capsys.readouterr()
    rc = cli_main(["report", str(out), "--json"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["shape"] == {"space_dims": [5], "T": 3, "N": 15}
    assert payload["w"] == 3
    assert payload["size"] == 10
    assert payload["measured"] == {"lambda_a": 0, "lambda_c": 1}
    assert payload["j_optimal"] is True
    assert payload["ratio"] == {"numerator": 1, "denominator": 1}
    assert payload["passes"] is True
    assert any(b["kind"] == "ideal" for b in payload["bounds"])


def test_cli_reshape_and_fold(tmp_path, capsys):
    src = tmp_path / "c.oocx"
    cli_main(["construct", "spread-lines", "--q", "2", "--k", "5", "--d", "1", "--out", str(src)])
    dst = tmp_path / "r.oocx"
    rc = cli_main(["reshape", str(src), "--dims", "7x3x3", "--out", str(dst)])
    assert rc == 0
    code = read_oocx(dst)
    assert code.shape == CodeShape((7, 3), 3)
    assert code.size == 210

    fdst = tmp_path / "f.oocx"
    rc = cli_main(["fold", str(src), "--t1", "3", "--out", str(fdst)])
    assert rc == 0
    folded = read_oocx(fdst)
    assert folded.size == 630
    assert folded.shape == CodeShape((63,), 1)


def test_cli_reshape_rejects_time_change(tmp_path, capsys):
    src = tmp_path / "c.oocx"
    cli_main(["construct", "spread-lines", "--q", "2", "--k", "3", "--d", "1", "--out", str(src)])
    rc = cli_main(["reshape", str(src), "--dims", "3x5", "--out", str(tmp_path / "x.oocx")])
    assert rc == 1


def test_cli_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        cli_main(["bound", "--dims", "5x3", "--w", "3", "--lambda", "1", "--bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli_main([])
    assert exc.value.code == 2


def test_cli_missing_file_is_failure(capsys):
    rc = cli_main(["verify", "/nonexistent/path.oocx"])
    assert rc == 1


def test_cli_verify_lambda_override(tmp_path, capsys):
    src = tmp_path / "c.oocx"
    cli_main(["construct", "spread-lines", "--q", "2", "--k", "3", "--d", "1", "--out", str(src)])
    capsys.readouterr()
    rc = cli_main(["verify", str(src), "--lambda-c", "0"])
    assert rc == 1  # measured max cross is 1


def test_cli_json_outputs_are_byte_stable(tmp_path, capsys):
    src = tmp_path / "c.oocx"
    cli_main(["construct", "spread-lines", "--q", "2", "--k", "3", "--d", "1", "--out", str(src)])
    capsys.readouterr()
    cli_main(["report", str(src), "--json"])
    first = capsys.readouterr().out
    cli_main(["report", str(src), "--json"])
    second = capsys.readouterr().out
    assert first == second
