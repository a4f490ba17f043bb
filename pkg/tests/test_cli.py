import json

from webbasis.main import EXIT_GUARD, EXIT_OK, EXIT_USAGE, main
from webbasis.services.growth import grow
from webbasis.services.render import render_svg
from webbasis.services.words import parse_word


def test_grow_writes_text_and_svg(tmp_path):
    out, svg = tmp_path / "d.fd", tmp_path / "d.svg"
    code = main(["grow", "--n", "3", "--word", "112233", "--out", str(out), "--render", str(svg)])
    assert code == EXIT_OK
    assert out.read_text().startswith("diagram n=3 word=112233")
    assert svg.read_text().lstrip().startswith("<svg")


def test_grow_json(capsys):
    assert main(["grow", "--n", "2", "--word", "2211", "--format", "json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["H"] == [2, 2]
    assert payload["D"] == [0, 0]


def test_output_is_deterministic(capsys):
    main(["eval", "--n", "2", "--word", "2112"])
    first = capsys.readouterr().out
    main(["eval", "--n", "2", "--word", "2112"])
    assert capsys.readouterr().out == first


def test_eval_text_is_tab_separated(capsys):
    assert main(["eval", "--n", "2", "--word", "21"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == ["12\tq", "21\t-1"]
    assert main(["eval", "--n", "2", "--word", "1'1"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert all(len(line.split("\t")) == 2 for line in lines)
    assert {line.split("\t")[0] for line in lines} == {"1'1", "2'2"}


def test_eval_formats(capsys):
    assert main(["eval", "--n", "2", "--word", "21", "--format", "json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload == [{"x": "12", "poly": "q"}, {"x": "21", "poly": "-1"}]
    assert main(["eval", "--n", "2", "--word", "21", "--format", "csv"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == ["x,poly", "12,q", "21,-1"]


def test_basis_verify(capsys):
    assert main(["basis", "--n", "2", "--r", "3", "--verify"]) == EXIT_OK
    assert "PASS lower triangular with unit diagonal" in capsys.readouterr().out


def test_basis_csv(capsys):
    assert main(["basis", "--n", "2", "--r", "2", "--type", "++", "--weight", "1,1", "--format", "csv"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines()[0] == "row_word,col_word,poly"


def test_scale_guard_exit_code(monkeypatch):
    assert main(["basis", "--n", "2", "--r", "4", "--max-words", "10"]) == EXIT_GUARD
    monkeypatch.setattr("webbasis.services.basis.settings.MAX_BLOCK_WORDS", 3)
    assert main(["invariants", "--n", "2", "--type", "++--"]) == EXIT_GUARD


def test_hw_lists_five_words(capsys):
    assert main(["hw", "--n", "2", "--type", "++++++", "--weight", "3,3"]) == EXIT_OK
    assert len(capsys.readouterr().out.split()) == 5


def test_invariants_and_endo(capsys):
    assert main(["invariants", "--n", "2", "--type", "+-+-+-", "--format", "json"]) == EXIT_OK
    assert len(json.loads(capsys.readouterr().out)) == 5
    assert main(["endo", "--n", "2", "--type", "+++"]) == EXIT_OK
    assert len(capsys.readouterr().out.split()) == 5


def test_hecke(capsys):
    assert main(["hecke", "--n", "2", "--format", "json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["words"] == ["12", "21"]


def test_usage_errors():
    assert main(["grow", "--n", "2", "--word", "13"]) == EXIT_USAGE
    assert main(["grow", "--n", "2"]) == EXIT_USAGE
    assert main(["grow", "--n", "0", "--word", "1"]) == EXIT_USAGE
    assert main(["frobnicate"]) == EXIT_USAGE
    assert main(["hw", "--n", "2", "--type", "++", "--weight", "0,2"]) == EXIT_USAGE


def test_verify(capsys):
    assert main(["verify", "--n", "2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "FAIL" not in out


def test_wave_word_and_enumeration(capsys):
    assert main(["wave", "--n", "3", "--word", "112233"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "blocks: [1,4,5] [2,3,6]" in out
    assert "tableau: [1,2] [3,4] [5,6]" in out
    assert main(["wave", "--n", "3", "--k", "2", "--enumerate"]) == EXIT_OK
    assert len(capsys.readouterr().out.strip().splitlines()) == 5


def test_member_round_trip(tmp_path, capsys):
    path = tmp_path / "d.fd"
    assert main(["grow", "--n", "2", "--word", "2'1'12", "--out", str(path)]) == EXIT_OK
    text = path.read_text()
    assert main(["member", "--diagram", str(path)]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "BASIS 2'1'12"
    assert path.read_text() == text


def test_member_rejects_bad_text(tmp_path):
    path = tmp_path / "bad.fd"
    path.write_text("not a diagram\n")
    assert main(["member", "--diagram", str(path)]) == EXIT_USAGE


def test_render_from_word(tmp_path):
    out = tmp_path / "w.svg"
    assert main(["render", "--n", "2", "--word", "2211", "--out", str(out)]) == EXIT_OK
    assert "flow diagram of 2211" in out.read_text()


def test_svg_marks_cups_and_vertices():
    svg = render_svg(grow(parse_word("2211"), 2), size=40.0)
    assert svg.count("<path class=\"arc\"") == 2
    assert svg.count("<path") == 3
    assert svg.count("<circle") == 3
    assert "width=\"200.0\"" in svg
