import csv
import io
import json

import pytest

from dtknots.cli import main
from dtknots.report import build_table, genus_report, render_csv, render_json, render_md, table_cells


@pytest.mark.parametrize("pair, symbol", [((12, -6), "23"), ((10, -6), "12"), ((2, 2), "2"), ((12, 2), "12"),
                                          ((4, 6), "0"), ((22, 62), "3")])
def test_symbols(pair, symbol):
    assert genus_report(*pair).symbol == symbol


def test_report_invariants():
    for m in range(1, 20):
        for n in range(-20, 21, 2):
            if n == 0:
                continue
            r = genus_report(m, n)
            assert r.lower <= r.upper
            assert (r.value is not None) == (r.lower == r.upper)
            if r.lower >= 2 or r.upper <= 1:
                assert r.evidence


def test_json_fields_always_present():
    d = genus_report(1, -2).to_dict()
    for key in ("input", "canonical", "fraction", "determinant", "signature", "arf", "sigma4arf_mod8",
                "crosscap3", "lower", "upper", "value", "evidence", "my_flag", "duplicate_of"):
        assert key in d
    assert d["signature"] is None


def test_table_order_and_duplicates():
    cells = table_cells(3, -4, 4)
    assert cells == [(1, 2), (1, 4), (2, 2), (2, 4), (3, 2), (3, 4),
                     (1, -4), (1, -2), (2, -4), (2, -2), (3, -4), (3, -2)]
    reps = {r.input: r for r in build_table(6, -6, 6)}
    assert reps[(2, 4)].duplicate_of is None
    assert reps[(5, -2)].duplicate_of == (2, 4)
    assert reps[(5, -2)].symbol == "."
    assert reps[(4, 2)].duplicate_of == (2, 4)


def test_table_deterministic_across_workers():
    a = render_csv(build_table(12, -20, 20, workers=1))
    b = render_csv(build_table(12, -20, 20, workers=3))
    assert a == b


def test_renderers():
    reps = build_table(4, -4, 4)
    rows = list(csv.reader(io.StringIO(render_csv(reps))))
    assert rows[0] == ["m", "n", "symbol", "lower", "upper", "duplicate_of"]
    assert len(rows) == 1 + len(reps)
    assert len(json.loads(render_json(reps))) == len(reps)
    assert render_md(reps).count("| m \\ n |") == 2


def test_table_bounds():
    with pytest.raises(ValueError):
        table_cells(400, -4, 4)


def test_cli_knot(capsys):
    assert main(["knot", "12", "-6", "--format", "json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert (d["lower"], d["upper"], d["symbol"]) == (2, 3, "23")


def test_cli_usage_errors(capsys):
    assert main(["knot", "3", "3"]) == 2
    assert main(["knot", str(2**130), "2"]) == 2
    assert main(["table", "--m-max", "500"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["knot"])
    assert exc.value.code == 2


def test_cli_table(capsys):
    assert main(["table", "--m-max", "6", "--n-min", "2", "--n-max", "6"]) == 0
    out = capsys.readouterr().out
    rows = {(r[0], r[1]): r[2] for r in csv.reader(io.StringIO(out))}
    assert rows[("4", "6")] == "0" and rows[("2", "2")] == "2"


def test_cli_twist(capsys):
    assert main(["twist", "--t-max", "1000", "--variant", "A"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 6 and lines[0] == "25: 8,13,18,23"
    assert main(["twist", "--t-max", "1000", "--variant", "B"]) == 0
    assert "169: 11,24,37,50,76," in capsys.readouterr().out
    assert main(["twist", "--t-max", "20"]) == 0
    assert capsys.readouterr().out == ""


def test_cli_oracle(capsys):
    assert main(["oracle", "3", "2", "--case", "2", "--epsilon", "-1"]) == 0
    assert "embedding into rank" in capsys.readouterr().out
    assert main(["oracle", "4", "4", "--node-budget", "3"]) == 3
    assert main(["oracle", "22", "62", "--case", "4", "--max-rank", "64"]) == 0
    assert "no embedding" in capsys.readouterr().out


def test_cli_verify_fast_reports_each_criterion(capsys):
    code = main(["verify"])
    lines = capsys.readouterr().out.splitlines()
    assert [ln.split()[2] for ln in lines] == ["1:", "2:", "4:", "5:", "8:"]
    assert code == (0 if all(ln.startswith("[PASS]") for ln in lines) else 1)
