import csv
import io
import json

import pytest

from cyclicpoly.cli import main
from cyclicpoly.sweep import FIELDS, make_record, render, render_records, sweep_verify
from cyclicpoly import f_vector_direct


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_fvector(capsys):
    assert run(capsys, "fvector", "--v", "6", "--d", "4") == (0, "1 6 15 18 9 1\n", "")
    assert run(capsys, "fvector", "--v", "5", "--d", "4")[1] == "1 5 10 10 5 1\n"


def test_fvector_bad_params(capsys):
    code, out, err = run(capsys, "fvector", "--v", "4", "--d", "4")
    assert code == 2 and out == ""
    assert "v >= d + 1" in err


@pytest.mark.parametrize("route", ["direct", "triangle", "oracle"])
def test_fvector_routes(capsys, route):
    assert run(capsys, "fvector", "--v", "6", "--d", "4", "--route", route)[1] == "1 6 15 18 9 1\n"


def test_fvector_all_routes(capsys):
    code, out, _ = run(capsys, "fvector", "--v", "8", "--d", "5", "--route", "all")
    assert code == 0
    lines = out.splitlines()
    assert [l.split(":")[0] for l in lines] == ["direct", "triangle", "oracle", "routes agree"]
    assert lines[-1] == "routes agree: true"


def test_oracle_cap(capsys):
    code, _, err = run(capsys, "fvector", "--v", "20", "--d", "4", "--route", "oracle")
    assert code == 3 and "--oracle-cap" in err
    code, out, err = run(capsys, "oracle", "--v", "17", "--d", "2", "--oracle-cap", "17")
    assert code == 0 and out == "1 17 17 1\n" and "warning" in err


def test_oracle_facets(capsys):
    code, out, _ = run(capsys, "oracle", "--v", "4", "--d", "2", "--facets")
    assert out.splitlines() == ["1 4 4 1", "{1,2}", "{1,4}", "{2,3}", "{3,4}"]


def test_hvector(capsys):
    assert run(capsys, "hvector", "--v", "5", "--d", "3")[1] == "1 2 2 1\n"
    out = run(capsys, "hvector", "--v", "6", "--d", "4", "--format", "json")[1]
    assert json.loads(out) == {"v": 6, "d": 4, "h_vector": ["1", "2", "3", "2", "1"]}


def test_triangle(capsys):
    code, out, _ = run(capsys, "triangle", "--v", "6", "--d", "4")
    assert code == 0
    assert out.splitlines() == [
        "P(0): 1 2",
        "P(1): 1 3 3",
        "P(2): 1 4 6 2",
        "P(3): 1 5 10 8 1",
        "P(4): 1 6 15 18 9 1",
    ]
    out = run(capsys, "triangle", "--v", "5", "--d", "2")[1]
    assert out.splitlines() == ["P(0): 1 3", "P(1): 1 4 1", "P(2): 1 5 5 1"]


def test_triangle_audit(capsys):
    code, out, _ = run(capsys, "triangle", "--v", "6", "--d", "4", "--audit")
    assert code == 0 and out.splitlines()[-1] == "audit: PASS"


def test_triangle_json(capsys):
    out = run(capsys, "triangle", "--v", "6", "--d", "4", "--format", "json")[1]
    data = json.loads(out)
    assert data["rows"][2] == ["1", "4", "6", "2"] and data["dips"] == [[]] * 5


@pytest.mark.parametrize("v, d", [(6, 4), (1000, 4), (5, 4)])
def test_check(capsys, v, d):
    code, out, _ = run(capsys, "check", "--v", str(v), "--d", str(d))
    assert code == 0
    assert "log-concave: true" in out and "unimodal: true" in out


def test_check_json(capsys):
    out = run(capsys, "check", "--v", "6", "--d", "4", "--format", "json")[1]
    assert out == (
        '{"v":6,"d":4,"f_vector":["1","6","15","18","9","1"],'
        '"log_concave":true,"unimodal":true,"peak_start":2,"peak_end":2}\n'
    )


def test_usage_errors(capsys):
    assert run(capsys, "fvector", "--v", "6")[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "sweep", "--d-min", "2", "--d-max", "3", "--v-max", "9", "--format", "xml")[0] == 2
    assert run(capsys, "sweep", "--d-min", "2", "--d-max", "3", "--v-max", "9", "--checks", "bogus")[0] == 2
    assert run(capsys, "sweep", "--d-min", "5", "--d-max", "3", "--v-max", "9")[0] == 2


def test_render_formats():
    rec = make_record(f_vector_direct((6, 4)))
    assert list(rec) == list(FIELDS)
    text = render_records([rec], "csv").decode()
    assert text.splitlines()[0] == "v,d,f_vector,log_concave,unimodal,peak_start,peak_end"
    row = next(csv.DictReader(io.StringIO(text)))
    assert row["f_vector"] == "1;6;15;18;9;1"
    line = render_records([make_record(f_vector_direct((5, 4)))], "text").decode()
    assert line.count("\n") == 1 and "1 5 10 10 5 1" in line
    with pytest.raises(ValueError):
        render_records([rec], "yaml")


def test_render_unimodal_false_has_empty_peak():
    rec = make_record(f_vector_direct((6, 4)))
    rec.update(unimodal=False, peak_start=None, peak_end=None)
    assert render_records([rec], "csv").decode().splitlines()[1].endswith(",false,,")
    assert json.loads(render_records([rec], "json"))["peak_start"] is None


def test_sweep_small(capsys):
    code, out, _ = run(capsys, "sweep", "--d-min", "2", "--d-max", "6", "--v-max", "30")
    assert code == 0
    assert "failures: 0" in out and out.splitlines()[-2] == "PASS"


def test_sweep_empty_intersection(capsys):
    report = sweep_verify(10, 10, 5, 8)
    assert report.checked == 0 and report.passed
    code, out, _ = run(capsys, "sweep", "--d-min", "10", "--d-max", "10", "--v-min", "5", "--v-max", "8", "--format", "json")
    assert code == 0 and out == ""


def test_sweep_checked_counts_valid_pairs():
    report = sweep_verify(1, 5, 1, 10)
    assert report.checked == sum(max(0, 10 - d) for d in range(2, 6))
    assert [(r["d"], r["v"]) for r in report.records] == sorted((r["d"], r["v"]) for r in report.records)


def test_sweep_all_routes_every_pair():
    report = sweep_verify(2, 8, 1, 40, route_every=1)
    assert report.passed


def test_sweep_reports_failures(monkeypatch):
    import cyclicpoly.sweep as sweep_mod
    from cyclicpoly.cyclic import ExtendedFSequence

    def broken(p):
        seq = f_vector_direct(p)
        return ExtendedFSequence(seq.entries[:-1] + (2,), p)

    monkeypatch.setattr(sweep_mod, "f_vector_streaming", broken)
    report = sweep_verify(3, 3, 4, 6, route_every=1)
    assert not report.passed
    assert [(f.v, f.d, f.check) for f in report.failures] == [(4, 3, "routes"), (5, 3, "routes"), (6, 3, "routes")]


def test_sweep_out_file_and_determinism(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    base = ["sweep", "--d-min", "2", "--d-max", "9", "--v-max", "60", "--format", "json"]
    assert run(capsys, *base, "--jobs", "1", "--out", str(a))[0] == 0
    assert run(capsys, *base, "--jobs", "3", "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    first = json.loads(a.read_text().splitlines()[0])
    assert first == {"v": 3, "d": 2, "f_vector": ["1", "3", "3", "1"], "log_concave": True,
                     "unimodal": True, "peak_start": 0, "peak_end": 1}


def test_sweep_unwritable_out(capsys, tmp_path):
    code, _, err = run(capsys, "sweep", "--d-min", "2", "--d-max", "2", "--v-max", "5",
                       "--out", str(tmp_path / "missing" / "x.json"))
    assert code != 0 and "cannot write" in err


def test_text_render_has_summary():
    text = render(sweep_verify(2, 3, 1, 6), "text").decode()
    assert "checked: 7" in text and "elapsed:" in text


def test_sweep_detects_dips_and_euler_breaks(monkeypatch, capsys):
    import cyclicpoly.sweep as sweep_mod
    from cyclicpoly.cyclic import ExtendedFSequence

    def dipped(p):
        seq = f_vector_direct(p)
        return ExtendedFSequence((1, 1) + seq.entries[2:], p)

    monkeypatch.setattr(sweep_mod, "f_vector_direct", dipped)
    report = sweep_verify(4, 4, 6, 6, route_every=1)
    assert {f.check for f in report.failures} == {"log-concave", "euler", "routes"}
    code, out, _ = run(capsys, "sweep", "--d-min", "4", "--d-max", "4", "--v-min", "6", "--v-max", "6")
    assert code == 1 and out.splitlines()[-2] == "FAIL"
