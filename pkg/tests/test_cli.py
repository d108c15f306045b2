import json
from io import StringIO

import pytest

from supergrid.cli import (EXIT_FORBIDDEN, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, InstanceSpec,
                           enumerate_shapes, run)
from supergrid.core import CShape


def call(*argv, stdin=None):
    out, err = StringIO(), StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_longest_json_record():
    code, out, _ = call("longest", "--shape", "C", "--m", "5", "--n", "5", "--k", "2", "--l", "1",
                        "--c", "2", "--s", "1,1", "--t", "5,5", "--format", "json")
    assert code == EXIT_OK
    rec = json.loads(out)
    assert list(rec) == ["shape", "s", "t", "case", "upper_bound", "length", "path", "forbidden"]
    assert rec["length"] == rec["upper_bound"] == 23 and rec["case"] == "C1"
    assert rec["path"][0] == [1, 1] and rec["path"][-1] == [5, 5]


def test_hc_reports_boundary_edges():
    code, out, _ = call("hc", "--shape", "R", "--m", "10", "--n", "8")
    assert code == EXIT_OK
    assert "# length: 80" in out and "# boundary_edges: 32" in out
    assert len([ln for ln in out.splitlines() if not ln.startswith("#")]) == 80


def test_strict_forbidden_exit_code():
    argv = ["hp", "--shape", "C", "--m", "3", "--n", "4", "--k", "1", "--l", "2", "--c", "1",
            "--d", "1", "--s", "1,1", "--t", "2,2"]
    code, out, _ = call(*argv)
    assert code == EXIT_OK and "# forbidden: F7" in out
    assert call(*argv, "--strict")[0] == EXIT_FORBIDDEN


def test_usage_errors():
    assert call("longest", "--shape", "L", "--m", "4", "--n", "4", "--s", "1,1",
                "--t", "2,2")[0] == EXIT_USAGE
    assert call("longest", "--shape", "R", "--m", "4", "--n", "4", "--s", "9,9",
                "--t", "2,2")[0] == EXIT_USAGE
    assert call("hp", "--shape", "R", "--m", "3")[0] == EXIT_USAGE
    assert call("nonsense")[0] == EXIT_USAGE


def test_check_round_trip(tmp_path):
    _, good, _ = call("longest", "--shape", "L", "--m", "5", "--n", "4", "--k", "2", "--l", "2",
                      "--s", "1,1", "--t", "5,4", "--format", "json")
    bad = json.loads(good)
    bad["path"] = bad["path"][:-2] + [bad["path"][-1]]
    bad["length"] = len(bad["path"])
    f = tmp_path / "records.jsonl"
    f.write_text(good + json.dumps(bad) + "\n")
    code, out, _ = call("check", str(f))
    assert code == EXIT_MISMATCH
    assert out.splitlines()[0] == "ok" and out.splitlines()[1].startswith("invalid")
    f.write_text(good)
    assert call("check", str(f))[0] == EXIT_OK


def test_fuzz_small_sweep(tmp_path):
    code, out, _ = call("fuzz", "--max-vertices", "7")
    assert code == EXIT_OK and " 0 mismatches" in out
    seed = tmp_path / "seed.jsonl"
    seed.write_text(json.dumps({"shape": {"kind": "C", "m": 3, "n": 5, "k": 2, "l": 1, "c": 2},
                                "s": [1, 1], "t": [2, 1]}) + "\n")
    code, out, _ = call("fuzz", "--seed-file", str(seed))
    assert code == EXIT_OK and out.startswith("checked 1 instances")


def test_fuzz_budget_env(monkeypatch):
    monkeypatch.setenv("SUPERGRID_FUZZ_BUDGET", "5")
    code, out, _ = call("fuzz", "--max-vertices", "9", "--shapes", "R")
    assert code == EXIT_OK and "0 over budget" not in out
    monkeypatch.setenv("SUPERGRID_FUZZ_BUDGET", "lots")
    assert call("fuzz", "--max-vertices", "4")[0] == EXIT_USAGE


@pytest.mark.parametrize("fmt", ["text", "svg"])
def test_render_text_and_svg(fmt):
    code, out, _ = call("render", "--shape", "C", "--m", "5", "--n", "5", "--k", "2", "--l", "1",
                        "--c", "2", "--s", "1,1", "--t", "5,5", "--format", fmt)
    assert code == EXIT_OK
    if fmt == "text":
        assert out.splitlines()[0].startswith("s") and out.count("o") == 21
    else:
        assert out.lstrip().startswith("<svg") and "<polyline" in out


def test_render_png(tmp_path):
    target = tmp_path / "c.png"
    code, _, _ = call("render", "--shape", "R", "--m", "4", "--n", "3", "--format", "png",
                      "--out", str(target))
    assert code == EXIT_OK and target.read_bytes()[:4] == b"\x89PNG"
    assert call("render", "--shape", "R", "--m", "4", "--n", "3", "--format", "png")[0] == EXIT_USAGE


def test_report_writes_all_artifacts(tmp_path):
    code, out, _ = call("report", "--out", str(tmp_path), "--sizes", "400,1600", "--repeats", "1")
    assert code == EXIT_OK and "slope" in out
    for name in ("timing.csv", "timing.json", "timing.png", "example_longest.png"):
        assert (tmp_path / name).exists()


def test_instance_spec_and_enumeration():
    spec = InstanceSpec.from_json({"shape": {"kind": "C", "m": 4, "n": 3, "k": 1, "l": 1, "c": 1},
                                   "s": [1, 1], "t": [1, 3]})
    assert spec.shape() == CShape(4, 3, 1, 1, 1) and spec.s == (1, 1)
    shapes = list(enumerate_shapes(6))
    assert all(s.size <= 6 for s in shapes) and len(shapes) == len(set(map(repr, shapes)))
