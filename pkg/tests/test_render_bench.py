import csv
import json

from supergrid import bench
from supergrid.core import CShape, LShape
from supergrid.render import render_ascii, render_svg, write_timing_report
from supergrid.solve import longest


def test_ascii_marks_ends_and_hole():
    L = LShape(3, 2, 1, 1)
    text = render_ascii(L, [(1, 1), (2, 1), (3, 2)])
    assert text.splitlines() == ["so", "..t"]


def test_svg_shades_the_hole():
    C = CShape(4, 4, 2, 2, 1)
    svg = render_svg(C, longest(C, (1, 1), (4, 4)).verts)
    assert svg.count("<circle") == C.size and "<rect" in svg


def test_square_c_and_timing(tmp_path):
    shape = bench.square_c(400)
    assert (shape.m, shape.n) == (20, 20)
    timings, slope = bench.run((400, 1600), repeats=1)
    assert [t.mn for t in timings] == [400, 1600] and slope == slope
    files = write_timing_report([t.row() for t in timings], slope, tmp_path)
    assert {f.name for f in files} == {"timing.csv", "timing.json", "timing.png"}
    with open(tmp_path / "timing.csv") as fh:
        rows = list(csv.DictReader(fh))
    assert [int(r["mn"]) for r in rows] == [400, 1600]
    assert json.loads((tmp_path / "timing.json").read_text())["slope"] == slope
