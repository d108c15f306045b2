"""Rectangular supergrid graphs: canonical cycles, Hamiltonian paths with
forced edges, and longest paths for thin boards.

Paths and cycles are reported in the global frame of the shape.  Forced
edge positions (``w``, ``z``, ``f``, the last column) are read in the
shape's local frame.
"""

from __future__ import annotations

import enum
from typing import Iterable

from . import engine
from .core import (Coord, ConstructionError, Cycle, ForbiddenConditionError, ParameterError,
                   Path, Rect)
from .engine import Requirement


class BoundarySide(str, enum.Enum):
    TOP = "top"
    BOTTOM = "bottom"
    LEFT = "left"
    RIGHT = "right"


def _box(shape: Rect) -> tuple[int, int, int, int]:
    return shape.boxes()[0]


# ---------------------------------------------------------------------------
# Hamiltonian cycles


def _comb(W: int, H: int) -> list[Coord]:
    """Cycle of ``R(W, H)`` whose left, bottom and right sides are flat and
    whose top side is concave.  ``W, H >= 3``."""
    cyc = [(1, y) for y in range(1, H + 1)]
    cyc += [(x, H) for x in range(2, W + 1)]
    cyc += [(W, y) for y in range(H - 1, 0, -1)]
    # cover columns 2..W-1 x rows 1..H-1 from (W-1, 1) to a neighbour of (1, 1)
    w, h = W - 2, H - 1
    if w == 1:
        if h != 2:
            raise ConstructionError("concave face on a side of length 3 needs a 3x3 board")
        return cyc + [(2, 2), (2, 1)]
    stop = 2 if w % 2 == 0 else 5
    down = True
    for x in range(W - 1, stop - 1, -1):
        rows = range(1, h + 1) if down else range(h, 0, -1)
        cyc += [(x, y) for y in rows]
        down = not down
    if w % 2 == 0:
        return cyc
    cyc += [(4, y) for y in range(1, h + 1)]
    last = 1 if h % 2 else 3
    for r in range(h, last - 1, -1):
        cyc += [(3, r), (2, r)] if (h - r) % 2 == 0 else [(2, r), (3, r)]
    if h % 2 == 0:
        cyc += [(3, 2), (3, 1), (2, 1), (2, 2)]
    return cyc


def hc_rect(shape: Rect, concave_on: BoundarySide | str = BoundarySide.TOP) -> Cycle:
    """A canonical Hamiltonian cycle: every boundary edge of three sides is
    used and the fourth side (``concave_on``, in global orientation) is the
    concave one."""
    side = BoundarySide(concave_on)
    x0, x1, y0, y1 = _box(shape)
    gw, gh = x1 - x0 + 1, y1 - y0 + 1
    if min(gw, gh) == 1:
        raise ForbiddenConditionError(["F5"], f"{shape} has no Hamiltonian cycle")
    if side in (BoundarySide.TOP, BoundarySide.BOTTOM):
        W, H = gw, gh
    else:
        W, H = gh, gw
    if W == 2 or H == 2:
        local = [(1, y) for y in range(1, H + 1)] + [(W, y) for y in range(H, 0, -1)] \
            if W == 2 else [(x, 1) for x in range(1, W + 1)] + [(x, 2) for x in range(W, 0, -1)]
    else:
        if W == 3 and H > 3:
            raise ParameterError(f"the concave face of {shape} must lie on a longer side")
        local = _comb(W, H)
    if side is BoundarySide.TOP:
        out = [(x0 + x - 1, y0 + y - 1) for x, y in local]
    elif side is BoundarySide.BOTTOM:
        out = [(x0 + x - 1, y1 - y + 1) for x, y in local]
    elif side is BoundarySide.LEFT:
        out = [(x0 + y - 1, y0 + x - 1) for x, y in local]
    else:
        out = [(x1 - y + 1, y0 + x - 1) for x, y in local]
    cyc = Cycle(out)
    if len(cyc) != shape.size:  # pragma: no cover
        raise ConstructionError("cycle does not cover the board")
    return cyc


# ---------------------------------------------------------------------------
# Hamiltonian paths


def rect_f1(shape: Rect, s: Coord, t: Coord) -> bool:
    """Geometric form of F1 for rectangles."""
    x0, x1, y0, y1 = _box(shape)
    gw, gh = x1 - x0 + 1, y1 - y0 + 1
    if gh == 1 or gw == 1:
        ends = {(x0, y0), (x1, y1)}
        return {s, t} != ends
    if gh == 2 and gw > 2:
        return s[0] == t[0] and x0 < s[0] < x1
    if gw == 2 and gh > 2:
        return s[1] == t[1] and y0 < s[1] < y1
    return False


def _check(shape: Rect, s: Coord, t: Coord) -> None:
    shape.require(s)
    shape.require(t)
    if s == t:
        raise ParameterError("s and t must differ")


def _side_requirements(shape: Rect) -> list[Requirement]:
    x0, x1, y0, y1 = _box(shape)
    if x0 == x1 or y0 == y1:
        return []
    return [Requirement.horizontal(y0, x0, x1), Requirement.horizontal(y1, x0, x1),
            Requirement.vertical(x0, y0, y1), Requirement.vertical(x1, y0, y1)]


def _engine_path(shape: Rect, s: Coord, t: Coord, extra: Iterable[Requirement] = ()) -> Path:
    """Canonical when possible; tiny boards where no path touches every side
    fall back to any Hamiltonian path meeting ``extra``."""
    extra = list(extra)
    boxes = shape.boxes()
    try:
        verts = engine.hamiltonian_path(boxes, s, t, _side_requirements(shape) + extra)
    except ConstructionError:
        verts = engine.hamiltonian_path(boxes, s, t, extra)
    return Path(verts)


def hp_rect(shape: Rect, s: Coord, t: Coord) -> Path:
    """A canonical Hamiltonian ``(s, t)``-path."""
    _check(shape, s, t)
    if rect_f1(shape, s, t):
        raise ForbiddenConditionError(["F1"])
    x0, x1, y0, y1 = _box(shape)
    if x0 == x1 or y0 == y1:
        p = [(x, y) for y in range(y0, y1 + 1) for x in range(x0, x1 + 1)]
        return Path(p if p[0] == s else p[::-1])
    return _engine_path(shape, s, t)


def rect_f2(shape: Rect, s: Coord, t: Coord) -> bool:
    """F2 in the local frame of ``shape``."""
    ls, lt = shape.frame.to_local(s), shape.frame.to_local(t)
    pair = {ls, lt}
    if shape.n == 2:
        return pair in ({(1, 1), (2, 1)}, {(1, 1), (2, 2)}, {(2, 1), (1, 2)})
    return pair == {(1, 1), (2, 1)}


def hp_rect_forced_edge(shape: Rect, s: Coord, t: Coord) -> Path:
    """Hamiltonian ``(s, t)``-path through ``(z, f)`` when F2 holds and
    through ``(w, z)`` otherwise, with ``w, z, f`` the first three vertices
    of the local top row."""
    _check(shape, s, t)
    if shape.m < 3 or shape.n < 2:
        raise ParameterError("needs m >= 3 and n >= 2")
    if rect_f1(shape, s, t):
        raise ForbiddenConditionError(["F1"])
    g = shape.frame.to_global
    w, z, f = g((1, 1)), g((2, 1)), g((3, 1))
    forced = (z, f) if rect_f2(shape, s, t) else (w, z)
    p = _engine_path(shape, s, t, [Requirement.edge(*forced)])
    if not p.has_edge(*forced):  # pragma: no cover
        raise ConstructionError("forced edge missing")
    return p


def hp_3rect_tail(shape: Rect, s: Coord, t: Coord) -> Path:
    """Hamiltonian ``(s, t)``-path of a 3-row board using both vertical
    edges of the last local column."""
    _check(shape, s, t)
    m = shape.m
    if shape.n != 3 or m < 3:
        raise ParameterError("needs n == 3 and m >= 3")
    fr = shape.frame
    ls, lt = fr.to_local(s), fr.to_local(t)
    if ls[0] == m or lt[0] == m:
        raise ParameterError("s and t must avoid the last column")
    m0 = max(3, ls[0] + 1, lt[0] + 1)
    tail = [Requirement.edge((m0, 1), (m0, 2)), Requirement.edge((m0, 2), (m0, 3))]
    base = engine.hamiltonian_path([(1, m0, 1, 3)], ls, lt, tail)
    # absorb columns m0+1..m one at a time into the edge (j,1)-(j,2); the
    # nested splices collapse into a single detour
    if m > m0:
        detour = [(x, 1) for x in range(m0 + 1, m + 1)] + [(m, 2), (m, 3)]
        for x in range(m - 1, m0, -1):
            detour += [(x, 2), (x, 3)]
        i = base.index((m0, 1))
        if i + 1 < len(base) and base[i + 1] == (m0, 2):
            base = base[: i + 1] + detour + base[i + 1:]
        else:
            base = base[:i] + detour[::-1] + base[i:]
    p = Path(fr.map_global(base))
    for e in (((m, 1), (m, 2)), ((m, 2), (m, 3))):
        if not p.has_edge(fr.to_global(e[0]), fr.to_global(e[1])):  # pragma: no cover
            raise ConstructionError("tail edge missing")
    return p


# ---------------------------------------------------------------------------
# longest paths


def upper_bound_rect(shape: Rect, s: Coord, t: Coord) -> int:
    _check(shape, s, t)
    x0, x1, y0, y1 = _box(shape)
    gw, gh = x1 - x0 + 1, y1 - y0 + 1
    if gw == 1 or gh == 1:
        return abs(s[0] - t[0]) + abs(s[1] - t[1]) + 1
    if rect_f1(shape, s, t):
        if gh == 2:
            return max(2 * (s[0] - x0 + 1), 2 * (x1 - s[0] + 1))
        return max(2 * (s[1] - y0 + 1), 2 * (y1 - s[1] + 1))
    return gw * gh


def _longest_box(shape: Rect, s: Coord, t: Coord) -> tuple[int, int, int, int]:
    """The box whose Hamiltonian path is a longest path (for the thin and
    cut cases it is a segment or one side of the cut)."""
    x0, x1, y0, y1 = _box(shape)
    gw, gh = x1 - x0 + 1, y1 - y0 + 1
    if gw == 1 or gh == 1:
        return (min(s[0], t[0]), max(s[0], t[0]), min(s[1], t[1]), max(s[1], t[1]))
    if not rect_f1(shape, s, t):
        return (x0, x1, y0, y1)
    if gh == 2:
        return (x0, s[0], y0, y1) if s[0] - x0 >= x1 - s[0] else (s[0], x1, y0, y1)
    return (x0, x1, y0, s[1]) if s[1] - y0 >= y1 - s[1] else (x0, x1, s[1], y1)


def region_rect(shape: Rect, s: Coord, t: Coord) -> list[tuple[int, int, int, int]]:
    _check(shape, s, t)
    return [_longest_box(shape, s, t)]


def longest_rect(shape: Rect, s: Coord, t: Coord) -> Path:
    """A longest ``(s, t)``-path."""
    _check(shape, s, t)
    x0, x1, y0, y1 = _box(shape)
    gw, gh = x1 - x0 + 1, y1 - y0 + 1
    if gw == 1 or gh == 1:
        dx = (t[0] > s[0]) - (t[0] < s[0])
        dy = (t[1] > s[1]) - (t[1] < s[1])
        n = abs(s[0] - t[0]) + abs(s[1] - t[1]) + 1
        return Path([(s[0] + i * dx, s[1] + i * dy) for i in range(n)])
    if not rect_f1(shape, s, t):
        return hp_rect(shape, s, t)
    # s and t cut a 2-wide board: keep the larger side
    return Path(engine.hamiltonian_path([_longest_box(shape, s, t)], s, t))

