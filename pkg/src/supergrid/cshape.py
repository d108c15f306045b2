"""C-shaped supergrid graphs: Hamiltonicity and exact longest paths.

Local coordinates put the removed ``k x l`` block on the right, with ``c``
rows above it and ``d`` rows below.  Every case test is written for that
placement.  It is also tried after the vertical flip ``y -> n + 1 - y``,
which exchanges ``c`` and ``d``, and with ``s`` and ``t`` exchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from . import engine
from .core import (Box, Coord, ConstructionError, CShape, Cycle, ForbiddenConditionError,
                   ParameterError, Path, PathError, Rect, cells_to_boxes, geometric_f1,
                   shape_from_boxes)
from .engine import Requirement
from .lshape import hc_l
from .rect import BoundarySide, hc_rect
from .stitching import (concat_paths, find_parallel_pair, insert_vertex, merge_cycle_into_path,
                        merge_cycles)

C_FORBIDDEN = ("F1", "F3", "F6", "F7", "F8_1", "F8_2", "F8_3", "F9")
C_CASES = ("C1", "FC7", "FC8", "FC9", "FC10", "FC11", "FC12", "FC13", "FC14", "FC15", "FC16",
           "FC17", "FC18")


@dataclass(frozen=True)
class CBoundCase:
    """Longest-path case of a ``(C, s, t)`` triple."""

    case: str

    def __post_init__(self) -> None:
        if self.case not in C_CASES:
            raise ValueError(f"unknown case {self.case}")


@dataclass(frozen=True)
class _Variant:
    m: int
    n: int
    k: int
    l: int
    c: int
    fwd: Callable[[Coord], Coord]

    @property
    def a(self) -> int:
        return self.m - self.k

    @property
    def d(self) -> int:
        return self.n - self.l - self.c


def _variants(shape: CShape) -> list[_Variant]:
    m, n, k, l, c = shape.m, shape.n, shape.k, shape.l, shape.c

    def flip(p: Coord, n=n) -> Coord:
        return (p[0], n + 1 - p[1])

    return [_Variant(m, n, k, l, c, lambda p: p), _Variant(m, n, k, l, n - l - c, flip)]


def _check(shape: CShape, s: Coord, t: Coord) -> None:
    shape.require(s)
    shape.require(t)
    if s == t:
        raise ParameterError("s and t must differ")


# ---------------------------------------------------------------------------
# forbidden conditions


def _deg1(m: int, n: int, k: int, c: int, d: int) -> list[Coord]:
    out = []
    if k >= 2 and c == 1:
        out.append((m, 1))
    if k >= 2 and d == 1:
        out.append((m, n))
    return out


def _f7(v: _Variant, s: Coord, t: Coord) -> bool:
    if not (v.m == 3 and v.a == 2):
        return False
    pair = {s, t}
    n = v.n
    return ((v.c == 1 and pair in ({(1, 1), (2, 2)}, {(1, 2), (2, 1)}))
            or (v.d == 1 and pair in ({(1, n), (2, n - 1)}, {(1, n - 1), (2, n)})))


def _f8(v: _Variant, s: Coord, t: Coord) -> set[str]:
    out: set[str] = set()
    if not (v.n == 3 and v.k == v.c == v.d == 1):
        return out
    m, a = v.m, v.a
    for p, q in ((s, t), (t, s)):
        if a >= 2 and p[0] == q[0] == m - 1 and abs(p[1] - q[1]) == 2:
            out.add("F8_1")
        if a == 2 and p[0] == 1 and q[0] == 2 and abs(p[1] - q[1]) == 2:
            out.add("F8_2")
        if a > 2 and p[0] < m - 1 and q == (m - 1, 2):
            out.add("F8_3")
    return out


def _f9(v: _Variant, s: Coord, t: Coord) -> bool:
    c, l = v.c, v.l
    return v.a == 1 and ((s[1] <= c and t[1] <= c) or (s[1] > c + l and t[1] > c + l))


def classify_c_hp(shape: CShape, s: Coord, t: Coord) -> frozenset[str]:
    """Forbidden conditions met by the triple; empty exactly when a
    Hamiltonian ``(s, t)``-path exists."""
    _check(shape, s, t)
    fr = shape.frame
    ls, lt = fr.to_local(s), fr.to_local(t)
    v = _variants(shape)[0]
    out: set[str] = set()
    if geometric_f1(shape, s, t):
        out.add("F1")
    if any(w not in (ls, lt) for w in _deg1(v.m, v.n, v.k, v.c, v.d)):
        out.add("F3")
    if _f7(v, ls, lt):
        out.add("F7")
    out |= _f8(v, ls, lt)
    if _f9(v, ls, lt):
        out.add("F9")
    return frozenset(out)


def c_f6(shape: CShape) -> bool:
    return shape.a == 1 or bool(_deg1(shape.m, shape.n, shape.k, shape.c, shape.d))


# ---------------------------------------------------------------------------
# Hamiltonian cycles and paths


def _to_global(shape: CShape, v: _Variant, boxes: list[Box]) -> list[Box]:
    fr = shape.frame
    out = []
    for x0, x1, y0, y1 in boxes:
        p = fr.to_global(v.fwd((x0, y0)))
        q = fr.to_global(v.fwd((x1, y1)))
        out.append((min(p[0], q[0]), max(p[0], q[0]), min(p[1], q[1]), max(p[1], q[1])))
    return out


def _pt(shape: CShape, v: _Variant, p: Coord) -> Coord:
    return shape.frame.to_global(v.fwd(p))


def hc_c(shape: CShape) -> Cycle:
    """A Hamiltonian cycle (exists iff F6 fails)."""
    if c_f6(shape):
        raise ForbiddenConditionError(["F6"])
    vs = _variants(shape)
    if shape.c == 1 and shape.d == 1:
        # k == 1 here: a canonical cycle of the left block, flat toward the
        # hole column, picks up the two remaining corner vertices
        v = vs[0]
        a, n, m = v.a, v.n, v.m
        left = shape_from_boxes(_to_global(shape, v, [(1, a, 1, n)]))
        side = _away_from(shape, v, "right")
        try:
            cyc = hc_rect(left, side)
        except ParameterError:
            cyc = hc_rect(left, _away_from(shape, v, "top"))
        cyc = insert_vertex(cyc, _pt(shape, v, (m, 1)),
                            (_pt(shape, v, (a, 1)), _pt(shape, v, (a, 2))))
        cyc = insert_vertex(cyc, _pt(shape, v, (m, n)),
                            (_pt(shape, v, (a, n - 1)), _pt(shape, v, (a, n))))
        return Cycle(cyc.verts)
    # cut off the lower full-width band (d >= 2 after the flip) and merge
    v = vs[0] if shape.d >= 2 else vs[1]
    m, n, c, l = v.m, v.n, v.c, v.l
    top = shape_from_boxes(_to_global(shape, v, [(1, m, 1, c), (1, v.a, c + 1, c + l)]))
    bottom = shape_from_boxes(_to_global(shape, v, [(1, m, c + l + 1, n)]))
    toward = _side_of(shape, v, "bottom")
    c1 = hc_l(top, face=toward)
    c2 = _hc_rect_flat(bottom, _side_of(shape, v, "top"))
    pair = find_parallel_pair(c1, c2)
    if pair is None:  # pragma: no cover
        raise ConstructionError("no parallel edges across the cut")
    return merge_cycles(c1, c2, pair)


_OPPOSITE = {"top": "bottom", "bottom": "top", "left": "right", "right": "left"}


def _side_of(shape: CShape, v: _Variant, local_side: str) -> str:
    """Global side corresponding to ``local_side`` of the variant frame."""
    probe = {"top": ((1, 1), (1, 2)), "bottom": ((1, 2), (1, 1)),
             "left": ((1, 1), (2, 1)), "right": ((2, 1), (1, 1))}[local_side]
    a, b = (_pt(shape, v, p) for p in probe)
    dx, dy = a[0] - b[0], a[1] - b[1]
    if dy < 0:
        return "top"
    if dy > 0:
        return "bottom"
    return "left" if dx < 0 else "right"


def _away_from(shape: CShape, v: _Variant, local_side: str) -> str:
    return _OPPOSITE[_side_of(shape, v, local_side)]


def _hc_rect_flat(rect: Rect, flat: str) -> Cycle:
    """Canonical cycle of ``rect`` whose ``flat`` side is flat."""
    opposite = _OPPOSITE[flat]
    others = [x for x in ("top", "bottom", "left", "right") if x not in (flat,)]
    for side in [opposite] + others:
        try:
            return hc_rect(rect, BoundarySide(side))
        except ParameterError:
            continue
    raise ConstructionError(f"no canonical cycle for {rect}")  # pragma: no cover


def hp_c(shape: CShape, s: Coord, t: Coord) -> Path:
    """A Hamiltonian ``(s, t)``-path (exists iff :func:`classify_c_hp` is empty)."""
    forb = classify_c_hp(shape, s, t)
    if forb:
        raise ForbiddenConditionError(sorted(forb))
    if shape.a == 1:
        return _hp_thin_waist(shape, s, t)
    return Path(engine.hamiltonian_path(shape.boxes(), s, t))


def _hp_thin_waist(shape: CShape, s: Coord, t: Coord) -> Path:
    """a = 1: the one-column waist forces the path through it exactly once.
    Cut above the waist, solve both halves, concatenate."""
    v = _variants(shape)[0]
    fr = shape.frame
    ls, lt = fr.to_local(s), fr.to_local(t)
    flip = ls[1] > lt[1]
    if flip:
        s, t, ls, lt = t, s, lt, ls
    m, n, c, l = v.m, v.n, v.c, v.l
    upper = shape_from_boxes(_to_global(shape, v, [(1, m, 1, c)]))
    lower = shape_from_boxes(_to_global(shape, v, [(1, 1, c + 1, c + l), (1, m, c + l + 1, n)]))
    p = _pt(shape, v, (1, c) if ls != (1, c) else (2, c))
    q = _pt(shape, v, (1, c + 1))
    from .solve import longest

    p1 = Path([s]) if s == p else longest(upper, s, p)
    p2 = Path([t]) if t == q else longest(lower, q, t)
    out = concat_paths(p1, p2)
    if len(out) != shape.size:  # pragma: no cover
        raise ConstructionError("waist construction lost vertices")
    return out.reversed() if flip else out


# ---------------------------------------------------------------------------
# longest paths
#
# Plans, in the coordinates of the matching variant:
#   ("hp",)                           Hamiltonian path
#   ("walk", [v, ...])                explicit vertex sequence
#   ("sub", [boxes, ...])             best longest path over sub-regions
#   ("concat", boxes1, boxes2, w, zs) longest (s, z) in boxes1 then (w, t) in
#                                     boxes2, best z in zs
#   ("absorb", boxes1, boxes2)        longest path in boxes1 merged with a
#                                     Hamiltonian cycle of the rectangle boxes2
#   ("insert", boxes1, w, edge)       longest path in boxes1 plus vertex w
#                                     spliced into edge


def _g1(v: _Variant) -> list[Box]:
    """The shape without the strip of rows 1..c right of the waist."""
    m, n, c, l, a = v.m, v.n, v.c, v.l, v.a
    return [(1, a, 1, c + l), (1, m, c + l + 1, n)]


def _match(case: str, v: _Variant, s: Coord, t: Coord, cut: bool) -> Optional[tuple]:
    m, n, k, l, c, a, d = v.m, v.n, v.k, v.l, v.c, v.a, v.d
    (sx, sy), (tx, ty) = s, t
    if case == "FC7":
        if a == 1 and sy > c and ty > c:
            return ("sub", [[(1, 1, c + 1, c + l), (1, m, c + l + 1, n)]])
        if a == 1 and sy <= c and ty <= c:
            return ("sub", [[(1, m, 1, c), (1, 1, c + 1, c + 1)]])
    elif case == "FC8":
        if a == 1 and sy <= c < ty:
            zs = [z for z in ((1, c), (2, c)) if z != s]
            return ("concat", [(1, m, 1, c)], [(1, 1, c + 1, c + l), (1, m, c + l + 1, n)],
                    (1, c + 1), zs)
    elif case in ("FC9", "FC14"):
        wide = c >= 2 and d >= 2
        if (a == 2 and sy == ty and c + 1 <= sy <= c + l
                and (case == "FC9") == wide and (wide or c == 1)):
            return ("sub", [[(1, 2, sy, c + l), (1, m, c + l + 1, n)],
                            [(1, m, 1, c), (1, 2, c + 1, sy)]])
    elif case == "FC10":
        if (k >= 2 and a >= 2 and c >= 2 and d == 2 and cut
                and a + 1 <= sx <= m - 1 and a + 1 <= tx <= m - 1
                and sy > c + l and ty > c + l):
            return ("absorb", _g1(v), [(a + 1, m, 1, c)])
    elif case == "FC11":
        if c == 1 and k > 1 and a >= 2 and sy == ty == 1 and sx > a and tx > a:
            step = 1 if tx > sx else -1
            return ("walk", [(x, 1) for x in range(sx, tx + step, step)])
    elif case == "FC12":
        if (c == 1 and a >= 2 and ty == 1 and tx > a
                and (sx <= a or (sx > a and sy > c + l))):
            zs = [z for z in ((a, 1), (a, 2)) if z != s]
            return ("concat", _g1(v), [(a + 1, m, 1, 1)], (a + 1, 1), zs)
    elif case == "FC13":
        if c == 1 and a >= 2 and {s, t} == {(a, 1), (a, 2)}:
            return ("sub", [_g1(v)])
    elif case == "FC15":
        if (c == 1 and d == 2 and k > 1 and a >= 2 and a < sx == tx < m
                and n - 1 <= sy <= n and n - 1 <= ty <= n):
            return ("sub", [[(1, sx, 1, c), (1, a, c + 1, c + l), (1, sx, c + l + 1, n)],
                            [(sx, m, n - 1, n)]])
    elif case == "FC16":
        if c == 1 and a == 2 and {s, t} in ({(1, 1), (2, 2)}, {(1, 2), (2, 1)}):
            return ("sub", [_g1(v)])
    elif case == "FC17":
        if c == 1 and a >= 2 and _f8(v, s, t):
            return ("sub", [_g1(v)])
    elif case == "FC18":
        if c == 1 and k > 1 and a >= 2 and not cut:
            return ("insert", _g1(v), (a + 1, 1), ((a, 1), (a, 2)))
    return None


@dataclass(frozen=True)
class _Resolved:
    case: str
    plan: tuple
    variant: _Variant
    swapped: bool


def _resolve(shape: CShape, s: Coord, t: Coord) -> _Resolved:
    vs = _variants(shape)
    if not classify_c_hp(shape, s, t):
        return _Resolved("C1", ("hp",), vs[0], False)
    fr = shape.frame
    ls, lt = fr.to_local(s), fr.to_local(t)
    cut = geometric_f1(shape, s, t)
    for case in C_CASES[1:]:
        for v in vs:
            for swapped in (False, True):
                a, b = v.fwd(ls), v.fwd(lt)
                if swapped:
                    a, b = b, a
                plan = _match(case, v, a, b, cut)
                if plan is not None:
                    return _Resolved(case, plan, v, swapped)
    raise AssertionError(f"unclassified triple {shape} {s} {t}")  # pragma: no cover


def classify_c_longest(shape: CShape, s: Coord, t: Coord) -> CBoundCase:
    _check(shape, s, t)
    return CBoundCase(_resolve(shape, s, t).case)


def _ends(shape: CShape, r: _Resolved, s: Coord, t: Coord) -> tuple[Coord, Coord]:
    return (t, s) if r.swapped else (s, t)


def _concat_best(shape: CShape, r: _Resolved, s: Coord, t: Coord):
    from .solve import lhat

    _, b1, b2, w, zs = r.plan
    v = r.variant
    g1 = shape_from_boxes(_to_global(shape, v, b1))
    g2 = shape_from_boxes(_to_global(shape, v, b2))
    gw = _pt(shape, v, w)
    best = None
    for z in zs:
        gz = _pt(shape, v, z)
        if gz not in g1 or gz == gw:
            continue
        val = lhat(g1, s, gz) + lhat(g2, gw, t)
        if best is None or val > best[0]:
            best = (val, g1, gz, g2, gw)
    if best is None:  # pragma: no cover
        raise ConstructionError("no connector vertex")
    return best


def upper_bound_c(shape: CShape, s: Coord, t: Coord) -> int:
    """The longest-path bound of the classified case."""
    from .solve import upper_bound

    _check(shape, s, t)
    r = _resolve(shape, s, t)
    s, t = _ends(shape, r, s, t)
    kind, v = r.plan[0], r.variant
    if kind == "hp":
        return shape.size
    if kind == "walk":
        return len(r.plan[1])
    if kind == "sub":
        return max(upper_bound(shape_from_boxes(_to_global(shape, v, b)), s, t)
                   for b in r.plan[1])
    if kind == "concat":
        return _concat_best(shape, r, s, t)[0]
    g1 = shape_from_boxes(_to_global(shape, v, r.plan[1]))
    if kind == "absorb":
        x0, x1, y0, y1 = r.plan[2][0]
        return upper_bound(g1, s, t) + (x1 - x0 + 1) * (y1 - y0 + 1)
    return upper_bound(g1, s, t) + (not _strips_blocked(shape, v, s, t))


def _both_strips(v: _Variant) -> bool:
    """n = 3 with one-row strips above and below the hole: each strip is a
    dead end, and the longest path of G1 may already spend the waist vertex
    on the lower strip."""
    return v.n == 3 and v.c == v.d == 1 and v.k >= 2


def _strips_blocked(shape: CShape, v: _Variant, s: Coord, t: Coord) -> bool:
    """True when both strips are dead ends and no longest path of G1 can
    give up the waist edge: the waist vertex is an endpoint, the endpoints
    straddle it, or (width 2) they sit on opposite corners of the left part."""
    if not _both_strips(v):
        return False
    a = v.m - v.k
    ends = {v.fwd(shape.frame.to_local(p)) for p in (s, t)}
    if (a, 2) in ends or ends == {(a, 1), (a, 3)}:
        return True
    return a == 2 and ends in ({(1, 1), (2, 3)}, {(1, 3), (2, 1)})


def _spliced(shape: CShape, r: _Resolved, s: Coord, t: Coord) -> Optional[Path]:
    """The FC18 splice, or ``None`` when :func:`_strips_blocked` holds."""
    from .solve import lregion

    v = r.variant
    if _strips_blocked(shape, v, s, t):
        return None
    g1 = shape_from_boxes(_to_global(shape, v, r.plan[1]))
    w = _pt(shape, v, r.plan[2])
    e = (_pt(shape, v, r.plan[3][0]), _pt(shape, v, r.plan[3][1]))
    region = lregion(g1, s, t)
    try:
        p1 = Path(engine.hamiltonian_path(region, s, t, [Requirement.edge(*e)]))
    except ConstructionError:
        return Path(engine.hamiltonian_path(region + [(w[0], w[0], w[1], w[1])], s, t))
    out = insert_vertex(p1, w, e)
    assert isinstance(out, Path)
    return out


def region_c(shape: CShape, s: Coord, t: Coord) -> list[Box]:
    """Global boxes covering exactly the vertices of :func:`longest_c`."""
    from .solve import lregion, upper_bound

    _check(shape, s, t)
    r = _resolve(shape, s, t)
    s, t = _ends(shape, r, s, t)
    kind, v = r.plan[0], r.variant
    if kind == "hp":
        return shape.boxes()
    if kind == "walk":
        return cells_to_boxes(_pt(shape, v, p) for p in r.plan[1])
    if kind == "sub":
        subs = [shape_from_boxes(_to_global(shape, v, b)) for b in r.plan[1]]
        best = max(subs, key=lambda g: upper_bound(g, s, t))
        return lregion(best, s, t)
    if kind == "concat":
        _, g1, gz, g2, gw = _concat_best(shape, r, s, t)
        return lregion(g1, s, gz) + lregion(g2, gw, t)
    g1 = shape_from_boxes(_to_global(shape, v, r.plan[1]))
    if kind == "absorb":
        return lregion(g1, s, t) + _to_global(shape, v, r.plan[2])
    w = _pt(shape, v, r.plan[2])
    extra = [] if _strips_blocked(shape, v, s, t) else [(w[0], w[0], w[1], w[1])]
    return lregion(g1, s, t) + extra


def longest_c(shape: CShape, s: Coord, t: Coord) -> Path:
    """A longest ``(s, t)``-path."""
    from .solve import longest, lpath, lregion, upper_bound

    _check(shape, s, t)
    r = _resolve(shape, s, t)
    s0, t0 = s, t
    s, t = _ends(shape, r, s, t)
    kind, v = r.plan[0], r.variant
    if kind == "hp":
        return hp_c(shape, s0, t0)
    if kind == "walk":
        out = Path([_pt(shape, v, p) for p in r.plan[1]])
    elif kind == "sub":
        subs = [shape_from_boxes(_to_global(shape, v, b)) for b in r.plan[1]]
        best = max(subs, key=lambda g: upper_bound(g, s, t))
        out = longest(best, s, t)
    elif kind == "concat":
        _, g1, gz, g2, gw = _concat_best(shape, r, s, t)
        out = concat_paths(lpath(g1, s, gz), lpath(g2, gw, t))
    else:
        g1 = shape_from_boxes(_to_global(shape, v, r.plan[1]))
        region = lregion(g1, s, t)
        if kind == "absorb":
            rect = shape_from_boxes(_to_global(shape, v, r.plan[2]))
            out = _absorb(shape, v, region, rect, s, t)
        else:
            out = _spliced(shape, r, s, t) or lpath(g1, s, t)
    return out if out.start == s0 else out.reversed()


def _absorb(shape: CShape, v: _Variant, region: list[Box], rect: Rect,
            s: Coord, t: Coord) -> Path:
    """Longest path in ``region`` with an edge facing ``rect``, merged with a
    canonical cycle of ``rect`` whose facing side is flat."""
    a, c = v.a, v.c
    x = _pt(shape, v, (a, 1))[0]
    ys = sorted(_pt(shape, v, (a, y))[1] for y in (1, c))
    face = Requirement.vertical(x, ys[0], ys[1])
    try:
        p1 = Path(engine.hamiltonian_path(region, s, t, [face]))
        cyc = _hc_rect_flat(rect, _side_of(shape, v, "left"))
        pair = find_parallel_pair(cyc, p1)
        if pair is not None:
            return merge_cycle_into_path(p1, cyc, pair)
    except (ConstructionError, PathError):
        pass
    return Path(engine.hamiltonian_path(region + rect.boxes(), s, t))

