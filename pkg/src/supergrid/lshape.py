"""L-shaped supergrid graphs: Hamiltonian cycles and paths, the forbidden
conditions F1/F3/F4/F5, and exact longest paths.

Case tests are written for the canonical placement (block removed at the
upper right).  Each test is also tried on the anti-diagonal mirror, which
maps ``L(m, n; k, l)`` onto ``L(n, m; l, k)``, and with ``s`` and ``t``
exchanged.  The first case in table order that matches under any of these
symmetries wins.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from . import engine
from .core import (Box, Coord, Cycle, ForbiddenConditionError, LShape, ParameterError, Path,
                   geometric_f1)
from .engine import Requirement

L_CASES = ("C0", "FC1", "FC2", "FC3", "FC4", "FC5", "FC6a", "FC6b", "FC6c", "FC6d", "F4case")
_ORDER = ("FC1", "FC2", "FC3", "FC4", "FC5", "FC6a", "FC6b", "FC6c", "FC6d")


@dataclass(frozen=True)
class LBoundCase:
    """Classification of an ``(L, s, t)`` triple for the longest-path bound."""

    case: str
    forbidden: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.case not in L_CASES:
            raise ValueError(f"unknown case {self.case}")


# A plan says how the longest path is obtained, in the coordinates of the
# symmetry variant that matched:
#   ("hp",)                      Hamiltonian path of the whole shape
#   ("walk", [v, ...])           an explicit vertex sequence
#   ("sub", [boxes, boxes, ..])  best longest path over these sub-regions
Plan = tuple


@dataclass(frozen=True)
class _Variant:
    m: int
    n: int
    k: int
    l: int
    fwd: Callable[[Coord], Coord]
    back: Callable[[Coord], Coord]


def _variants(m: int, n: int, k: int, l: int) -> list[_Variant]:
    ident = (lambda p: p)

    def mirror(p: Coord, m=m, n=n) -> Coord:
        return (n + 1 - p[1], m + 1 - p[0])

    def unmirror(p: Coord, m=m, n=n) -> Coord:
        return (m + 1 - p[1], n + 1 - p[0])

    return [_Variant(m, n, k, l, ident, ident), _Variant(n, m, l, k, mirror, unmirror)]


# ---------------------------------------------------------------------------
# forbidden conditions


def _deg1(m: int, n: int, k: int, l: int) -> list[Coord]:
    out = []
    if m - k == 1 and l >= 2:
        out.append((1, 1))
    if n - l == 1 and k >= 2:
        out.append((m, n))
    return out


def _f4(m: int, n: int, k: int, l: int, s: Coord, t: Coord) -> bool:
    return (m - k == 1 and n - l == 2 and l == 1 and k >= 2
            and {s, t} in ({(1, 2), (2, 3)}, {(1, 3), (2, 2)}))


def l_forbidden(shape: LShape, s: Coord, t: Coord) -> frozenset[str]:
    """Forbidden conditions F1, F3 and F4 that hold for the triple."""
    _check(shape, s, t)
    fr = shape.frame
    ls, lt = fr.to_local(s), fr.to_local(t)
    m, n, k, l = shape.m, shape.n, shape.k, shape.l
    out = set()
    if geometric_f1(shape, s, t):
        out.add("F1")
    if any(w not in (ls, lt) for w in _deg1(m, n, k, l)):
        out.add("F3")
    for v in _variants(m, n, k, l):
        if _f4(v.m, v.n, v.k, v.l, v.fwd(ls), v.fwd(lt)):
            out.add("F4")
    return frozenset(out)


def l_f5(shape: LShape) -> bool:
    return bool(_deg1(shape.m, shape.n, shape.k, shape.l))


def _check(shape: LShape, s: Coord, t: Coord) -> None:
    shape.require(s)
    shape.require(t)
    if s == t:
        raise ParameterError("s and t must differ")


# ---------------------------------------------------------------------------
# longest-path case table


def _vertex_cut(m: int, n: int, k: int, l: int, s: Coord, t: Coord) -> bool:
    shape = LShape(m, n, k, l)
    return geometric_f1(shape, s, t)


def _match(case: str, m: int, n: int, k: int, l: int, s: Coord, t: Coord) -> Optional[Plan]:
    """The plan for ``case`` when its condition holds in this orientation."""
    a = m - k
    thin = a == 1 and n - l == 1
    (sx, sy), (tx, ty) = s, t
    if case == "FC1":
        # the arm need not meet a one-row body: any width-1 arm forces the walk
        if a == 1 and l > 1 and sy <= l and ty <= l:
            step = 1 if ty > sy else -1
            return ("walk", [(1, y) for y in range(sy, ty + step, step)])
    elif case == "FC2":
        # also covers s = (1, l), where the same walk is optimal
        if thin and l > 1 and sx == 1 and sy <= l and tx > 1:
            return ("walk", [(1, y) for y in range(sy, n + 1)] + [(x, n) for x in range(2, tx + 1)])
    elif case == "FC3":
        if (thin and l > 1 and sx == tx == 1 and ty == n
                and (k > 1 or min(sy, ty) > 1)):
            return ("walk", [(1, y) for y in range(sy, l + 1)] + [(2, n), (1, n)])
        # both ends on the one-row body of width 2: one arm vertex fits between
        if thin and l > 1 and k == 1 and s == (1, n) and t == (2, n):
            return ("walk", [(1, n), (1, l), (2, n)])
    elif case == "FC4":
        if n - l > 1 and a == 1 and l > 1:
            low = sy > l and ty > l
            one = (sy <= l) != (ty <= l)
            if (low and not _vertex_cut(m, n, k, l, s, t)) or one:
                cut = l - 1 if sy >= l and ty >= l else min(sy, ty) - 1
                if cut > 0:
                    return ("sub", [[(1, a, cut + 1, l), (1, m, l + 1, n)]])
    elif case == "FC5":
        if n - l > 1 and a == 1 and m > 2 and s == (1, l + 1) and t == (2, l + 1):
            return ("sub", [[(1, m, l + 1, n)]])
    elif case == "FC6a":
        if l > 1 and n - l > 1 and a == 2 and sy == ty and 2 <= sy <= l:
            return ("sub", [[(1, 2, 1, sy)], [(1, a, sy, l), (1, m, l + 1, n)]])
    elif case == "FC6b":
        if m == 2 and k == l == 1 and n - l > 1 and sy == ty and l + 1 <= sy <= n - 1:
            return ("sub", [[(1, 1, 1, 1), (1, 2, 2, sy)], [(1, 2, sy, n)]])
    elif case == "FC6c":
        if k > 1 and l == 1 and a == 1 and n - l == 2 and sx == tx and 2 <= sx <= m - 1:
            return ("sub", [[(1, 1, 1, 1), (1, sx, 2, 3)], [(sx, m, 2, 3)]])
    elif case == "FC6d":
        if ((m == 2 and k == 1 and l > 1 and n - l > 1 and sy == ty and l + 1 <= sy <= n - 1)
                or (k > 1 and l > 1 and a == 1 and n - l == 2 and sx == tx and 2 <= sx <= m - 1)):
            return ("sub", [[(1, a, l, l), (1, m, l + 1, n)]])
    return None


@dataclass(frozen=True)
class _Resolved:
    case: str
    forbidden: frozenset[str]
    plan: Plan
    variant: _Variant
    swapped: bool


def _resolve(shape: LShape, s: Coord, t: Coord) -> _Resolved:
    forb = l_forbidden(shape, s, t)
    fr = shape.frame
    ls, lt = fr.to_local(s), fr.to_local(t)
    m, n, k, l = shape.m, shape.n, shape.k, shape.l
    variants = _variants(m, n, k, l)
    if not forb:
        return _Resolved("C0", forb, ("hp",), variants[0], False)
    for case in _ORDER:
        for v in variants:
            for swapped in (False, True):
                a, b = v.fwd(ls), v.fwd(lt)
                if swapped:
                    a, b = b, a
                plan = _match(case, v.m, v.n, v.k, v.l, a, b)
                if plan is not None:
                    return _Resolved(case, forb, plan, v, swapped)
    if "F4" in forb:
        for v in variants:
            a, b = v.fwd(ls), v.fwd(lt)
            if _f4(v.m, v.n, v.k, v.l, a, b):
                # (1, 1) cannot be reached; the two lower rows remain
                return _Resolved("F4case", forb, ("sub", [[(1, v.m, 2, 3)]]), v, False)
    raise AssertionError(f"unclassified triple {shape} {s} {t}")  # pragma: no cover


def classify_l(shape: LShape, s: Coord, t: Coord) -> LBoundCase:
    r = _resolve(shape, s, t)
    return LBoundCase(r.case, r.forbidden)


def _sub_shapes(shape: LShape, r: _Resolved) -> list:
    from .core import shape_from_boxes

    fr = shape.frame
    out = []
    for boxes in r.plan[1]:
        glob = []
        for x0, x1, y0, y1 in boxes:
            p = fr.to_global(r.variant.back((x0, y0)))
            q = fr.to_global(r.variant.back((x1, y1)))
            glob.append((min(p[0], q[0]), max(p[0], q[0]), min(p[1], q[1]), max(p[1], q[1])))
        out.append(shape_from_boxes(glob))
    return out


def region_l(shape: LShape, s: Coord, t: Coord) -> list[Box]:
    """Global boxes covering exactly the vertex set of :func:`longest_l`."""
    from .core import cells_to_boxes
    from .solve import longest_region, upper_bound

    r = _resolve(shape, s, t)
    kind = r.plan[0]
    if kind == "hp":
        return shape.boxes()
    if kind == "walk":
        return cells_to_boxes(shape.frame.to_global(r.variant.back(p)) for p in r.plan[1])
    best = max(_sub_shapes(shape, r), key=lambda g: upper_bound(g, s, t))
    return longest_region(best, s, t)


def upper_bound_l(shape: LShape, s: Coord, t: Coord) -> int:
    """The longest-path bound of the classified case."""
    from .solve import upper_bound

    r = _resolve(shape, s, t)
    kind = r.plan[0]
    if kind == "hp":
        return shape.size
    if kind == "walk":
        return len(r.plan[1])
    return max(upper_bound(g, s, t) for g in _sub_shapes(shape, r))


def longest_l(shape: LShape, s: Coord, t: Coord) -> Path:
    """A longest ``(s, t)``-path."""
    from .solve import longest, upper_bound

    r = _resolve(shape, s, t)
    kind = r.plan[0]
    if kind == "hp":
        return hp_l(shape, s, t)
    if kind == "walk":
        verts = [shape.frame.to_global(r.variant.back(p)) for p in r.plan[1]]
        if r.swapped:
            verts.reverse()
        return Path(verts)
    subs = _sub_shapes(shape, r)
    best = max(subs, key=lambda g: upper_bound(g, s, t))
    return longest(best, s, t)


# ---------------------------------------------------------------------------
# Hamiltonian cycles and paths


_SIDES = ("top", "bottom", "left", "right")


def face_requirement(boxes: Sequence[Box], side: str) -> Requirement:
    """Some boundary edge on the outer line of ``side`` of the bounding box."""
    x0 = min(b[0] for b in boxes)
    x1 = max(b[1] for b in boxes)
    y0 = min(b[2] for b in boxes)
    y1 = max(b[3] for b in boxes)
    if side == "top":
        return Requirement.horizontal(y0, x0, x1)
    if side == "bottom":
        return Requirement.horizontal(y1, x0, x1)
    if side == "left":
        return Requirement.vertical(x0, y0, y1)
    if side == "right":
        return Requirement.vertical(x1, y0, y1)
    raise ParameterError(f"side must be one of {_SIDES}")


def hc_l(shape: LShape, face: Optional[str] = None,
         require: Sequence[Requirement] = ()) -> Cycle:
    """A Hamiltonian cycle; ``face`` asks for a boundary edge on that side of
    the bounding box (global orientation)."""
    if l_f5(shape):
        raise ForbiddenConditionError(["F5"])
    req = list(require)
    if face is not None:
        req.append(face_requirement(shape.boxes(), face))
    verts = engine.hamiltonian_cycle(shape.boxes(), req)
    return Cycle(verts)


def hp_l(shape: LShape, s: Coord, t: Coord, face: Optional[str] = None,
         require: Sequence[Requirement] = ()) -> Path:
    """A Hamiltonian ``(s, t)``-path; ``face`` as for :func:`hc_l`."""
    forb = l_forbidden(shape, s, t)
    if forb:
        raise ForbiddenConditionError(sorted(forb))
    req = list(require)
    if face is not None:
        req.append(face_requirement(shape.boxes(), face))
    return Path(engine.hamiltonian_path(shape.boxes(), s, t, req))
