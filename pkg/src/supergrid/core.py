"""Geometric model of rectangular, L-shaped and C-shaped supergrid graphs.

Coordinates are 1-based ``(x, y)`` pairs with ``(1, 1)`` at the upper-left
corner; ``x`` grows to the right and ``y`` grows downwards.  Two vertices are
adjacent when they differ by at most one in both coordinates (king moves).

Every shape carries a :class:`Frame` that places its canonical local box in a
global coordinate system.  Sub-shapes produced by :func:`separate` keep
reporting vertices in the frame of their parent, so pieces of a decomposition
can be concatenated without any translation step.
"""

from __future__ import annotations

from collections import deque
from itertools import chain
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

Coord = tuple[int, int]
Edge = tuple[Coord, Coord]
# inclusive global rectangle: (x0, x1, y0, y1)
Box = tuple[int, int, int, int]

NEIGHBOR_OFFSETS = (
    (-1, -1), (0, -1), (1, -1),
    (-1, 0), (1, 0),
    (-1, 1), (0, 1), (1, 1),
)


class SupergridError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(SupergridError, ValueError):
    """Shape parameters violate the defining inequalities."""


class OutOfShapeError(SupergridError, ValueError):
    """A vertex does not belong to the shape it was queried against."""


class UnsupportedCutError(SupergridError, ValueError):
    """A separation would produce a piece that is not a rectangle, L or C."""


class PathError(SupergridError, ValueError):
    """A vertex sequence violates the path or cycle invariants."""


class ForbiddenConditionError(SupergridError):
    """The requested Hamiltonian structure provably does not exist."""

    def __init__(self, conditions: Iterable[str], message: str | None = None):
        self.conditions = tuple(conditions)
        super().__init__(message or "forbidden condition(s): " + ", ".join(self.conditions))


class ConstructionError(SupergridError, RuntimeError):
    """A construction that should exist could not be built (a bug)."""


def adjacent(u: Coord, v: Coord) -> bool:
    """True iff ``u`` and ``v`` are distinct and differ by at most 1 per axis."""
    dx = u[0] - v[0]
    dy = u[1] - v[1]
    return (dx or dy) != 0 and -1 <= dx <= 1 and -1 <= dy <= 1


def parallel(e1: Edge, e2: Edge) -> bool:
    """``e1 ≈ e2``: first endpoints adjacent and second endpoints adjacent."""
    return adjacent(e1[0], e2[0]) and adjacent(e1[1], e2[1])


# ---------------------------------------------------------------------------
# frames


@dataclass(frozen=True)
class Frame:
    """Placement of a canonical ``width x height`` box in the global plane.

    A local point is first transposed (when ``swap``), then reflected inside
    the placed box (``flip_x``/``flip_y``) and finally shifted by ``origin``.
    ``width``/``height`` are the dimensions of the *local* box.
    """

    width: int
    height: int
    origin: Coord = (0, 0)
    swap: bool = False
    flip_x: bool = False
    flip_y: bool = False

    @property
    def global_size(self) -> tuple[int, int]:
        return (self.height, self.width) if self.swap else (self.width, self.height)

    def to_global(self, p: Coord) -> Coord:
        x, y = p
        if self.swap:
            x, y = y, x
        gw, gh = self.global_size
        if self.flip_x:
            x = gw + 1 - x
        if self.flip_y:
            y = gh + 1 - y
        return (x + self.origin[0], y + self.origin[1])

    def to_local(self, p: Coord) -> Coord:
        x = p[0] - self.origin[0]
        y = p[1] - self.origin[1]
        gw, gh = self.global_size
        if self.flip_x:
            x = gw + 1 - x
        if self.flip_y:
            y = gh + 1 - y
        if self.swap:
            x, y = y, x
        return (x, y)

    def map_global(self, verts: Sequence[Coord]) -> list[Coord]:
        if self.is_identity:
            return list(verts)
        f = self.to_global
        return [f(v) for v in verts]

    def map_local(self, verts: Sequence[Coord]) -> list[Coord]:
        if self.is_identity:
            return list(verts)
        f = self.to_local
        return [f(v) for v in verts]

    @property
    def is_identity(self) -> bool:
        return not (self.swap or self.flip_x or self.flip_y) and self.origin == (0, 0)

    def box_to_global(self, box: Box) -> Box:
        x0, x1, y0, y1 = box
        a = self.to_global((x0, y0))
        b = self.to_global((x1, y1))
        return (min(a[0], b[0]), max(a[0], b[0]), min(a[1], b[1]), max(a[1], b[1]))

    def compose(self, inner: "Frame") -> "Frame":
        """Frame equivalent to applying ``inner`` first and then ``self``.

        ``inner`` maps a smaller local box into this frame's local box.
        """
        # Determine the composite by mapping three reference points; a
        # dihedral placement is fixed by the images of the box corners.
        w, h = inner.width, inner.height
        p00 = self.to_global(inner.to_global((1, 1)))
        p10 = self.to_global(inner.to_global((2, 1))) if w > 1 else None
        p01 = self.to_global(inner.to_global((1, 2))) if h > 1 else None
        for cand in _all_frames(w, h, p00):
            if p10 is not None and cand.to_global((2, 1)) != p10:
                continue
            if p01 is not None and cand.to_global((1, 2)) != p01:
                continue
            if w == 1 or h == 1:
                # degenerate boxes: also pin the far corner
                far = self.to_global(inner.to_global((w, h)))
                if cand.to_global((w, h)) != far:
                    continue
            return cand
        raise AssertionError("frame composition failed")  # pragma: no cover


def _all_frames(w: int, h: int, p00: Coord) -> Iterator[Frame]:
    for swap in (False, True):
        for fx in (False, True):
            for fy in (False, True):
                f = Frame(w, h, (0, 0), swap, fx, fy)
                q = f.to_global((1, 1))
                yield Frame(w, h, (p00[0] - q[0], p00[1] - q[1]), swap, fx, fy)


def dihedral_frames(width: int, height: int) -> list[Frame]:
    """The eight symmetries of a ``width x height`` box, placed at the origin."""
    return [Frame(width, height, (0, 0), sw, fx, fy)
            for sw in (False, True) for fx in (False, True) for fy in (False, True)]


# ---------------------------------------------------------------------------
# shapes


def _need(cond: bool, what: str) -> None:
    if not cond:
        raise ParameterError(what)


@dataclass(frozen=True)
class _ShapeBase:
    frame: Frame = field(default=None, compare=False, repr=False)  # type: ignore[assignment]

    # subclasses provide: width, height, local_boxes(), size

    def local_boxes(self) -> list[Box]:  # pragma: no cover - abstract
        raise NotImplementedError

    @property
    def size(self) -> int:  # pragma: no cover - abstract
        raise NotImplementedError

    def boxes(self) -> list[Box]:
        """Disjoint global rectangles whose union is the vertex set."""
        return list(self._global_boxes())

    def _global_boxes(self) -> tuple[Box, ...]:
        cached = self.__dict__.get("_boxes")
        if cached is None:
            fr = self.frame
            cached = tuple(fr.box_to_global(b) for b in self.local_boxes())
            object.__setattr__(self, "_boxes", cached)
        return cached

    def contains_local(self, p: Coord) -> bool:
        x, y = p
        return any(x0 <= x <= x1 and y0 <= y <= y1 for x0, x1, y0, y1 in self.local_boxes())

    def __contains__(self, v: object) -> bool:
        if not (isinstance(v, tuple) and len(v) == 2):
            return False
        x, y = v
        for x0, x1, y0, y1 in self._global_boxes():
            if x0 <= x <= x1 and y0 <= y <= y1:
                return True
        return False

    def vertices(self) -> set[Coord]:
        return set(self.iter_vertices())

    def iter_vertices(self) -> Iterator[Coord]:
        for x0, x1, y0, y1 in self.boxes():
            for y in range(y0, y1 + 1):
                for x in range(x0, x1 + 1):
                    yield (x, y)

    def require(self, v: Coord) -> None:
        if v not in self:
            raise OutOfShapeError(f"vertex {v} is not in {self}")

    def placed(self, frame: Frame) -> "_ShapeBase":
        """Same shape re-placed with ``frame``."""
        return _replace_frame(self, frame)

    def local(self) -> "_ShapeBase":
        """Same parameters placed with the identity frame."""
        return _replace_frame(self, Frame(self.width, self.height))  # type: ignore[attr-defined]


def _replace_frame(shape: "Shape", frame: Frame) -> "Shape":
    import dataclasses

    return dataclasses.replace(shape, frame=frame)


@dataclass(frozen=True)
class Rect(_ShapeBase):
    """``R(m, n)``: ``m`` columns by ``n`` rows."""

    m: int = 1
    n: int = 1

    def __init__(self, m: int, n: int, frame: Frame | None = None):
        _need(isinstance(m, int) and isinstance(n, int), "parameters must be integers")
        _need(m >= 1, "m >= 1")
        _need(n >= 1, "n >= 1")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "frame", frame or Frame(m, n))
        _check_frame(self)

    width = property(lambda self: self.m)
    height = property(lambda self: self.n)

    @property
    def size(self) -> int:
        return self.m * self.n

    def local_boxes(self) -> list[Box]:
        return [(1, self.m, 1, self.n)]

    def contains_local(self, p: Coord) -> bool:
        return 1 <= p[0] <= self.m and 1 <= p[1] <= self.n

    def __repr__(self) -> str:
        return f"Rect({self.m},{self.n}){_frame_suffix(self.frame)}"


@dataclass(frozen=True)
class LShape(_ShapeBase):
    """``L(m, n; k, l)``: ``R(m, n)`` minus the ``k x l`` upper-right block."""

    m: int = 2
    n: int = 2
    k: int = 1
    l: int = 1

    def __init__(self, m: int, n: int, k: int, l: int, frame: Frame | None = None):
        for v in (m, n, k, l):
            _need(isinstance(v, int), "parameters must be integers")
        _need(m > 1, "m > 1")
        _need(n > 1, "n > 1")
        _need(k >= 1, "k >= 1")
        _need(l >= 1, "l >= 1")
        _need(m - k >= 1, "m - k >= 1")
        _need(n - l >= 1, "n - l >= 1")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "frame", frame or Frame(m, n))
        _check_frame(self)

    width = property(lambda self: self.m)
    height = property(lambda self: self.n)

    @property
    def a(self) -> int:
        return self.m - self.k

    @property
    def size(self) -> int:
        return self.m * self.n - self.k * self.l

    def local_boxes(self) -> list[Box]:
        return [(1, self.a, 1, self.l), (1, self.m, self.l + 1, self.n)]

    def contains_local(self, p: Coord) -> bool:
        x, y = p
        if not (1 <= x <= self.m and 1 <= y <= self.n):
            return False
        return not (x > self.a and y <= self.l)

    def __repr__(self) -> str:
        return f"LShape({self.m},{self.n};{self.k},{self.l}){_frame_suffix(self.frame)}"


@dataclass(frozen=True)
class CShape(_ShapeBase):
    """``C(m, n; k, l; c, d)``: ``R(m, n)`` minus a ``k x l`` block cut into
    the right side, leaving ``c`` rows above and ``d = n - l - c`` below."""

    m: int = 2
    n: int = 3
    k: int = 1
    l: int = 1
    c: int = 1

    def __init__(self, m: int, n: int, k: int, l: int, c: int, d: int | None = None,
                 frame: Frame | None = None):
        for v in (m, n, k, l, c):
            _need(isinstance(v, int), "parameters must be integers")
        _need(m >= 2, "m >= 2")
        _need(n >= 3, "n >= 3")
        _need(k >= 1, "k >= 1")
        _need(l >= 1, "l >= 1")
        _need(c >= 1, "c >= 1")
        _need(n - l - c >= 1, "d = n - l - c >= 1")
        _need(m - k >= 1, "a = m - k >= 1")
        if d is not None:
            _need(d == n - l - c, f"d must equal n - l - c = {n - l - c}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "frame", frame or Frame(m, n))
        _check_frame(self)

    width = property(lambda self: self.m)
    height = property(lambda self: self.n)

    @property
    def a(self) -> int:
        return self.m - self.k

    @property
    def d(self) -> int:
        return self.n - self.l - self.c

    @property
    def size(self) -> int:
        return self.m * self.n - self.k * self.l

    def local_boxes(self) -> list[Box]:
        c, l = self.c, self.l
        return [(1, self.m, 1, c), (1, self.a, c + 1, c + l), (1, self.m, c + l + 1, self.n)]

    def contains_local(self, p: Coord) -> bool:
        x, y = p
        if not (1 <= x <= self.m and 1 <= y <= self.n):
            return False
        return not (x > self.a and self.c < y <= self.c + self.l)

    def __repr__(self) -> str:
        return (f"CShape({self.m},{self.n};{self.k},{self.l};{self.c},{self.d})"
                f"{_frame_suffix(self.frame)}")


Shape = Union[Rect, LShape, CShape]


def _check_frame(shape: _ShapeBase) -> None:
    fr = shape.frame
    if (fr.width, fr.height) != (shape.width, shape.height):  # type: ignore[attr-defined]
        raise ParameterError("frame size does not match shape size")


def _frame_suffix(fr: Frame) -> str:
    if fr.is_identity:
        return ""
    ops = "".join(t for t, on in (("T", fr.swap), ("X", fr.flip_x), ("Y", fr.flip_y)) if on)
    return f"@{fr.origin}{'/' + ops if ops else ''}"


# ---------------------------------------------------------------------------
# recognition of regions given as rectangle unions


def bounding_box(boxes: Sequence[Box]) -> Box:
    return (min(b[0] for b in boxes), max(b[1] for b in boxes),
            min(b[2] for b in boxes), max(b[3] for b in boxes))


def _box_cells(boxes: Sequence[Box], xs: list[int], ys: list[int]) -> list[list[bool]]:
    """Occupancy of the compressed grid spanned by breakpoints ``xs``/``ys``."""
    grid = [[False] * (len(xs) - 1) for _ in range(len(ys) - 1)]
    for x0, x1, y0, y1 in boxes:
        for j in range(len(ys) - 1):
            if y0 <= ys[j] and ys[j + 1] - 1 <= y1:
                for i in range(len(xs) - 1):
                    if x0 <= xs[i] and xs[i + 1] - 1 <= x1:
                        if grid[j][i]:
                            raise ValueError("overlapping boxes")
                        grid[j][i] = True
    return grid


def shape_from_boxes(boxes: Sequence[Box]) -> Shape:
    """Recognise a union of disjoint global boxes as a placed R, L or C shape.

    Raises :class:`UnsupportedCutError` for any other region.
    """
    boxes = [b for b in boxes if b[0] <= b[1] and b[2] <= b[3]]
    if not boxes:
        raise UnsupportedCutError("empty region")
    bx0, bx1, by0, by1 = bounding_box(boxes)
    xs = sorted({bx0, bx1 + 1} | {b[0] for b in boxes} | {b[1] + 1 for b in boxes})
    ys = sorted({by0, by1 + 1} | {b[2] for b in boxes} | {b[3] + 1 for b in boxes})
    grid = _box_cells(boxes, xs, ys)
    missing = [(i, j) for j in range(len(ys) - 1) for i in range(len(xs) - 1) if not grid[j][i]]
    W, H = bx1 - bx0 + 1, by1 - by0 + 1
    if not missing:
        return Rect(W, H, Frame(W, H, (bx0 - 1, by0 - 1)))
    mi = [i for i, _ in missing]
    mj = [j for _, j in missing]
    i0, i1, j0, j1 = min(mi), max(mi), min(mj), max(mj)
    if len(missing) != (i1 - i0 + 1) * (j1 - j0 + 1):
        raise UnsupportedCutError("removed part is not a single rectangle")
    hx0, hx1 = xs[i0], xs[i1 + 1] - 1
    hy0, hy1 = ys[j0], ys[j1 + 1] - 1
    touch_l, touch_r = hx0 == bx0, hx1 == bx1
    touch_t, touch_b = hy0 == by0, hy1 == by1
    if touch_l and touch_r or touch_t and touch_b:
        raise UnsupportedCutError("removed block splits the region")
    hw, hh = hx1 - hx0 + 1, hy1 - hy0 + 1
    for cand in dihedral_frames(W, H) + dihedral_frames(H, W):
        if cand.width * cand.height != W * H or cand.global_size != (W, H):
            continue
        fr = Frame(cand.width, cand.height, (bx0 - 1, by0 - 1), cand.swap, cand.flip_x, cand.flip_y)
        lw, lh = cand.width, cand.height
        # local block placement: L -> upper right corner; C -> right side.
        p = fr.to_local((hx0, hy0))
        q = fr.to_local((hx1, hy1))
        lx0, lx1 = min(p[0], q[0]), max(p[0], q[0])
        ly0, ly1 = min(p[1], q[1]), max(p[1], q[1])
        k, l = lx1 - lx0 + 1, ly1 - ly0 + 1
        if lx1 != lw:
            continue
        if ly0 == 1 and (touch_l + touch_r + touch_t + touch_b) == 2:
            try:
                return LShape(lw, lh, k, l, fr)
            except ParameterError:
                continue
        if ly0 > 1 and ly1 < lh and lx0 > 1:
            c = ly0 - 1
            try:
                return CShape(lw, lh, k, l, c, frame=fr)
            except ParameterError:
                continue
    raise UnsupportedCutError(f"region with hole {(hw, hh)} is not an L or C shape")


def cells_to_boxes(cells: Iterable[Coord]) -> list[Box]:
    """Disjoint boxes covering ``cells``: maximal row runs, stacked when equal."""
    rows: dict[int, list[int]] = {}
    for x, y in cells:
        rows.setdefault(y, []).append(x)
    runs: list[tuple[int, int, int]] = []
    for y in sorted(rows):
        xs = sorted(rows[y])
        start = prev = xs[0]
        for x in xs[1:]:
            if x != prev + 1:
                runs.append((start, prev, y))
                start = x
            prev = x
        runs.append((start, prev, y))
    open_: dict[tuple[int, int], list[int]] = {}
    out: list[Box] = []
    for x0, x1, y in runs:
        box = open_.get((x0, x1))
        if box is not None and box[3] == y - 1:
            box[3] = y
        else:
            if box is not None:
                out.append(tuple(box))  # type: ignore[arg-type]
            open_[(x0, x1)] = [x0, x1, y, y]
    out.extend(tuple(b) for b in open_.values())  # type: ignore[misc]
    return out


def canonical(shape: Shape) -> tuple[Shape, Frame]:
    """The shape with the identity frame, plus the frame mapping it back."""
    return shape.local(), shape.frame  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# adjacency-level queries


def neighbors(shape: Shape, v: Coord) -> list[Coord]:
    x, y = v
    return [(x + dx, y + dy) for dx, dy in NEIGHBOR_OFFSETS if (x + dx, y + dy) in shape]


def vertices(shape: Shape) -> set[Coord]:
    """Exactly the vertex set of ``shape`` in global coordinates."""
    return shape.vertices()


def degree(shape: Shape, v: Coord) -> int:
    shape.require(v)
    return len(neighbors(shape, v))


def _components_after_removal(verts: set[Coord], removed: set[Coord]) -> int:
    rest = verts - removed
    if not rest:
        return 0
    seen: set[Coord] = set()
    comps = 0
    for v0 in rest:
        if v0 in seen:
            continue
        comps += 1
        seen.add(v0)
        queue = deque([v0])
        while queue:
            x, y = queue.popleft()
            for dx, dy in NEIGHBOR_OFFSETS:
                w = (x + dx, y + dy)
                if w in rest and w not in seen:
                    seen.add(w)
                    queue.append(w)
    return comps


def is_connected_set(verts: set[Coord]) -> bool:
    return _components_after_removal(verts, set()) <= 1


def is_cut_vertex(shape: Shape, v: Coord) -> bool:
    """True iff deleting ``v`` disconnects the shape (checked by traversal)."""
    shape.require(v)
    return _components_after_removal(shape.vertices(), {v}) > 1


def is_vertex_cut_pair(shape: Shape, s: Coord, t: Coord) -> bool:
    """True iff deleting both ``s`` and ``t`` disconnects the shape."""
    shape.require(s)
    shape.require(t)
    if s == t:
        raise ValueError("s and t must be distinct")
    return _components_after_removal(shape.vertices(), {s, t}) > 1


def violates_f1(shape: Shape, s: Coord, t: Coord) -> bool:
    """Connectivity form of condition F1: a cut endpoint or a cutting pair."""
    verts = shape.vertices()
    return (_components_after_removal(verts, {s}) > 1
            or _components_after_removal(verts, {t}) > 1
            or _components_after_removal(verts, {s, t}) > 1)


def has_cut_vertex(shape: Shape) -> bool:
    verts = shape.vertices()
    return any(_components_after_removal(verts, {v}) > 1 for v in verts)


def cut_separates(shape: Shape, s: Coord, t: Coord) -> bool:
    """Some cut vertex other than ``s`` and ``t`` splits off a part of two or
    more vertices that contains neither of them."""
    verts = shape.vertices()
    for w in verts - {s, t}:
        rest = verts - {w}
        seen = {s}
        queue = deque([s])
        while queue:
            x, y = queue.popleft()
            for dx, dy in NEIGHBOR_OFFSETS:
                q = (x + dx, y + dy)
                if q in rest and q not in seen:
                    seen.add(q)
                    queue.append(q)
        if t in seen and len(seen) < len(rest) - 1:
            return True
    return False


def has_degree_one_vertex(shape: Shape, exclude: Iterable[Coord] = ()) -> bool:
    ex = set(exclude)
    return any(v not in ex and len(neighbors(shape, v)) == 1 for v in shape.iter_vertices())


# ---------------------------------------------------------------------------
# separation


def separate(shape: Shape, axis: str, line: int) -> tuple[Shape, Shape]:
    """Cut ``shape`` after global column/row ``line``.

    ``axis="vertical"`` cuts between columns ``line`` and ``line + 1``
    (removing horizontal and crossed edges); ``axis="horizontal"`` cuts
    between rows ``line`` and ``line + 1``.  Both pieces keep the global
    frame of ``shape``.
    """
    if axis not in ("vertical", "horizontal"):
        raise ValueError("axis must be 'vertical' or 'horizontal'")
    boxes = shape.boxes()
    first: list[Box] = []
    second: list[Box] = []
    for x0, x1, y0, y1 in boxes:
        if axis == "vertical":
            first.append((x0, min(x1, line), y0, y1))
            second.append((max(x0, line + 1), x1, y0, y1))
        else:
            first.append((x0, x1, y0, min(y1, line)))
            second.append((x0, x1, max(y0, line + 1), y1))
    first = [b for b in first if b[0] <= b[1] and b[2] <= b[3]]
    second = [b for b in second if b[0] <= b[1] and b[2] <= b[3]]
    if not first or not second:
        raise UnsupportedCutError(f"cut at {axis} line {line} does not split {shape}")
    return shape_from_boxes(first), shape_from_boxes(second)


# ---------------------------------------------------------------------------
# paths and cycles


class Path:
    """An ordered sequence of pairwise distinct, consecutively adjacent vertices."""

    __slots__ = ("verts",)

    def __init__(self, verts: Iterable[Coord], validate: bool = True):
        self.verts = list(verts)
        if validate:
            validate_path(self.verts)

    @property
    def start(self) -> Coord:
        return self.verts[0]

    @property
    def end(self) -> Coord:
        return self.verts[-1]

    def __len__(self) -> int:
        return len(self.verts)

    def __iter__(self) -> Iterator[Coord]:
        return iter(self.verts)

    def __getitem__(self, i: int) -> Coord:
        return self.verts[i]

    def __eq__(self, other: object) -> bool:
        return type(other) is type(self) and self.verts == other.verts  # type: ignore[attr-defined]

    def __hash__(self) -> int:
        return hash((type(self).__name__, tuple(self.verts)))

    def edges(self) -> Iterator[Edge]:
        v = self.verts
        return zip(v, v[1:])

    def edge_set(self) -> set[frozenset[Coord]]:
        return {frozenset(e) for e in self.edges()}

    def has_edge(self, u: Coord, v: Coord) -> bool:
        return frozenset((u, v)) in self.edge_set()

    def reversed(self) -> "Path":
        return type(self)(self.verts[::-1], validate=False)

    def __repr__(self) -> str:
        if len(self.verts) <= 8:
            return f"{type(self).__name__}({self.verts})"
        return f"{type(self).__name__}(len={len(self.verts)}, {self.verts[0]}..{self.verts[-1]})"


class Cycle(Path):
    """A closed path of at least three vertices (last adjacent to first)."""

    __slots__ = ()

    def __init__(self, verts: Iterable[Coord], validate: bool = True):
        self.verts = list(verts)
        if validate:
            validate_cycle(self.verts)

    def edges(self) -> Iterator[Edge]:
        v = self.verts
        return zip(v, v[1:] + v[:1])

    def rotated_to(self, v: Coord) -> "Cycle":
        i = self.verts.index(v)
        return Cycle(self.verts[i:] + self.verts[:i], validate=False)


def coords_array(verts: Sequence[Coord]) -> np.ndarray:
    """``verts`` as an ``(N, 2)`` integer array."""
    flat = np.fromiter(chain.from_iterable(verts), dtype=np.int64, count=2 * len(verts))
    return flat.reshape(-1, 2)


# below this length plain loops beat the array round trip
_VECTOR_MIN = 256


def validate_path(verts: Sequence[Coord], shape: Shape | None = None,
                  hamiltonian: bool = False) -> None:
    """Raise :class:`PathError` unless ``verts`` is a simple supergrid path."""
    if not verts:
        raise PathError("empty path")
    if len(verts) < _VECTOR_MIN:
        if len(set(verts)) != len(verts):
            raise PathError("path revisits a vertex")
        for u, v in zip(verts, verts[1:]):
            if not adjacent(u, v):
                raise PathError(f"{u} and {v} are not adjacent")
    else:
        arr = coords_array(verts)
        step = np.abs(np.diff(arr, axis=0))
        bad = np.flatnonzero((step.max(axis=1) != 1))
        if bad.size:
            i = int(bad[0])
            raise PathError(f"{verts[i]} and {verts[i + 1]} are not adjacent")
        lo = arr.min(axis=0)
        span = int(arr[:, 1].max() - lo[1]) + 1
        keys = (arr[:, 0] - lo[0]) * span + (arr[:, 1] - lo[1])
        if np.unique(keys).size != len(verts):
            raise PathError("path revisits a vertex")
    _check_in_shape(verts, shape, hamiltonian)


def validate_cycle(verts: Sequence[Coord], shape: Shape | None = None,
                   hamiltonian: bool = False) -> None:
    if len(verts) < 3:
        raise PathError("a cycle needs at least three vertices")
    validate_path(verts, shape, hamiltonian)
    if not adjacent(verts[-1], verts[0]):
        raise PathError("cycle does not close")


def _check_in_shape(verts: Sequence[Coord], shape: Shape | None, hamiltonian: bool) -> None:
    if shape is None:
        return
    for v in verts:
        if v not in shape:
            raise PathError(f"{v} lies outside {shape}")
    if hamiltonian and len(verts) != shape.size:
        raise PathError(f"covers {len(verts)} of {shape.size} vertices")


def boundary_edge_count(shape: Rect) -> int:
    """Number of boundary edges of a rectangle with ``m, n >= 2``."""
    return 2 * ((shape.m - 1) + (shape.n - 1))


# ---------------------------------------------------------------------------
# constant-time cut tests


def ring_splits(member, removed: Sequence[Coord]) -> bool:
    """True iff the in-region cells around ``removed`` fall into two or more
    groups once ``removed`` is deleted.

    For the hole-free regions handled here this local test is exact: two
    groups of the ring joined by a path elsewhere would enclose a cell
    outside the region.
    """
    gone = set(removed)
    ring = {(x + dx, y + dy) for x, y in removed for dx, dy in NEIGHBOR_OFFSETS}
    ring = {p for p in ring - gone if member(p)}
    if not ring:
        return False
    start = next(iter(ring))
    seen = {start}
    stack = [start]
    while stack:
        x, y = stack.pop()
        for dx, dy in NEIGHBOR_OFFSETS:
            w = (x + dx, y + dy)
            if w in ring and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) != len(ring)


def geometric_f1(shape: Shape, s: Coord, t: Coord) -> bool:
    """F1 from local neighbourhoods only; agrees with :func:`violates_f1` on
    rectangles, L-shapes and C-shapes."""
    member = shape.__contains__
    if ring_splits(member, (s,)) or ring_splits(member, (t,)):
        return True
    if adjacent(s, t):
        return ring_splits(member, (s, t))
    return False
