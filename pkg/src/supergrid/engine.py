"""Hamiltonian path construction on unions of axis-parallel boxes.

A long run of identical columns (rows) that holds no endpoint or pinned
vertex is shrunk to two or three representatives.  The shrunken region is
small, so a Hamiltonian path for it is found by depth-first search.  The
removed lines, always an even number of them, are then put back at a *seam*
between two kept lines:

* every path edge crossing the seam is stretched into a straight run through
  the inserted lines;
* every maximal stretch of the seam not crossed by the path is absorbed
  either by a path edge running along the seam (the edge is replaced by a
  snake through the inserted block) or, when it is one or two cells long, by
  zig-zagging the neighbouring crossing runs over it.

Columns are re-inserted first and rows second.  A shrunken path that cannot
be re-inserted is simply skipped in favour of the next one the search
produces.  Search results are cached by the shape of the shrunken region, so
repeated queries only pay for the linear re-insertion.
"""

from __future__ import annotations

import random
import sys
from dataclasses import dataclass
from itertools import repeat
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .core import Box, Coord, ConstructionError, coords_array

# Kept lines per shrunken block, tried in order.
KEEP_LEVELS = (2, 4, 6)
# Node budget of one search and the number of candidate paths tried per level.
SEARCH_BUDGET = 200_000
MAX_CANDIDATES = 60
# Randomised restarts after the ordered search; seeds are fixed for reproducibility.
RESTART_SEEDS = tuple(range(1, 25))
RESTART_BUDGET = 4_000
# Regions at most this large are also searched without any shrinking.
FULL_SEARCH_LIMIT = 64
CACHE_LIMIT = 20_000

_H, _V, _E = "h", "v", "e"


@dataclass(frozen=True)
class Requirement:
    """A structural demand on the constructed path.

    ``kind == "e"``: the exact edge ``(a, b)`` must be used.
    ``kind == "h"``: some horizontal edge in row ``line`` whose two endpoints
    both lie in columns ``lo..hi``.
    ``kind == "v"``: some vertical edge in column ``line`` with both endpoints
    in rows ``lo..hi``.
    """

    kind: str
    line: int = 0
    lo: int = 0
    hi: int = 0
    a: Optional[Coord] = None
    b: Optional[Coord] = None

    @staticmethod
    def edge(a: Coord, b: Coord) -> "Requirement":
        return Requirement(_E, a=a, b=b)

    @staticmethod
    def horizontal(row: int, lo: int, hi: int) -> "Requirement":
        return Requirement(_H, row, lo, hi)

    @staticmethod
    def vertical(col: int, lo: int, hi: int) -> "Requirement":
        return Requirement(_V, col, lo, hi)

    def satisfied_by(self, verts: Sequence[Coord], closed: bool = False) -> bool:
        pairs = zip(verts, list(verts[1:]) + ([verts[0]] if closed else []))
        if self.kind == _E:
            want = {self.a, self.b}
            return any({u, v} == want for u, v in pairs)
        return any(self.matches(u, v) for u, v in pairs)

    def matches(self, u: Coord, v: Coord) -> bool:
        if self.kind == _E:
            return {u, v} == {self.a, self.b}
        if self.kind == _H:
            return (u[1] == v[1] == self.line and abs(u[0] - v[0]) == 1
                    and self.lo <= min(u[0], v[0]) and max(u[0], v[0]) <= self.hi)
        return (u[0] == v[0] == self.line and abs(u[1] - v[1]) == 1
                and self.lo <= min(u[1], v[1]) and max(u[1], v[1]) <= self.hi)


def requirements_met(verts: Sequence[Coord], require: Sequence[Requirement],
                     closed: bool = False) -> bool:
    """Vectorised ``all(r.satisfied_by(verts, closed) for r in require)``."""
    if not require:
        return True
    if len(verts) < 256:
        return all(r.satisfied_by(verts, closed) for r in require)
    arr = coords_array(list(verts) + ([verts[0]] if closed else []))
    u, v = arr[:-1], arr[1:]
    for r in require:
        if r.kind == _E:
            a, b = np.array(r.a), np.array(r.b)
            hit = ((u == a).all(1) & (v == b).all(1)) | ((u == b).all(1) & (v == a).all(1))
        else:
            along, across = (0, 1) if r.kind == _H else (1, 0)
            lo = np.minimum(u[:, along], v[:, along])
            hi = np.maximum(u[:, along], v[:, along])
            hit = ((u[:, across] == r.line) & (v[:, across] == r.line) & (hi - lo == 1)
                   & (lo >= r.lo) & (hi <= r.hi))
        if not hit.any():
            return False
    return True


def region_size(boxes: Sequence[Box]) -> int:
    return sum((b[1] - b[0] + 1) * (b[3] - b[2] + 1) for b in boxes)


def in_region(boxes: Sequence[Box], v: Coord) -> bool:
    x, y = v
    for b in boxes:
        if b[0] <= x <= b[1] and b[2] <= y <= b[3]:
            return True
    return False


# ---------------------------------------------------------------------------
# shrinking


def _spans(boxes: Sequence[Box], line: int, axis: int) -> list[tuple[int, int]]:
    """Covered intervals of the other coordinate on column (axis 0) or row (axis 1) ``line``."""
    if axis == 0:
        raw = sorted((b[2], b[3]) for b in boxes if b[0] <= line <= b[1])
    else:
        raw = sorted((b[0], b[1]) for b in boxes if b[2] <= line <= b[3])
    merged: list[list[int]] = []
    for lo, hi in raw:
        if merged and merged[-1][1] + 1 >= lo:
            merged[-1][1] = max(merged[-1][1], hi)
        else:
            merged.append([lo, hi])
    return [(a, b) for a, b in merged]


def _blocks(boxes: Sequence[Box], axis: int, special: set[int],
            splits: set[int]) -> list[tuple[int, int, bool]]:
    """Maximal runs ``(first, last, is_special)`` of interchangeable lines."""
    i0, i1 = (0, 1) if axis == 0 else (2, 3)
    lo, hi = min(b[i0] for b in boxes), max(b[i1] for b in boxes)
    cuts = {b[i0] for b in boxes} | {b[i1] + 1 for b in boxes} | {lo, hi + 1}
    cuts |= special | {v + 1 for v in special} | splits
    ordered = sorted(c for c in cuts if lo <= c <= hi + 1)
    out: list[list] = []
    for a, nxt in zip(ordered, ordered[1:]):
        spec = a in special
        sig = _spans(boxes, a, axis)
        if out and not spec and not out[-1][2] and a not in splits and out[-1][3] == sig:
            out[-1][1] = nxt - 1
        else:
            out.append([a, nxt - 1, spec, sig])
    return [(a, b, spec) for a, b, spec, _ in out]


def _shrink(blocks: list[tuple[int, int, bool]], keep: int) -> tuple[list[int], dict[int, int]]:
    """Kept lines and seams ``{c: D}``: ``D`` lines go between kept lines ``c`` and ``c + 1``."""
    kept: list[int] = []
    seams: dict[int, int] = {}
    for a, b, spec in blocks:
        h = b - a + 1
        if spec or keep <= 0 or h <= keep + 1:
            kept.extend(range(a, b + 1))
            continue
        r = keep + (h - keep) % 2
        p = r // 2
        kept.extend(range(a, a + p))
        seams[len(kept)] = h - r
        kept.extend(range(b - (r - p) + 1, b + 1))
    return kept, seams


# ---------------------------------------------------------------------------
# search on the shrunken region


class _Budget(Exception):
    pass


def _paths(W: int, valid: int, s: int, t: int, exact: tuple, faces: tuple,
           budget: int, seed: Optional[int] = None,
           status: Optional[dict] = None) -> Iterator[list[int]]:
    """Hamiltonian ``(s, t)``-paths of a padded bitmask grid, in search order.

    Moves are ordered by fewest onward options, then orthogonal before
    diagonal; a ``seed`` breaks the remaining ties at random instead of by
    index.

    Cell ``(x, y)`` (1-based) has index ``(y - 1) * (W + 1) + x``; indices that
    are multiples of ``W + 1`` are padding, so shifts never wrap a row.
    """
    Wp = W + 1
    offs = (-Wp - 1, -Wp, -Wp + 1, -1, 1, Wp - 1, Wp, Wp + 1)
    diag = {-Wp - 1, -Wp + 1, Wp - 1, Wp + 1}
    rng = None if seed is None else random.Random(seed)
    cells = [i for i in range(valid.bit_length()) if valid >> i & 1]
    nbrs = {c: [c + o for o in offs if c + o > 0 and valid >> (c + o) & 1] for c in cells}
    nset = {c: set(v) for c, v in nbrs.items()}
    freedeg = {c: len(nbrs[c]) for c in cells}
    total = len(cells)

    req: dict[int, set[int]] = {}
    for a, b in exact:
        req.setdefault(a, set()).add(b)
        req.setdefault(b, set()).add(a)
    if any(len(v) > 2 for v in req.values()) or len(req.get(s, ())) > 1 \
            or len(req.get(t, ())) > 1 or (total > 2 and t in req.get(s, ())):
        return

    def connected(head: int, free: int) -> bool:
        reach = 1 << head
        allowed = free | reach
        while True:
            m = reach
            nxt = (m | m << 1 | m >> 1 | m << Wp | m >> Wp | m << (Wp + 1) | m >> (Wp + 1)
                   | m << (Wp - 1) | m >> (Wp - 1)) & allowed
            if nxt == reach:
                return reach == allowed
            reach = nxt

    # face bit of every edge, so the set of satisfied faces is part of the
    # search state and failed states can be memoised
    face_bit: dict[tuple[int, int], int] = {}
    for i, fe in enumerate(faces):
        for a, b in fe:
            face_bit[(a, b)] = face_bit.get((a, b), 0) | 1 << i
            face_bit[(b, a)] = face_bit.get((b, a), 0) | 1 << i
    all_faces = (1 << len(faces)) - 1

    path = [s]
    nodes = 0
    failed: set[tuple[int, int, int, int]] = set()
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 10 * total + 200))

    def dfs(head: int, free: int, want: int, fmask: int) -> Iterator[list[int]]:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _Budget
        if free == 0:
            if head == t and fmask == all_faces:
                yield list(path)
            return
        state = (head, free, want, fmask)
        if state in failed:
            return
        found = False
        for out in _expand(head, free, want, fmask):
            found = True
            yield out
        if not found:
            failed.add(state)

    def face_alive(head: int, free: int, fmask: int) -> bool:
        avail = free | 1 << head
        for i, fe in enumerate(faces):
            if not fmask >> i & 1 and not any(avail >> a & 1 and avail >> b & 1 for a, b in fe):
                return False
        return True

    def _expand(head: int, free: int, want: int, fmask: int) -> Iterator[list[int]]:
        if faces and fmask != all_faces and not face_alive(head, free, fmask):
            return
        forced = want
        for w in nbrs[head]:
            if w == t or not (free >> w & 1):
                continue
            d = freedeg[w]
            if d == 0:
                return
            if d == 1:
                if forced >= 0 and forced != w:
                    return
                forced = w
        if not connected(head, free):
            return
        if forced >= 0:
            cands = [forced] if free >> forced & 1 else []
        else:
            cands = [w for w in nbrs[head] if free >> w & 1]
            if rng is None:
                cands.sort(key=lambda w: (freedeg[w], (w - head) in diag, w))
            else:
                cands.sort(key=lambda w: (freedeg[w], (w - head) in diag, rng.random()))
        hr = req.get(head)
        prev = path[-2] if len(path) > 1 else -1
        for v in cands:
            nfree = free & ~(1 << v)
            if v == t and nfree:
                continue
            if hr and any(w != prev and w != v for w in hr):
                continue
            nxt = -1
            need = req.get(v)
            if need:
                rest = [w for w in need if w != head]
                if len(rest) > 1:
                    continue
                if rest:
                    if v == t or not (nfree >> rest[0] & 1):
                        continue
                    nxt = rest[0]
            for w in nbrs[v]:
                freedeg[w] -= 1
            ok = True
            nv = nset[v]
            for w in nbrs[head]:
                if w != v and w != t and free >> w & 1 and freedeg[w] + (w in nv) < 2:
                    ok = False
                    break
            if ok:
                path.append(v)
                yield from dfs(v, nfree, nxt, fmask | face_bit.get((head, v), 0))
                path.pop()
            for w in nbrs[v]:
                freedeg[w] += 1

    for w in nbrs[s]:
        freedeg[w] -= 1
    first = next(iter(req[s])) if req.get(s) else -1
    try:
        yield from dfs(s, valid & ~(1 << s), first, 0)
    except _Budget:
        return
    if status is not None:
        status["exhausted"] = True


# ---------------------------------------------------------------------------
# seam re-insertion


def _assign_runs(crossings: list[tuple[int, int, int]],
                 spans: list[tuple[int, int]]) -> Optional[dict[int, int]]:
    """Give every crossing ``(k, bl, bh)`` its own run position ``b``.

    A run at ``b`` joins both endpoints when ``|b - bl| <= 1`` and
    ``|b - bh| <= 1``.  Runs stay on their own endpoint when that is
    conflict-free; otherwise the positions are matched greedily by interval
    end, which finds a matching whenever one exists.
    """
    cr: dict[int, int] = {}
    for k, bl, bh in sorted(crossings, key=lambda e: e[1] != e[2]):
        if bl not in cr:
            cr[bl] = k
        elif bh not in cr:
            cr[bh] = k
        else:
            break
    else:
        return cr

    def inside(b: int) -> bool:
        return any(lo <= b <= hi for lo, hi in spans)

    cr = {}
    for k, bl, bh in sorted(crossings, key=lambda e: (min(e[1], e[2]) + 1, max(e[1], e[2]) - 1)):
        lo, hi = max(bl, bh) - 1, min(bl, bh) + 1
        for b in range(lo, hi + 1):
            if b not in cr and inside(b):
                cr[b] = k
                break
        else:
            return None
    return cr


def _insert(path: list[Coord], seams: dict[int, int], newpos: Sequence[int], axis: int,
            span_of) -> Optional[list[Coord]]:
    """Re-insert the lines of every seam along ``axis``; ``None`` if some seam cannot be filled.

    ``path`` uses shrunken coordinates on ``axis``; ``newpos[c]`` is the final
    coordinate of kept line ``c`` and ``span_of(c)`` lists the covered
    intervals of the other coordinate on that line.
    """
    A, B = axis, 1 - axis
    cross: dict[int, list[tuple[int, int, int]]] = {c: [] for c in seams}
    hosts: dict[int, dict[tuple[int, int], int]] = {c: {} for c in seams}
    for k in range(len(path) - 1):
        u, v = path[k], path[k + 1]
        ua, va = u[A], v[A]
        if ua != va:
            lo = ua if ua < va else va
            if lo in seams:
                bl, bh = (u[B], v[B]) if ua == lo else (v[B], u[B])
                cross[lo].append((k, bl, bh))
        else:
            bm = u[B] if u[B] < v[B] else v[B]
            if ua in seams:
                hosts[ua][(0, bm)] = k
            if ua - 1 in seams:
                hosts[ua - 1][(1, bm)] = k
    plan: dict[int, tuple] = {}
    for c, D in seams.items():
        cr = _assign_runs(cross[c], span_of(c))
        if cr is None:
            return None
        hs = hosts[c]
        zig: dict[int, int] = {}
        for lo, hi in span_of(c):
            gaps = []
            start = None
            for b in range(lo, hi + 1):
                if b in cr:
                    if start is not None:
                        gaps.append((start, b - 1))
                        start = None
                elif start is None:
                    start = b
            if start is not None:
                gaps.append((start, hi))
            for g0, g1 in gaps:
                host = None
                for bm in range(g0, g1):
                    for side in (0, 1):
                        k = hs.get((side, bm))
                        if k is not None and k not in plan:
                            host = (k, side, bm)
                            break
                    if host:
                        break
                if host is not None:
                    plan[host[0]] = ("b", c, D, host[1], host[2], g0, g1)
                    continue
                left, right = g0 - 1, g1 + 1
                lfree = left in cr and left not in zig
                rfree = right in cr and right not in zig
                if g0 == g1 and lfree:
                    zig[left] = g0
                elif g0 == g1 and rfree:
                    zig[right] = g1
                elif g1 == g0 + 1 and lfree and rfree:
                    zig[left] = g0
                    zig[right] = g1
                else:
                    return None
        for b, k in cr.items():
            plan[k] = ("c", c, D, b, zig.get(b))

    def line_cells(ln: int, rng) -> Iterable[Coord]:
        return zip(repeat(ln), rng) if A == 0 else zip(rng, repeat(ln))

    out: list[Coord] = []
    app, ext = out.append, out.extend
    if A == 0:
        def mapv(p: Coord) -> Coord:
            return (newpos[p[0]], p[1])
    else:
        def mapv(p: Coord) -> Coord:
            return (p[0], newpos[p[1]])
    app(mapv(path[0]))
    for k in range(len(path) - 1):
        step = plan.get(k)
        if step is not None:
            u = path[k]
            L0 = newpos[step[1]]
            D = step[2]
            if step[0] == "c":
                _, c, _, b, z = step
                if z is None:
                    run = range(L0 + 1, L0 + D + 1)
                    seg = list(zip(run, repeat(b)) if A == 0 else zip(repeat(b), run))
                else:
                    seg = []
                    for i in range(1, D + 1):
                        pair = (b, z) if i % 2 else (z, b)
                        seg.extend(line_cells(L0 + i, pair))
                if u[A] != c:
                    seg.reverse()
            else:
                _, c, _, side, bm, g0, g1 = step
                lines = list(range(L0 + 1, L0 + D + 1))
                if side == 1:
                    lines.reverse()
                seg = []
                for i, ln in enumerate(lines):
                    seg.extend(line_cells(ln, range(bm, g0 - 1, -1) if i % 2 == 0
                                          else range(g0, bm + 1)))
                for i, ln in enumerate(reversed(lines)):
                    seg.extend(line_cells(ln, range(bm + 1, g1 + 1) if i % 2 == 0
                                          else range(g1, bm, -1)))
                if u[B] != bm:
                    seg.reverse()
            ext(seg)
        app(mapv(path[k + 1]))
    return out


# ---------------------------------------------------------------------------
# public entry points


_cache: dict[tuple, tuple[int, ...]] = {}


def _clean(boxes: Iterable[Sequence[int]]) -> list[Box]:
    return [tuple(b) for b in boxes if b[0] <= b[1] and b[2] <= b[3]]  # type: ignore[misc]


def hamiltonian_path(boxes: Iterable[Sequence[int]], s: Coord, t: Coord,
                     require: Iterable[Requirement] = ()) -> list[Coord]:
    """A Hamiltonian ``(s, t)``-path of the union of ``boxes`` meeting every
    requirement.  Raises :class:`ConstructionError` when none is found."""
    boxes = _clean(boxes)
    require = tuple(require)
    if s == t:
        raise ConstructionError("endpoints coincide")
    if not (in_region(boxes, s) and in_region(boxes, t)):
        raise ConstructionError("endpoint outside region")
    n = region_size(boxes)
    spx, spy = {s[0], t[0]}, {s[1], t[1]}
    splx: set[int] = set()
    sply: set[int] = set()
    for r in require:
        if r.kind == _E:
            spx |= {r.a[0], r.b[0]}
            spy |= {r.a[1], r.b[1]}
        elif r.kind == _H:
            spy.add(r.line)
            splx |= {r.lo, r.hi + 1}
        else:
            spx.add(r.line)
            sply |= {r.lo, r.hi + 1}
    bx = _blocks(boxes, 0, spx, splx)
    by = _blocks(boxes, 1, spy, sply)
    tried = set()
    levels = list(KEEP_LEVELS)
    if n <= FULL_SEARCH_LIMIT:
        levels.append(0)
    for keep in levels:
        cols, cseams = _shrink(bx, keep)
        rows, rseams = _shrink(by, keep)
        sig = (tuple(cols), tuple(rows))
        if sig in tried:
            continue
        tried.add(sig)
        out = _solve_level(boxes, cols, rows, cseams, rseams, s, t, require)
        if out is not None:
            if len(out) != n or out[0] != s or out[-1] != t:  # pragma: no cover
                raise ConstructionError("re-insertion produced an inconsistent path")
            return out
    raise ConstructionError(f"no Hamiltonian path found for region {boxes} from {s} to {t}")


def _solve_level(boxes: list[Box], cols: list[int], rows: list[int], cseams: dict[int, int],
                 rseams: dict[int, int], s: Coord, t: Coord,
                 require: tuple[Requirement, ...]) -> Optional[list[Coord]]:
    W, H = len(cols), len(rows)
    Wp = W + 1
    cidx = {x: i for i, x in enumerate(cols, 1)}
    ridx = {y: j for j, y in enumerate(rows, 1)}
    valid = 0
    for j, y in enumerate(rows, 1):
        for i, x in enumerate(cols, 1):
            if in_region(boxes, (x, y)):
                valid |= 1 << ((j - 1) * Wp + i)

    def rix(p: Coord) -> int:
        return (ridx[p[1]] - 1) * Wp + cidx[p[0]]

    def ok(a: int, b: int) -> bool:
        return bool(valid >> a & 1 and valid >> b & 1)

    exact = []
    faces = []
    for r in require:
        if r.kind == _E:
            exact.append((rix(r.a), rix(r.b)))
        elif r.kind == _H:
            base = (ridx[r.line] - 1) * Wp
            xs = [i for i, x in enumerate(cols, 1) if r.lo <= x <= r.hi]
            faces.append(tuple((base + i, base + i + 1) for i in xs
                               if i + 1 in xs and ok(base + i, base + i + 1)))
        else:
            i = cidx[r.line]
            ys = [j for j, y in enumerate(rows, 1) if r.lo <= y <= r.hi]
            faces.append(tuple(((j - 1) * Wp + i, j * Wp + i) for j in ys
                               if j + 1 in ys and ok((j - 1) * Wp + i, j * Wp + i)))
    si, ti = rix(s), rix(t)
    key = (W, H, valid, si, ti, tuple(exact), tuple(faces),
           tuple(sorted(cseams)), tuple(sorted(rseams)))

    def cspan(c: int) -> list[tuple[int, int]]:
        runs: list[tuple[int, int]] = []
        start = None
        for j in range(1, H + 2):
            inside = j <= H and valid >> ((j - 1) * Wp + c) & 1
            if inside and start is None:
                start = j
            elif not inside and start is not None:
                runs.append((start, j - 1))
                start = None
        return runs

    def rspan(r: int) -> list[tuple[int, int]]:
        return _spans(boxes, rows[r - 1], 1)

    cnew = [0] + cols
    rnew = [0] + rows

    def expand(cpath: Sequence[int]) -> Optional[list[Coord]]:
        red = [(c % Wp, c // Wp + 1) for c in cpath]
        if cseams:
            mid = _insert(red, cseams, cnew, 0, cspan)
            if mid is None:
                return None
        else:
            mid = [(cnew[x], y) for x, y in red]
        if rseams:
            out = _insert(mid, rseams, rnew, 1, rspan)
            if out is None:
                return None
        else:
            out = [(x, rnew[y]) for x, y in mid]
        if (cseams or rseams) and not requirements_met(out, require):
            return None
        return out

    cached = _cache.get(key)
    if cached is not None:
        out = expand(cached)
        if out is not None:
            return out
    # short attempts in several move orders first, then one long search; a
    # search that ends inside its budget has seen every path of this level
    attempts = [(None, RESTART_BUDGET)] + [(seed, RESTART_BUDGET) for seed in RESTART_SEEDS]
    attempts.append((None, SEARCH_BUDGET))
    for seed, budget in attempts:
        status: dict = {}
        for tries, cpath in enumerate(_paths(W, valid, si, ti, tuple(exact), tuple(faces),
                                             budget, seed, status)):
            out = expand(cpath)
            if out is not None:
                if len(_cache) >= CACHE_LIMIT:
                    _cache.clear()
                _cache[key] = tuple(cpath)
                return out
            if tries + 1 >= MAX_CANDIDATES:
                break
        else:
            if status.get("exhausted"):
                return None
    return None


def hamiltonian_cycle(boxes: Iterable[Sequence[int]], require: Iterable[Requirement] = (),
                      anchor: Optional[Coord] = None) -> list[Coord]:
    """A Hamiltonian cycle of the union of ``boxes``, as a vertex list whose
    last vertex is adjacent to the first."""
    boxes = _clean(boxes)
    require = tuple(require)
    if anchor is None:
        ymin = min(b[2] for b in boxes)
        anchor = (min(b[0] for b in boxes if b[2] == ymin), ymin)
    x, y = anchor
    nbrs = [(x + dx, y + dy) for dy in (-1, 0, 1) for dx in (-1, 0, 1)
            if (dx or dy) and in_region(boxes, (x + dx, y + dy))]
    last: Optional[Exception] = None
    for v in nbrs:
        try:
            return hamiltonian_path(boxes, anchor, v, require)
        except ConstructionError as exc:
            last = exc
    raise ConstructionError(f"no Hamiltonian cycle found for region {boxes}") from last
