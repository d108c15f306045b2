"""Merge primitives for cycles, paths and single vertices.

Every operation splices at a pair of parallel edges (or at a single edge
whose endpoints both touch the inserted piece) and re-validates its output.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .core import Coord, Cycle, Edge, Path, PathError, adjacent, parallel


@dataclass(frozen=True)
class ParallelEdgePair:
    """Two edges ``e1 = (u1, v1)`` and ``e2 = (u2, v2)`` with ``u1 ~ u2`` and ``v1 ~ v2``."""

    e1: Edge
    e2: Edge

    def __post_init__(self) -> None:
        for e in (self.e1, self.e2):
            if not adjacent(*e):
                raise PathError(f"{e} is not an edge")
        if not parallel(self.e1, self.e2):
            raise PathError(f"{self.e1} and {self.e2} are not parallel")


def _disjoint(a: Path, b: Path) -> None:
    if set(a.verts) & set(b.verts):
        raise PathError("inputs share vertices")


def _cycle_walk(c: Cycle, u: Coord, v: Coord) -> list[Coord]:
    """Vertices of ``c`` from ``u`` to ``v`` the long way round, given edge ``(u, v)``."""
    verts = c.verts
    i = verts.index(u)
    n = len(verts)
    if verts[(i + 1) % n] == v:
        return [verts[(i - j) % n] for j in range(n)]
    if verts[(i - 1) % n] == v:
        return [verts[(i + j) % n] for j in range(n)]
    raise PathError(f"({u}, {v}) is not an edge of the cycle")


def merge_cycles(c1: Cycle, c2: Cycle, pair: ParallelEdgePair) -> Cycle:
    """Join two disjoint cycles by dropping ``pair.e1`` from ``c1`` and
    ``pair.e2`` from ``c2`` and adding the two cross edges."""
    _disjoint(c1, c2)
    (u1, v1), (u2, v2) = pair.e1, pair.e2
    # keep c1's direction: walk it from v1 to u1 in its own order when possible
    w1 = _cycle_walk(c1, v1, u1)
    w2 = _cycle_walk(c2, u2, v2)
    return Cycle(w1 + w2)


def merge_cycle_into_path(p: Path, c: Cycle, pair: ParallelEdgePair) -> Path:
    """Splice cycle ``c`` into path ``p``; ``pair.e1`` lies on ``c`` and
    ``pair.e2`` on ``p``.  The endpoints of ``p`` are kept."""
    _disjoint(p, c)
    (u1, v1), (u2, v2) = pair.e1, pair.e2
    verts = p.verts
    i = _edge_index(verts, u2, v2)
    if verts[i] != u2:
        u1, v1, u2, v2 = v1, u1, v2, u2
    loop = _cycle_walk(c, u1, v1)
    return Path(verts[: i + 1] + loop + verts[i + 1:])


def _edge_index(verts: list[Coord], a: Coord, b: Coord) -> int:
    """Index ``i`` with ``{verts[i], verts[i + 1]} == {a, b}``."""
    try:
        i = verts.index(a)
    except ValueError:
        raise PathError(f"{a} is not on the path") from None
    if i + 1 < len(verts) and verts[i + 1] == b:
        return i
    if i > 0 and verts[i - 1] == b:
        return i - 1
    raise PathError(f"({a}, {b}) is not an edge of the path")


def insert_vertex(target: Union[Path, Cycle], x: Coord, edge: Edge) -> Union[Path, Cycle]:
    """Splice ``x`` between the endpoints of ``edge``."""
    u, v = edge
    if x in set(target.verts):
        raise PathError(f"{x} is already covered")
    if not (adjacent(x, u) and adjacent(x, v)):
        raise PathError(f"{x} does not adjoin {edge}")
    verts = target.verts
    if isinstance(target, Cycle):
        n = len(verts)
        i = verts.index(u)
        if verts[(i + 1) % n] == v:
            return Cycle(verts[: i + 1] + [x] + verts[i + 1:])
        if verts[(i - 1) % n] == v:
            j = (i - 1) % n
            return Cycle(verts[: j + 1] + [x] + verts[j + 1:])
        raise PathError(f"{edge} is not an edge of the cycle")
    i = _edge_index(verts, u, v)
    return Path(verts[: i + 1] + [x] + verts[i + 1:])


def absorb_path_into_cycle(c: Cycle, p: Path, edge: Edge) -> Cycle:
    """Replace cycle edge ``(u1, v1)`` by ``u1 -> p -> v1``."""
    _disjoint(c, p)
    u1, v1 = edge
    if not (adjacent(u1, p.start) and adjacent(v1, p.end)):
        raise PathError("path endpoints do not touch the edge")
    walk = _cycle_walk(c, v1, u1)
    return Cycle(walk + p.verts)


def concat_paths(p1: Path, p2: Path) -> Path:
    """``p1 => p2``: requires ``end(p1) ~ start(p2)``."""
    _disjoint(p1, p2)
    if not adjacent(p1.end, p2.start):
        raise PathError(f"{p1.end} and {p2.start} are not adjacent")
    return Path(p1.verts + p2.verts)


def find_parallel_pair(x: Path, y: Path) -> Optional[ParallelEdgePair]:
    """Some edge of ``x`` parallel to some edge of ``y``, or ``None``.

    ``e1`` is taken from ``x`` and ``e2`` from ``y``.  Only edges whose
    endpoints are mutually adjacent qualify, so nothing is guessed across
    separated faces.
    """
    ys = y.edge_set()
    yverts = set(y.verts)
    for u1, v1 in x.edges():
        for du in _around(u1):
            if du not in yverts:
                continue
            for dv in _around(v1):
                if dv != du and frozenset((du, dv)) in ys:
                    return ParallelEdgePair((u1, v1), (du, dv))
    return None


def _around(v: Coord) -> list[Coord]:
    x, y = v
    return [(x + dx, y + dy) for dy in (-1, 0, 1) for dx in (-1, 0, 1) if dx or dy]
