"""Exhaustive ground truth for small supergrid instances.

Everything here is deliberately independent of the constructive solvers:
vertices are indexed in lexicographic order, adjacency is kept as bitmasks
and the searches are plain depth-first enumerations with reachability
pruning.  Neighbours are tried in increasing index order, so the first
optimum found is the lexicographically least one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .core import Coord, Path, Cycle, SupergridError, adjacent

DEFAULT_MAX_VERTICES = 24
DEFAULT_MAX_NODES = 20_000_000


class BudgetExceededError(SupergridError):
    """The instance is larger than the oracle is allowed to search."""


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = DEFAULT_MAX_VERTICES
    max_nodes_expanded: int = DEFAULT_MAX_NODES


class _Graph:
    def __init__(self, shape_or_vertices, budget: OracleBudget):
        verts = shape_or_vertices.vertices() if hasattr(shape_or_vertices, "vertices") \
            else set(shape_or_vertices)
        if len(verts) > budget.max_vertices:
            raise BudgetExceededError(
                f"{len(verts)} vertices exceed the oracle cap of {budget.max_vertices}")
        self.verts = sorted(verts)
        self.index = {v: i for i, v in enumerate(self.verts)}
        n = len(self.verts)
        self.n = n
        self.full = (1 << n) - 1
        self.nbr = [0] * n
        self.nbr_list: list[list[int]] = [[] for _ in range(n)]
        for i, u in enumerate(self.verts):
            x, y = u
            for dx in (-1, 0, 1):
                for dy in (-1, 0, 1):
                    j = self.index.get((x + dx, y + dy))
                    if j is not None and j != i:
                        self.nbr[i] |= 1 << j
            self.nbr_list[i] = [j for j in range(n) if self.nbr[i] >> j & 1]
        self.budget = budget
        self.nodes = 0

    def idx(self, v: Coord) -> int:
        try:
            return self.index[v]
        except KeyError:
            raise SupergridError(f"vertex {v} is not in the instance") from None

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.max_nodes_expanded:
            raise BudgetExceededError("oracle node budget exhausted")

    def component(self, start: int, allowed: int) -> int:
        """Bitmask of vertices reachable from ``start`` inside ``allowed``."""
        comp = 1 << start
        frontier = comp
        nbr = self.nbr
        while frontier:
            grow = 0
            f = frontier
            while f:
                low = f & -f
                grow |= nbr[low.bit_length() - 1]
                f ^= low
            grow &= allowed & ~comp
            comp |= grow
            frontier = grow
        return comp


def oracle_longest(shape, s: Coord, t: Coord,
                   budget: OracleBudget = OracleBudget()) -> tuple[int, Path]:
    """Exact longest simple ``(s, t)``-path length and its lexicographically
    least witness."""
    g = _Graph(shape, budget)
    si, ti = g.idx(s), g.idx(t)
    if si == ti:
        raise SupergridError("s and t must differ")
    best_len = 0
    best: list[int] = []
    path = [si]
    nbr_list, nbr = g.nbr_list, g.nbr

    def dfs(head: int, used: int) -> None:
        nonlocal best_len, best
        g.tick()
        free = g.full & ~used
        comp = g.component(ti, free)
        if not (nbr[head] & comp):
            return
        if len(path) + comp.bit_count() <= best_len:
            return
        for j in nbr_list[head]:
            if not (comp >> j & 1):
                continue
            path.append(j)
            if j == ti:
                if len(path) > best_len:
                    best_len = len(path)
                    best = list(path)
            else:
                dfs(j, used | (1 << j))
            path.pop()

    dfs(si, 1 << si)
    return best_len, Path([g.verts[i] for i in best])


def _hp_search(g: _Graph, si: int, ti: int, required: dict[int, set[int]] | None = None,
               use_memo: bool = True) -> Optional[list[int]]:
    n = g.n
    nbr, nbr_list = g.nbr, g.nbr_list
    path = [si]
    failed: set[tuple[int, int]] = set()
    req = required or {}

    def ok_required(prev: int, cur: int, used: int) -> Optional[int]:
        """Returns -1 when unconstrained, the forced next vertex, or -2 on violation."""
        want = req.get(cur)
        if not want:
            return -1
        rest = [w for w in want if w != prev]
        if len(rest) > 1:
            return -2
        if not rest:
            return -1
        w = rest[0]
        if used >> w & 1:
            return -2
        return w

    def dfs(head: int, used: int, forced: int) -> bool:
        g.tick()
        if used == g.full:
            return head == ti
        key = (used, head)
        if use_memo and key in failed:
            return False
        free = g.full & ~used
        comp = g.component(ti, free)
        if comp != free or not (nbr[head] & free):
            failed.add(key)
            return False
        # an unvisited vertex other than t with a single way in is a dead end
        f = free & ~(1 << ti)
        avail = free | (1 << head)
        while f:
            low = f & -f
            j = low.bit_length() - 1
            if (nbr[j] & avail).bit_count() < 2:
                failed.add(key)
                return False
            f ^= low
        for j in nbr_list[head]:
            if used >> j & 1:
                continue
            if forced >= 0 and j != forced:
                continue
            if j == ti and used | (1 << j) != g.full:
                continue
            nxt = ok_required(head, j, used | (1 << j))
            if nxt == -2:
                continue
            if j == ti and nxt >= 0:
                continue
            path.append(j)
            if dfs(j, used | (1 << j), nxt):
                return True
            path.pop()
        if use_memo and forced < 0:
            failed.add(key)
        return False

    start_forced = -1
    if req.get(si):
        want = req[si]
        if len(want) > 1:
            return None
        start_forced = next(iter(want))
    if n == 1:
        return path if si == ti else None
    if dfs(si, 1 << si, start_forced):
        return path
    return None


def oracle_hp(shape, s: Coord, t: Coord,
              budget: OracleBudget = OracleBudget()) -> Optional[Path]:
    """Some Hamiltonian ``(s, t)``-path, or ``None`` when none exists."""
    g = _Graph(shape, budget)
    si, ti = g.idx(s), g.idx(t)
    if si == ti:
        raise SupergridError("s and t must differ")
    found = _hp_search(g, si, ti)
    return None if found is None else Path([g.verts[i] for i in found])


def oracle_hp_exists(shape, s: Coord, t: Coord, budget: OracleBudget = OracleBudget()) -> bool:
    return oracle_hp(shape, s, t, budget) is not None


def oracle_hc(shape, budget: OracleBudget = OracleBudget()) -> Optional[Cycle]:
    """Some Hamiltonian cycle, or ``None``."""
    g = _Graph(shape, budget)
    if g.n < 3:
        return None
    for j in g.nbr_list[0]:
        found = _hp_search(g, 0, j)
        if found is not None:
            return Cycle([g.verts[i] for i in found])
    return None


def oracle_hc_exists(shape, budget: OracleBudget = OracleBudget()) -> bool:
    return oracle_hc(shape, budget) is not None


def oracle_hp_with_edges(shape, s: Coord, t: Coord, required_edges: Iterable[tuple[Coord, Coord]],
                         budget: OracleBudget = OracleBudget()) -> Optional[Path]:
    """Some Hamiltonian ``(s, t)``-path containing every required edge."""
    g = _Graph(shape, budget)
    si, ti = g.idx(s), g.idx(t)
    if si == ti:
        raise SupergridError("s and t must differ")
    req: dict[int, set[int]] = {}
    for u, v in required_edges:
        if not adjacent(u, v):
            return None
        a, b = g.idx(u), g.idx(v)
        req.setdefault(a, set()).add(b)
        req.setdefault(b, set()).add(a)
    if any(len(w) > 2 for w in req.values()):
        return None
    if g.n > 2 and ti in req.get(si, ()):
        return None
    found = _hp_search(g, si, ti, req, use_memo=False)
    if found is None:
        return None
    p = Path([g.verts[i] for i in found])
    if any(not p.has_edge(u, v) for u, v in required_edges):  # pragma: no cover
        return None
    return p
