"""Dispatch on shape type for the longest-path bound and construction."""

from __future__ import annotations

from typing import Optional

from .core import Box, Coord, CShape, Cycle, LShape, ParameterError, Path, Rect, Shape


def upper_bound(shape: Shape, s: Coord, t: Coord) -> int:
    if isinstance(shape, Rect):
        from .rect import upper_bound_rect
        return upper_bound_rect(shape, s, t)
    if isinstance(shape, LShape):
        from .lshape import upper_bound_l
        return upper_bound_l(shape, s, t)
    if isinstance(shape, CShape):
        from .cshape import upper_bound_c
        return upper_bound_c(shape, s, t)
    raise TypeError(f"unsupported shape {shape!r}")


def longest(shape: Shape, s: Coord, t: Coord) -> Path:
    if isinstance(shape, Rect):
        from .rect import longest_rect
        return longest_rect(shape, s, t)
    if isinstance(shape, LShape):
        from .lshape import longest_l
        return longest_l(shape, s, t)
    if isinstance(shape, CShape):
        from .cshape import longest_c
        return longest_c(shape, s, t)
    raise TypeError(f"unsupported shape {shape!r}")


def longest_region(shape: Shape, s: Coord, t: Coord) -> list[Box]:
    """Boxes covering exactly the vertices of :func:`longest`."""
    if isinstance(shape, Rect):
        from .rect import region_rect
        return region_rect(shape, s, t)
    if isinstance(shape, LShape):
        from .lshape import region_l
        return region_l(shape, s, t)
    if isinstance(shape, CShape):
        from .cshape import region_c
        return region_c(shape, s, t)
    raise TypeError(f"unsupported shape {shape!r}")


def lhat(shape: Shape, s: Coord, t: Coord) -> int:
    """Longest-path length, with a one-vertex path when ``s == t``."""
    return 1 if s == t else upper_bound(shape, s, t)


def lpath(shape: Shape, s: Coord, t: Coord) -> Path:
    return Path([s]) if s == t else longest(shape, s, t)


def lregion(shape: Shape, s: Coord, t: Coord) -> list[Box]:
    return [(s[0], s[0], s[1], s[1])] if s == t else longest_region(shape, s, t)


def forbidden(shape: Shape, s: Coord, t: Coord) -> frozenset[str]:
    """Forbidden conditions for a Hamiltonian ``(s, t)``-path (empty iff one exists)."""
    if isinstance(shape, Rect):
        from .rect import _check, rect_f1
        _check(shape, s, t)
        return frozenset({"F1"}) if rect_f1(shape, s, t) else frozenset()
    if isinstance(shape, LShape):
        from .lshape import _check as check_l, l_forbidden
        check_l(shape, s, t)
        return l_forbidden(shape, s, t)
    if isinstance(shape, CShape):
        from .cshape import classify_c_hp
        return classify_c_hp(shape, s, t)
    raise TypeError(f"unsupported shape {shape!r}")


def cycle_forbidden(shape: Shape) -> frozenset[str]:
    """Forbidden conditions for a Hamiltonian cycle."""
    if isinstance(shape, Rect):
        return frozenset({"F5"}) if min(shape.m, shape.n) == 1 else frozenset()
    if isinstance(shape, LShape):
        from .lshape import l_f5
        return frozenset({"F5"}) if l_f5(shape) else frozenset()
    if isinstance(shape, CShape):
        from .cshape import c_f6
        return frozenset({"F6"}) if c_f6(shape) else frozenset()
    raise TypeError(f"unsupported shape {shape!r}")


def hamiltonian_path(shape: Shape, s: Coord, t: Coord) -> Path:
    if isinstance(shape, Rect):
        from .rect import hp_rect
        return hp_rect(shape, s, t)
    if isinstance(shape, LShape):
        from .lshape import hp_l
        return hp_l(shape, s, t)
    if isinstance(shape, CShape):
        from .cshape import hp_c
        return hp_c(shape, s, t)
    raise TypeError(f"unsupported shape {shape!r}")


def hamiltonian_cycle(shape: Shape) -> Cycle:
    """For rectangles, the canonical cycle with the concave face on the
    first legal side in top, left, bottom, right order."""
    if isinstance(shape, Rect):
        from .rect import BoundarySide, hc_rect
        for side in BoundarySide:
            try:
                return hc_rect(shape, side)
            except ParameterError:
                continue
        raise ParameterError(f"no canonical cycle for {shape}")  # pragma: no cover
    if isinstance(shape, LShape):
        from .lshape import hc_l
        return hc_l(shape)
    if isinstance(shape, CShape):
        from .cshape import hc_c
        return hc_c(shape)
    raise TypeError(f"unsupported shape {shape!r}")


def classify(shape: Shape, s: Coord, t: Coord) -> Optional[str]:
    """Longest-path case label (``None`` for rectangles, which have no table)."""
    if isinstance(shape, LShape):
        from .lshape import classify_l
        return classify_l(shape, s, t).case
    if isinstance(shape, CShape):
        from .cshape import classify_c_longest
        return classify_c_longest(shape, s, t).case
    return None
