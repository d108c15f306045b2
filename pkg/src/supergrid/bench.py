"""Wall-clock scaling of ``longest_c`` on square-ish C shapes."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .core import CShape
from .cshape import longest_c

DEFAULT_SIZES = (10_000, 40_000, 160_000, 640_000)


@dataclass
class Timing:
    mn: int
    shape: CShape
    vertices: int
    seconds: float

    def row(self) -> dict:
        return {"mn": self.mn, "shape": repr(self.shape), "vertices": self.vertices,
                "seconds": round(self.seconds, 6)}


def square_c(mn: int) -> CShape:
    """C(m, m; m/2, m/3; m/3, .) with m = sqrt(mn)."""
    m = max(4, math.isqrt(mn))
    return CShape(m, m, m // 2, m // 3, m // 3)


def time_longest(shape: CShape, repeats: int = 3) -> float:
    """Best-of-``repeats`` time of one corner-to-corner longest path."""
    s, t = (1, 1), (shape.m, shape.n)
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        p = longest_c(shape, s, t)
        best = min(best, time.perf_counter() - t0)
        assert len(p) == shape.size
    return best


def run(sizes=DEFAULT_SIZES, repeats: int = 3) -> tuple[list[Timing], float]:
    """Timings and the fitted log-log slope."""
    time_longest(square_c(sizes[0]), 1)  # warm-up
    out = []
    for mn in sizes:
        shape = square_c(mn)
        out.append(Timing(mn, shape, shape.size, time_longest(shape, repeats)))
    slope = float(np.polyfit(np.log([t.mn for t in out]), np.log([t.seconds for t in out]), 1)[0])
    return out, slope
