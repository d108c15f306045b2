"""Hamiltonicity and exact longest paths in supergrid graphs with a
rectangular, L or C outline."""

from .core import (ConstructionError, CShape, Cycle, ForbiddenConditionError, LShape,
                   OutOfShapeError, ParameterError, Path, PathError, Rect, SupergridError,
                   UnsupportedCutError, validate_cycle, validate_path)
from .cshape import (classify_c_hp, classify_c_longest, hc_c, hp_c, longest_c,
                     upper_bound_c)
from .lshape import classify_l, hc_l, hp_l, longest_l
from .rect import BoundarySide, hc_rect, hp_3rect_tail, hp_rect, hp_rect_forced_edge, longest_rect
from .solve import longest, upper_bound

__all__ = [
    "BoundarySide", "ConstructionError", "CShape", "Cycle", "ForbiddenConditionError", "LShape",
    "OutOfShapeError", "ParameterError", "Path", "PathError", "Rect", "SupergridError",
    "UnsupportedCutError", "classify_c_hp", "classify_c_longest", "classify_l", "hc_c", "hc_l",
    "hc_rect", "hp_3rect_tail", "hp_c", "hp_l", "hp_rect", "hp_rect_forced_edge", "longest",
    "longest_c", "longest_l", "longest_rect", "upper_bound", "upper_bound_c", "validate_cycle",
    "validate_path",
]
