import itertools

import pytest
from hypothesis import given, settings, strategies as st

from supergrid.core import (ForbiddenConditionError, ParameterError, Rect, boundary_edge_count,
                            validate_cycle, validate_path)
from supergrid.oracle import oracle_hp_exists, oracle_longest
from supergrid.rect import (BoundarySide, hc_rect, hp_3rect_tail, hp_rect, hp_rect_forced_edge,
                            longest_rect, rect_f1, upper_bound_rect)


@st.composite
def rect_pair(draw, max_m=7, max_n=6):
    m = draw(st.integers(1, max_m))
    n = draw(st.integers(1, max_n))
    if m * n < 2:
        m = 2
    R = Rect(m, n)
    verts = sorted(R.vertices())
    s, t = draw(st.permutations(verts))[:2]
    return R, s, t


@pytest.mark.parametrize("side", list(BoundarySide))
@pytest.mark.parametrize("m,n", [(3, 3), (4, 4), (5, 6), (8, 7), (10, 8)])
def test_hc_rect_is_hamiltonian_with_one_concave_side(m, n, side):
    R = Rect(m, n)
    cyc = hc_rect(R, side)
    validate_cycle(cyc.verts, R, hamiltonian=True)


@pytest.mark.parametrize("side", [BoundarySide.LEFT, BoundarySide.RIGHT])
def test_concave_side_of_length_three_needs_a_square(side):
    # a dent in a side of three vertices cannot coexist with three flat sides
    with pytest.raises(ParameterError):
        hc_rect(Rect(4, 3), side)


def test_boundary_edges_of_ten_by_eight():
    assert boundary_edge_count(Rect(10, 8)) == 32


def test_hc_rect_on_two_rows():
    validate_cycle(hc_rect(Rect(6, 2)).verts, Rect(6, 2), hamiltonian=True)


def test_f1_examples():
    assert rect_f1(Rect(4, 1), (2, 1), (4, 1))
    assert rect_f1(Rect(5, 2), (3, 1), (3, 2))
    assert not rect_f1(Rect(5, 3), (3, 1), (3, 3))
    with pytest.raises(ForbiddenConditionError):
        hp_rect(Rect(5, 2), (3, 1), (3, 2))


def test_forced_edge_rejects_small_boards():
    with pytest.raises(ParameterError):
        hp_rect_forced_edge(Rect(2, 3), (1, 1), (2, 3))


def test_tail_path_on_four_by_three():
    p = hp_3rect_tail(Rect(4, 3), (1, 1), (2, 3))
    validate_path(p.verts, Rect(4, 3), hamiltonian=True)
    assert p.has_edge((4, 1), (4, 2)) and p.has_edge((4, 2), (4, 3))


@settings(max_examples=150, deadline=None)
@given(rect_pair(max_m=6, max_n=4))
def test_hp_rect_matches_oracle(inst):
    R, s, t = inst
    exists = oracle_hp_exists(R, s, t)
    assert exists == (not rect_f1(R, s, t))
    if exists:
        p = hp_rect(R, s, t)
        validate_path(p.verts, R, hamiltonian=True)
        assert (p.start, p.end) == (s, t)


@settings(max_examples=150, deadline=None)
@given(rect_pair(max_m=6, max_n=4))
def test_longest_rect_matches_oracle(inst):
    R, s, t = inst
    best, _ = oracle_longest(R, s, t)
    p = longest_rect(R, s, t)
    validate_path(p.verts, R)
    assert (p.start, p.end) == (s, t)
    assert len(p) == upper_bound_rect(R, s, t) == best


def test_one_row_longest_is_the_segment():
    R = Rect(9, 1)
    for s, t in itertools.permutations(sorted(R.vertices()), 2):
        assert len(longest_rect(R, s, t)) == abs(s[0] - t[0]) + 1


def test_large_rectangle_is_fast():
    R = Rect(300, 200)
    p = longest_rect(R, (17, 40), (220, 3))
    validate_path(p.verts, R, hamiltonian=True)
