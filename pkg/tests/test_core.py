import pytest
from hypothesis import given, settings, strategies as st

from supergrid.core import (CShape, Cycle, Frame, LShape, ParameterError, Path, PathError, Rect,
                            adjacent, cut_separates, degree, dihedral_frames, has_cut_vertex,
                            has_degree_one_vertex, is_cut_vertex, neighbors, parallel,
                            separate, shape_from_boxes, validate_cycle, validate_path,
                            violates_f1)


def test_king_adjacency():
    assert adjacent((1, 1), (2, 2))
    assert adjacent((3, 2), (3, 1))
    assert not adjacent((1, 1), (1, 1))
    assert not adjacent((1, 1), (3, 1))
    assert parallel(((1, 1), (2, 1)), ((1, 2), (2, 2)))
    assert not parallel(((1, 1), (2, 1)), ((1, 3), (2, 3)))


def test_shape_sizes_and_membership():
    assert Rect(4, 3).size == 12
    L = LShape(5, 4, 2, 1)
    assert L.size == 20 - 2 and (5, 1) not in L and (5, 2) in L and L.a == 3
    C = CShape(5, 6, 2, 2, 1)
    assert C.size == 30 - 4 and C.d == 3
    assert (4, 2) not in C and (4, 3) not in C and (4, 1) in C and (4, 4) in C
    assert len(C.vertices()) == C.size


@pytest.mark.parametrize("args", [(4, 3, 0, 1), (4, 3, 4, 1), (4, 3, 1, 3)])
def test_lshape_rejects_bad_parameters(args):
    with pytest.raises(ParameterError):
        LShape(*args)


def test_cshape_rejects_bad_parameters():
    with pytest.raises(ParameterError):
        CShape(4, 3, 1, 1, 2)  # no bottom row left
    with pytest.raises(ParameterError):
        CShape(4, 3, 4, 1, 1)


def test_degrees_in_a_rectangle():
    R = Rect(3, 3)
    assert degree(R, (2, 2)) == 8
    assert degree(R, (1, 1)) == 3
    assert sorted(neighbors(R, (1, 2))) == [(1, 1), (1, 3), (2, 1), (2, 2), (2, 3)]


def test_cut_vertices():
    # one-column waist between two wide parts
    C = CShape(4, 3, 3, 1, 1)
    assert is_cut_vertex(C, (1, 2))
    assert has_cut_vertex(C)
    assert not has_cut_vertex(Rect(4, 4))
    thin = CShape(3, 3, 2, 1, 1)
    assert degree(thin, (3, 1)) == 1
    assert has_degree_one_vertex(thin)
    assert not has_degree_one_vertex(thin, [(3, 1), (3, 3)])


def test_f1_on_thin_rectangles():
    R = Rect(5, 1)
    assert violates_f1(R, (2, 1), (4, 1))
    assert not violates_f1(R, (1, 1), (5, 1))
    R2 = Rect(5, 2)
    assert violates_f1(R2, (3, 1), (3, 2))
    assert not violates_f1(R2, (1, 1), (1, 2))


def test_cut_separates_needs_a_stranded_part():
    C = CShape(4, 3, 3, 1, 1)
    assert cut_separates(C, (2, 1), (3, 1))
    assert not cut_separates(C, (2, 1), (2, 3))


def test_separate_splits_a_rectangle():
    left, right = separate(Rect(5, 3), "vertical", 2)
    assert left.size == 6 and right.size == 9


def test_validate_path_rejects_bad_input():
    with pytest.raises(PathError):
        validate_path([])
    with pytest.raises(PathError):
        validate_path([(1, 1), (3, 1)])
    with pytest.raises(PathError):
        validate_path([(1, 1), (2, 1), (1, 1)])
    with pytest.raises(PathError):
        validate_path([(1, 1), (2, 1)], Rect(2, 2), hamiltonian=True)
    with pytest.raises(PathError):
        validate_cycle([(1, 1), (2, 1), (3, 1)])
    with pytest.raises(PathError):
        validate_path([(1, 1), (2, 1)], Rect(1, 1))


def test_path_and_cycle_helpers():
    p = Path([(1, 1), (2, 2), (3, 1)])
    assert p.start == (1, 1) and p.end == (3, 1) and len(p) == 3
    assert p.has_edge((2, 2), (1, 1)) and not p.has_edge((1, 1), (3, 1))
    assert p.reversed().verts == [(3, 1), (2, 2), (1, 1)]
    c = Cycle([(1, 1), (2, 1), (2, 2), (1, 2)])
    assert c.has_edge((1, 2), (1, 1))
    assert c.rotated_to((2, 2)).verts[0] == (2, 2)


@st.composite
def frames(draw):
    w = draw(st.integers(1, 7))
    h = draw(st.integers(1, 7))
    f = draw(st.sampled_from(dihedral_frames(w, h)))
    ox, oy = draw(st.integers(-3, 3)), draw(st.integers(-3, 3))
    return Frame(w, h, (ox, oy), f.swap, f.flip_x, f.flip_y)


@settings(max_examples=200, deadline=None)
@given(frames(), st.data())
def test_frame_round_trip(frame, data):
    x = data.draw(st.integers(1, frame.width))
    y = data.draw(st.integers(1, frame.height))
    g = frame.to_global((x, y))
    assert frame.to_local(g) == (x, y)
    gw, gh = frame.global_size
    assert frame.origin[0] < g[0] <= frame.origin[0] + gw
    assert frame.origin[1] < g[1] <= frame.origin[1] + gh


@st.composite
def c_shapes(draw, max_side=8):
    m = draw(st.integers(2, max_side))
    n = draw(st.integers(3, max_side))
    k = draw(st.integers(1, m - 1))
    l = draw(st.integers(1, n - 2))
    c = draw(st.integers(1, n - l - 1))
    return CShape(m, n, k, l, c)


@settings(max_examples=150, deadline=None)
@given(c_shapes())
def test_cshape_boxes_partition_the_vertices(shape):
    cells = [(x, y) for x0, x1, y0, y1 in shape.boxes()
             for x in range(x0, x1 + 1) for y in range(y0, y1 + 1)]
    assert len(cells) == len(set(cells)) == shape.size
    assert set(cells) == shape.vertices()
    assert shape_from_boxes(shape.boxes()).vertices() == shape.vertices()
