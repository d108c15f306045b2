import pytest
from hypothesis import given, settings, strategies as st

from supergrid.core import ForbiddenConditionError, LShape, validate_cycle, validate_path
from supergrid.lshape import (classify_l, hc_l, hp_l, l_f5, l_forbidden, longest_l, region_l,
                              upper_bound_l)
from supergrid.oracle import oracle_hc_exists, oracle_hp_exists, oracle_longest


@st.composite
def l_triples(draw, max_mn=16):
    m = draw(st.integers(2, 6))
    n = draw(st.integers(2, max(2, max_mn // m)))
    k = draw(st.integers(1, m - 1))
    l = draw(st.integers(1, n - 1))
    L = LShape(m, n, k, l)
    s, t = draw(st.permutations(sorted(L.vertices())))[:2]
    return L, s, t


@settings(max_examples=200, deadline=None)
@given(l_triples())
def test_hp_l_exists_iff_no_forbidden_condition(inst):
    L, s, t = inst
    forb = l_forbidden(L, s, t)
    assert (not forb) == oracle_hp_exists(L, s, t)
    if forb:
        with pytest.raises(ForbiddenConditionError):
            hp_l(L, s, t)
    else:
        p = hp_l(L, s, t)
        validate_path(p.verts, L, hamiltonian=True)
        assert (p.start, p.end) == (s, t)


@settings(max_examples=200, deadline=None)
@given(l_triples())
def test_longest_l_matches_oracle(inst):
    L, s, t = inst
    best, _ = oracle_longest(L, s, t)
    p = longest_l(L, s, t)
    validate_path(p.verts, L)
    assert (p.start, p.end) == (s, t)
    assert len(p) == upper_bound_l(L, s, t) == best
    cells = {(x, y) for x0, x1, y0, y1 in region_l(L, s, t)
             for x in range(x0, x1 + 1) for y in range(y0, y1 + 1)}
    assert cells == set(p.verts)
    assert classify_l(L, s, t).case


@pytest.mark.parametrize("m,n,k,l", [(3, 3, 1, 1), (4, 4, 2, 2), (5, 3, 2, 1), (3, 5, 1, 3),
                                     (4, 2, 1, 1), (2, 4, 1, 2), (6, 5, 3, 2)])
def test_hc_l_iff_no_degree_one_vertex(m, n, k, l):
    L = LShape(m, n, k, l)
    assert (not l_f5(L)) == oracle_hc_exists(L)
    if l_f5(L):
        with pytest.raises(ForbiddenConditionError):
            hc_l(L)
    else:
        validate_cycle(hc_l(L).verts, L, hamiltonian=True)


@pytest.mark.parametrize("face", ["top", "bottom", "left", "right"])
def test_hc_l_face_request(face):
    L = LShape(6, 5, 2, 2)
    cyc = hc_l(L, face=face)
    validate_cycle(cyc.verts, L, hamiltonian=True)
    x0, x1, y0, y1 = 1, 6, 1, 5
    line = {"top": lambda v: v[1] == y0, "bottom": lambda v: v[1] == y1,
            "left": lambda v: v[0] == x0, "right": lambda v: v[0] == x1}[face]
    assert any(line(u) and line(v) for u, v in cyc.edges())


def test_large_l_longest_path():
    L = LShape(120, 90, 70, 40)
    p = longest_l(L, (3, 88), (110, 60))
    validate_path(p.verts, L)
    assert len(p) == upper_bound_l(L, (3, 88), (110, 60))
