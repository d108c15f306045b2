import pytest
from hypothesis import given, settings, strategies as st

from supergrid.core import CShape, LShape, Rect, SupergridError, validate_cycle, validate_path
from supergrid.oracle import (BudgetExceededError, OracleBudget, oracle_hc, oracle_hc_exists,
                              oracle_hp, oracle_hp_exists, oracle_hp_with_edges, oracle_longest)


def brute_longest(shape, s, t):
    """Plain DFS over all simple paths; only for tiny shapes."""
    verts = shape.vertices()
    best = 0

    def go(v, seen):
        nonlocal best
        if v == t:
            best = max(best, len(seen))
            return
        x, y = v
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                w = (x + dx, y + dy)
                if w != v and w in verts and w not in seen:
                    seen.add(w)
                    go(w, seen)
                    seen.remove(w)

    go(s, {s})
    return best


def test_rectangle_facts():
    assert oracle_hc_exists(Rect(3, 3))
    assert not oracle_hc_exists(Rect(5, 1))
    assert oracle_hp_exists(Rect(4, 1), (1, 1), (4, 1))
    assert not oracle_hp_exists(Rect(4, 1), (2, 1), (4, 1))
    assert oracle_longest(Rect(4, 1), (2, 1), (4, 1))[0] == 3


def test_witnesses_are_valid():
    L = LShape(4, 4, 2, 2)
    p = oracle_hp(L, (1, 1), (4, 3))
    validate_path(p.verts, L, hamiltonian=True)
    cyc = oracle_hc(L)
    validate_cycle(cyc.verts, L, hamiltonian=True)
    best, witness = oracle_longest(L, (1, 1), (2, 1))
    assert len(witness) == best and witness.start == (1, 1) and witness.end == (2, 1)


def test_required_edges():
    R = Rect(3, 3)
    p = oracle_hp_with_edges(R, (1, 1), (3, 3), [((2, 2), (3, 2))])
    assert p is not None and p.has_edge((2, 2), (3, 2))
    assert oracle_hp_with_edges(R, (1, 1), (3, 3), [((1, 1), (3, 1))]) is None


def test_budget_limits():
    with pytest.raises(BudgetExceededError):
        oracle_longest(Rect(5, 5), (1, 1), (5, 5))
    with pytest.raises(BudgetExceededError):
        oracle_longest(Rect(4, 4), (1, 1), (4, 4), OracleBudget(max_nodes_expanded=10))
    with pytest.raises(SupergridError):
        oracle_longest(Rect(3, 3), (1, 1), (1, 1))


@st.composite
def tiny(draw):
    kind = draw(st.sampled_from("RLC"))
    if kind == "R":
        shape = Rect(draw(st.integers(1, 4)), draw(st.integers(2, 3)))
    elif kind == "L":
        m, n = draw(st.integers(2, 4)), draw(st.integers(2, 3))
        shape = LShape(m, n, draw(st.integers(1, m - 1)), draw(st.integers(1, n - 1)))
    else:
        m = draw(st.integers(2, 3))
        shape = CShape(m, 3, draw(st.integers(1, m - 1)), 1, 1)
    s, t = draw(st.permutations(sorted(shape.vertices())))[:2]
    return shape, s, t


@settings(max_examples=150, deadline=None)
@given(tiny())
def test_oracle_agrees_with_plain_enumeration(inst):
    shape, s, t = inst
    best, witness = oracle_longest(shape, s, t)
    assert best == brute_longest(shape, s, t)
    validate_path(witness.verts, shape)
    assert oracle_hp_exists(shape, s, t) == (best == shape.size)
