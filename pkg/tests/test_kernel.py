import os

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grunbaum import _kernel_py, kernel

from oracles import valid_group_colorings

IMPLS = kernel.available()


def _ids(mods):
    return [m.IMPLEMENTATION for m in mods]


def _valid(sol, k, groups):
    return all(0 <= c < k for c in sol) and all(
        len({sol[i] for i in g}) == len(g) for g in groups)


@st.composite
def problems(draw):
    m = draw(st.integers(1, 7))
    k = draw(st.integers(1, 4))
    ngroups = draw(st.integers(0, 6))
    groups = [sorted(draw(st.sets(st.integers(0, m - 1), min_size=1, max_size=min(m, 4))))
              for _ in range(ngroups)]
    return m, k, groups


def test_compiled_kernel_is_selected_when_built():
    assert kernel.IMPLEMENTATION in ("cython", "python")
    if os.environ.get("GRUNBAUM_PURE_PYTHON"):
        assert kernel.IMPLEMENTATION == "python"
    elif len(IMPLS) == 2:
        assert kernel.IMPLEMENTATION == "cython"


@pytest.mark.parametrize("impl", IMPLS, ids=_ids(IMPLS))
def test_triangle_needs_three_colors(impl):
    groups = [[0, 1], [1, 2], [0, 2]]
    assert impl.solve(3, 2, groups) is None
    assert impl.solve(3, 3, groups) == [0, 1, 2]
    assert len(impl.enumerate_all(3, 3, groups)) == 6


@pytest.mark.parametrize("impl", IMPLS, ids=_ids(IMPLS))
def test_oversized_group_short_circuits(impl):
    assert impl.solve(4, 3, [[0, 1, 2, 3]]) is None
    assert impl.enumerate_all(4, 3, [[0, 1, 2, 3]]) == []


@pytest.mark.parametrize("impl", IMPLS, ids=_ids(IMPLS))
def test_require_all_colors(impl):
    # path on 3 vertices: 2 colors suffice, 3 are needed for surjectivity
    groups = [[0, 1], [1, 2]]
    assert sorted(set(impl.solve(3, 3, groups, require_all=True))) == [0, 1, 2]
    assert impl.solve(2, 3, [[0, 1]], require_all=True) is None


@pytest.mark.parametrize("impl", IMPLS, ids=_ids(IMPLS))
def test_enumeration_limit(impl):
    assert len(impl.enumerate_all(4, 3, [], limit=5)) == 5
    assert impl.enumerate_all(4, 3, [], limit=0) == []


@pytest.mark.parametrize("impl", IMPLS, ids=_ids(IMPLS))
def test_bad_k(impl):
    with pytest.raises(ValueError):
        impl.solve(2, 0, [])
    with pytest.raises(ValueError):
        impl.enumerate_all(2, 63, [])


@settings(max_examples=150, deadline=None)
@given(problems())
def test_kernels_match_brute_force(prob):
    m, k, groups = prob
    brute = {tuple(int(x) for x in row) for row in valid_group_colorings(m, k, groups)}
    for impl in IMPLS:
        sol = impl.solve(m, k, groups)
        assert (sol is None) == (not brute)
        if sol is not None:
            assert _valid(sol, k, groups)
        assert set(impl.enumerate_all(m, k, groups)) == brute
        surj = impl.solve(m, k, groups, require_all=True)
        brute_surj = [r for r in brute if len(set(r)) == k]
        assert (surj is None) == (not brute_surj)
        if surj is not None:
            assert _valid(surj, k, groups) and len(set(surj)) == k


@settings(max_examples=100, deadline=None)
@given(problems())
def test_implementations_agree_exactly(prob):
    m, k, groups = prob
    ref = _kernel_py.solve(m, k, groups)
    for impl in IMPLS:
        assert impl.solve(m, k, groups) == ref
        assert impl.enumerate_all(m, k, groups) == _kernel_py.enumerate_all(m, k, groups)
