import pytest
from hypothesis import given, settings, strategies as st

from tabtype import _core
from tabtype.diagrams import Diagram, hook_length
from tabtype.tableaux import TypeFilling

py = _core.python_kernels()
cy = _core.compiled_kernels()
needs_compiled = pytest.mark.skipif(cy is None, reason="compiled kernels not built")


@st.composite
def packed_types(draw, max_boxes=9):
    cells = draw(st.sets(st.tuples(st.integers(1, 4), st.integers(1, 4)),
                         min_size=1, max_size=max_boxes))
    shape = Diagram(cells)
    t = TypeFilling({c: draw(st.integers(0, hook_length(shape, c) - 1)) for c in shape.boxes})
    return t.packed()


def test_backend_is_reported():
    assert _core.BACKEND in ("cython", "python")


@needs_compiled
@settings(max_examples=100, deadline=None)
@given(packed_types(), st.integers(0, 2**9 - 1))
def test_erasable_mask_parity(p, erased):
    erased &= (1 << len(p.theta)) - 1
    assert cy.erasable_mask(p.theta, p.hook, p.over, erased) == py.erasable_mask(p.theta, p.hook, p.over, erased)


@needs_compiled
@settings(max_examples=100, deadline=None)
@given(packed_types())
def test_count_parity(p):
    want = py.count_fillings(p.theta, p.hook, p.over)
    assert cy.count_fillings(p.theta, p.hook, p.over) == want
    assert py.count_fillings_dfs(p.theta, p.hook, p.over) == want


@needs_compiled
@settings(max_examples=50, deadline=None)
@given(packed_types(max_boxes=5), st.integers(1, 3))
def test_sst_terms_parity(p, m):
    assert cy.sst_terms(p.theta, p.hook, p.over, p.cols, m) == py.sst_terms(p.theta, p.hook, p.over, p.cols, m)


@needs_compiled
@settings(max_examples=80, deadline=None)
@given(packed_types(max_boxes=6), st.data())
def test_sst_check_parity(p, data):
    labels = [data.draw(st.integers(1, 3)) for _ in p.theta]
    assert cy.sst_check(p.theta, p.hook, p.over, p.cols, labels) == py.sst_check(p.theta, p.hook, p.over, p.cols, labels)


def test_state_limit_raises_in_both():
    from tabtype.errors import StateLimitExceeded
    p = TypeFilling({(1, 1): 0, (2, 1): 0, (3, 1): 0}).packed()
    wide = TypeFilling({(i, 10 - i): 0 for i in range(1, 10)}).packed()
    for k in [py] + ([cy] if cy else []):
        assert k.count_fillings(p.theta, p.hook, p.over, 0, 1) == 1
        with pytest.raises(StateLimitExceeded):
            k.count_fillings(wide.theta, wide.hook, wide.over, 0, 2)


def test_independent_boxes_count_every_order():
    # boxes on an anti-diagonal share no hooks, so every order is a filling
    t = TypeFilling({(i, 10 - i): 0 for i in range(1, 10)})
    p = t.packed()
    assert _core.count_fillings(p.theta, p.hook, p.over) == 362880


def test_pure_switch(monkeypatch):
    import importlib
    monkeypatch.setenv("TABTYPE_PURE", "1")
    mod = importlib.reload(_core)
    try:
        assert mod.BACKEND == "python"
    finally:
        monkeypatch.delenv("TABTYPE_PURE")
        importlib.reload(_core)


def test_overflowing_counts_are_exact():
    # four disjoint columns of 12: the count is a multinomial beyond 64 bits
    from math import factorial
    t = TypeFilling({(12 * j + i, j + 1): 0 for j in range(4) for i in range(1, 13)})
    p = t.packed()
    want = factorial(48) // factorial(12) ** 4
    assert want > 2**64
    assert _core.count_fillings(p.theta, p.hook, p.over) == want
    if cy is not None:
        with pytest.raises(OverflowError):
            cy.count_fillings(p.theta, p.hook, p.over)
