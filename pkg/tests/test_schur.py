from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from oracles import is_sst_brute, ssyt_polynomial
from tabtype.bridge import exchanged
from tabtype.diagrams import Diagram, conjugate, hook_length, partitions
from tabtype.errors import LimitExceeded, TabtypeError
from tabtype.permutations import vexillary_data
from tabtype.schur import Polynomial, classical_schur, is_sst, sst_polynomial
from tabtype.tableaux import TypeFilling, balanced_type, count_tableaux, enumerate_tableaux, standard_type
from tabtype.verify import vexillary_permutations


@st.composite
def small_types(draw, max_boxes=5):
    cells = draw(st.sets(st.tuples(st.integers(1, 3), st.integers(1, 3)),
                         min_size=1, max_size=max_boxes))
    shape = Diagram(cells)
    return TypeFilling({c: draw(st.integers(0, hook_length(shape, c) - 1)) for c in shape.boxes})


def poly(m, *terms):
    return Polynomial(m, {e: 1 for e in terms})


def test_is_sst_examples():
    column = standard_type(Diagram.ferrers((1, 1)))
    assert not is_sst(column, {(1, 1): 1, (2, 1): 1})
    row = standard_type(Diagram.ferrers((2,)))
    assert is_sst(row, {(1, 1): 1, (1, 2): 1})


def test_is_sst_accepts_own_tableaux():
    t = balanced_type(Diagram.ferrers((3, 2)))
    for tab in enumerate_tableaux(t):
        assert is_sst(t, tab.as_dict())


def test_is_sst_shape_mismatch():
    with pytest.raises(TabtypeError):
        is_sst(standard_type(Diagram.ferrers((2,))), {(1, 1): 1})


@settings(max_examples=40, deadline=None)
@given(small_types(), st.data())
def test_is_sst_matches_brute_force(t, data):
    labels = {c: data.draw(st.integers(1, 3)) for c in t.shape.boxes}
    want = is_sst_brute({tuple(c): v for c, v in t.items()}, {tuple(c): v for c, v in labels.items()})
    assert is_sst(t, labels) == want


def test_sst_polynomial_examples():
    assert sst_polynomial(standard_type(Diagram.ferrers((1,))), 2) == poly(2, (1, 0), (0, 1))
    two_one = poly(2, (2, 1), (1, 2))
    assert sst_polynomial(exchanged((3, 2, 1)).result, 2) == two_one == classical_schur((2, 1), 2)
    assert sst_polynomial(balanced_type(Diagram.ferrers((2, 1))), 2) == two_one


def test_sst_polynomial_budget():
    with pytest.raises(LimitExceeded):
        sst_polynomial(standard_type(Diagram.ferrers((3, 3))), 3, budget=100)


def test_classical_schur_examples():
    assert classical_schur((1,), 3) == poly(3, (1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert classical_schur((2,), 2) == poly(2, (2, 0), (1, 1), (0, 2))
    assert classical_schur((1, 1), 2) == poly(2, (1, 1))


@pytest.mark.parametrize("lam", [lam for n in range(1, 6) for lam in partitions(n)])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_classical_schur_matches_brute_force(lam, m):
    assert classical_schur(lam, m).terms == ssyt_polynomial(lam, m)


@pytest.mark.parametrize("n", [3, 4])
def test_exchanged_type_gives_schur_of_its_shape(n):
    for s in vexillary_permutations(n):
        t = exchanged(s).result
        shape = conjugate(vexillary_data(s).lam)
        for m in (2, 3):
            assert sst_polynomial(t, m) == classical_schur(shape, m)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_sst_polynomial_of_exchanged_types_is_symmetric(n):
    for s in vexillary_permutations(n):
        assert sst_polynomial(exchanged(s).result, 3).is_symmetric()


@settings(max_examples=30, deadline=None)
@given(small_types(max_boxes=4))
def test_distinct_labels_recover_tableaux(t):
    n = len(t)
    boxes = list(t.shape)
    passing = 0
    for labels in product(range(1, n + 1), repeat=n):
        if len(set(labels)) == n and is_sst(t, dict(zip(boxes, labels))):
            passing += 1
    assert passing == count_tableaux(t)


def test_polynomial_json_round_trip():
    p = classical_schur((2, 1), 3)
    data = p.to_json()
    assert [t["exps"] for t in data["terms"]] == sorted(t["exps"] for t in data["terms"])
    assert Polynomial.from_json(data) == p
    assert str(classical_schur((1, 1), 2)) == "x1x2"


def test_polynomial_drops_zero_terms():
    assert Polynomial(1, {(1,): 0}).terms == {}
    with pytest.raises(ValueError):
        Polynomial(2, {(1,): 1})
