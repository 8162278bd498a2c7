"""From partitions to vexillary permutations, and partial fillings.

``build_s_lambda`` places a partition in the top-left corner of the smallest
staircase that holds it, anchors every box that reaches the staircase
boundary through a rectangle, and lets the unanchored components fall
straight down. The resulting diagram is the inversion set (in staircase
coordinates) of a vexillary permutation whose line-exchanged type is the
balanced type of the partition.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, NamedTuple

from tabtype.diagrams import (
    Box, Diagram, Partition, conjugate, connected_components, corners,
    partition, stack_xy, stack_yx,
)
from tabtype.errors import (
    BoxNotInShape, EmptyShape, FallingStuck, NotVexillary,
)
from tabtype.exchange import ExchangeResult, full_exchange, line_exchange
from tabtype.permutations import (
    Permutation, box_to_pair, compose, count_reduced_words, inverse,
    inversion_set, is_inversion_set, permutation, permutation_from_inversion_set,
    type_of_permutation, vexillary_data,
)
from tabtype.tableaux import (
    TypeFilling, balanced_type, count_tableaux, count_with_prefix,
)


class Embedding(NamedTuple):
    k: int
    anchor: Box


def embed_in_staircase(lam: Iterable[int]) -> Embedding:
    """Smallest k such that lam fits in the staircase of size k+1, with the
    first corner (by row) that touches its boundary."""
    lam = partition(lam)
    if not lam:
        raise EmptyShape("the empty partition has no corner")
    lc = conjugate(lam)
    best = None
    for a, b in corners(lam):
        k = lam[a - 1] + lc[b - 1] - 1
        if best is None or k > best.k:
            best = Embedding(k, Box(a, b))
    return best


def _anchored(shape: frozenset[Box], n: int) -> set[Box]:
    """Boxes lying in a rectangle, within their component, up-left of a boundary box."""
    held: set[Box] = set()
    for comp in connected_components(Diagram(shape)):
        for u, v in comp.boxes:
            if u + v == n:
                held.update(c for c in comp.boxes if c.row <= u and c.col <= v)
    return held


def falling_steps(lam: Iterable[int]) -> list[frozenset[Box]]:
    """Successive diagrams of the falling construction; the last one is final."""
    k = embed_in_staircase(lam).k
    n = k + 1
    shape = frozenset(Diagram.ferrers(lam).boxes)
    steps = [shape]
    while True:
        loose = shape - _anchored(shape, n)
        if not loose:
            return steps
        moved = False
        # lowest components first so higher ones can land on them
        comps = sorted(connected_components(Diagram(loose)),
                       key=lambda d: -max(c.row for c in d.boxes))
        for comp in comps:
            rest = shape - comp.boxes
            drop = 0
            while all(r + drop + 1 + c <= n and Box(r + drop + 1, c) not in rest
                      for r, c in comp.boxes):
                drop += 1
            if drop:
                shape = rest | {Box(r + drop, c) for r, c in comp.boxes}
                moved = True
        if not moved:
            raise FallingStuck(f"no component can fall for {tuple(lam)}")
        steps.append(shape)


def build_s_lambda(lam: Iterable[int]) -> Diagram:
    lam = partition(lam)
    shape = Diagram(falling_steps(lam)[-1])
    n = embed_in_staircase(lam).k + 1
    assert is_inversion_set((box_to_pair(c, n) for c in shape.boxes), n)
    return shape


def sigma_lambda(lam: Iterable[int]) -> Permutation:
    lam = partition(lam)
    n = embed_in_staircase(lam).k + 1
    shape = build_s_lambda(lam)
    return permutation_from_inversion_set((box_to_pair(c, n) for c in shape.boxes), n)


def verify_bridge(lam: Iterable[int]) -> bool:
    lam = partition(lam)
    if not lam:
        return True
    s = sigma_lambda(lam)
    got = line_exchange(type_of_permutation(s)).result
    return got == balanced_type(Diagram.ferrers(lam))


class Block(NamedTuple):
    rows: tuple[int, ...]
    corner: Box


def blocks(lam: Iterable[int]) -> list[Block]:
    lam = partition(lam)
    out: list[Block] = []
    i = 0
    while i < len(lam):
        j = i
        while j + 1 < len(lam) and lam[j + 1] == lam[i]:
            j += 1
        out.append(Block(tuple(range(i + 1, j + 2)), Box(i + 1, lam[i])))
        i = j + 1
    return out


def count_balanced_with_one_at(lam: Iterable[int], c) -> int:
    """Balanced tableaux of shape lam carrying the entry 1 at box c."""
    shape = Diagram.ferrers(lam)
    c = Box(*c)
    if c not in shape:
        raise BoxNotInShape(f"box {tuple(c)} is not in the shape")
    return count_with_prefix(balanced_type(shape), [c])


@lru_cache(maxsize=4096)
def exchanged(s: Permutation) -> ExchangeResult:
    """Full exchange of the type of s (cached; results are immutable)."""
    return full_exchange(type_of_permutation(s))


def _require_vexillary(s) -> Permutation:
    s = permutation(s)
    if not vexillary_data(s).is_vexillary:
        raise NotVexillary(f"{list(s)} is not vexillary")
    return s


def _check_boxes(t: TypeFilling, boxes: list[Box]) -> None:
    for z in boxes:
        if z not in t.shape:
            raise BoxNotInShape(f"box {tuple(z)} is outside the exchanged shape")
    if len(set(boxes)) != len(boxes):
        raise ValueError("partial fill boxes must be distinct")


def partial_fill_count(s: Permutation, fixed: Iterable) -> int:
    """Tableaux of the exchanged type of s with entry i in the i-th fixed box."""
    s = _require_vexillary(s)
    boxes = [Box(*z) for z in fixed]
    t = exchanged(s).result
    _check_boxes(t, boxes)
    return count_with_prefix(t, boxes)


def partial_fill_witness(s: Permutation, fixed: Iterable) -> Permutation | None:
    """A permutation w whose reduced words are as many as the pinned tableaux, or None.

    The fixed boxes are carried back to inversions of s; every prefix of them
    must be an inversion set (a weak-order chain from the identity), and w is
    then tau^{-1} s for the permutation tau the whole prefix spells.
    """
    s = _require_vexillary(s)
    boxes = [Box(*z) for z in fixed]
    res = exchanged(s)
    _check_boxes(res.result, boxes)
    n = len(s)
    pairs = [box_to_pair(res.mapping[z], n) for z in boxes]
    inv = inversion_set(s)
    if not set(pairs) <= inv:
        return None
    for k in range(1, len(pairs) + 1):
        if not is_inversion_set(pairs[:k], n):
            return None
    tau = permutation_from_inversion_set(pairs, n)
    return compose(inverse(tau), s)


def nice_partial(s: Permutation, fixed: Iterable) -> Partition | None:
    """The partition both stackings give after removing the fixed boxes, if they agree."""
    s = _require_vexillary(s)
    boxes = [Box(*z) for z in fixed]
    t = exchanged(s).result
    _check_boxes(t, boxes)
    rest = t.shape.without(boxes)
    xy, yx = stack_xy(rest), stack_yx(rest)
    return xy if xy == yx else None


def witness_count(s: Permutation, fixed: Iterable) -> int:
    w = partial_fill_witness(s, fixed)
    return 0 if w is None else count_reduced_words(w)


def balanced_count(lam: Iterable[int]) -> int:
    lam = partition(lam)
    return count_tableaux(balanced_type(Diagram.ferrers(lam)))
