"""Types of tableaux and the filling process.

A *type* puts an integer ``theta(c)`` with ``0 <= theta(c) <= h(c) - 1`` on
every box of a diagram. The type of a tableau records, for each box, how many
entries in its hook are smaller. Tableaux of a given type are exactly the
ones produced by repeatedly erasing an *erasable* box: a box with valuation 0
that lies in no other zero-valued box's hook.
"""

from __future__ import annotations

import os
from fractions import Fraction
from itertools import product
from math import prod
from typing import Iterable, Iterator, Mapping, NamedTuple

from tabtype import _core
from tabtype.diagrams import Box, Diagram, arm, hook_length, in_hook
from tabtype.errors import (
    BoxNotInShape, EmptyShape, InvalidTableau, LimitExceeded, NotErasable,
    StateLimitExceeded, TabtypeError,
)

# largest layer of the subset table before counting falls back to plain DFS
DEFAULT_STATE_LIMIT = 4_000_000


def default_budget(fallback: int = 1_000_000) -> int:
    """Enumeration cap, overridable through ``TABTYPE_BUDGET``."""
    raw = os.environ.get("TABTYPE_BUDGET")
    return int(raw) if raw else fallback


def _pairs(data) -> Iterable[tuple[Box, int]]:
    items = data.items() if isinstance(data, Mapping) else data
    for box, value in items:
        yield Box(*box), int(value)


class _Packed(NamedTuple):
    boxes: tuple[Box, ...]
    index: dict[Box, int]
    theta: list[int]
    hook: list[int]
    over: list[int]
    cols: list[int]


class TypeFilling:
    """A type: a diagram with a bounded valuation on each box. Immutable."""

    __slots__ = ("shape", "_theta", "_packed", "_hash")

    def __init__(self, theta, *, check: bool = True):
        values = dict(_pairs(theta))
        self.shape = Diagram(values)
        self._theta = values
        self._packed = None
        self._hash = None
        if check:
            for c, v in values.items():
                h = hook_length(self.shape, c)
                if not 0 <= v <= h - 1:
                    raise TabtypeError(f"theta{tuple(c)}={v} outside [0, {h - 1}]")

    def __getitem__(self, c) -> int:
        return self._theta[Box(*c)]

    def __len__(self) -> int:
        return len(self._theta)

    def __iter__(self) -> Iterator[Box]:
        return iter(self.shape)

    def items(self) -> list[tuple[Box, int]]:
        return [(c, self._theta[c]) for c in self.shape]

    def as_dict(self) -> dict[Box, int]:
        return dict(self._theta)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TypeFilling):
            return NotImplemented
        return self._theta == other._theta

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._theta.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"TypeFilling({[(tuple(c), v) for c, v in self.items()]})"

    def packed(self) -> _Packed:
        """Bitmask encoding used by the kernels; bit i is the i-th box in row-major order."""
        if self._packed is None:
            boxes = tuple(self.shape)
            index = {b: i for i, b in enumerate(boxes)}
            hook = [0] * len(boxes)
            over = [0] * len(boxes)
            for i, c in enumerate(boxes):
                for j, d in enumerate(boxes):
                    if i != j and in_hook(c, d):
                        hook[i] |= 1 << j
                        over[j] |= 1 << i
            col_index = {c: k for k, c in enumerate(self.shape.cols())}
            self._packed = _Packed(
                boxes, index, [self._theta[b] for b in boxes], hook, over,
                [col_index[b.col] for b in boxes],
            )
        return self._packed


class Tableau:
    """A bijective filling of a diagram with 1..n. Immutable."""

    __slots__ = ("shape", "_entries", "_hash")

    def __init__(self, entries, *, check: bool = True):
        values = dict(_pairs(entries))
        self.shape = Diagram(values)
        self._entries = values
        self._hash = None
        if check and sorted(values.values()) != list(range(1, len(values) + 1)):
            raise InvalidTableau("entries must be exactly 1..n")

    def __getitem__(self, c) -> int:
        return self._entries[Box(*c)]

    def __len__(self) -> int:
        return len(self._entries)

    def items(self) -> list[tuple[Box, int]]:
        return [(c, self._entries[c]) for c in self.shape]

    def as_dict(self) -> dict[Box, int]:
        return dict(self._entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tableau):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._entries.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Tableau({[(tuple(c), v) for c, v in self.items()]})"


def type_of(t: Tableau) -> TypeFilling:
    shape = t.shape
    theta = {}
    for c in shape.boxes:
        tc = t[c]
        theta[c] = sum(1 for d in shape.boxes if in_hook(c, d) and t[d] < tc)
    return TypeFilling(theta, check=False)


def standard_type(shape: Diagram) -> TypeFilling:
    return TypeFilling({c: 0 for c in shape.boxes}, check=False)


def balanced_type(shape: Diagram) -> TypeFilling:
    """Each box valued by its arm length."""
    return TypeFilling({c: len(arm(shape, c)) for c in shape.boxes}, check=False)


def _box_index(t: TypeFilling, c) -> int:
    c = Box(*c)
    p = t.packed()
    if c not in p.index:
        raise BoxNotInShape(f"box {tuple(c)} is not in the shape")
    return p.index[c]


def is_erasable(t: TypeFilling, c) -> bool:
    i = _box_index(t, c)
    p = t.packed()
    return bool(_core.erasable_mask(p.theta, p.hook, p.over, 0) >> i & 1)


def erasable_boxes(t: TypeFilling) -> list[Box]:
    if not len(t):
        raise EmptyShape("an empty type has no boxes to erase")
    p = t.packed()
    m = _core.erasable_mask(p.theta, p.hook, p.over, 0)
    out = [p.boxes[i] for i in range(len(p.boxes)) if m >> i & 1]
    assert out, "every nonempty type has an erasable box"
    return out


def erase(t: TypeFilling, c) -> TypeFilling:
    """Remove an erasable box and decrement every box whose hook held it."""
    c = Box(*c)
    if not is_erasable(t, c):
        raise NotErasable(f"box {tuple(c)} is not erasable")
    theta = {}
    for d, v in t.items():
        if d == c:
            continue
        if in_hook(d, c):
            v -= 1
        assert v >= 0
        theta[d] = v
    return TypeFilling(theta, check=False)


def residual_type(t: TypeFilling, erased: int) -> TypeFilling:
    """The type left after erasing the boxes in the bitmask ``erased`` (any order)."""
    p = t.packed()
    return TypeFilling(
        {b: p.theta[i] - (erased & p.hook[i]).bit_count()
         for i, b in enumerate(p.boxes) if not erased >> i & 1},
        check=False,
    )


def iter_filling_sequences(t: TypeFilling, start: int = 0) -> Iterator[list[int]]:
    """Depth-first over erasure orders (row-major branching); yields box indices."""
    p = t.packed()
    n = len(p.boxes)
    full = (1 << n) - 1
    seq: list[int] = []
    stack = [(start, _core.erasable_mask(p.theta, p.hook, p.over, start))]
    if start == full:
        yield []
        return
    while stack:
        erased, choices = stack[-1]
        if not choices:
            stack.pop()
            if seq:
                seq.pop()
            continue
        low = choices & -choices
        stack[-1] = (erased, choices ^ low)
        seq.append(low.bit_length() - 1)
        nxt = erased | low
        if nxt == full:
            yield list(seq)
            seq.pop()
            continue
        stack.append((nxt, _core.erasable_mask(p.theta, p.hook, p.over, nxt)))


def iter_tableaux(t: TypeFilling) -> Iterator[Tableau]:
    """Tableaux of t in lexicographic order of filling sequences."""
    boxes = t.packed().boxes
    for seq in iter_filling_sequences(t):
        yield Tableau({boxes[i]: k + 1 for k, i in enumerate(seq)}, check=False)


def enumerate_tableaux(t: TypeFilling, limit: int | None = None) -> list[Tableau]:
    out = []
    for tab in iter_tableaux(t):
        if limit is not None and len(out) >= limit:
            raise LimitExceeded(f"more than {limit} tableaux")
        out.append(tab)
    return out


def count_tableaux(t: TypeFilling, state_limit: int = DEFAULT_STATE_LIMIT) -> int:
    """Number of tableaux of t by subset DP over erased sets; plain DFS past ``state_limit``."""
    return _count_from(t, 0, state_limit)


def _count_from(t: TypeFilling, start: int, state_limit: int) -> int:
    p = t.packed()
    try:
        return _core.count_fillings(p.theta, p.hook, p.over, start, state_limit)
    except StateLimitExceeded:
        return _core.count_fillings_dfs(p.theta, p.hook, p.over, start)


def prefix_state(t: TypeFilling, prefix: Iterable) -> int | None:
    """Erased mask after forcing ``prefix`` in order, or None if a step is illegal."""
    p = t.packed()
    erased = 0
    for c in prefix:
        c = Box(*c)
        if c not in p.index:
            raise BoxNotInShape(f"box {tuple(c)} is not in the shape")
        bit = 1 << p.index[c]
        if not _core.erasable_mask(p.theta, p.hook, p.over, erased) & bit:
            return None
        erased |= bit
    return erased


def count_with_prefix(t: TypeFilling, prefix: Iterable,
                      state_limit: int = DEFAULT_STATE_LIMIT) -> int:
    """Number of tableaux of type t with entry i at the i-th box of ``prefix``."""
    start = prefix_state(t, prefix)
    if start is None:
        return 0
    return _count_from(t, start, state_limit)


def filling_sequence_of(t: Tableau) -> list[Box]:
    return [c for c, _ in sorted(t.items(), key=lambda kv: kv[1])]


def is_filling_sequence(t: TypeFilling, seq: Iterable) -> bool:
    seq = [Box(*c) for c in seq]
    if len(seq) != len(t) or set(seq) != t.shape.boxes:
        return False
    return prefix_state(t, seq) is not None


def tableau_of_sequence(seq: Iterable) -> Tableau:
    return Tableau({Box(*c): i + 1 for i, c in enumerate(seq)})


def all_types(shape: Diagram) -> Iterator[TypeFilling]:
    boxes = list(shape)
    ranges = [range(hook_length(shape, c)) for c in boxes]
    for values in product(*ranges):
        yield TypeFilling(zip(boxes, values), check=False)


class TypeStatistics(NamedTuple):
    count: int
    mean: Fraction
    variance: Fraction


def type_statistics(shape: Diagram, limit: int | None = None) -> TypeStatistics:
    """Number of types on ``shape`` and mean/variance of |Tab| over them, exactly."""
    count = prod(hook_length(shape, c) for c in shape.boxes)
    limit = default_budget(100_000) if limit is None else limit
    if count > limit:
        raise LimitExceeded(f"{count} types exceed the limit {limit}")
    total = square = 0
    for t in all_types(shape):
        k = count_tableaux(t)
        total += k
        square += k * k
    mean = Fraction(total, count)
    return TypeStatistics(count, mean, Fraction(square, count) - mean * mean)
