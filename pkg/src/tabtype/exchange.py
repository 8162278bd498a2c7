"""Row and column exchanges on types.

A row ``a`` is *dominant* when every box of it has a box directly below with
strictly smaller valuation. Swapping it down (after decrementing it) carries
tableaux of the old type bijectively onto tableaux of the new one, entries
travelling with their boxes. The line-exchange algorithm repeats the first
available such swap until none is left; the column version is its transpose.

Every exchange returns the new type together with a :class:`BoxMapping` from
the boxes of the result back to the boxes of the input.
"""

from __future__ import annotations

from collections.abc import Mapping
from typing import Iterator, NamedTuple

from tabtype.diagrams import Box
from tabtype.errors import NotDominant
from tabtype.permutations import Permutation, permutation
from tabtype.tableaux import Tableau, TypeFilling


class BoxMapping(Mapping):
    """Immutable bijection from result boxes to source boxes."""

    __slots__ = ("_d",)

    def __init__(self, pairs=()):
        d = dict(pairs.items() if isinstance(pairs, Mapping) else pairs)
        self._d = {Box(*k): Box(*v) for k, v in d.items()}
        if len(set(self._d.values())) != len(self._d):
            raise ValueError("box mapping is not injective")

    @classmethod
    def identity(cls, boxes) -> BoxMapping:
        return cls((b, b) for b in boxes)

    def __getitem__(self, box) -> Box:
        return self._d[Box(*box)]

    def __iter__(self) -> Iterator[Box]:
        return iter(sorted(self._d))

    def __len__(self) -> int:
        return len(self._d)

    def __repr__(self) -> str:
        return f"BoxMapping({[(tuple(k), tuple(v)) for k, v in self.items()]})"

    def after(self, step: Mapping) -> BoxMapping:
        """Compose with a later step mapping (new box -> box of self's domain)."""
        return BoxMapping((new, self._d[Box(*mid)]) for new, mid in step.items())

    def inverse(self) -> BoxMapping:
        return BoxMapping((v, k) for k, v in self._d.items())

    def transpose(self) -> BoxMapping:
        return BoxMapping((Box(k[1], k[0]), Box(v[1], v[0])) for k, v in self._d.items())


class ExchangeResult(NamedTuple):
    result: TypeFilling
    mapping: BoxMapping
    trace: tuple[str, ...] = ()


def _transpose(t: TypeFilling) -> TypeFilling:
    return TypeFilling(((c, r), v) for (r, c), v in t.items()) if len(t) else t


def _transposed(res: ExchangeResult) -> ExchangeResult:
    swap = {"row": "column", "down": "right", "up": "left"}
    trace = tuple(" ".join(swap.get(w, w) for w in line.split()) for line in res.trace)
    return ExchangeResult(_transpose(res.result), res.mapping.transpose(), trace)


def _row(theta: dict[Box, int], a: int) -> list[Box]:
    return sorted(c for c in theta if c.row == a)


def _dominant(theta: dict[Box, int], a: int) -> bool:
    row = _row(theta, a)
    if not row:
        return False
    for c in row:
        below = Box(a + 1, c.col)
        if below not in theta or theta[c] <= theta[below]:
            return False
    return True


def _dethroned(theta: dict[Box, int], a: int) -> bool:
    row = _row(theta, a)
    if not row or a < 2:
        return False
    for c in row:
        above = Box(a - 1, c.col)
        if above not in theta or theta[above] > theta[c]:
            return False
    return True


def _swap_rows(theta: dict[Box, int], a: int, shift_upper: int, shift_lower: int):
    """Exchange rows a and a+1, adding the shifts to the boxes that started there.

    Returns the new valuation and the step mapping new box -> old box.
    """
    new, step = {}, {}
    for c, v in theta.items():
        if c.row == a:
            d, v = Box(a + 1, c.col), v + shift_upper
        elif c.row == a + 1:
            d, v = Box(a, c.col), v + shift_lower
        else:
            d = c
        new[d] = v
        step[d] = c
    return new, step


def is_dominant_row(t: TypeFilling, a: int) -> bool:
    return _dominant(t.as_dict(), a)


def is_dominant_column(t: TypeFilling, b: int) -> bool:
    return _dominant(_transpose(t).as_dict(), b)


def is_dethroned_row(t: TypeFilling, a: int) -> bool:
    return _dethroned(t.as_dict(), a)


def is_dethroned_column(t: TypeFilling, b: int) -> bool:
    return _dethroned(_transpose(t).as_dict(), b)


def swap_down(t: TypeFilling, a: int) -> ExchangeResult:
    """Decrement the dominant row a, then exchange rows a and a+1."""
    theta = t.as_dict()
    if not _dominant(theta, a):
        raise NotDominant(f"row {a} is not dominant")
    new, step = _swap_rows(theta, a, -1, 0)
    return ExchangeResult(TypeFilling(new, check=False), BoxMapping(step), (f"row {a} down",))


def swap_up(t: TypeFilling, a: int) -> ExchangeResult:
    """Inverse of ``swap_down(., a - 1)``; needs row a dethroned."""
    theta = t.as_dict()
    if not _dethroned(theta, a):
        raise NotDominant(f"row {a} is not dethroned")
    new, step = _swap_rows(theta, a - 1, 0, +1)
    return ExchangeResult(TypeFilling(new, check=False), BoxMapping(step), (f"row {a} up",))


def swap_right(t: TypeFilling, b: int) -> ExchangeResult:
    return _transposed(swap_down(_transpose(t), b))


def swap_left(t: TypeFilling, b: int) -> ExchangeResult:
    return _transposed(swap_up(_transpose(t), b))


def tableau_swap_rows(t: Tableau, a: int) -> Tableau:
    return Tableau(
        ((Box(a + 1 if r == a else a if r == a + 1 else r, c), v) for (r, c), v in t.items()),
        check=False,
    )


def tableau_swap_columns(t: Tableau, b: int) -> Tableau:
    return Tableau(
        ((Box(r, b + 1 if c == b else b if c == b + 1 else c), v) for (r, c), v in t.items()),
        check=False,
    )


def transport(t: Tableau, mapping: Mapping) -> Tableau:
    """Move the entries of t (on the source shape) onto the result shape."""
    return Tableau(((new, t[old]) for new, old in mapping.items()), check=False)


def _compress_rows(theta: dict[Box, int]):
    index = {r: i + 1 for i, r in enumerate(sorted({c.row for c in theta}))}
    new, step = {}, {}
    for c, v in theta.items():
        d = Box(index[c.row], c.col)
        new[d] = v
        step[d] = c
    return new, step


def erase_empty_rows(t: TypeFilling) -> ExchangeResult:
    new, step = _compress_rows(t.as_dict())
    return ExchangeResult(TypeFilling(new, check=False), BoxMapping(step))


def erase_empty_columns(t: TypeFilling) -> ExchangeResult:
    return _transposed(erase_empty_rows(_transpose(t)))


def line_exchange(t: TypeFilling) -> ExchangeResult:
    """Erase empty rows, then swap down the first dominant row until none is left."""
    theta, step = _compress_rows(t.as_dict())
    mapping = BoxMapping(step)
    trace = []
    rows = max((c.row for c in theta), default=0)
    while True:
        for i in range(1, rows):
            if _dominant(theta, i):
                theta, step = _swap_rows(theta, i, -1, 0)
                mapping = mapping.after(step)
                trace.append(f"row {i} down")
                break
        else:
            break
    return ExchangeResult(TypeFilling(theta, check=False), mapping, tuple(trace))


def column_exchange(t: TypeFilling) -> ExchangeResult:
    return _transposed(line_exchange(_transpose(t)))


def full_exchange(t: TypeFilling) -> ExchangeResult:
    """Line exchange followed by column exchange, mappings composed."""
    lines = line_exchange(t)
    cols = column_exchange(lines.result)
    return ExchangeResult(cols.result, lines.mapping.after(cols.mapping), lines.trace + cols.trace)


def reverse_line_exchange(t: TypeFilling) -> TypeFilling:
    """Erase empty rows, then lift the lowest dethroned row until none is left."""
    theta, _ = _compress_rows(t.as_dict())
    rows = max((c.row for c in theta), default=0)
    while True:
        for i in range(rows, 1, -1):
            if _dethroned(theta, i):
                theta, _ = _swap_rows(theta, i - 1, 0, +1)
                break
        else:
            break
    return TypeFilling(theta, check=False)


def reverse_column_exchange(t: TypeFilling) -> TypeFilling:
    return _transpose(reverse_line_exchange(_transpose(t)))


def bar_normalize(s: Permutation) -> Permutation:
    """Strip the leading and trailing fixed points and shift down to start at 1."""
    s = permutation(s)
    moved = [i for i, v in enumerate(s, start=1) if v != i]
    if not moved:
        return (1,)
    p, q = moved[0], moved[-1]
    return tuple(v - (p - 1) for v in s[p - 1:q])


def equivalent_v(s: Permutation, w: Permutation) -> bool:
    return bar_normalize(s) == bar_normalize(w)
