"""Boxes, diagrams and partitions.

Coordinates are 1-based matrix coordinates (English convention): rows grow
downward, columns grow rightward. A diagram is any finite set of boxes; a
partition is a nonincreasing tuple of positive parts and is identified with
its Ferrers diagram.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, prod
from typing import Iterable, Iterator, NamedTuple

from tabtype.errors import BoxNotInShape, TabtypeError

Partition = tuple[int, ...]


class Box(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True)
class Diagram:
    """An immutable finite set of boxes."""

    boxes: frozenset[Box]

    def __init__(self, boxes: Iterable[tuple[int, int]] = ()):
        cells = frozenset(Box(int(r), int(c)) for r, c in boxes)
        for b in cells:
            if b.row < 1 or b.col < 1:
                raise TabtypeError(f"box {tuple(b)} must have positive coordinates")
        object.__setattr__(self, "boxes", cells)

    @classmethod
    def ferrers(cls, parts: Iterable[int]) -> Diagram:
        lam = partition(parts)
        return cls((i + 1, j + 1) for i, p in enumerate(lam) for j in range(p))

    def __iter__(self) -> Iterator[Box]:
        return iter(sorted(self.boxes))

    def __len__(self) -> int:
        return len(self.boxes)

    def __contains__(self, box: object) -> bool:
        return box in self.boxes

    def __repr__(self) -> str:
        return f"Diagram({[tuple(b) for b in self]})"

    def rows(self) -> list[int]:
        return sorted({b.row for b in self.boxes})

    def cols(self) -> list[int]:
        return sorted({b.col for b in self.boxes})

    def row(self, r: int) -> list[Box]:
        return sorted(b for b in self.boxes if b.row == r)

    def col(self, c: int) -> list[Box]:
        return sorted(b for b in self.boxes if b.col == c)

    def transpose(self) -> Diagram:
        return Diagram((c, r) for r, c in self.boxes)

    def without(self, boxes: Iterable[tuple[int, int]]) -> Diagram:
        drop = {Box(*b) for b in boxes}
        return Diagram(self.boxes - drop)

    def is_ferrers(self) -> bool:
        return self.boxes == Diagram.ferrers(stack_yx(self)).boxes


def partition(parts: Iterable[int]) -> Partition:
    """Validate and normalise a partition; trailing zeros are dropped."""
    lam = tuple(int(p) for p in parts)
    if any(p < 0 for p in lam):
        raise TabtypeError(f"negative part in {lam}")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise TabtypeError(f"parts of {lam} are not nonincreasing")
    return tuple(p for p in lam if p > 0)


def partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for p in range(min(n, largest), 0, -1):
        for rest in partitions(n - p, p):
            yield (p,) + rest


def _as_box(c) -> Box:
    return c if isinstance(c, Box) else Box(*c)


def arm(shape: Diagram, c) -> frozenset[Box]:
    a, b = _as_box(c)
    return frozenset(d for d in shape.boxes if d.row == a and d.col > b)


def leg(shape: Diagram, c) -> frozenset[Box]:
    """Boxes weakly below c in its column; c itself is included."""
    a, b = _as_box(c)
    return frozenset(d for d in shape.boxes if d.col == b and d.row >= a)


def in_hook(c, d) -> bool:
    """True when box d lies in the hook based at c (position test only)."""
    return (d[0] == c[0] and d[1] > c[1]) or (d[1] == c[1] and d[0] >= c[0])


class HookCells(NamedTuple):
    arm: frozenset[Box]
    leg: frozenset[Box]
    hook: frozenset[Box]

    @property
    def arm_length(self) -> int:
        return len(self.arm)

    @property
    def leg_length(self) -> int:
        return len(self.leg)

    @property
    def hook_length(self) -> int:
        return len(self.hook)


def hook_cells(shape: Diagram, c) -> HookCells:
    c = _as_box(c)
    if c not in shape:
        raise BoxNotInShape(f"box {tuple(c)} is not in the diagram")
    a, l = arm(shape, c), leg(shape, c)
    return HookCells(a, l, a | l)


def hook_length(shape: Diagram, c) -> int:
    return hook_cells(shape, c).hook_length


def conjugate(lam: Iterable[int]) -> Partition:
    lam = partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def staircase(n: int) -> Partition:
    """The staircase (n-1, n-2, ..., 1)."""
    if n < 1:
        raise TabtypeError("staircase needs n >= 1")
    return tuple(range(n - 1, 0, -1))


def corners(lam: Iterable[int]) -> list[Box]:
    lam = partition(lam)
    return [Box(i + 1, p) for i, p in enumerate(lam) if i + 1 == len(lam) or lam[i + 1] < p]


def stack_yx(shape: Diagram) -> Partition:
    """Push every box left along its row, then sort the rows."""
    counts: dict[int, int] = {}
    for b in shape.boxes:
        counts[b.row] = counts.get(b.row, 0) + 1
    return tuple(sorted(counts.values(), reverse=True))


def stack_xy(shape: Diagram) -> Partition:
    """Push every box up its column, then sort the columns."""
    counts: dict[int, int] = {}
    for b in shape.boxes:
        counts[b.col] = counts.get(b.col, 0) + 1
    return conjugate(sorted(counts.values(), reverse=True))


def connected_components(shape: Diagram) -> list[Diagram]:
    """Edge-connected components, ordered by their smallest box."""
    todo = set(shape.boxes)
    out = []
    while todo:
        start = min(todo)
        todo.discard(start)
        comp, stack = {start}, [start]
        while stack:
            r, c = stack.pop()
            for nb in (Box(r + 1, c), Box(r - 1, c), Box(r, c + 1), Box(r, c - 1)):
                if nb in todo:
                    todo.discard(nb)
                    comp.add(nb)
                    stack.append(nb)
        out.append(Diagram(comp))
    return sorted(out, key=lambda d: min(d.boxes))


def hook_length_formula(lam: Iterable[int]) -> int:
    """Number of standard Young tableaux of shape lam."""
    shape = Diagram.ferrers(lam)
    hooks = prod(hook_length(shape, c) for c in shape.boxes)
    return factorial(len(shape)) // hooks


def erase_empty_rows(shape: Diagram) -> dict[Box, Box]:
    """Renumber occupied rows to 1..r; returns old box -> new box."""
    index = {r: i + 1 for i, r in enumerate(shape.rows())}
    return {b: Box(index[b.row], b.col) for b in shape.boxes}
