"""JSON and ASCII conversion for diagrams, types, tableaux and permutations."""

from __future__ import annotations

import json
import os
import re

from tabtype.diagrams import Box, Diagram, partition
from tabtype.errors import TabtypeError
from tabtype.permutations import Permutation, permutation
from tabtype.tableaux import Tableau, TypeFilling


def diagram_to_json(d: Diagram) -> dict:
    return {"boxes": [[r, c] for r, c in d]}


def diagram_from_json(data) -> Diagram:
    boxes = data["boxes"] if isinstance(data, dict) else data
    return Diagram(Box(int(r), int(c)) for r, c, *_ in boxes)


def type_to_json(t: TypeFilling) -> dict:
    return {"boxes": [[r, c, v] for (r, c), v in t.items()]}


def type_from_json(data) -> TypeFilling:
    return TypeFilling(((int(r), int(c)), int(v)) for r, c, v in data["boxes"])


def tableau_to_json(t: Tableau) -> dict:
    return {"boxes": [[r, c, v] for (r, c), v in t.items()]}


def tableau_from_json(data) -> Tableau:
    return Tableau(((int(r), int(c)), int(v)) for r, c, v in data["boxes"])


def parse_ints(text: str) -> tuple[int, ...]:
    text = text.strip().strip("[]()")
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise TabtypeError(f"expected comma-separated integers, got {text!r}") from None


def parse_partition(text: str):
    return partition(parse_ints(text))


def parse_permutation(text: str) -> Permutation:
    return permutation(parse_ints(text))


_BOX = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def parse_boxes(text: str) -> list[Box]:
    """Parse ``"(r,c);(r,c)"`` into boxes."""
    out = []
    for chunk in filter(None, (s.strip() for s in text.split(";"))):
        m = _BOX.fullmatch(chunk)
        if not m:
            raise TabtypeError(f"malformed box {chunk!r}")
        out.append(Box(int(m[1]), int(m[2])))
    return out


def load_json(arg: str):
    """Inline JSON, or the contents of a file path."""
    text = arg
    if os.path.exists(arg):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise TabtypeError(f"malformed JSON input: {exc}") from None


def dumps(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def render_grid(values: dict, shape: Diagram | None = None) -> str:
    """Grid with one value per box and '.' for absent cells."""
    shape = shape or Diagram(values)
    if not len(shape):
        return ""
    rows = max(r for r, _ in shape)
    cols = max(c for _, c in shape)
    cells = {Box(*k): str(v) for k, v in values.items()}
    width = max(len(s) for s in cells.values()) if cells else 1
    lines = []
    for r in range(1, rows + 1):
        row = [cells.get(Box(r, c), ".").rjust(width) for c in range(1, cols + 1)]
        lines.append(" ".join(row).rstrip())
    return "\n".join(lines)


def render_diagram(d: Diagram) -> str:
    return render_grid({b: "#" for b in d}, d)


def render_type(t: TypeFilling) -> str:
    return render_grid(dict(t.items()), t.shape)


def render_tableau(t: Tableau) -> str:
    return render_grid(dict(t.items()), t.shape)
