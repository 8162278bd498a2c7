"""Semistandard labellings of a type and their generating polynomials.

A labelling of a type is semistandard when some filling sequence visits the
labels in weakly increasing order, with boxes of one column getting strictly
increasing labels. Membership is decided by generate-and-check: every
labelling with values in ``1..m`` is tested by a search over erasure orders.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations as _perms
from typing import Iterable, Mapping

from tabtype import _core
from tabtype.diagrams import Box, Diagram, partition
from tabtype.errors import LimitExceeded, TabtypeError
from tabtype.tableaux import TypeFilling, default_budget

Exps = tuple[int, ...]


@dataclass(frozen=True)
class Polynomial:
    """Polynomial in x_1..x_m with nonnegative integer coefficients."""

    m: int
    terms: Mapping[Exps, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for exps, coef in dict(self.terms).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.m:
                raise ValueError(f"exponent vector {exps} has length != {self.m}")
            if coef:
                clean[exps] = int(coef)
        object.__setattr__(self, "terms", clean)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.m, frozenset(self.terms.items())))

    def coefficient(self, exps) -> int:
        return self.terms.get(tuple(exps), 0)

    def evaluate_at_ones(self) -> int:
        return sum(self.terms.values())

    def is_symmetric(self) -> bool:
        return all(
            self.terms.get(tuple(e[i] for i in p), 0) == c
            for e, c in self.terms.items()
            for p in _perms(range(self.m))
        )

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "terms": [{"exps": list(e), "coef": c} for e, c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, data: dict) -> Polynomial:
        return cls(data["m"], {tuple(t["exps"]): t["coef"] for t in data["terms"]})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, c in sorted(self.terms.items(), reverse=True):
            mono = "".join(
                f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exps) if e
            ) or "1"
            parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)


def _labels_for(t: TypeFilling, labels) -> list[int]:
    data = {Box(*k): int(v) for k, v in dict(labels).items()}
    if set(data) != t.shape.boxes:
        raise TabtypeError("labelling and type are on different shapes")
    if any(v < 1 for v in data.values()):
        raise TabtypeError("labels must be positive integers")
    return [data[b] for b in t.packed().boxes]


def is_sst(t: TypeFilling, labels: Mapping) -> bool:
    """True iff a filling sequence of t reads the labels weakly increasing,
    strictly within each column."""
    p = t.packed()
    return bool(_core.sst_check(p.theta, p.hook, p.over, p.cols, _labels_for(t, labels)))


def sst_polynomial(t: TypeFilling, m: int, budget: int | None = None) -> Polynomial:
    """Sum of x^F over semistandard labellings F of t with labels in 1..m."""
    if m < 1:
        raise ValueError("need at least one variable")
    budget = default_budget() if budget is None else budget
    if m ** len(t) > budget:
        raise LimitExceeded(f"{m}^{len(t)} labellings exceed the budget {budget}")
    p = t.packed()
    return Polynomial(m, _core.sst_terms(p.theta, p.hook, p.over, p.cols, m))


def classical_schur(lam: Iterable[int], m: int, budget: int | None = None) -> Polynomial:
    """Schur polynomial s_lam(x_1..x_m) from semistandard Young tableaux."""
    lam = partition(lam)
    if m < 1:
        raise ValueError("need at least one variable")
    budget = default_budget() if budget is None else budget
    boxes = list(Diagram.ferrers(lam))
    terms: dict[Exps, int] = {}
    filled: dict[Box, int] = {}
    seen = 0

    def place(k: int) -> None:
        nonlocal seen
        if k == len(boxes):
            seen += 1
            if seen > budget:
                raise LimitExceeded(f"more than {budget} tableaux")
            exps = [0] * m
            for v in filled.values():
                exps[v - 1] += 1
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + 1
            return
        r, c = boxes[k]
        lo = max(filled.get(Box(r, c - 1), 1), filled.get(Box(r - 1, c), 0) + 1)
        for v in range(lo, m + 1):
            filled[Box(r, c)] = v
            place(k + 1)
        filled.pop(Box(r, c), None)

    place(0)
    return Polynomial(m, terms)
