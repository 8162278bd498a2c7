"""Named verification suites, each a list of PASS/FAIL checks.

Every suite compares the library against an independent oracle: reduced
words counted in the weak order, the hook-length formula, factorials, or
the classical semistandard tableaux generator. Suites take a size bound and
a seed; random samples are drawn from ``random.Random(seed)``.
"""

from __future__ import annotations

import math
import random
from typing import Callable, Iterable, NamedTuple

from tabtype.bridge import (
    blocks, build_s_lambda, count_balanced_with_one_at, exchanged, nice_partial,
    partial_fill_count, partial_fill_witness, sigma_lambda, verify_bridge,
)
from tabtype.diagrams import (
    Box, Diagram, conjugate, corners, hook_length, hook_length_formula, partitions,
)
from tabtype.exchange import (
    bar_normalize, is_dominant_column, is_dominant_row, line_exchange,
    swap_down, swap_right, transport,
)
from tabtype.permutations import (
    all_permutations, count_reduced_words, is_vexillary, type_of_permutation,
    vexillary_data,
)
from tabtype.schur import classical_schur, sst_polynomial
from tabtype.tableaux import (
    TypeFilling, all_types, balanced_type, count_tableaux, enumerate_tableaux,
    erasable_boxes, erase, standard_type, type_statistics,
)


class Check(NamedTuple):
    name: str
    ok: bool
    detail: str = ""


class SuiteResult(NamedTuple):
    name: str
    checks: list[Check]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def table(self) -> str:
        width = max((len(c.name) for c in self.checks), default=0)
        lines = [f"{'PASS' if c.ok else 'FAIL'}  {c.name.ljust(width)}  {c.detail}".rstrip()
                 for c in self.checks]
        return "\n".join(lines)


def vexillary_permutations(n: int) -> list[tuple[int, ...]]:
    return [s for s in all_permutations(n) if is_vexillary(s)]


def _first_failure(items: Iterable, test: Callable) -> tuple[int, object]:
    """(number checked, first failing item or None)."""
    k = 0
    for item in items:
        k += 1
        if not test(item):
            return k, item
    return k, None


def _check(name: str, items: Iterable, test: Callable) -> Check:
    k, bad = _first_failure(items, test)
    if bad is None:
        return Check(name, True, f"{k} cases")
    return Check(name, False, f"counterexample {bad!r}")


def oracle(max_n: int = 5, samples: int = 50, seed: int = 0) -> SuiteResult:
    def same(s):
        return count_tableaux(type_of_permutation(s)) == count_reduced_words(s)

    checks = [_check(f"tableaux = reduced words on S_{n}", all_permutations(n), same)
              for n in range(1, max_n + 1)]
    if samples:
        rng = random.Random(seed)
        n = max_n + 1
        picks = [tuple(rng.sample(range(1, n + 1), n)) for _ in range(samples)]
        checks.append(_check(f"tableaux = reduced words on {samples} random in S_{n}", picks, same))
    return SuiteResult("oracle", checks)


def balanced(max_n: int = 8) -> SuiteResult:
    def same(lam):
        shape = Diagram.ferrers(lam)
        f = hook_length_formula(lam)
        return (len(enumerate_tableaux(balanced_type(shape))) == f
                and len(enumerate_tableaux(standard_type(shape))) == f)

    return SuiteResult("balanced", [
        _check(f"balanced = standard = hook formula, n = {n}", partitions(n), same)
        for n in range(1, max_n + 1)
    ])


def hook(max_n: int = 7) -> SuiteResult:
    checks = []
    for size in range(1, max_n + 1):
        shapes = [(k,) + (1,) * (size - k) for k in range(1, size + 1)]

        def every_type(lam):
            f = hook_length_formula(lam)
            return all(count_tableaux(t) == f for t in all_types(Diagram.ferrers(lam)))

        checks.append(_check(f"every type of a hook of size {size}", shapes, every_type))
    return SuiteResult("hook", checks)


def random_diagram(rng: random.Random, size: int, grid: int = 4) -> Diagram:
    cells = [Box(r, c) for r in range(1, grid + 1) for c in range(1, grid + 1)]
    return Diagram(rng.sample(cells, size))


def _sum_is_factorial(shape: Diagram) -> bool:
    stats = type_statistics(shape)
    n = len(shape)
    hooks = math.prod(hook_length(shape, c) for c in shape.boxes)
    return stats.mean * stats.count == math.factorial(n) and stats.mean * hooks == math.factorial(n)


def expectation(max_n: int = 5, samples: int = 20, seed: int = 0) -> SuiteResult:
    checks = [
        _check(f"sum over types = n! on Ferrers shapes, n = {n}",
               (Diagram.ferrers(lam) for lam in partitions(n)), _sum_is_factorial)
        for n in range(1, max_n + 1)
    ]
    if samples:
        rng = random.Random(seed)
        picks = []
        while len(picks) < samples:
            d = random_diagram(rng, rng.randint(1, max_n))
            if not d.is_ferrers():
                picks.append(d)
        checks.append(_check(f"sum over types = n! on {samples} random non-Ferrers diagrams",
                             picks, _sum_is_factorial))
    return SuiteResult("expectation", checks)


def _exchange_ok(s) -> bool:
    t = exchanged(s).result
    lam = vexillary_data(s).lam
    return t.shape == Diagram.ferrers(conjugate(lam)) and count_tableaux(t) == hook_length_formula(lam)


def exchange(max_n: int = 6) -> SuiteResult:
    return SuiteResult("exchange", [
        _check(f"exchanged shape and count, vexillary S_{n}", vexillary_permutations(n), _exchange_ok)
        for n in range(1, max_n + 1)
    ])


def _swap_instances(count: int, max_size: int, seed: int):
    rng = random.Random(seed)
    found, tries = [], 0
    while len(found) < count and tries < 200_000:
        tries += 1
        size = rng.randint(2, max_size)
        lam = rng.choice(list(partitions(size)))
        shape = Diagram.ferrers(lam) if rng.random() < 0.5 else random_diagram(rng, size, 3)
        t = TypeFilling(
            {c: rng.randrange(hook_length(shape, c)) for c in shape.boxes}, check=False)
        column = rng.random() < 0.5
        lines = shape.cols() if column else shape.rows()
        test = is_dominant_column if column else is_dominant_row
        good = [a for a in lines if test(t, a)]
        if good:
            found.append((t, rng.choice(good), column))
    return found


def swap_is_bijection(t: TypeFilling, a: int, column: bool) -> bool:
    res = swap_right(t, a) if column else swap_down(t, a)
    moved = {transport(tab, res.mapping) for tab in enumerate_tableaux(t)}
    return moved == set(enumerate_tableaux(res.result))


def swap(samples: int = 100, max_size: int = 6, seed: int = 0) -> SuiteResult:
    inst = _swap_instances(samples, max_size, seed)
    checks = [Check("sampled dominant instances", len(inst) == samples, f"{len(inst)} found")]
    checks.append(_check("transported class equals target class", inst,
                         lambda x: swap_is_bijection(*x)))
    return SuiteResult("swap", checks)


def _bridge_ok(lam) -> bool:
    build_s_lambda(lam)
    s = sigma_lambda(lam)
    data = vexillary_data(s)
    return data.is_vexillary and conjugate(data.lam) == tuple(lam) and verify_bridge(lam)


def bridge(max_n: int = 8) -> SuiteResult:
    return SuiteResult("bridge", [
        _check(f"falling construction and line exchange, n = {n}", partitions(n), _bridge_ok)
        for n in range(1, max_n + 1)
    ])


def _equivalence_ok(pair) -> bool:
    s, w = pair
    same_type = exchanged(s).result == exchanged(w).result
    return same_type == (bar_normalize(s) == bar_normalize(w))


def equivalence(max_n: int = 5) -> SuiteResult:
    checks = []
    for n in range(1, max_n + 1):
        perms = vexillary_permutations(n)
        checks.append(_check(f"equal exchanged types iff equal reductions, S_{n}",
                             ((s, w) for s in perms for w in perms), _equivalence_ok))
    return SuiteResult("equivalence", checks)


def schur(sizes: Iterable[int] = (4, 5), variables: Iterable[int] = (2, 3)) -> SuiteResult:
    sizes, variables = list(sizes), list(variables)
    literal, conjugate_shape = [], []
    for n in sizes:
        for s in vexillary_permutations(n):
            for m in variables:
                got = sst_polynomial(exchanged(s).result, m)
                lam = vexillary_data(s).lam
                literal.append((s, m, got == classical_schur(lam, m)))
                conjugate_shape.append((s, m, got == classical_schur(conjugate(lam), m)))
    return SuiteResult("schur", [
        _check("semistandard polynomial = Schur of the vexillary shape", literal, lambda x: x[2]),
        _check("semistandard polynomial = Schur of the exchanged shape",
               conjugate_shape, lambda x: x[2]),
    ])


def legal_prefixes(t: TypeFilling, depth: int) -> list[tuple[Box, ...]]:
    """Every sequence of up to ``depth`` boxes that starts some tableau of t."""
    out = []

    def walk(cur: TypeFilling, prefix: tuple[Box, ...]):
        if prefix:
            out.append(prefix)
        if len(prefix) == depth or not len(cur):
            return
        for c in erasable_boxes(cur):
            walk(erase(cur, c), prefix + (c,))

    walk(t, ())
    return out


def _partial_ok(item) -> bool:
    s, u = item
    n_su = partial_fill_count(s, u)
    w = partial_fill_witness(s, u)
    if n_su == 0 or w is None or n_su != count_reduced_words(w):
        return False
    mu = nice_partial(s, u)
    return mu is None or n_su == hook_length_formula(mu)


def _corner_sum_ok(lam) -> bool:
    total = 0
    for a, b in corners(lam):
        smaller = list(lam)
        smaller[a - 1] -= 1
        total += count_tableaux(balanced_type(Diagram.ferrers(smaller)))
    return count_tableaux(balanced_type(Diagram.ferrers(lam))) == total


def _position_of_one_ok(lam) -> bool:
    tops = {}
    for blk in blocks(lam):
        smaller = list(lam)
        smaller[blk.rows[-1] - 1] -= 1
        tops[blk.corner] = hook_length_formula(smaller)
    return all(count_balanced_with_one_at(lam, c) == tops.get(c, 0)
               for c in Diagram.ferrers(lam))


def partial(max_n: int = 5, depth: int = 3, max_lam: int = 7) -> SuiteResult:
    items = [(s, u) for s in vexillary_permutations(max_n)
             for u in legal_prefixes(exchanged(s).result, depth)]
    shapes = [lam for n in range(1, max_lam + 1) for lam in partitions(n)]
    return SuiteResult("partial", [
        _check(f"pinned count = reduced words of witness, S_{max_n}, k <= {depth}",
               items, _partial_ok),
        _check(f"corner-sum recurrence for balanced counts, n <= {max_lam}", shapes, _corner_sum_ok),
        _check(f"position of entry 1 in balanced tableaux, n <= {max_lam}",
               shapes, _position_of_one_ok),
    ])


SUITES: dict[str, Callable[[int], SuiteResult]] = {
    "oracle": lambda k: oracle(k),
    "balanced": lambda k: balanced(k),
    "hook": lambda k: hook(k),
    "expectation": lambda k: expectation(k),
    "exchange": lambda k: exchange(k),
    "swap": lambda k: swap(max_size=k),
    "bridge": lambda k: bridge(k),
    "equivalence": lambda k: equivalence(k),
    "schur": lambda k: schur(range(1, k + 1)),
    "partial": lambda k: partial(k, max_lam=k + 2),
}


def run_suite(name: str, max_n: int) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return SUITES[name](max_n)
