"""Pure-Python filling kernels over bitmask-encoded types.

A type on N boxes is described by three parallel lists indexed by box:

``theta[i]``  the original valuation of box i;
``hook[i]``   bitmask of the boxes d != i lying in the hook of i;
``over[i]``   bitmask of the boxes d != i whose hook contains i.

A residual type is identified by the bitmask of erased boxes; its valuation
is ``theta[i] - popcount(erased & hook[i])``.
"""

from __future__ import annotations

from collections import Counter

from tabtype.errors import StateLimitExceeded

BACKEND = "python"


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def erasable_mask(theta, hook, over, erased: int) -> int:
    zero = 0
    for i in range(len(theta)):
        if not (erased >> i) & 1 and theta[i] == (erased & hook[i]).bit_count():
            zero |= 1 << i
    out = 0
    for i in _bits(zero):
        if not over[i] & zero:
            out |= 1 << i
    return out


def count_fillings(theta, hook, over, start: int = 0, state_limit: int = 0) -> int:
    """Number of ways to finish erasing every box starting from ``start``.

    Forward subset DP, one layer per erasure. ``state_limit`` > 0 caps the
    size of a layer.
    """
    n = len(theta)
    full = (1 << n) - 1
    layer = {start: 1}
    for _ in range(n - start.bit_count()):
        nxt: dict[int, int] = {}
        for erased, ways in layer.items():
            m = erasable_mask(theta, hook, over, erased)
            while m:
                low = m & -m
                m ^= low
                key = erased | low
                nxt[key] = nxt.get(key, 0) + ways
        if state_limit and len(nxt) > state_limit:
            raise StateLimitExceeded(len(nxt))
        if not nxt:
            return 0
        layer = nxt
    return layer.get(full, 0)


def count_fillings_dfs(theta, hook, over, start: int = 0) -> int:
    """Memory-free depth-first count; exponential time."""
    full = (1 << len(theta)) - 1

    def go(erased: int) -> int:
        if erased == full:
            return 1
        total = 0
        m = erasable_mask(theta, hook, over, erased)
        while m:
            low = m & -m
            m ^= low
            total += go(erased | low)
        return total

    return go(start)


def _erase_group(theta, hook, over, erased: int, group: int) -> bool:
    target = erased | group
    stack = [erased]
    seen = {erased}
    while stack:
        cur = stack.pop()
        if cur == target:
            return True
        m = erasable_mask(theta, hook, over, cur) & group & ~cur
        while m:
            low = m & -m
            m ^= low
            nxt = cur | low
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return False


def sst_check(theta, hook, over, cols, labels) -> bool:
    """Is there a filling sequence along which labels weakly increase and
    boxes sharing a column carry strictly increasing labels?"""
    groups: dict[int, int] = {}
    for i, lab in enumerate(labels):
        groups[lab] = groups.get(lab, 0) | (1 << i)
    erased = 0
    for lab in sorted(groups):
        g = groups[lab]
        seen_cols = set()
        for i in _bits(g):
            if cols[i] in seen_cols:
                return False
            seen_cols.add(cols[i])
        if not _erase_group(theta, hook, over, erased, g):
            return False
        erased |= g
    return True


def sst_terms(theta, hook, over, cols, m: int) -> dict[tuple[int, ...], int]:
    """Exponent vector -> number of semistandard labellings with labels in 1..m."""
    n = len(theta)
    terms: Counter = Counter()
    labels = [0] * n
    # labelled boxes per (column, label), for column-distinct pruning
    used: set[tuple[int, int]] = set()

    def assign(i: int) -> None:
        if i == n:
            if sst_check(theta, hook, over, cols, labels):
                exps = [0] * m
                for lab in labels:
                    exps[lab - 1] += 1
                terms[tuple(exps)] += 1
            return
        for lab in range(1, m + 1):
            key = (cols[i], lab)
            if key in used:
                continue
            used.add(key)
            labels[i] = lab
            assign(i + 1)
            used.discard(key)

    assign(0)
    return dict(terms)
