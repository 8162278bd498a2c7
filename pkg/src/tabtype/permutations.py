"""Permutations, inversion sets, reduced words and the type of a permutation.

Permutations are tuples in one-line notation ``(s(1), ..., s(n))``. Right
multiplication by the simple transposition s_i swaps the entries in positions
i and i+1; a reduced word ``[i1, ..., il]`` spells the permutation obtained by
applying s_i1, ..., s_il to the identity in that order.

Inversions are pairs of *values* ``(a, b)`` with ``a < b`` and ``b`` written
before ``a``. The staircase of size n is laid out so that the pair ``(a, b)``
sits in row ``n + 1 - b`` and column ``a``: row lengths of the type of a
permutation then count, for each value, the smaller values to its right.
"""

from __future__ import annotations

import functools
from itertools import permutations as _itertools_permutations
from typing import Iterable, Iterator, NamedTuple

from tabtype.diagrams import Box, Diagram, Partition, conjugate
from tabtype.errors import (
    InvalidTableau, InvalidWord, LimitExceeded, NotAnInversionSet, TabtypeError,
)
from tabtype.tableaux import Tableau, TypeFilling, filling_sequence_of, type_of

Permutation = tuple[int, ...]
Pair = tuple[int, int]


def permutation(seq: Iterable[int]) -> Permutation:
    s = tuple(int(x) for x in seq)
    if sorted(s) != list(range(1, len(s) + 1)):
        raise TabtypeError(f"{list(s)} is not a permutation of 1..{len(s)}")
    return s


def all_permutations(n: int) -> Iterator[Permutation]:
    return _itertools_permutations(range(1, n + 1))


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def inverse(s: Permutation) -> Permutation:
    out = [0] * len(s)
    for i, v in enumerate(s):
        out[v - 1] = i + 1
    return tuple(out)


def compose(s: Permutation, t: Permutation) -> Permutation:
    """The product s t, i.e. i -> s(t(i))."""
    return tuple(s[v - 1] for v in t)


def apply_simple(s: Permutation, i: int) -> Permutation:
    """s * s_i: swap the entries in positions i and i+1."""
    out = list(s)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def inversion_set(s: Permutation) -> frozenset[Pair]:
    n = len(s)
    return frozenset(
        (s[j], s[i]) for i in range(n) for j in range(i + 1, n) if s[i] > s[j]
    )


def length(s: Permutation) -> int:
    return len(inversion_set(s))


def word_to_permutation(word: Iterable[int], n: int) -> Permutation:
    s = identity(n)
    for i in word:
        if not 1 <= i < n:
            raise InvalidWord(f"letter {i} out of range for S_{n}")
        s = apply_simple(s, i)
    return s


def descents(s: Permutation) -> list[int]:
    return [i + 1 for i in range(len(s) - 1) if s[i] > s[i + 1]]


def count_reduced_words(s: Permutation) -> int:
    """Maximal chains from the identity to s in the right weak order."""
    s = permutation(s)

    @functools.cache
    def chains(w: Permutation) -> int:
        ds = descents(w)
        if not ds:
            return 1
        return sum(chains(apply_simple(w, i)) for i in ds)

    return chains(s)


def iter_reduced_words(s: Permutation) -> Iterator[list[int]]:
    s = permutation(s)

    def walk(w: Permutation, suffix: list[int]) -> Iterator[list[int]]:
        ds = descents(w)
        if not ds:
            yield suffix[::-1]
            return
        for i in ds:
            suffix.append(i)
            yield from walk(apply_simple(w, i), suffix)
            suffix.pop()

    words = sorted(walk(s, []))
    yield from words


def enumerate_reduced_words(s: Permutation, limit: int | None = 100_000) -> list[list[int]]:
    if limit is not None and count_reduced_words(s) > limit:
        raise LimitExceeded(f"more than {limit} reduced words")
    return list(iter_reduced_words(s))


def _check_pairs(pairs: Iterable[Pair], n: int) -> frozenset[Pair]:
    out = frozenset((int(a), int(b)) for a, b in pairs)
    for a, b in out:
        if not 1 <= a < b <= n:
            raise TabtypeError(f"pair {(a, b)} is not in 1 <= a < b <= {n}")
    return out


def is_inversion_set(pairs: Iterable[Pair], n: int) -> bool:
    """Hook-count test against the staircase valuation b - a - 1."""
    A = _check_pairs(pairs, n)
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            inside = sum(((a, c) in A) + ((c, b) in A) for c in range(a + 1, b))
            theta = b - a - 1
            if (a, b) in A:
                if theta > inside:
                    return False
            elif theta < inside:
                return False
    return True


def permutation_from_inversion_set(pairs: Iterable[Pair], n: int) -> Permutation:
    A = _check_pairs(pairs, n)

    def before(x: int, y: int) -> int:
        if x == y:
            return 0
        if x < y:
            return 1 if (x, y) in A else -1
        return -1 if (y, x) in A else 1

    s = tuple(sorted(range(1, n + 1), key=functools.cmp_to_key(before)))
    if inversion_set(s) != A:
        raise NotAnInversionSet(f"{sorted(A)} is not the inversion set of a permutation of {n}")
    return s


class VexillaryData(NamedTuple):
    d: tuple[int, ...]
    g: tuple[int, ...]
    mu: Partition
    lam: Partition
    is_vexillary: bool


def vexillary_data(s: Permutation) -> VexillaryData:
    s = permutation(s)
    n = len(s)
    d = tuple(sum(1 for j in range(i + 1, n) if s[j] < s[i]) for i in range(n))
    g = tuple(sum(1 for j in range(i) if s[j] > s[i]) for i in range(n))
    mu = tuple(sorted((x for x in d if x), reverse=True))
    lam = tuple(sorted((x for x in g if x), reverse=True))
    return VexillaryData(d, g, mu, lam, lam == conjugate(mu))


def is_vexillary(s: Permutation) -> bool:
    return vexillary_data(s).is_vexillary


def rothe_diagram(s: Permutation) -> Diagram:
    n = len(s)
    return Diagram(
        (a + 1, s[b]) for a in range(n) for b in range(a + 1, n) if s[a] > s[b]
    )


def pair_to_box(pair: Pair, n: int) -> Box:
    a, b = pair
    return Box(n + 1 - b, a)


def box_to_pair(box, n: int) -> Pair:
    r, c = box
    return (c, n + 1 - r)


def staircase_type(n: int) -> TypeFilling:
    """The type on the staircase of size n valuing pair (a, b) by b - a - 1."""
    if n < 2:
        raise TabtypeError("the staircase type needs n >= 2")
    return TypeFilling(
        (pair_to_box((a, b), n), b - a - 1)
        for a in range(1, n + 1) for b in range(a + 1, n + 1)
    )


def type_of_permutation(s: Permutation) -> TypeFilling:
    """Restriction of the staircase type to the inversions of s."""
    s = permutation(s)
    n = len(s)
    return TypeFilling((pair_to_box((a, b), n), b - a - 1) for a, b in inversion_set(s))


def tableau_to_reduced_word(s: Permutation, t: Tableau) -> list[int]:
    s = permutation(s)
    n = len(s)
    if type_of(t) != type_of_permutation(s):
        raise InvalidTableau("tableau is not of the type of the permutation")
    cur = list(identity(n))
    word = []
    for box in filling_sequence_of(t):
        a, b = box_to_pair(box, n)
        i = cur.index(a)
        if i + 1 >= n or cur[i + 1] != b:
            raise InvalidTableau(f"pair {(a, b)} is not a cover step")
        cur[i], cur[i + 1] = b, a
        word.append(i + 1)
    return word


def reduced_word_to_tableau(s: Permutation, word: Iterable[int]) -> Tableau:
    s = permutation(s)
    n = len(s)
    cur = list(identity(n))
    entries = {}
    for k, i in enumerate(word, start=1):
        if not 1 <= i < n:
            raise InvalidWord(f"letter {i} out of range for S_{n}")
        x, y = cur[i - 1], cur[i]
        if x > y:
            raise InvalidWord("word is not reduced")
        cur[i - 1], cur[i] = y, x
        entries[pair_to_box((x, y), n)] = k
    if tuple(cur) != s:
        raise InvalidWord(f"word does not spell {list(s)}")
    return Tableau(entries)
