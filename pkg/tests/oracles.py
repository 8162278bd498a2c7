"""Brute-force reference implementations, deliberately naive.

None of these touch the filling process, the subset tables, or the hook
length formula; they work from the raw definitions over all fillings.
"""

from itertools import permutations, product


def hook_of(boxes, c):
    """Boxes strictly right of c in its row, plus c and boxes below it in its column."""
    r, col = c
    return {d for d in boxes if (d[0] == r and d[1] > col) or (d[1] == col and d[0] >= r)}


def theta_of(entries):
    boxes = set(entries)
    return {c: sum(1 for d in hook_of(boxes, c) if entries[d] < entries[c]) for c in boxes}


def tableaux_of_type(theta):
    """Every bijective filling whose hook counts match theta."""
    boxes = sorted(theta)
    out = []
    for values in permutations(range(1, len(boxes) + 1)):
        entries = dict(zip(boxes, values))
        if theta_of(entries) == theta:
            out.append(entries)
    return out


def ferrers(parts):
    return {(r, c) for r, p in enumerate(parts, 1) for c in range(1, p + 1)}


def syt_count(parts):
    """Standard Young tableaux by peeling off the largest entry at a corner."""
    parts = [p for p in parts if p]
    if not parts:
        return 1
    total = 0
    for i, p in enumerate(parts):
        if i + 1 == len(parts) or parts[i + 1] < p:
            smaller = list(parts)
            smaller[i] -= 1
            total += syt_count(smaller)
    return total


def inversions(s):
    n = len(s)
    return {(s[j], s[i]) for i in range(n) for j in range(i + 1, n) if s[i] > s[j]}


def reduced_words(s):
    """All words whose successive swaps each add one inversion and end at s."""
    n = len(s)
    target = len(inversions(s))
    found = []

    def walk(cur, word):
        if len(word) == target:
            if tuple(cur) == tuple(s):
                found.append(tuple(word))
            return
        for i in range(n - 1):
            if cur[i] < cur[i + 1]:
                nxt = list(cur)
                nxt[i], nxt[i + 1] = nxt[i + 1], nxt[i]
                if inversions(nxt) <= inversions(s):
                    walk(nxt, word + [i + 1])

    walk(list(range(1, n + 1)), [])
    return found


def all_inversion_sets(n):
    return {frozenset(inversions(s)) for s in permutations(range(1, n + 1))}


def contains_2143(s):
    n = len(s)
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                for d in range(c + 1, n):
                    if s[b] < s[a] < s[d] < s[c]:
                        return True
    return False


def ssyt_polynomial(parts, m):
    """Exponent map of semistandard Young tableaux, by checking every labelling."""
    boxes = sorted(ferrers(parts))
    terms = {}
    for labels in product(range(1, m + 1), repeat=len(boxes)):
        lab = dict(zip(boxes, labels))
        if all(lab.get((r, c + 1), 10**9) >= v and lab.get((r + 1, c), 10**9) > v
               for (r, c), v in lab.items()):
            exps = tuple(labels.count(i) for i in range(1, m + 1))
            terms[exps] = terms.get(exps, 0) + 1
    return terms


def is_sst_brute(theta, labels):
    """Some tableau of the type orders the labels weakly, with no label repeated in a column."""
    cols = {}
    for c, v in labels.items():
        if (c[1], v) in cols:
            return False
        cols[(c[1], v)] = c
    for entries in tableaux_of_type(theta):
        seq = sorted(entries, key=entries.get)
        if all(labels[a] <= labels[b] for a, b in zip(seq, seq[1:])):
            return True
    return False
