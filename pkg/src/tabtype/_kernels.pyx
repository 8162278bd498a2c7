# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled twin of ``_kernels_py``; same signatures, at most 64 boxes.

Counts are accumulated in unsigned 64-bit integers; an ``OverflowError`` is
raised when that is not enough so the caller can retry in Python.
"""

from libc.stdint cimport uint64_t
from libcpp.unordered_map cimport unordered_map
from libcpp.unordered_set cimport unordered_set
from libcpp.vector cimport vector
from cython.operator cimport dereference as deref, preincrement as inc

from tabtype.errors import StateLimitExceeded

BACKEND = "cython"

cdef uint64_t U64_MAX = 0xFFFFFFFFFFFFFFFFULL


cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long) nogil
    int ctz64 "__builtin_ctzll"(unsigned long long) nogil


cdef struct Packed:
    int n
    int theta[64]
    uint64_t hook[64]
    uint64_t over[64]


cdef int _pack(Packed* p, theta, hook, over) except -1:
    cdef int n = len(theta)
    cdef int i
    if n > 64:
        raise ValueError("compiled kernels support at most 64 boxes")
    p.n = n
    for i in range(n):
        p.theta[i] = theta[i]
        p.hook[i] = hook[i]
        p.over[i] = over[i]
    return 0


cdef inline uint64_t _erasable(const Packed* p, uint64_t erased) nogil:
    cdef uint64_t zero = 0, out = 0, m, low
    cdef int i
    for i in range(p.n):
        if not ((erased >> i) & 1) and p.theta[i] == popcount64(erased & p.hook[i]):
            zero |= (<uint64_t>1) << i
    m = zero
    while m:
        i = ctz64(m)
        m &= m - 1
        if not (p.over[i] & zero):
            out |= (<uint64_t>1) << i
    return out


def erasable_mask(theta, hook, over, erased):
    cdef Packed p
    _pack(&p, theta, hook, over)
    return _erasable(&p, <uint64_t>erased)


def count_fillings(theta, hook, over, start=0, state_limit=0):
    cdef Packed p
    _pack(&p, theta, hook, over)
    cdef int n = p.n
    cdef uint64_t full = U64_MAX if n == 64 else (((<uint64_t>1) << n) - 1)
    cdef uint64_t s = <uint64_t>start
    cdef size_t limit = <size_t>state_limit
    cdef unordered_map[uint64_t, uint64_t] layer, nxt
    cdef unordered_map[uint64_t, uint64_t].iterator it
    cdef uint64_t erased, ways, m, low, key, cur
    cdef int step, steps = n - popcount64(s)
    cdef bint overflow = False
    layer[s] = 1
    with nogil:
        for step in range(steps):
            nxt.clear()
            it = layer.begin()
            while it != layer.end():
                erased = deref(it).first
                ways = deref(it).second
                m = _erasable(&p, erased)
                while m:
                    low = m & (~m + 1)
                    m ^= low
                    key = erased | low
                    cur = nxt[key]
                    if cur > U64_MAX - ways:
                        overflow = True
                    nxt[key] = cur + ways
                inc(it)
            if overflow:
                break
            if limit and nxt.size() > limit:
                break
            layer.swap(nxt)
            if layer.empty():
                break
    if overflow:
        raise OverflowError("count exceeds 64 bits")
    if limit and nxt.size() > limit:
        raise StateLimitExceeded(nxt.size())
    if layer.empty():
        return 0
    it = layer.find(full)
    if it == layer.end():
        return 0
    return deref(it).second


cdef bint _erase_group(const Packed* p, uint64_t erased, uint64_t group) nogil:
    cdef uint64_t target = erased | group
    cdef vector[uint64_t] stack
    cdef unordered_set[uint64_t] seen
    cdef uint64_t cur, m, low, nxt
    stack.push_back(erased)
    seen.insert(erased)
    while not stack.empty():
        cur = stack.back()
        stack.pop_back()
        if cur == target:
            return True
        m = _erasable(p, cur) & group & ~cur
        while m:
            low = m & (~m + 1)
            m ^= low
            nxt = cur | low
            if seen.count(nxt) == 0:
                seen.insert(nxt)
                stack.push_back(nxt)
    return False


cdef bint _sst(const Packed* p, const int* cols, const int* labels, int m) nogil:
    cdef uint64_t erased = 0, group, colmask
    cdef int lab, i
    for lab in range(1, m + 1):
        group = 0
        colmask = 0
        for i in range(p.n):
            if labels[i] == lab:
                if (colmask >> cols[i]) & 1:
                    return False
                colmask |= (<uint64_t>1) << cols[i]
                group |= (<uint64_t>1) << i
        if group == 0:
            continue
        if not _erase_group(p, erased, group):
            return False
        erased |= group
    return True


def sst_check(theta, hook, over, cols, labels):
    cdef Packed p
    _pack(&p, theta, hook, over)
    cdef int c_cols[64]
    cdef int c_labels[64]
    cdef int i, m = 0
    for i in range(p.n):
        c_cols[i] = cols[i]
        c_labels[i] = labels[i]
        if cols[i] >= 64 or cols[i] < 0:
            raise ValueError("column index out of range")
        if labels[i] < 1:
            raise ValueError("labels must be positive")
        if labels[i] > m:
            m = labels[i]
    return _sst(&p, c_cols, c_labels, m)


def sst_terms(theta, hook, over, cols, int m):
    cdef Packed p
    _pack(&p, theta, hook, over)
    cdef int n = p.n
    cdef int c_cols[64]
    cdef int labels[64]
    cdef int i, j, lab
    cdef vector[uint64_t] used  # per label: bitmask of columns already labelled
    for i in range(n):
        if cols[i] >= 64 or cols[i] < 0:
            raise ValueError("column index out of range")
        c_cols[i] = cols[i]
    if n == 0:
        return {tuple([0] * m): 1}
    used.resize(m + 1, 0)
    terms = {}
    # odometer over labellings with column-distinct pruning
    i = 0
    labels[0] = 0
    while i >= 0:
        lab = labels[i]
        if lab > 0:
            used[lab] &= ~((<uint64_t>1) << c_cols[i])
        lab += 1
        while lab <= m and (used[lab] >> c_cols[i]) & 1:
            lab += 1
        if lab > m:
            labels[i] = 0
            i -= 1
            continue
        labels[i] = lab
        used[lab] |= (<uint64_t>1) << c_cols[i]
        if i == n - 1:
            if _sst(&p, c_cols, labels, m):
                exps = [0] * m
                for j in range(n):
                    exps[labels[j] - 1] += 1
                key = tuple(exps)
                terms[key] = terms.get(key, 0) + 1
        else:
            i += 1
            labels[i] = 0
    return terms
