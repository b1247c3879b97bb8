# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the hookgh.kernels hot loops."""

DEF MAXN = 256


def row_inv_exponents(word, Py_ssize_t n):
    cdef Py_ssize_t m = len(word)
    cdef long w[MAXN]
    cdef long out[MAXN]
    cdef Py_ssize_t i, j
    cdef long wj, c
    if m > MAXN or n > MAXN:
        raise ValueError("word too long for the compiled kernel")
    for i in range(m):
        w[i] = word[i]
        if w[i] < 1 or w[i] > n:
            raise ValueError(f"letter {w[i]} outside 1..{n}")
    for i in range(n):
        out[i] = 0
    for j in range(m):
        wj = w[j]
        c = 0
        for i in range(j):
            if w[i] > wj:
                c += 1
        out[wj - 1] = c
    return tuple([out[i] for i in range(n)])


def col_inv_exponents(word, Py_ssize_t n):
    cdef Py_ssize_t m = len(word)
    cdef long w[MAXN]
    cdef long out[MAXN]
    cdef Py_ssize_t i, j
    cdef long wj, c
    if m > MAXN or n > MAXN:
        raise ValueError("word too long for the compiled kernel")
    for i in range(m):
        w[i] = word[i]
        if w[i] < 1 or w[i] > n:
            raise ValueError(f"letter {w[i]} outside 1..{n}")
    for i in range(n):
        out[i] = 0
    for j in range(m):
        wj = w[j]
        c = 0
        for i in range(j):
            if w[i] < wj:
                c += 1
        out[wj - 1] = c
    return tuple([out[i] for i in range(n)])


def row_inv_count(word):
    cdef Py_ssize_t m = len(word)
    cdef long w[MAXN]
    cdef Py_ssize_t i, j
    cdef long c = 0
    if m > MAXN:
        raise ValueError("word too long for the compiled kernel")
    for i in range(m):
        w[i] = word[i]
    for j in range(m):
        for i in range(j):
            if w[i] > w[j]:
                c += 1
    return c


def col_inv_count(word):
    cdef Py_ssize_t m = len(word)
    cdef long w[MAXN]
    cdef Py_ssize_t i, j
    cdef long c = 0
    if m > MAXN:
        raise ValueError("word too long for the compiled kernel")
    for i in range(m):
        w[i] = word[i]
    for j in range(m):
        for i in range(j):
            if w[i] < w[j]:
                c += 1
    return c


def any_dominates(vecs, target):
    cdef Py_ssize_t k = len(target)
    cdef long t[MAXN]
    cdef Py_ssize_t i
    cdef bint ok
    if k > MAXN:
        raise ValueError("vector too long for the compiled kernel")
    for i in range(k):
        t[i] = target[i]
    for v in vecs:
        ok = True
        for i in range(k):
            if <long> v[i] < t[i]:
                ok = False
                break
        if ok:
            return True
    return False
