# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel for exhaustive transposition-walk counting.

Twin of qhurwitz.pathcount_py.count_matrix; see there for the contract.
"""

from libc.stdlib cimport calloc, free


cdef void _walk(
    int depth, int d, int n, int ntrans,
    int* ta, int* tb, int* perm, int* pos, int* bcount,
    long long* counts, int nsigs,
    int* class_lookup, int* sig_lookup,
    int class_base, int sig_base, int* scratch,
) noexcept:
    cdef int k, a, b, pa, pb
    cdef int i, j, length, code, cidx, sidx, key
    cdef int tmp
    if depth == d:
        # cycle-type code: multiplicity of cycle length L contributes
        # class_base**(L-1); scratch doubles as the visited marker
        for i in range(n):
            scratch[i] = 0
        code = 0
        for i in range(n):
            if scratch[i]:
                continue
            length = 0
            j = i
            while not scratch[j]:
                scratch[j] = 1
                j = perm[j]
                length += 1
            key = 1
            for k in range(length - 1):
                key *= class_base
            code += key
        cidx = class_lookup[code]
        # signature code: sorted descending b-multiplicities, base sig_base
        for i in range(n):
            scratch[i] = bcount[i]
        # insertion sort descending over indices 1..n-1 (index 0 unused)
        for i in range(2, n):
            tmp = scratch[i]
            j = i - 1
            while j >= 1 and scratch[j] < tmp:
                scratch[j + 1] = scratch[j]
                j -= 1
            scratch[j + 1] = tmp
        code = 0
        key = 1
        for i in range(1, n):
            code += scratch[i] * key
            key *= sig_base
        sidx = sig_lookup[code]
        counts[cidx * nsigs + sidx] += 1
        return
    for k in range(ntrans):
        a = ta[k]
        b = tb[k]
        pa = pos[a]
        pb = pos[b]
        perm[pa] = b
        perm[pb] = a
        pos[a] = pb
        pos[b] = pa
        bcount[b] += 1
        _walk(depth + 1, d, n, ntrans, ta, tb, perm, pos, bcount,
              counts, nsigs, class_lookup, sig_lookup,
              class_base, sig_base, scratch)
        bcount[b] -= 1
        perm[pa] = a
        perm[pb] = b
        pos[a] = pa
        pos[b] = pb


def count_matrix(start, int d, classes, sigs):
    """Count d-step walks from a fixed start permutation (compiled)."""
    cdef int n = len(start)
    cdef int nclasses = len(classes)
    cdef int nsigs = len(sigs)
    cdef int ntrans = n * (n - 1) // 2
    cdef int class_base = n + 1
    cdef int sig_base = d + 2
    cdef int i, j, k, code, keyv

    # lookup table sizes
    cdef int class_space = 1
    for i in range(n):
        class_space *= class_base
    cdef int sig_space = 1
    for i in range(n - 1):
        sig_space *= sig_base

    cdef int* ta = <int*> calloc(max(ntrans, 1), sizeof(int))
    cdef int* tb = <int*> calloc(max(ntrans, 1), sizeof(int))
    cdef int* perm = <int*> calloc(n, sizeof(int))
    cdef int* pos = <int*> calloc(n, sizeof(int))
    cdef int* bcount = <int*> calloc(n, sizeof(int))
    cdef int* scratch = <int*> calloc(n, sizeof(int))
    cdef int* class_lookup = <int*> calloc(class_space, sizeof(int))
    cdef int* sig_lookup = <int*> calloc(sig_space, sizeof(int))
    cdef long long* counts = <long long*> calloc(
        nclasses * nsigs, sizeof(long long)
    )
    if (ta == NULL or tb == NULL or perm == NULL or pos == NULL
            or bcount == NULL or scratch == NULL or class_lookup == NULL
            or sig_lookup == NULL or counts == NULL):
        raise MemoryError()

    try:
        k = 0
        for b in range(1, n):
            for a in range(b):
                ta[k] = a
                tb[k] = b
                k += 1
        for i in range(n):
            perm[i] = start[i]
            pos[start[i]] = i

        for i in range(class_space):
            class_lookup[i] = -1
        for i, cls in enumerate(classes):
            code = 0
            for part in cls:
                keyv = 1
                for j in range(part - 1):
                    keyv *= class_base
                code += keyv
            class_lookup[code] = i

        for i in range(sig_space):
            sig_lookup[i] = -1
        for i, sig in enumerate(sigs):
            if len(sig) > n - 1:
                continue  # more distinct pivots than available; unreachable
            code = 0
            keyv = 1
            for part in sig:
                code += part * keyv
                keyv *= sig_base
            sig_lookup[code] = i

        _walk(0, d, n, ntrans, ta, tb, perm, pos, bcount,
              counts, nsigs, class_lookup, sig_lookup,
              class_base, sig_base, scratch)

        return [
            [counts[i * nsigs + j] for j in range(nsigs)]
            for i in range(nclasses)
        ]
    finally:
        free(ta)
        free(tb)
        free(perm)
        free(pos)
        free(bcount)
        free(scratch)
        free(class_lookup)
        free(sig_lookup)
        free(counts)
