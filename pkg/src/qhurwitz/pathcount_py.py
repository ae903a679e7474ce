"""Pure-Python kernel for exhaustive transposition-walk counting.

Drop-in twin of the compiled ``qhurwitz._pathcount`` extension; the
caller picks whichever is importable.  Both enumerate every sequence of
``d`` transpositions acting by left multiplication on a fixed start
permutation and classify the walks by end conjugacy class and by
signature (the weakly decreasing multiplicity vector of the larger
transposition entries used along the walk).
"""

from __future__ import annotations


def count_matrix(start, d, classes, sigs):
    """Count d-step walks from a fixed start permutation.

    ``start`` is a 0-based one-line permutation tuple; ``classes`` and
    ``sigs`` are ordered lists of partitions (tuples).  Returns a list
    of per-class lists: ``result[class_index][sig_index]`` is the number
    of walks ending in that conjugacy class with that signature.
    """
    n = len(start)
    nclasses = len(classes)
    nsigs = len(sigs)
    class_index = {tuple(c): i for i, c in enumerate(classes)}
    sig_index = {tuple(s): i for i, s in enumerate(sigs)}
    counts = [[0] * nsigs for _ in range(nclasses)]

    transpositions = [(a, b) for b in range(1, n) for a in range(b)]
    perm = list(start)
    pos = [0] * n
    for i, v in enumerate(perm):
        pos[v] = i
    bcount = [0] * n

    def leaf():
        # conjugacy class of the current permutation
        seen = [False] * n
        cycles = []
        for i in range(n):
            if seen[i]:
                continue
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            cycles.append(length)
        cycles.sort(reverse=True)
        sig = tuple(sorted((c for c in bcount if c), reverse=True))
        counts[class_index[tuple(cycles)]][sig_index[sig]] += 1

    def walk(depth):
        if depth == d:
            leaf()
            return
        for a, b in transpositions:
            pa, pb = pos[a], pos[b]
            perm[pa], perm[pb] = b, a
            pos[a], pos[b] = pb, pa
            bcount[b] += 1
            walk(depth + 1)
            bcount[b] -= 1
            perm[pa], perm[pb] = a, b
            pos[a], pos[b] = pa, pb

    walk(0)
    return counts
