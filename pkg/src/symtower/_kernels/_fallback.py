"""Pure Python / numpy versions of the hot kernels.

These are the reference implementations; the Cython module mirrors them
exactly and is checked against them in the test suite.
"""

import numpy as np

BACKEND = "python"


def map_encode(rows, flat_table, offsets, radix, sort_rows):
    """Apply per-column index tables to tuple rows and encode the result.

    Parameters
    ----------
    rows : int64 array, shape (N, k)
        Tuples of factor indices; 0 is the basepoint of each factor.
    flat_table : int64 array
        Concatenated per-column tables; column ``c`` value ``v`` maps to
        ``flat_table[offsets[c] + v]``.
    offsets : int64 array, shape (k,)
    radix : int
        Encoding base, strictly larger than every mapped index.
    sort_rows : bool
        Sort each mapped row before encoding (symmetric-power orbits).

    Returns
    -------
    int64 array, shape (N,)
        Mixed-radix keys; a row containing a basepoint coordinate encodes
        to 0.  Key order agrees with lexicographic order of the rows.
    """
    rows = np.asarray(rows, dtype=np.int64)
    n, k = rows.shape
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    mapped = flat_table[rows + offsets[None, :]]
    if sort_rows:
        mapped.sort(axis=1)
    keys = np.zeros(n, dtype=np.int64)
    for c in range(k):
        keys = keys * radix + mapped[:, c]
    keys[(mapped == 0).any(axis=1)] = 0
    return keys


def smith_diagonal(matrix):
    """Invariant factors of an integer matrix (nonzero diagonal of its SNF).

    Pivot rule: smallest nonzero absolute value in the active submatrix,
    ties broken row-major.  Arithmetic is exact (Python ints).
    """
    a = [[int(v) for v in row] for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    t = 0
    while t < m and t < n:
        piv = _min_entry(a, t, m, n)
        if piv is None:
            break
        while True:
            pi, pj = piv
            if pi != t:
                a[t], a[pi] = a[pi], a[t]
            if pj != t:
                for row in a[t:]:
                    row[t], row[pj] = row[pj], row[t]
            p = a[t][t]
            rt = a[t]
            for i in range(t + 1, m):
                q = a[i][t] // p
                if q:
                    ri = a[i]
                    for j in range(t, n):
                        if rt[j]:
                            ri[j] -= q * rt[j]
            for j in range(t + 1, n):
                q = rt[j] // p
                if q:
                    for i in range(t, m):
                        if a[i][t]:
                            a[i][j] -= q * a[i][t]
            clean = all(a[i][t] == 0 for i in range(t + 1, m)) and all(
                rt[j] == 0 for j in range(t + 1, n)
            )
            if clean:
                bad = None
                for i in range(t + 1, m):
                    ri = a[i]
                    for j in range(t + 1, n):
                        if ri[j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                ri = a[bad]
                for j in range(t, n):
                    rt[j] += ri[j]
            piv = _min_entry(a, t, m, n)
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def _min_entry(a, t, m, n):
    best = None
    where = None
    for i in range(t, m):
        row = a[i]
        for j in range(t, n):
            v = row[j]
            if v:
                av = v if v > 0 else -v
                if best is None or av < best:
                    best = av
                    where = (i, j)
                    if av == 1:
                        return where
    return where
