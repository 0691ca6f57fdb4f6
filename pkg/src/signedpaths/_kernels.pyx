# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernels for descent histograms.

Each function sweeps a contiguous block of permutations of [n] (ranked in
lexicographic order, ``start``/``stop`` bounding the rank) and, for the
signed variants, every sign vector of each permutation by direct
enumeration: the histograms are exact integer counts indexed by descent
count, returned as Python lists of length ``n + 1``.

The pure-Python module ``_pykernels`` computes the same histograms with a
different algorithm (a dynamic program over sign choices); the test suite
holds the two implementations against each other.
"""

from libc.string cimport memset

cdef int MAXN = 16


cdef void _unrank(long long rank, int n, int* out) noexcept:
    # Write the lexicographically rank-th permutation of 1..n into out.
    cdef int avail[16]
    cdef long long fact[17]
    cdef int i, j, idx
    fact[0] = 1
    for i in range(1, n + 1):
        fact[i] = fact[i - 1] * i
    for i in range(n):
        avail[i] = i + 1
    for i in range(n):
        idx = <int>(rank // fact[n - 1 - i])
        rank = rank % fact[n - 1 - i]
        out[i] = avail[idx]
        for j in range(idx, n - 1 - i):
            avail[j] = avail[j + 1]


cdef bint _next_perm(int* a, int n) noexcept:
    # Advance a to its lexicographic successor; False once a is the last.
    cdef int i = n - 2
    cdef int j, t
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    t = a[i]; a[i] = a[j]; a[j] = t
    i += 1
    j = n - 1
    while i < j:
        t = a[i]; a[i] = a[j]; a[j] = t
        i += 1
        j -= 1
    return True


cdef long long _clip(int n, long long start, long long stop_in, bint has_stop) noexcept:
    cdef long long total = 1
    cdef int i
    for i in range(1, n + 1):
        total *= i
    if not has_stop or stop_in > total:
        return total
    return stop_in


def hist_a(int n, long long start=0, stop=None):
    """Descent histogram of the permutations with ranks in [start, stop)."""
    cdef long long counts[17]
    cdef int w[16]
    cdef long long r, hi
    cdef int i, d
    if n < 0 or n >= MAXN:
        raise ValueError("n out of range for the compiled kernel")
    memset(counts, 0, sizeof(counts))
    hi = _clip(n, start, stop if stop is not None else 0, stop is not None)
    if n == 0:
        if start == 0 and hi > 0:
            counts[0] = 1
        return [counts[i] for i in range(n + 1)]
    if start < hi:
        _unrank(start, n, w)
        r = start
        while True:
            d = 0
            for i in range(n - 1):
                if w[i] > w[i + 1]:
                    d += 1
            counts[d] += 1
            r += 1
            if r >= hi or not _next_perm(w, n):
                break
    return [counts[i] for i in range(n + 1)]


def hist_b(int n, long long start=0, stop=None):
    """Type B descent histogram over whole sign blocks of permutations."""
    cdef long long counts[17]
    cdef int w[16]
    cdef long long r, hi, mask, nmasks
    cdef int i, d, prev, cur
    if n < 0 or n >= MAXN:
        raise ValueError("n out of range for the compiled kernel")
    memset(counts, 0, sizeof(counts))
    hi = _clip(n, start, stop if stop is not None else 0, stop is not None)
    if n == 0:
        if start == 0 and hi > 0:
            counts[0] = 1
        return [counts[i] for i in range(n + 1)]
    nmasks = 1LL << n
    if start < hi:
        _unrank(start, n, w)
        r = start
        while True:
            for mask in range(nmasks):
                prev = -w[0] if mask & 1 else w[0]
                d = 1 if prev < 0 else 0
                for i in range(1, n):
                    cur = -w[i] if (mask >> i) & 1 else w[i]
                    if prev > cur:
                        d += 1
                    prev = cur
                counts[d] += 1
            r += 1
            if r >= hi or not _next_perm(w, n):
                break
    return [counts[i] for i in range(n + 1)]


def hist_b_positive(int n, long long start=0, stop=None):
    """Histogram of strictly positive type B descents (sentinel ignored)."""
    cdef long long counts[17]
    cdef int w[16]
    cdef long long r, hi, mask, nmasks
    cdef int i, d, prev, cur
    if n < 0 or n >= MAXN:
        raise ValueError("n out of range for the compiled kernel")
    memset(counts, 0, sizeof(counts))
    hi = _clip(n, start, stop if stop is not None else 0, stop is not None)
    if n == 0:
        if start == 0 and hi > 0:
            counts[0] = 1
        return [counts[i] for i in range(n + 1)]
    nmasks = 1LL << n
    if start < hi:
        _unrank(start, n, w)
        r = start
        while True:
            for mask in range(nmasks):
                prev = -w[0] if mask & 1 else w[0]
                d = 0
                for i in range(1, n):
                    cur = -w[i] if (mask >> i) & 1 else w[i]
                    if prev > cur:
                        d += 1
                    prev = cur
                counts[d] += 1
            r += 1
            if r >= hi or not _next_perm(w, n):
                break
    return [counts[i] for i in range(n + 1)]


def hist_d(int n, long long start=0, stop=None):
    """Type D descent histogram over even-signed sign blocks."""
    cdef long long counts[17]
    cdef int w[16]
    cdef long long r, hi, mask, nmasks, m
    cdef int i, d, prev, cur, bits
    if n < 2 or n >= MAXN:
        raise ValueError("type D histograms need 2 <= n < 16")
    memset(counts, 0, sizeof(counts))
    hi = _clip(n, start, stop if stop is not None else 0, stop is not None)
    nmasks = 1LL << n
    if start < hi:
        _unrank(start, n, w)
        r = start
        while True:
            for mask in range(nmasks):
                bits = 0
                m = mask
                while m:
                    bits += 1
                    m &= m - 1
                if bits & 1:
                    continue
                prev = -w[0] if mask & 1 else w[0]
                cur = -w[1] if (mask >> 1) & 1 else w[1]
                # sentinel at index 0: -u_2 > u_1, i.e. u_1 + u_2 < 0
                d = 1 if prev + cur < 0 else 0
                if prev > cur:
                    d += 1
                prev = cur
                for i in range(2, n):
                    cur = -w[i] if (mask >> i) & 1 else w[i]
                    if prev > cur:
                        d += 1
                    prev = cur
                counts[d] += 1
            r += 1
            if r >= hi or not _next_perm(w, n):
                break
    return [counts[i] for i in range(n + 1)]
