# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in ``_pykernels``.

Words are limited to 64 letters so that position and value sets fit in a
single machine word.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

NAME = "cython"

cdef enum:
    MAXN = 64


cdef int _load(object seq, int* out) except -1:
    cdef Py_ssize_t n = len(seq)
    cdef Py_ssize_t i
    if n > MAXN:
        raise ValueError(f"kernels support at most {MAXN} letters, got {n}")
    for i in range(n):
        out[i] = seq[i]
    return <int>n


cdef int _lis(int* w, int n, int sign) noexcept nogil:
    cdef int tops[MAXN]
    cdef int size = 0
    cdef int i, lo, hi, mid, x
    for i in range(n):
        x = sign * w[i]
        lo = 0
        hi = size
        while lo < hi:
            mid = (lo + hi) >> 1
            if tops[mid] < x:
                lo = mid + 1
            else:
                hi = mid
        tops[lo] = x
        if lo == size:
            size += 1
    return size


cdef int _monotone(int* p, int m) noexcept nogil:
    cdef int i
    cdef bint up = True, down = True
    for i in range(m):
        if p[i] != i + 1:
            up = False
        if p[i] != m - i:
            down = False
    if up:
        return 1
    if down:
        return -1
    return 0


cdef bint _match(int* w, int n, int* p, int m, int t, int start, int* chosen) noexcept nogil:
    cdef int i, s, x
    cdef bint ok
    if t == m:
        return True
    for i in range(start, n - (m - t) + 1):
        x = w[i]
        ok = True
        for s in range(t):
            if (x > chosen[s]) != (p[t] > p[s]):
                ok = False
                break
        if ok:
            chosen[t] = x
            if _match(w, n, p, m, t + 1, i + 1, chosen):
                return True
    return False


cdef bint _contains(int* w, int n, int* p, int m, int kind) noexcept nogil:
    cdef int chosen[MAXN]
    if m == 0:
        return True
    if m > n:
        return False
    if kind == 1:
        return _lis(w, n, 1) >= m
    if kind == -1:
        return _lis(w, n, -1) >= m
    return _match(w, n, p, m, 0, 0, chosen)


def lis_length(w):
    cdef int buf[MAXN]
    cdef int n = _load(w, buf)
    return _lis(buf, n, 1)


def lds_length(w):
    cdef int buf[MAXN]
    cdef int n = _load(w, buf)
    return _lis(buf, n, -1)


def contains_pattern(w, p):
    cdef int wb[MAXN]
    cdef int pb[MAXN]
    cdef int m = len(p)
    if m > len(w):
        return False
    cdef int n = _load(w, wb)
    m = _load(p, pb)
    return _contains(wb, n, pb, m, _monotone(pb, m))


def count_extensions(need, patterns):
    """See ``_pykernels.count_extensions``."""
    cdef uint64_t needs[MAXN]
    cdef int word[MAXN]
    cdef int stack[MAXN + 1]
    cdef int placed[MAXN]
    cdef int n = len(need)
    cdef int npat = len(patterns)
    cdef int i, j, p, v, total_len
    cdef uint64_t filled, full, bit
    if n > MAXN:
        raise ValueError(f"kernels support at most {MAXN} letters, got {n}")
    for i in range(n):
        needs[i] = need[i]
    total_len = 0
    for pat in patterns:
        total_len += len(pat)
    cdef int* pats = <int*>malloc((total_len + 1) * sizeof(int))
    cdef int* offs = <int*>malloc((npat + 1) * sizeof(int))
    cdef int* kinds = <int*>malloc((npat + 1) * sizeof(int))
    cdef object counts = [0] * (npat + 1)
    cdef long long* acc = <long long*>malloc((npat + 1) * sizeof(long long))
    if pats == NULL or offs == NULL or kinds == NULL or acc == NULL:
        free(pats); free(offs); free(kinds); free(acc)
        raise MemoryError()
    try:
        j = 0
        for i in range(npat):
            offs[i] = j
            for x in patterns[i]:
                pats[j] = x
                j += 1
        offs[npat] = j
        for i in range(npat):
            kinds[i] = _monotone(pats + offs[i], offs[i + 1] - offs[i])
        for i in range(npat + 1):
            acc[i] = 0
        if n == 0:
            acc[0] = 1
            for i in range(npat):
                if offs[i + 1] == offs[i]:
                    acc[i + 1] = 0
                else:
                    acc[i + 1] = 1
        else:
            full = (<uint64_t>1 << n) - 1 if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
            for i in range(n + 1):
                stack[i] = 0
            filled = 0
            v = 0
            with nogil:
                while v >= 0:
                    if filled == full:
                        acc[0] += 1
                        for i in range(npat):
                            if not _contains(word, n, pats + offs[i], offs[i + 1] - offs[i], kinds[i]):
                                acc[i + 1] += 1
                        v -= 1
                        filled &= ~(<uint64_t>1 << placed[v])
                        continue
                    p = stack[v]
                    while p < n:
                        bit = <uint64_t>1 << p
                        if (filled & bit) == 0 and (needs[p] & filled) == needs[p]:
                            break
                        p += 1
                    if p == n:
                        stack[v] = 0
                        v -= 1
                        if v >= 0:
                            filled &= ~(<uint64_t>1 << placed[v])
                        continue
                    stack[v] = p + 1
                    placed[v] = p
                    word[p] = v + 1
                    filled |= <uint64_t>1 << p
                    v += 1
        for i in range(npat + 1):
            counts[i] = acc[i]
    finally:
        free(pats)
        free(offs)
        free(kinds)
        free(acc)
    return counts


cdef long long _sig_rec(const char* sig, int n, int pos, uint64_t used,
                        int last, int low, int mid) noexcept nogil:
    cdef long long total = 0
    cdef int x
    cdef char c
    if pos == n:
        return 1
    c = sig[pos - 1]
    for x in range(1, n + 1):
        if (used >> x) & 1 or x > mid:
            continue
        if (c == b'<' and x < last) or (c == b'>' and x > last):
            continue
        if x > low:
            total += _sig_rec(sig, n, pos + 1, used | (<uint64_t>1 << x), x, low, x)
        else:
            total += _sig_rec(sig, n, pos + 1, used | (<uint64_t>1 << x), x, x, mid)
    return total


def count_signature_123(sig):
    """See ``_pykernels.count_signature_123``."""
    cdef bytes raw = sig.encode("ascii")
    cdef const char* s = raw
    cdef int n = len(raw) + 1
    cdef int x
    cdef long long total = 0
    if n > MAXN - 1:
        raise ValueError(f"kernels support at most {MAXN - 1} letters, got {n}")
    with nogil:
        for x in range(1, n + 1):
            total += _sig_rec(s, n, 1, <uint64_t>1 << x, x, x, n + 1)
    return total
