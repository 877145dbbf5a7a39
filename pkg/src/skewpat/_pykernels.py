"""Pure-Python versions of the hot loops.

Every function here has a twin in ``_kernels.pyx`` with the same signature
and the same results; ``skewpat.kernels`` picks one at import time.
"""

from bisect import bisect_left

NAME = "python"


def lis_length(w):
    """Length of the longest increasing subsequence (patience sorting)."""
    tops = []
    for x in w:
        i = bisect_left(tops, x)
        if i == len(tops):
            tops.append(x)
        else:
            tops[i] = x
    return len(tops)


def lds_length(w):
    """Length of the longest decreasing subsequence."""
    return lis_length([-x for x in w])


def _monotone(p):
    m = len(p)
    if all(p[i] == i + 1 for i in range(m)):
        return 1
    if all(p[i] == m - i for i in range(m)):
        return -1
    return 0


def contains_pattern(w, p):
    m = len(p)
    n = len(w)
    if m == 0:
        return True
    if m > n:
        return False
    kind = _monotone(p)
    if kind == 1:
        return lis_length(w) >= m
    if kind == -1:
        return lds_length(w) >= m
    chosen = [0] * m

    def match(t, start):
        if t == m:
            return True
        pt = p[t]
        for i in range(start, n - (m - t) + 1):
            x = w[i]
            for s in range(t):
                if (x > chosen[s]) != (pt > p[s]):
                    break
            else:
                chosen[t] = x
                if match(t + 1, i + 1):
                    return True
        return False

    return match(0, 0)


def count_extensions(need, patterns):
    """Enumerate every word compatible with the order constraints ``need``.

    ``need[p]`` is a bitmask of the positions whose value must be smaller
    than the value at position ``p``.  Returns ``[total, a_1, ..., a_m]``
    where ``a_i`` counts the words avoiding ``patterns[i]``.
    """
    n = len(need)
    counts = [0] * (len(patterns) + 1)
    word = [0] * n
    full = (1 << n) - 1
    # stack[v] is the next position to try for value v + 1
    stack = [0] * (n + 1)
    filled = 0
    placed = [0] * n
    v = 0
    if n == 0:
        counts[0] = 1
        for i, p in enumerate(patterns):
            counts[i + 1] = 1 if p else 0
        return counts
    while v >= 0:
        if filled == full:
            counts[0] += 1
            for i, p in enumerate(patterns):
                if not contains_pattern(word, p):
                    counts[i + 1] += 1
            v -= 1
            filled &= ~(1 << placed[v])
            continue
        p = stack[v]
        while p < n:
            bit = 1 << p
            if not filled & bit and need[p] & filled == need[p]:
                break
            p += 1
        if p == n:
            stack[v] = 0
            v -= 1
            if v >= 0:
                filled &= ~(1 << placed[v])
            continue
        stack[v] = p + 1
        placed[v] = p
        word[p] = v + 1
        filled |= 1 << p
        v += 1
    return counts


def count_signature_123(sig):
    """Count 123-avoiding permutations whose adjacent pairs obey ``sig``.

    ``sig`` has one character per adjacent pair: ``'<'`` ascent, ``'>'``
    descent, anything else unconstrained.
    """
    n = len(sig) + 1
    big = n + 1

    def rec(pos, used, last, low, mid):
        # low: smallest value so far; mid: smallest value that already has
        # a smaller value before it (a 123 appears on exceeding it)
        if pos == n:
            return 1
        c = sig[pos - 1]
        total = 0
        for x in range(1, n + 1):
            if used >> x & 1 or x > mid:
                continue
            if c == "<" and x < last or c == ">" and x > last:
                continue
            if x > low:
                total += rec(pos + 1, used | 1 << x, x, low, x)
            else:
                total += rec(pos + 1, used | 1 << x, x, x, mid)
        return total

    if n == 1 and not sig:
        return 1
    total = 0
    for x in range(1, n + 1):
        total += rec(1, 1 << x, x, x, big)
    return total
