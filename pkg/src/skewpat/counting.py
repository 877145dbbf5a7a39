"""Exact counts: hook lengths, Catalan numbers and the shape-indexed formulas.

Everything here is integer arithmetic; nothing enumerates tableaux except
``count_123``/``count_321``, which enumerate permutations with a fixed
ascent/descent signature.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial, prod
from typing import Sequence

from . import kernels
from .core import (
    ClassSpec,
    NotBasicError,
    Partition,
    SkewpatError,
    SkewShape,
    class_shape,
)


def hook_count(lam: Sequence[int]) -> int:
    """``f^λ`` for a straight shape by the hook-length formula."""
    lam = Partition(lam)
    conj = lam.conjugate()
    hooks = prod(
        (lam[i] - j) + (conj[j] - i) - 1
        for i in range(len(lam))
        for j in range(lam[i])
    )
    return factorial(lam.size) // hooks


def rectangle_count(n: int, k: int) -> int:
    """``f^<k^n>`` = (kn)! 1! 2! ... (k-1)! / (n! (n+1)! ... (n+k-1)!)."""
    num = factorial(k * n) * prod(factorial(i) for i in range(1, k))
    den = prod(factorial(n + i) for i in range(k))
    return num // den


@lru_cache(maxsize=None)
def _skew_count(outer: tuple, inner: tuple) -> int:
    if outer == inner:
        return 1
    total = 0
    lam = list(outer)
    mu_len = len(inner)
    for i in range(len(lam)):
        below = lam[i + 1] if i + 1 < len(lam) else 0
        if lam[i] > below and lam[i] > (inner[i] if i < mu_len else 0):
            smaller = lam[:]
            smaller[i] -= 1
            while smaller and smaller[-1] == 0:
                smaller.pop()
            total += _skew_count(tuple(smaller), inner)
    return total


def skew_count(shape: SkewShape) -> int:
    """``f^{λ/μ}``: sum over the corners that can hold the largest entry."""
    return _skew_count(tuple(shape.outer), tuple(shape.inner))


def catalan(n: int) -> int:
    if n < 0:
        raise SkewpatError("catalan(n) needs n >= 0")
    return comb(2 * n, n) // (n + 1)


def count_A2n_1234(n: int) -> int:
    """Up-down permutations of length ``2n`` avoiding 1234: 2(3n)!/(n!(n+1)!(n+2)!)."""
    if n < 0:
        raise SkewpatError("need n >= 0")
    return 2 * factorial(3 * n) // (factorial(n) * factorial(n + 1) * factorial(n + 2))


def count_A2n1_1234(n: int) -> int:
    """Alternating permutations of length ``2n + 1`` avoiding 1234."""
    if n < 1:
        raise SkewpatError("need n >= 1")
    return 16 * factorial(3 * n) // (factorial(n - 1) * factorial(n + 1) * factorial(n + 3))


def count_subpartitions(mu: Sequence[int]) -> int:
    """Number of partitions whose diagram fits inside ``mu``."""
    mu = tuple(Partition(mu))

    @lru_cache(maxsize=None)
    def rec(i, cap):
        if i == len(mu):
            return 1
        # choosing 0 ends the partition
        return 1 + sum(rec(i + 1, x) for x in range(1, min(cap, mu[i]) + 1))

    return rec(0, mu[0]) if mu else 1


def _require_basic(shape: SkewShape) -> None:
    if not shape.is_basic():
        raise NotBasicError(shape)


def complement_inner(shape: SkewShape) -> Partition:
    """``<λ_1 - λ_k, λ_1 - λ_{k-1}, ..., λ_1 - λ_2>`` for ``λ`` with ``k`` rows."""
    lam = shape.outer
    if not lam:
        return Partition()
    k = len(lam)
    return Partition(lam[0] - lam[i] for i in range(k - 1, 0, -1))


def count_213(shape: SkewShape) -> int:
    _require_basic(shape)
    return count_subpartitions(shape.inner)


def count_132(shape: SkewShape) -> int:
    _require_basic(shape)
    return count_subpartitions(complement_inner(shape))


def count_312(shape: SkewShape) -> int:
    _require_basic(shape)
    if shape.has_square():
        return 0
    return count_subpartitions(shape.inner)


def count_231(shape: SkewShape) -> int:
    _require_basic(shape)
    if shape.has_square():
        return 0
    return count_subpartitions(complement_inner(shape))


# -- 123 and 321 ----------------------------------------------------------


def _overlap(shape: SkewShape, i: int) -> int:
    """Number of columns shared by rows ``i`` and ``i + 1``."""
    lo = max(shape.inner.part(i), shape.inner.part(i + 1))
    hi = min(shape.outer.part(i), shape.outer.part(i + 1))
    return max(0, hi - lo)


def row_slide(shape: SkewShape, i: int, through: bool = True, step: int = 1) -> SkewShape:
    """Shift rows ``1..i`` (or ``1..i-1`` when ``through`` is false) by ``step`` columns.

    Requires every row to have length at most two and row ``i`` to have
    length exactly two.  A negative ``step`` slides back to the left.
    """
    lengths = shape.row_lengths()
    if any(x > 2 for x in lengths):
        raise SkewpatError(f"slide moves need rows of length <= 2; {shape} has {max(lengths)}")
    if not 1 <= i <= shape.num_rows or lengths[i - 1] != 2:
        raise SkewpatError(f"row {i} of {shape} does not have length 2")
    top = i if through else i - 1
    outer = [x + step if r < top else x for r, x in enumerate(shape.outer)]
    inner = [shape.inner.part(r + 1) + (step if r < top else 0) for r in range(shape.num_rows)]
    try:
        return SkewShape(Partition(outer), Partition(inner))
    except SkewpatError as exc:
        raise SkewpatError(f"slide of {shape} at row {i} leaves the partitions: {exc}") from None


def column_slide(shape: SkewShape, j: int, through: bool = True, step: int = 1) -> SkewShape:
    """Shift columns ``1..j`` (or ``1..j-1``) down by ``step`` rows."""
    return row_slide(shape.conjugate(), j, through, step).conjugate()


def reduce_for_123(shape: SkewShape) -> SkewShape:
    """Slide rows of length two apart until no 2x2 square remains."""
    _require_basic(shape)
    if any(x > 2 for x in shape.row_lengths()):
        raise SkewpatError("shape has a row of length >= 3")
    while True:
        for i in range(1, shape.num_rows):
            if _overlap(shape, i) == 2:
                shape = row_slide(shape, i)
                break
        else:
            return shape


def reduce_for_321(shape: SkewShape) -> SkewShape:
    """Column analogue of :func:`reduce_for_123` (shift columns down)."""
    return reduce_for_123(shape.conjugate()).conjugate()


def ribbon_signature(shape: SkewShape) -> str:
    """Ascent/descent constraints between consecutive reading-word letters.

    ``'<'`` inside a row, ``'>'`` where a row sits on the one above it in a
    shared column, ``'*'`` where consecutive rows only touch at a corner.
    The shape must be basic and contain no 2x2 square.
    """
    _require_basic(shape)
    if shape.has_square():
        raise SkewpatError(f"{shape} contains a 2x2 square")
    sig = []
    for i in range(shape.num_rows, 0, -1):
        length = shape.outer.part(i) - shape.inner.part(i)
        if sig or i < shape.num_rows:
            sig.append(">" if _overlap(shape, i) else "*")
        sig.extend("<" * (length - 1))
    return "".join(sig)


def count_signature_avoiders(sig: str, decreasing: bool = False) -> int:
    """Permutations matching ``sig`` that avoid 123 (or 321 if ``decreasing``)."""
    if decreasing:
        sig = sig.translate(str.maketrans("<>", "><"))
    return kernels.count_signature_123(sig)


def count_123(shape: SkewShape) -> int:
    _require_basic(shape)
    if shape.size == 0:
        return 1
    if any(x > 2 for x in shape.row_lengths()):
        return 0
    return count_signature_avoiders(ribbon_signature(reduce_for_123(shape)))


def count_321(shape: SkewShape) -> int:
    """Experimental: the column-shift reduction is only checked against the oracle."""
    _require_basic(shape)
    if shape.size == 0:
        return 1
    if any(x > 2 for x in shape.column_lengths()):
        return 0
    return count_signature_avoiders(ribbon_signature(reduce_for_321(shape)), decreasing=True)


SHAPE_FORMULAS = {
    (2, 1, 3): count_213,
    (1, 3, 2): count_132,
    (3, 1, 2): count_312,
    (2, 3, 1): count_231,
    (1, 2, 3): count_123,
    (3, 2, 1): count_321,
}

EXPERIMENTAL = {(3, 2, 1)}


def shape_formula(shape: SkewShape, pattern: Sequence[int]) -> int:
    """Formula count for a length-3 pattern on any shape (normalizing first)."""
    pattern = tuple(pattern)
    if pattern not in SHAPE_FORMULAS:
        raise SkewpatError(f"no shape formula for pattern {pattern}")
    return SHAPE_FORMULAS[pattern](normalize(shape))


def normalize(shape: SkewShape) -> SkewShape:
    from .core import normalize_shape

    return shape if shape.is_basic() else normalize_shape(shape)


def monotone_shape(c: ClassSpec, length: int) -> Partition:
    n, k, r = c.n, c.k, c.r
    if length == k + 1:
        return Partition([k] * n + [r])
    if length == k + 2:
        if r == 0:
            return Partition([k + 1] * n)
        return Partition([k + 1] * (n - 1) + [k, r])
    raise SkewpatError(f"monotone counts only for lengths k+1={k + 1} and k+2={k + 2}, got {length}")


def count_class_monotone(c: ClassSpec, length: int) -> int:
    """Class members avoiding ``12...length`` for ``length`` in {k+1, k+2}."""
    return hook_count(monotone_shape(c, length))


def class_formula(c: ClassSpec, pattern: Sequence[int]) -> int:
    """Formula count for the class, when one is known for ``pattern``."""
    pattern = tuple(pattern)
    m = len(pattern)
    if pattern == tuple(range(1, m + 1)) and m in (c.k + 1, c.k + 2):
        return count_class_monotone(c, m)
    if pattern == tuple(range(1, m + 1)) and m <= c.k:
        return 0
    if pattern in SHAPE_FORMULAS:
        return SHAPE_FORMULAS[pattern](class_shape(c))
    raise SkewpatError(f"no formula for class {c} and pattern {pattern}")
