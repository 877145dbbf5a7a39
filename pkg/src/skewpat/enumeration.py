"""Exhaustive generators and brute-force counts.

These are the ground truth every formula and bijection is checked
against, so they deliberately know nothing about the formulas.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Iterator, Sequence

from . import kernels
from .core import (
    ClassSpec,
    Partition,
    Permutation,
    SkewpatError,
    SkewShape,
    SkewTableau,
    class_shape,
    format_permutation,
    is_involution,
)

DEFAULT_MAX_BOXES = 16
ENV_MAX_BOXES = "SKEWPAT_MAX_BOXES"


class EnumerationLimitError(SkewpatError):
    pass


def max_boxes() -> int:
    value = os.environ.get(ENV_MAX_BOXES)
    if value:
        try:
            return int(value)
        except ValueError:
            raise SkewpatError(f"{ENV_MAX_BOXES}={value!r} is not an integer") from None
    return DEFAULT_MAX_BOXES


def _check_bound(size: int, limit: int | None) -> None:
    limit = max_boxes() if limit is None else limit
    if size > limit:
        raise EnumerationLimitError(
            f"refusing to enumerate {size} boxes: limit is {limit} "
            f"(raise it with --max-boxes or {ENV_MAX_BOXES})"
        )


@dataclass(frozen=True)
class CountReport:
    subject: str
    pattern: Permutation
    count: int
    method: str  # "oracle", "formula" or "bijection"
    notes: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        data = {
            "input": self.subject,
            "pattern": format_permutation(self.pattern),
            "method": self.method,
            "count": self.count,
        }
        if self.notes:
            data["notes"] = list(self.notes)
        return data


# -- words of a shape -----------------------------------------------------


def order_masks(shape: SkewShape) -> list[int]:
    """For each reading-word position, the positions that must hold smaller values.

    Only the left neighbour and the box above are recorded; the rest of the
    order follows by transitivity.
    """
    order = shape.reading_order()
    where = {box: p for p, box in enumerate(order)}
    masks = []
    for i, j in order:
        m = 0
        for nb in ((i, j - 1), (i - 1, j)):
            if nb in where:
                m |= 1 << where[nb]
        masks.append(m)
    return masks


def _linear_extensions(masks: Sequence[int]) -> Iterator[list[int]]:
    # iterative DFS: value v+1 goes to the first free position whose
    # predecessors are all filled, trying positions in index order
    n = len(masks)
    if n == 0:
        yield []
        return
    word = [0] * n
    full = (1 << n) - 1
    nxt = [0] * n
    placed = [0] * n
    filled = 0
    v = 0
    while v >= 0:
        if filled == full:
            yield word
            v -= 1
            filled &= ~(1 << placed[v])
            continue
        p = nxt[v]
        while p < n and (filled >> p & 1 or masks[p] & filled != masks[p]):
            p += 1
        if p == n:
            nxt[v] = 0
            v -= 1
            if v >= 0:
                filled &= ~(1 << placed[v])
            continue
        nxt[v] = p + 1
        placed[v] = p
        word[p] = v + 1
        filled |= 1 << p
        v += 1


def reading_words(shape: SkewShape, limit: int | None = None) -> Iterator[Permutation]:
    """Reading words of all standard tableaux of ``shape``."""
    _check_bound(shape.size, limit)
    for word in _linear_extensions(order_masks(shape)):
        yield tuple(word)


def tableau_from_word(shape: SkewShape, word: Sequence[int]) -> SkewTableau:
    values = dict(zip(shape.reading_order(), word))
    return SkewTableau.from_boxes(shape, values)


def all_syt(shape: SkewShape, limit: int | None = None) -> Iterator[SkewTableau]:
    """Every standard tableau of ``shape`` exactly once, in a fixed order.

    Values ``1, 2, ...`` are placed one at a time, each into the first
    available box in reading order, so the order is the same on every run.
    """
    order = shape.reading_order()
    for word in reading_words(shape, limit):
        yield SkewTableau.from_boxes(shape, dict(zip(order, word)))


def all_class(c: ClassSpec, limit: int | None = None) -> Iterator[Permutation]:
    return reading_words(class_shape(c), limit)


def filter_class(c: ClassSpec) -> Iterator[Permutation]:
    """The class by brute force: filter all of ``S_{nk+r}`` with the row and column tests of :func:`is_member`."""
    from .core import is_member

    for w in permutations(range(1, c.length + 1)):
        if is_member(w, c):
            yield w


def all_permutations(n: int) -> Iterator[Permutation]:
    return permutations(range(1, n + 1))


# -- partitions -----------------------------------------------------------


def subpartitions(mu: Sequence[int]) -> Iterator[Partition]:
    """Every partition whose diagram fits inside ``mu``, including both ends."""
    mu = list(Partition(mu))

    def rec(i, cap, prefix):
        if i == len(mu):
            yield Partition(prefix)
            return
        for x in range(min(cap, mu[i]) + 1):
            if x == 0:
                yield Partition(prefix)
            else:
                yield from rec(i + 1, x, prefix + [x])

    yield from rec(0, mu[0] if mu else 0, [])


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    max_part = n if max_part is None else max_part

    def rec(rest, cap, prefix):
        if rest == 0:
            yield Partition(prefix)
            return
        for x in range(min(rest, cap), 0, -1):
            yield from rec(rest - x, x, prefix + [x])

    yield from rec(n, max_part, [])


def skew_shapes(size: int, max_rows: int, max_cols: int) -> Iterator[SkewShape]:
    """All ``λ/μ`` with ``|λ/μ| = size`` inside a ``max_rows x max_cols`` box."""
    def outers(rows_left, cap, prefix):
        yield Partition(prefix)
        if rows_left == 0:
            return
        for x in range(1, cap + 1):
            yield from outers(rows_left - 1, x, prefix + [x])

    for lam in outers(max_rows, max_cols, []):
        if lam.size < size:
            continue
        for mu in subpartitions(lam):
            if lam.size - mu.size == size:
                yield SkewShape(lam, mu)


def basic_shapes(size: int) -> Iterator[SkewShape]:
    """Every basic skew shape with ``size`` boxes.

    A basic shape is determined by its row lengths (top to bottom) and the
    number of columns each row shares with the next one, which ranges from
    0 (touching at a corner) to the shorter of the two lengths.
    """
    if size == 0:
        yield SkewShape(Partition())
        return

    def compositions(rest):
        if rest == 0:
            yield []
            return
        for x in range(1, rest + 1):
            for tail in compositions(rest - x):
                yield [x] + tail

    def overlaps(lengths, t):
        if t == len(lengths) - 1:
            yield []
            return
        for o in range(min(lengths[t], lengths[t + 1]) + 1):
            for tail in overlaps(lengths, t + 1):
                yield [o] + tail

    for lengths in compositions(size):
        for ov in overlaps(lengths, 0):
            m = len(lengths)
            inner = [0] * m
            outer = [0] * m
            outer[-1] = lengths[-1]
            for t in range(m - 2, -1, -1):
                inner[t] = outer[t + 1] - ov[t]
                outer[t] = inner[t] + lengths[t]
            yield SkewShape(Partition(outer), Partition(inner))


# -- counting by brute force ---------------------------------------------


def count_avoiders_many(shape: SkewShape, patterns: Sequence[Sequence[int]],
                        limit: int | None = None) -> tuple[int, list[int]]:
    """``(f^shape, [number of tableaux avoiding p for p in patterns])``."""
    _check_bound(shape.size, limit)
    counts = kernels.count_extensions(order_masks(shape), [tuple(p) for p in patterns])
    return counts[0], counts[1:]


def count_avoiders(shape: SkewShape, p: Sequence[int], limit: int | None = None) -> int:
    """Number of standard tableaux of ``shape`` whose reading word avoids ``p``."""
    if len(p) < 1:
        raise SkewpatError("pattern must be nonempty")
    return count_avoiders_many(shape, [p], limit)[1][0]


def count_class_avoiders(c: ClassSpec, p: Sequence[int], limit: int | None = None) -> int:
    return count_avoiders(class_shape(c), p, limit)


def count_syt(shape: SkewShape, limit: int | None = None) -> int:
    """``f^shape`` by running through every tableau."""
    return count_avoiders_many(shape, [], limit)[0]


def involutions_in(stream: Iterable[Sequence[int]]) -> Iterator[Permutation]:
    for w in stream:
        if is_involution(w):
            yield tuple(w)
