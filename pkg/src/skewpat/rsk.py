"""Schensted insertion, RSK, and the column-paired variants for the classes.

Straight tableaux are handled internally as lists of lists (rows top to
bottom) and converted to :class:`SkewTableau` at the API boundary.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Sequence

from .core import (
    ClassSpec,
    ContainmentError,
    LengthMismatchError,
    MembershipError,
    Partition,
    Permutation,
    SkewpatError,
    SkewShape,
    SkewTableau,
    as_permutation,
    inverse,
    is_member,
    lis_length,
)

Rows = list[list[int]]
Box = tuple[int, int]


@dataclass(frozen=True)
class InsertionResult:
    tableau: SkewTableau
    path: tuple[Box, ...]


def _insert(rows: Rows, x: int) -> list[Box]:
    """Row-insert ``x`` in place; returns the 1-based bump path."""
    path = []
    i = 0
    while True:
        if i == len(rows):
            rows.append([x])
            path.append((i + 1, 1))
            return path
        row = rows[i]
        j = bisect_left(row, x)
        path.append((i + 1, j + 1))
        if j == len(row):
            row.append(x)
            return path
        row[j], x = x, row[j]
        i += 1


def _uninsert(rows: Rows, i: int) -> int:
    """Reverse-bump from the last box of row ``i`` (1-based); returns the ejected value."""
    x = rows[i - 1].pop()
    if not rows[i - 1]:
        rows.pop()
    for r in range(i - 2, -1, -1):
        row = rows[r]
        j = bisect_left(row, x) - 1
        row[j], x = x, row[j]
    return x


def _rows(t: SkewTableau) -> Rows:
    if t.shape.inner:
        raise SkewpatError(f"expected a straight tableau, got shape {t.shape}")
    return [list(r) for r in t.rows]


def _tableau(rows: Rows) -> SkewTableau:
    return SkewTableau.straight(rows)


def _shape(rows: Rows) -> Partition:
    return Partition(len(r) for r in rows)


def schensted_insert(p: SkewTableau | Sequence[Sequence[int]], x: int) -> InsertionResult:
    """``P <- x``.  ``P`` may hold any distinct values, given as a tableau or as rows."""
    rows = [list(r) for r in (p.rows if isinstance(p, SkewTableau) else p) if len(r)]
    if any(x in r for r in rows):
        raise SkewpatError(f"{x} is already in the tableau")
    path = _insert(rows, x)
    return InsertionResult(_LooseTableau(rows), tuple(path))


class _LooseTableau(SkewTableau):
    """Straight tableau with arbitrary distinct entries, as produced mid-insertion."""

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        object.__setattr__(self, "shape", SkewShape(Partition(len(r) for r in rows)))
        object.__setattr__(self, "rows", rows)


def insert_word(word: Sequence[int]) -> tuple[Rows, Rows, list[list[Box]]]:
    """Insert ``word`` left to right; returns ``(P, Q, paths)`` as raw rows."""
    p: Rows = []
    q: Rows = []
    paths = []
    for t, x in enumerate(word, 1):
        path = _insert(p, x)
        i, j = path[-1]
        if i > len(q):
            q.append([])
        q[i - 1].append(t)
        paths.append(path)
    return p, q, paths


def rsk(w: Sequence[int]) -> tuple[SkewTableau, SkewTableau]:
    """Insertion and recording tableaux of ``w``."""
    w = as_permutation(w)
    p, q, _ = insert_word(w)
    return _tableau(p), _tableau(q)


def _raw_inverse(p: Rows, q: Rows) -> list[int]:
    if _shape(p) != _shape(q):
        raise SkewpatError(f"shapes differ: {_shape(p)} vs {_shape(q)}")
    p = [r[:] for r in p]
    where = {x: i + 1 for i, r in enumerate(q) for x in r}
    n = sum(map(len, q))
    word = [0] * n
    for t in range(n, 0, -1):
        word[t - 1] = _uninsert(p, where[t])
    return word


def rsk_inverse(p: SkewTableau, q: SkewTableau) -> Permutation:
    if p.shape != q.shape:
        raise SkewpatError(f"shapes differ: {p.shape} vs {q.shape}")
    return tuple(_raw_inverse(_rows(p), _rows(q)))


def paths_dominate(first: Sequence[Box], second: Sequence[Box]) -> bool:
    """Row-bumping property for ``x < y`` inserted in that order.

    The path of ``x`` lies strictly left of the path of ``y`` in every row
    they share, and the path of ``y`` does not reach below it.
    """
    if len(second) > len(first):
        return False
    return all(a[1] < b[1] for a, b in zip(first, second))


# -- column-paired recording tableaux -------------------------------------


@dataclass(frozen=True)
class TableauPair:
    """Insertion tableau ``P`` and column-paired recording tableau ``R``.

    For ``r = 0``, ``R`` is straight with ``n`` boxes and the rotated shape
    of ``R`` completes ``sh(P)`` to ``<(k+1)^n>``.  For ``r > 0``, ``R`` has
    shape ``mu / <k+1-r, 1>`` with ``n - 1`` boxes and completes ``sh(P)``
    to ``<(k+1)^(n-1), k, r>`` (column sums ``n + 1``).
    """

    P: SkewTableau
    R: SkewTableau
    k: int

    def column_total(self) -> int | None:
        """The common value of ``sh(P)'_i + sh(R)'_{k+2-i}``, or None."""
        pc = self.P.shape.outer.conjugate()
        rc = self.R.shape.outer.conjugate()
        sums = {pc.part(i) + rc.part(self.k + 2 - i) for i in range(1, self.k + 2)}
        return sums.pop() if len(sums) == 1 else None

    def check(self, c: ClassSpec) -> None:
        want_inner = Partition([c.k + 1 - c.r, 1]) if c.r else Partition()
        if self.R.shape.inner != want_inner:
            raise SkewpatError(f"R must have inner shape {want_inner}, has {self.R.shape.inner}")
        want = c.n + 1 if c.r else c.n
        if self.P.shape.outer.part(1) > c.k + 1 or self.R.shape.outer.part(1) > c.k + 1:
            raise SkewpatError(f"tableaux wider than k+1={c.k + 1}")
        if self.column_total() != want:
            raise SkewpatError(
                f"sh(P)={self.P.shape.outer} and sh(R)={self.R.shape} do not "
                f"complete each other (column sums must all be {want})"
            )

    def to_json(self) -> dict:
        return {"P": self.P.to_json(), "R": self.R.to_json()}

    @classmethod
    def from_json(cls, data, k: int) -> "TableauPair":
        return cls(SkewTableau.from_json(data["P"]), SkewTableau.from_json(data["R"]), k)


def _missing_column(before: Partition, after: Partition, k: int) -> int:
    """The column in ``[k+1]`` that the ``k``-box strip ``after/before`` skips."""
    cols_before = before.conjugate()
    cols_after = after.conjugate()
    added = [c for c in range(1, len(cols_after) + 1) if cols_after.part(c) > cols_before.part(c)]
    if len(added) != k or added[-1] > k + 1:
        raise ContainmentError(
            f"insertion strip occupies columns {added}; the word contains 1..{k + 2}"
        )
    return next(c for c in range(1, k + 2) if c not in added)


def _add_at_column_bottom(rows: Rows, inner: Sequence[int], col: int, label: int) -> None:
    """Put ``label`` in the lowest free box of column ``col`` (1-based), inner boxes counted."""

    def end(d):
        return (len(rows[d]) if d < len(rows) else 0) + (inner[d] if d < len(inner) else 0)

    depth = 0
    while end(depth) >= col:
        depth += 1
    if end(depth) != col - 1:
        raise SkewpatError(f"cannot add a box to column {col}: result is not a shape")
    while len(rows) <= depth:
        rows.append([])
    rows[depth].append(label)


def _skew(rows: Rows, inner: Sequence[int]) -> SkewTableau:
    inner = Partition(inner)
    rows = [r[:] for r in rows]
    while len(rows) < len(inner):
        rows.append([])
    outer = Partition(len(r) + inner.part(i + 1) for i, r in enumerate(rows))
    return SkewTableau(SkewShape(outer, inner), tuple(map(tuple, rows)))


def _check_member(w: Sequence[int], c: ClassSpec) -> Permutation:
    w = as_permutation(w)
    if len(w) != c.length:
        raise LengthMismatchError(f"word of length {len(w)} cannot lie in class {c} (length {c.length})")
    if not is_member(w, c):
        raise MembershipError(f"{w} is not in class {c}")
    return w


def modified_rsk(w: Sequence[int], c: ClassSpec, trace: list | None = None) -> TableauPair:
    """Insert ``w`` block by block and record each block as one box of ``R``.

    Block ``i`` adds a ``k``-box horizontal strip to ``P`` missing exactly
    one column ``j`` of ``[k+1]``; ``R`` gets the label ``i`` at the bottom
    of column ``k + 2 - j``.  ``trace``, if given, receives one dict per block.
    """
    if c.r:
        return modified_rsk_odd(w, c, trace)
    w = _check_member(w, c)
    k = c.k
    p: Rows = []
    r_rows: Rows = []
    for i in range(1, c.n + 1):
        before = _shape(p)
        for x in w[(i - 1) * k : i * k]:
            _insert(p, x)
        after = _shape(p)
        j = _missing_column(before, after, k)
        _add_at_column_bottom(r_rows, (), k + 2 - j, i)
        if trace is not None:
            trace.append({"step": i, "shape": list(after), "missing": j, "R_column": k + 2 - j})
    pair = TableauPair(_tableau(p), _tableau(r_rows), k)
    pair.check(c)
    return pair


def _decode_strip(p: Rows, col_r: int, k: int) -> list[int]:
    """Undo one block: reverse-bump the strip missing column ``k + 2 - col_r``."""
    skip = k + 2 - col_r
    cols = Partition(len(r) for r in p).conjugate()
    block = []
    for col in range(k + 1, 0, -1):
        if col == skip:
            continue
        depth = cols.part(col)
        if depth == 0 or len(p[depth - 1]) != col:
            raise SkewpatError(f"column {col} has no removable box; pair is inconsistent")
        block.append(_uninsert(p, depth))
        cols = Partition(len(r) for r in p).conjugate()
    block.reverse()
    return block


def modified_rsk_inverse(pair: TableauPair, c: ClassSpec) -> Permutation:
    """Decode ``R`` into the full recording tableau and run RSK backwards."""
    if c.r:
        return modified_rsk_odd_inverse(pair, c)
    pair.check(c)
    k = c.k
    q: Rows = []
    for i in range(1, c.n + 1):
        col_r = pair.R.position(i)[1]
        skip = k + 2 - col_r
        values = iter(range(k * i - k + 1, k * i + 1))
        for col in range(1, k + 2):
            if col != skip:
                _add_at_column_bottom(q, (), col, next(values))
    w = tuple(_raw_inverse(_rows(pair.P), q))
    if not is_member(w, c):
        raise SkewpatError(f"pair decodes to {w}, which is not in class {c}")
    return w


def modified_rsk_odd(w: Sequence[int], c: ClassSpec, trace: list | None = None) -> TableauPair:
    """The ``r > 0`` variant: ``R`` grows from the empty skew shape ``<k+1-r,1>/<k+1-r,1>``."""
    if not c.r:
        return modified_rsk(w, c, trace)
    w = _check_member(w, c)
    k, r = c.k, c.r
    p: Rows = []
    for x in w[: r + k]:
        _insert(p, x)
    if _shape(p) != Partition([k, r]):
        raise SkewpatError(f"first {r + k} letters insert to shape {_shape(p)}, expected {[k, r]}")
    inner = [k + 1 - r, 1]
    r_rows: Rows = []
    if trace is not None:
        trace.append({"step": 0, "shape": [k, r]})
    for i in range(1, c.n):
        before = _shape(p)
        start = r + i * k
        for x in w[start : start + k]:
            _insert(p, x)
        after = _shape(p)
        j = _missing_column(before, after, k)
        _add_at_column_bottom(r_rows, inner, k + 2 - j, i)
        if trace is not None:
            trace.append({"step": i, "shape": list(after), "missing": j, "R_column": k + 2 - j})
    pair = TableauPair(_tableau(p), _skew(r_rows, inner), k)
    pair.check(c)
    return pair


def modified_rsk_odd_inverse(pair: TableauPair, c: ClassSpec) -> Permutation:
    pair.check(c)
    k, r = c.k, c.r
    p = _rows(pair.P)
    blocks = []
    for i in range(c.n - 1, 0, -1):
        blocks.append(_decode_strip(p, pair.R.position(i)[1], k))
    if _shape(p) != Partition([k, r]):
        raise SkewpatError(f"remnant has shape {_shape(p)}, expected {[k, r]}")
    word = list(p[1]) + list(p[0])
    for b in reversed(blocks):
        word.extend(b)
    w = tuple(word)
    if not is_member(w, c):
        raise SkewpatError(f"pair decodes to {w}, which is not in class {c}")
    return w


# -- doubly-avoiding bijection --------------------------------------------


def _check_doubly(w: Sequence[int], c: ClassSpec) -> Permutation:
    if c.r:
        raise SkewpatError("the doubly-avoiding map is defined for r = 0 only")
    w = as_permutation(w)
    if len(w) != c.length:
        raise LengthMismatchError(f"word of length {len(w)} cannot lie in class {c}")
    if not is_member(w, c) or not is_member(inverse(w), c):
        raise MembershipError(f"{w} and its inverse must both lie in class {c}")
    return w


def doubly_map(w: Sequence[int], c: ClassSpec) -> Permutation:
    """Send ``w`` (with ``w`` and ``w^-1`` in the class) to a permutation of ``[n]``.

    ``R`` comes from ``w`` and ``S`` from ``w^-1``; the result is
    ``rsk_inverse(S, R)``, which is the identity when ``k = 1``.
    """
    w = _check_doubly(w, c)
    r_tab = modified_rsk(w, c).R
    s_tab = modified_rsk(inverse(w), c).R
    if r_tab.shape != s_tab.shape:
        raise SkewpatError("recording shapes of w and w^-1 differ")
    return rsk_inverse(s_tab, r_tab)


def doubly_map_inverse(v: Sequence[int], c: ClassSpec) -> Permutation:
    if c.r:
        raise SkewpatError("the doubly-avoiding map is defined for r = 0 only")
    v = as_permutation(v)
    if len(v) != c.n:
        raise LengthMismatchError(f"expected a permutation of length n={c.n}, got {len(v)}")
    if lis_length(v) > c.k + 1:
        raise ContainmentError(f"{v} contains 1..{c.k + 2}")
    s_tab, r_tab = rsk(v)
    q = _decode_recording(r_tab, c)
    p = _decode_recording(s_tab, c)
    w = tuple(_raw_inverse(p, q))
    return _check_doubly(w, c)


def _decode_recording(r_tab: SkewTableau, c: ClassSpec) -> Rows:
    """Shape of ``P`` and recording tableau ``Q`` forced by ``R``."""
    k = c.k
    q: Rows = []
    for i in range(1, c.n + 1):
        skip = k + 2 - r_tab.position(i)[1]
        values = iter(range(k * i - k + 1, k * i + 1))
        for col in range(1, k + 2):
            if col != skip:
                _add_at_column_bottom(q, (), col, next(values))
    return q
