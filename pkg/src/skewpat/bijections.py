"""Bijections that do not go through RSK.

* the rectangle map between ``L_{n,k;r}(12...(k+1))`` and tableaux of shape
  ``<k^n, r>``;
* good tableaux, linking ``L_{n,k;r}(12...(k+2))`` to standard tableaux of
  shape ``<(k+1)^n>`` (or ``<(k+1)^(n-1), k, r>``);
* the recursive 213 map from tableaux with 213-avoiding reading words to
  partitions inside the inner shape, and its 132/312/231 relatives;
* slide moves for rows of length two.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import (
    ClassSpec,
    ContainmentError,
    LengthMismatchError,
    MembershipError,
    NotBasicError,
    Partition,
    Permutation,
    SkewpatError,
    SkewShape,
    SkewTableau,
    as_permutation,
    contains_pattern,
    increasing,
    is_member,
    standardize,
)
from .counting import complement_inner, row_slide


def _member(w: Sequence[int], c: ClassSpec, avoid: int | None = None) -> Permutation:
    w = as_permutation(w)
    if len(w) != c.length:
        raise LengthMismatchError(f"word of length {len(w)} cannot lie in class {c} (length {c.length})")
    if not is_member(w, c):
        raise MembershipError(f"{w} is not in class {c}")
    if avoid is not None and contains_pattern(w, increasing(avoid)):
        raise ContainmentError(f"{w} contains 1..{avoid}")
    return w


# -- rectangles -----------------------------------------------------------


def rect_bijection(w: Sequence[int], c: ClassSpec) -> SkewTableau:
    """Stack the blocks of ``w`` upside down: row ``i`` is ``w_{n+1-i}``, row ``n+1`` is ``w_0``."""
    w = _member(w, c)
    rows = [[c.entry(w, c.n + 1 - i, j) for j in range(1, c.k + 1)] for i in range(1, c.n + 1)]
    if c.r:
        rows.append([c.entry(w, 0, j) for j in range(2, c.r + 2)])
    try:
        return SkewTableau.straight(rows)
    except SkewpatError:
        raise ContainmentError(f"{w} contains 1..{c.k + 1}") from None


def rect_bijection_inverse(t: SkewTableau, c: ClassSpec) -> Permutation:
    want = Partition([c.k] * c.n + [c.r])
    if t.shape != SkewShape(want):
        raise SkewpatError(f"expected shape {want}, got {t.shape}")
    return t.reading_word()


# -- good tableaux --------------------------------------------------------


@dataclass(frozen=True)
class GoodTableau:
    """Rows of positive integers; ``r > 0`` adds a length-``k`` row and a length-``r`` row."""

    rows: tuple[tuple[int, ...], ...]
    k: int
    r: int = 0

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(int(x) for x in row) for row in self.rows))

    @property
    def n(self) -> int:
        return len(self.rows) - 1 if self.r else len(self.rows)

    def shape(self) -> Partition:
        return Partition(len(row) for row in self.rows)

    def expected_shape(self) -> Partition:
        if self.r:
            return Partition([self.k + 1] * (self.n - 1) + [self.k, self.r])
        return Partition([self.k + 1] * self.n)

    def violations(self) -> list[str]:
        """Broken conditions; empty when the tableau is good."""
        if self.shape() != self.expected_shape() or self.n < 1:
            return [f"shape {list(self.shape())} should be {list(self.expected_shape())}"]
        if self.r:
            try:
                back = syt_to_good(good_to_syt(self))
            except SkewpatError as exc:
                return [str(exc)]
            return [] if back == self else ["not the rank tableau of any standard tableau"]
        out = []
        n, k = self.n, self.k
        for i, row in enumerate(self.rows, 1):
            cap = (n - i + 1) * k + 1
            if row[0] != 1 or any(a >= b for a, b in zip(row, row[1:])) or row[-1] > cap:
                out.append(f"row {i} must start at 1, increase and stay <= {cap}: {list(row)}")
        for i in range(1, n):
            for j in range(1, k + 2):
                if self.rows[i - 1][j - 1] > self.rows[i][j - 1] + j - 1:
                    out.append(f"entry ({i},{j}) exceeds the entry below it plus {j - 1}")
        return out

    def check(self) -> None:
        bad = self.violations()
        if bad:
            raise SkewpatError("not a good tableau: " + "; ".join(bad))

    def to_json(self) -> dict:
        return {"rows": [list(row) for row in self.rows], "k": self.k, "r": self.r}

    @classmethod
    def from_json(cls, data) -> "GoodTableau":
        return cls(tuple(map(tuple, data["rows"])), int(data["k"]), int(data.get("r", 0)))


def _lis_ending(w: Sequence[int]) -> list[int]:
    """Length of the longest increasing subsequence ending at each position."""
    ends = []
    for p, x in enumerate(w):
        ends.append(1 + max((ends[q] for q in range(p) if w[q] < x), default=0))
    return ends


def _good_row(w: Sequence[int], width: int) -> list[int]:
    ends = _lis_ending(w)
    default = len(w) + 1
    return [min((x for x, e in zip(w, ends) if e >= j), default=default) for j in range(1, width + 1)]


def good_of_perm(w: Sequence[int], c: ClassSpec) -> GoodTableau:
    """Row ``i`` holds, for each ``j``, the least value ending a ``j``-term increasing run.

    The word shrinks by its last block after each row.  For ``r > 0`` the
    last ``k + r`` letters give a row of length ``k`` (the block ``w_1``)
    and a row ``1..r``.
    """
    w = _member(w, c, avoid=c.k + 2)
    k, r = c.k, c.r
    rows = []
    cur = list(w)
    for _ in range(c.n - 1):
        rows.append(_good_row(cur, k + 1))
        cur = list(standardize(cur[:-k]))
    if r:
        rows.append(cur[r:])
        rows.append(list(range(1, r + 1)))
    else:
        rows.append(list(range(1, k + 2)))
    return GoodTableau(tuple(map(tuple, rows)), k, r)


def perm_of_good(g: GoodTableau, check_order: bool = True) -> Permutation:
    """Inverse of :func:`good_of_perm`.

    Each row sends all but one entry to the corresponding block of the word;
    the omitted column ``m`` is the largest with ``G[i][m] = G[i+1][m] + m - 1``.
    With ``check_order`` the ordering between consecutive blocks is asserted
    at every level.
    """
    g.check()
    k, r, n = g.k, g.r, g.n
    rows = [list(row) for row in g.rows]
    if r:
        tail = rows[n - 1]
        word = [x for x in range(1, k + r + 1) if x not in tail] + tail
        below = tail + [k + r + 1]
        sent_below = list(range(k))
    else:
        word = list(range(1, k + 1))
        below = rows[n - 1]
        sent_below = list(range(k))
    for i in range(n - 1, 0, -1):
        row = rows[i - 1]
        m = max(j for j in range(1, k + 2) if row[j - 1] == below[j - 1] + j - 1)
        block = row[: m - 1] + row[m:]
        rest = [x for x in range(1, len(word) + k + 1) if x not in block]
        prev = [rest[x - 1] for x in word]
        if check_order:
            _check_block_order(row, m, block, below, sent_below, prev[-k:])
        word = prev + block
        below = row
        sent_below = [j for j in range(k + 1) if j != m - 1]
    return tuple(word)


def _check_block_order(row, m, block, below, sent_below, below_values):
    # entries of the lower row sent to the word land above every entry of
    # this row that sits weakly to their left
    value_of = dict(zip([j for j in range(len(row)) if j != m - 1], block))
    lower = dict(zip(sent_below, below_values))
    for a, va in value_of.items():
        for b, vb in lower.items():
            if b >= a and vb <= va:
                raise SkewpatError(
                    f"ordering between consecutive blocks fails for columns {a + 1},{b + 1}"
                )


def syt_to_good(t: SkewTableau | Sequence[Sequence[int]], k: int | None = None, r: int = 0) -> GoodTableau:
    """Replace each entry by its rank among the entries in its row and the rows below."""
    rows = [list(x) for x in (t.rows if isinstance(t, SkewTableau) else t)]
    if isinstance(t, SkewTableau):
        if t.shape.inner:
            raise SkewpatError("expected a straight tableau")
    else:
        SkewTableau.straight(rows)
    if k is None:
        # <(k+1)^n> or <(k+1)^(n-1), k, r>: a short last row means r > 0
        if len(rows) >= 2 and len(rows[-1]) < len(rows[0]):
            k, r = len(rows[-2]), len(rows[-1])
        else:
            k = len(rows[0]) - 1 if rows else 0
    out = []
    for i, row in enumerate(rows):
        universe = sorted(x for lower in rows[i:] for x in lower)
        rank = {x: p + 1 for p, x in enumerate(universe)}
        out.append(tuple(rank[x] for x in row))
    return GoodTableau(tuple(out), k, r)


def good_to_syt(g: GoodTableau) -> SkewTableau:
    """Row ``i`` takes the ``G[i][j]``-th smallest value not used in rows above."""
    total = sum(map(len, g.rows))
    universe = list(range(1, total + 1))
    rows = []
    for i, row in enumerate(g.rows, 1):
        if any(x < 1 or x > len(universe) for x in row):
            raise SkewpatError(f"row {i} asks for a rank beyond {len(universe)} available values")
        chosen = [universe[x - 1] for x in row]
        rows.append(chosen)
        taken = set(chosen)
        universe = [x for x in universe if x not in taken]
    return SkewTableau.straight(rows)


def k2_bijection(w: Sequence[int], c: ClassSpec) -> SkewTableau:
    """``L_{n,k;r}(12...(k+2))`` to standard tableaux of ``<(k+1)^n>`` or ``<(k+1)^(n-1), k, r>``."""
    return good_to_syt(good_of_perm(w, c))


def k2_bijection_inverse(t: SkewTableau, c: ClassSpec) -> Permutation:
    want = (
        Partition([c.k + 1] * (c.n - 1) + [c.k, c.r]) if c.r else Partition([c.k + 1] * c.n)
    )
    if t.shape != SkewShape(want):
        raise SkewpatError(f"expected shape {want}, got {t.shape}")
    return perm_of_good(syt_to_good(t, c.k, c.r))


# -- the 213 family -------------------------------------------------------


# Shapes inside the recursion are plain ``(outer, inner)`` lists with one
# entry per row; fillings are ``{(row, col): value}`` dicts.  Only relative
# order matters, so pieces are never restandardized.


def _pieces(outer, inner, i, j):
    """Rows ``1..i`` shifted left by ``j``, and the rows below ``i``."""
    right = ([x - j for x in outer[:i]], [max(0, x - j) for x in inner[:i]])
    below = (outer[i:], inner[i:])
    return right, below


def _map_raw(outer, inner, values, trace, depth):
    if not any(inner) or not values:
        return []
    (i, j) = min(values, key=values.__getitem__)
    right, below = _pieces(outer, inner, i, j)
    nu = _map_raw(*right, {(a, b - j): x for (a, b), x in values.items() if a <= i and (a, b) != (i, j)},
                  trace, depth + 1)
    iota = _map_raw(*below, {(a - i, b): x for (a, b), x in values.items() if a > i}, trace, depth + 1)
    tau = [(nu[r - 1] if r <= len(nu) else 0) + j for r in range(1, i)] + iota
    if trace is not None:
        trace.append({"depth": depth, "one_at": [i, j], "nu": nu, "iota": iota, "tau": tau})
    return tau


def _build_raw(outer, inner, tau, first, trace, depth):
    """Fill with ``first, first + 1, ...``; returns the filling and the next free value."""
    rows = len(outer)
    if not any(inner):
        values = {}
        for a in range(rows):
            for b in range(1, outer[a] + 1):
                values[a + 1, b] = first
                first += 1
        return values, first
    mu = lambda r: inner[r - 1] if r <= len(inner) else 0  # noqa: E731
    t = lambda r: tau[r - 1] if r <= len(tau) else 0  # noqa: E731
    i = next((c for c in range(rows, 1, -1) if t(c - 1) > mu(c)), 1)
    j = mu(i) + 1
    nu = [x for x in (t(r) - j for r in range(1, i)) if x > 0]
    iota = list(tau[i - 1:])
    if trace is not None:
        trace.append({"depth": depth, "tau": list(tau), "one_at": [i, j], "nu": nu, "iota": iota})
    right, below = _pieces(list(outer), [mu(r) for r in range(1, rows + 1)], i, j)
    values = {(i, j): first}
    part, nxt = _build_raw(*right, nu, first + 1, trace, depth + 1)
    for (a, b), x in part.items():
        values[a, b + j] = x
    part, nxt = _build_raw(*below, iota, nxt, trace, depth + 1)
    for (a, b), x in part.items():
        values[a + i, b] = x
    return values, nxt


def _require_basic(shape: SkewShape) -> None:
    if not shape.is_basic():
        raise NotBasicError(shape)


def map_213(t: SkewTableau, trace: list | None = None) -> Partition:
    """Partition inside the inner shape attached to a tableau with 213-avoiding reading word.

    With 1 at ``(i, j)``, the rows up to ``i`` (minus that box) and the rows
    below ``i`` are mapped recursively to ``nu`` and ``iota``; the result is
    ``<nu_1 + j, ..., nu_{i-1} + j, iota_1, iota_2, ...>``.
    """
    _require_basic(t.shape)
    if t.size >= 3 and contains_pattern(t.reading_word(), (2, 1, 3)):
        raise ContainmentError(f"reading word {t.reading_word()} contains 213")
    shape = t.shape
    inner = [shape.inner.part(r) for r in range(1, shape.num_rows + 1)]
    return Partition(_map_raw(list(shape.outer), inner, dict(t.items()), trace, 0))


def build_213(shape: SkewShape, tau: Sequence[int], trace: list | None = None) -> SkewTableau:
    """The tableau of ``shape`` whose reading word avoids 213 and which maps to ``tau``."""
    _require_basic(shape)
    tau = Partition(tau)
    if not shape.inner.contains(tau):
        raise SkewpatError(f"{tau} does not fit inside {shape.inner}")
    inner = [shape.inner.part(r) for r in range(1, shape.num_rows + 1)]
    values, _ = _build_raw(list(shape.outer), inner, list(tau), 1, trace, 0)
    return SkewTableau.from_boxes(shape, values)


def _require_ribbon(shape: SkewShape, pattern: str) -> None:
    if shape.has_square():
        raise ContainmentError(f"{shape} contains a 2x2 square, so every reading word contains {pattern}")


def map_132(t: SkewTableau) -> Partition:
    """Partition inside ``<l1-lk, ..., l1-l2>`` via the rotated complement."""
    _require_basic(t.shape)
    if t.size >= 3 and contains_pattern(t.reading_word(), (1, 3, 2)):
        raise ContainmentError(f"reading word {t.reading_word()} contains 132")
    return map_213(t.rotate_complement())


def build_132(shape: SkewShape, tau: Sequence[int]) -> SkewTableau:
    _require_basic(shape)
    if not complement_inner(shape).contains(Partition(tau)):
        raise SkewpatError(f"{Partition(tau)} does not fit inside {complement_inner(shape)}")
    return build_213(shape.rotate(), tau).rotate_complement()


def map_312(t: SkewTableau) -> Partition:
    """For ribbons the conjugate's reading word is the reverse, turning 312 into 213."""
    _require_basic(t.shape)
    _require_ribbon(t.shape, "312")
    if t.size >= 3 and contains_pattern(t.reading_word(), (3, 1, 2)):
        raise ContainmentError(f"reading word {t.reading_word()} contains 312")
    return map_213(t.conjugate()).conjugate()


def build_312(shape: SkewShape, tau: Sequence[int]) -> SkewTableau:
    _require_basic(shape)
    _require_ribbon(shape, "312")
    tau = Partition(tau)
    if not shape.inner.contains(tau):
        raise SkewpatError(f"{tau} does not fit inside {shape.inner}")
    return build_213(shape.conjugate(), tau.conjugate()).conjugate()


def map_231(t: SkewTableau) -> Partition:
    _require_basic(t.shape)
    _require_ribbon(t.shape, "231")
    if t.size >= 3 and contains_pattern(t.reading_word(), (2, 3, 1)):
        raise ContainmentError(f"reading word {t.reading_word()} contains 231")
    return map_312(t.rotate_complement())


def build_231(shape: SkewShape, tau: Sequence[int]) -> SkewTableau:
    _require_basic(shape)
    _require_ribbon(shape, "231")
    return build_312(shape.rotate(), tau).rotate_complement()


PATTERN_MAPS = {
    (2, 1, 3): (map_213, build_213),
    (1, 3, 2): (map_132, build_132),
    (3, 1, 2): (map_312, build_312),
    (2, 3, 1): (map_231, build_231),
}


# -- slides ---------------------------------------------------------------


def slide_move(shape: SkewShape, i: int, through: bool = True, step: int = 1) -> SkewShape:
    """Shift rows ``1..i`` (``through``) or ``1..i-1`` by ``step`` columns.

    Every row must have length at most two and row ``i`` exactly two.
    """
    return row_slide(shape, i, through, step)


def transport(t: SkewTableau, i: int, through: bool = True, step: int = 1) -> SkewTableau:
    """Carry each row's entries, in order, to the slid shape."""
    return SkewTableau(slide_move(t.shape, i, through, step), t.rows)
