"""Permutations, partitions, skew shapes and standard skew tableaux.

Permutations are plain tuples in one-line notation on ``1..n``; patterns
are permutations too.  Boxes use 1-based matrix coordinates ``(row, col)``,
rows numbered from the top (English notation).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import wraps
from typing import Iterable, Sequence

from . import kernels

Permutation = tuple[int, ...]


class SkewpatError(ValueError):
    """Base class for domain errors (bad input, violated preconditions)."""


class LengthMismatchError(SkewpatError):
    pass


class NotBasicError(SkewpatError):
    """A shape-indexed count was asked for a shape that needs normalizing."""

    def __init__(self, shape):
        super().__init__(
            f"shape {shape} is not basic; call normalize_shape() first "
            f"(it is {normalize_shape(shape)} after normalizing)"
        )
        self.shape = shape


class ContainmentError(SkewpatError):
    """The input contains a pattern the operation requires it to avoid."""


class MembershipError(SkewpatError):
    """A permutation is not in the requested class."""


# -- permutations ---------------------------------------------------------


def as_permutation(seq: Iterable[int]) -> Permutation:
    w = tuple(int(x) for x in seq)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise SkewpatError(f"{w} is not a permutation of 1..{len(w)}")
    return w


def parse_permutation(text: str) -> Permutation:
    """Parse ``"2413"`` (one digit per letter) or ``"10,2,1,..."``."""
    text = text.strip()
    if not text:
        return ()
    if "," in text or " " in text:
        parts = [p for p in text.replace(",", " ").split() if p]
        return as_permutation(int(p) for p in parts)
    return as_permutation(int(c) for c in text)


def format_permutation(w: Sequence[int]) -> str:
    if all(x < 10 for x in w):
        return "".join(str(x) for x in w)
    return ",".join(str(x) for x in w)


def standardize(seq: Sequence[int]) -> Permutation:
    """The permutation order-isomorphic to a sequence of distinct values."""
    rank = {x: i + 1 for i, x in enumerate(sorted(seq))}
    return tuple(rank[x] for x in seq)


def inverse(w: Sequence[int]) -> Permutation:
    inv = [0] * len(w)
    for i, x in enumerate(w):
        inv[x - 1] = i + 1
    return tuple(inv)


def reverse(w: Sequence[int]) -> Permutation:
    return tuple(reversed(w))


def complement(w: Sequence[int]) -> Permutation:
    n = len(w)
    return tuple(n + 1 - x for x in w)


def reverse_complement(w: Sequence[int]) -> Permutation:
    n = len(w)
    return tuple(n + 1 - x for x in reversed(w))


def is_involution(w: Sequence[int]) -> bool:
    return all(w[x - 1] == i + 1 for i, x in enumerate(w))


def contains_pattern(w: Sequence[int], p: Sequence[int]) -> bool:
    """True iff some subsequence of ``w`` is order-isomorphic to ``p``."""
    if len(p) < 1:
        raise SkewpatError("pattern must be nonempty")
    return kernels.contains_pattern(w, p)


def avoids(w: Sequence[int], p: Sequence[int]) -> bool:
    return not contains_pattern(w, p)


def lis_length(w: Sequence[int]) -> int:
    return kernels.lis_length(w)


def descent_set(w: Sequence[int]) -> frozenset[int]:
    """1-based positions ``i`` with ``w_i > w_{i+1}``."""
    return frozenset(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def increasing(m: int) -> Permutation:
    return tuple(range(1, m + 1))


# -- partitions -----------------------------------------------------------


class Partition(tuple):
    """Weakly decreasing tuple of positive integers (zeros are stripped)."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(x) for x in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise SkewpatError(f"{parts} is not weakly decreasing")
        if parts and parts[-1] < 0:
            raise SkewpatError(f"{parts} has negative parts")
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return ",".join(str(x) for x in self)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """``λ_i`` with 1-based ``i``; zero past the end."""
        return self[i - 1] if 0 < i <= len(self) else 0

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for x in self if x > c) for c in range(self[0]))

    def contains(self, other: Sequence[int]) -> bool:
        """True iff the diagram of ``other`` fits inside this one."""
        return partition_contained(other, self)

    def to_json(self) -> list[int]:
        return list(self)


def partition_contained(inner: Sequence[int], outer: Sequence[int]) -> bool:
    """Componentwise ``inner <= outer`` with zero padding."""
    for i, x in enumerate(inner):
        if x > (outer[i] if i < len(outer) else 0):
            return False
    return True


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return Partition()
    return Partition(int(p) for p in text.replace(" ", "").split(",") if p)


# -- skew shapes ----------------------------------------------------------


def _memo(method):
    # shapes are immutable, so derived data can live in the instance dict
    key = "_memo_" + method.__name__

    @wraps(method)
    def wrapper(self):
        cache = self.__dict__
        if key not in cache:
            cache[key] = method(self)
        return cache[key]

    return wrapper


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        outer = Partition(self.outer)
        inner = Partition(self.inner)
        if not partition_contained(inner, outer):
            raise SkewpatError(f"inner {list(inner)} is not contained in outer {list(outer)}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @classmethod
    def parse(cls, text: str) -> "SkewShape":
        """Parse ``"5,2,2,1/3,2,1"``; the ``/inner`` part is optional."""
        outer, _, inner = text.partition("/")
        return cls(parse_partition(outer), parse_partition(inner))

    def __str__(self):
        if self.inner:
            return f"{self.outer}/{self.inner}"
        return str(self.outer)

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    @property
    def num_rows(self) -> int:
        return len(self.outer)

    def row_range(self, i: int) -> range:
        """Columns occupied by row ``i`` (1-based)."""
        return range(self.inner.part(i) + 1, self.outer.part(i) + 1)

    @_memo
    def row_lengths(self) -> list[int]:
        return [self.outer.part(i) - self.inner.part(i) for i in range(1, self.num_rows + 1)]

    def column_lengths(self) -> list[int]:
        return self.conjugate().row_lengths()

    def __contains__(self, box) -> bool:
        i, j = box
        return i >= 1 and self.inner.part(i) < j <= self.outer.part(i)

    def boxes(self) -> list[tuple[int, int]]:
        """Boxes in row-major order (top row first)."""
        return [(i, j) for i in range(1, self.num_rows + 1) for j in self.row_range(i)]

    @_memo
    def reading_order(self) -> list[tuple[int, int]]:
        """Boxes in the order their entries appear in the reading word."""
        return [(i, j) for i in range(self.num_rows, 0, -1) for j in self.row_range(i)]

    @_memo
    def conjugate(self) -> "SkewShape":
        return SkewShape(self.outer.conjugate(), self.inner.conjugate())

    @_memo
    def rotate(self) -> "SkewShape":
        """Rotate by 180 degrees inside the ``num_rows x outer[0]`` box."""
        if not self.outer:
            return self
        rows, width = self.num_rows, self.outer[0]
        outer = [width - self.inner.part(rows + 1 - i) for i in range(1, rows + 1)]
        inner = [width - self.outer.part(rows + 1 - i) for i in range(1, rows + 1)]
        return SkewShape(Partition(outer), Partition(inner))

    @_memo
    def is_basic(self) -> bool:
        """Every edge of the inner boundary touches a box of the shape.

        Equivalently: for every row ``i`` of the inner partition, row ``i``
        is nonempty and row ``i + 1`` reaches at least column ``inner_i``.
        Components that meet only at a corner are allowed.
        """
        lam, mu = self.outer, self.inner
        for i in range(1, len(mu) + 1):
            if lam.part(i) <= mu.part(i) or lam.part(i + 1) < mu.part(i):
                return False
        return True

    @_memo
    def has_square(self) -> bool:
        """True iff the shape contains a 2x2 block of boxes."""
        for i in range(1, self.num_rows):
            lo = max(self.inner.part(i), self.inner.part(i + 1))
            hi = min(self.outer.part(i), self.outer.part(i + 1))
            if hi - lo >= 2:
                return True
        return False

    def to_json(self) -> dict:
        return {"outer": list(self.outer), "inner": list(self.inner)}

    @classmethod
    def from_json(cls, data) -> "SkewShape":
        if isinstance(data, str):
            return cls.parse(data)
        if isinstance(data, list):
            return cls(Partition(data))
        return cls(Partition(data["outer"]), Partition(data.get("inner", [])))


def normalize_shape(shape: SkewShape) -> SkewShape:
    """Slide disconnected pieces together until they share a corner.

    Empty rows are dropped, the bottom row is moved to column 1, and each
    row is placed so that it shares with the row below exactly as many
    columns as it did before (zero if they did not touch).  The poset of
    boxes and the reading order are unchanged, so the set of reading words
    is unchanged too.
    """
    lam, mu = shape.outer, shape.inner
    rows = [i for i in range(1, shape.num_rows + 1) if lam.part(i) > mu.part(i)]
    if not rows:
        return SkewShape(Partition())
    lengths = [lam.part(i) - mu.part(i) for i in rows]
    overlaps = []
    for a, b in zip(rows, rows[1:]):
        overlaps.append(max(0, lam.part(b) - mu.part(a)) if b == a + 1 else 0)
    m = len(rows)
    new_inner = [0] * m
    new_outer = [0] * m
    new_outer[-1] = lengths[-1]
    for t in range(m - 2, -1, -1):
        new_inner[t] = new_outer[t + 1] - overlaps[t]
        new_outer[t] = new_inner[t] + lengths[t]
    return SkewShape(Partition(new_outer), Partition(new_inner))


# -- tableaux -------------------------------------------------------------


@dataclass(frozen=True)
class SkewTableau:
    """A standard filling of a skew shape.

    ``rows[i - 1]`` lists the entries of row ``i`` left to right, skipping
    the inner boxes; fully-inner rows are empty tuples.
    """

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        shape = self.shape
        lengths = shape.row_lengths()
        while len(rows) > len(lengths) and not rows[-1]:
            rows = rows[:-1]
        if [len(r) for r in rows] != lengths:
            raise SkewpatError(
                f"row lengths {[len(r) for r in rows]} do not match shape {shape}"
            )
        object.__setattr__(self, "rows", rows)
        entries = sorted(x for r in rows for x in r)
        if entries != list(range(1, shape.size + 1)):
            raise SkewpatError(f"entries of {list(map(list, rows))} are not 1..{shape.size}")
        for r in rows:
            for a, b in zip(r, r[1:]):
                if a >= b:
                    raise SkewpatError(f"row {list(r)} is not increasing")
        starts = list(shape.inner) + [0] * (len(rows) - len(shape.inner))
        for i in range(len(rows) - 1):
            upper, lower = rows[i], rows[i + 1]
            su, sl = starts[i], starts[i + 1]
            for c in range(max(su, sl), min(su + len(upper), sl + len(lower))):
                if upper[c - su] >= lower[c - sl]:
                    raise SkewpatError(f"column {c + 1} is not increasing at rows {i + 1},{i + 2}")

    @classmethod
    def straight(cls, rows: Sequence[Sequence[int]]) -> "SkewTableau":
        rows = [list(r) for r in rows if len(r)]
        return cls(SkewShape(Partition(len(r) for r in rows)), tuple(map(tuple, rows)))

    @classmethod
    def from_boxes(cls, shape: SkewShape, values: dict) -> "SkewTableau":
        inner = shape.inner
        rows = []
        for i, end in enumerate(shape.outer, 1):
            start = inner[i - 1] if i <= len(inner) else 0
            rows.append(tuple(values[i, j] for j in range(start + 1, end + 1)))
        return cls(shape, tuple(rows))

    def __getitem__(self, box) -> int:
        i, j = box
        if (i, j) not in self.shape:
            raise KeyError(box)
        return self.rows[i - 1][j - self.shape.inner.part(i) - 1]

    def get(self, box, default=None):
        return self[box] if box in self.shape else default

    @property
    def size(self) -> int:
        return self.shape.size

    def items(self):
        """``((i, j), value)`` pairs in row-major order."""
        for i in range(1, self.shape.num_rows + 1):
            start = self.shape.inner.part(i) + 1
            for t, x in enumerate(self.rows[i - 1]):
                yield (i, start + t), x

    def position(self, value: int) -> tuple[int, int]:
        for box, x in self.items():
            if x == value:
                return box
        raise KeyError(value)

    def reading_word(self) -> Permutation:
        return tuple(x for r in reversed(self.rows) for x in r)

    def conjugate(self) -> "SkewTableau":
        values = {(j, i): x for (i, j), x in self.items()}
        return SkewTableau.from_boxes(self.shape.conjugate(), values)

    def rotate_complement(self) -> "SkewTableau":
        """Rotate 180 degrees and replace each entry ``x`` by ``n + 1 - x``."""
        shape = self.shape
        if not shape.outer:
            return self
        rows, width, n = shape.num_rows, shape.outer[0], shape.size
        values = {
            (rows + 1 - i, width + 1 - j): n + 1 - x for (i, j), x in self.items()
        }
        return SkewTableau.from_boxes(shape.rotate(), values)

    def to_json(self) -> dict:
        return {"shape": self.shape.to_json(), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data) -> "SkewTableau":
        if isinstance(data, list):
            return cls.straight(data)
        shape = SkewShape.from_json(data["shape"]) if "shape" in data else None
        rows = data["rows"]
        if shape is None:
            return cls.straight(rows)
        return cls(shape, tuple(tuple(r) for r in rows))


def reading_word(t: SkewTableau) -> Permutation:
    return t.reading_word()


def conjugate(x):
    """Conjugate a partition, skew shape or tableau."""
    if isinstance(x, (SkewShape, SkewTableau)):
        return x.conjugate()
    return Partition(x).conjugate()


def rotate_complement(t: SkewTableau) -> SkewTableau:
    return t.rotate_complement()


# -- the classes L_{n,k;r} ------------------------------------------------


@dataclass(frozen=True)
class ClassSpec:
    """Permutations of length ``n*k + r`` indexed ``w_{0,2..r+1} w_{1,1} .. w_{n,k}``.

    ``r = 0`` gives the even-length classes; ``(k, r) = (2, 0)`` are the
    up-down alternating permutations of length ``2n`` and ``(2, 1)`` the
    down-up ones of length ``2n + 1``.
    """

    n: int
    k: int
    r: int = 0

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise SkewpatError(f"need n, k >= 1, got n={self.n}, k={self.k}")
        if not 0 <= self.r <= self.k - 1:
            raise SkewpatError(f"need 0 <= r <= k - 1, got r={self.r}, k={self.k}")

    @classmethod
    def parse(cls, text: str) -> "ClassSpec":
        """Parse ``"n=2,k=2,r=0"`` (``r`` optional)."""
        fields = {}
        for item in text.replace(" ", "").split(","):
            if not item:
                continue
            key, sep, value = item.partition("=")
            if not sep or key not in ("n", "k", "r"):
                raise SkewpatError(f"bad class literal {text!r}; expected n=..,k=..,r=..")
            fields[key] = int(value)
        if "n" not in fields or "k" not in fields:
            raise SkewpatError(f"class literal {text!r} needs n and k")
        return cls(**fields)

    def __str__(self):
        return f"n={self.n},k={self.k},r={self.r}"

    @property
    def length(self) -> int:
        return self.n * self.k + self.r

    def index(self, i: int, j: int) -> int:
        """0-based position of ``w_{i,j}`` in the flat word."""
        if i == 0:
            if not 2 <= j <= self.r + 1:
                raise IndexError((i, j))
            return j - 2
        if not (1 <= i <= self.n and 1 <= j <= self.k):
            raise IndexError((i, j))
        return self.r + (i - 1) * self.k + (j - 1)

    def entry(self, w: Sequence[int], i: int, j: int) -> int:
        return w[self.index(i, j)]

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "r": self.r}


def is_member(w: Sequence[int], c: ClassSpec) -> bool:
    if len(w) != c.length:
        raise LengthMismatchError(f"word of length {len(w)} cannot lie in class {c} (length {c.length})")
    n, k, r = c.n, c.k, c.r
    at = c.entry
    for j in range(2, r + 1):
        if not at(w, 0, j) < at(w, 0, j + 1):
            return False
    for j in range(1, r + 1):
        if not at(w, 0, j + 1) > at(w, 1, j):
            return False
    for i in range(1, n + 1):
        for j in range(1, k):
            if not at(w, i, j) < at(w, i, j + 1):
                return False
    for i in range(1, n):
        for j in range(1, k):
            if not at(w, i, j + 1) > at(w, i + 1, j):
                return False
    return True


def class_shape(c: ClassSpec) -> SkewShape:
    """Skew shape whose reading words are exactly the class.

    The staircase difference ``<n+k-1, ..., k> / <n-1, ..., 1>``; for
    ``r > 0`` a bottom row of length ``r`` starting in column 1 carries the
    prefix ``w_{0,2} .. w_{0,r+1}``, each sitting below ``w_{1,1} .. w_{1,r}``.
    """
    n, k, r = c.n, c.k, c.r
    outer = [n + k - i for i in range(1, n + 1)]
    if r:
        outer.append(r)
    inner = [n - i for i in range(1, n)]
    return SkewShape(Partition(outer), Partition(inner))
