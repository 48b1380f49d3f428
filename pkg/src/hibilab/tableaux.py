"""Young diagrams, column tableaux, semistandard (skew) tableaux, and the
dictionary between multichains of columns and semistandard fillings.

All values are immutable after construction and validate their defining
inequalities eagerly, so a constructed object is always well formed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence


def _strip_zeros(rows: tuple[int, ...]) -> tuple[int, ...]:
    end = len(rows)
    while end > 0 and rows[end - 1] == 0:
        end -= 1
    return rows[:end]


@dataclass(frozen=True)
class YoungDiagram:
    """A weakly decreasing sequence of nonnegative row lengths.

    Trailing zeros are kept as stored (they matter when a diagram is read
    against an ambient number of rows) but are ignored by equality and
    hashing, so ``YoungDiagram((3, 1, 0)) == YoungDiagram((3, 1))``.
    """

    rows: tuple[int, ...]

    def __init__(self, rows: Iterable[int] = ()):
        rows = tuple(int(r) for r in rows)
        if any(r < 0 for r in rows):
            raise ValueError(f"row lengths must be nonnegative: {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"row lengths must weakly decrease: {rows}")
        object.__setattr__(self, "rows", rows)

    @property
    def depth(self) -> int:
        """Number of strictly positive rows."""
        return len(_strip_zeros(self.rows))

    @property
    def size(self) -> int:
        return sum(self.rows)

    def row(self, i: int) -> int:
        """Length of row ``i`` (1-indexed); 0 beyond the stored rows."""
        return self.rows[i - 1] if 1 <= i <= len(self.rows) else 0

    def padded(self, length: int) -> tuple[int, ...]:
        """Rows padded with zeros to exactly ``length`` entries."""
        if self.depth > length:
            raise ValueError(f"diagram {self.rows} has more than {length} rows")
        return tuple(self.row(i) for i in range(1, length + 1))

    def transpose(self) -> "YoungDiagram":
        """Conjugate diagram: entry j counts the boxes in column j."""
        stripped = _strip_zeros(self.rows)
        if not stripped:
            return YoungDiagram(())
        return YoungDiagram(
            tuple(sum(1 for r in stripped if r >= j) for j in range(1, stripped[0] + 1))
        )

    def contains(self, other: "YoungDiagram") -> bool:
        """Rowwise containment, ``other`` inside ``self``."""
        return all(other.row(i) <= self.row(i) for i in range(1, len(other.rows) + 1))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, YoungDiagram):
            return NotImplemented
        return _strip_zeros(self.rows) == _strip_zeros(other.rows)

    def __hash__(self) -> int:
        return hash(_strip_zeros(self.rows))

    def __iter__(self) -> Iterator[int]:
        return iter(self.rows)

    def __repr__(self) -> str:
        return f"YoungDiagram({self.rows})"


@dataclass(frozen=True, order=False)
class ColumnTableau:
    """A single strictly increasing column with entries in ``1..n``.

    The comparison operators implement the componentwise tableau order:
    ``I >= J`` iff ``I`` is no deeper than ``J`` and every entry of ``I``
    dominates the corresponding entry of ``J``.  This is a partial order;
    ``<=`` and ``>=`` may both be ``False``.
    """

    entries: tuple[int, ...]
    n: int

    def __init__(self, entries: Iterable[int], n: int):
        entries = tuple(int(e) for e in entries)
        n = int(n)
        if n < 1:
            raise ValueError(f"ambient bound must be positive, got {n}")
        if not entries:
            raise ValueError("a column tableau has at least one entry")
        if any(a >= b for a, b in zip(entries, entries[1:])):
            raise ValueError(f"column entries must strictly increase: {entries}")
        if entries[0] < 1 or entries[-1] > n:
            raise ValueError(f"column entries must lie in 1..{n}: {entries}")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "n", n)

    @property
    def depth(self) -> int:
        return len(self.entries)

    @property
    def label(self) -> str:
        return "[" + ",".join(str(e) for e in self.entries) + "]"

    def _check_ambient(self, other: "ColumnTableau") -> None:
        if self.n != other.n:
            raise ValueError(
                f"cannot compare columns with ambient bounds {self.n} and {other.n}"
            )

    def __ge__(self, other: "ColumnTableau") -> bool:
        self._check_ambient(other)
        if self.depth > other.depth:
            return False
        return all(a >= b for a, b in zip(self.entries, other.entries))

    def __le__(self, other: "ColumnTableau") -> bool:
        return other.__ge__(self)

    def __gt__(self, other: "ColumnTableau") -> bool:
        return self >= other and self.entries != other.entries

    def __lt__(self, other: "ColumnTableau") -> bool:
        return other.__gt__(self)

    def __repr__(self) -> str:
        return f"ColumnTableau({self.label}, n={self.n})"


# Canonical sort key: within any multichain, smaller elements are deeper,
# and at equal depth the entrywise smaller column comes first.
def chain_sort_key(col: ColumnTableau) -> tuple[int, tuple[int, ...]]:
    return (-col.depth, col.entries)


@dataclass(frozen=True)
class SSYT:
    """A semistandard Young tableau stored row-major.

    Rows weakly increase left to right, columns strictly increase top to
    bottom, and row lengths weakly decrease.  The empty tableau is allowed.
    """

    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Sequence[int]] = ()):
        rows = tuple(tuple(int(e) for e in row) for row in rows)
        while rows and not rows[-1]:
            rows = rows[:-1]
        lengths = tuple(len(row) for row in rows)
        if any(a < b for a, b in zip(lengths, lengths[1:])):
            raise ValueError(f"row lengths must weakly decrease: {lengths}")
        if any(not row for row in rows):
            raise ValueError("empty rows are not allowed inside a tableau")
        for row in rows:
            if row[0] < 1:
                raise ValueError(f"entries must be positive: {row}")
            if any(a > b for a, b in zip(row, row[1:])):
                raise ValueError(f"rows must weakly increase: {row}")
        for i in range(1, len(rows)):
            for j in range(len(rows[i])):
                if rows[i - 1][j] >= rows[i][j]:
                    raise ValueError(
                        f"columns must strictly increase: column {j + 1}, rows {i}, {i + 1}"
                    )
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> YoungDiagram:
        return YoungDiagram(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    @property
    def max_entry(self) -> int:
        return max((row[-1] for row in self.rows), default=0)

    def columns(self) -> list[tuple[int, ...]]:
        if not self.rows:
            return []
        return [
            tuple(row[j] for row in self.rows if len(row) > j)
            for j in range(len(self.rows[0]))
        ]

    def content(self, n: Optional[int] = None) -> tuple[int, ...]:
        """Entry counts ``(c_1, ..., c_n)``; ``n`` defaults to the max entry."""
        if n is None:
            n = self.max_entry
        if self.max_entry > n:
            raise ValueError(f"tableau has entries above {n}")
        counts = [0] * n
        for row in self.rows:
            for e in row:
                counts[e - 1] += 1
        return tuple(counts)

    def to_dict(self) -> dict:
        return {"shape": list(self.shape.rows), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_dict(cls, data: dict) -> "SSYT":
        t = cls(data["rows"])
        if "shape" in data and YoungDiagram(data["shape"]) != t.shape:
            raise ValueError(
                f"declared shape {data['shape']} does not match rows {t.shape.rows}"
            )
        return t

    def __repr__(self) -> str:
        return f"SSYT({self.rows})"


@dataclass(frozen=True)
class SkewTableau:
    """A semistandard filling of the cells of ``outer`` not in ``inner``.

    ``rows[i]`` holds only the filled cells of row ``i+1``, occupying
    columns ``inner.row(i+1)+1 .. outer.row(i+1)``.
    """

    outer: YoungDiagram
    inner: YoungDiagram
    rows: tuple[tuple[int, ...], ...] = field(default=())

    def __init__(self, outer: YoungDiagram, inner: YoungDiagram, rows: Iterable[Sequence[int]]):
        outer = outer if isinstance(outer, YoungDiagram) else YoungDiagram(outer)
        inner = inner if isinstance(inner, YoungDiagram) else YoungDiagram(inner)
        rows = tuple(tuple(int(e) for e in row) for row in rows)
        if not outer.contains(inner):
            raise ValueError(f"inner {inner.rows} not contained in outer {outer.rows}")
        depth = max(outer.depth, len(rows))
        if len(rows) < depth:
            rows = rows + ((),) * (depth - len(rows))
        for i in range(1, depth + 1):
            expected = outer.row(i) - inner.row(i)
            if len(rows[i - 1]) != expected:
                raise ValueError(
                    f"row {i} must have {expected} filled cells, got {len(rows[i - 1])}"
                )
        for row in rows:
            if any(e < 1 for e in row):
                raise ValueError(f"entries must be positive: {row}")
            if any(a > b for a, b in zip(row, row[1:])):
                raise ValueError(f"rows must weakly increase: {row}")
        # Column strictness on cells present in consecutive rows.
        for i in range(1, depth):
            lo, hi = inner.row(i + 1), outer.row(i + 1)
            for j in range(lo, hi):
                if j >= inner.row(i) and j < outer.row(i):
                    above = rows[i - 1][j - inner.row(i)]
                    here = rows[i][j - lo]
                    if above >= here:
                        raise ValueError(
                            f"columns must strictly increase: column {j + 1}, rows {i}, {i + 1}"
                        )
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "rows", rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    @property
    def max_entry(self) -> int:
        return max((max(row) for row in self.rows if row), default=0)

    def content(self, n: Optional[int] = None) -> tuple[int, ...]:
        if n is None:
            n = self.max_entry
        if self.max_entry > n:
            raise ValueError(f"skew tableau has entries above {n}")
        counts = [0] * n
        for row in self.rows:
            for e in row:
                counts[e - 1] += 1
        return tuple(counts)

    def to_dict(self) -> dict:
        depth = max(self.outer.depth, len(self.rows))
        padded = [
            [None] * self.inner.row(i) + list(self.rows[i - 1])
            for i in range(1, depth + 1)
        ]
        return {
            "outer": list(self.outer.rows),
            "inner": list(self.inner.rows),
            "rows": padded,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SkewTableau":
        inner = YoungDiagram(data["inner"])
        rows = []
        for i, row in enumerate(data["rows"], start=1):
            pad = sum(1 for e in row if e is None)
            if pad != inner.row(i) or any(e is None for e in row[pad:]):
                raise ValueError(f"row {i} null cells must match inner row {inner.row(i)}")
            rows.append([e for e in row if e is not None])
        return cls(YoungDiagram(data["outer"]), inner, rows)

    def __repr__(self) -> str:
        return f"SkewTableau({self.outer.rows}/{self.inner.rows}, {self.rows})"


def multichain_to_ssyt(chain: Iterable[ColumnTableau]) -> SSYT:
    """Assemble a multichain of columns into the semistandard tableau whose
    j-th column is the j-th smallest element.

    The input order is irrelevant.  Raises ``ValueError`` if two elements
    are incomparable (the input is not a multichain) or live in different
    ambient bounds.
    """
    cols = sorted(chain, key=chain_sort_key)
    for i in range(len(cols)):
        for j in range(i + 1, len(cols)):
            if not (cols[i] <= cols[j] or cols[j] <= cols[i]):
                raise ValueError(
                    f"not a multichain: {cols[i].label} and {cols[j].label} are incomparable"
                )
    if not cols:
        return SSYT(())
    depth = cols[0].depth
    rows = [
        tuple(c.entries[i] for c in cols if c.depth > i)
        for i in range(depth)
    ]
    return SSYT(rows)


def ssyt_to_multichain(t: SSYT, n: Optional[int] = None) -> tuple[ColumnTableau, ...]:
    """Columns of a semistandard tableau, smallest (deepest) first.

    Inverse of :func:`multichain_to_ssyt`.  ``n`` defaults to the largest
    entry of the tableau.
    """
    if n is None:
        n = t.max_entry
    return tuple(ColumnTableau(col, n) for col in t.columns())


def to_skew(t: SSYT, k: int) -> SkewTableau:
    """Strip the forced leading entries of a branching-family tableau and
    shift what remains down by ``k``.

    Every entry of row ``i`` must equal ``i`` or exceed ``k``; the count of
    entries equal to ``i`` becomes row ``i`` of the inner shape, and the
    surviving entries ``e`` become ``e - k``.
    """
    k = int(k)
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    for i, row in enumerate(t.rows, start=1):
        for e in row:
            if e <= k and e != i:
                raise ValueError(
                    f"row {i} entry {e} is neither {i} nor above {k}; "
                    "tableau is not of branching form"
                )
    mu = tuple(
        sum(1 for e in t.rows[i - 1] if e == i) if i <= len(t.rows) else 0
        for i in range(1, k + 1)
    )
    skew_rows = []
    for i, row in enumerate(t.rows, start=1):
        kept = [e - k for e in row if not (i <= k and e == i)]
        skew_rows.append(tuple(kept))
    return SkewTableau(t.shape, YoungDiagram(mu), tuple(skew_rows))
