"""Finite posets and distributive lattices around Gelfand-Tsetlin patterns.

Two kinds of posets live here: the triangular GT posets (full, column
bounded, or an explicit induced subposet) and the lattices of column
tableaux (the full lattice plus its bounded, Grassmannian, symplectic and
branching subfamilies).  Posets are stored as explicit node sets plus a
comparability rule; cover relations are always recomputed, never stored.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Optional, Union

from .tableaux import ColumnTableau, chain_sort_key

DEFAULT_MAX_ENUM_NODES = 24
MAX_LATTICE_SIZE = 2048


def _enum_guard() -> int:
    """Node guard for up-set enumeration; the HIBILAB_MAX_NODES environment
    variable overrides it (unsafe: memory grows with the up-set count)."""
    raw = os.environ.get("HIBILAB_MAX_NODES")
    return int(raw) if raw else DEFAULT_MAX_ENUM_NODES


class GtNode(NamedTuple):
    """Node ``z^(level)_index`` of a GT poset, ``1 <= index <= level``."""

    level: int
    index: int

    @property
    def label(self) -> str:
        return f"z^({self.level})_{self.index}"


def gt_geq(a: GtNode, b: GtNode) -> bool:
    """Whether ``a >= b`` under the betweenness order.

    The order is generated by ``z^(i+1)_j >= z^(i)_j >= z^(i+1)_(j+1)``;
    its closure is ``a.index <= b.index`` and
    ``a.level - a.index >= b.level - b.index``.
    """
    return a.index <= b.index and a.level - a.index >= b.level - b.index


def gt_leq(a: GtNode, b: GtNode) -> bool:
    return gt_geq(b, a)


@dataclass(frozen=True)
class GtPoset:
    """A GT poset: the full triangle, a column-bounded one, or an induced
    subposet on an explicit node set."""

    n: int
    nodes: frozenset[GtNode]
    m: Optional[int] = None

    def __init__(self, n: int, m: Optional[int] = None, nodes: Optional[Iterable[GtNode]] = None):
        n = int(n)
        if n < 1:
            raise ValueError(f"n must be positive, got {n}")
        if nodes is None:
            bound = n if m is None else min(int(m), n)
            if m is not None and m < 1:
                raise ValueError(f"m must be positive, got {m}")
            nodes = frozenset(
                GtNode(i, j) for i in range(1, n + 1) for j in range(1, min(i, bound) + 1)
            )
        else:
            nodes = frozenset(GtNode(*x) for x in nodes)
            for x in nodes:
                if not (1 <= x.index <= x.level <= n):
                    raise ValueError(f"node {x} outside the triangle of size {n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "nodes", nodes)

    @property
    def elements(self) -> tuple[GtNode, ...]:
        return tuple(sorted(self.nodes, key=lambda x: (-x.level, x.index)))

    def leq(self, a: GtNode, b: GtNode) -> bool:
        return gt_leq(a, b)

    def __len__(self) -> int:
        return len(self.nodes)

    def __contains__(self, x: GtNode) -> bool:
        return x in self.nodes

    def __iter__(self) -> Iterator[GtNode]:
        return iter(self.elements)


def leq_tab(a: ColumnTableau, b: ColumnTableau) -> bool:
    """Whether ``a <= b`` in the componentwise tableau order."""
    return a <= b


def join(a: ColumnTableau, b: ColumnTableau) -> ColumnTableau:
    """Entrywise maximum over the shallower depth."""
    if a.n != b.n:
        raise ValueError("join requires the same ambient bound")
    if a.depth > b.depth:
        a, b = b, a
    return ColumnTableau(tuple(max(x, y) for x, y in zip(a.entries, b.entries)), a.n)


def meet(a: ColumnTableau, b: ColumnTableau) -> ColumnTableau:
    """Entrywise minimum, extended by the tail of the deeper column."""
    if a.n != b.n:
        raise ValueError("meet requires the same ambient bound")
    if a.depth > b.depth:
        a, b = b, a
    head = tuple(min(x, y) for x, y in zip(a.entries, b.entries))
    return ColumnTableau(head + b.entries[a.depth:], a.n)


class Family(enum.Enum):
    FULL = "L"
    BOUNDED = "Lm"
    GRASS = "G"
    SYMPLECTIC = "P"
    BRANCHING = "B"


def _all_columns(n: int, depths: Iterable[int]) -> list[ColumnTableau]:
    cols = []
    for k in depths:
        for entries in combinations(range(1, n + 1), k):
            cols.append(ColumnTableau(entries, n))
    return cols


@dataclass(frozen=True)
class TableauLattice:
    """A distributive lattice of column tableaux from one of the five
    families.  Join/meet closure is verified at construction."""

    n: int
    family: Family
    m: Optional[int]
    k: Optional[int]
    elements: tuple[ColumnTableau, ...]

    def __init__(self, n: int, family: Family, m: Optional[int], k: Optional[int],
                 elements: Iterable[ColumnTableau]):
        elements = tuple(sorted(elements, key=chain_sort_key))
        if len(elements) > MAX_LATTICE_SIZE:
            raise ValueError(
                f"lattice with {len(elements)} elements exceeds the "
                f"desk-scale guard of {MAX_LATTICE_SIZE}"
            )
        members = set(e.entries for e in elements)
        for a, b in combinations(elements, 2):
            if join(a, b).entries not in members or meet(a, b).entries not in members:
                raise ValueError(
                    f"family {family.value} not closed under join/meet at "
                    f"{a.label}, {b.label}"
                )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "elements", elements)

    # -- constructors -------------------------------------------------

    @classmethod
    def full(cls, n: int) -> "TableauLattice":
        """All nonempty columns with entries in 1..n."""
        return cls(n, Family.FULL, None, None, _all_columns(n, range(1, n + 1)))

    @classmethod
    def bounded(cls, n: int, m: int) -> "TableauLattice":
        """Columns of depth at most m."""
        if not 1 <= m <= n:
            raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
        return cls(n, Family.BOUNDED, m, None, _all_columns(n, range(1, m + 1)))

    @classmethod
    def grassmannian(cls, n: int, m: int) -> "TableauLattice":
        """Columns of depth exactly m."""
        if not 1 <= m <= n:
            raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
        return cls(n, Family.GRASS, m, None, _all_columns(n, [m]))

    @classmethod
    def symplectic(cls, n: int) -> "TableauLattice":
        """Columns of depth at most m = n/2 dominating [1, 3, ..., 2m-1]."""
        if n % 2 != 0 or n < 2:
            raise ValueError(f"symplectic family needs even n >= 2, got {n}")
        m = n // 2
        floor = ColumnTableau(tuple(range(1, 2 * m, 2)), n)
        cols = [
            c for c in _all_columns(n, range(1, m + 1))
            if all(c.entries[i] >= floor.entries[i] for i in range(c.depth))
        ]
        return cls(n, Family.SYMPLECTIC, m, None, cols)

    @classmethod
    def branching(cls, n: int, m: int, k: int) -> "TableauLattice":
        """Columns of the three branching forms: an initial run [1..p], a
        column with all entries above k, or an initial run followed by
        entries above k."""
        if not 1 <= m <= n:
            raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
        if not 1 <= k < n:
            raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
        cols: set[tuple[int, ...]] = set()
        for p in range(1, min(k, m) + 1):
            cols.add(tuple(range(1, p + 1)))
        for q in range(1, min(n - k, m) + 1):
            for tail in combinations(range(k + 1, n + 1), q):
                cols.add(tail)
        for r in range(1, min(k, m) + 1):
            for s in range(1, min(n - k, m) + 1):
                if r + s > m:
                    continue
                for tail in combinations(range(k + 1, n + 1), s):
                    cols.add(tuple(range(1, r + 1)) + tail)
        return cls(n, Family.BRANCHING, m, k, [ColumnTableau(c, n) for c in cols])

    # -- protocol ------------------------------------------------------

    @property
    def column_bound(self) -> int:
        """Largest column depth present; the matrix width for minors."""
        return self.m if self.m is not None else self.n

    def leq(self, a: ColumnTableau, b: ColumnTableau) -> bool:
        return a <= b

    def join(self, a: ColumnTableau, b: ColumnTableau) -> ColumnTableau:
        return join(a, b)

    def meet(self, a: ColumnTableau, b: ColumnTableau) -> ColumnTableau:
        return meet(a, b)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[ColumnTableau]:
        return iter(self.elements)

    def __contains__(self, c: ColumnTableau) -> bool:
        return c.n == self.n and any(c.entries == e.entries for e in self.elements)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TableauLattice):
            return NotImplemented
        return (self.n, self.family, self.m, self.k) == (other.n, other.family, other.m, other.k)

    def __hash__(self) -> int:
        return hash((self.n, self.family, self.m, self.k))

    def rank(self, c: ColumnTableau) -> int:
        """Height of ``c``: the longest chain strictly below it."""
        return self._ranks()[c.entries]

    def _ranks(self) -> dict[tuple[int, ...], int]:
        cached = getattr(self, "_rank_cache", None)
        if cached is None:
            cached = {}
            # elements sorted by chain_sort_key list smaller elements first,
            # which is a linear extension of <=.
            for i, c in enumerate(self.elements):
                below = [
                    cached[d.entries] for d in self.elements[:i] if d < c
                ]
                cached[c.entries] = 1 + max(below) if below else 0
            object.__setattr__(self, "_rank_cache", cached)
        return cached

    def multichains(self, depths: Iterable[int]) -> Iterator[tuple[ColumnTableau, ...]]:
        """All multichains whose sorted depth sequence equals ``depths``
        (weakly decreasing), listed smallest element first."""
        depths = sorted(depths, reverse=True)
        by_depth: dict[int, list[ColumnTableau]] = {}
        for e in self.elements:
            by_depth.setdefault(e.depth, []).append(e)
        for d in depths:
            if d not in by_depth:
                return

        def rec(i: int, prev: Optional[ColumnTableau]) -> Iterator[tuple[ColumnTableau, ...]]:
            if i == len(depths):
                yield ()
                return
            for c in by_depth[depths[i]]:
                if prev is None or prev <= c:
                    for rest in rec(i + 1, c):
                        yield (c,) + rest

        yield from rec(0, None)

    def count_multichains(self, depths: Iterable[int]) -> int:
        """Number of multichains with the given depth multiset."""
        depths = sorted(depths, reverse=True)
        by_depth: dict[int, list[ColumnTableau]] = {}
        for e in self.elements:
            by_depth.setdefault(e.depth, []).append(e)
        if any(d not in by_depth for d in depths):
            return 0
        memo: dict[tuple[int, Optional[tuple[int, ...]]], int] = {}

        def count(i: int, prev: Optional[ColumnTableau]) -> int:
            if i == len(depths):
                return 1
            key = (i, None if prev is None else prev.entries)
            if key not in memo:
                memo[key] = sum(
                    count(i + 1, c)
                    for c in by_depth[depths[i]]
                    if prev is None or prev <= c
                )
            return memo[key]

        return count(0, None)


PosetLike = Union[GtPoset, TableauLattice]


def hasse(p: PosetLike) -> list[tuple[object, object]]:
    """Cover relations of a finite poset as (greater, smaller) pairs,
    sorted lexicographically by node labels."""
    elems = list(p.elements)
    n = len(elems)
    down = [0] * n  # bitmask of elements strictly below i
    up = [0] * n  # bitmask of elements strictly above j
    for i in range(n):
        for j in range(n):
            if i != j and p.leq(elems[j], elems[i]) and not p.leq(elems[i], elems[j]):
                down[i] |= 1 << j
                up[j] |= 1 << i
    edges = []
    for i in range(n):
        mask = down[i]
        while mask:
            low = mask & -mask
            j = low.bit_length() - 1
            # i covers j iff nothing sits strictly between them
            if not (up[j] & down[i]):
                edges.append((elems[i], elems[j]))
            mask ^= low
    edges.sort(key=lambda e: (e[0].label, e[1].label))
    return edges


def join_irreducibles(l: TableauLattice) -> tuple[ColumnTableau, ...]:
    """Elements that are neither the least element nor a join of two
    strictly smaller elements; equivalently, elements with exactly one
    lower cover."""
    lower_count: dict[tuple[int, ...], int] = {c.entries: 0 for c in l.elements}
    for greater, _smaller in hasse(l):
        lower_count[greater.entries] += 1
    return tuple(c for c in l.elements if lower_count[c.entries] == 1)


def order_increasing_subsets(
    p: GtPoset, max_nodes: Optional[int] = None
) -> Iterator[frozenset[GtNode]]:
    """All up-closed subsets of ``p``, the empty set included.

    Recursion over a linear extension: nodes are visited from maximal to
    minimal, and a node may enter only if all its upper covers already did.
    Guarded at ``max_nodes`` nodes (default 24, or HIBILAB_MAX_NODES).
    """
    if max_nodes is None:
        max_nodes = _enum_guard()
    elems = p.elements
    if len(elems) > max_nodes:
        raise ValueError(
            f"poset has {len(elems)} nodes, above the enumeration guard "
            f"of {max_nodes}"
        )
    # elements are sorted by (-level, index); make it a linear extension
    # (larger nodes first) by sorting on the closed-form order invariants.
    order = sorted(elems, key=lambda x: (x.index, -(x.level - x.index)))
    ups = [
        [j for j in range(i) if gt_geq(order[j], order[i])]
        for i in range(len(order))
    ]

    def rec(i: int, chosen: list[bool]) -> Iterator[frozenset[GtNode]]:
        if i == len(order):
            yield frozenset(order[j] for j, c in enumerate(chosen) if c)
            return
        chosen.append(False)
        yield from rec(i + 1, chosen)
        chosen.pop()
        if all(chosen[j] for j in ups[i]):
            chosen.append(True)
            yield from rec(i + 1, chosen)
            chosen.pop()

    yield from rec(0, [])


class ConstantPolicy(enum.Enum):
    """What to do with nodes on which every family indicator is 1."""

    KEEP_TOP = "keep-top"
    DROP = "drop"
    KEEP_ALL = "keep-all"


DEFAULT_POLICY = {
    Family.FULL: ConstantPolicy.KEEP_TOP,
    Family.BOUNDED: ConstantPolicy.KEEP_TOP,
    Family.GRASS: ConstantPolicy.DROP,
    Family.SYMPLECTIC: ConstantPolicy.KEEP_TOP,
    Family.BRANCHING: ConstantPolicy.KEEP_TOP,
}


def associated_gt_subposet(
    l: TableauLattice, policy: Optional[ConstantPolicy] = None
) -> GtPoset:
    """The GT subposet seen by a lattice family.

    Nodes of the full triangle are grouped by the vector of indicator
    values over all lattice elements; all-zero groups are discarded, each
    non-constant group is represented by its unique maximal node, and
    all-one groups are kept or dropped according to ``policy`` (the
    per-family default reproduces the standard pictures).
    """
    from .gtpatterns import column_to_indicator

    if policy is None:
        policy = DEFAULT_POLICY[l.family]
    n = l.n
    indicators = [column_to_indicator(c) for c in l.elements]
    classes: dict[tuple[int, ...], list[GtNode]] = {}
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            node = GtNode(i, j)
            vec = tuple(f.value(i, j) for f in indicators)
            classes.setdefault(vec, []).append(node)
    kept: list[GtNode] = []
    for vec, nodes in classes.items():
        if all(v == 0 for v in vec):
            continue
        maxima = [
            x for x in nodes
            if not any(y != x and gt_geq(y, x) for y in nodes)
        ]
        if len(maxima) != 1:
            raise ValueError(
                f"value class {sorted(nodes)} has {len(maxima)} maximal nodes"
            )
        rep = maxima[0]
        if all(v == 1 for v in vec):
            if policy is ConstantPolicy.DROP:
                continue
            if policy is ConstantPolicy.KEEP_TOP and rep.level != n:
                continue
        kept.append(rep)
    return GtPoset(n, nodes=kept)


def to_dot(p: PosetLike) -> str:
    """DOT rendering: one node per element, edges from larger to smaller,
    nodes and edges in lexicographic label order."""
    lines = ["digraph {"]
    for x in sorted(p.elements, key=lambda e: e.label):
        lines.append(f'  "{x.label}";')
    for greater, smaller in hasse(p):
        lines.append(f'  "{greater.label}" -> "{smaller.label}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
