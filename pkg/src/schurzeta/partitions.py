"""Integer partitions, Young-diagram cells, and strip-growth index sets.

Partitions are plain tuples of weakly decreasing positive integers with no
trailing zeros; the empty partition is ``()``.  Cells are 1-indexed
``(row, col)`` pairs, row 1 at the top.
"""

from functools import cache
from itertools import combinations

Partition = tuple[int, ...]
Cell = tuple[int, int]


def as_partition(parts) -> Partition:
    """Normalize an iterable to a partition tuple, stripping trailing zeros."""
    t = tuple(int(x) for x in parts)
    while t and t[-1] == 0:
        t = t[:-1]
    for i, x in enumerate(t):
        if x <= 0:
            raise ValueError(f"partition parts must be positive, got {x}")
        if i + 1 < len(t) and x < t[i + 1]:
            raise ValueError(f"parts must weakly decrease, got {t}")
    return t


def conjugate(p: Partition) -> Partition:
    """Transpose the Young diagram: result[j] = #{i : p[i] >= j+1}."""
    p = as_partition(p)
    if not p:
        return ()
    out = [0] * p[0]
    for part in p:
        for j in range(part):
            out[j] += 1
    return tuple(out)


def cells(p: Partition) -> list[Cell]:
    """All diagram cells in row-major order (row, then column, ascending)."""
    p = as_partition(p)
    return [(i + 1, j + 1) for i, part in enumerate(p) for j in range(part)]


def corners(p: Partition) -> list[Cell]:
    """Cells with no neighbor to the right or below, top row first."""
    p = as_partition(p)
    out = []
    for i, part in enumerate(p):
        if i + 1 == len(p) or p[i + 1] < part:
            out.append((i + 1, part))
    return out


def contains(outer: Partition, inner: Partition) -> bool:
    """True when the diagram of inner fits inside the diagram of outer."""
    outer, inner = as_partition(outer), as_partition(inner)
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner, outer))


def is_horizontal_strip(outer: Partition, inner: Partition) -> bool:
    """True when outer/inner has at most one cell per column."""
    if not contains(outer, inner):
        return False
    co, ci = conjugate(outer), conjugate(inner)
    ci = ci + (0,) * (len(co) - len(ci))
    return all(a - b in (0, 1) for a, b in zip(co, ci))


def is_vertical_strip(outer: Partition, inner: Partition) -> bool:
    """True when outer/inner has at most one cell per row."""
    outer, inner = as_partition(outer), as_partition(inner)
    if not contains(outer, inner):
        return False
    padded = inner + (0,) * (len(outer) - len(inner))
    return all(a - b in (0, 1) for a, b in zip(outer, padded))


def vertical_strip_rows(p: Partition, n: int) -> list[tuple[int, ...]]:
    """All n-element row-index sets whose simultaneous growth by one cell
    keeps the sequence a partition (equivalently: adds a vertical strip).

    Returned in lexicographic order.  Row indices may exceed the current
    length (missing parts count as 0), but never length + n.
    """
    p = as_partition(p)
    if n < 1:
        raise ValueError("strip size must be >= 1")
    out = []
    for ks in combinations(range(1, len(p) + n + 1), n):
        if _grown_or_none(p, ks) is not None:
            out.append(ks)
    return out


def _grown_or_none(p: Partition, rows) -> Partition | None:
    top = max(rows)
    grown = list(p) + [0] * (top - len(p))
    for k in rows:
        grown[k - 1] += 1
    # a zero followed by a positive part (a gap row) fails this check too
    for a, b in zip(grown, grown[1:]):
        if a < b:
            return None
    while grown and grown[-1] == 0:
        grown.pop()
    return tuple(grown)


def grow_rows(p: Partition, rows) -> Partition:
    """Add one cell to each listed row (1-indexed, distinct); error when the
    result is not weakly decreasing."""
    p = as_partition(p)
    given = tuple(int(k) for k in rows)
    if not given or len(set(given)) != len(given) or any(k < 1 for k in given):
        raise ValueError(f"row set must be nonempty distinct positive, got {given}")
    grown = _grown_or_none(p, tuple(sorted(given)))
    if grown is None:
        raise ValueError(f"growing rows {given} of {p} does not give a partition")
    return grown


def horizontal_strip_cols(p: Partition, m: int) -> list[tuple[int, ...]]:
    """Column-index sets adding a horizontal strip of size m; the vertical
    analogue applied to the conjugate shape."""
    return vertical_strip_rows(conjugate(p), m)


def grow_cols(p: Partition, cols) -> Partition:
    """Add one cell to each listed column; conjugate of grow_rows."""
    return conjugate(grow_rows(conjugate(p), cols))


@cache
def _partitions_of(n: int, max_part: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def all_partitions(n: int, max_length: int | None = None) -> list[Partition]:
    """All partitions of n in descending lexicographic order."""
    if n < 0:
        raise ValueError("size must be nonnegative")
    ps = list(_partitions_of(n, n if n else 1))
    if max_length is not None:
        ps = [p for p in ps if len(p) <= max_length]
    return ps
