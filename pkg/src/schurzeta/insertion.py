"""Schensted row insertion and dual (column) insertion with full bumping
routes.

Row insertion bumps the leftmost entry strictly greater than the incoming
value; column insertion bumps the topmost entry greater than or equal to
it, which keeps columns strict and rows weak.  Routes record one cell per
visited row (resp. column), ending at the newly created cell.
"""

from bisect import bisect_left, bisect_right
from typing import NamedTuple

from .tableaux import Tableau, Word, as_tableau, is_ssyt

Cell = tuple[int, int]


class InsertionResult(NamedTuple):
    tableau: Tableau
    route: tuple[Cell, ...]
    new_cell: Cell


def _require_ssyt(t) -> Tableau:
    t = as_tableau(t)
    if not is_ssyt(t):
        raise ValueError(f"not a semistandard tableau: {t}")
    return t


def row_insert(t, x: int) -> InsertionResult:
    """Insert x by Schensted row bumping; returns the new tableau, the
    bumping route, and the created cell."""
    t = _require_ssyt(t)
    if x < 1:
        raise ValueError(f"inserted value must be positive, got {x}")
    rows = [list(row) for row in t]
    route = []
    for i, row in enumerate(rows):
        pos = bisect_right(row, x)
        if pos == len(row):
            row.append(x)
            route.append((i + 1, pos + 1))
            return _finish(rows, route)
        route.append((i + 1, pos + 1))
        x, row[pos] = row[pos], x
    rows.append([x])
    route.append((len(rows), 1))
    return _finish(rows, route)


def column_insert(x: int, t) -> InsertionResult:
    """Insert x by dual Schensted column bumping (bump the topmost entry
    greater than or equal to x)."""
    t = _require_ssyt(t)
    if x < 1:
        raise ValueError(f"inserted value must be positive, got {x}")
    rows = [list(row) for row in t]
    route = []
    j = 0
    while True:
        col = [row[j] for row in rows if len(row) > j]
        pos = bisect_left(col, x)
        if pos == len(col):
            if pos == len(rows):
                rows.append([x])
            else:
                rows[pos].append(x)
            route.append((pos + 1, j + 1))
            return _finish(rows, route)
        route.append((pos + 1, j + 1))
        x, rows[pos][j] = rows[pos][j], x
        j += 1


def _finish(rows, route) -> InsertionResult:
    result = as_tableau(rows)  # rejects non-partition shapes
    return InsertionResult(result, tuple(route), route[-1])


def row_insert_word(t, word) -> tuple[Tableau, list[tuple[Cell, ...]]]:
    """Left-to-right fold of row_insert over the word."""
    t = _require_ssyt(t)
    routes = []
    for x in word:
        t, route, _ = row_insert(t, x)
        routes.append(route)
    return t, routes


def column_insert_word(word, t) -> tuple[Tableau, list[tuple[Cell, ...]]]:
    """Fold of column_insert applying word[0] first, word[-1] last."""
    t = _require_ssyt(t)
    routes = []
    for x in word:
        t, route, _ = column_insert(x, t)
        routes.append(route)
    return t, routes


def column_word(t) -> Word:
    """Entries of a single-column tableau, top to bottom."""
    t = as_tableau(t)
    if any(len(row) != 1 for row in t):
        raise ValueError(f"expected a single-column tableau, got {t}")
    return tuple(row[0] for row in t)
