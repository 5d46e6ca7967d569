"""Plumbing for dense 0-based operation tables and index maps."""

from __future__ import annotations

from collections.abc import Iterable, Sequence


def square_table(rows: Iterable[Sequence[int]], what: str = "table") -> tuple[tuple[int, ...], ...]:
    """Normalize to an n x n tuple matrix with entries in range(n)."""
    table = tuple(tuple(int(x) for x in row) for row in rows)
    n = len(table)
    if n == 0:
        raise ValueError(f"{what} must be nonempty")
    for i, row in enumerate(table):
        if len(row) != n:
            raise ValueError(f"{what} row {i} has length {len(row)}, expected {n}")
        for j, x in enumerate(row):
            if not 0 <= x < n:
                raise ValueError(f"{what}[{i}][{j}] = {x} is out of range(0, {n})")
    return table


def rect_table(
    rows: Iterable[Sequence[int]],
    height: int,
    width: int,
    bound: int,
    what: str = "table",
) -> tuple[tuple[int, ...], ...]:
    """Normalize to a height x width tuple matrix with entries in range(bound)."""
    table = tuple(tuple(int(x) for x in row) for row in rows)
    if len(table) != height:
        raise ValueError(f"{what} has {len(table)} rows, expected {height}")
    for i, row in enumerate(table):
        if len(row) != width:
            raise ValueError(f"{what} row {i} has length {len(row)}, expected {width}")
        for j, x in enumerate(row):
            if not 0 <= x < bound:
                raise ValueError(f"{what}[{i}][{j}] = {x} is out of range(0, {bound})")
    return table


def index_row(values: Iterable[int], length: int, bound: int, what: str = "map") -> tuple[int, ...]:
    row = tuple(int(x) for x in values)
    if len(row) != length:
        raise ValueError(f"{what} has length {len(row)}, expected {length}")
    for j, x in enumerate(row):
        if not 0 <= x < bound:
            raise ValueError(f"{what}[{j}] = {x} is out of range(0, {bound})")
    return row


def check_index(i: int, n: int, what: str = "index") -> int:
    i = int(i)
    if not 0 <= i < n:
        raise ValueError(f"{what} {i} is out of range(0, {n})")
    return i


def label_row(labels: Iterable[str] | None, n: int) -> tuple[str, ...] | None:
    if labels is None:
        return None
    row = tuple(str(x) for x in labels)
    if len(row) != n:
        raise ValueError(f"labels have length {len(row)}, expected {n}")
    return row
