"""Column and tableau complements with respect to ``[n]``."""

from __future__ import annotations

from .errors import DomainError
from .tableaux import Column, Tableau


def column_complement(col: Column, n: int) -> Column:
    """
    ``[n]`` minus the entries of ``col``, in increasing order.

    >>> column_complement((2, 4), 4)
    (1, 3)
    """
    present = set(col)
    if any(x < 1 or x > n for x in present):
        raise DomainError(f"column {tuple(col)} has entries outside [1, {n}]")
    return tuple(x for x in range(1, n + 1) if x not in present)


def column_precedes(u: Column, v: Column) -> bool:
    """True iff ``u`` may stand left of ``v`` in a tableau: ``u`` is at least as
    long and dominated entrywise over the length of ``v``."""
    return len(u) >= len(v) and all(a <= b for a, b in zip(u, v))


def tableau_complement(p: Tableau, w: int, n: int) -> Tableau:
    """
    Complement every column in ``[n]`` and reverse the column order.

    ``p`` is treated as having exactly ``w`` columns, the missing ones empty,
    so an empty column becomes the full column ``(1, ..., n)``.
    """
    if p.width > w:
        raise DomainError(f"tableau has {p.width} columns, more than w={w}")
    return Tableau(tuple(column_complement(p.column(w - 1 - i), n) for i in range(w)))
