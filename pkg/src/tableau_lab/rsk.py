"""
Permutations, longest increasing subsequences and the Robinson-Schensted
correspondence.

Permutations are tuples in one-line notation over ``1..m``.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from itertools import combinations
from typing import NamedTuple, Sequence

from .errors import DomainError, ValidationError
from .tableaux import Tableau, is_standard

Permutation = tuple[int, ...]


class TableauPair(NamedTuple):
    P: Tableau
    Q: Tableau


def check_permutation(values: Sequence[int]) -> Permutation:
    perm = tuple(int(x) for x in values)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise DomainError(f"{perm} is not a permutation of 1..{len(perm)}")
    return perm


def parse_permutation(text: str) -> Permutation:
    """Parse space (or comma) separated one-line notation, e.g. ``"3 1 4 2"``."""
    try:
        values = [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError as exc:
        raise DomainError(f"cannot parse permutation {text!r}") from exc
    return check_permutation(values)


def lis_length(perm: Sequence[int]) -> int:
    """Length of a longest strictly increasing subsequence (patience sorting)."""
    tops: list[int] = []
    for x in perm:
        i = bisect_left(tops, x)
        if i == len(tops):
            tops.append(x)
        else:
            tops[i] = x
    return len(tops)


def rsk(perm: Sequence[int]) -> TableauPair:
    """Row-insert ``perm`` left to right; return insertion and recording tableaux."""
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, x in enumerate(perm, start=1):
        j = 0
        while True:
            if j == len(p_rows):
                p_rows.append([x])
                q_rows.append([step])
                break
            row = p_rows[j]
            i = bisect_right(row, x)
            if i == len(row):
                row.append(x)
                q_rows[j].append(step)
                break
            row[i], x = x, row[i]
            j += 1
    return TableauPair(Tableau.from_rows(p_rows), Tableau.from_rows(q_rows))


def rsk_inverse(pair: TableauPair) -> Permutation:
    """Recover the permutation from its insertion/recording pair by reverse bumping."""
    p, q = pair
    if p.shape != q.shape:
        raise ValidationError(f"P and Q have different shapes {p.shape.rows} and {q.shape.rows}")
    if not (is_standard(p) and is_standard(q)):
        raise ValidationError("P and Q must both be standard tableaux")
    p_rows = [list(r) for r in p.rows]
    where = {}
    for j, row in enumerate(q.rows):
        for i, v in enumerate(row):
            where[v] = (j, i)
    m = p.size
    out = [0] * m
    for step in range(m, 0, -1):
        j, i = where[step]
        x = p_rows[j].pop()
        assert i == len(p_rows[j])
        for row in reversed(p_rows[:j]):
            # the largest entry smaller than x is bumped back up a row
            k = bisect_left(row, x) - 1
            row[k], x = x, row[k]
        out[step - 1] = x
    return tuple(out)


def has_lis_prefix(perm: Sequence[int], w: int) -> bool:
    """True iff ``(1, ..., w)`` is a longest increasing subsequence of ``perm``."""
    if lis_length(perm) != w:
        return False
    pos = {v: i for i, v in enumerate(perm)}
    return all(pos[v] < pos[v + 1] for v in range(1, w))


def has_block_head(perm: Sequence[int], k: int, w: int) -> bool:
    """
    True iff the insertion tableau of ``perm`` has the values ``1..k*w``
    filling exactly its top ``k`` rows, each of length ``w``.
    """
    rows = rsk(perm).P.rows
    if len(rows) < k or any(len(row) != w for row in rows[:k]):
        return False
    return sorted(x for row in rows[:k] for x in row) == list(range(1, k * w + 1))


def has_disjoint_lis_block(perm: Sequence[int], k: int, w: int) -> bool:
    """
    True iff the LIS length is ``w`` and the values ``1..k*w`` split into ``k``
    disjoint increasing subsequences of length ``w``.

    Exhaustive search; only meant for small inputs.
    """
    if lis_length(perm) != w:
        return False
    pos = {v: i for i, v in enumerate(perm)}

    def split(free: tuple[int, ...]) -> bool:
        if not free:
            return True
        # the smallest free value must start one of the chains
        head, rest = free[0], free[1:]
        for tail in combinations(rest, w - 1):
            chain = (head,) + tail
            if all(pos[a] < pos[b] for a, b in zip(chain, chain[1:])):
                used = set(tail)
                if split(tuple(v for v in rest if v not in used)):
                    return True
        return False

    return split(tuple(range(1, k * w + 1)))
