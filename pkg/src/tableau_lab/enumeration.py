"""
Exact counting: Kostka numbers, standard tableaux, rectangular Catalan
numbers, brute-force permutation classes and colored noncrossing partitions.

Every count is a Python ``int``, so nothing ever wraps or rounds.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import factorial, prod
from typing import Iterator, Sequence

from .errors import DomainError, ResourceError
from .rsk import has_block_head, has_disjoint_lis_block, has_lis_prefix, lis_length
from .tableaux import Column, Diagram, SkewWeight, Tableau, normalize_content, rectangle

DEFAULT_MAX_M = 9
MAX_M_ENV = "TABLEAU_LAB_MAX_M"

PERM_CLASSES = ("lis-at-most", "lis-prefix", "block-head", "disjoint-lis")


def _check_sizes(shape: Diagram, content: Sequence[int]) -> tuple[int, ...]:
    content = normalize_content(content)
    if shape.size != sum(content):
        raise DomainError(
            f"shape has {shape.size} cells but content {content} sums to {sum(content)}"
        )
    return content


def _next_columns(
    length: int, prev: Column, remaining: tuple[int, ...], columns_left: int
) -> Iterator[tuple[Column, tuple[int, ...]]]:
    """
    Columns of ``length`` distinct available values that can stand right of
    ``prev``, in lexicographic order, with the content left after using them.

    Prunes: a value may appear at most once per column, so afterwards no value
    may need more copies than there are columns left; and each cell must leave
    enough larger available values for the cells below it.
    """
    top = len(remaining)
    avail = [v for v in range(1, top + 1) if remaining[v - 1]]
    chosen: list[int] = []

    def extend(start: int) -> Iterator[Column]:
        j = len(chosen)
        if j == length:
            yield tuple(chosen)
            return
        low = prev[j] if j < len(prev) else 1
        if chosen:
            low = max(low, chosen[-1] + 1)
        for idx in range(start, len(avail)):
            v = avail[idx]
            if v < low:
                continue
            if len(avail) - idx < length - j:
                break
            chosen.append(v)
            yield from extend(idx + 1)
            chosen.pop()

    for col in extend(0):
        left = list(remaining)
        for v in col:
            left[v - 1] -= 1
        if max(left, default=0) > columns_left:
            continue
        yield col, tuple(left)


def enumerate_ssyt(shape: Diagram, content: Sequence[int]) -> Iterator[Tableau]:
    """
    Every semistandard tableau of ``shape`` and ``content``, once each, in
    lexicographic order of the column-major reading word.
    """
    content = _check_sizes(shape, content)
    lengths = shape.columns
    width = len(lengths)
    built: list[Column] = []

    def fill(i: int, prev: Column, remaining: tuple[int, ...]) -> Iterator[Tableau]:
        if i == width:
            yield Tableau(tuple(built))
            return
        for col, left in _next_columns(lengths[i], prev, remaining, width - i - 1):
            built.append(col)
            yield from fill(i + 1, col, left)
            built.pop()

    first = (0,) * (lengths[0] if lengths else 0)
    yield from fill(0, first, content)


def kostka(shape: Diagram, content: Sequence[int]) -> int:
    """Number of semistandard tableaux of ``shape`` and ``content``."""
    content = _check_sizes(shape, content)
    lengths = shape.columns
    width = len(lengths)

    @lru_cache(maxsize=None)
    def count(i: int, prev: Column, remaining: tuple[int, ...]) -> int:
        if i == width:
            return 1
        return sum(
            count(i + 1, col, left)
            for col, left in _next_columns(lengths[i], prev, remaining, width - i - 1)
        )

    return count(0, (0,) * (lengths[0] if lengths else 0), content)


def enumerate_syt(shape: Diagram) -> Iterator[Tableau]:
    return enumerate_ssyt(shape, (1,) * shape.size)


def count_syt_hook(shape: Diagram) -> int:
    """Standard tableaux of ``shape`` by the hook-length formula."""
    rows = shape.rows
    hooks = (
        (rows[j] - i - 1) + (length - j - 1) + 1
        for i, length in enumerate(shape.columns)
        for j in range(length)
    )
    return factorial(shape.size) // prod(hooks)


def superfactorial(k: int) -> int:
    """``1! * 2! * ... * k!``; the empty product for ``k = 0``."""
    if k < 0:
        raise DomainError(f"superfactorial of negative {k}")
    return prod(factorial(i) for i in range(1, k + 1))


def rect_catalan(n: int, m: int) -> int:
    """Standard tableaux of the rectangle ``n`` wide and ``m`` tall."""
    if n < 1 or m < 1:
        raise DomainError(f"rect_catalan needs n, m >= 1, got {n}, {m}")
    num = factorial(m * n) * superfactorial(m - 1) * superfactorial(n - 1)
    den = superfactorial(m + n - 1)
    assert num % den == 0
    return num // den


def catalan(n: int) -> int:
    return factorial(2 * n) // (factorial(n) * factorial(n + 1))


def brute_force_cap() -> int:
    raw = os.environ.get(MAX_M_ENV)
    if raw is None:
        return DEFAULT_MAX_M
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"{MAX_M_ENV}={raw!r} is not an integer") from None


def count_perm_class(
    cls: str, m: int, w: int, k: int = 1, cap: int | None = None
) -> int:
    """
    Count permutations of ``1..m`` in one of the classes

    - ``lis-at-most``: LIS length at most ``w``
    - ``lis-prefix``: ``(1, ..., w)`` is a longest increasing subsequence
    - ``block-head``: ``1..k*w`` fill the top ``k`` rows of the insertion tableau
    - ``disjoint-lis``: LIS ``w`` and ``1..k*w`` split into ``k`` disjoint LISs

    by scanning all of ``S_m``.
    """
    cap = brute_force_cap() if cap is None else cap
    if m > cap:
        raise ResourceError(f"m={m} exceeds the brute-force cap {cap}")
    if m < 0 or w < 1:
        raise DomainError(f"need m >= 0 and w >= 1, got m={m}, w={w}")
    if cls == "lis-at-most":
        test = lambda s: lis_length(s) <= w
    elif cls == "lis-prefix":
        if w > m:
            return 0
        test = lambda s: has_lis_prefix(s, w)
    elif cls in ("block-head", "disjoint-lis"):
        k = abs(k)
        if k < 1:
            raise DomainError("block classes need k != 0")
        if k * w > m:
            return 0
        pred = has_block_head if cls == "block-head" else has_disjoint_lis_block
        test = lambda s: pred(s, k, w)
    else:
        raise DomainError(f"unknown permutation class {cls!r}; expected one of {PERM_CLASSES}")
    return sum(1 for s in permutations(range(1, m + 1)) if test(s))


@dataclass(frozen=True)
class ColoredArcPartition:
    """
    A set partition of ``1..n`` drawn as arcs between consecutive elements of
    each block, each arc carrying a color in ``1..r``.
    """

    n: int
    blocks: tuple[tuple[int, ...], ...]
    arc_colors: tuple[int, ...]

    @property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        return _arcs(self.blocks)

    def is_noncrossing(self) -> bool:
        return not has_monochromatic_crossing(self.arcs, self.arc_colors)


def _arcs(blocks: Sequence[Sequence[int]]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted((a, b) for block in blocks for a, b in zip(block, block[1:])))


def has_monochromatic_crossing(
    arcs: Sequence[tuple[int, int]], colors: Sequence[int]
) -> bool:
    """
    The colored noncrossing condition: two arcs ``(i, j)``, ``(k, l)`` of the
    same color with ``i < k < j < l`` cross.  Swapping in a different
    definition of colored noncrossing partitions only touches this function.
    """
    for x, ((i, j), c) in enumerate(zip(arcs, colors)):
        for (k, l), d in zip(arcs[x + 1 :], colors[x + 1 :]):
            if c == d and (i < k < j < l or k < i < l < j):
                return True
    return False


def set_partitions(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All set partitions of ``1..n`` via restricted growth strings."""
    if n == 0:
        yield ()
        return
    labels = [0] * n

    def grow(i: int, used: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if i == n:
            blocks = [[] for _ in range(used)]
            for x, b in enumerate(labels, start=1):
                blocks[b].append(x)
            yield tuple(tuple(b) for b in blocks)
            return
        for b in range(used + 1):
            labels[i] = b
            yield from grow(i + 1, max(used, b + 1))

    labels[0] = 0
    yield from grow(1, 1)


def enumerate_colored_noncrossing(n: int, r: int) -> Iterator[ColoredArcPartition]:
    if n < 0 or r < 1:
        raise DomainError(f"need n >= 0 and r >= 1, got n={n}, r={r}")
    for blocks in set_partitions(n):
        arcs = _arcs(blocks)
        for colors in product(range(1, r + 1), repeat=len(arcs)):
            if not has_monochromatic_crossing(arcs, colors):
                yield ColoredArcPartition(n, blocks, colors)


def count_colored_noncrossing(n: int, r: int) -> int:
    """Exhaustive count of ``r``-colored arc partitions of ``1..n`` with no
    same-color crossing."""
    return sum(1 for _ in enumerate_colored_noncrossing(n, r))


def skew_kostka(w: int, n: int, k: int, a: int | None = None) -> int:
    """Kostka number of the ``w`` by ``n`` rectangle with the skew content for
    ``(n, k, a)``; ``a`` defaults to ``w - 1``."""
    a = w - 1 if a is None else a
    return kostka(rectangle(w, n), SkewWeight(n, k, a).expand())
