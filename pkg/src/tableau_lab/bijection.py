"""
Bijection between rectangular tableaux with skewed content and pairs of
standard tableaux.

A semistandard tableau ``R`` of the ``w`` by ``n`` rectangle with content
``SkewWeight(n, k, w - 1)`` holds ``w - 1`` copies of each *low* value
``1..n-k`` and one copy of each *high* value ``n-k+1..2n+k(w-2)``.  The
forward map

1. cuts the high cells out of the bottom-right corner, rotates them by 180
   degrees and relabels ``x -> 2n + k(w-2) + 1 - x`` to get a standard ``Q'``;
2. complements what is left (the low part) in ``[n-k]`` to get ``P''``;
3. keeps ``(P', Q) = (P'', Q')`` for ``k >= 0`` and swaps them for ``k < 0``;
4. shifts ``P'`` up by ``|k| * w``;
5. stacks a standard ``|k|``-row, ``w``-wide block ``M`` on top of ``P'``.

For ``k = 0`` steps 3-5 are the identity and this is the base map onto pairs
of width at most ``w``; composing with inverse RSK gives permutations whose
LIS is at most ``w``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterator

from .complement import tableau_complement
from .enumeration import enumerate_ssyt, enumerate_syt
from .errors import DomainError, MembershipError, ShapeError, ValidationError
from .rsk import TableauPair
from .tableaux import (
    SkewWeight,
    Tableau,
    content_of,
    is_standard,
    rect_subtract_tableau,
    rectangle,
    violations,
)

EMPTY = Tableau()


@dataclass(frozen=True)
class BijectionParams:
    w: int
    n: int
    k: int = 0

    def __post_init__(self) -> None:
        if self.w < 2:
            raise DomainError(f"width w={self.w} must be at least 2")
        if self.n < 1:
            raise DomainError(f"height n={self.n} must be at least 1")
        if self.k > self.n or self.n + self.k * (self.w - 1) < 0:
            raise DomainError(
                f"k={self.k} outside [-n/(w-1), n] for w={self.w}, n={self.n}"
            )

    @property
    def weight(self) -> SkewWeight:
        return SkewWeight(self.n, self.k, self.w - 1)

    @property
    def low(self) -> int:
        """Largest value that appears ``w - 1`` times in ``R``."""
        return self.n - self.k

    @property
    def top(self) -> int:
        """Largest value in ``R``."""
        return 2 * self.n + self.k * (self.w - 2)

    @property
    def block(self) -> int:
        """Number of values taken by the stacked block ``M``."""
        return abs(self.k) * self.w

    @property
    def m(self) -> int:
        """Size of the permutations on the other side of the bijection."""
        if self.k >= 0:
            return self.n + self.k * (self.w - 1)
        return self.n - self.k


def _require_standard(t: Tableau, what: str) -> None:
    if not is_standard(t):
        raise ValidationError(f"{what} is not a standard tableau: {violations(t) or t.rows}")


def _check_r(r: Tableau, params: BijectionParams) -> None:
    if r.shape != rectangle(params.w, params.n):
        raise ValidationError(
            f"R has column lengths {r.shape.columns}, expected the {params.w}x{params.n} rectangle"
        )
    bad = violations(r)
    if bad:
        raise ValidationError("R is not semistandard: " + "; ".join(bad))
    if content_of(r) != params.weight.expand():
        raise ValidationError(
            f"R has content {content_of(r)}, expected {params.weight.expand()}"
        )


def _check_block(m: Tableau, params: BijectionParams) -> None:
    if m.shape != rectangle(params.w, abs(params.k)):
        raise ValidationError(
            f"M has rows {m.shape.rows}, expected {abs(params.k)} rows of length {params.w}"
        )
    _require_standard(m, "M")


def extract_q(
    r: Tableau, params: BijectionParams
) -> tuple[tuple[tuple[tuple[int, int], int], ...], Tableau]:
    """
    Split off the high values of ``R``.

    Returns the high cells as ``((column, row), value)`` with 1-based
    coordinates, and the standard tableau ``Q'`` they rotate and relabel to.
    """
    _check_r(r, params)
    w, n, low, top = params.w, params.n, params.low, params.top
    cells = tuple(
        ((i + 1, j + 1), x)
        for i, col in enumerate(r.columns)
        for j, x in enumerate(col)
        if x > low
    )
    tails = [tuple(x for x in col if x > low) for col in r.columns]
    try:
        q = Tableau(tuple(tuple(top + 1 - x for x in reversed(tails[w - 1 - i])) for i in range(w)))
    except ShapeError as exc:
        raise ValidationError(f"high values of R do not form a bottom-right skew region: {exc}")
    _require_standard(q, "Q'")
    return cells, q


def _forward(r: Tableau, params: BijectionParams, m: Tableau) -> TableauPair:
    w, k = params.w, params.k
    _, q1 = extract_q(r, params)
    p2 = tableau_complement(rect_subtract_tableau(r, q1), w, params.low)
    for i in range(w):
        if len(p2.column(i)) != len(q1.column(i)) - k:
            raise ValidationError(
                f"column {i + 1}: P'' has {len(p2.column(i))} cells, Q' has {len(q1.column(i))}"
            )
    _require_standard(p2, "P''")

    p1, q = (p2, q1) if k >= 0 else (q1, p2)
    shift = params.block
    p1 = Tableau(tuple(tuple(x + shift for x in col) for col in p1.columns))
    p = Tableau(tuple(m.column(i) + p1.column(i) for i in range(max(m.width, p1.width))))

    _require_standard(p, "P")
    _require_standard(q, "Q")
    if p.shape != q.shape:
        raise ValidationError(f"P has rows {p.shape.rows} but Q has rows {q.shape.rows}")
    return TableauPair(p, q)


def _inverse(pair: TableauPair, params: BijectionParams) -> tuple[Tableau, Tableau]:
    p, q = pair
    w, n, k = params.w, params.n, params.k
    _require_standard(p, "P")
    _require_standard(q, "Q")
    if p.shape != q.shape:
        raise ValidationError(f"P has rows {p.shape.rows} but Q has rows {q.shape.rows}")
    if p.size != params.m:
        raise ValidationError(f"pair has {p.size} cells, expected m={params.m}")

    rows = p.rows
    b = abs(k)
    if k == 0:
        if p.width > w:
            raise DomainError(f"pair has width {p.width}, more than w={w}")
    elif (
        p.width != w
        or len(rows) < b
        or any(len(row) != w for row in rows[:b])
        or sorted(x for row in rows[:b] for x in row) != list(range(1, params.block + 1))
    ):
        raise MembershipError(
            f"the values 1..{params.block} do not fill the top {b} rows of P "
            f"(each of length {w}); P rows: {rows}"
        )
    m = Tableau.from_rows(rows[:b])
    p1 = Tableau.from_rows([[x - params.block for x in row] for row in rows[b:]])
    p2, q1 = (p1, q) if k >= 0 else (q, p1)

    if p2.width > w or q1.shape.height > n:
        raise MembershipError(f"pair does not fit the {w}x{n} rectangle")
    low_part = tableau_complement(p2, w, params.low)
    r = Tableau(
        tuple(
            low_part.column(i)
            + tuple(params.top + 1 - x for x in reversed(q1.column(w - 1 - i)))
            for i in range(w)
        )
    )
    _check_r(r, params)
    return r, m


def forward_base(r: Tableau, w: int, n: int) -> TableauPair:
    """Map ``R`` (content ``n`` copies of ``w-1`` then ``n`` ones) to a pair of
    standard tableaux of width at most ``w``."""
    return _forward(r, BijectionParams(w, n, 0), EMPTY)


def inverse_base(pair: TableauPair, w: int, n: int) -> Tableau:
    return _inverse(pair, BijectionParams(w, n, 0))[0]


def forward_skew(r: Tableau, params: BijectionParams, m: Tableau) -> TableauPair:
    if params.k == 0:
        warnings.warn("k=0 has no block M; using forward_base", stacklevel=2)
        return forward_base(r, params.w, params.n)
    _check_block(m, params)
    return _forward(r, params, m)


def inverse_skew(pair: TableauPair, params: BijectionParams) -> tuple[Tableau, Tableau]:
    """
    Undo :func:`forward_skew`: strip the block ``M`` off the top ``|k|`` rows of
    ``P`` and rebuild ``R``.

    Raises :class:`MembershipError` when the values ``1..|k|w`` do not fill
    those rows, i.e. the pair lies outside the image.
    """
    if params.k == 0:
        warnings.warn("k=0 has no block M; using inverse_base", stacklevel=2)
        return inverse_base(pair, params.w, params.n), EMPTY
    return _inverse(pair, params)


def enumerate_m_blocks(k: int, w: int) -> list[Tableau]:
    """Standard fillings of ``|k|`` rows of length ``w``, ordered by row word."""
    if k == 0:
        raise DomainError("k=0 has no block")
    return sorted(enumerate_syt(rectangle(w, abs(k))), key=Tableau.row_word)


def rectangular_tableaux(params: BijectionParams) -> Iterator[Tableau]:
    """Every valid input ``R`` for ``params``."""
    return enumerate_ssyt(rectangle(params.w, params.n), params.weight.expand())
