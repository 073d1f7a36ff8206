"""
Young diagrams and tableaux stored column by column.

A diagram is the tuple of its *column* lengths, left to right, so the
rectangle with width ``w`` and height ``h`` is ``(h,) * w``.  A tableau is the
tuple of its columns, each listed top to bottom.  Row views are derived on
demand and never stored.

>>> t = Tableau.from_rows([[1, 1, 2], [2, 3, 4], [3, 4]])
>>> t.columns
((1, 2, 3), (1, 3, 4), (2, 4))
>>> classify_tableau(t)
'semistandard'
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError, ShapeError

Column = tuple[int, ...]

INVALID = "invalid"
SEMISTANDARD = "semistandard"
STANDARD = "standard"


def _strip_trailing(values: Sequence) -> tuple:
    values = list(values)
    while values and not values[-1]:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class Diagram:
    """A Young diagram given by weakly decreasing column lengths."""

    columns: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        cols = tuple(int(c) for c in self.columns)
        if any(c < 0 for c in cols):
            raise ShapeError(f"negative column length in {cols}")
        for left, right in zip(cols, cols[1:]):
            if right > left:
                raise ShapeError(f"column lengths {cols} are not weakly decreasing")
        object.__setattr__(self, "columns", _strip_trailing(cols))

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> Diagram:
        rows = [r for r in rows if r]
        for upper, lower in zip(rows, rows[1:]):
            if lower > upper:
                raise ShapeError(f"row lengths {tuple(rows)} are not weakly decreasing")
        width = rows[0] if rows else 0
        return cls(tuple(sum(1 for r in rows if r > i) for i in range(width)))

    @property
    def rows(self) -> tuple[int, ...]:
        height = self.columns[0] if self.columns else 0
        return tuple(sum(1 for c in self.columns if c > j) for j in range(height))

    @property
    def width(self) -> int:
        return len(self.columns)

    @property
    def height(self) -> int:
        return self.columns[0] if self.columns else 0

    @property
    def size(self) -> int:
        return sum(self.columns)

    def column(self, i: int) -> int:
        """Length of the ``i``-th column (0-based); zero past the right edge."""
        return self.columns[i] if i < len(self.columns) else 0

    def to_json(self) -> dict:
        return {"columns": list(self.columns)}

    @classmethod
    def from_json(cls, data: dict) -> Diagram:
        return cls(tuple(data["columns"]))


@dataclass(frozen=True)
class RectShape:
    width: int
    height: int

    def __post_init__(self) -> None:
        if self.width < 1 or self.height < 1:
            raise ShapeError(f"rectangle {self.width}x{self.height} must be at least 1x1")

    @property
    def diagram(self) -> Diagram:
        return Diagram((self.height,) * self.width)


def rectangle(width: int, height: int) -> Diagram:
    """The ``width`` by ``height`` rectangle as a :class:`Diagram`."""
    return RectShape(width, height).diagram


@dataclass(frozen=True)
class Tableau:
    """
    A filling of a Young diagram, column-major.

    Construction only checks the structure (column lengths weakly decreasing,
    positive integer entries).  Whether the filling is semistandard is
    answered by :func:`classify_tableau`.  Trailing empty columns are dropped
    so that equality does not depend on padding.
    """

    columns: tuple[Column, ...] = ()

    def __post_init__(self) -> None:
        cols = tuple(tuple(int(x) for x in col) for col in self.columns)
        for col in cols:
            for x in col:
                if x < 1:
                    raise ShapeError(f"entry {x} is not a positive integer")
        for i, (left, right) in enumerate(zip(cols, cols[1:])):
            if len(right) > len(left):
                raise ShapeError(
                    f"column {i + 2} (length {len(right)}) is longer than "
                    f"column {i + 1} (length {len(left)})"
                )
        object.__setattr__(self, "columns", _strip_trailing(cols))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> Tableau:
        rows = [list(r) for r in rows if len(r)]
        for j, (upper, lower) in enumerate(zip(rows, rows[1:])):
            if len(lower) > len(upper):
                raise ShapeError(f"row {j + 2} is longer than row {j + 1}")
        width = len(rows[0]) if rows else 0
        return cls(tuple(tuple(r[i] for r in rows if len(r) > i) for i in range(width)))

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        height = len(self.columns[0]) if self.columns else 0
        return tuple(
            tuple(col[j] for col in self.columns if len(col) > j) for j in range(height)
        )

    @property
    def shape(self) -> Diagram:
        return Diagram(tuple(len(c) for c in self.columns))

    @property
    def width(self) -> int:
        return len(self.columns)

    @property
    def size(self) -> int:
        return sum(len(c) for c in self.columns)

    def column(self, i: int) -> Column:
        """The ``i``-th column (0-based); empty past the right edge."""
        return self.columns[i] if i < len(self.columns) else ()

    def entries(self) -> Iterable[int]:
        for col in self.columns:
            yield from col

    def reading_word(self) -> tuple[int, ...]:
        """Entries in column-major order (the canonical enumeration key)."""
        return tuple(self.entries())

    def row_word(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.rows)

    def to_json(self, width: int | None = None) -> dict:
        width = self.width if width is None else max(width, self.width)
        cols = [list(c) for c in self.columns] + [[] for _ in range(width - self.width)]
        return {"width": width, "columns": cols}

    @classmethod
    def from_json(cls, data: dict) -> Tableau:
        if not isinstance(data, dict) or "columns" not in data:
            raise ShapeError("tableau JSON must be an object with a 'columns' list")
        cols = data["columns"]
        if not isinstance(cols, list) or not all(isinstance(c, list) for c in cols):
            raise ShapeError("'columns' must be a list of lists")
        for col in cols:
            if not all(isinstance(x, int) and not isinstance(x, bool) for x in col):
                raise ShapeError(f"column {col} holds a non-integer entry")
        width = data.get("width", len(cols))
        if not isinstance(width, int) or width < len(cols):
            raise ShapeError(f"width {width!r} is smaller than the {len(cols)} listed columns")
        return cls(tuple(tuple(c) for c in cols))

    def dumps(self, width: int | None = None) -> str:
        return json.dumps(self.to_json(width), separators=(",", ":"))


def violations(t: Tableau) -> list[str]:
    """
    Describe every cell where ``t`` breaks semistandardness.

    Cells are reported as ``(column, row)`` with 1-based indices.
    """
    problems = []
    for i, col in enumerate(t.columns):
        for j, (upper, lower) in enumerate(zip(col, col[1:])):
            if lower <= upper:
                problems.append(
                    f"column {i + 1} not strictly increasing: "
                    f"cell ({i + 1},{j + 1})={upper} above cell ({i + 1},{j + 2})={lower}"
                )
    for i, (left, right) in enumerate(zip(t.columns, t.columns[1:])):
        for j, (a, b) in enumerate(zip(left, right)):
            if b < a:
                problems.append(
                    f"row {j + 1} decreases: cell ({i + 1},{j + 1})={a} "
                    f"left of cell ({i + 2},{j + 1})={b}"
                )
    return problems


def classify_tableau(t: Tableau) -> str:
    """Return ``'invalid'``, ``'semistandard'`` or ``'standard'``."""
    if not isinstance(t, Tableau):
        # structural checks (weakly decreasing column lengths) raise ShapeError
        t = Tableau(tuple(tuple(c) for c in t))
    if violations(t):
        return INVALID
    if sorted(t.entries()) == list(range(1, t.size + 1)):
        return STANDARD
    return SEMISTANDARD


def is_semistandard(t: Tableau) -> bool:
    return classify_tableau(t) != INVALID


def is_standard(t: Tableau) -> bool:
    return classify_tableau(t) == STANDARD


def content_of(t: Tableau) -> tuple[int, ...]:
    """
    Multiplicity vector of the entries; position ``i`` counts value ``i + 1``.

    Trailing zeros are trimmed so equal contents compare equal.
    """
    top = max(t.entries(), default=0)
    counts = [0] * top
    for x in t.entries():
        counts[x - 1] += 1
    return tuple(counts)


def normalize_content(content: Iterable[int]) -> tuple[int, ...]:
    content = tuple(int(c) for c in content)
    if any(c < 0 for c in content):
        raise DomainError(f"content {content} has a negative multiplicity")
    return _strip_trailing(content)


@dataclass(frozen=True)
class SkewWeight:
    """
    The content ``n - k`` copies of ``a`` followed by ``a*k + n`` copies of 1.

    >>> SkewWeight(5, 1, 2).expand()
    (2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1)
    """

    n: int
    k: int
    a: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.a < 1:
            raise DomainError(f"skew weight needs n >= 1 and a >= 1, got n={self.n}, a={self.a}")
        if self.n - self.k < 0 or self.n + self.a * self.k < 0:
            raise DomainError(
                f"k={self.k} outside [-n/a, n] for n={self.n}, a={self.a}"
            )

    def expand(self) -> tuple[int, ...]:
        return normalize_content((self.a,) * (self.n - self.k) + (1,) * (self.a * self.k + self.n))

    @property
    def total(self) -> int:
        return (self.a + 1) * self.n


def expand_skew_weight(s: SkewWeight) -> tuple[int, ...]:
    return s.expand()


def rect_subtract_shape(rect: RectShape, shape: Diagram) -> Diagram:
    """
    Remove ``shape``, rotated by 180 degrees, from the bottom-right of ``rect``.

    Column ``i`` of the result has ``h - shape[w - i + 1]`` cells (1-based),
    where ``shape`` is padded on the right with empty columns up to width ``w``.
    """
    w, h = rect.width, rect.height
    if shape.width > w or shape.height > h:
        raise ShapeError(f"diagram {shape.columns} does not fit in the {w}x{h} rectangle")
    return Diagram(tuple(h - shape.column(w - 1 - i) for i in range(w)))


def rect_subtract_tableau(r: Tableau, q: Tableau | Diagram) -> Tableau:
    """
    Keep, in each column ``i`` of the rectangular tableau ``r``, the
    ``h - |q_{w-i+1}|`` smallest entries.
    """
    shape = r.shape
    if len(set(shape.columns)) > 1 or not shape.columns:
        raise ShapeError(f"expected a rectangular tableau, got column lengths {shape.columns}")
    rect = RectShape(shape.width, shape.height)
    q_shape = q if isinstance(q, Diagram) else q.shape
    kept = rect_subtract_shape(rect, q_shape)
    return Tableau(tuple(col[: kept.column(i)] for i, col in enumerate(r.columns)))
