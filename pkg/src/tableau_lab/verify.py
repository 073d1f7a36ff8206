"""
Runs the counting identities over finite parameter grids and reports one row
per parameter tuple.

Each claim compares a Kostka number (or closed form) on the left with an
independent count on the right.  Rows are produced in a fixed parameter order
whether or not they are evaluated in parallel.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Sequence

from .enumeration import (
    brute_force_cap,
    catalan,
    count_colored_noncrossing,
    count_perm_class,
    count_syt_hook,
    enumerate_syt,
    kostka,
    rect_catalan,
    skew_kostka,
)
from .errors import DomainError, ResourceError
from .tableaux import Diagram, SkewWeight, rectangle

CLAIMS = ("eq1", "thm2.1", "thm2.2", "cor2.3", "cor2.5", "conj2.6", "hook", "rect-catalan")
CONJECTURES = frozenset({"conj2.6"})

NC_MODEL = (
    "candidate NC_2 model: arcs join consecutive elements of each block, "
    "each arc gets one of r colors, arcs of the same color may not cross"
)
NOTES = {
    "cor2.3": (
        "permutations are counted in S_m with m = n + w - 1 (the k = 1 case of the "
        "general block theorem); the printed corollary writes S_n"
    ),
    "conj2.6": NC_MODEL,
    "thm2.2": "lhs = K * A_{|k|,w} (number of blocks M); rhs = block-head count in S_m",
}

CSV_HEADER = ("claim", "params", "lhs", "rhs", "match", "elapsed_ms")


@dataclass
class VerifyReport:
    claim: str
    params: dict
    lhs: int | None
    rhs: int | None
    match: bool
    elapsed: float = 0.0
    skipped: bool = False
    note: str = field(default="")

    @property
    def params_text(self) -> str:
        return ";".join(f"{k}={v}" for k, v in self.params.items())

    def csv_row(self, timing: bool = True) -> tuple:
        if self.skipped:
            lhs = rhs = ""
            match = "skipped"
        else:
            lhs, rhs, match = self.lhs, self.rhs, str(self.match).lower()
        elapsed = f"{self.elapsed * 1000:.1f}" if timing else ""
        return (self.claim, self.params_text, lhs, rhs, match, elapsed)

    def to_json(self, timing: bool = True) -> dict:
        data = asdict(self)
        data["elapsed_ms"] = round(self.elapsed * 1000, 1) if timing else None
        del data["elapsed"]
        return data


@dataclass(frozen=True)
class Bounds:
    """Grid bounds; ``None`` means the claim's default."""

    max_n: int | None = None
    max_m: int | None = None
    max_cells: int | None = None
    max_size: int | None = None
    widths: tuple[int, ...] | None = None
    ks: tuple[int, ...] | None = None
    beyond_hypotheses: bool = False
    cap: int | None = None


def _pick(value, default):
    return default if value is None else value


def _skew_tuples(bounds: Bounds) -> Iterable[dict]:
    max_m = _pick(bounds.max_m, 8)
    for w in _pick(bounds.widths, (2, 3)):
        for absk in _pick(bounds.ks, (1, 2)):
            for k in (absk, -absk):
                for n in range(1, max_m + 1):
                    if not bounds.beyond_hypotheses and not w < n:
                        continue
                    try:
                        SkewWeight(n, k, w - 1)
                    except DomainError:
                        continue
                    m = n + k * (w - 1) if k > 0 else n - k
                    if m <= max_m:
                        yield {"w": w, "n": n, "k": k, "m": m}


def _symmetry_tuples(bounds: Bounds) -> Iterable[dict]:
    max_cells = _pick(bounds.max_cells, 15)
    for w in _pick(bounds.widths, (2, 3, 4)):
        for absk in _pick(bounds.ks, (1, 2)):
            for k in (absk, -absk):
                for n in range(1, max_cells // w + 1):
                    n2 = n + k * (w - 2)
                    if n2 < 1 or w * n2 > max_cells:
                        continue
                    try:
                        SkewWeight(n, k, w - 1)
                        SkewWeight(n2, -k, w - 1)
                    except DomainError:
                        continue
                    yield {"w": w, "n": n, "k": k, "n2": n2}


def _partitions(total: int, largest: int | None = None) -> Iterable[tuple[int, ...]]:
    largest = total if largest is None else largest
    if total == 0:
        yield ()
        return
    for part in range(min(total, largest), 0, -1):
        for rest in _partitions(total - part, part):
            yield (part,) + rest


def grid(claim: str, bounds: Bounds) -> list[dict]:
    if claim == "eq1":
        return [{"n": n} for n in range(1, _pick(bounds.max_n, 7) + 1)]
    if claim == "thm2.1":
        return [
            {"w": w, "n": n}
            for w in _pick(bounds.widths, (2, 3, 4))
            for n in range(2, _pick(bounds.max_n, 6) + 1)
        ]
    if claim == "thm2.2":
        return list(_skew_tuples(bounds))
    if claim == "cor2.3":
        max_m = _pick(bounds.max_m, 8)
        return [
            {"w": w, "n": n, "m": n + w - 1}
            for w in _pick(bounds.widths, (2, 3))
            for n in range(1, max_m - w + 2)
        ]
    if claim == "cor2.5":
        return list(_symmetry_tuples(bounds))
    if claim == "conj2.6":
        max_m = _pick(bounds.max_m, 8)
        return [{"w": w, "m": m} for w in _pick(bounds.widths, (2, 3)) for m in range(w, max_m + 1)]
    if claim == "hook":
        return [
            {"shape": "-".join(map(str, rows))}
            for size in range(1, _pick(bounds.max_size, 8) + 1)
            for rows in _partitions(size)
        ]
    if claim == "rect-catalan":
        max_cells = _pick(bounds.max_cells, 12)
        return [
            {"n": n, "m": m}
            for n in range(1, max_cells + 1)
            for m in range(1, max_cells // n + 1)
        ]
    raise DomainError(f"unknown claim {claim!r}; expected one of {', '.join(CLAIMS)}")


def _sides(claim: str, p: dict, cap: int) -> tuple[Callable[[], int], Callable[[], int]]:
    if claim == "eq1":
        n = p["n"]
        return (lambda: kostka(rectangle(2, n), (1,) * (2 * n))), (lambda: catalan(n))
    if claim == "thm2.1":
        w, n = p["w"], p["n"]
        return (
            lambda: skew_kostka(w, n, 0),
            lambda: count_perm_class("lis-at-most", n, w, cap=cap),
        )
    if claim == "thm2.2":
        w, n, k, m = p["w"], p["n"], p["k"], p["m"]
        return (
            lambda: skew_kostka(w, n, k) * rect_catalan(abs(k), w),
            lambda: count_perm_class("block-head", m, w, abs(k), cap=cap),
        )
    if claim == "cor2.3":
        w, n, m = p["w"], p["n"], p["m"]
        return (
            lambda: skew_kostka(w, n, 1),
            lambda: count_perm_class("lis-prefix", m, w, cap=cap),
        )
    if claim == "cor2.5":
        w, n, k, n2 = p["w"], p["n"], p["k"], p["n2"]
        return (lambda: skew_kostka(w, n, k)), (lambda: skew_kostka(w, n2, -k))
    if claim == "conj2.6":
        w, m = p["w"], p["m"]
        return (
            lambda: count_perm_class("lis-prefix", m, w, cap=cap),
            lambda: count_colored_noncrossing(m - w + 1, w - 1),
        )
    if claim == "hook":
        shape = Diagram.from_rows([int(x) for x in p["shape"].split("-")])
        return (lambda: count_syt_hook(shape)), (lambda: sum(1 for _ in enumerate_syt(shape)))
    if claim == "rect-catalan":
        n, m = p["n"], p["m"]
        return (
            lambda: rect_catalan(n, m),
            lambda: sum(1 for _ in enumerate_syt(rectangle(n, m))),
        )
    raise DomainError(f"unknown claim {claim!r}")


def evaluate(task: tuple[str, dict, int]) -> VerifyReport:
    claim, params, cap = task
    note = NOTES.get(claim, "")
    lhs_fn, rhs_fn = _sides(claim, params, cap)
    start = time.perf_counter()
    try:
        lhs, rhs = lhs_fn(), rhs_fn()
    except ResourceError as exc:
        return VerifyReport(claim, params, None, None, False, skipped=True, note=str(exc))
    return VerifyReport(claim, params, lhs, rhs, lhs == rhs, time.perf_counter() - start, note=note)


def run_verify(
    claims: str | Sequence[str], bounds: Bounds = Bounds(), jobs: int = 1
) -> list[VerifyReport]:
    """Evaluate every tuple of every claim; ``claims`` may be ``"all"``."""
    if isinstance(claims, str):
        claims = CLAIMS if claims == "all" else (claims,)
    cap = _pick(bounds.cap, brute_force_cap())
    tasks = [(c, p, cap) for c in claims for p in grid(c, bounds)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            return list(pool.map(evaluate, tasks))
    return [evaluate(t) for t in tasks]


def exit_code(reports: Iterable[VerifyReport]) -> int:
    """0 if everything matches, 1 on a theorem mismatch, 3 on a conjecture-only mismatch."""
    reports = [r for r in reports if not r.skipped]
    if any(not r.match for r in reports if r.claim not in CONJECTURES):
        return 1
    if any(not r.match for r in reports):
        return 3
    return 0


def format_csv(reports: Iterable[VerifyReport], timing: bool = True) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in reports:
        writer.writerow(r.csv_row(timing))
    return out.getvalue()


def format_json(reports: Iterable[VerifyReport], timing: bool = True) -> str:
    return json.dumps([r.to_json(timing) for r in reports], indent=1)
