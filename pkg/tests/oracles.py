"""Slow, obviously-correct reference implementations used only by tests."""

from __future__ import annotations

from itertools import combinations, permutations

from tableau_lab.tableaux import Diagram, Tableau, violations


def lis_brute(perm) -> int:
    """Longest increasing subsequence by checking every subsequence."""
    for size in range(len(perm), 0, -1):
        for idx in combinations(range(len(perm)), size):
            vals = [perm[i] for i in idx]
            if all(a < b for a, b in zip(vals, vals[1:])):
                return size
    return 0


def ssyt_brute(shape: Diagram, content) -> list[Tableau]:
    """Every filling of ``shape`` by the multiset ``content`` that is semistandard.

    No pruning at all: tries each distinct arrangement of the multiset.
    """
    multiset = [v for v, c in enumerate(content, start=1) for _ in range(c)]
    assert len(multiset) == shape.size
    found = set()
    for arrangement in set(permutations(multiset)):
        cols, pos = [], 0
        for length in shape.columns:
            cols.append(tuple(arrangement[pos : pos + length]))
            pos += length
        t = Tableau(tuple(cols))
        if not violations(t):
            found.add(t)
    return sorted(found, key=Tableau.reading_word)


def increasing_value_sets(perm, size):
    """Sets of values forming an increasing subsequence of the given size."""
    for idx in combinations(range(len(perm)), size):
        vals = [perm[i] for i in idx]
        if all(a < b for a, b in zip(vals, vals[1:])):
            yield frozenset(vals)


def disjoint_block_brute(perm, k, w) -> bool:
    """LIS is ``w`` and ``1..kw`` is a disjoint union of ``k`` increasing
    subsequences of length ``w``, found by trying all ``k``-sets of them."""
    if lis_brute(perm) != w:
        return False
    target = frozenset(range(1, k * w + 1))
    chains = [s for s in set(increasing_value_sets(perm, w)) if s <= target]
    for pick in combinations(chains, k):
        if frozenset().union(*pick) == target and sum(map(len, pick)) == k * w:
            return True
    return False
