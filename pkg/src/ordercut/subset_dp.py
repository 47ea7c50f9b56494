"""Subset dynamic programs over vertex bitmasks.

Each solver fills a table indexed by vertex subsets S, where the entry is the
best cost of placing S as the first |S| positions of an ordering:

    fas:       f(S) = min_{v in S} f(S-v) + w(arcs from v into S-v)
    ola:       f(S) = crossing(S) + min_v f(S-v)
    cutwidth:  f(S) = max(crossing(S), min_v f(S-v))
    dpw:       f(S) = max(boundary(S), min_v f(S-v))

crossing(S) is the weight of arcs from V-S into S and boundary(S) the number
of vertices in S with an in-neighbor outside S, both with respect to the whole
graph. The fas table is self-contained per subset, so fas_table(g, c) yields
the optimal feedback arc weight of every induced subgraph G[S] with |S| <= c.
Ties in the min always keep the smallest vertex index.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from . import guards
from .graph import Digraph, Ordering
from .report import Counters, SolveReport, finish


@dataclass
class SubsetTable:
    """Filled DP table. values/last_vertex map bitmask -> entry."""

    objective: str
    n: int
    size_cap: int
    values: dict[int, int]
    last_vertex: dict[int, int]
    entries: int

    def _mask(self, subset) -> int:
        if isinstance(subset, int):
            return subset
        return sum(1 << v for v in subset)

    def value_of(self, subset) -> int:
        mask = self._mask(subset)
        if mask not in self.values:
            raise ValueError("subset not in table (beyond size cap?)")
        return self.values[mask]

    def last_of(self, subset) -> int | None:
        mask = self._mask(subset)
        v = self.last_vertex[mask]
        return None if v < 0 else v

    def order_of(self, subset) -> tuple[int, ...]:
        """Vertices of the subset in table-optimal placement order."""
        mask = self._mask(subset)
        rev = []
        while mask:
            v = self.last_vertex[mask]
            rev.append(v)
            mask ^= 1 << v
        return tuple(reversed(rev))


def _check_size(n: int, cap: int) -> int:
    guards.check_universe(n)
    if not 0 <= cap <= n:
        raise ValueError(f"size cap {cap} outside 0..{n}")
    entries = sum(math.comb(n, s) for s in range(cap + 1))
    guards.check(entries, guards.TABLE_ENTRY_GUARD, "subset table entries")
    return entries


def _masks_by_size(n: int, cap: int) -> Iterable[int]:
    if cap == n:
        return range(1, 1 << n)
    def gen():
        for s in range(1, cap + 1):
            for combo in combinations(range(n), s):
                yield sum(1 << v for v in combo)
    return gen()


def fas_table(g: Digraph, size_cap: int | None = None) -> SubsetTable:
    """Minimum feedback arc weight of G[S] for every |S| <= size_cap."""
    n = g.n
    cap = n if size_cap is None else size_cap
    entries = _check_size(n, cap)
    out_pairs, out_mask = g.out_pairs, g.out_mask
    plain = not g.weighted
    values = {0: 0}
    last = {0: -1}
    for mask in _masks_by_size(n, cap):
        best = -1
        bestv = -1
        rest_bits = mask
        while rest_bits:
            bit = rest_bits & -rest_bits
            rest_bits ^= bit
            v = bit.bit_length() - 1
            prev = mask ^ bit
            if plain:
                cost = (out_mask[v] & prev).bit_count()
            else:
                cost = sum(w for x, w in out_pairs[v] if prev >> x & 1)
            cand = values[prev] + cost
            if best < 0 or cand < best:
                best, bestv = cand, v
        values[mask] = best
        last[mask] = bestv
    return SubsetTable("fas", n, cap, values, last, entries)


def _crossing_table(g: Digraph, cap: int) -> dict[int, int]:
    """crossing(S) = weight of arcs from V-S into S, for all |S| <= cap."""
    n = g.n
    in_pairs, out_pairs = g.in_pairs, g.out_pairs
    in_mask, out_mask = g.in_mask, g.out_mask
    plain = not g.weighted
    full = (1 << n) - 1
    cross = {0: 0}
    for mask in _masks_by_size(n, cap):
        bit = mask & -mask
        v = bit.bit_length() - 1
        prev = mask ^ bit
        outside = full & ~mask
        if plain:
            gained = (in_mask[v] & outside).bit_count()
            lost = (out_mask[v] & prev).bit_count()
        else:
            gained = sum(w for u, w in in_pairs[v] if outside >> u & 1)
            lost = sum(w for x, w in out_pairs[v] if prev >> x & 1)
        cross[mask] = cross[prev] + gained - lost
    return cross


def _min_prev(values: dict[int, int], mask: int) -> tuple[int, int]:
    """min over v in mask of values[mask - v]; smallest v wins ties."""
    best = -1
    bestv = -1
    bits = mask
    while bits:
        bit = bits & -bits
        bits ^= bit
        prev_val = values[mask ^ bit]
        if best < 0 or prev_val < best:
            best = prev_val
            bestv = bit.bit_length() - 1
    return best, bestv


def _prefix_table(g: Digraph, cap: int, objective: str) -> SubsetTable:
    n = g.n
    entries = _check_size(n, cap)
    values = {0: 0}
    last = {0: -1}
    if objective in ("ola", "cutwidth"):
        cross = _crossing_table(g, cap)
        for mask in _masks_by_size(n, cap):
            prev_best, bestv = _min_prev(values, mask)
            c = cross[mask]
            values[mask] = c + prev_best if objective == "ola" else max(c, prev_best)
            last[mask] = bestv
    else:  # dpw
        in_mask = g.in_mask
        full = (1 << n) - 1
        for mask in _masks_by_size(n, cap):
            outside = full & ~mask
            boundary = 0
            bits = mask
            while bits:
                bit = bits & -bits
                bits ^= bit
                if in_mask[bit.bit_length() - 1] & outside:
                    boundary += 1
            prev_best, bestv = _min_prev(values, mask)
            values[mask] = max(boundary, prev_best)
            last[mask] = bestv
    return SubsetTable(objective, n, cap, values, last, entries)


def dpw_prefix_table(g: Digraph, size_cap: int) -> SubsetTable:
    """Best achievable max-boundary over orderings of each |S| <= size_cap,
    with boundaries taken in the whole graph."""
    return _prefix_table(g, size_cap, "dpw")


def _exact(g: Digraph, objective: str) -> SolveReport:
    t0 = time.perf_counter()
    n = g.n
    guards.check(n, guards.EXACT_DP_GUARD, f"{objective}_exact vertex count")
    if objective == "fas":
        table = fas_table(g)
    else:
        table = _prefix_table(g, n, objective)
    full = (1 << n) - 1
    value = table.values[full]
    ordering = Ordering.from_sequence(table.order_of(full))
    millis = (time.perf_counter() - t0) * 1000.0
    report = SolveReport(objective, value, ordering, value,
                         Counters(table_entries=table.entries, calls=1), millis)
    return finish(report, g)


def fas_exact(g: Digraph) -> SolveReport:
    """Minimum-weight feedback arc set via the subset DP."""
    return _exact(g, "fas")


def ola_exact(g: Digraph) -> SolveReport:
    """Optimal linear arrangement via the subset DP."""
    return _exact(g, "ola")


def cutwidth_exact(g: Digraph) -> SolveReport:
    """Directed cutwidth via the subset DP."""
    return _exact(g, "cutwidth")


def dpw_exact(g: Digraph) -> SolveReport:
    """Directed pathwidth via the subset DP (weights ignored)."""
    return _exact(g, "dpw")
