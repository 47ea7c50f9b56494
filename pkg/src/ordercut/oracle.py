"""Brute-force optimum by trying every ordering.

Deliberately dumb: all n! orderings are enumerated and scored straight from
the objective definitions (vectorized with numpy for throughput, then the
winner is re-checked against the scalar evaluators). Used to certify the
exact solvers and every approximation ratio at desk scale.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import guards
from .graph import EVALUATORS, Digraph, Ordering


@dataclass(frozen=True)
class OracleResult:
    objective: str
    opt: int
    ordering: Ordering          # lexicographically least optimal sequence
    count: int                  # number of optimal orderings


@lru_cache(maxsize=16)
def _position_matrix(n: int) -> tuple[np.ndarray, np.ndarray]:
    """(sequences, positions): row r of sequences is the r-th permutation in
    lexicographic order; positions[r, v] is the 1-indexed spot of vertex v."""
    seqs = np.array(list(itertools.permutations(range(n))), dtype=np.int8)
    pos = np.argsort(seqs, axis=1).astype(np.int16) + 1
    return seqs, pos


def _all_values(g: Digraph, objective: str, pos: np.ndarray) -> np.ndarray:
    n = g.n
    arcs = g.arc_items
    rows = pos.shape[0]
    if objective == "fas":
        total = np.zeros(rows, dtype=np.int64)
        for u, v, w in arcs:
            total += w * (pos[:, u] > pos[:, v])
        return total
    if objective == "ola":
        total = np.zeros(rows, dtype=np.int64)
        for u, v, w in arcs:
            d = pos[:, u].astype(np.int64) - pos[:, v]
            total += w * np.maximum(d, 0)
        return total
    if objective == "cutwidth":
        best = np.zeros(rows, dtype=np.int64)
        for i in range(1, n):
            cut = np.zeros(rows, dtype=np.int64)
            for u, v, w in arcs:
                cut += w * ((pos[:, u] > i) & (pos[:, v] <= i))
            np.maximum(best, cut, out=best)
        return best
    if objective == "dpw":
        latest = np.zeros((rows, n), dtype=np.int16)
        for v in range(n):
            for u, _ in g.in_pairs[v]:
                np.maximum(latest[:, v], pos[:, u], out=latest[:, v])
        best = np.zeros(rows, dtype=np.int64)
        for i in range(1, n):
            cnt = ((pos <= i) & (latest > i)).sum(axis=1, dtype=np.int64)
            np.maximum(best, cnt, out=best)
        return best
    raise ValueError(f"unknown objective {objective!r}")


def perm_opt(g: Digraph, objective: str) -> OracleResult:
    """Exact optimum over all n! orderings. Guarded at n <= 9."""
    if objective not in EVALUATORS:
        raise ValueError(f"unknown objective {objective!r}")
    n = g.n
    guards.check(n, guards.ORACLE_GUARD, "oracle vertex count")
    if n == 0:
        return OracleResult(objective, 0, Ordering(()), 1)
    seqs, pos = _position_matrix(n)
    values = _all_values(g, objective, pos)
    idx = int(np.argmin(values))            # first minimum = lex-least sequence
    opt = int(values[idx])
    count = int((values == opt).sum())
    ordering = Ordering.from_sequence(int(v) for v in seqs[idx])
    actual = EVALUATORS[objective](g, ordering)
    if actual != opt:
        raise AssertionError(
            f"oracle mismatch: vectorized {opt}, evaluator {actual}")
    return OracleResult(objective, opt, ordering, count)
