"""Directed minimum (k, n-k)-cut: pick L with |L| = k minimizing the weight
of arcs entering L from outside.

The exact solver splits V into three fixed index-contiguous parts V1, V2, V3
of near-equal size. For every split k = k1+k2+k3 it builds a complete
tripartite auxiliary graph with one node per size-k_i subset T of V_i. A node
carries delta(T), the weight of arcs from V_i - T into T; an edge between
T (in part a) and U (in part b) stores

    2 * [ arcs(V_a - T -> U) + arcs(V_b - U -> T) ] + delta(T) + delta(U)

so that every triangle's stored weight is exactly twice the cut value of
L = T1 u T2 u T3 (each delta appears in two edges at half weight; doubling
keeps everything integral). The minimum-weight triangle therefore locates the
optimal L for that split.

dkmc_weighted_approx runs the same search after rounding each nonzero stored
edge weight up to a power of (1+eps/3), which keeps the number of distinct
weights logarithmic while inflating any triangle by less than a (1+eps)
factor. The returned value is always the true, unrounded cut weight.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import guards
from .graph import Digraph, cut_into
from .report import Counters


@dataclass(frozen=True)
class CutSolution:
    vertices: tuple[int, ...]   # sorted members of L
    k: int
    value: int                  # re-evaluated weight of arcs into L


@dataclass
class AuxGraph:
    """Complete tripartite auxiliary graph for one (k1, k2, k3) split."""

    parts: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]
    sizes: tuple[int, int, int]
    nodes: tuple[list[tuple[int, ...]], ...]   # subsets per group, lex order
    deltas: tuple[list[int], ...]
    # edge weight matrices between groups 0-1, 0-2, 1-2 (doubled weights)
    e01: list[list[int]]
    e02: list[list[int]]
    e12: list[list[int]]


def tripartition(n: int) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Fixed equitable split of 0..n-1 in index order."""
    s1 = math.ceil(n / 3)
    s2 = math.ceil((n - s1) / 2)
    return (tuple(range(s1)), tuple(range(s1, s1 + s2)),
            tuple(range(s1 + s2, n)))


def _in_from_part(g: Digraph, parts) -> list[list[int]]:
    """ifp[i][x] = weight of arcs into x from part i."""
    masks = [sum(1 << v for v in part) for part in parts]
    ifp = [[0] * g.n for _ in range(3)]
    for i, pmask in enumerate(masks):
        row = ifp[i]
        for x in range(g.n):
            row[x] = sum(w for u, w in g.in_pairs[x] if pmask >> u & 1)
    return ifp


def _cross(g: Digraph, src: tuple[int, ...], dst_mask: int) -> int:
    """Weight of arcs from the vertices in src into the dst mask."""
    return sum(w for y in src for x, w in g.out_pairs[y] if dst_mask >> x & 1)


def build_aux(g: Digraph, parts, sizes: tuple[int, int, int],
              ifp: list[list[int]] | None = None) -> AuxGraph:
    """Auxiliary graph for one split; sizes[i] may be 0 or |parts[i]|."""
    if ifp is None:
        ifp = _in_from_part(g, parts)
    nodes = []
    masks = []
    deltas = []
    part_sums = []   # per node, its ifp sums from each of the three parts
    for i in range(3):
        subs = list(combinations(parts[i], sizes[i]))
        nodes.append(subs)
        masks.append([sum(1 << v for v in t) for t in subs])
        drow = []
        srow = []
        for t, tmask in zip(subs, masks[i]):
            inside = sum(w for x in t for u, w in g.in_pairs[x] if tmask >> u & 1)
            drow.append(sum(ifp[i][x] for x in t) - inside)
            srow.append(tuple(sum(ifp[j][x] for x in t) for j in range(3)))
        deltas.append(drow)
        part_sums.append(srow)

    def matrix(a: int, b: int) -> list[list[int]]:
        rows = []
        for j, t in enumerate(nodes[a]):
            tmask = masks[a][j]
            da = deltas[a][j]
            row = []
            for j2, u in enumerate(nodes[b]):
                umask = masks[b][j2]
                cross_ab = part_sums[b][j2][a] - _cross(g, t, umask)
                cross_ba = part_sums[a][j][b] - _cross(g, u, tmask)
                row.append(2 * (cross_ab + cross_ba) + da + deltas[b][j2])
            rows.append(row)
        return rows

    return AuxGraph(tuple(parts), sizes, tuple(nodes), tuple(deltas),
                    matrix(0, 1), matrix(0, 2), matrix(1, 2))


def min_weight_triangle(aux: AuxGraph, counters: Counters | None = None,
                        e01=None, e02=None, e12=None):
    """Minimum-weight triangle (one node per group) by direct enumeration.

    Returns ((j1, j2, j3), weight); the lexicographically least triple wins
    ties. Optional matrices override the stored ones (used by the rounded
    search); weights only need +, < and non-negativity.
    """
    e01 = aux.e01 if e01 is None else e01
    e02 = aux.e02 if e02 is None else e02
    e12 = aux.e12 if e12 is None else e12
    best = None
    best_triple = None
    examined = 0
    for j1 in range(len(aux.nodes[0])):
        row01 = e01[j1]
        row02 = e02[j1]
        for j2 in range(len(aux.nodes[1])):
            w12 = row01[j2]
            if best is not None and w12 >= best:
                continue   # every completion weighs at least w12
            row12 = e12[j2]
            for j3 in range(len(aux.nodes[2])):
                examined += 1
                total = w12 + row02[j3] + row12[j3]
                if best is None or total < best:
                    best = total
                    best_triple = (j1, j2, j3)
    if counters is not None:
        counters.triangles += examined
    if best_triple is None:
        raise ValueError("auxiliary graph has an empty group")
    return best_triple, best


def _splits(parts, k: int):
    for k1 in range(min(k, len(parts[0])) + 1):
        for k2 in range(min(k - k1, len(parts[1])) + 1):
            k3 = k - k1 - k2
            if 0 <= k3 <= len(parts[2]):
                yield (k1, k2, k3)


def dkmc_exact(g: Digraph, k: int, counters: Counters | None = None) -> CutSolution:
    """Exact directed minimum (k, n-k)-cut via the triangle construction."""
    n = g.n
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside 0..{n}")
    guards.check(n, guards.EXACT_DP_GUARD, "dkmc_exact vertex count")
    parts = tripartition(n)
    ifp = _in_from_part(g, parts)
    best_value = None
    best_l = None
    for sizes in _splits(parts, k):
        aux = build_aux(g, parts, sizes, ifp)
        (j1, j2, j3), stored = min_weight_triangle(aux, counters)
        if stored % 2:
            raise AssertionError("stored triangle weight must be even")
        value = stored // 2
        l = aux.nodes[0][j1] + aux.nodes[1][j2] + aux.nodes[2][j3]
        if best_value is None or value < best_value or \
                (value == best_value and l < best_l):
            best_value, best_l = value, l
    actual = cut_into(g, best_l)
    if actual != best_value:
        raise AssertionError(
            f"dkmc value {best_value} but cut re-evaluates to {actual}")
    return CutSolution(best_l, k, best_value)


def _rounded_keys(weights: set[int], eps) -> dict[int, object]:
    """Map each stored weight to its rounded-up power of (1+eps/3).

    Keys only need consistent ordering and addition. Three regimes:
    tiny eps where rounding provably cannot reorder distinct triangle sums
    (identity), an exact big-integer grid for moderate exponent ranges, and
    high-precision floats beyond that.
    """
    eps_f = Fraction(eps)
    if eps_f <= 0:
        raise ValueError("eps must be positive")
    positive = sorted(w for w in weights if w > 0)
    if not positive:
        return {w: w for w in weights}
    smax = positive[-1]
    # Distinct triangle sums differ by >= 1; rounding inflates a sum by less
    # than eps/3 * sum <= eps * smax, so below 1 no comparison can flip.
    if eps_f * smax < 1:
        return {w: w for w in weights}
    base = 1 + eps_f / 3
    a, b = base.numerator, base.denominator
    pa, pb = [1], [1]
    while pa[-1] < smax * pb[-1] and len(pa) <= 2048:
        pa.append(pa[-1] * a)
        pb.append(pb[-1] * b)
    if pa[-1] >= smax * pb[-1]:
        emax = len(pa) - 1
        keys: dict[int, object] = {}
        for w in weights:
            if w <= 0:
                keys[w] = 0
                continue
            lo, hi = 0, emax
            while lo < hi:               # least e with base^e >= w
                mid = (lo + hi) // 2
                if pa[mid] >= w * pb[mid]:
                    hi = mid
                else:
                    lo = mid + 1
            keys[w] = pa[lo] * pb[emax - lo]   # base^e scaled by b^emax
        return keys
    import mpmath
    with mpmath.workdps(60):
        # Scaled-integer keys so later sums stay exact regardless of mpmath
        # context. An exponent off by one in a degenerate near-tie still
        # keeps the factor, since (1+eps/3)^2 <= 1+eps here (eps < 3).
        logbase = mpmath.log(mpmath.mpf(a) / b)
        scale = mpmath.mpf(2) ** 80
        keys = {}
        for w in weights:
            if w <= 0:
                keys[w] = 0
            else:
                e = int(mpmath.ceil(mpmath.log(w) / logbase))
                keys[w] = int(mpmath.floor(mpmath.exp(max(e, 0) * logbase) * scale))
        return keys


def dkmc_weighted_approx(g: Digraph, k: int, eps,
                         counters: Counters | None = None) -> CutSolution:
    """(1+eps)-approximate DKMC via weight rounding; value is unrounded."""
    n = g.n
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside 0..{n}")
    guards.check(n, guards.EXACT_DP_GUARD, "dkmc_weighted_approx vertex count")
    parts = tripartition(n)
    ifp = _in_from_part(g, parts)
    cells = [build_aux(g, parts, sizes, ifp) for sizes in _splits(parts, k)]
    weights: set[int] = set()
    for aux in cells:
        for mat in (aux.e01, aux.e02, aux.e12):
            for row in mat:
                weights.update(row)
    keys = _rounded_keys(weights, eps)
    best_key = None
    best_l = None
    for aux in cells:
        rounded = [[[keys[w] for w in row] for row in mat]
                   for mat in (aux.e01, aux.e02, aux.e12)]
        (j1, j2, j3), rweight = min_weight_triangle(
            aux, counters, e01=rounded[0], e02=rounded[1], e12=rounded[2])
        l = aux.nodes[0][j1] + aux.nodes[1][j2] + aux.nodes[2][j3]
        if best_key is None or rweight < best_key or \
                (rweight == best_key and l < best_l):
            best_key, best_l = rweight, l
    return CutSolution(best_l, k, cut_into(g, best_l))


def dkmc_oracle(g: Digraph, k: int) -> CutSolution:
    """Exact minimum by trying every size-k subset (independent of the
    triangle construction). Guarded by C(n, k)."""
    n = g.n
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside 0..{n}")
    guards.check(math.comb(n, k), guards.DKMC_ORACLE_GUARD,
                 "dkmc_oracle subset count")
    in_pairs = g.in_pairs
    best = None
    best_l = None
    for combo in combinations(range(n), k):
        inside = set(combo)
        value = sum(w for v in combo for u, w in in_pairs[v] if u not in inside)
        if best is None or value < best:
            best, best_l = value, combo
    return CutSolution(best_l, k, best)
