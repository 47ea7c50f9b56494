"""Brute-force permutation oracle."""

from itertools import permutations

import pytest

from ordercut import (EVALUATORS, Digraph, Ordering, SizeGuardError,
                      gen_random, perm_opt)


def naive_opt(g, objective):
    """Plain-loop reference, independent of the vectorized path."""
    fn = EVALUATORS[objective]
    best = None
    count = 0
    for seq in permutations(range(g.n)):
        val = fn(g, Ordering.from_sequence(seq))
        if best is None or val < best:
            best, count = val, 1
        elif val == best:
            count += 1
    return best if best is not None else 0, count


@pytest.mark.parametrize("objective", sorted(EVALUATORS))
def test_matches_naive_loop(objective):
    for seed in range(10):
        n = 2 + seed % 5
        g = gen_random(n, 0.5, weight_range=(1, 5), seed=200 + seed)
        res = perm_opt(g, objective)
        opt, count = naive_opt(g, objective)
        assert res.opt == opt
        assert res.count == count
        assert EVALUATORS[objective](g, res.ordering) == opt


def test_known_counts():
    cyc = Digraph(3, [(0, 1), (1, 2), (2, 0)])
    res = perm_opt(cyc, "fas")
    assert res.opt == 1
    assert res.count == 3          # the three rotations of the cycle order
    assert res.ordering.seq == (0, 1, 2)   # lex-least witness

    arc = Digraph(2, [(0, 1)])
    res = perm_opt(arc, "fas")
    assert (res.opt, res.count) == (0, 1)


def test_trivial_sizes():
    empty = Digraph(0, [])
    assert perm_opt(empty, "ola").opt == 0
    single = Digraph(1, [])
    res = perm_opt(single, "cutwidth")
    assert res.opt == 0 and res.ordering.pos == (1,)


def test_rejects_unknown_objective():
    with pytest.raises(ValueError):
        perm_opt(Digraph(2, [(0, 1)]), "makespan")


def test_size_guard(monkeypatch):
    monkeypatch.delenv("ORDERCUT_GUARD_OVERRIDE", raising=False)
    g = Digraph(10, [(0, 1)])
    with pytest.raises(SizeGuardError):
        perm_opt(g, "fas")
