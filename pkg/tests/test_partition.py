from __future__ import annotations

import random

import numpy as np
import pytest

from mcmatch.partition import SplittablePartition, pf_root_hops


def test_fresh_partition_is_identity():
    p = SplittablePartition(8)
    assert p.find(3) == 3
    assert not p.same_block(0, 1)


def test_union_and_find():
    p = SplittablePartition(4)
    p.union_blocks(0, 0)
    assert all(p.find(v) == v for v in range(4))
    p.union_blocks(0, 1)
    assert p.same_block(0, 1)
    assert p.find(0) in (0, 1)


def test_make_rep():
    p = SplittablePartition(6)
    p.make_rep(5)
    assert p.find(5) == 5
    p.union_blocks(1, 2)
    p.make_rep(2)
    assert p.find(1) == 2
    p.union_blocks(0, 1)
    p.union_blocks(1, 2)
    p.make_rep(1)
    assert p.find(0) == 1 and p.find(2) == 1


def test_shrink_call_pattern_leaves_base_as_rep():
    # unions followed by one make_rep(b), as the blossom shrinking loop does
    p = SplittablePartition(8)
    for v in (3, 4, 5, 6):
        p.union_blocks(v, 2)
        p.make_rep(2)
    assert all(p.find(v) == 2 for v in (2, 3, 4, 5, 6))


def test_split():
    p = SplittablePartition(6)
    p.union_blocks(0, 1)
    p.split([0, 1])
    assert not p.same_block(0, 1)
    p.split([])
    p.union_blocks(2, 3)
    p.union_blocks(4, 5)
    p.split(np.arange(6, dtype=np.int32))
    assert all(p.find(v) == v for v in range(6))


def test_split_block_closure_checked_in_debug():
    p = SplittablePartition(4, debug=True)
    p.union_blocks(0, 1)
    with pytest.raises(ValueError):
        p.split([0])
    p.split([0, 1])
    assert p.find(0) == 0


def test_against_naive_model():
    # interleave unions/make_rep/find against an explicit block-set model
    rng = random.Random(20240229)
    n = 64
    p = SplittablePartition(n)
    block = {v: frozenset([v]) for v in range(n)}
    rep = {v: v for v in range(n)}

    def model_union(u, v):
        bu, bv = block[u], block[v]
        if bu is bv:
            return
        merged = bu | bv
        for w in merged:
            block[w] = merged

    for _ in range(100_000):
        op = rng.randrange(4)
        u = rng.randrange(n)
        v = rng.randrange(n)
        if op == 0:
            ru, rv = rep[u], rep[v]
            p.union_blocks(u, v)
            model_union(u, v)
            got = p.find(u)
            # the merged block keeps the representative of one of the two
            # old blocks (which one is unspecified until make_rep)
            assert got in (ru, rv)
            assert p.find(v) == got
            for w in block[u]:
                rep[w] = got
        elif op == 1:
            p.make_rep(u)
            for w in block[u]:
                rep[w] = u
        elif op == 2:
            assert p.find(u) == rep[u]
        else:
            assert p.same_block(u, v) == (block[u] is block[v])


def test_union_rep_is_one_of_the_old_reps():
    rng = random.Random(7)
    n = 32
    p = SplittablePartition(n)
    for _ in range(500):
        u, v = rng.randrange(n), rng.randrange(n)
        ru, rv = p.find(u), p.find(v)
        p.union_blocks(u, v)
        assert p.find(u) in (ru, rv)
        assert p.find(u) == p.find(v)


def test_amortized_pointer_chase_bound():
    # soft check: total root-chase hops stay below 5 per operation
    rng = random.Random(99)
    n = 4096
    p = SplittablePartition(n)
    ops = 1_000_000
    hops = 0
    for i in range(ops):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if i % 3 == 0:
            p.union_blocks(u, v)
        hops += pf_root_hops(p.parent, u)
    assert hops <= 5 * ops
