"""Union-find over node ids with representative override and bulk reset.

This is the node-partition contract used by every matching engine: blocks are
blossoms, the representative of a block is the blossom base.  On top of the
usual ``find``/``union_blocks`` there are two extra operations:

* ``make_rep(v)`` makes ``v`` the canonical representative of its block in
  O(1) by pointing the root's representative slot at ``v`` (the tree is not
  restructured).
* ``split(nodes)`` resets every listed node to a singleton block in O(|nodes|).
  The caller must pass a union of whole blocks; this is checked when the
  partition was created with ``debug=True``.

The module-level ``pf_*`` functions are numba kernels operating directly on
the backing arrays; the engines call them inside their own compiled loops.
``SplittablePartition`` wraps the same arrays and kernels behind an object
API.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, inline="always")
def pf_root(parent, v):
    """Tree root of v's block, with full path compression."""
    r = v
    while parent[r] != r:
        r = parent[r]
    while parent[v] != r:
        nxt = parent[v]
        parent[v] = r
        v = nxt
    return r


@njit(cache=True, inline="always")
def pf_find(parent, rep, v):
    """Canonical representative of v's block."""
    return rep[pf_root(parent, v)]


@njit(cache=True, inline="always")
def pf_union(parent, rank, u, v):
    """Unite the blocks containing u and v (union by rank).  The new block
    keeps the representative of whichever old block ends up holding the root.
    Returns True when two distinct blocks were merged."""
    ru = pf_root(parent, u)
    rv = pf_root(parent, v)
    if ru == rv:
        return False
    if rank[ru] < rank[rv]:
        ru, rv = rv, ru
    parent[rv] = ru
    if rank[ru] == rank[rv]:
        rank[ru] += 1
    return True


@njit(cache=True, inline="always")
def pf_make_rep(parent, rep, v):
    """Make v the canonical representative of its block."""
    rep[pf_root(parent, v)] = v


@njit(cache=True)
def pf_reset(parent, rank, rep, nodes):
    """Reset every listed node to a singleton block."""
    for i in range(nodes.shape[0]):
        v = nodes[i]
        parent[v] = v
        rank[v] = 0
        rep[v] = v


@njit(cache=True)
def pf_root_hops(parent, v):
    """Number of parent pointers chased by a find, before compression."""
    hops = 0
    r = v
    while parent[r] != r:
        r = parent[r]
        hops += 1
    while parent[v] != r:
        nxt = parent[v]
        parent[v] = r
        v = nxt
    return hops


class SplittablePartition:
    """Partition of ``0..n-1`` into blocks, every node initially a singleton."""

    def __init__(self, n: int, debug: bool = False):
        self.n = n
        self.parent = np.arange(n, dtype=np.int32)
        self.rank = np.zeros(n, dtype=np.int32)
        self.rep = np.arange(n, dtype=np.int32)
        self.debug = debug

    def find(self, v: int) -> int:
        return int(pf_find(self.parent, self.rep, v))

    def same_block(self, u: int, v: int) -> bool:
        return self.find(u) == self.find(v)

    def union_blocks(self, u: int, v: int) -> None:
        pf_union(self.parent, self.rank, u, v)

    def make_rep(self, v: int) -> None:
        pf_make_rep(self.parent, self.rep, v)

    def split(self, nodes) -> None:
        nodes = np.asarray(nodes, dtype=np.int32)
        if self.debug:
            self._check_block_closed(nodes)
        pf_reset(self.parent, self.rank, self.rep, nodes)

    def _check_block_closed(self, nodes) -> None:
        # Every block touching the set must be contained in it.
        members = set(int(v) for v in nodes)
        for v in members:
            r = int(pf_root(self.parent, v))
            if r not in members:
                raise ValueError(
                    f"split() set is not a union of whole blocks: node {v} "
                    f"has root {r} outside the set"
                )
        roots = set(int(pf_root(self.parent, v)) for v in members)
        for v in range(self.n):
            if v not in members and int(pf_root(self.parent, v)) in roots:
                raise ValueError(
                    f"split() set is not a union of whole blocks: node {v} "
                    "outside the set shares a block with it"
                )
