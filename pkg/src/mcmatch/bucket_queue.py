"""Monotone integer-keyed edge queue backed by an array of buckets.

Keys are the dual-update counts at which edges become tight.  An augmenting
path has at most n-1 edges, so the dual value of a free node never drops
below -n/2 + 1 and keys 0..floor(n/2) suffice; inserts with larger keys are
silently dropped -- such an edge can never lie on a shortest augmenting path.
Dropping is load-bearing: it bounds memory and the length of the bucket
sweep.

Buckets are FIFO.  Stale entries are permitted by contract (an edge may be
inserted several times as its endpoints' labels change); the consumer filters
them at pop time.

``bq_*`` are numba kernels over the backing arrays (entry pool + per-bucket
head/tail links); ``BucketQueue`` is the object wrapper.  ``state`` holds
[next free pool slot, D] where buckets below D have already been emptied.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def bq_reset(head, state):
    head[:] = -1
    state[0] = 0
    state[1] = 0


@njit(cache=True, inline="always")
def bq_insert(head, tail, nxt, eid, state, e, key):
    """Append edge e to bucket ``key``; drop it when key >= number of buckets."""
    if key >= head.shape[0]:
        return
    idx = state[0]
    state[0] = idx + 1
    eid[idx] = e
    nxt[idx] = -1
    if head[key] < 0:
        head[key] = idx
    else:
        nxt[tail[key]] = idx
    tail[key] = idx


@njit(cache=True, inline="always")
def bq_pop_at(head, nxt, eid, state, delta):
    """Pop the front of bucket ``delta``; -1 when it is empty or out of range."""
    if delta > state[1]:
        state[1] = delta
    if delta >= head.shape[0]:
        return -1
    idx = head[delta]
    if idx < 0:
        return -1
    head[delta] = nxt[idx]
    return eid[idx]


class BucketQueue:
    """Edge queue with buckets 0..floor(n/2); see module docstring.

    ``capacity`` bounds the total number of inserts between resets.
    """

    def __init__(self, node_count: int, capacity: int):
        self.max = node_count // 2 + 1
        self.head = np.full(self.max, -1, dtype=np.int32)
        self.tail = np.zeros(self.max, dtype=np.int32)
        self.nxt = np.zeros(capacity, dtype=np.int32)
        self.eid = np.zeros(capacity, dtype=np.int32)
        self.state = np.zeros(2, dtype=np.int64)

    def reset(self) -> None:
        bq_reset(self.head, self.state)

    def insert(self, e: int, key: int) -> None:
        if key < 0:
            raise ValueError("key must be non-negative")
        if self.state[0] >= self.eid.shape[0] and key < self.max:
            raise OverflowError("bucket queue entry pool exhausted")
        bq_insert(self.head, self.tail, self.nxt, self.eid, self.state, e, key)

    def delete_at_delta(self, delta: int):
        """Edge id from bucket ``delta`` or None; bumps the emptied-bucket
        high-water mark D."""
        e = bq_pop_at(self.head, self.nxt, self.eid, self.state, delta)
        return None if e < 0 else int(e)

    @property
    def emptied_below(self) -> int:
        return int(self.state[1])
