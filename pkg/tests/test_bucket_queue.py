from __future__ import annotations

import pytest

from mcmatch.bucket_queue import BucketQueue


def test_bucket_count_is_half_n_plus_one():
    q = BucketQueue(10, capacity=16)
    assert q.max == 6
    q = BucketQueue(5, capacity=16)
    assert q.max == 3


def test_keys_at_or_above_max_are_dropped():
    q = BucketQueue(10, capacity=16)
    q.insert(7, 6)
    assert q.delete_at_delta(6) is None
    q.insert(7, 5)
    assert q.delete_at_delta(5) == 7


def test_fifo_within_bucket():
    q = BucketQueue(10, capacity=16)
    q.insert(1, 2)
    q.insert(2, 2)
    q.insert(3, 2)
    assert [q.delete_at_delta(2) for _ in range(4)] == [1, 2, 3, None]


def test_key_zero():
    q = BucketQueue(4, capacity=4)
    q.insert(9, 0)
    assert q.delete_at_delta(0) == 9
    assert q.delete_at_delta(0) is None


def test_reset():
    q = BucketQueue(10, capacity=16)
    q.insert(5, 3)
    q.reset()
    assert q.delete_at_delta(3) is None
    assert q.emptied_below == 3
    q.reset()
    assert q.emptied_below == 0
    # reset on a fresh queue is a no-op
    r = BucketQueue(10, capacity=16)
    r.reset()
    assert r.delete_at_delta(0) is None


def test_emptied_high_water_mark():
    q = BucketQueue(10, capacity=16)
    assert q.delete_at_delta(4) is None
    assert q.emptied_below == 4
    assert q.delete_at_delta(2) is None
    assert q.emptied_below == 4


def test_negative_key_rejected():
    q = BucketQueue(10, capacity=16)
    with pytest.raises(ValueError):
        q.insert(0, -1)


def test_same_edge_may_be_inserted_twice():
    # stale entries are allowed; the consumer filters them
    q = BucketQueue(10, capacity=16)
    q.insert(4, 1)
    q.insert(4, 1)
    assert q.delete_at_delta(1) == 4
    assert q.delete_at_delta(1) == 4
    assert q.delete_at_delta(1) is None


def test_pool_exhaustion_raises():
    q = BucketQueue(10, capacity=2)
    q.insert(0, 1)
    q.insert(1, 1)
    with pytest.raises(OverflowError):
        q.insert(2, 1)
    # dropped keys do not consume pool slots
    q.insert(3, 6)
