"""Portable operation counters shared by all engines.

Counter increments sit at fixed call sites so that ratios between runs are
implementation-portable:

* ``CNT_EDGE_SCANS`` -- every visit of an adjacency-list entry in any engine
  loop (reinitialization scans, grow/shrink rescans, weight setup, auxiliary
  graph construction, DFS and queue-engine edge loops).  Plain sweeps over
  the global edge array (greedy init, matching extraction) do not count.
* ``CNT_UNIONS`` -- every ``union_blocks`` call on any node partition,
  including the replay of recorded unions into the delayed partition.
* ``CNT_QUEUE_OPS`` -- every bucket-queue insert (dropped or not) and every
  pop that returns an edge.
"""

from __future__ import annotations

import numpy as np

CNT_EDGE_SCANS = 0
CNT_UNIONS = 1
CNT_QUEUE_OPS = 2


def new_counters() -> np.ndarray:
    return np.zeros(3, dtype=np.int64)
