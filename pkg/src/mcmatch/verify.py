"""Certificates and brute-force oracles.

``check_matching`` and ``check_osc`` verify engine output in linear time;
the ``oracle_*`` functions compute exact answers by exhaustive search and are
deliberately independent of the matching engines (different algorithms,
no shared state), so they can serve as ground truth in tests.
"""

from __future__ import annotations

from itertools import combinations

from .graph_core import StaticGraph

_ORACLE_NODE_LIMIT = 20
_SAP_NODE_LIMIT = 12


def check_matching(g: StaticGraph, edges) -> bool:
    """True iff the edge ids form a matching in g: all ids valid, no
    self-loops, no two edges sharing an endpoint."""
    seen = set()
    for e in edges:
        e = int(e)
        if not 0 <= e < g.edge_count:
            return False
        u = int(g.edge_source[e])
        v = int(g.edge_target[e])
        if u == v or u in seen or v in seen:
            return False
        seen.add(u)
        seen.add(v)
    return True


def check_osc(g: StaticGraph, edges, osc, reason: list | None = None) -> bool:
    """Check an odd-set cover against a matching.

    True iff all labels lie in [0, n), |M| = n_1 + sum over i >= 2 of
    floor(n_i / 2), and every non-loop edge has an endpoint labeled 1 or both
    endpoints share a label >= 2.  On failure the diagnostic is appended to
    ``reason`` when given.
    """
    def fail(msg: str) -> bool:
        if reason is not None:
            reason.append(msg)
        return False

    n = max(2, g.node_count)
    count = [0] * n
    top = 1
    for v in range(g.node_count):
        lab = int(osc[v])
        if lab < 0 or lab >= n:
            return fail("negative label or label larger than n - 1")
        count[lab] += 1
        if lab > top:
            top = lab
    total = count[1] + sum(count[i] // 2 for i in range(2, top + 1))
    if total != len(edges):
        return fail("OSC does not prove optimality")
    for e in range(g.edge_count):
        u = int(g.edge_source[e])
        v = int(g.edge_target[e])
        if u == v or osc[u] == 1 or osc[v] == 1 or \
                (osc[u] == osc[v] and osc[u] >= 2):
            continue
        return fail("OSC is not a cover")
    return True


def _neighbor_masks(g: StaticGraph) -> list[int]:
    masks = [0] * g.node_count
    for u, v in g.edges():
        if u != v:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
    return masks


def oracle_max_matching(g: StaticGraph) -> int:
    """Exact maximum matching size by branching on the lowest-id undecided
    node (match it to each neighbor, or skip it), memoized on the decided-set
    bitmask.  Refuses graphs with more than 20 nodes."""
    n = g.node_count
    if n > _ORACLE_NODE_LIMIT:
        raise ValueError(f"oracle_max_matching handles at most "
                         f"{_ORACLE_NODE_LIMIT} nodes, got {n}")
    masks = _neighbor_masks(g)
    full = (1 << n) - 1
    memo: dict[int, int] = {}

    def best(mask: int) -> int:
        if mask == full:
            return 0
        # lowest-id undecided node
        v = ((~mask) & (mask + 1)).bit_length() - 1
        cached = memo.get(mask)
        if cached is not None:
            return cached
        result = best(mask | (1 << v))  # leave v unmatched
        free = masks[v] & ~mask
        u_bits = free
        while u_bits:
            u_low = u_bits & -u_bits
            u = u_low.bit_length() - 1
            u_bits ^= u_low
            result = max(result, 1 + best(mask | (1 << v) | (1 << u)))
        memo[mask] = result
        return result

    return best(0)


def oracle_max_matching_by_subsets(g: StaticGraph) -> int:
    """Second, independent oracle: enumerate edge subsets (n <= 10, m <= 15)
    and keep the largest one that is a matching."""
    if g.node_count > 10 or g.edge_count > 15:
        raise ValueError("subset oracle handles at most 10 nodes / 15 edges")
    pairs = [(u, v) for (u, v) in g.edges() if u != v]
    best = 0
    for k in range(len(pairs), 0, -1):
        if k <= best:
            break
        for combo in combinations(range(len(pairs)), k):
            used = set()
            ok = True
            for i in combo:
                u, v = pairs[i]
                if u in used or v in used:
                    ok = False
                    break
                used.add(u)
                used.add(v)
            if ok:
                best = k
                break
    return best


def oracle_sap_length(g: StaticGraph, matching_edges) -> int | None:
    """Minimum edge count over all augmenting paths for the given matching,
    by exhaustive DFS over alternating simple paths from each free node;
    None when the matching admits no augmenting path.  Refuses graphs with
    more than 12 nodes."""
    n = g.node_count
    if n > _SAP_NODE_LIMIT:
        raise ValueError(f"oracle_sap_length handles at most "
                         f"{_SAP_NODE_LIMIT} nodes, got {n}")
    mate = [-1] * n
    for e in matching_edges:
        u = int(g.edge_source[e])
        v = int(g.edge_target[e])
        mate[u] = v
        mate[v] = u
    adj = [[] for _ in range(n)]
    for u, v in g.edges():
        if u != v:
            adj[u].append(v)
            adj[v].append(u)
    best: list[int | None] = [None]

    def walk(v: int, visited: int, length: int, need_matched: bool) -> None:
        if best[0] is not None and length >= best[0]:
            return
        for u in adj[v]:
            if visited & (1 << u):
                continue
            if need_matched:
                if mate[v] != u:
                    continue
                walk(u, visited | (1 << u), length + 1, False)
            else:
                if mate[v] == u:
                    continue
                if mate[u] == -1:
                    if best[0] is None or length + 1 < best[0]:
                        best[0] = length + 1
                else:
                    walk(u, visited | (1 << u), length + 1, True)

    for f in range(n):
        if mate[f] == -1:
            walk(f, 1 << f, 0, False)
    return best[0]
