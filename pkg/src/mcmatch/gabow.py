"""Scaling maximum-cardinality matcher for general graphs.

Each iteration augments a maximal set of vertex-disjoint shortest augmenting
paths and consists of two phases.  Phase 1 is a 0/2-weighted Edmonds search
driven by implicit dual values: a global dual-update counter Delta plus two
per-node integers (the dual value and counter snapshot taken when the node
got its label) reconstruct every vertex dual in O(1), and edges enter a
bucket queue keyed by the counter value at which they become tight.  When an
augmenting path exists the phase stops at the Delta whose tight edges close
it; the shortest augmenting paths then have exactly 2*Delta - 1 edges.

The blocks of a second, delayed node partition lag one Delta-phase behind the
search (union operations are recorded and replayed only at Delta boundaries),
so at the end of phase 1 they are exactly the maximal positive blossoms.
Contracting them and keeping every tight edge between distinct blocks yields
an auxiliary overlay graph whose augmenting paths are precisely the images of
the shortest augmenting paths.  (Keeping only tight edges with an outer
endpoint is not enough: with two disjoint three-edge paths whose middle edges
are matched, that drops both matched middle edges and fabricates two
length-one paths.)  Phase 2 extracts a maximal set of augmenting paths from
the overlay by depth-first search, shrinking blossoms only on forward edges,
lifts each path back through the blossom bridges and augments it.

Once the distance to the maximum matching is about the number of iterations
already executed, finding one path at a time is cheaper and the solver
switches to the single-path sweep from ``single_path``.  The same sweep runs
after a failed phase 1 before the odd-set cover is built: the Delta <= n/2
loop bound and the bucket-queue key cap are sound for the path search but can
cut the search off before the blossoms and labels that certify optimality
exist (a 5-cycle with two matched edges already shows this), and the sweep,
which cannot augment a maximum matching, rebuilds exactly the state the
certificate construction expects.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numba import njit

from ._matchbase import (EVEN, NIL, ODD, UNLABELED, adopt_matching, build_osc,
                         extract_matching, greedy_matching)
from .bucket_queue import bq_insert, bq_reset
from .counters import CNT_EDGE_SCANS, CNT_QUEUE_OPS, CNT_UNIONS, new_counters
from .graph_core import StaticGraph
from .partition import pf_find, pf_make_rep, pf_union
from .single_path import _alloc_sweep_buffers, single_path_sweep

# indices into the persistent scalar block
SC_STRUE = 0
SC_TG = 1
SC_EVEN_COUNT = 2
SC_TLEN = 3


@njit(cache=True, inline="always")
def _dual(v, label, bd, bdelta, bpp, bprep, delta):
    """Dual value of v: 1 when unlabeled, otherwise reconstructed from the
    label-time snapshot and the number of dual updates since."""
    lb = label[pf_find(bpp, bprep, v)]
    if lb == UNLABELED:
        return 1
    if lb == EVEN:
        return bd[v] - (delta - bdelta[v])
    return bd[v] + (delta - bdelta[v])


@njit(cache=True)
def _scan_edge(e, z, delta, esrc, etgt, mate, label, bd, bdelta,
               bpp, bprep, qhead, qtail, qnxt, qeid, qstate, counters):
    """Queue the edge e incident to the even node z at the Delta value where
    it becomes tight: Delta + p further updates when the far endpoint is
    unlabeled, Delta + p/2 when it is even (p = d(z) + d(u))."""
    u = etgt[e] if esrc[e] == z else esrc[e]
    if mate[u] == z:
        return
    bu = pf_find(bpp, bprep, u)
    if label[bu] == ODD:
        return
    dz = bd[z] - (delta - bdelta[z])
    if label[bu] == UNLABELED:
        du = 1
    else:
        du = bd[u] - (delta - bdelta[u])
    p = dz + du
    assert p >= 0  # reduced weights are never negative
    if label[u] == UNLABELED:
        key = delta + p
    else:
        key = delta + p // 2
    counters[CNT_QUEUE_OPS] += 1
    bq_insert(qhead, qtail, qnxt, qeid, qstate, e, key)


@njit(cache=True)
def _scan_incident(z, delta, esrc, etgt, adj_off, adj_edges, mate, label,
                   bd, bdelta, bpp, bprep, qhead, qtail, qnxt, qeid, qstate,
                   counters):
    """Run the scan-edge step over every edge incident to the even node z.

    The per-edge body is written out here rather than calling _scan_edge:
    this loop dominates phase 1 and a call boundary per edge costs more than
    the work itself.
    """
    counters[CNT_EDGE_SCANS] += adj_off[z + 1] - adj_off[z]
    nbuckets = qhead.shape[0]
    dz = bd[z] - (delta - bdelta[z])
    qops = 0
    for k in range(adj_off[z], adj_off[z + 1]):
        e = adj_edges[k]
        u = etgt[e] if esrc[e] == z else esrc[e]
        if mate[u] == z:
            continue
        bu = pf_find(bpp, bprep, u)
        lbu = label[bu]
        if lbu == ODD:
            continue
        if lbu == UNLABELED:
            p = dz + 1
        else:
            p = dz + bd[u] - (delta - bdelta[u])
        assert p >= 0  # reduced weights are never negative
        if label[u] == UNLABELED:
            key = delta + p
        else:
            key = delta + p // 2
        qops += 1
        if key < nbuckets:
            idx = qstate[0]
            qstate[0] = idx + 1
            qeid[idx] = e
            qnxt[idx] = -1
            if qhead[key] < 0:
                qhead[key] = idx
            else:
                qnxt[qtail[key]] = idx
            qtail[key] = idx
    counters[CNT_QUEUE_OPS] += qops


@njit(cache=True)
def _shrink_path(b, x, y, delta, esrc, etgt, adj_off, adj_edges,
                 mate, label, parent, source_bridge, target_bridge,
                 bd, bdelta, bpp, bprk, bprep,
                 qhead, qtail, qnxt, qeid, qstate,
                 dunions, dlen, counters):
    """Collapse the tree path from x's base into the blossom base b.

    Formerly odd nodes on the path record the bridge (x, y), promote their
    implicit duals to the even reconstruction and rescan their edges.  Every
    union is also recorded for the delayed partition, terminated by a (b, b)
    sentinel standing for make_rep(b).  Returns the new union-log length.
    """
    v = pf_find(bpp, bprep, x)
    while v != b:
        counters[CNT_UNIONS] += 1
        pf_union(bpp, bprk, v, b)
        dunions[dlen] = v
        dunions[dlen + 1] = b
        dlen += 2
        v = mate[v]
        counters[CNT_UNIONS] += 1
        pf_union(bpp, bprk, v, b)
        dunions[dlen] = v
        dunions[dlen + 1] = b
        dlen += 2
        pf_make_rep(bpp, bprep, b)
        source_bridge[v] = x
        target_bridge[v] = y
        # v keeps label ODD; only the label of its base matters from now on
        bd[v] = bd[v] + (delta - bdelta[v])
        bdelta[v] = delta
        _scan_incident(v, delta, esrc, etgt, adj_off, adj_edges, mate, label,
                       bd, bdelta, bpp, bprep, qhead, qtail, qnxt, qeid,
                       qstate, counters)
        v = pf_find(bpp, bprep, parent[v])
    dunions[dlen] = b
    dunions[dlen + 1] = b
    dlen += 2
    return dlen


@njit(cache=True)
def _phase1(n, esrc, etgt, adj_off, adj_edges,
            mate, label, parent, source_bridge, target_bridge,
            bd, bdelta, path1, path2,
            bpp, bprk, bprep, dpp, dprk, dprep,
            qhead, qtail, qnxt, qeid, qstate,
            tbuf, dunions, scal, counters):
    """One shortest-augmenting-path search.

    Reinitializes only the nodes touched by the previous iteration (tbuf),
    then sweeps Delta upwards, exploring the tight edges delivered by the
    bucket queue: grow steps on unlabeled endpoints, lock-step ancestor walks
    on even-even edges deciding between blossom shrinking and augmentation.
    Returns (1, Delta) as soon as some Delta-level ends with a path found
    (recorded unions then stay uncommitted, keeping the delayed partition at
    the maximal positive blossoms), or (0, Delta) when 2*Delta exceeds n.
    """
    tlen = scal[SC_TLEN]
    bq_reset(qhead, qstate)
    for i in range(tlen):
        v = tbuf[i]
        bpp[v] = v
        bprk[v] = 0
        bprep[v] = v
        dpp[v] = v
        dprk[v] = 0
        dprep[v] = v
    for i in range(tlen):
        v = tbuf[i]
        label[v] = EVEN if mate[v] == NIL else UNLABELED
    delta = 0
    new_len = 0
    for i in range(tlen):
        v = tbuf[i]
        if mate[v] != NIL:
            continue
        tbuf[new_len] = v
        new_len += 1
        _scan_incident(v, delta, esrc, etgt, adj_off, adj_edges, mate, label,
                       bd, bdelta, bpp, bprep, qhead, qtail, qnxt, qeid,
                       qstate, counters)
    tlen = new_len
    found = False
    dlen = 0
    nbuckets = qhead.shape[0]
    while 2 * delta <= n:
        if delta > qstate[1]:
            qstate[1] = delta
        while True:
            # pop the front of bucket[delta] (inlined: hot path)
            if delta >= nbuckets:
                break
            idx = qhead[delta]
            if idx < 0:
                break
            qhead[delta] = qnxt[idx]
            e = qeid[idx]
            counters[CNT_QUEUE_OPS] += 1
            x = esrc[e]
            y = etgt[e]
            bx = pf_find(bpp, bprep, x)
            if label[bx] != EVEN:
                x, y = y, x
                bx = pf_find(bpp, bprep, x)
            by = pf_find(bpp, bprep, y)
            # only non-matching, non-self-loop edges with no odd endpoint
            if y == mate[x] or bx == by or label[by] == ODD:
                continue
            if label[by] == UNLABELED:
                # grow step: y and its mate join the tree
                z = mate[y]
                bd[y] = 1
                bd[z] = 1
                bdelta[y] = delta
                bdelta[z] = delta
                parent[z] = y
                parent[y] = x
                label[y] = ODD
                label[z] = EVEN
                tbuf[tlen] = y
                tlen += 1
                tbuf[tlen] = z
                tlen += 1
                _scan_incident(z, delta, esrc, etgt, adj_off, adj_edges,
                               mate, label, bd, bdelta, bpp, bprep,
                               qhead, qtail, qnxt, qeid, qstate, counters)
            elif label[by] == EVEN:
                # walk both tree paths in lock step until they meet (blossom)
                # or reach two distinct roots (augmenting path)
                scal[SC_STRUE] += 1
                stamp = scal[SC_STRUE]
                hx = bx
                hy = by
                path1[hx] = stamp
                path2[hy] = stamp
                while ((path1[hy] != stamp and path2[hx] != stamp)
                       and (mate[hx] != NIL or mate[hy] != NIL)):
                    if mate[hx] != NIL:
                        hx = pf_find(bpp, bprep, parent[mate[hx]])
                        path1[hx] = stamp
                    if mate[hy] != NIL:
                        hy = pf_find(bpp, bprep, parent[mate[hy]])
                        path2[hy] = stamp
                if path1[hy] == stamp or path2[hx] == stamp:
                    b = hy if path1[hy] == stamp else hx
                    dlen = _shrink_path(b, x, y, delta, esrc, etgt,
                                        adj_off, adj_edges, mate, label,
                                        parent, source_bridge, target_bridge,
                                        bd, bdelta, bpp, bprk, bprep,
                                        qhead, qtail, qnxt, qeid, qstate,
                                        dunions, dlen, counters)
                    dlen = _shrink_path(b, y, x, delta, esrc, etgt,
                                        adj_off, adj_edges, mate, label,
                                        parent, source_bridge, target_bridge,
                                        bd, bdelta, bpp, bprk, bprep,
                                        qhead, qtail, qnxt, qeid, qstate,
                                        dunions, dlen, counters)
                else:
                    found = True
        if found:
            scal[SC_TLEN] = tlen
            return 1, delta
        # Delta-phase over: commit recorded unions to the delayed partition
        i = 0
        while i < dlen:
            u = dunions[i]
            v = dunions[i + 1]
            i += 2
            if u == v:
                pf_make_rep(dpp, dprep, u)
            else:
                counters[CNT_UNIONS] += 1
                pf_union(dpp, dprk, u, v)
        dlen = 0
        delta += 1
    scal[SC_TLEN] = tlen
    return 0, delta


@njit(cache=True)
def _build_h(esrc, etgt, adj_off, adj_edges, mate, label, w,
             bd, bdelta, bpp, bprep, dpp, dprep,
             mate_h, ci_head, ci_next, is_edge_of_h,
             tbuf, tlen, delta, counters):
    """Overlay graph over the touched nodes: contract the blocks of the
    delayed partition (the maximal positive blossoms) and flag every tight
    edge joining two distinct blocks; tight matching edges define the overlay
    mates."""
    for i in range(tlen):
        ci_head[tbuf[i]] = NIL
    for i in range(tlen):
        v = tbuf[i]
        vh = pf_find(dpp, dprep, v)
        ci_next[v] = ci_head[vh]
        ci_head[vh] = v
        mate_h[v] = NIL
    for i in range(tlen):
        u = tbuf[i]
        counters[CNT_EDGE_SCANS] += adj_off[u + 1] - adj_off[u]
        for k in range(adj_off[u], adj_off[u + 1]):
            is_edge_of_h[adj_edges[k]] = False
    for i in range(tlen):
        u = tbuf[i]
        uh = pf_find(dpp, dprep, u)
        lbu = label[pf_find(bpp, bprep, u)]
        if lbu == UNLABELED:
            du = 1
        elif lbu == EVEN:
            du = bd[u] - (delta - bdelta[u])
        else:
            du = bd[u] + (delta - bdelta[u])
        counters[CNT_EDGE_SCANS] += adj_off[u + 1] - adj_off[u]
        for k in range(adj_off[u], adj_off[u + 1]):
            e = adj_edges[k]
            if esrc[e] != u:
                continue
            v = etgt[e]
            vh = pf_find(dpp, dprep, v)
            if uh == vh:
                continue
            lbv = label[pf_find(bpp, bprep, v)]
            if lbv == UNLABELED:
                dv = 1
            elif lbv == EVEN:
                dv = bd[v] - (delta - bdelta[v])
            else:
                dv = bd[v] + (delta - bdelta[v])
            if du + dv == w[e]:
                is_edge_of_h[e] = True
                if w[e] == 2:
                    mate_h[uh] = vh
                    mate_h[vh] = uh


@njit(cache=True)
def _find_ap_h(start, esrc, etgt, adj_off, adj_edges,
               rep, mate_h, label_h, parent_h, even_time_h, bridge_h, dir_h,
               ci_head, ci_next, is_edge_of_h, dpp, dprk, dprep,
               scal, counters,
               fvh, fci, fei, ftlo, fthi, ftix, fmode, tmpbuf, tmp_top):
    """DFS in the overlay graph for an augmenting path from the free node
    ``start``.  Blossoms are shrunk only when the edge is a forward edge of
    the DFS (the far base became even later); the nodes made even are then
    explored nearest-the-base first.  Returns (free endpoint or -1, tmp_top).
    """
    top = 0
    fvh[0] = start
    c0 = ci_head[start]
    fci[0] = c0
    fei[0] = adj_off[c0] if c0 != NIL else 0
    fmode[0] = 0
    result = NIL
    while top >= 0 and result == NIL:
        vh = fvh[top]
        if fmode[top] == 1:
            ix = ftix[top]
            if ix >= ftlo[top]:
                ftix[top] = ix - 1
                child = tmpbuf[ix]
                top += 1
                fvh[top] = child
                c = ci_head[child]
                fci[top] = c
                fei[top] = adj_off[c] if c != NIL else 0
                fmode[top] = 0
            else:
                fmode[top] = 0
            continue
        v = fci[top]
        if v == NIL:
            top -= 1
            continue
        i = fei[top]
        end = adj_off[v + 1]
        start = i
        grew = NIL
        while i < end:
            e = adj_edges[i]
            i += 1
            if not is_edge_of_h[e]:
                continue
            u = etgt[e] if esrc[e] == v else esrc[e]
            uh = rep[u]
            if mate_h[vh] == uh:
                continue
            if label_h[uh] == UNLABELED:
                m_uh = mate_h[uh]
                if m_uh == NIL:
                    label_h[uh] = ODD
                    parent_h[uh] = e
                    result = uh
                    break
                # extend the path by two overlay edges
                label_h[uh] = ODD
                label_h[m_uh] = EVEN
                parent_h[uh] = e
                even_time_h[m_uh] = scal[SC_TG]
                scal[SC_TG] += 1
                grew = m_uh
                break
            bh = pf_find(dpp, dprep, vh)
            zh = pf_find(dpp, dprep, uh)
            if even_time_h[bh] < even_time_h[zh]:
                # blossom step along a forward edge: collect the path down
                # to bh, union afterwards so block lookups see the old state
                lo = tmp_top
                pairs = 0
                while zh != bh:
                    # stash both endpoints of the matched overlay pair
                    tmpbuf[tmp_top] = zh
                    zh = mate_h[zh]
                    tmpbuf[tmp_top + 1] = zh
                    tmp_top += 2
                    pairs += 1
                    pe = parent_h[zh]
                    other = etgt[pe] if rep[esrc[pe]] == zh else esrc[pe]
                    zh = pf_find(dpp, dprep, rep[other])
                for j in range(lo, tmp_top):
                    counters[CNT_UNIONS] += 1
                    pf_union(dpp, dprk, tmpbuf[j], bh)
                pf_make_rep(dpp, dprep, bh)
                # keep only the odd nodes (every second entry), in walk order
                for j in range(pairs):
                    tmpbuf[lo + j] = tmpbuf[lo + 2 * j + 1]
                tmp_top = lo + pairs
                d = 1 if etgt[e] == v else -1
                for j in range(lo, tmp_top):
                    bridge_h[tmpbuf[j]] = e
                    dir_h[tmpbuf[j]] = d
                # walk order is top-down, so the reversed slice explores the
                # new even node closest to bh first
                fmode[top] = 1
                ftlo[top] = lo
                fthi[top] = tmp_top
                ftix[top] = tmp_top - 1
                break
        counters[CNT_EDGE_SCANS] += i - start
        fei[top] = i
        if result != NIL:
            break
        if grew != NIL:
            top += 1
            fvh[top] = grew
            c = ci_head[grew]
            fci[top] = c
            fei[top] = adj_off[c] if c != NIL else 0
            fmode[top] = 0
            continue
        if i >= end and fmode[top] == 0:
            nv = ci_next[v]
            fci[top] = nv
            fei[top] = adj_off[nv] if nv != NIL else 0
    return result, tmp_top


@njit(cache=True)
def _trace_path_h(vh0, uh0, esrc, etgt, rep, mate_h, label_h, parent_h,
                  bridge_h, dir_h, out, out_len, ta, tb):
    """Append the non-matching overlay edges of the even alternating path
    from vh0 back to uh0 (the path is used as an edge set, so the order of
    emission is free)."""
    top = 0
    ta[0] = vh0
    tb[0] = uh0
    while top >= 0:
        vh = ta[top]
        uh = tb[top]
        top -= 1
        if vh == uh:
            continue
        if label_h[vh] == EVEN:
            mvh = mate_h[vh]
            e = parent_h[mvh]
            out[out_len] = e
            out_len += 1
            nxt = rep[etgt[e]] if rep[esrc[e]] == mvh else rep[esrc[e]]
            top += 1
            ta[top] = nxt
            tb[top] = uh
        else:
            # vh became even through its blossom bridge
            b = bridge_h[vh]
            if dir_h[vh] == 1:
                near = rep[esrc[b]]
                far = rep[etgt[b]]
            else:
                near = rep[etgt[b]]
                far = rep[esrc[b]]
            out[out_len] = b
            out_len += 1
            top += 1
            ta[top] = near
            tb[top] = rep[mate_h[vh]]
            top += 1
            ta[top] = far
            tb[top] = uh
    return out_len


@njit(cache=True)
def _phase2_find(esrc, etgt, adj_off, adj_edges,
                 rep, mate_h, label_h, parent_h, even_time_h, bridge_h, dir_h,
                 ci_head, ci_next, is_edge_of_h, dpp, dprk, dprep,
                 tbuf, scal, counters,
                 fvh, fci, fei, ftlo, fthi, ftix, fmode, tmpbuf,
                 ta, tb, pg_edges, pg_off):
    """Find a maximal set of vertex-disjoint augmenting paths in the overlay:
    one DFS from every unvisited free overlay node.  Paths are returned as
    slices of pg_edges (their non-matching overlay edges)."""
    tlen = scal[SC_TLEN]
    for i in range(tlen):
        label_h[tbuf[i]] = UNLABELED
    for i in range(tlen):
        v = tbuf[i]
        rep[v] = pf_find(dpp, dprep, v)
    npaths = 0
    pg_len = 0
    pg_off[0] = 0
    tmp_top = 0
    for i in range(tlen):
        vh = tbuf[i]
        if rep[vh] != vh:
            continue
        if label_h[vh] == UNLABELED and mate_h[vh] == NIL:
            label_h[vh] = EVEN
            even_time_h[vh] = scal[SC_TG]
            scal[SC_TG] += 1
            free, tmp_top = _find_ap_h(
                vh, esrc, etgt, adj_off, adj_edges,
                rep, mate_h, label_h, parent_h, even_time_h, bridge_h, dir_h,
                ci_head, ci_next, is_edge_of_h, dpp, dprk, dprep,
                scal, counters,
                fvh, fci, fei, ftlo, fthi, ftix, fmode, tmpbuf, tmp_top)
            if free != NIL:
                e = parent_h[free]
                pg_edges[pg_len] = e
                pg_len += 1
                zh = rep[etgt[e]] if rep[esrc[e]] == free else rep[esrc[e]]
                pg_len = _trace_path_h(zh, vh, esrc, etgt, rep, mate_h,
                                       label_h, parent_h, bridge_h, dir_h,
                                       pg_edges, pg_len, ta, tb)
                pg_off[npaths + 1] = pg_len
                npaths += 1
    return npaths


@njit(cache=True)
def _lift_and_augment(path_edges, esrc, etgt, mate, label, parent,
                      source_bridge, target_bridge, rep, pairbuf, ta, tb):
    """Lift an overlay augmenting path to the input graph and flip it.

    For every overlay edge the pair of its endpoints is emitted, then the
    even alternating path from each endpoint to its blossom base is filled in
    (even nodes step through mate/parent, formerly odd nodes go through their
    recorded bridge).  All pairs are collected before any mate changes.
    Returns the number of non-matching edges of the lifted path.
    """
    plen = 0
    for idx in range(path_edges.shape[0]):
        e = path_edges[idx]
        eu = esrc[e]
        ev = etgt[e]
        pairbuf[plen] = eu
        pairbuf[plen + 1] = ev
        plen += 2
        for endpoint in range(2):
            v0 = eu if endpoint == 0 else ev
            top = 0
            ta[0] = v0
            tb[0] = rep[v0]
            while top >= 0:
                v = ta[top]
                u = tb[top]
                top -= 1
                if v == u:
                    continue
                if label[v] == EVEN:
                    mv = mate[v]
                    pmv = parent[mv]
                    pairbuf[plen] = mv
                    pairbuf[plen + 1] = pmv
                    plen += 2
                    top += 1
                    ta[top] = pmv
                    tb[top] = u
                else:
                    pairbuf[plen] = source_bridge[v]
                    pairbuf[plen + 1] = target_bridge[v]
                    plen += 2
                    top += 1
                    ta[top] = source_bridge[v]
                    tb[top] = mate[v]
                    top += 1
                    ta[top] = target_bridge[v]
                    tb[top] = u
    for i in range(0, plen, 2):
        a = pairbuf[i]
        b = pairbuf[i + 1]
        mate[a] = b
        mate[b] = a
    return plen // 2


@njit(cache=True)
def _setup_weights(esrc, etgt, adj_off, adj_edges, mate, w, tbuf, tlen,
                   matched_scratch, counters):
    """Weight 2 for exactly one edge per mated pair among the touched nodes,
    0 for every other touched edge; the mate map is unchanged on return."""
    nmatched = 0
    for i in range(tlen):
        z = tbuf[i]
        counters[CNT_EDGE_SCANS] += adj_off[z + 1] - adj_off[z]
        for k in range(adj_off[z], adj_off[z + 1]):
            e = adj_edges[k]
            if esrc[e] != z:
                continue
            u = esrc[e]
            v = etgt[e]
            w[e] = 0
            if mate[u] == v:
                w[e] = 2
                # unmating guards against parallel edges: only one of them
                # is in the matching
                mate[u] = NIL
                mate[v] = NIL
                matched_scratch[nmatched] = e
                nmatched += 1
    for i in range(nmatched):
        e = matched_scratch[i]
        mate[esrc[e]] = etgt[e]
        mate[etgt[e]] = esrc[e]


@dataclass
class SolveResult:
    edges: np.ndarray
    osc: np.ndarray
    size: int
    iterations: int
    counters: np.ndarray


@dataclass
class IterationReport:
    """What one iteration did: the Delta at which phase 1 stopped and the
    edge counts of the lifted paths (empty when no augmenting path exists)."""
    augmented: bool
    delta: int
    path_lengths: list = field(default_factory=list)


class ScalingMatcher:
    """One solver instance owns all mutable state for one graph.

    Besides ``solve``, the phases are exposed individually
    (``init_greedy``/``init_with_matching``, ``setup_weights``, ``phase_1``,
    ``build_aux_graph``, ``phase_2``, ``finish_off``) so a caller can drive
    and inspect single iterations.
    """

    def __init__(self, g: StaticGraph):
        self.graph = g
        n = g.node_count
        m = g.edge_count
        self.n = n
        self.counters = new_counters()
        self.mate = np.full(n, NIL, dtype=np.int32)
        self.label = np.full(n, UNLABELED, dtype=np.uint8)
        self.parent = np.full(n, NIL, dtype=np.int32)
        self.source_bridge = np.full(n, NIL, dtype=np.int32)
        self.target_bridge = np.full(n, NIL, dtype=np.int32)
        self.bd = np.ones(n, dtype=np.int32)
        self.bdelta = np.zeros(n, dtype=np.int32)
        self.path1 = np.zeros(n, dtype=np.int64)
        self.path2 = np.zeros(n, dtype=np.int64)
        self.w = np.zeros(m, dtype=np.int8)
        self.rep = np.full(n, NIL, dtype=np.int32)
        self.mate_h = np.full(n, NIL, dtype=np.int32)
        self.label_h = np.full(n, UNLABELED, dtype=np.uint8)
        self.parent_h = np.full(n, NIL, dtype=np.int32)
        self.even_time_h = np.zeros(n, dtype=np.int64)
        self.bridge_h = np.full(n, NIL, dtype=np.int32)
        self.dir_h = np.zeros(n, dtype=np.int8)
        self.is_edge_of_h = np.zeros(m, dtype=np.bool_)
        self.ci_head = np.full(n, NIL, dtype=np.int32)
        self.ci_next = np.full(n, NIL, dtype=np.int32)
        self.num = np.zeros(n, dtype=np.int32)
        self.even_time = np.zeros(n, dtype=np.int64)
        # node partitions: current blossoms and the delayed copy
        self.bpp = np.arange(n, dtype=np.int32)
        self.bprk = np.zeros(n, dtype=np.int32)
        self.bprep = np.arange(n, dtype=np.int32)
        self.dpp = np.arange(n, dtype=np.int32)
        self.dprk = np.zeros(n, dtype=np.int32)
        self.dprep = np.arange(n, dtype=np.int32)
        # bucket queue: keys 0..n/2, at most 2m inserts per phase
        self.qhead = np.full(n // 2 + 1, NIL, dtype=np.int32)
        self.qtail = np.zeros(n // 2 + 1, dtype=np.int32)
        self.qnxt = np.zeros(2 * m + 8, dtype=np.int32)
        self.qeid = np.zeros(2 * m + 8, dtype=np.int32)
        self.qstate = np.zeros(2, dtype=np.int64)
        # touched nodes, recorded unions, persistent scalars
        self.tbuf = np.empty(n + 2, dtype=np.int32)
        self.tbuf[:n] = np.arange(n, dtype=np.int32)
        self.dunions = np.empty(6 * n + 32, dtype=np.int32)
        self.scal = np.zeros(4, dtype=np.int64)
        self.scal[SC_TLEN] = n
        # phase-2 scratch
        cap = n + 2
        self.fvh = np.empty(cap, dtype=np.int32)
        self.fci = np.empty(cap, dtype=np.int32)
        self.fei = np.empty(cap, dtype=np.int64)
        self.ftlo = np.empty(cap, dtype=np.int32)
        self.fthi = np.empty(cap, dtype=np.int32)
        self.ftix = np.empty(cap, dtype=np.int32)
        self.fmode = np.empty(cap, dtype=np.int8)
        self.tmpbuf = np.empty(2 * n + 8, dtype=np.int32)
        self.ta = np.empty(2 * n + 16, dtype=np.int32)
        self.tb = np.empty(2 * n + 16, dtype=np.int32)
        self.pairbuf = np.empty(4 * n + 16, dtype=np.int32)
        self.pg_edges = np.empty(n + 8, dtype=np.int32)
        self.pg_off = np.empty(n // 2 + 8, dtype=np.int64)
        self.size = 0
        self.delta = 0
        self.max_size_bound = n // 2
        self.iteration_log: list[IterationReport] = []
        self._initialized = False

    # -- initialization ----------------------------------------------------

    def init_greedy(self) -> int:
        """Greedy matching over the global edge order; returns its size."""
        g = self.graph
        self.size = int(greedy_matching(g.edge_source, g.edge_target,
                                        self.mate))
        # greedy gets at least half of the maximum matching
        self.max_size_bound = min(self.n // 2, 2 * self.size)
        self._initialized = True
        return self.size

    def init_with_matching(self, edge_ids) -> int:
        """Adopt a compatible subset of the given edges; returns n, the only
        safe bound when nothing is known about the matching's size."""
        g = self.graph
        ids = np.asarray(edge_ids, dtype=np.int32)
        self.size = int(adopt_matching(g.edge_source, g.edge_target, ids,
                                       self.mate))
        self.max_size_bound = self.n // 2
        self._initialized = True
        return self.n

    # -- phase machinery ---------------------------------------------------

    def dual_value(self, v: int) -> int:
        return int(_dual(v, self.label, self.bd, self.bdelta,
                         self.bpp, self.bprep, self.delta))

    def scan_edge(self, e: int, z: int) -> None:
        _scan_edge(e, z, self.delta, self.graph.edge_source,
                   self.graph.edge_target, self.mate, self.label,
                   self.bd, self.bdelta, self.bpp, self.bprep,
                   self.qhead, self.qtail, self.qnxt, self.qeid, self.qstate,
                   self.counters)

    def setup_weights(self) -> None:
        g = self.graph
        _setup_weights(g.edge_source, g.edge_target, g.adj_offsets,
                       g.adj_edges, self.mate, self.w,
                       self.tbuf, int(self.scal[SC_TLEN]), self.tmpbuf,
                       self.counters)

    def phase_1(self) -> bool:
        g = self.graph
        if self.n == 0:
            return False
        found, delta = _phase1(
            self.n, g.edge_source, g.edge_target, g.adj_offsets, g.adj_edges,
            self.mate, self.label, self.parent, self.source_bridge,
            self.target_bridge, self.bd, self.bdelta, self.path1, self.path2,
            self.bpp, self.bprk, self.bprep, self.dpp, self.dprk, self.dprep,
            self.qhead, self.qtail, self.qnxt, self.qeid, self.qstate,
            self.tbuf, self.dunions, self.scal, self.counters)
        self.delta = int(delta)
        return bool(found)

    def build_aux_graph(self) -> None:
        g = self.graph
        _build_h(g.edge_source, g.edge_target, g.adj_offsets, g.adj_edges,
                 self.mate, self.label, self.w, self.bd, self.bdelta,
                 self.bpp, self.bprep, self.dpp, self.dprep,
                 self.mate_h, self.ci_head, self.ci_next, self.is_edge_of_h,
                 self.tbuf, int(self.scal[SC_TLEN]), self.delta,
                 self.counters)

    def phase_2(self) -> list[int]:
        """Augment a maximal set of overlay paths; returns their lifted edge
        counts (each 2*Delta - 1)."""
        g = self.graph
        npaths = _phase2_find(
            g.edge_source, g.edge_target, g.adj_offsets, g.adj_edges,
            self.rep, self.mate_h, self.label_h, self.parent_h,
            self.even_time_h, self.bridge_h, self.dir_h,
            self.ci_head, self.ci_next, self.is_edge_of_h,
            self.dpp, self.dprk, self.dprep,
            self.tbuf, self.scal, self.counters,
            self.fvh, self.fci, self.fei, self.ftlo, self.fthi, self.ftix,
            self.fmode, self.tmpbuf, self.ta, self.tb,
            self.pg_edges, self.pg_off)
        lengths = []
        for i in range(int(npaths)):
            lo = int(self.pg_off[i])
            hi = int(self.pg_off[i + 1])
            lengths.append(self.lift_and_augment(self.pg_edges[lo:hi]))
        tlen = int(self.scal[SC_TLEN])
        self.ci_head[self.tbuf[:tlen]] = NIL
        return lengths

    def lift_and_augment(self, path_edges) -> int:
        """Lift one overlay path and flip it; returns its edge count."""
        g = self.graph
        path_edges = np.ascontiguousarray(path_edges, dtype=np.int32)
        q = int(_lift_and_augment(path_edges, g.edge_source, g.edge_target,
                                  self.mate, self.label, self.parent,
                                  self.source_bridge, self.target_bridge,
                                  self.rep, self.pairbuf, self.ta, self.tb))
        self.size += 1
        return 2 * q - 1

    def run_iteration(self) -> IterationReport:
        """setup_weights + phase_1 (+ overlay + phase_2 on success)."""
        self.setup_weights()
        if not self.phase_1():
            return IterationReport(augmented=False, delta=self.delta)
        self.build_aux_graph()
        lengths = self.phase_2()
        return IterationReport(augmented=True, delta=self.delta,
                               path_lengths=lengths)

    # -- finishing and certificates -----------------------------------------

    def finish_off(self) -> int:
        """Single-path sweep over all remaining free nodes (the augmenting
        engine of ``single_path``); leaves labels and the delayed partition
        in the Hungarian-forest state the odd-set cover is built from.
        Returns the number of augmentations."""
        g = self.graph
        n = self.n
        if n == 0:
            return 0
        self.label.fill(UNLABELED)
        self.dpp[:] = np.arange(n, dtype=np.int32)
        self.dprk[:] = 0
        self.dprep[:] = np.arange(n, dtype=np.int32)
        (tbuf, pairbuf, ta, tb, fv, fei, fpass, ftlo, fthi, ftix,
         tmpbuf) = _alloc_sweep_buffers(n)
        augmented = int(single_path_sweep(
            n, g.edge_source, g.edge_target, g.adj_offsets, g.adj_edges,
            self.mate, self.label, self.parent, self.source_bridge,
            self.target_bridge, self.even_time,
            self.dpp, self.dprk, self.dprep,
            tbuf, pairbuf, ta, tb, fv, fei, fpass, ftlo, fthi, ftix, tmpbuf,
            self.scal[SC_EVEN_COUNT:SC_EVEN_COUNT + 1], self.counters))
        self.size += augmented
        return augmented

    def build_odd_set_cover(self) -> np.ndarray:
        osc = np.empty(self.n, dtype=np.int64)
        build_osc(self.label, self.dpp, self.dprep, osc)
        return osc

    def matching_edges(self) -> np.ndarray:
        g = self.graph
        out = np.empty(max(self.size, 1), dtype=np.int32)
        count = int(extract_matching(g.edge_source, g.edge_target, self.mate,
                                     out))
        return out[:count]

    def solve(self, heur_factor: float = 1.0, heur: bool = True) -> SolveResult:
        """Maximum matching plus odd-set cover.

        Iterates phase 1 / phase 2 rounds.  With ``heur``, switches to the
        single-path finisher once the iteration count exceeds
        0.5 * heur_factor * (size bound - current size); without it, runs
        phases until none finds an augmenting path, then performs one
        non-augmenting sweep so the certificate state is complete.
        """
        if not self._initialized:
            self.init_greedy()
        self.num[:] = np.arange(1, self.n + 1, dtype=np.int32)
        iterations = 0
        while True:
            self.setup_weights()
            iterations += 1
            if heur and iterations > 0.5 * heur_factor * (self.max_size_bound
                                                          - self.size):
                self.finish_off()
                break
            if self.phase_1():
                self.build_aux_graph()
                lengths = self.phase_2()
                self.iteration_log.append(
                    IterationReport(True, self.delta, lengths))
            else:
                self.iteration_log.append(IterationReport(False, self.delta))
                # the truncated search proves maximality but may stop before
                # the certificate blossoms form; the sweep rebuilds them and
                # cannot augment a maximum matching
                self.finish_off()
                break
        edges = self.matching_edges()
        osc = self.build_odd_set_cover()
        return SolveResult(edges=edges, osc=osc, size=self.size,
                           iterations=iterations, counters=self.counters)


def solve(g: StaticGraph, heur_factor: float = 1.0, heur: bool = True,
          init_matching=None) -> SolveResult:
    """One-shot convenience wrapper around ScalingMatcher."""
    matcher = ScalingMatcher(g)
    if init_matching is not None:
        matcher.init_with_matching(init_matching)
    return matcher.solve(heur_factor=heur_factor, heur=heur)
