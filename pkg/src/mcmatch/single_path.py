"""Single-augmenting-path Edmonds engines.

Two engines live here:

* a depth-first matcher with the two most effective Kececioglu-Pecqueur
  heuristic improvements (breakthrough scan and DFS with blossom shrinking on
  forward edges only).  It doubles as the finisher of the scaling matcher:
  the standalone entry point and the finisher share one sweep kernel,
  parameterized only by how mate/label/partition state was prepared.
* a queue-driven matcher growing one alternating tree at a time with
  lock-step LCA detection, the classical baseline.

Search depth can reach Theta(n), so every recursive procedure is written
with an explicit stack.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from ._matchbase import (EVEN, NIL, ODD, UNLABELED, build_osc,
                         extract_matching, greedy_matching)
from .counters import CNT_EDGE_SCANS, CNT_QUEUE_OPS, CNT_UNIONS, new_counters
from .graph_core import StaticGraph
from .partition import pf_find, pf_make_rep, pf_reset, pf_union


@njit(cache=True)
def _find_aug_path(v0, esrc, etgt, adj_off, adj_edges,
                   mate, label, parent, source_bridge, target_bridge,
                   even_time, pp, prk, prep,
                   tbuf, tlen, ecbox,
                   fv, fei, fpass, ftlo, fthi, ftix, tmpbuf, counters):
    """DFS for an augmenting path from the tree root v0.

    Pass 1 of every node first scans for an adjacent free unlabeled node and
    returns it immediately (breakthrough).  Pass 2 grows the tree over
    unlabeled nodes or shrinks a blossom when the edge is a forward edge
    (the far base became even later than the near base); newly even nodes
    are explored closest-to-the-base first.  Touched nodes are appended to
    tbuf.  Returns (endpoint or -1, new tbuf length).
    """
    top = 0
    fv[0] = v0
    fei[0] = adj_off[v0]
    fpass[0] = 1
    tmp_top = 0
    result = NIL
    while top >= 0 and result == NIL:
        v = fv[top]
        mode = fpass[top]
        if mode == 1:
            # breakthrough scan
            i = fei[top]
            start = i
            hit = NIL
            while i < adj_off[v + 1]:
                e = adj_edges[i]
                i += 1
                w = etgt[e] if esrc[e] == v else esrc[e]
                if v == w:
                    continue
                if mate[w] == NIL and label[w] == UNLABELED:
                    parent[w] = v
                    tbuf[tlen] = w
                    tlen += 1
                    label[w] = ODD
                    hit = w
                    break
            counters[CNT_EDGE_SCANS] += i - start
            if hit != NIL:
                result = hit
                break
            fpass[top] = 2
            fei[top] = adj_off[v]
            continue
        if mode == 3:
            # explore the nodes made even by a blossom step, nearest the
            # base first (they were recorded in walk order, so backwards)
            ix = ftix[top]
            if ix >= ftlo[top]:
                ftix[top] = ix - 1
                child = tmpbuf[ix]
                top += 1
                fv[top] = child
                fei[top] = adj_off[child]
                fpass[top] = 1
            else:
                fpass[top] = 2
            continue
        # mode == 2: grow / shrink scan
        i = fei[top]
        end = adj_off[v + 1]
        start = i
        grew = NIL
        while i < end:
            e = adj_edges[i]
            i += 1
            w = etgt[e] if esrc[e] == v else esrc[e]
            bw = pf_find(pp, prep, w)
            if label[bw] == ODD or w == v:
                continue
            if label[bw] == UNLABELED:
                label[w] = ODD
                parent[w] = v
                tbuf[tlen] = w
                tlen += 1
                mw = mate[w]
                label[mw] = EVEN
                tbuf[tlen] = mw
                tlen += 1
                even_time[mw] = ecbox[0]
                ecbox[0] += 1
                grew = mw
                break
            bv = pf_find(pp, prep, v)
            if even_time[bv] < even_time[bw]:
                # blossom step along a forward edge: walk down from bw to bv
                lo = tmp_top
                while bw != bv:
                    mate_bw = mate[bw]
                    counters[CNT_UNIONS] += 1
                    pf_union(pp, prk, bw, mate_bw)
                    bw = pf_find(pp, prep, parent[mate_bw])
                    counters[CNT_UNIONS] += 1
                    pf_union(pp, prk, mate_bw, bw)
                    tmpbuf[tmp_top] = mate_bw
                    tmp_top += 1
                    source_bridge[mate_bw] = w
                    target_bridge[mate_bw] = v
                pf_make_rep(pp, prep, bv)
                fpass[top] = 3
                ftlo[top] = lo
                fthi[top] = tmp_top
                ftix[top] = tmp_top - 1
                break
        counters[CNT_EDGE_SCANS] += i - start
        fei[top] = i
        if grew != NIL:
            top += 1
            fv[top] = grew
            fei[top] = adj_off[grew]
            fpass[top] = 1
            continue
        if i >= end and fpass[top] == 2:
            top -= 1
    return result, tlen


@njit(cache=True)
def _collect_path_pairs(x0, y0, w0, mate, label, parent,
                        source_bridge, target_bridge, pairbuf, ta, tb):
    """Non-matching edges of the augmenting path ending in the free node w0,
    as endpoint pairs in pairbuf: the pair (w0, parent[w0]) plus the pairs of
    the even alternating path from x0 back to the root y0."""
    plen = 0
    pairbuf[plen] = w0
    plen += 1
    pairbuf[plen] = x0
    plen += 1
    top = 0
    ta[0] = x0
    tb[0] = y0
    while top >= 0:
        x = ta[top]
        y = tb[top]
        top -= 1
        if x == y:
            continue
        if label[x] == EVEN:
            mx = mate[x]
            pmx = parent[mx]
            pairbuf[plen] = mx
            plen += 1
            pairbuf[plen] = pmx
            plen += 1
            top += 1
            ta[top] = pmx
            tb[top] = y
        else:
            pairbuf[plen] = source_bridge[x]
            plen += 1
            pairbuf[plen] = target_bridge[x]
            plen += 1
            top += 1
            ta[top] = source_bridge[x]
            tb[top] = mate[x]
            top += 1
            ta[top] = target_bridge[x]
            tb[top] = y
    return plen


@njit(cache=True)
def single_path_sweep(n, esrc, etgt, adj_off, adj_edges,
                      mate, label, parent, source_bridge, target_bridge,
                      even_time, pp, prk, prep,
                      tbuf, pairbuf, ta, tb,
                      fv, fei, fpass, ftlo, fthi, ftix, tmpbuf,
                      ecbox, counters):
    """Grow a search tree at every free node and augment on success.

    On success only the touched nodes are unlabeled and split; the nodes of a
    failed tree keep their labels and never rejoin a tree, so each of them is
    paid for once.  The caller prepares mate/label/partition state.  Returns
    the number of augmentations performed.
    """
    augmented = 0
    for v0 in range(n):
        if mate[v0] != NIL:
            continue
        label[v0] = EVEN
        tlen = 0
        tbuf[tlen] = v0
        tlen += 1
        even_time[v0] = ecbox[0]
        ecbox[0] += 1
        w, tlen = _find_aug_path(v0, esrc, etgt, adj_off, adj_edges,
                                 mate, label, parent, source_bridge,
                                 target_bridge, even_time, pp, prk, prep,
                                 tbuf, tlen, ecbox,
                                 fv, fei, fpass, ftlo, fthi, ftix, tmpbuf,
                                 counters)
        if w != NIL:
            pw = parent[w]
            plen = _collect_path_pairs(pw, v0, w, mate, label, parent,
                                       source_bridge, target_bridge,
                                       pairbuf, ta, tb)
            for i in range(0, plen, 2):
                a = pairbuf[i]
                b = pairbuf[i + 1]
                mate[a] = b
                mate[b] = a
            for i in range(tlen):
                label[tbuf[i]] = UNLABELED
            pf_reset(pp, prk, prep, tbuf[:tlen])
            augmented += 1
    return augmented


@njit(cache=True)
def _append_path_nodes(v0, hv, w0, label, mate, pred,
                       source_bridge, target_bridge, seq, tkind, ta, tb):
    """Node sequence [w0, v0, ..., hv] of the augmenting path for the
    queue engine; consecutive pairs are the edges to be mated.

    The alternating path from an odd node runs backwards through its blossom
    bridge, so that sub-path is generated and then reversed in place.
    """
    slen = 0
    seq[slen] = w0
    slen += 1
    top = 0
    tkind[0] = 0
    ta[0] = v0
    tb[0] = hv
    while top >= 0:
        kind = tkind[top]
        a = ta[top]
        b = tb[top]
        top -= 1
        if kind == 1:
            # reverse seq[a:slen]
            i = a
            j = slen - 1
            while i < j:
                t = seq[i]
                seq[i] = seq[j]
                seq[j] = t
                i += 1
                j -= 1
            continue
        x = a
        y = b
        if x == y:
            seq[slen] = x
            slen += 1
            continue
        if label[x] == EVEN:
            seq[slen] = x
            slen += 1
            seq[slen] = mate[x]
            slen += 1
            top += 1
            tkind[top] = 0
            ta[top] = pred[mate[x]]
            tb[top] = y
        else:
            seq[slen] = x
            slen += 1
            top += 1
            tkind[top] = 0
            ta[top] = target_bridge[x]
            tb[top] = y
            top += 1
            tkind[top] = 1
            ta[top] = slen
            tb[top] = 0
            top += 1
            tkind[top] = 0
            ta[top] = source_bridge[x]
            tb[top] = mate[x]
    return slen


@njit(cache=True)
def _queue_shrink_path(b, v, w, mate, pred, source_bridge, target_bridge,
                       pp, prk, prep, qbuf, qt, counters):
    """Collapse the tree path from v's base to b; newly even nodes are
    enqueued.  Returns the new queue tail."""
    x = pf_find(pp, prep, v)
    while x != b:
        counters[CNT_UNIONS] += 1
        pf_union(pp, prk, x, b)
        x = mate[x]
        counters[CNT_UNIONS] += 1
        pf_union(pp, prk, x, b)
        pf_make_rep(pp, prep, b)
        qbuf[qt] = x
        qt += 1
        source_bridge[x] = v
        target_bridge[x] = w
        x = pf_find(pp, prep, pred[x])
    return qt


@njit(cache=True)
def _queue_engine(n, esrc, etgt, adj_off, adj_edges, heur,
                  mate, label, pred, source_bridge, target_bridge,
                  path1, path2, pp, prk, prep,
                  qbuf, tbuf, seq, tkind, ta, tb, counters):
    """Queue-driven tree growth with lock-step ancestor walks; one tree at a
    time.  All nodes start EVEN (free); a greedy matching unlabels the matched
    pairs when heur is 1.  Returns the matching size."""
    size = 0
    strue = 0
    if heur == 1:
        for e in range(esrc.shape[0]):
            u = esrc[e]
            v = etgt[e]
            if u != v and mate[u] == NIL and mate[v] == NIL:
                mate[u] = v
                label[u] = UNLABELED
                mate[v] = u
                label[v] = UNLABELED
                size += 1
    for v0 in range(n):
        if mate[v0] != NIL:
            continue
        qh = 0
        qt = 0
        qbuf[qt] = v0
        qt += 1
        tlen = 0
        tbuf[tlen] = v0
        tlen += 1
        breakthrough = False
        while not breakthrough and qh < qt:
            v = qbuf[qh]
            qh += 1
            for i in range(adj_off[v], adj_off[v + 1]):
                counters[CNT_EDGE_SCANS] += 1
                e = adj_edges[i]
                w = etgt[e] if esrc[e] == v else esrc[e]
                bw = pf_find(pp, prep, w)
                if pf_find(pp, prep, v) == bw or label[bw] == ODD:
                    continue
                if label[w] == UNLABELED:
                    label[w] = ODD
                    tbuf[tlen] = w
                    tlen += 1
                    pred[w] = v
                    mw = mate[w]
                    label[mw] = EVEN
                    tbuf[tlen] = mw
                    tlen += 1
                    qbuf[qt] = mw
                    qt += 1
                else:
                    # base(w) is EVEN: lock-step walk towards the roots
                    hv = pf_find(pp, prep, v)
                    hw = bw
                    strue += 1
                    path1[hv] = strue
                    path2[hw] = strue
                    while ((path1[hw] != strue and path2[hv] != strue)
                           and (mate[hv] != NIL or mate[hw] != NIL)):
                        if mate[hv] != NIL:
                            hv = pf_find(pp, prep, pred[mate[hv]])
                            path1[hv] = strue
                        if mate[hw] != NIL:
                            hw = pf_find(pp, prep, pred[mate[hw]])
                            path2[hw] = strue
                    if path1[hw] == strue or path2[hv] == strue:
                        b = hw if path1[hw] == strue else hv
                        qt = _queue_shrink_path(b, v, w, mate, pred,
                                                source_bridge, target_bridge,
                                                pp, prk, prep, qbuf, qt,
                                                counters)
                        qt = _queue_shrink_path(b, w, v, mate, pred,
                                                source_bridge, target_bridge,
                                                pp, prk, prep, qbuf, qt,
                                                counters)
                    else:
                        # w is a free node: augment along the tree path to v
                        slen = _append_path_nodes(v, hv, w, label, mate, pred,
                                                  source_bridge, target_bridge,
                                                  seq, tkind, ta, tb)
                        for j in range(0, slen, 2):
                            a = seq[j]
                            bnode = seq[j + 1]
                            mate[a] = bnode
                            mate[bnode] = a
                        tbuf[tlen] = w
                        tlen += 1
                        for j in range(tlen):
                            label[tbuf[j]] = UNLABELED
                        pf_reset(pp, prk, prep, tbuf[:tlen])
                        size += 1
                        breakthrough = True
                        break
    return size


@dataclass
class MatchingResult:
    """Outcome of a matching engine run."""
    edges: np.ndarray          # one edge id per mated pair
    osc: np.ndarray            # odd-set-cover labels
    size: int
    iterations: int            # phase rounds (0 for the single-path engines)
    counters: np.ndarray       # [edge_scans, unions, queue_ops]


def _alloc_sweep_buffers(n: int):
    cap = n + 2
    return (np.empty(cap, dtype=np.int32),        # tbuf
            np.empty(2 * n + 8, dtype=np.int32),  # pairbuf
            np.empty(2 * n + 8, dtype=np.int32),  # ta
            np.empty(2 * n + 8, dtype=np.int32),  # tb
            np.empty(cap, dtype=np.int32),        # fv
            np.empty(cap, dtype=np.int64),        # fei
            np.empty(cap, dtype=np.int8),         # fpass
            np.empty(cap, dtype=np.int32),        # ftlo
            np.empty(cap, dtype=np.int32),        # fthi
            np.empty(cap, dtype=np.int32),        # ftix
            np.empty(cap, dtype=np.int32))        # tmpbuf


def kp_matcher(g: StaticGraph, heur: int = 1) -> MatchingResult:
    """Depth-first matcher with the KP heuristics; greedy init when heur=1."""
    n = g.node_count
    counters = new_counters()
    mate = np.full(n, NIL, dtype=np.int32)
    label = np.full(n, UNLABELED, dtype=np.uint8)
    parent = np.full(n, NIL, dtype=np.int32)
    source_bridge = np.full(n, NIL, dtype=np.int32)
    target_bridge = np.full(n, NIL, dtype=np.int32)
    even_time = np.zeros(n, dtype=np.int64)
    pp = np.arange(n, dtype=np.int32)
    prk = np.zeros(n, dtype=np.int32)
    prep = np.arange(n, dtype=np.int32)
    size = 0
    if heur == 1:
        size = int(greedy_matching(g.edge_source, g.edge_target, mate))
    (tbuf, pairbuf, ta, tb, fv, fei, fpass, ftlo, fthi, ftix,
     tmpbuf) = _alloc_sweep_buffers(n)
    ecbox = np.zeros(1, dtype=np.int64)
    if n:
        size += int(single_path_sweep(
            n, g.edge_source, g.edge_target, g.adj_offsets, g.adj_edges,
            mate, label, parent, source_bridge, target_bridge,
            even_time, pp, prk, prep,
            tbuf, pairbuf, ta, tb, fv, fei, fpass, ftlo, fthi, ftix, tmpbuf,
            ecbox, counters))
    out = np.empty(max(size, 1), dtype=np.int32)
    count = int(extract_matching(g.edge_source, g.edge_target, mate, out))
    osc = np.empty(n, dtype=np.int64)
    build_osc(label, pp, prep, osc)
    return MatchingResult(edges=out[:count], osc=osc, size=count,
                          iterations=0, counters=counters)


def queue_matcher(g: StaticGraph, heur: int = 1) -> MatchingResult:
    """Queue-based matcher; greedy init when heur=1."""
    n = g.node_count
    counters = new_counters()
    mate = np.full(n, NIL, dtype=np.int32)
    label = np.full(n, EVEN, dtype=np.uint8)
    pred = np.full(n, NIL, dtype=np.int32)
    source_bridge = np.full(n, NIL, dtype=np.int32)
    target_bridge = np.full(n, NIL, dtype=np.int32)
    path1 = np.zeros(n, dtype=np.int64)
    path2 = np.zeros(n, dtype=np.int64)
    pp = np.arange(n, dtype=np.int32)
    prk = np.zeros(n, dtype=np.int32)
    prep = np.arange(n, dtype=np.int32)
    qbuf = np.empty(n + 2, dtype=np.int32)
    tbuf = np.empty(n + 2, dtype=np.int32)
    seq = np.empty(2 * n + 8, dtype=np.int32)
    tkind = np.empty(2 * n + 8, dtype=np.int8)
    ta = np.empty(2 * n + 8, dtype=np.int32)
    tb = np.empty(2 * n + 8, dtype=np.int32)
    size = 0
    if n:
        size = int(_queue_engine(
            n, g.edge_source, g.edge_target, g.adj_offsets, g.adj_edges, heur,
            mate, label, pred, source_bridge, target_bridge,
            path1, path2, pp, prk, prep,
            qbuf, tbuf, seq, tkind, ta, tb, counters))
    out = np.empty(max(size, 1), dtype=np.int32)
    count = int(extract_matching(g.edge_source, g.edge_target, mate, out))
    osc = np.empty(n, dtype=np.int64)
    build_osc(label, pp, prep, osc)
    return MatchingResult(edges=out[:count], osc=osc, size=count,
                          iterations=0, counters=counters)
