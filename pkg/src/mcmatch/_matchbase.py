"""Shared pieces of the matching engines: node labels, greedy initialization,
matching extraction and odd-set-cover construction.

All engines operate on flat numpy arrays (int32 ids, -1 for "nil") and are
compiled with numba.  Label values are shared across every engine.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .partition import pf_find

EVEN = 0
ODD = 1
UNLABELED = 2

NIL = -1


@njit(cache=True)
def greedy_matching(edge_source, edge_target, mate):
    """Greedy matching in global edge order: mate u,v whenever both are still
    free and the edge is not a self-loop.  Returns the number of matched pairs
    added."""
    size = 0
    for e in range(edge_source.shape[0]):
        u = edge_source[e]
        v = edge_target[e]
        if u != v and mate[u] == NIL and mate[v] == NIL:
            mate[u] = v
            mate[v] = u
            size += 1
    return size


@njit(cache=True)
def adopt_matching(edge_source, edge_target, edge_ids, mate):
    """Mate the endpoints of the given edges, skipping self-loops and edges
    that conflict with pairs adopted earlier.  Returns the number adopted."""
    size = 0
    for i in range(edge_ids.shape[0]):
        e = edge_ids[i]
        u = edge_source[e]
        v = edge_target[e]
        if u != v and mate[u] == NIL and mate[v] == NIL:
            mate[u] = v
            mate[v] = u
            size += 1
    return size


@njit(cache=True)
def extract_matching(edge_source, edge_target, mate, out):
    """Collect one edge id per mated pair into ``out`` (parallel edges are
    deduplicated by temporarily unmating the pair).  The mate map is restored
    before returning.  Returns the number of edges written."""
    count = 0
    for e in range(edge_source.shape[0]):
        u = edge_source[e]
        v = edge_target[e]
        if u != v and mate[u] == v:
            out[count] = e
            count += 1
            mate[u] = NIL
            mate[v] = NIL
    for i in range(count):
        e = out[i]
        mate[edge_source[e]] = edge_target[e]
        mate[edge_target[e]] = edge_source[e]
    return count


@njit(cache=True)
def build_osc(label, part_parent, part_rep, osc):
    """Construct an odd-set cover from final search-structure labels and the
    blossom partition.

    Unlabeled nodes are matched and come in pairs: one of them is labeled 1,
    the rest 0 (exactly two unlabeled) or 2 (more than two).  Every
    non-trivial blossom gets a fresh label starting at 2 or 3, and trivial
    nodes are labeled 0 if even and 1 if odd.
    """
    n = label.shape[0]
    osc[:] = -1

    number_of_unlabeled = 0
    arb_u_node = NIL
    for v in range(n):
        if label[v] == UNLABELED:
            number_of_unlabeled += 1
            arb_u_node = v

    big = 0
    if number_of_unlabeled > 0:
        osc[arb_u_node] = 1
        if number_of_unlabeled > 2:
            big = 2
        for v in range(n):
            if label[v] == UNLABELED and v != arb_u_node:
                osc[v] = big

    next_label = 2 if big == 0 else 3
    for v in range(n):
        b = pf_find(part_parent, part_rep, v)
        if b != v and osc[b] == -1:
            osc[b] = next_label
            next_label += 1
    for v in range(n):
        b = pf_find(part_parent, part_rep, v)
        if b == v and osc[v] == -1:
            if label[v] == EVEN:
                osc[v] = 0
            elif label[v] == ODD:
                osc[v] = 1
        if b != v:
            osc[v] = osc[b]
