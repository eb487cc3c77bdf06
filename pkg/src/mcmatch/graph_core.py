"""Static undirected multigraph, instance generators and edge-list file I/O.

Nodes and edges carry dense 0-based integer ids.  An edge stores the
``(source, target)`` pair it was created with; "direction" only means this
stored orientation.  Adjacency lists hold edge ids in global edge-creation
order, all lists ordered consistently -- this order is part of the observable
contract because greedy initialization and DFS tie-breaking consume it.
Parallel edges and self-loops are permitted; a self-loop appears twice in its
endpoint's adjacency list.
"""

from __future__ import annotations

import numpy as np


class EdgeListError(ValueError):
    """Malformed edge-list file; ``line`` is the 1-based offending line."""

    def __init__(self, message: str, line: int):
        super().__init__(f"{message}, line {line}")
        self.line = line


class StaticGraph:
    """Immutable undirected multigraph over dense integer ids.

    Use :func:`build_graph` to construct one.  ``adj_offsets``/``adj_edges``
    form a CSR view of the adjacency lists: the incident edge ids of node v
    are ``adj_edges[adj_offsets[v]:adj_offsets[v + 1]]``.
    """

    __slots__ = ("node_count", "edge_count", "edge_source", "edge_target",
                 "adj_offsets", "adj_edges")

    def __init__(self, node_count, edge_source, edge_target, adj_offsets, adj_edges):
        self.node_count = node_count
        self.edge_count = len(edge_source)
        self.edge_source = edge_source
        self.edge_target = edge_target
        self.adj_offsets = adj_offsets
        self.adj_edges = adj_edges

    def edges(self):
        """Iterator over (source, target) pairs in global edge order."""
        for e in range(self.edge_count):
            yield int(self.edge_source[e]), int(self.edge_target[e])

    def incident_edges(self, v: int):
        """Edge ids incident to v, in global edge order (read-only view)."""
        return self.adj_edges[self.adj_offsets[v]:self.adj_offsets[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.adj_offsets[v + 1] - self.adj_offsets[v])

    def opposite(self, e: int, v: int) -> int:
        """The other endpoint of e; for a self-loop returns v itself."""
        s = int(self.edge_source[e])
        t = int(self.edge_target[e])
        if v == s:
            return t
        if v == t:
            return s
        raise ValueError(f"node {v} is not an endpoint of edge {e}")

    def degree_multiset(self):
        return sorted(self.degree(v) for v in range(self.node_count))


def build_graph(node_count: int, edges) -> StaticGraph:
    """Build a StaticGraph from a sequence of (source, target) pairs.

    Raises ValueError when an endpoint is out of range.
    """
    pairs = np.asarray(list(edges), dtype=np.int64)
    if pairs.size == 0:
        pairs = pairs.reshape(0, 2)
    src = pairs[:, 0].astype(np.int32)
    tgt = pairs[:, 1].astype(np.int32)
    if pairs.size and (pairs.min() < 0 or pairs.max() >= node_count):
        bad = int(np.flatnonzero((src < 0) | (src >= node_count)
                                 | (tgt < 0) | (tgt >= node_count))[0])
        raise ValueError(
            f"edge {bad} = ({int(src[bad])}, {int(tgt[bad])}) has an endpoint "
            f"outside [0, {node_count})")
    return _finish_graph(node_count, src, tgt)


def _finish_graph(node_count, src, tgt) -> StaticGraph:
    m = len(src)
    deg = np.bincount(src, minlength=node_count) + np.bincount(tgt, minlength=node_count)
    offsets = np.zeros(node_count + 1, dtype=np.int64)
    np.cumsum(deg, out=offsets[1:])
    adj = np.empty(2 * m, dtype=np.int32)
    cursor = offsets[:-1].copy()
    for e in range(m):
        adj[cursor[src[e]]] = e
        cursor[src[e]] += 1
        adj[cursor[tgt[e]]] = e
        cursor[tgt[e]] += 1
    g = StaticGraph(node_count, src, tgt, offsets, adj)
    for arr in (g.edge_source, g.edge_target, g.adj_offsets, g.adj_edges):
        arr.setflags(write=False)
    return g


def generate_random(n: int, m: int, seed: int) -> StaticGraph:
    """Random multigraph with n nodes and m edges, endpoints uniform i.i.d.
    from a seeded PCG64 generator.  Identical (n, m, seed) give identical
    graphs; self-loops and parallel edges can occur."""
    rng = np.random.Generator(np.random.PCG64(seed))
    src = rng.integers(0, n, size=m, dtype=np.int64).astype(np.int32)
    tgt = rng.integers(0, n, size=m, dtype=np.int64).astype(np.int32)
    return _finish_graph(n, src, tgt)


def _complete_graph(edges, m: int) -> int:
    """Append a complete graph on 2*floor(sqrt(m/2)) fresh nodes (about m
    edges, double-loop order) and return its first node."""
    c = 2 * int(np.sqrt(m / 2.0))
    for i in range(c):
        for j in range(i + 1, c):
            edges.append((i, j))
    return 0


def _chain(edges, first: int, k: int, z: int) -> int:
    """Append a k-node chain hanging off z; returns the next free node id.

    Edge order is (0,z), then (i,i+1),(i,z) interleaved for 1 <= i < k-1,
    and finally (0,1).  That order makes the greedy matching pick
    (1,2),(3,4),... and leave nodes 0 and k-1 of the chain exposed; the
    (i,z) edges force searches entering at z to fan out over the complete
    graph first.
    """
    a = first
    edges.append((a, z))
    for i in range(1, k - 1):
        edges.append((a + i, a + i + 1))
        edges.append((a + i, z))
    edges.append((a, a + 1))
    return a + k


def generate_worst_case(n: int, m: int, mode: int) -> tuple[StaticGraph, int]:
    """Worst-case family: a complete graph on ~sqrt(2m) nodes plus chains.

    Always appends n/8 chains of 8 nodes; with mode=1 additionally one chain
    of 2k nodes for every k with 5 <= k < sqrt(n).  Returns the graph and the
    complete graph's first node z (the attachment point of every chain).

    With mode=0 the short augmenting paths keep the number of scaling-matcher
    iterations constant; with mode=1 the long chains force Theta(sqrt(n))
    iterations.
    """
    if n < 8 or m < 2:
        raise ValueError("generate_worst_case requires n >= 8 and m >= 2")
    edges: list[tuple[int, int]] = []
    z = _complete_graph(edges, m)
    first = 2 * int(np.sqrt(m / 2.0))
    for _ in range(n // 8):
        first = _chain(edges, first, 8, z)
    if mode == 1:
        k = 5
        while k * k < n:
            first = _chain(edges, first, 2 * k, z)
            k += 1
    return build_graph(first, edges), z


def permute_representation(g: StaticGraph, seed: int) -> StaticGraph:
    """Random representation of the same abstract graph: node ids relabeled by
    a uniform permutation and the global edge order permuted; adjacency lists
    are rebuilt from the permuted order, so all lists are permuted in the same
    way."""
    rng = np.random.Generator(np.random.PCG64(seed))
    node_map = np.empty(g.node_count, dtype=np.int32)
    node_map[rng.permutation(g.node_count)] = np.arange(g.node_count, dtype=np.int32)
    edge_order = rng.permutation(g.edge_count)
    src = node_map[g.edge_source[edge_order]]
    tgt = node_map[g.edge_target[edge_order]]
    return _finish_graph(g.node_count, src, tgt)


def read_edge_list(path) -> StaticGraph:
    """Read a graph from the text edge-list format (header "n m", then one
    "u v" line per edge in global edge order, 0-based ids)."""
    with open(path, "r", encoding="utf-8") as f:
        lines = f.read().split("\n")
    header = lines[0].split() if lines else []
    if len(header) != 2:
        raise EdgeListError("malformed header, expected 'n m'", 1)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise EdgeListError("malformed header, expected 'n m'", 1) from None
    edges = []
    for i in range(m):
        lineno = i + 2
        if i + 1 >= len(lines):
            raise EdgeListError("unexpected end of file", lineno)
        parts = lines[i + 1].split()
        if len(parts) != 2:
            raise EdgeListError("malformed edge line, expected 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError("malformed edge line, expected 'u v'", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError("endpoint out of range", lineno)
        edges.append((u, v))
    return build_graph(n, edges)


def write_edge_list(g: StaticGraph, path) -> None:
    """Write the exact (node_count, ordered edge sequence) representation;
    read_edge_list(write_edge_list(g)) reproduces it."""
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(f"{g.node_count} {g.edge_count}\n")
        for u, v in g.edges():
            f.write(f"{u} {v}\n")
