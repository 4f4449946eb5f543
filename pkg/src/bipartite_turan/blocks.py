"""Connectivity classification and block (biconnected component) decomposition.

Blocks are computed with a one-pass lowpoint DFS over an edge stack. The
empty and one-vertex graphs count as connected; 2-connectivity requires at
least three vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import BipartiteGraph, iter_bits


def _reach_mask(adj: tuple[int, ...] | list[int], start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from ``start`` inside ``allowed``."""
    reach = 1 << start
    frontier = reach
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            m ^= low
            nxt |= adj[low.bit_length() - 1]
        frontier = nxt & allowed & ~reach
        reach |= frontier
    return reach


def _is_connected_rows(adj, n: int) -> bool:
    if n <= 1:
        return True
    full = (1 << n) - 1
    return _reach_mask(adj, 0, full) == full


def _lowpoint_blocks(adj, n: int):
    """Edge-partition into blocks plus the cut-vertex set.

    Caller guarantees connectivity; the DFS is rooted at vertex 0.
    Returns (blocks, cuts) where blocks is a list of vertex sets.
    """
    disc = [-1] * n
    low = [0] * n
    edge_stack: list[tuple[int, int]] = []
    blocks: list[set[int]] = []
    cuts: set[int] = set()
    timer = 0

    def dfs(u: int, parent: int) -> None:
        nonlocal timer
        disc[u] = low[u] = timer
        timer += 1
        children = 0
        for w in iter_bits(adj[u]):
            if disc[w] == -1:
                children += 1
                edge_stack.append((u, w))
                dfs(w, u)
                low[u] = min(low[u], low[w])
                if low[w] >= disc[u]:
                    if parent != -1 or children > 1:
                        cuts.add(u)
                    block: set[int] = set()
                    while True:
                        x, y = edge_stack.pop()
                        block.add(x)
                        block.add(y)
                        if (x, y) == (u, w):
                            break
                    blocks.append(block)
            elif w != parent and disc[w] < disc[u]:
                edge_stack.append((u, w))
                low[u] = min(low[u], disc[w])

    if n:
        dfs(0, -1)
    return blocks, cuts


def _is_two_connected_rows(adj, n: int) -> bool:
    if n < 3 or not _is_connected_rows(adj, n):
        return False
    _, cuts = _lowpoint_blocks(adj, n)
    return not cuts


def is_connected(g: BipartiteGraph) -> bool:
    """True iff ``g`` has a single component (empty graph counts as connected)."""
    return _is_connected_rows(g.adj, g.n)


def is_two_connected(g: BipartiteGraph) -> bool:
    """True iff ``g`` has >= 3 vertices, is connected, and has no cut vertex."""
    return _is_two_connected_rows(g.adj, g.n)


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (maximal 2-connected subgraphs or bridge edges) and cut vertices.

    ``block_cut_tree`` lists (block index, cut vertex) incidences; block
    indices refer to ``blocks``, which is sorted by vertex content for
    deterministic output.
    """

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    block_cut_tree: tuple[tuple[int, int], ...]

    def to_json_dict(self) -> dict:
        return {
            "blocks": [sorted(b) for b in self.blocks],
            "cut_vertices": sorted(self.cut_vertices),
            "block_cut_tree": [list(pair) for pair in self.block_cut_tree],
        }


def block_decomposition(g: BipartiteGraph) -> BlockDecomposition:
    """Decompose a connected graph into blocks; raises on disconnected input."""
    if not is_connected(g):
        raise ValueError("block decomposition requires a connected graph")
    raw_blocks, cuts = _lowpoint_blocks(g.adj, g.n)
    ordered = sorted(raw_blocks, key=sorted)
    tree = tuple(
        (idx, v)
        for idx, block in enumerate(ordered)
        for v in sorted(block & cuts)
    )
    return BlockDecomposition(
        blocks=tuple(frozenset(b) for b in ordered),
        cut_vertices=frozenset(cuts),
        block_cut_tree=tree,
    )
