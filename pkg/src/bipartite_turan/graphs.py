"""Bipartite graphs with distinguished color classes, stored as bitset adjacency.

Index convention, shared by every module and every serialized artifact of
this package: vertices 0..a-1 form class A, vertices a..a+b-1 form class B.
Class membership is therefore computable from the index alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import GraphFormatError, VertexCapExceeded

#: graph6 short form stops at 62 vertices; every search here stays far below.
VERTEX_CAP = 62


def iter_bits(mask: int) -> Iterator[int]:
    """Yield indices of the set bits of ``mask``, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class BipartiteGraph:
    """Immutable bipartite graph.

    ``adj[v]`` is a bitmask over all vertex indices: bit ``w`` is set iff
    ``v`` and ``w`` are adjacent. Instances validate bipartiteness,
    symmetry and loop-freeness on construction and are safe to share
    across concurrent workers.
    """

    a_size: int
    b_size: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        a, b = self.a_size, self.b_size
        if a < 0 or b < 0:
            raise ValueError("class sizes must be non-negative")
        n = a + b
        if n > VERTEX_CAP:
            raise VertexCapExceeded(f"{n} vertices exceeds the cap of {VERTEX_CAP}")
        if len(self.adj) != n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << n) - 1
        a_mask = (1 << a) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row of vertex {v} addresses unknown vertices")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            same_class = a_mask if v < a else full ^ a_mask
            if row & same_class:
                raise ValueError(f"vertex {v} has a neighbour inside its own class")
        for v, row in enumerate(self.adj):
            for w in iter_bits(row):
                if not self.adj[w] >> v & 1:
                    raise ValueError(f"adjacency is not symmetric at ({v}, {w})")

    # ---- basic accessors -------------------------------------------------

    @property
    def n(self) -> int:
        return self.a_size + self.b_size

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def in_a(self, v: int) -> bool:
        return v < self.a_size

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (A-vertex, B-vertex) pairs in lexicographic order."""
        return [(u, v) for u in range(self.a_size) for v in iter_bits(self.adj[u])]

    # ---- derived graphs --------------------------------------------------

    def induced_subgraph(self, keep: Iterable[int]) -> "BipartiteGraph":
        """Subgraph induced on ``keep``, reindexed preserving class membership.

        Kept A-vertices receive the new indices 0..a'-1 in their original
        relative order, kept B-vertices follow likewise.
        """
        kept = sorted(set(keep))
        for v in kept:
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} is not in the graph")
        new_index = {v: i for i, v in enumerate(kept)}
        new_a = sum(1 for v in kept if v < self.a_size)
        rows = [0] * len(kept)
        for v in kept:
            for w in iter_bits(self.adj[v]):
                if w in new_index:
                    rows[new_index[v]] |= 1 << new_index[w]
        return BipartiteGraph(new_a, len(kept) - new_a, tuple(rows))

    def relabeled(self, a_perm: Sequence[int], b_perm: Sequence[int]) -> "BipartiteGraph":
        """Apply class-preserving permutations (old index -> new index)."""
        a, n = self.a_size, self.n
        if sorted(a_perm) != list(range(a)) or sorted(b_perm) != list(range(self.b_size)):
            raise ValueError("permutations must cover each class exactly")
        new_of = [0] * n
        for old, new in enumerate(a_perm):
            new_of[old] = new
        for old, new in enumerate(b_perm):
            new_of[a + old] = a + new
        rows = [0] * n
        for v in range(n):
            for w in iter_bits(self.adj[v]):
                rows[new_of[v]] |= 1 << new_of[w]
        return BipartiteGraph(a, self.b_size, tuple(rows))

    # ---- serialization ---------------------------------------------------

    def to_graph6(self) -> bytes:
        """Header-less graph6 bytes (standard 6-bit upper-triangle encoding)."""
        n = self.n
        bits = []
        for j in range(1, n):
            for i in range(j):
                bits.append(self.adj[i] >> j & 1)
        out = [63 + n]
        for g in range(0, len(bits), 6):
            chunk = bits[g:g + 6]
            chunk += [0] * (6 - len(chunk))
            val = 0
            for bit in chunk:
                val = val << 1 | bit
            out.append(63 + val)
        return bytes(out)

    @classmethod
    def from_graph6(cls, data: bytes, a_size: int) -> "BipartiteGraph":
        """Decode graph6 bytes; the bipartition is declared out-of-band.

        The decoded graph must be bipartite with classes exactly
        {0..a_size-1} and {a_size..n-1}, otherwise GraphFormatError.
        """
        data = bytes(data).strip()
        if not data:
            raise GraphFormatError("empty graph6 data")
        n = data[0] - 63
        if not 0 <= n <= VERTEX_CAP:
            raise GraphFormatError("only single-byte graph6 sizes (n <= 62) are supported")
        if not 0 <= a_size <= n:
            raise GraphFormatError(f"a_size {a_size} incompatible with {n} vertices")
        need = (n * (n - 1) // 2 + 5) // 6
        body = data[1:]
        if len(body) != need:
            raise GraphFormatError(f"expected {need} payload bytes, got {len(body)}")
        bits = []
        for byte in body:
            val = byte - 63
            if not 0 <= val < 64:
                raise GraphFormatError("byte outside the graph6 alphabet")
            bits.extend(val >> shift & 1 for shift in range(5, -1, -1))
        rows = [0] * n
        pos = 0
        for j in range(1, n):
            for i in range(j):
                if bits[pos]:
                    if (i < a_size) == (j < a_size):
                        raise GraphFormatError(
                            f"edge ({i}, {j}) lies inside one class of the declared split")
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                pos += 1
        if any(bits[pos:]):
            raise GraphFormatError("nonzero padding bits")
        return cls(a_size, n - a_size, tuple(rows))

    def to_dot(self) -> str:
        """DOT text with the two color classes on distinct ranks."""
        lines = ["graph bipartite {", "  rankdir=LR;"]
        a_names = "; ".join(f"a{i}" for i in range(self.a_size))
        b_names = "; ".join(f"b{j}" for j in range(self.b_size))
        lines.append("  { rank=same; %s }" % (a_names + ";" if a_names else ""))
        lines.append("  { rank=same; %s }" % (b_names + ";" if b_names else ""))
        for u, v in self.edges():
            lines.append(f"  a{u} -- b{v - self.a_size};")
        lines.append("}")
        return "\n".join(lines) + "\n"


class GraphBuilder:
    """Mutable edge accumulator; single-owner, finalized into a BipartiteGraph."""

    def __init__(self, a_size: int, b_size: int):
        if a_size < 0 or b_size < 0:
            raise ValueError("class sizes must be non-negative")
        if a_size + b_size > VERTEX_CAP:
            raise VertexCapExceeded(
                f"{a_size + b_size} vertices exceeds the cap of {VERTEX_CAP}")
        self.a_size = a_size
        self.b_size = b_size
        self._rows = [0] * (a_size + b_size)

    def add_edge(self, u: int, v: int) -> "GraphBuilder":
        """Add the edge between A-vertex ``u`` and B-vertex ``v``; idempotent."""
        a, n = self.a_size, self.a_size + self.b_size
        if not 0 <= u < a:
            raise ValueError(f"u={u} is not an A-vertex (need 0 <= u < {a})")
        if not a <= v < n:
            raise ValueError(f"v={v} is not a B-vertex (need {a} <= v < {n})")
        self._rows[u] |= 1 << v
        self._rows[v] |= 1 << u
        return self

    def finalize(self) -> BipartiteGraph:
        return BipartiteGraph(self.a_size, self.b_size, tuple(self._rows))


def empty(a: int, b: int) -> BipartiteGraph:
    """Graph on classes of sizes (a, b) with no edges."""
    return GraphBuilder(a, b).finalize()


def complete_bipartite(a: int, b: int) -> BipartiteGraph:
    """K_{a,b}: every A-vertex adjacent to every B-vertex."""
    builder = GraphBuilder(a, b)
    for u in range(a):
        for v in range(a, a + b):
            builder.add_edge(u, v)
    return builder.finalize()


def from_edges(a: int, b: int, edges: Iterable[tuple[int, int]]) -> BipartiteGraph:
    """Build a graph from (A-vertex, B-vertex) pairs."""
    builder = GraphBuilder(a, b)
    for u, v in edges:
        builder.add_edge(u, v)
    return builder.finalize()
