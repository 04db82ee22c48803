"""Directed graphs and tournaments with king and strong-king predicates.

Vertices are the integers 0..n-1. Adjacency is kept as one bitmask per
vertex, which makes edge tests, two-step path counts and the exhaustive
flip sweeps in :func:`Tournament.destroying_edges` cheap at harness scale.

A *king* is a vertex that reaches every other vertex by a path of length
at most two. A *strong king* is a king that additionally wins the
two-step path count against every vertex that beats it directly.
"""

import random
from dataclasses import dataclass, field

__all__ = [
    "GraphError",
    "Digraph",
    "Tournament",
    "rotation",
    "rotation_is_automorphism",
    "random_tournament",
]


class GraphError(ValueError):
    """Invalid vertex, edge, permutation, or graph construction input."""


def _bits(mask: int):
    # yields the set bit positions of mask, ascending
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _strong_king_masks(rows, cols, n: int, v: int) -> bool:
    # full strong-king predicate straight off adjacency masks; shared by
    # the public method and the exhaustive flip sweep
    row = rows[v]
    reach = row | (1 << v)
    m = row
    while m:
        low = m & -m
        reach |= rows[low.bit_length() - 1]
        m ^= low
    if reach != (1 << n) - 1:
        return False
    m = cols[v]
    while m:
        low = m & -m
        u = low.bit_length() - 1
        if (rows[v] & cols[u]).bit_count() <= (rows[u] & cols[v]).bit_count():
            return False
        m ^= low
    return True


@dataclass(frozen=True)
class Digraph:
    """Loop-free directed graph with at most one edge per vertex pair.

    ``rows[u]`` has bit ``v`` set iff the edge u->v is present. Instances
    are immutable; mutating operations return new graphs.
    """

    n: int
    rows: tuple[int, ...]
    _cols: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("graph needs at least one vertex")
        if len(self.rows) != self.n:
            raise GraphError("expected %d adjacency rows, got %d" % (self.n, len(self.rows)))
        full = (1 << self.n) - 1
        cols = [0] * self.n
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError("edge target out of range in row %d" % u)
            if (row >> u) & 1:
                raise GraphError("self-loop at vertex %d" % u)
            for v in _bits(row):
                cols[v] |= 1 << u
        for u in range(self.n):
            if self.rows[u] & cols[u]:
                raise GraphError("antiparallel edge pair at vertex %d" % u)
        object.__setattr__(self, "_cols", tuple(cols))

    @classmethod
    def from_edges(cls, n: int, edges) -> "Digraph":
        """Build a graph from (u, v) pairs; rejects duplicates and loops."""
        if n < 1:
            raise GraphError("graph needs at least one vertex")
        rows = [0] * n
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError("edge (%r, %r) out of range for n=%d" % (u, v, n))
            if u == v:
                raise GraphError("self-loop at vertex %d" % u)
            if (u, v) in seen:
                raise GraphError("duplicate edge (%d, %d)" % (u, v))
            seen.add((u, v))
            rows[u] |= 1 << v
        return cls(n, tuple(rows))

    def _check_vertex(self, v: int):
        if not 0 <= v < self.n:
            raise GraphError("vertex %r out of range for n=%d" % (v, self.n))

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self.rows[u] >> v) & 1)

    def out_neighbors(self, v: int) -> set[int]:
        self._check_vertex(v)
        return set(_bits(self.rows[v]))

    def in_neighbors(self, v: int) -> set[int]:
        self._check_vertex(v)
        return set(_bits(self._cols[v]))

    def out_degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.rows[v].bit_count()

    def in_degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._cols[v].bit_count()

    def count_two_paths(self, u: int, v: int) -> int:
        """Number of distinct two-step paths u -> w -> v (requires u != v)."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise GraphError("two-path count needs distinct endpoints")
        return (self.rows[u] & self._cols[v]).bit_count()

    def is_king(self, v: int) -> bool:
        """True iff v reaches every vertex by a path of length <= 2."""
        self._check_vertex(v)
        row = self.rows[v]
        reach = row | (1 << v)
        m = row
        while m:
            low = m & -m
            reach |= self.rows[low.bit_length() - 1]
            m ^= low
        return reach == (1 << self.n) - 1

    def kings(self) -> set[int]:
        return {v for v in range(self.n) if self.is_king(v)}

    def has_king(self) -> bool:
        return any(self.is_king(v) for v in range(self.n))

    def edges(self):
        """Yield edges (u, v) in ascending lexicographic order."""
        for u in range(self.n):
            for v in _bits(self.rows[u]):
                yield (u, v)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows)

    def relabel(self, perm) -> "Digraph":
        """Rename vertex v to perm[v]; perm must be a permutation of 0..n-1."""
        perm = tuple(perm)
        if len(perm) != self.n or sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling is not a permutation of 0..%d" % (self.n - 1))
        rows = [0] * self.n
        for u in range(self.n):
            acc = 0
            for v in _bits(self.rows[u]):
                acc |= 1 << perm[v]
            rows[perm[u]] = acc
        return type(self)(self.n, tuple(rows))


@dataclass(frozen=True)
class Tournament(Digraph):
    """Digraph with exactly one directed edge between every vertex pair."""

    def __post_init__(self):
        super().__post_init__()
        full = (1 << self.n) - 1
        for u in range(self.n):
            if self.rows[u] | self._cols[u] != full ^ (1 << u):
                raise GraphError("vertex %d is missing edges; not a tournament" % u)

    def is_source(self, v: int) -> bool:
        """True iff v beats every other vertex directly."""
        return self.out_degree(v) == self.n - 1

    def is_strong_king(self, v: int) -> bool:
        """King that wins the two-path count against each of its dominators."""
        self._check_vertex(v)
        return _strong_king_masks(self.rows, self._cols, self.n, v)

    def strong_kings(self) -> set[int]:
        return {v for v in range(self.n) if self.is_strong_king(v)}

    def is_balanced(self) -> bool:
        """True iff every vertex is a king."""
        return all(self.is_king(v) for v in range(self.n))

    def is_dominating_set(self, vertices) -> bool:
        """True iff every vertex is in the set or beaten by a member."""
        mask = 0
        for v in vertices:
            self._check_vertex(v)
            mask |= (1 << v) | self.rows[v]
        return mask == (1 << self.n) - 1

    def dominating_pairs(self) -> set[tuple[int, int]]:
        """All two-element dominating sets, as (u, v) pairs with u < v."""
        full = (1 << self.n) - 1
        out = set()
        for u in range(self.n):
            mu = self.rows[u] | (1 << u)
            for v in range(u + 1, self.n):
                if mu | self.rows[v] | (1 << v) == full:
                    out.add((u, v))
        return out

    def max_out_degree_vertex(self) -> int:
        """Vertex of maximum out-degree; ties go to the smallest id."""
        best, best_deg = 0, self.rows[0].bit_count()
        for v in range(1, self.n):
            d = self.rows[v].bit_count()
            if d > best_deg:
                best, best_deg = v, d
        return best

    def flip_edge(self, pair) -> "Tournament":
        """Reverse the edge joining the given pair of distinct vertices."""
        a, b = pair
        self._check_vertex(a)
        self._check_vertex(b)
        if a == b:
            raise GraphError("cannot flip a vertex against itself")
        if (self.rows[a] >> b) & 1:
            src, dst = a, b
        else:
            src, dst = b, a
        rows = list(self.rows)
        rows[src] &= ~(1 << dst)
        rows[dst] |= 1 << src
        return Tournament(self.n, tuple(rows))

    def destroying_edges(self, v: int) -> frozenset[tuple[int, int]]:
        """Pairs whose single flip leaves v no longer a strong king.

        Found by exhaustively flipping each pair and re-testing the full
        predicate. Returns the empty set when v is not currently a
        strong king.
        """
        self._check_vertex(v)
        if not self.is_strong_king(v):
            return frozenset()
        n = self.n
        rows = list(self.rows)
        cols = list(self._cols)
        out = []
        for a in range(n):
            for b in range(a + 1, n):
                if (rows[a] >> b) & 1:
                    src, dst = a, b
                else:
                    src, dst = b, a
                # flip in place, re-test the full predicate, flip back
                rows[src] ^= 1 << dst
                rows[dst] |= 1 << src
                cols[dst] ^= 1 << src
                cols[src] |= 1 << dst
                if not _strong_king_masks(rows, cols, n, v):
                    out.append((a, b))
                rows[dst] ^= 1 << src
                rows[src] |= 1 << dst
                cols[src] ^= 1 << dst
                cols[dst] |= 1 << src
        return frozenset(out)


def rotation(n: int, i: int) -> tuple[int, ...]:
    """The permutation v -> (v + i) mod n."""
    if n < 1:
        raise GraphError("rotation needs n >= 1")
    return tuple((v + i) % n for v in range(n))


def rotation_is_automorphism(graph: Digraph, i: int) -> bool:
    """True iff relabeling by rotation i reproduces the same graph."""
    return graph.relabel(rotation(graph.n, i)) == graph


def random_tournament(n: int, seed: int) -> Tournament:
    """Uniformly random tournament; same (n, seed) gives the same graph.

    Each pair's orientation is one pseudorandom bit from a generator
    seeded with ``seed``, consumed in ascending pair order.
    """
    if n < 1:
        raise GraphError("tournament needs at least one vertex")
    rng = random.Random(seed)
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.getrandbits(1):
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
    return Tournament(n, tuple(rows))
