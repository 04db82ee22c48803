"""Graph families with controlled king structure.

Two balanced tournament families on odd vertex counts, a 2n-vertex
digraph with no king at all, and one-edge perturbations of both. The
perturbed variants are what the audit harness feeds to decision
procedures: they differ from the base graph in a single edge, so any
procedure that leaves that edge unread cannot tell them apart.
"""

from functools import lru_cache

from .graphs import Digraph, GraphError, Tournament

__all__ = [
    "layered_tournament",
    "parity_tournament",
    "kingless_digraph",
    "perturbed_kingless_digraph",
    "flipped_parity_tournament",
]


def _require_odd(n: int, minimum: int, what: str):
    if n < minimum or n % 2 == 0:
        raise GraphError("%s needs an odd vertex count >= %d, got %r" % (what, minimum, n))


@lru_cache(maxsize=None)
def layered_tournament(n: int) -> Tournament:
    """Balanced tournament built by repeatedly wrapping a smaller one.

    Starts from a single vertex. Each growth step adds a vertex that
    loses to the whole current block and a vertex that beats the whole
    current block, with the loser beating the winner. Every vertex of
    the result is a king.
    """
    _require_odd(n, 1, "layered tournament")
    rows = [0] * n
    m = 1
    while m < n:
        m += 2
        block = (1 << (m - 2)) - 1
        rows[m - 1] = block  # new winner beats the old block
        for v in range(m - 2):
            rows[v] |= 1 << (m - 2)  # old block beats the new loser
        rows[m - 2] = 1 << (m - 1)  # the loser beats the winner
    return Tournament(n, tuple(rows))


@lru_cache(maxsize=None)
def parity_tournament(n: int) -> Tournament:
    """Balanced tournament where i beats j (for i < j) iff i + j is odd.

    Every rotation of the vertex labels is an automorphism, every vertex
    has out-degree (n - 1) / 2, and every vertex is a strong king.
    """
    _require_odd(n, 1, "parity tournament")
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if (i + j) % 2 == 1:
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
    return Tournament(n, tuple(rows))


@lru_cache(maxsize=None)
def kingless_digraph(n: int) -> Digraph:
    """2n-vertex digraph with no king (odd n >= 5).

    Lower half 0..n-1 is a parity tournament, upper half n..2n-1 is a
    layered tournament, and the only edges between the halves go from
    each lower vertex to the last upper vertex 2n-1. Lower vertices
    cannot reach the rest of the upper half at all, and upper vertices
    need three steps to reach the lower half.
    """
    _require_odd(n, 5, "kingless digraph half-size")
    lower = parity_tournament(n)
    upper = layered_tournament(n)
    rows = [0] * (2 * n)
    top = 1 << (2 * n - 1)
    for v in range(n):
        rows[v] = lower.rows[v] | top
        rows[n + v] = upper.rows[v] << n
    return Digraph(2 * n, tuple(rows))


def perturbed_kingless_digraph(n: int, i: int, j: int) -> Digraph:
    """The kingless digraph plus the single cross edge i -> n + j.

    Requires i in 0..n-1 and j in 0..n-2; the target may not be the
    top vertex 2n-1, whose incoming cross edges already exist. Adding
    the edge makes i a king.
    """
    base = kingless_digraph(n)
    if not 0 <= i < n:
        raise GraphError("lower endpoint %r out of range for n=%d" % (i, n))
    if not 0 <= j < n - 1:
        raise GraphError("upper offset %r out of range for n=%d" % (j, n))
    rows = list(base.rows)
    rows[i] |= 1 << (n + j)
    return Digraph(2 * n, tuple(rows))


def flipped_parity_tournament(n: int, pair) -> Tournament:
    """Parity tournament with the edge joining the given pair reversed."""
    return parity_tournament(n).flip_edge(pair)
