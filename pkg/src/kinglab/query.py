"""Edge-query procedures, their run loop, and adversarial leaf audits.

A procedure learns a hidden graph one edge variable at a time and must
eventually commit to an answer. Digraph inputs expose one boolean
variable per ordered pair (diagonal pairs are legal queries, always
answer false, and are never charged against the budget); tournament
inputs expose one variable per unordered pair, true iff the edge runs
from the smaller to the larger endpoint.

The leaf audits run a procedure against a fixed base graph and lower
bound its error mass under the matching hard input distribution: every
input that agrees with the base graph on all queried variables follows
the same computation path, so one observed answer is wrong for a
computable fraction of the distribution.
"""

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .constructions import kingless_digraph, parity_tournament
from .graphs import Digraph, GraphError, Tournament

__all__ = [
    "EXIST_KING",
    "STRONG_KING",
    "QueryKind",
    "Query",
    "Answer",
    "RunOutcome",
    "ProcedureError",
    "Procedure",
    "FullScanExistKing",
    "FullScanStrongKing",
    "ConstantAnswer",
    "ConstantVertex",
    "RandomProbe",
    "variable_count",
    "run_procedure",
    "leaf_audit_exist_king",
    "leaf_audit_strong_king",
]

EXIST_KING = "exist-king"
STRONG_KING = "strong-king"


class QueryKind(Enum):
    """Which edge variables a procedure reads."""

    ORDERED = "ordered"  # one variable per ordered pair of a digraph
    DIRECTION = "direction"  # one variable per unordered pair of a tournament


def variable_count(kind: QueryKind, n: int) -> int:
    """Total number of edge variables for an n-vertex input."""
    if kind is QueryKind.ORDERED:
        return n * n
    return n * (n - 1) // 2


class ProcedureError(Exception):
    """A procedure misbehaved: malformed query, bad answer, or no progress."""


@dataclass(frozen=True)
class Query:
    """Request for one edge variable.

    Ordered kind: is the edge u -> v present? Direction kind: needs
    u < v, true means the edge runs u -> v.
    """

    u: int
    v: int


@dataclass(frozen=True)
class Answer:
    """Final output: a bool for exist-king, a vertex id for strong-king."""

    value: "bool | int"


@dataclass(frozen=True)
class RunOutcome:
    """Result of driving a procedure against one graph.

    ``query_count`` is the number of distinct variables read, diagonal
    variables included. ``answer`` is None iff the budget ran out first.
    """

    answer: "bool | int | None"
    budget_exceeded: bool
    query_count: int
    transcript: tuple


class Procedure:
    """Deterministic decision procedure.

    Subclasses set ``task`` and ``kind`` and implement :meth:`step`,
    which maps the transcript so far to either the next :class:`Query`
    or a final :class:`Answer`. Identical transcripts must produce
    identical actions; any randomness must come from an explicit seed
    fixed at construction time.
    """

    task: str
    kind: QueryKind

    def step(self, n: int, transcript: tuple):
        raise NotImplementedError


def _check_answer(task: str, n: int, value):
    if task == EXIST_KING:
        if not isinstance(value, bool):
            raise ProcedureError("exist-king answer must be a bool, got %r" % (value,))
    else:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ProcedureError("strong-king answer must be a vertex id, got %r" % (value,))
        if not 0 <= value < n:
            raise ProcedureError("answer vertex %d out of range for n=%d" % (value, n))


def run_procedure(procedure: Procedure, graph: Digraph, budget: "int | None" = None) -> RunOutcome:
    """Drive a procedure against a concrete graph, enforcing the budget.

    Re-reading an already-answered variable is legal and free, and
    diagonal reads in ordered mode are free; only the first read of
    each off-diagonal variable is charged. When the procedure asks for
    a charged query beyond the budget, the run stops with
    ``budget_exceeded`` instead of an answer.
    """
    kind = procedure.kind
    n = graph.n
    if kind is QueryKind.DIRECTION and not isinstance(graph, Tournament):
        raise GraphError("direction queries need a tournament input")
    if budget is not None and budget < 0:
        raise ValueError("budget must be None or >= 0")
    seen: dict = {}
    charged = 0
    transcript: list = []
    # generous cap so a procedure that stops making progress surfaces as a fault
    limit = 4 * variable_count(kind, n) + 16
    for _ in range(limit):
        action = procedure.step(n, tuple(transcript))
        if isinstance(action, Answer):
            _check_answer(procedure.task, n, action.value)
            return RunOutcome(action.value, False, len(seen), tuple(transcript))
        if not isinstance(action, Query):
            raise ProcedureError("step returned %r, expected Query or Answer" % (action,))
        u, v = action.u, action.v
        if not (isinstance(u, int) and isinstance(v, int) and 0 <= u < n and 0 <= v < n):
            raise ProcedureError("query (%r, %r) out of range for n=%d" % (u, v, n))
        if kind is QueryKind.DIRECTION and u >= v:
            raise ProcedureError("direction query needs u < v, got (%d, %d)" % (u, v))
        key = (u, v)
        if key in seen:
            transcript.append((action, seen[key]))
            continue
        if kind is QueryKind.ORDERED and u == v:
            seen[key] = False
            transcript.append((action, False))
            continue
        if budget is not None and charged == budget:
            return RunOutcome(None, True, len(seen), tuple(transcript))
        result = graph.has_edge(u, v)
        seen[key] = result
        charged += 1
        transcript.append((action, result))
    raise ProcedureError("procedure took %d steps without answering" % limit)


# ---------------------------------------------------------------------------
# built-in procedures


class FullScanExistKing(Procedure):
    """Reads every ordered pair, rebuilds the digraph, answers exactly."""

    task = EXIST_KING
    kind = QueryKind.ORDERED

    def step(self, n, transcript):
        k = len(transcript)
        if k < n * n:
            return Query(k // n, k % n)
        rows = [0] * n
        for q, ans in transcript:
            if ans:
                rows[q.u] |= 1 << q.v
        return Answer(Digraph(n, tuple(rows)).has_king())


class FullScanStrongKing(Procedure):
    """Reads every pair, rebuilds the tournament, outputs a strong king.

    The output is the max out-degree vertex, which is always a strong
    king.
    """

    task = STRONG_KING
    kind = QueryKind.DIRECTION

    def step(self, n, transcript):
        k = len(transcript)
        if k < n * (n - 1) // 2:
            u, rem = 0, k
            while rem >= n - 1 - u:
                rem -= n - 1 - u
                u += 1
            return Query(u, u + 1 + rem)
        rows = [0] * n
        for q, ans in transcript:
            if ans:
                rows[q.u] |= 1 << q.v
            else:
                rows[q.v] |= 1 << q.u
        return Answer(Tournament(n, tuple(rows)).max_out_degree_vertex())


class ConstantAnswer(Procedure):
    """Answers a fixed bool without reading anything."""

    task = EXIST_KING
    kind = QueryKind.ORDERED

    def __init__(self, value: bool):
        self.value = bool(value)

    def step(self, n, transcript):
        return Answer(self.value)


class ConstantVertex(Procedure):
    """Outputs a fixed vertex without reading anything."""

    task = STRONG_KING
    kind = QueryKind.DIRECTION

    def __init__(self, vertex: int):
        self.vertex = vertex

    def step(self, n, transcript):
        return Answer(self.vertex)


class RandomProbe(Procedure):
    """Reads a seeded random sample of variables, then answers by a fixed rule.

    For exist-king the rule is pessimistic: answer false. For
    strong-king the rule outputs the vertex with the most observed wins
    (ties to the smallest id). The probe plan depends only on
    (task, probes, seed, n), so the procedure is a fixed decision tree.
    """

    def __init__(self, task: str, probes: int, seed: int = 0):
        if task not in (EXIST_KING, STRONG_KING):
            raise ValueError("unknown task %r" % (task,))
        if probes < 0:
            raise ValueError("probe count must be >= 0")
        self.task = task
        self.kind = QueryKind.ORDERED if task == EXIST_KING else QueryKind.DIRECTION
        self.probes = probes
        self.seed = seed
        self._plans: dict = {}

    def _plan(self, n):
        if n not in self._plans:
            if self.kind is QueryKind.ORDERED:
                universe = [(u, v) for u in range(n) for v in range(n) if u != v]
            else:
                universe = [(u, v) for u in range(n) for v in range(u + 1, n)]
            rng = random.Random("probe:%s:%d:%d:%d" % (self.task, self.probes, self.seed, n))
            self._plans[n] = rng.sample(universe, min(self.probes, len(universe)))
        return self._plans[n]

    def step(self, n, transcript):
        plan = self._plan(n)
        k = len(transcript)
        if k < len(plan):
            return Query(*plan[k])
        if self.task == EXIST_KING:
            return Answer(False)
        wins = [0] * n
        for q, ans in transcript:
            if ans:
                wins[q.u] += 1
            else:
                wins[q.v] += 1
        return Answer(max(range(n), key=lambda v: (wins[v], -v)))


# ---------------------------------------------------------------------------
# leaf audits


def _audit_exist_king(procedure: Procedure, n: int, budget: int):
    """Run against the kingless base and bound the missed error mass.

    Returns (bound, relevant query count, outcome). The relevant
    queries are the ordered cross pairs (i, n + j) with j < n - 1: each
    perturbed input differs from the base in exactly one of them.
    """
    if procedure.task != EXIST_KING:
        raise ValueError("procedure does not decide king existence")
    if budget is None or budget < 0:
        raise ValueError("audit needs a finite budget >= 0")
    base = kingless_digraph(n)
    outcome = run_procedure(procedure, base, budget)
    relevant = set()
    for q, _ans in outcome.transcript:
        if q.u < n and n <= q.v < 2 * n - 1:
            relevant.add((q.u, q.v))
    total = n * (n - 1)
    missed = Fraction(total - len(relevant), 2 * total)
    if outcome.budget_exceeded:
        # no answer was committed; take the worse of both answer cases
        bound = max(Fraction(1, 2), missed)
    elif outcome.answer:
        bound = Fraction(1, 2)  # wrong on the base graph itself
    else:
        bound = missed
    return bound, len(relevant), outcome


def _audit_strong_king(procedure: Procedure, n: int, budget: int):
    """Run against the parity base and count unseen destroying pairs."""
    if procedure.task != STRONG_KING:
        raise ValueError("procedure does not output a strong king")
    if budget is None or budget < 0:
        raise ValueError("audit needs a finite budget >= 0")
    if n < 3:
        raise GraphError("strong-king audit needs odd n >= 3")
    base = parity_tournament(n)
    outcome = run_procedure(procedure, base, budget)
    queried = {(q.u, q.v) for q, _ans in outcome.transcript}
    total = n * (n - 1) // 2
    if outcome.budget_exceeded:
        # no output vertex; every choice would leave this much error mass
        bound = max(
            Fraction(len(base.destroying_edges(v) - queried), total) for v in range(n)
        )
    else:
        destroyed = base.destroying_edges(outcome.answer)
        bound = Fraction(len(destroyed - queried), total)
    return bound, len(queried), outcome


def leaf_audit_exist_king(procedure: Procedure, n: int, budget: int) -> Fraction:
    """Exact error lower bound for a budgeted exist-king procedure.

    The hidden input is drawn from the matching hard distribution: the
    kingless digraph with mass 1/2 and each single-edge perturbation
    with mass 1/(2n(n-1)). Answering true is wrong on the base graph;
    answering false is wrong on every perturbation whose added edge was
    never read. A budget overrun scores as the worse of the two cases.
    """
    return _audit_exist_king(procedure, n, budget)[0]


def leaf_audit_strong_king(procedure: Procedure, n: int, budget: int) -> Fraction:
    """Exact error lower bound for a budgeted strong-king procedure.

    The hidden input is uniform over all single-pair flips of the
    parity tournament. Whatever vertex the procedure outputs, every
    unqueried flip that destroys that vertex's strong-kingship yields
    the same transcript and hence the same wrong output. A budget
    overrun scores as the worst output choice.
    """
    return _audit_strong_king(procedure, n, budget)[0]
