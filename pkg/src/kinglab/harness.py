"""Hard input distributions, Monte-Carlo scoring, and batch verification.

The two hard distributions concentrate mass on inputs that differ in a
single edge, which is what makes low-budget procedures err often: the
audit bounds from :mod:`kinglab.query` are exact statements about these
distributions, and :func:`monte_carlo_error` measures the same quantity
empirically. :func:`verify_properties` sweeps every exact structural
claim the constructions are supposed to satisfy.
"""

import math
import random
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .constructions import (
    flipped_parity_tournament,
    kingless_digraph,
    layered_tournament,
    parity_tournament,
    perturbed_kingless_digraph,
)
from .graphs import Tournament, random_tournament, rotation, rotation_is_automorphism
from .query import (
    EXIST_KING,
    STRONG_KING,
    ConstantAnswer,
    ConstantVertex,
    FullScanExistKing,
    FullScanStrongKing,
    Procedure,
    RandomProbe,
    run_procedure,
)

__all__ = [
    "subseed",
    "Distribution",
    "exist_king_hard_distribution",
    "strong_king_hard_distribution",
    "ErrorEstimate",
    "monte_carlo_error",
    "CheckResult",
    "VerificationReport",
    "verify_properties",
    "get_procedure",
    "builtin_procedures",
    "PROCEDURE_FORMS",
]

_GOLDEN = 0x9E3779B97F4A7C15
_MASK64 = (1 << 64) - 1


def _mix64(z: int) -> int:
    # splitmix64 finalizer
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def subseed(seed: int, index: int) -> int:
    """Per-trial sub-seed: the (index+1)-th splitmix64 output of ``seed``."""
    return _mix64(seed + (index + 1) * _GOLDEN)


@dataclass(frozen=True)
class Distribution:
    """Finite input distribution with exact rational masses.

    ``support[i]`` carries probability ``masses[i]``; the masses must
    sum to exactly 1. ``sample_index`` is a deterministic function of
    its seed, quantizing the cumulative masses at 64-bit resolution.
    """

    task: str
    n: int
    support: tuple
    masses: tuple
    description: str = field(compare=False, default="")

    def __post_init__(self):
        if len(self.support) != len(self.masses) or not self.support:
            raise ValueError("support and masses must align and be non-empty")
        if any(m <= 0 for m in self.masses):
            raise ValueError("masses must be positive")
        if sum(self.masses) != 1:
            raise ValueError("masses must sum to exactly 1")

    @cached_property
    def _thresholds(self):
        acc = Fraction(0)
        out = []
        for m in self.masses:
            acc += m
            scaled = acc * (1 << 64)
            out.append(-(-scaled.numerator // scaled.denominator))  # ceil
        return out

    def mass(self, index: int) -> Fraction:
        """Exact probability of ``support[index]``."""
        return self.masses[index]

    def sample_index(self, seed: int) -> int:
        """Deterministically pick a support index from the seed."""
        return bisect_right(self._thresholds, _mix64(seed))

    def sample(self, seed: int):
        """Deterministically pick a support graph from the seed."""
        return self.support[self.sample_index(seed)]


def exist_king_hard_distribution(n: int) -> Distribution:
    """Kingless base with mass 1/2; each one-edge perturbation shares the rest.

    Support has 1 + n(n-1) digraphs on 2n vertices. Every perturbation
    has a king, the base does not, and the base agrees with each
    perturbation on all but one ordered pair.
    """
    support = [kingless_digraph(n)]
    masses = [Fraction(1, 2)]
    unit = Fraction(1, 2 * n * (n - 1))
    for i in range(n):
        for j in range(n - 1):
            support.append(perturbed_kingless_digraph(n, i, j))
            masses.append(unit)
    return Distribution(
        EXIST_KING,
        2 * n,
        tuple(support),
        tuple(masses),
        "kingless 2x%d gadget (mass 1/2) plus its %d one-edge perturbations" % (n, n * (n - 1)),
    )


def strong_king_hard_distribution(n: int) -> Distribution:
    """Uniform over all single-pair flips of the parity tournament."""
    if n < 3:
        raise ValueError("need odd n >= 3 so the support is non-empty")
    support = []
    for a in range(n):
        for b in range(a + 1, n):
            support.append(flipped_parity_tournament(n, (a, b)))
    unit = Fraction(1, len(support))
    return Distribution(
        STRONG_KING,
        n,
        tuple(support),
        (unit,) * len(support),
        "uniform over the %d one-pair flips of the %d-vertex parity tournament" % (len(support), n),
    )


@dataclass(frozen=True)
class ErrorEstimate:
    """Monte-Carlo error rate with its binomial standard error."""

    estimate: float
    trials: int
    standard_error: float
    seed: int


def monte_carlo_error(
    procedure: Procedure,
    distribution: Distribution,
    trials: int,
    budget: "int | None" = None,
    seed: int = 0,
) -> ErrorEstimate:
    """Fraction of sampled inputs the procedure gets wrong under the budget.

    A budget overrun counts as an error. Strong-king answers are judged
    against the sampled tournament itself. Each trial's randomness is
    ``subseed(seed, trial)``, so the estimate is reproducible and
    independent of evaluation order; runs on repeated support elements
    are memoized, which cannot change the tally because procedures are
    deterministic.
    """
    if procedure.task != distribution.task:
        raise ValueError(
            "procedure task %r does not match distribution task %r"
            % (procedure.task, distribution.task)
        )
    if trials < 1:
        raise ValueError("trials must be >= 1")
    wrong: dict = {}
    errors = 0
    for t in range(trials):
        idx = distribution.sample_index(subseed(seed, t))
        if idx not in wrong:
            graph = distribution.support[idx]
            outcome = run_procedure(procedure, graph, budget)
            if outcome.budget_exceeded:
                bad = True
            elif distribution.task == EXIST_KING:
                bad = outcome.answer != graph.has_king()
            else:
                bad = not graph.is_strong_king(outcome.answer)
            wrong[idx] = bad
        if wrong[idx]:
            errors += 1
    estimate = errors / trials
    return ErrorEstimate(
        estimate, trials, math.sqrt(estimate * (1.0 - estimate) / trials), seed
    )


# ---------------------------------------------------------------------------
# batch verification


@dataclass
class CheckResult:
    check: str
    n: int
    passed: bool
    counterexample: "str | None" = None

    def to_record(self) -> dict:
        return {
            "check": self.check,
            "n": self.n,
            "passed": self.passed,
            "counterexample": self.counterexample,
        }


@dataclass
class VerificationReport:
    n_max: int
    results: list

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list:
        return [r for r in self.results if not r.passed]

    def to_records(self) -> list:
        return [r.to_record() for r in self.results]


def _first_diff(got: set, want: set) -> str:
    extra = sorted(got - want)
    missing = sorted(want - got)
    parts = []
    if extra:
        parts.append("unexpected %s" % (extra[0],))
    if missing:
        parts.append("missing %s" % (missing[0],))
    return ", ".join(parts)


def verify_properties(n_max: int, inject_fault: bool = False) -> VerificationReport:
    """Check every exact structural claim for all odd sizes up to n_max.

    ``inject_fault`` flips one edge of the 7-vertex layered tournament
    before its dominating-pair check, to demonstrate that a broken
    input is reported with a counterexample rather than waved through.
    """
    if n_max < 5 or n_max % 2 == 0:
        raise ValueError("n_max must be odd and >= 5, got %r" % (n_max,))
    results = []

    def add(check, n, passed, counterexample=None):
        results.append(CheckResult(check, n, passed, None if passed else counterexample))

    for n in range(1, n_max + 1, 2):
        layered = layered_tournament(n)
        parity = parity_tournament(n)

        bad = [v for v in range(n) if not layered.is_king(v)]
        add("layered-balanced", n, not bad, bad and "vertex %d is not a king" % bad[0])

        bad = [v for v in range(n) if not parity.is_king(v)]
        add("parity-balanced", n, not bad, bad and "vertex %d is not a king" % bad[0])

        want = (n - 1) // 2
        bad = [v for v in range(n) if parity.out_degree(v) != want]
        add(
            "parity-regular",
            n,
            not bad,
            bad and "vertex %d has out-degree %d, expected %d" % (bad[0], parity.out_degree(bad[0]), want),
        )

        if n >= 5:
            graph = layered
            if inject_fault and n == 7:
                graph = layered.flip_edge((0, n - 1))
            got = graph.dominating_pairs()
            want_pairs = {(i, n - 1) for i in range(n - 1)}
            add(
                "layered-dominating-pairs",
                n,
                got == want_pairs,
                _first_diff(got, want_pairs),
            )

        if n >= 3:
            bad = None
            for u, v in parity.edges():
                if parity.count_two_paths(v, u) - parity.count_two_paths(u, v) != 1:
                    bad = (u, v)
                    break
            add(
                "parity-two-path-gap",
                n,
                bad is None,
                bad and "edge %s loser does not trail by exactly one two-path" % (bad,),
            )

        destroying = [parity.destroying_edges(v) for v in range(n)]
        want_size = (n * n - 1) // 4
        bad = [v for v in range(n) if len(destroying[v]) != want_size]
        add(
            "parity-destroying-count",
            n,
            not bad,
            bad and "vertex %d has %d destroying pairs, expected %d" % (bad[0], len(destroying[bad[0]]), want_size),
        )

        bad = [i for i in range(n) if not rotation_is_automorphism(parity, i)]
        add("parity-rotation-automorphism", n, not bad, bad and "rotation %d is not an automorphism" % bad[0])

        if n <= 11:
            ok = True
            detail = None
            for i in range(n):
                for v in range(n):
                    mapped = {
                        tuple(sorted(((a + i) % n, (b + i) % n))) for a, b in destroying[v]
                    }
                    if mapped != destroying[(v + i) % n]:
                        ok, detail = False, "rotation %d at vertex %d" % (i, v)
                        break
                if not ok:
                    break
            add("parity-destroying-equivariance", n, ok, detail)

        if n >= 5:
            gadget = kingless_digraph(n)
            got_kings = gadget.kings()
            add(
                "kingless-gadget",
                n,
                not got_kings,
                got_kings and "vertex %d is a king" % min(got_kings),
            )
            bad = None
            for i in range(n):
                for j in range(n - 1):
                    if not perturbed_kingless_digraph(n, i, j).is_king(i):
                        bad = (i, j)
                        break
                if bad:
                    break
            add(
                "perturbed-gadget-king",
                n,
                bad is None,
                bad and "perturbation %s does not make %d a king" % (bad, bad[0]),
            )

        pool = [layered, parity, random_tournament(n, 11), random_tournament(n, 23)]
        for label, t in zip(("layered", "parity", "random-11", "random-23"), pool):
            k = t.kings()
            if not k:
                add("king-exists", n, False, "%s tournament has no king" % label)
                break
        else:
            add("king-exists", n, True)

        bad = None
        for label, t in zip(("layered", "parity", "random-11", "random-23"), pool):
            strong = t.strong_kings()
            mdv = t.max_out_degree_vertex()
            if mdv not in strong or not strong <= t.kings():
                bad = label
                break
        add("max-degree-strong-king", n, bad is None, bad and "%s tournament" % bad)

        bad = None
        for label, t in zip(("layered", "parity", "random-11", "random-23"), pool):
            k = t.kings()
            sources = [v for v in range(n) if t.is_source(v)]
            if (len(k) == 1) != (len(sources) == 1) or (len(k) == 1 and k != set(sources)):
                bad = label
                break
        add("unique-king-iff-source", n, bad is None, bad and "%s tournament" % bad)

        bad = None
        for label, t in zip(("layered", "parity", "random-11", "random-23"), pool):
            if sum(t.out_degree(v) for v in range(n)) != n * (n - 1) // 2:
                bad = label
                break
        add("degree-sum", n, bad is None, bad and "%s tournament" % bad)

        if n <= 11:
            bad = None
            for label, t in zip(("parity", "random-11"), (parity, pool[2])):
                for u in range(n):
                    for v in range(n):
                        if u == v:
                            continue
                        naive = sum(1 for w in range(n) if t.has_edge(u, w) and t.has_edge(w, v))
                        if t.count_two_paths(u, v) != naive:
                            bad = "%s pair (%d, %d)" % (label, u, v)
                            break
                    if bad:
                        break
                if bad:
                    break
            add("two-path-count-naive", n, bad is None, bad)

        bad = None
        for a in range(n):
            for b in range(a + 1, n):
                if parity.flip_edge((a, b)).flip_edge((a, b)) != parity:
                    bad = (a, b)
                    break
            if bad:
                break
        add("flip-involution", n, bad is None, bad and "pair %s" % (bad,))

        perms = [rotation(n, 3 % n)]
        shuffled = list(range(n))
        random.Random(7).shuffle(shuffled)
        perms.append(tuple(shuffled))
        bad = None
        for perm in perms:
            inverse = [0] * n
            for src, dst in enumerate(perm):
                inverse[dst] = src
            if parity.relabel(perm).relabel(inverse) != parity:
                bad = perm
                break
        add("relabel-inverse", n, bad is None, bad and "permutation %s" % (bad,))

    return VerificationReport(n_max, results)


# ---------------------------------------------------------------------------
# procedure registry

PROCEDURE_FORMS = {
    EXIST_KING: ("full-scan", "constant-false", "constant-true", "random-probe-<k>"),
    STRONG_KING: ("full-scan", "constant-vertex-<v>", "random-probe-<k>"),
}


def get_procedure(task: str, name: str) -> Procedure:
    """Look up a built-in procedure by registry name.

    Raises KeyError for names the task does not provide. The long
    full-scan names are accepted as aliases of ``full-scan``.
    """
    if task not in (EXIST_KING, STRONG_KING):
        raise KeyError("unknown task %r" % (task,))
    if task == EXIST_KING:
        if name in ("full-scan", "full-scan-exist-king"):
            return FullScanExistKing()
        if name == "constant-false":
            return ConstantAnswer(False)
        if name == "constant-true":
            return ConstantAnswer(True)
    else:
        if name in ("full-scan", "full-scan-strong-king"):
            return FullScanStrongKing()
        if name.startswith("constant-vertex-"):
            try:
                return ConstantVertex(int(name[len("constant-vertex-"):]))
            except ValueError:
                raise KeyError("bad vertex in %r" % (name,)) from None
    if name.startswith("random-probe-"):
        try:
            return RandomProbe(task, int(name[len("random-probe-"):]))
        except ValueError:
            raise KeyError("bad probe count in %r" % (name,)) from None
    raise KeyError("no procedure %r for task %s" % (name, task))


def builtin_procedures(task: str, budget: int) -> list:
    """(name, procedure) pairs for the task, probing at the given budget."""
    probe = "random-probe-%d" % budget
    if task == EXIST_KING:
        names = ["full-scan", "constant-false", "constant-true", probe]
    elif task == STRONG_KING:
        names = ["full-scan", "constant-vertex-0", probe]
    else:
        raise KeyError("unknown task %r" % (task,))
    return [(name, get_procedure(task, name)) for name in names]
