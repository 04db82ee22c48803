"""Kings and strong kings in tournaments.

Graph predicates, balanced and kingless constructions, edge-query
procedures with adversarial error audits, and a Monte-Carlo harness
that cross-checks those audits empirically.
"""

from .constructions import (
    flipped_parity_tournament,
    kingless_digraph,
    layered_tournament,
    parity_tournament,
    perturbed_kingless_digraph,
)
from .fileformat import (
    GraphFileError,
    format_graph,
    parse_graph,
    read_graph,
    write_graph,
)
from .graphs import (
    Digraph,
    GraphError,
    Tournament,
    random_tournament,
    rotation,
    rotation_is_automorphism,
)
from .harness import (
    CheckResult,
    Distribution,
    ErrorEstimate,
    VerificationReport,
    builtin_procedures,
    exist_king_hard_distribution,
    get_procedure,
    monte_carlo_error,
    strong_king_hard_distribution,
    subseed,
    verify_properties,
)
from .query import (
    EXIST_KING,
    STRONG_KING,
    Answer,
    ConstantAnswer,
    ConstantVertex,
    FullScanExistKing,
    FullScanStrongKing,
    Procedure,
    ProcedureError,
    Query,
    QueryKind,
    RandomProbe,
    RunOutcome,
    leaf_audit_exist_king,
    leaf_audit_strong_king,
    run_procedure,
    variable_count,
)

__version__ = "0.1.0"
