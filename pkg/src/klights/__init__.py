"""k-lights-out on directed graphs: solving, classification, and checking.

Toggling a vertex adds 1 (mod k) to its own label and to the label of
every vertex it dominates.  The package decides which labelings are
winnable, which digraphs are always winnable, and verifies the
closed-form criteria that hold when a minimum feedback arc set induces
a directed path or star.
"""

from .digraph import (
    Digraph,
    acyclic_ordering,
    arc_induced_subgraph,
    from_arcs,
    induced_subgraph,
    is_strongly_connected,
    is_tournament,
    strong_components,
)
from .errors import CapacityError, InputError, ParseError
from .feedback import (
    ArcInducedClass,
    FeedbackArcSet,
    FeedbackInterval,
    all_minimum_fas,
    build_path_matrix,
    build_star_matrix,
    check_min_fas_gap,
    classify_arc_induced,
    feedback_arcs_of_ordering,
    feedback_intervals,
    fibonacci_mod,
    min_fas_size,
    min_fas_witness,
    predict_k_aw_path,
    predict_k_aw_star,
)
from .game import (
    Labeling,
    PlayTranscript,
    ToggleVector,
    apply_toggles,
    greedy_play,
    is_k_aw,
    is_k_aw_componentwise,
    is_winnable,
    neighborhood_matrix,
    solve_labeling,
    system_matrix,
)
from .modalg import (
    IntMatrix,
    ModMatrix,
    ModVector,
    det_int,
    is_invertible_mod,
    is_unit_mod,
    smith_normal_form,
    solve_mod,
)
from .oracle import (
    CensusRecord,
    CensusReport,
    brute_force_is_k_aw,
    brute_force_solve,
    enumerate_tournaments,
    random_digraph,
    run_theorem_census,
)

__version__ = "0.1.0"

__all__ = [
    "ArcInducedClass",
    "CapacityError",
    "CensusRecord",
    "CensusReport",
    "Digraph",
    "FeedbackArcSet",
    "FeedbackInterval",
    "InputError",
    "IntMatrix",
    "Labeling",
    "ModMatrix",
    "ModVector",
    "ParseError",
    "PlayTranscript",
    "ToggleVector",
    "acyclic_ordering",
    "all_minimum_fas",
    "apply_toggles",
    "arc_induced_subgraph",
    "brute_force_is_k_aw",
    "brute_force_solve",
    "build_path_matrix",
    "build_star_matrix",
    "check_min_fas_gap",
    "classify_arc_induced",
    "det_int",
    "enumerate_tournaments",
    "feedback_arcs_of_ordering",
    "feedback_intervals",
    "fibonacci_mod",
    "from_arcs",
    "greedy_play",
    "induced_subgraph",
    "is_invertible_mod",
    "is_k_aw",
    "is_k_aw_componentwise",
    "is_strongly_connected",
    "is_tournament",
    "is_unit_mod",
    "is_winnable",
    "min_fas_size",
    "min_fas_witness",
    "neighborhood_matrix",
    "predict_k_aw_path",
    "predict_k_aw_star",
    "random_digraph",
    "run_theorem_census",
    "smith_normal_form",
    "solve_labeling",
    "solve_mod",
    "strong_components",
    "system_matrix",
]
