"""Upper-bound derivations and desk-scale coloring searches for Ramsey
numbers of C4 versus complete, star and book graphs."""

from .bounds import (
    BoundQuery,
    book_bound,
    isqrt_ceil,
    isqrt_floor,
    lemma2_bound,
    lemma_p3_bound,
    parsons_bound,
    stars_bound,
    theorem_mt_bound,
)
from .derive import CannotDeriveError, DerivationTree, derive, replay
from .graphs import (
    EdgeColoring,
    SimpleGraph,
    coloring_from_text,
    coloring_to_text,
    contains_target,
    degree,
    delete_vertex,
    find_target_copy,
    graph6_decode,
    graph6_encode,
    is_good_coloring,
    pair_index,
)
from .registry import RamseyFact, Registry, load_registry, seed_registry
from .search import (
    SearchBudget,
    SearchOutcome,
    computed_ramsey,
    merge_colors,
    partition_check,
    ramsey_by_search,
    search_coloring,
)
from .targets import (
    CYCLE4,
    PATH3,
    TargetGraph,
    TargetList,
    book,
    clique,
    delete_options,
    empty_graph,
    parse_target,
    parse_target_sequence,
    parse_targets,
    render_target,
    star,
    with_isolated,
)
from .witness import BadWitnessError, extend_with_disjoint_clique, verify_lower_bound

__version__ = "0.1.0"
