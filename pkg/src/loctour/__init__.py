"""Local tournament orientation completion toolkit."""

from .catalog import (
    CatalogEntry,
    ObstructionCertificate,
    catalog_from_json,
    catalog_to_json,
    certify_obstruction,
    containment_collisions,
    enumerate_catalog,
    extract_obstruction,
    match_catalog,
)
from .completion import (
    Completed,
    CompletionResult,
    LocalTournamentViolation,
    NotOrientable,
    Opposing,
    OpposingWitness,
    complete,
    is_lt_orientable,
    verify_local_tournament,
)
from .families import family_names, family_params_upto, generate_family
from .gamma import (
    GammaPartition,
    gamma_partition,
    gamma_sequence,
    gamma_step,
    is_balanced_edge,
    opposing_witness,
)
from .graphs import (
    PartialGraph,
    PogFormatError,
    SimpleGraph,
    export_dot,
    parse_pog,
    serialize_pog,
)
from .interval import (
    StraightOrder,
    TuckerVerdict,
    TuckerWitness,
    arc_balancing_vertex,
    check_umbrella,
    classify_cut_vertex,
    forbidden_family,
    straight_enumeration,
    tucker_oracle,
)
from .iso import CanonicalForm, canonical_form, contains, embeddings, relabel
from .search import (
    ComparisonReport,
    EnumerationConfig,
    brute_force_completable,
    compare_with_catalog,
    connected_graphs,
    enumerate_pogs,
    minimal_obstructions,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
