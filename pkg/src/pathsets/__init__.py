"""Path sets: languages of one-sided infinite walks in pointed labeled graphs.

Build a :class:`Presentation`, normalize it with :func:`minimize`, then
shift, decimate, interleave and factor the resulting :class:`PathSet`.
"""

from .core import (
    Alphabet,
    DuplicateEdgeTriple,
    DuplicateName,
    EmptyAlphabet,
    EmptyPathSet,
    MissingInitial,
    PathSet,
    Presentation,
    PresentationError,
    UnknownSymbol,
    UnknownVertex,
    determinize,
    equals,
    initial_blocks,
    intersection,
    minimize,
    prune,
    restrict_reachable,
    union,
    validate,
    word_path_set,
)
from .decimation import (
    DecimationIndex,
    LeveledProfile,
    RelationPowerTable,
    certified_decimations,
    decimate,
    full_decimation_set,
    kernel,
    position_alphabets,
    relation_powers,
    shift,
    shift_presentation,
    weak_shift_orbit,
)
from .factorization import (
    INFINITE,
    FactorizationTree,
    MissingConfiguration,
    complete_factorization,
    factor_set,
    factorization_exponent,
    is_leveled,
    leveled_envelope,
    leveled_profile,
    missing_configuration,
    self_loop_criterion,
    tree_reassembles,
)
from .interleaving import (
    NotFactorizable,
    interleave,
    interleave_product,
    interleaving_closure,
    interleaving_factors,
    is_n_factorizable,
)

__version__ = "0.1.0"
