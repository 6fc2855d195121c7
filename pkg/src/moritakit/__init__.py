"""moritakit: a Morita-equivalence calculus for finite groupoids.

Groupoids, actions, bundles and bibundles as explicit validated tables;
balanced tensor products, principality witnesses, bounded Morita search,
and exhaustive verification suites over a generated corpus.
"""

from .errors import (
    BoundsTooLarge,
    DomainMismatch,
    GroupoidMismatch,
    IllDefined,
    MoritakitError,
    NotAGroup,
    NotAnEquivalence,
    NotBiprincipal,
    NotPrePrincipal,
    ParseError,
    UnknownObject,
    UnknownSuite,
    UnresolvedReference,
    ValidationFailed,
    ValidationReport,
    Violation,
)
from .groupoid import (
    FiniteGroupoid,
    OrbitPartition,
    disjoint_union,
    group_as_groupoid,
    pair_groupoid,
    relation_groupoid,
    transitive_groupoid,
    unit_groupoid,
    validate_groupoid,
)
from .actions import (
    DivisionMap,
    EquivariantMap,
    GroupoidBundle,
    LeftAction,
    RightAction,
    action_orbit_space,
    division_map_violations,
    is_bundle_morphism,
    is_equivariant,
    left_translation_action,
    object_action,
    right_translation_action,
    self_bundle,
    validate_left_action,
    validate_right_action,
)
from .bibundles import (
    BalancedTensor,
    BiequivariantMap,
    Bibundle,
    PrincipalityFlags,
    associator,
    balanced_tensor,
    bibundle_division_violations,
    bibundle_principality,
    compose_bibundles,
    identity_bibundle,
    induced_left_action,
    is_biequivariant,
    is_biequivariant_iso,
    left_unitor,
    opposite_bibundle,
    right_unitor,
    validate_bibundle,
)
from .morita import (
    MoritaCertificate,
    MoritaSearchResult,
    OrbitBijection,
    TensorActionInverse,
    certificate_violations,
    decide_morita,
    fibrating_invariance_check,
    is_biprincipal,
    morita_equivalence_relation_checks,
    naturality_square_commutes,
    orbit_bijection,
    roundtrip_natural_iso,
    tensor_action_inverse,
    tensor_inverse_violations,
    transport_action,
    transport_map,
    verify_certificate,
    weak_inverse_witness,
)
from .search import (
    enumerate_bibundles,
    enumerate_left_actions,
    enumerate_right_actions,
    find_biequivariant_iso,
)
from .corpus import Corpus, CorpusItem, CorpusSpec, generate_corpus
from .storage import ObjectFile, load, save
from .suites import SUITE_NAMES, SuiteReport, run_all_suites, run_suite

__version__ = "0.1.0"
