from .brackets import BRACKET_RELATIONS, algebra_closure_check, bracket_closure_check, random_algebra_element
from .definitions import (
    ALL_GROUPS,
    FIVE_GROUPS,
    GroupId,
    LieAlgebraId,
    algebra_element,
    binomial_dimension,
    closed_form_dimension,
    conjugation,
    is_member,
    lie_algebra_dimension,
    lie_algebra_member,
    preserves_vectors,
)
from .sampling import (
    GroupElementSample,
    Provenance,
    exact_generators,
    exponential,
    sample_exact,
    sample_exponential,
)
from .spin import (
    is_unitary,
    spin_g2_comparison,
    spin_subgroup_report,
    spin_witness,
    vee_elements,
    vee_group,
    vee_membership,
    verify_unitary_coincidence,
)
from .transport import (
    GeneratorSubstitution,
    Transport,
    TransportFamily,
    group_transport,
    transport_families,
    verify_transport,
)

__all__ = [
    "ALL_GROUPS",
    "BRACKET_RELATIONS",
    "FIVE_GROUPS",
    "GeneratorSubstitution",
    "GroupElementSample",
    "GroupId",
    "LieAlgebraId",
    "Provenance",
    "Transport",
    "TransportFamily",
    "algebra_closure_check",
    "algebra_element",
    "binomial_dimension",
    "bracket_closure_check",
    "closed_form_dimension",
    "conjugation",
    "exact_generators",
    "exponential",
    "group_transport",
    "is_member",
    "is_unitary",
    "lie_algebra_dimension",
    "lie_algebra_member",
    "preserves_vectors",
    "random_algebra_element",
    "sample_exact",
    "sample_exponential",
    "spin_g2_comparison",
    "spin_subgroup_report",
    "spin_witness",
    "transport_families",
    "vee_elements",
    "vee_group",
    "vee_membership",
    "verify_transport",
    "verify_unitary_coincidence",
]
