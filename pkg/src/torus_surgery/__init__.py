"""Exact homology of torus surgeries on 4-manifolds.

The building blocks, bottom up:

* :mod:`.abelian` - Smith normal form, abelian groups, lattices
* :mod:`.boundary` - the boundary 3-torus, framings, the lambda invariant
* :mod:`.surgery` - complements, surgered H_1, Betti bookkeeping
* :mod:`.kodaira` - Kodaira dimension and consistency checks
* :mod:`.catalog` - built-in worked instances
* :mod:`.cli` - the ``torus-surgery`` command
"""

from .abelian import (
    FgAbGroup,
    Lattice,
    group_from_presentation,
    lattice_membership,
    quotient_by_element,
    saturate,
    smith_normal_form,
)
from .boundary import (
    Framing,
    cap_pair,
    lambda_invariant,
    longitudinal_class,
    standard_framing,
    validate_framing,
)
from .kodaira import (
    HomologyFingerprint,
    Kappa,
    KodairaProfile,
    almost_toric_lookup,
    check_surgery_consistency,
    classify_kappa,
    cy_table_lookup,
    essentiality_class,
)
from .surgery import (
    AmbientData,
    ComplementPresentation,
    LClass,
    SurgerySpec,
    betti_profile_after,
    derive_b1_of_X,
    induced_complement,
    intersection_parity_after,
    is_rational_preferred,
    is_topological_preferred,
    ker_i1_integral,
    ker_i1_rational,
    ker_i2_rational,
    meridian_after,
    reverse_spec,
    surgered_h1,
)

__all__ = [
    "FgAbGroup",
    "Lattice",
    "group_from_presentation",
    "lattice_membership",
    "quotient_by_element",
    "saturate",
    "smith_normal_form",
    "Framing",
    "cap_pair",
    "lambda_invariant",
    "longitudinal_class",
    "standard_framing",
    "validate_framing",
    "HomologyFingerprint",
    "Kappa",
    "KodairaProfile",
    "almost_toric_lookup",
    "check_surgery_consistency",
    "classify_kappa",
    "cy_table_lookup",
    "essentiality_class",
    "AmbientData",
    "ComplementPresentation",
    "LClass",
    "SurgerySpec",
    "betti_profile_after",
    "derive_b1_of_X",
    "induced_complement",
    "intersection_parity_after",
    "is_rational_preferred",
    "is_topological_preferred",
    "ker_i1_integral",
    "ker_i1_rational",
    "ker_i2_rational",
    "meridian_after",
    "reverse_spec",
    "surgered_h1",
]

__version__ = "0.1.0"
