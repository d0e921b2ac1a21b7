"""Exact integer linear algebra and finitely generated abelian groups."""

from .matrix import IntMatrix, SmithNF, kernel_basis, smith_normal_form, unimodular_completion
from .groups import (
    TRIVIAL,
    Z,
    DivisiblePower,
    FgAb,
    GroupElement,
    MixedGroup,
    canonical_group,
    cokernel,
    direct_sum,
    elementary_divisors,
    generator_lifts,
    hom_group,
    invariant_factors,
    inverse_unimodular,
    parse_group,
    project_element,
    tensor_group,
    tensor_with_cstar,
)
from .automorphisms import (
    ScaledIsoResult,
    apply_hom,
    check_isomorphism,
    find_scaled_automorphism,
    torsion_orbit,
)
