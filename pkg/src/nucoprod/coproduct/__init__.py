"""Coproducts with values in M(A⊗A) and the checks built on them."""
from .core import (Coproduct, FlippedCoproduct, Infinite, LegExpansion, LegFamily, Line,
                   OuterLeg, TensorValuedCoproduct, finite_legs, flip)
from .canonical import (MapStatus, RegularityReport, canonical_map, map_status,
                        regularity_report)
from .coassoc import (check_coassoc_mixed, check_coassoc_pair, check_coassoc_single_T1,
                      check_coassoc_T1T2, check_coassoc_T3T4, check_homomorphism, check_involution)
from .slices import Slice, slice_delta, slice_element
from .structure import (DeltaSpan, FullnessReport, NoSolution, SolvedCounit, check_coassoc_extension,
                        check_counit, check_counit_homomorphism, check_extension_unit, check_fullness,
                        check_nondegenerate_coproduct, check_surjective, check_weak_nondegeneracy,
                        extend_to_M, solve_counit)

__all__ = [
    "Coproduct", "FlippedCoproduct", "Infinite", "LegExpansion", "LegFamily", "Line", "OuterLeg",
    "TensorValuedCoproduct", "finite_legs", "flip",
    "MapStatus", "RegularityReport", "canonical_map", "map_status", "regularity_report",
    "check_coassoc_mixed", "check_coassoc_pair", "check_coassoc_single_T1", "check_coassoc_T1T2",
    "check_coassoc_T3T4", "check_homomorphism", "check_involution",
    "Slice", "slice_delta", "slice_element",
    "DeltaSpan", "FullnessReport", "NoSolution", "SolvedCounit", "check_coassoc_extension",
    "check_counit", "check_counit_homomorphism", "check_extension_unit", "check_fullness",
    "check_nondegenerate_coproduct", "check_surjective", "check_weak_nondegeneracy",
    "extend_to_M", "solve_counit",
]
