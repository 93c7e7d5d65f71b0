"""Homology and cohomology rings of symmetric products of 2-complexes."""

from .cohomring import (CohomologyRing, HClass, RingPresentation, clifford_bound, cohomology_basis,
                        cohomology_ring, cup, macdonald_verify, nonorientable_verify, real_clifford_quotient,
                        ring_presentation)
from .diagonal import InexactDivision, coproduct
from .exactlinalg import GF, QQ, ZZ, Coefficients, SparseExactMatrix, smith_normal_form
from .homology import (HomologyGroup, bigraded_homology, dold_milgram_check, dold_thom_check,
                       dold_thom_predict, homology)
from .presentation import (ComplexPresentation, PresentationError, moore_decomposition, named_complex,
                           parse_presentation)
from .spchain import SPMonomial, boundary, enumerate_basis

__version__ = "0.1.0"

__all__ = [
    "CohomologyRing", "HClass", "RingPresentation", "clifford_bound", "cohomology_basis", "cohomology_ring",
    "cup", "macdonald_verify", "nonorientable_verify", "real_clifford_quotient", "ring_presentation",
    "InexactDivision", "coproduct", "GF", "QQ", "ZZ", "Coefficients", "SparseExactMatrix", "smith_normal_form",
    "HomologyGroup", "bigraded_homology", "dold_milgram_check", "dold_thom_check", "dold_thom_predict",
    "homology", "ComplexPresentation", "PresentationError", "moore_decomposition", "named_complex",
    "parse_presentation", "SPMonomial", "boundary", "enumerate_basis",
]
