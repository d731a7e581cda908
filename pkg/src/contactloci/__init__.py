"""Contact loci of hyperplane multi-arrangements, their Betti numbers and
their finite-field point counts."""

from .arith import IntPoly, LaurentPoly, binom
from .arrangement import (
    Flat,
    Hyperplane,
    MultiArrangement,
    centralize,
    completion,
    make,
    product,
    rank,
    restrict,
    subset_flat,
)
from .contact import (
    ChainDescriptor,
    Component,
    NuEncoding,
    build_component,
    contact_betti,
    decomposition,
    enumerate_T,
    nu_decoding,
    nu_encoding,
    restricted_decomposition,
)
from .errors import ArrangementError, BadReduction, BudgetExceeded, ContactLociError, InvalidDescriptor
from .generic import (
    betti_complement_generic_central,
    betti_generic_central_contact,
    betti_generic_central_restricted,
    betti_generic_contact,
    milnor_betti_generic_central,
)
from .jets import JetPoint, count_contact, count_restricted, formal_derivative_eval, good_reduction_check
from .lattice import CombinatorialType, IntersectionPoset, build_poset, char_poly, combinatorial_type, complement_betti, mobius, os_presentation
from .zeta import LaurentSeriesTruncation, naive_zeta, restricted_point_count, zeta_point_count

__version__ = "0.1.0"

__all__ = [
    "IntPoly",
    "LaurentPoly",
    "binom",
    "Flat",
    "Hyperplane",
    "MultiArrangement",
    "centralize",
    "completion",
    "make",
    "product",
    "rank",
    "restrict",
    "subset_flat",
    "ChainDescriptor",
    "Component",
    "NuEncoding",
    "build_component",
    "contact_betti",
    "decomposition",
    "enumerate_T",
    "nu_decoding",
    "nu_encoding",
    "restricted_decomposition",
    "ArrangementError",
    "BadReduction",
    "BudgetExceeded",
    "ContactLociError",
    "InvalidDescriptor",
    "betti_complement_generic_central",
    "betti_generic_central_contact",
    "betti_generic_central_restricted",
    "betti_generic_contact",
    "milnor_betti_generic_central",
    "JetPoint",
    "count_contact",
    "count_restricted",
    "formal_derivative_eval",
    "good_reduction_check",
    "CombinatorialType",
    "IntersectionPoset",
    "build_poset",
    "char_poly",
    "combinatorial_type",
    "complement_betti",
    "mobius",
    "os_presentation",
    "LaurentSeriesTruncation",
    "naive_zeta",
    "restricted_point_count",
    "zeta_point_count",
]
